/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/graph6.hh>

#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>
#include <vector>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace ramsey
{
    namespace
    {
        auto trim(string_view s) -> string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        auto sextet(char c) -> int
        {
            int value = static_cast<unsigned char>(c) - 63;
            if (value < 0 || value > 63)
                throw Graph6Error{ Graph6ErrorKind::invalid_character, "byte " + to_string(static_cast<unsigned char>(c)) + " is outside the graph6 range 63..126" };
            return value;
        }
    }

    Graph6Error::Graph6Error(Graph6ErrorKind kind, const string & message) :
        ParseError("graph6: " + message),
        _kind(kind)
    {
    }

    auto parse_graph6(string_view text) -> Graph
    {
        text = trim(text);
        if (text.starts_with(">>graph6<<"))
            text.remove_prefix(10);

        if (text.empty())
            throw Graph6Error{ Graph6ErrorKind::malformed_header, "empty input" };
        if (text.front() == ':' || text.front() == ';' || text.front() == '&')
            throw Graph6Error{ Graph6ErrorKind::malformed_header, "sparse6 and digraph6 are not supported" };

        long n = 0;
        std::size_t pos = 0;
        if (text.front() != '~') {
            n = sextet(text[0]);
            pos = 1;
        }
        else {
            if (text.size() >= 2 && text[1] == '~')
                throw Graph6Error{ Graph6ErrorKind::too_many_vertices, "eight-byte size header implies more than 64 vertices" };
            if (text.size() < 4)
                throw Graph6Error{ Graph6ErrorKind::malformed_header, "long size header is truncated" };
            n = (long{ sextet(text[1]) } << 12) | (long{ sextet(text[2]) } << 6) | sextet(text[3]);
            pos = 4;
            if (n < 63)
                throw Graph6Error{ Graph6ErrorKind::malformed_header, "long size header used for " + to_string(n) + " vertices" };
        }

        if (n > max_vertices)
            throw Graph6Error{ Graph6ErrorKind::too_many_vertices, to_string(n) + " vertices, at most 64 supported" };
        if (n == 0)
            throw Graph6Error{ Graph6ErrorKind::malformed_header, "graphs with no vertices are not supported" };

        long bits = n * (n - 1) / 2;
        std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
        if (text.size() - pos < payload)
            throw Graph6Error{ Graph6ErrorKind::truncated_payload, "expected " + to_string(payload) + " payload bytes for " + to_string(n)
                    + " vertices, found " + to_string(text.size() - pos) };
        if (text.size() - pos > payload)
            throw Graph6Error{ Graph6ErrorKind::trailing_data, "unexpected bytes after the payload" };

        Graph g{ static_cast<int>(n) };
        long k = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++k) {
                int byte = sextet(text[pos + k / 6]);
                if ((byte >> (5 - k % 6)) & 1)
                    g.add_edge(i, j);
            }
        for (std::size_t p = pos + static_cast<std::size_t>(k / 6) ; p < text.size() ; ++p)
            sextet(text[p]);
        return g;
    }

    auto write_graph6(const Graph & g) -> string
    {
        int n = g.order();
        string result;
        if (n <= 62)
            result.push_back(static_cast<char>(63 + n));
        else {
            result.push_back('~');
            result.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
            result.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
            result.push_back(static_cast<char>(63 + (n & 63)));
        }

        int current = 0, filled = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    result.push_back(static_cast<char>(63 + current));
                    current = filled = 0;
                }
            }
        if (filled > 0)
            result.push_back(static_cast<char>(63 + (current << (6 - filled))));
        return result;
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        vector<std::pair<int, int> > edges;
        int declared = -1, largest = -1, line_number = 0;

        std::istringstream in{ string(text) };
        string line;
        while (std::getline(in, line)) {
            ++line_number;
            auto l = trim(line);
            if (l.empty())
                continue;
            if (l.front() == '#') {
                auto rest = trim(l.substr(1));
                if (rest.starts_with("n=")) {
                    auto digits = rest.substr(2);
                    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), declared);
                    if (ec != std::errc{} || ptr != digits.data() + digits.size())
                        throw ParseError{ "edge list line " + to_string(line_number) + ": bad vertex count" };
                }
                continue;
            }

            std::istringstream fields{ string(l) };
            long u, v;
            string extra;
            if (! (fields >> u >> v) || (fields >> extra))
                throw ParseError{ "edge list line " + to_string(line_number) + ": expected two vertex indices" };
            if (u < 0 || v < 0 || u >= max_vertices || v >= max_vertices)
                throw ParseError{ "edge list line " + to_string(line_number) + ": vertex index out of range 0..63" };
            if (u == v)
                throw ParseError{ "edge list line " + to_string(line_number) + ": loops are not permitted" };
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            largest = std::max(largest, static_cast<int>(std::max(u, v)));
        }

        int n = declared >= 0 ? declared : largest + 1;
        if (n < 1 || n > max_vertices || largest >= n)
            throw ParseError{ "edge list: vertex count " + to_string(n) + " is inconsistent or out of range" };

        Graph g{ n };
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }
}
