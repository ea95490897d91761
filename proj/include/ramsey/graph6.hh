/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_GRAPH6_HH
#define RAMSEY_GUARD_GRAPH6_HH 1

#include <ramsey/errors.hh>
#include <ramsey/graph.hh>

#include <string>
#include <string_view>

namespace ramsey
{
    enum class Graph6ErrorKind
    {
        malformed_header,
        truncated_payload,
        trailing_data,
        invalid_character,
        too_many_vertices
    };

    class Graph6Error : public ParseError
    {
        private:
            Graph6ErrorKind _kind;

        public:
            Graph6Error(Graph6ErrorKind kind, const std::string & message);

            auto kind() const -> Graph6ErrorKind
            {
                return _kind;
            }
    };

    /// Decodes one graph6 string. An optional ">>graph6<<" prefix and surrounding
    /// whitespace are ignored. Both the short and the long (126-prefixed) size
    /// header are understood.
    auto parse_graph6(std::string_view text) -> Graph;

    auto write_graph6(const Graph & g) -> std::string;

    /// One "u v" pair per line, 0-indexed; blank lines and lines starting with '#'
    /// are skipped. The vertex count is one more than the largest index seen,
    /// unless a "# n=<count>" line says otherwise.
    auto parse_edge_list(std::string_view text) -> Graph;
}

#endif
