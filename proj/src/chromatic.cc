/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/chromatic.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <limits>
#include <string>

using std::to_string;
using std::vector;

namespace ramsey
{
    namespace
    {
        struct Dsatur
        {
            const Graph & g;
            int m;
            vector<int> colour;
            vector<std::uint64_t> saturation;

            auto pick() const -> int
            {
                int best = -1, best_sat = -1, best_deg = -1;
                for (int v = 0 ; v < g.order() ; ++v) {
                    if (colour[v] >= 0)
                        continue;
                    int sat = std::popcount(saturation[v]);
                    int deg = 0;
                    for (VertexSet nb = g.neighbours(v) ; nb ; nb &= nb - 1)
                        if (colour[std::countr_zero(nb)] < 0)
                            ++deg;
                    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                        best = v;
                        best_sat = sat;
                        best_deg = deg;
                    }
                }
                return best;
            }

            auto solve(int coloured, int used) -> bool
            {
                if (coloured == g.order())
                    return true;

                int v = pick();
                int limit = std::min(m, used + 1);
                for (int c = 0 ; c < limit ; ++c) {
                    if ((saturation[v] >> c) & 1)
                        continue;

                    colour[v] = c;
                    vector<std::uint64_t> saved;
                    saved.reserve(g.degree(v));
                    for (VertexSet nb = g.neighbours(v) ; nb ; nb &= nb - 1) {
                        int w = std::countr_zero(nb);
                        saved.push_back(saturation[w]);
                        saturation[w] |= std::uint64_t{ 1 } << c;
                    }

                    if (solve(coloured + 1, std::max(used, c + 1)))
                        return true;

                    std::size_t i = 0;
                    for (VertexSet nb = g.neighbours(v) ; nb ; nb &= nb - 1)
                        saturation[std::countr_zero(nb)] = saved[i++];
                    colour[v] = -1;
                }
                return false;
            }
        };

        /// Order in which each vertex after the first of a component has an earlier neighbour.
        auto connected_order(const Graph & g, VertexSet within) -> vector<int>
        {
            vector<int> order;
            VertexSet placed = 0;
            while (placed != within) {
                VertexSet remaining = within & ~placed;
                int best = -1, best_links = -1, best_deg = -1;
                for (VertexSet s = remaining ; s ; s &= s - 1) {
                    int v = std::countr_zero(s);
                    int links = set_size(g.neighbours(v) & placed);
                    int deg = set_size(g.neighbours(v) & within);
                    if (links > best_links || (links == best_links && deg > best_deg)) {
                        best = v;
                        best_links = links;
                        best_deg = deg;
                    }
                }
                order.push_back(best);
                placed |= vertex_bit(best);
            }
            return order;
        }

        /// Counts colourings of the vertices in `order` with exactly `target_mono`
        /// monochromatic edges (0 for proper colourings). Colours are symmetric,
        /// so a fresh colour is tried once and weighted by the unused colour count.
        template <typename Count_>
        struct SymmetricColourCounter
        {
            const Graph & g;
            const vector<int> & order;
            int colours;
            int target_mono;
            vector<int> colour;
            vector<VertexSet> earlier_nbrs;

            SymmetricColourCounter(const Graph & graph, const vector<int> & o, int m, int mono) :
                g(graph), order(o), colours(m), target_mono(mono), colour(graph.order(), -1), earlier_nbrs(o.size())
            {
                VertexSet placed = 0;
                for (std::size_t i = 0 ; i < order.size() ; ++i) {
                    earlier_nbrs[i] = g.neighbours(order[i]) & placed;
                    placed |= vertex_bit(order[i]);
                }
            }

            auto count(std::size_t depth, int used, int mono) -> Count_
            {
                if (depth == order.size())
                    return mono == target_mono ? Count_{ 1 } : Count_{ 0 };

                int v = order[depth];
                vector<int> clashes(used + 1, 0);
                for (VertexSet nb = earlier_nbrs[depth] ; nb ; nb &= nb - 1)
                    ++clashes[colour[std::countr_zero(nb)]];

                Count_ total = 0;
                for (int c = 0 ; c < used ; ++c) {
                    if (mono + clashes[c] > target_mono)
                        continue;
                    colour[v] = c;
                    total += count(depth + 1, used, mono + clashes[c]);
                }
                if (used < colours) {
                    colour[v] = used;
                    Count_ rest = count(depth + 1, used + 1, mono);
                    total += rest * Count_(colours - used);
                }
                colour[v] = -1;
                return total;
            }
        };

        auto count_symmetric(const Graph & g, const vector<int> & order, int m, int mono) -> BigCount
        {
            // m^|order| bounds the count; stay in machine words when it fits
            long double estimate = 1;
            for (std::size_t i = 0 ; i < order.size() ; ++i)
                estimate *= m;
            if (estimate < static_cast<long double>(std::numeric_limits<std::uint64_t>::max()) / 4)
                return BigCount{ SymmetricColourCounter<std::uint64_t>{ g, order, m, mono }.count(0, 0, 0) };
            return SymmetricColourCounter<BigCount>{ g, order, m, mono }.count(0, 0, 0);
        }
    }

    auto is_colourable(const Graph & g, int m) -> bool
    {
        if (m <= 0)
            return false;
        if (m >= g.order())
            return true;
        Dsatur d{ g, m, vector<int>(g.order(), -1), vector<std::uint64_t>(g.order(), 0) };
        return d.solve(0, 0);
    }

    auto chromatic_number(const Graph & g) -> int
    {
        int m = 1;
        while (! is_colourable(g, m))
            ++m;
        return m;
    }

    auto count_proper_colourings(const Graph & g, int m) -> BigCount
    {
        if (m < 0)
            throw InvalidArgument{ "colour count must be non-negative" };

        BigCount result = 1;
        for (auto component : components(g)) {
            auto order = connected_order(g, component);
            result *= count_symmetric(g, order, m, 0);
            if (result == 0)
                break;
        }
        return result;
    }

    auto critical_edges(const Graph & g) -> ChromaticProfile
    {
        ChromaticProfile profile;
        profile.chi = chromatic_number(g);
        for (auto [u, v] : g.edges()) {
            Graph without = g;
            without.remove_edge(u, v);
            if (is_colourable(without, profile.chi - 1))
                profile.crit_edges.emplace_back(u, v);
        }
        profile.crit = static_cast<int>(profile.crit_edges.size());
        return profile;
    }

    auto nearly_proper_count(const Graph & h) -> BigCount
    {
        int chi = chromatic_number(h);
        if (chi <= 1)
            throw InvalidArgument{ "nearly proper colourings need chi(h) >= 2, got " + to_string(chi) };
        return count_symmetric(h, connected_order(h, h.vertices()), chi - 1, 1);
    }

    auto nearly_proper_bound(const Graph & h) -> BigCount
    {
        auto profile = critical_edges(h);
        int chi = profile.chi;
        if (chi < 3)
            throw InvalidArgument{ "the nearly proper bound needs chi(h) >= 3, got " + to_string(chi) };

        unsigned v = static_cast<unsigned>(h.order());
        unsigned k = static_cast<unsigned>(component_count(h));
        BigCount crit = profile.crit;

        if (chi == 4)
            return crit * power(BigCount(3), k) * power(BigCount(2), v - k - 1);

        // v >= chi + k - 1 always holds: the chi-chromatic component alone has chi vertices
        return crit * factorial(chi - 2) * power(BigCount(chi - 2), v - chi - k + 1) * power(BigCount(chi - 1), k);
    }

    auto tomescu_bound(int m, int n) -> BigCount
    {
        if (m < 1 || n < m)
            throw InvalidArgument{ "tomescu bound needs 1 <= m <= n, got m=" + to_string(m) + " n=" + to_string(n) };
        return factorial(m) * power(BigCount(m - 1), static_cast<unsigned>(n - m));
    }
}
