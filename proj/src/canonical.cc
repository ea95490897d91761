/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/canonical.hh>
#include <ramsey/graph6.hh>

#include <algorithm>
#include <map>
#include <optional>

using std::map;
using std::optional;
using std::string;
using std::vector;

namespace ramsey
{
    namespace
    {
        using Cells = vector<VertexSet>;

        /// Splits cells until every vertex of a cell has the same number of
        /// neighbours in every cell. New cells are ordered by those counts, so
        /// the result depends only on structure, never on vertex names.
        void refine(const Graph & g, Cells & cells)
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t c = 0 ; c < cells.size() && ! changed ; ++c) {
                    if (set_size(cells[c]) == 1)
                        continue;

                    vector<std::pair<vector<int>, int> > signatures;
                    for (VertexSet s = cells[c] ; s ; s &= s - 1) {
                        int v = std::countr_zero(s);
                        vector<int> counts(cells.size());
                        for (std::size_t d = 0 ; d < cells.size() ; ++d)
                            counts[d] = set_size(g.neighbours(v) & cells[d]);
                        signatures.emplace_back(std::move(counts), v);
                    }
                    std::sort(signatures.begin(), signatures.end());
                    if (signatures.front().first == signatures.back().first)
                        continue;

                    Cells split;
                    for (std::size_t i = 0 ; i < signatures.size() ; ++i) {
                        if (i == 0 || signatures[i].first != signatures[i - 1].first)
                            split.push_back(0);
                        split.back() |= vertex_bit(signatures[i].second);
                    }
                    cells.erase(cells.begin() + c);
                    cells.insert(cells.begin() + c, split.begin(), split.end());
                    changed = true;
                }
            }
        }

        auto twins(const Graph & g, int u, int v) -> bool
        {
            return (g.neighbours(u) & ~vertex_bit(v)) == (g.neighbours(v) & ~vertex_bit(u));
        }

        struct Searcher
        {
            const Graph & g;
            optional<string> best_code;
            vector<int> best_perm;

            void leaf(const Cells & cells)
            {
                vector<int> perm(g.order());
                for (std::size_t i = 0 ; i < cells.size() ; ++i)
                    perm[std::countr_zero(cells[i])] = static_cast<int>(i);
                auto code = write_graph6(relabel(g, perm));
                if (! best_code || code < *best_code) {
                    best_code = std::move(code);
                    best_perm = std::move(perm);
                }
            }

            void search(Cells cells)
            {
                refine(g, cells);

                std::size_t target = cells.size();
                for (std::size_t c = 0 ; c < cells.size() ; ++c)
                    if (set_size(cells[c]) > 1 && (target == cells.size() || set_size(cells[c]) < set_size(cells[target])))
                        target = c;

                if (target == cells.size()) {
                    leaf(cells);
                    return;
                }

                VertexSet explored = 0;
                for (VertexSet s = cells[target] ; s ; s &= s - 1) {
                    int v = std::countr_zero(s);
                    bool redundant = false;
                    for (VertexSet e = explored ; e && ! redundant ; e &= e - 1)
                        redundant = twins(g, std::countr_zero(e), v);
                    if (redundant)
                        continue;
                    explored |= vertex_bit(v);

                    Cells next = cells;
                    next[target] &= ~vertex_bit(v);
                    next.insert(next.begin() + target, vertex_bit(v));
                    search(std::move(next));
                }
            }
        };
    }

    auto canonical_labelling(const Graph & g) -> vector<int>
    {
        Searcher searcher{ g, std::nullopt, {} };
        searcher.search(Cells{ g.vertices() });
        return searcher.best_perm;
    }

    auto canonical_form(const Graph & g) -> CanonicalForm
    {
        return CanonicalForm{ write_graph6(canonical_graph(g)) };
    }

    auto canonical_graph(const Graph & g) -> Graph
    {
        return relabel(g, canonical_labelling(g));
    }

    auto all_graphs(int n) -> vector<Graph>
    {
        if (n < 1 || n > 10)
            throw InvalidArgument{ "all_graphs supports 1 <= n <= 10" };

        vector<Graph> current{ Graph{ 1 } };
        for (int size = 2 ; size <= n ; ++size) {
            map<string, Graph> found;
            for (auto & smaller : current)
                for (VertexSet nbrs = 0 ; nbrs < vertex_bit(size - 1) ; ++nbrs) {
                    Graph g{ size };
                    for (auto [u, v] : smaller.edges())
                        g.add_edge(u, v);
                    for (VertexSet s = nbrs ; s ; s &= s - 1)
                        g.add_edge(std::countr_zero(s), size - 1);
                    auto canon = canonical_graph(g);
                    found.try_emplace(write_graph6(canon), canon);
                }

            current.clear();
            for (auto & [_, g] : found)
                current.push_back(g);
        }
        return current;
    }

    auto all_connected_graphs(int n) -> vector<Graph>
    {
        vector<Graph> result;
        for (auto & g : all_graphs(n))
            if (component_count(g) == 1)
                result.push_back(g);
        return result;
    }
}
