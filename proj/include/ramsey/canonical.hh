/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_CANONICAL_HH
#define RAMSEY_GUARD_CANONICAL_HH 1

#include <ramsey/graph.hh>

#include <compare>
#include <string>
#include <vector>

namespace ramsey
{
    /// Identifies an isomorphism class. The code is the graph6 string of the
    /// canonically relabelled graph, so it can be decoded with parse_graph6.
    struct CanonicalForm
    {
        std::string code;

        auto operator<=> (const CanonicalForm &) const = default;
    };

    /**
     * Canonical labelling by individualisation and refinement: vertices are
     * partitioned by degree and refined to an equitable partition, then the
     * search branches over the vertices of the first smallest non-singleton
     * cell. Among the discrete leaves, the labelling whose graph6 string is
     * lexicographically smallest wins. Branches on vertices that are twins of
     * an already explored vertex of the same cell are skipped, since the
     * transposition of two twins is an automorphism.
     *
     * Returns perm with perm[v] = canonical label of v.
     */
    auto canonical_labelling(const Graph & g) -> std::vector<int>;

    auto canonical_form(const Graph & g) -> CanonicalForm;

    auto canonical_graph(const Graph & g) -> Graph;

    /// One canonical representative of every isomorphism class on n vertices,
    /// sorted by canonical code. Built by vertex extension from n - 1.
    auto all_graphs(int n) -> std::vector<Graph>;

    auto all_connected_graphs(int n) -> std::vector<Graph>;
}

#endif
