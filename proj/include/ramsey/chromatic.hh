/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_CHROMATIC_HH
#define RAMSEY_GUARD_CHROMATIC_HH 1

#include <ramsey/graph.hh>
#include <ramsey/numeric.hh>

#include <utility>
#include <vector>

namespace ramsey
{
    struct ChromaticProfile
    {
        int chi = 1;
        std::vector<std::pair<int, int> > crit_edges;
        int crit = 0;
    };

    /// True iff g has a proper colouring with at most m colours (DSATUR-ordered backtracking).
    auto is_colourable(const Graph & g, int m) -> bool;

    auto chromatic_number(const Graph & g) -> int;

    /// Number of maps V(g) -> [m] with no monochromatic edge. Components are
    /// counted separately; within a component colours are introduced in order
    /// and weighted by the number of unused colours, which counts every colouring
    /// exactly once without visiting its colour permutations.
    auto count_proper_colourings(const Graph & g, int m) -> BigCount;

    /// Edges whose deletion lowers the chromatic number.
    auto critical_edges(const Graph & g) -> ChromaticProfile;

    /// Maps V(h) -> [chi(h) - 1] with exactly one monochromatic edge.
    /// Throws InvalidArgument when chi(h) <= 1.
    auto nearly_proper_count(const Graph & h) -> BigCount;

    /**
     * Upper bound on nearly_proper_count. For chi(h) = 4 this is
     * crit * 3^k * 2^(v - k - 1); otherwise it is
     * crit * (chi - 2)! * (chi - 2)^(v - chi - k + 1) * (chi - 1)^k.
     * Requires chi(h) >= 3.
     */
    auto nearly_proper_bound(const Graph & h) -> BigCount;

    /// m! (m - 1)^(n - m). Requires m >= 1 and n >= m.
    auto tomescu_bound(int m, int n) -> BigCount;
}

#endif
