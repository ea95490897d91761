/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_SEARCH_HH
#define RAMSEY_GUARD_SEARCH_HH 1

#include <ramsey/canonical.hh>
#include <ramsey/graph.hh>
#include <ramsey/numeric.hh>
#include <ramsey/objective.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey
{
    enum class TuranVerdict
    {
        all_turan,              ///< every minimizer is a Turán colouring
        contains_non_turan,     ///< some minimizer is not a Turán colouring
        turan_not_minimal       ///< local search beat both Turán colourings
    };

    auto verdict_name(TuranVerdict v) -> std::string;

    enum class SearchMode
    {
        exhaustive,
        local
    };

    auto mode_name(SearchMode m) -> std::string;

    struct SearchReport
    {
        int n = 0;
        SearchMode mode = SearchMode::exhaustive;
        Ratio min_value;
        std::vector<CanonicalForm> minimizers;     ///< sorted, one per isomorphism class
        TuranVerdict turan_verdict = TuranVerdict::all_turan;
        std::uint64_t graphs_examined = 0;
        TuranBaseline baseline;
        bool turan_attains_minimum = false;
    };

    /// Exhaustive search is limited to this many vertices regardless of overrides.
    inline constexpr int exhaustive_hard_cap = 8;

    struct ExhaustiveOptions
    {
        int max_n = 7;              ///< raise to 8 explicitly; 2^28 graphs
        unsigned jobs = 1;
        std::size_t chunks = 256;
    };

    /**
     * Evaluates m(H1, H2; G) on all 2^C(n,2) labelled graphs G. Minimizers are
     * deduplicated by canonical form. The verdict is all_turan iff every
     * minimizer G has G Turán with chi1 - 1 parts or complement(G) Turán with
     * chi2 - 1 parts. Throws BudgetExceeded when n > max_n (or n > 8).
     */
    auto exhaustive_minimize(const PairContext & ctx, int n, const ExhaustiveOptions & options = { }) -> SearchReport;

    /// Rewires w to be a copy of u: afterwards N(w) = N(u) \ {w}, u and w non-adjacent.
    auto clone_move(const Graph & g, int u, int w) -> Graph;

    enum class MoveSet
    {
        flips,
        clones,
        both
    };

    struct LocalSearchOptions
    {
        int restarts = 16;          ///< at least 2: the two Turán colourings always seed the search
        int max_steps = 10000;
        MoveSet move_set = MoveSet::both;
        unsigned jobs = 1;
    };

    /**
     * Steepest descent with exact comparisons. Each restart starts from the
     * red Turán graph, the blue Turán graph, or a pseudo-random graph derived
     * from (seed, restart); among equally good improving moves the first in
     * (flips before clones, then lexicographic endpoints) order wins.
     */
    auto local_search(const PairContext & ctx, int n, std::uint64_t seed, const LocalSearchOptions & options = { }) -> SearchReport;

    /// The exhaustive verdict at n.
    auto bonbon_verdict(const PairContext & ctx, int n, const ExhaustiveOptions & options = { }) -> TuranVerdict;

    /// True iff g is the red graph of a Turán colouring for this pair.
    auto is_turan_colouring(const PairContext & ctx, const Graph & g) -> bool;

    struct Partition
    {
        int r = 1;
        std::vector<int> assignment;        ///< class of each vertex, numbered by first appearance
        std::uint64_t internal_edges = 0;
    };

    inline constexpr int partition_vertex_cap = 14;

    /// A partition into at most r classes with the fewest edges inside classes.
    /// Requires 1 <= r <= v(g) <= 14.
    auto best_partition(const Graph & g, int r) -> Partition;

    /// xorshift64* seeded through splitmix64; the restart graphs are built from it.
    class Xorshift64Star
    {
        private:
            std::uint64_t _state;

        public:
            explicit Xorshift64Star(std::uint64_t seed);

            auto next() -> std::uint64_t;
    };

    /// G(n, 1/2) from the generator: pair (u, v), u < v in lexicographic order, is
    /// an edge iff the top bit of the next output is set.
    auto random_graph(int n, Xorshift64Star & rng) -> Graph;
}

#endif
