/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_OBJECTIVE_HH
#define RAMSEY_GUARD_OBJECTIVE_HH 1

#include <ramsey/graph.hh>
#include <ramsey/homomorphism.hh>
#include <ramsey/numeric.hh>

#include <memory>
#include <string>

namespace ramsey
{
    /**
     * A pattern pair (H1, H2) with singleton components removed and the
     * invariants the objective needs. H1 is counted in the red graph G and H2
     * in its complement. The weights are
     *
     *     rho1 = (chi2 - 1)^(v1 - k1),   rho2 = (chi1 - 1)^(v2 - k2),
     *
     * which make both Turán colourings score 1 in the limit.
     */
    struct PairContext
    {
        Graph h1, h2;
        int v1, v2, e1, e2, k1, k2, chi1, chi2;
        BigCount rho1, rho2;
        std::shared_ptr<const PatternPlan> plan1, plan2;
    };

    /// Throws InvalidArgument if either graph has no edges.
    auto make_context(const Graph & h1, const Graph & h2) -> PairContext;

    /// The same pair with the roles of H1 and H2 exchanged.
    auto swapped(const PairContext & ctx) -> PairContext;

    /// Drops isolated vertices; the graph must have at least one edge.
    auto strip_singletons(const Graph & h) -> Graph;

    struct ObjectiveValue
    {
        Ratio value, red_term, blue_term;
    };

    /// rho1 t_inj(H1, g) + rho2 t_inj(H2, complement(g)) with falling factorial
    /// denominators. Throws SizeError when v(g) < max(v1, v2).
    auto m_objective(const PairContext & ctx, const Graph & g) -> ObjectiveValue;

    /// lambda t(H1, g) + (2 - lambda) t(H2, complement(g)) with plain homomorphism
    /// densities. Throws InvalidArgument unless 0 <= lambda <= 2.
    auto lambda_objective(const Graph & h1, const Graph & h2, const Graph & g, const Ratio & lambda) -> Ratio;

    enum class TuranSide
    {
        red,        ///< G is the Turán graph with chi1 - 1 parts
        blue,       ///< complement(G) is the Turán graph with chi2 - 1 parts
        both
    };

    auto side_name(TuranSide side) -> std::string;

    struct TuranBaseline
    {
        Ratio value;
        TuranSide side;
        Ratio red_value, blue_value;
    };

    /// The better of the two Turán colourings of K_n; ties are reported as both.
    auto turan_baseline(const PairContext & ctx, int n) -> TuranBaseline;

    /// The red graph of the red-side Turán colouring on n vertices.
    auto red_turan_graph(const PairContext & ctx, int n) -> Graph;

    /// The red graph of the blue-side Turán colouring on n vertices.
    auto blue_turan_graph(const PairContext & ctx, int n) -> Graph;

    /**
     * Integer form of m_objective for a fixed n: value = (a c1 + b c2) / d with
     * c1, c2 the injective counts of H1 in g and of H2 in complement(g). Lets
     * the search loops compare candidates with integer arithmetic only.
     */
    class ScaledObjective
    {
        private:
            const PairContext * _ctx;
            int _n;
            BigCount _a, _b, _d;
            bool _word_counts;

        public:
            ScaledObjective(const PairContext & ctx, int n);

            auto key(const Graph & g) const -> BigCount;

            auto value_of(const BigCount & key) const -> Ratio
            {
                return make_ratio(key, _d);
            }
    };
}

#endif
