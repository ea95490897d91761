/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_HOMOMORPHISM_HH
#define RAMSEY_GUARD_HOMOMORPHISM_HH 1

#include <ramsey/graph.hh>
#include <ramsey/numeric.hh>

#include <cstdint>
#include <vector>

namespace ramsey
{
    /// Which random map an injective density is measured against.
    enum class InjectiveDenominator
    {
        falling_factorial,      ///< a uniformly random injective map: v(g) (v(g)-1) ... (v(g)-v(h)+1)
        all_functions           ///< a uniformly random map: v(g)^v(h)
    };

    /**
     * A pattern prepared for repeated counting: vertices are visited in an order
     * where each one (after the first of its component) has an already mapped
     * neighbour, so the candidates are an intersection of host rows.
     */
    class PatternPlan
    {
        private:
            int _order;
            std::vector<int> _visit;
            std::vector<VertexSet> _earlier;         // earlier positions adjacent to each position
            std::vector<VertexSet> _component_masks;
            int _isolated = 0;                      // trailing isolated vertices of the pattern

        public:
            explicit PatternPlan(const Graph & h);

            auto order() const -> int
            {
                return _order;
            }

            /// Injective homomorphisms into g whose images avoid `forbidden`.
            auto injective_count(const Graph & g, VertexSet forbidden = 0) const -> BigCount;

            /// Fast path for hot loops; the caller guarantees v(g)^v(h) < 2^63.
            auto injective_count_u64(const Graph & g) const -> std::uint64_t;

            auto homomorphism_count(const Graph & g) const -> BigCount;
    };

    auto hom_count(const Graph & h, const Graph & g) -> BigCount;

    auto inj_hom_count(const Graph & h, const Graph & g) -> BigCount;

    /// hom_count / v(g)^v(h).
    auto hom_density(const Graph & h, const Graph & g) -> Ratio;

    /// inj_hom_count over the chosen denominator. The falling factorial variant
    /// throws SizeError when v(h) > v(g).
    auto inj_density(const Graph & h, const Graph & g,
            InjectiveDenominator denominator = InjectiveDenominator::falling_factorial) -> Ratio;

    /// hom_density when `injective` is false, the falling factorial inj_density otherwise.
    auto t_density(const Graph & h, const Graph & g, bool injective) -> Ratio;

    /// Probability that a uniformly random map V(h) -> V(g) is an injective
    /// homomorphism whose image contains v.
    auto vertex_contribution(const Graph & h, const Graph & g, int v) -> Ratio;
}

#endif
