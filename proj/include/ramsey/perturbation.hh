/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_PERTURBATION_HH
#define RAMSEY_GUARD_PERTURBATION_HH 1

#include <ramsey/graph.hh>
#include <ramsey/numeric.hh>
#include <ramsey/objective.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    /// counts[b] = number of maps V(h) -> [r] with exactly b monochromatic edges.
    struct MonochromaticProfile
    {
        int r = 1;
        std::map<int, BigCount> counts;
    };

    /// The same enumeration keyed by how many vertices land in each class as well.
    struct PlacementProfile
    {
        int r = 1;
        std::map<std::pair<std::vector<int>, int>, BigCount> counts;    ///< (class occupancy, b) -> count
    };

    inline constexpr int profile_vertex_cap = 14;

    /// Enumerates all r^v(h) maps. Throws SizeError beyond 14 vertices or 2^32 maps.
    auto placement_profile(const Graph & h, int r, unsigned jobs = 1) -> PlacementProfile;

    auto monochromatic_profile(const Graph & h, int r, unsigned jobs = 1) -> MonochromaticProfile;

    /**
     * Expected objective of the random colouring whose red graph is the
     * complement of turan_graph(n, chi2 - 1) with every edge deleted
     * independently with probability eps.
     *
     * An injective copy of H1 uses e1 distinct red edges, so it survives with
     * probability (1 - eps)^e1. For H2, an injective placement with b edges
     * inside parts needs exactly those b deleted edges, so it contributes
     * eps^b; placements are grouped by class occupancy, where part i of size
     * s_i receiving c_i vertices can host them in (s_i)_(c_i) ways.
     */
    class PerturbationModel
    {
        private:
            int _n;
            int _parts;
            int _e1;
            Ratio _red_at_zero;
            std::vector<BigCount> _blue_by_mono;    // sum of placements with b monochromatic edges
            Ratio _blue_scale;

        public:
            PerturbationModel(const PairContext & ctx, int n, unsigned jobs = 1);

            auto expected(const Ratio & eps) const -> ObjectiveValue;

            auto parts() const -> int
            {
                return _parts;
            }
    };

    auto expected_objective(const PairContext & ctx, int n, const Ratio & eps) -> Ratio;

    /// -e1 + K (chi1 - 1)^(v2 - k2) / (chi2 - 1)^v2, K the nearly proper count of H2.
    /// Requires chi2 >= 3.
    auto linear_coefficient(const PairContext & ctx) -> Ratio;

    enum class ImbalanceVerdict
    {
        not_multiplicity_good,
        inconclusive
    };

    auto verdict_name(ImbalanceVerdict v) -> std::string;

    struct ImbalanceThreshold
    {
        Ratio threshold;
        ImbalanceVerdict verdict;
    };

    /// The edge count of H1 beyond which the pair cannot be multiplicity good.
    /// Requires chi2 >= 3.
    auto imbalance_threshold(const PairContext & ctx) -> ImbalanceThreshold;

    struct SweepPoint
    {
        Ratio epsilon;
        Ratio value;
        bool below_baseline = false;
    };

    struct PerturbReport
    {
        int n = 0;
        std::vector<SweepPoint> points;
        std::optional<Ratio> linear_coefficient, threshold;
        ImbalanceVerdict verdict = ImbalanceVerdict::inconclusive;
        TuranBaseline baseline;
    };

    /// {0, 1/100, ..., 10/100}.
    auto default_grid() -> std::vector<Ratio>;

    auto sweep(const PairContext & ctx, int n, const std::vector<Ratio> & grid, unsigned jobs = 1) -> PerturbReport;
}

#endif
