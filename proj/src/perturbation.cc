/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/perturbation.hh>
#include <ramsey/chromatic.hh>
#include <ramsey/errors.hh>
#include <ramsey/homomorphism.hh>
#include <ramsey/parallel.hh>

#include <algorithm>
#include <cmath>

using std::map;
using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace ramsey
{
    namespace
    {
        constexpr int max_profile_classes = 15;     // class occupancies are packed four bits apiece

        using PackedCounts = map<pair<std::uint64_t, int>, std::uint64_t>;

        struct ProfileEnumerator
        {
            const Graph & h;
            int r;
            vector<VertexSet> classes;
            std::uint64_t occupancy = 0;
            PackedCounts counts;

            void run(int v, int mono)
            {
                if (v == h.order()) {
                    ++counts[{ occupancy, mono }];
                    return;
                }
                for (int c = 0 ; c < r ; ++c) {
                    int added = set_size(h.neighbours(v) & classes[c]);
                    classes[c] |= vertex_bit(v);
                    occupancy += std::uint64_t{ 1 } << (4 * c);
                    run(v + 1, mono + added);
                    occupancy -= std::uint64_t{ 1 } << (4 * c);
                    classes[c] &= ~vertex_bit(v);
                }
            }
        };
    }

    auto placement_profile(const Graph & h, int r, unsigned jobs) -> PlacementProfile
    {
        if (r < 1)
            throw InvalidArgument{ "profile needs at least one class" };
        if (h.order() > profile_vertex_cap)
            throw SizeError{ "profile enumeration is limited to " + to_string(profile_vertex_cap) + " vertices" };
        if (r > max_profile_classes || h.order() * std::log2(static_cast<double>(r)) > 32.0)
            throw SizeError{ "profile enumeration of " + to_string(r) + "^" + to_string(h.order()) + " maps is over budget" };

        int prefix = std::min(h.order(), 3);
        std::size_t tasks = 1;
        for (int i = 0 ; i < prefix ; ++i)
            tasks *= static_cast<std::size_t>(r);

        auto partials = run_indexed(tasks, jobs, [&] (std::size_t task) {
                ProfileEnumerator e{ h, r, vector<VertexSet>(r, 0), 0, {} };
                int mono = 0;
                for (int v = 0 ; v < prefix ; ++v, task /= static_cast<std::size_t>(r)) {
                    int c = static_cast<int>(task % static_cast<std::size_t>(r));
                    mono += set_size(h.neighbours(v) & e.classes[c]);
                    e.classes[c] |= vertex_bit(v);
                    e.occupancy += std::uint64_t{ 1 } << (4 * c);
                }
                e.run(prefix, mono);
                return std::move(e.counts);
                });

        PackedCounts merged;
        for (auto & part : partials)
            for (auto & [key, count] : part)
                merged[key] += count;

        PlacementProfile profile;
        profile.r = r;
        for (auto & [key, count] : merged) {
            vector<int> occupancy(r);
            for (int c = 0 ; c < r ; ++c)
                occupancy[c] = static_cast<int>((key.first >> (4 * c)) & 15);
            profile.counts[{ occupancy, key.second }] += count;
        }
        return profile;
    }

    auto monochromatic_profile(const Graph & h, int r, unsigned jobs) -> MonochromaticProfile
    {
        MonochromaticProfile result;
        result.r = r;
        for (auto & [key, count] : placement_profile(h, r, jobs).counts)
            result.counts[key.second] += count;
        return result;
    }

    PerturbationModel::PerturbationModel(const PairContext & ctx, int n, unsigned jobs) :
        _n(n),
        _parts(ctx.chi2 - 1),
        _e1(ctx.e1)
    {
        if (n < std::max(ctx.v1, ctx.v2))
            throw SizeError{ "perturbation needs n >= " + to_string(std::max(ctx.v1, ctx.v2)) + ", got " + to_string(n) };

        // red copies sit inside the cliques: placements with every edge monochromatic
        BigCount red_copies = 0;
        for (auto & [key, count] : placement_profile(ctx.h1, _parts, jobs).counts) {
            auto & [occupancy, mono] = key;
            if (mono != ctx.e1)
                continue;
            BigCount placements = count;
            for (int part = 0 ; part < _parts ; ++part)
                placements *= falling_factorial(turan_part_size(n, _parts, part), occupancy[part]);
            red_copies += placements;
        }
        _red_at_zero = Ratio{ ctx.rho1 } * make_ratio(red_copies, falling_factorial(n, ctx.v1));

        _blue_by_mono.assign(ctx.e2 + 1, 0);
        for (auto & [key, count] : placement_profile(ctx.h2, _parts, jobs).counts) {
            auto & [occupancy, mono] = key;
            BigCount placements = count;
            for (int part = 0 ; part < _parts ; ++part)
                placements *= falling_factorial(turan_part_size(n, _parts, part), occupancy[part]);
            _blue_by_mono[mono] += placements;
        }
        _blue_scale = make_ratio(ctx.rho2, falling_factorial(n, ctx.v2));
    }

    auto PerturbationModel::expected(const Ratio & eps) const -> ObjectiveValue
    {
        if (eps < 0 || eps > 1)
            throw InvalidArgument{ "epsilon must lie in [0, 1], got " + fraction_string(eps) };

        ObjectiveValue result;
        result.red_term = _red_at_zero * power(Ratio{ 1 } - eps, static_cast<unsigned>(_e1));

        Ratio blue = 0, eps_power = 1;
        for (const auto & coefficient : _blue_by_mono) {
            blue += Ratio{ coefficient } * eps_power;
            eps_power *= eps;
        }
        result.blue_term = _blue_scale * blue;
        result.value = result.red_term + result.blue_term;
        return result;
    }

    auto expected_objective(const PairContext & ctx, int n, const Ratio & eps) -> Ratio
    {
        if (eps < 0 || eps > 1)
            throw InvalidArgument{ "epsilon must lie in [0, 1], got " + fraction_string(eps) };
        return PerturbationModel{ ctx, n }.expected(eps).value;
    }

    namespace
    {
        void require_three_chromatic_h2(const PairContext & ctx)
        {
            if (ctx.chi2 < 3)
                throw InvalidArgument{ "the perturbation bounds need chi(H2) >= 3, got " + to_string(ctx.chi2) };
        }
    }

    auto linear_coefficient(const PairContext & ctx) -> Ratio
    {
        require_three_chromatic_h2(ctx);
        BigCount nearly_proper = nearly_proper_count(ctx.h2);
        return Ratio{ -ctx.e1 } + make_ratio(nearly_proper * power(BigCount(ctx.chi1 - 1), static_cast<unsigned>(ctx.v2 - ctx.k2)),
                power(BigCount(ctx.chi2 - 1), static_cast<unsigned>(ctx.v2)));
    }

    auto verdict_name(ImbalanceVerdict v) -> string
    {
        return v == ImbalanceVerdict::not_multiplicity_good ? "not-multiplicity-good" : "inconclusive";
    }

    auto imbalance_threshold(const PairContext & ctx) -> ImbalanceThreshold
    {
        require_three_chromatic_h2(ctx);
        int crit = critical_edges(ctx.h2).crit;
        unsigned free_vertices = static_cast<unsigned>(ctx.v2 - ctx.k2);
        BigCount scale = power(BigCount(ctx.chi1 - 1), free_vertices);

        Ratio threshold;
        if (ctx.chi2 == 4)
            threshold = make_ratio(crit * power(BigCount(2), free_vertices - 1) * scale, power(BigCount(3), free_vertices));
        else
            threshold = make_ratio(crit * factorial(ctx.chi2 - 2)
                    * power(BigCount(ctx.chi2 - 2), static_cast<unsigned>(ctx.v2 - ctx.chi2 - ctx.k2 + 1)) * scale,
                    power(BigCount(ctx.chi2 - 1), free_vertices));

        return ImbalanceThreshold{ threshold,
            Ratio{ ctx.e1 } > threshold ? ImbalanceVerdict::not_multiplicity_good : ImbalanceVerdict::inconclusive };
    }

    auto default_grid() -> vector<Ratio>
    {
        vector<Ratio> grid;
        for (int k = 0 ; k <= 10 ; ++k)
            grid.push_back(make_ratio(k, 100));
        return grid;
    }

    auto sweep(const PairContext & ctx, int n, const vector<Ratio> & grid, unsigned jobs) -> PerturbReport
    {
        for (auto & eps : grid)
            if (eps < 0 || eps > 1)
                throw InvalidArgument{ "epsilon must lie in [0, 1], got " + fraction_string(eps) };

        PerturbationModel model{ ctx, n, jobs };
        PerturbReport report;
        report.n = n;
        report.baseline = turan_baseline(ctx, n);
        for (auto & eps : grid) {
            auto value = model.expected(eps).value;
            report.points.push_back(SweepPoint{ eps, value, value < report.baseline.value });
        }

        if (ctx.chi2 >= 3) {
            report.linear_coefficient = linear_coefficient(ctx);
            auto imbalance = imbalance_threshold(ctx);
            report.threshold = imbalance.threshold;
            report.verdict = imbalance.verdict;
        }
        return report;
    }
}
