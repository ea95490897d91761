/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/canonical.hh>
#include <ramsey/chromatic.hh>
#include <ramsey/errors.hh>
#include <ramsey/homomorphism.hh>
#include <ramsey/perturbation.hh>
#include <ramsey/search.hh>

#include "oracles.hh"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace ramsey;

namespace
{
    auto pendant_triangle() -> Graph
    {
        return make_hairy({ complete_graph(3), { 0 } });
    }

    auto as_map(const MonochromaticProfile & p) -> std::map<int, std::uint64_t>
    {
        std::map<int, std::uint64_t> result;
        for (auto & [b, count] : p.counts)
            if (count != 0)
                result[b] = static_cast<std::uint64_t>(count);
        return result;
    }

    auto absolute(const Ratio & r) -> Ratio
    {
        return r < 0 ? Ratio(-r) : r;
    }
}

TEST_CASE("monochromatic profile examples")
{
    CHECK(as_map(monochromatic_profile(complete_graph(3), 2)) == std::map<int, std::uint64_t>{ { 1, 6 }, { 3, 2 } });
    CHECK(as_map(monochromatic_profile(complete_graph(2), 1)) == std::map<int, std::uint64_t>{ { 1, 1 } });

    auto c5 = as_map(monochromatic_profile(cycle_graph(5), 2));
    CHECK(c5.count(0) == 0);
    CHECK(c5[1] == 10);
    std::uint64_t total = 0;
    for (auto & [b, count] : c5)
        total += count;
    CHECK(total == 32);
    CHECK(c5 == oracle::mono_profile(cycle_graph(5), 2));
}

TEST_CASE("profiles against enumeration")
{
    for (int v = 1 ; v <= 5 ; ++v)
        for (auto & h : all_graphs(v))
            for (int r = 1 ; r <= 4 ; ++r) {
                auto profile = monochromatic_profile(h, r);
                REQUIRE(as_map(profile) == oracle::mono_profile(h, r));
                REQUIRE((profile.counts.count(0) ? profile.counts[0] : BigCount(0)) == count_proper_colourings(h, r));
                if (r >= 2 && chromatic_number(h) == r + 1)
                    REQUIRE(profile.counts[1] == nearly_proper_count(h));

                BigCount total = 0;
                for (auto & [key, count] : placement_profile(h, r).counts) {
                    int placed = 0;
                    for (int occ : key.first)
                        placed += occ;
                    REQUIRE(placed == v);
                    total += count;
                }
                REQUIRE(total == power(BigCount(r), v));
            }
}

TEST_CASE("profiles do not depend on jobs")
{
    auto h = make_hairy({ petersen_graph(), { 0, 4 } });
    auto serial = placement_profile(h, 3, 1);
    for (unsigned jobs : { 2u, 8u })
        REQUIRE(placement_profile(h, 3, jobs).counts == serial.counts);
    CHECK_THROWS_AS(placement_profile(complete_graph(15), 2), SizeError);
    CHECK_THROWS_AS(placement_profile(complete_graph(3), 0), InvalidArgument);
}

TEST_CASE("expected objective at the endpoints")
{
    for (auto & [h1, h2] : std::vector<std::pair<Graph, Graph> >{
            { complete_graph(3), complete_graph(3) },
            { pendant_triangle(), complete_graph(3) },
            { complete_graph(3), complete_graph(5) },
            { complete_graph(2), cycle_graph(5) } }) {
        auto ctx = make_context(h1, h2);
        for (int n = std::max(ctx.v1, ctx.v2) ; n <= 12 ; n += 3) {
            auto zero = expected_objective(ctx, n, 0);
            REQUIRE(zero == m_objective(ctx, complement(turan_graph(n, ctx.chi2 - 1))).value);
            PerturbationModel model{ ctx, n };
            auto one = model.expected(1);
            REQUIRE(one.red_term == 0);
            REQUIRE(one.blue_term == Ratio{ ctx.rho2 } * t_density(ctx.h2, complete_graph(n), true));
            REQUIRE(one.value == m_objective(ctx, empty_graph(n)).value);
        }
    }
    auto ctx = make_context(complete_graph(3), complete_graph(3));
    CHECK(expected_objective(ctx, 6, 0) == make_ratio(2, 5));
    CHECK_THROWS_AS(expected_objective(ctx, 6, make_ratio(-1, 10)), InvalidArgument);
    CHECK_THROWS_AS(expected_objective(ctx, 6, make_ratio(11, 10)), InvalidArgument);
    CHECK_THROWS_AS(expected_objective(ctx, 2, 0), SizeError);
}

TEST_CASE("expected objective equals the deletion-pattern average")
{
    std::vector<Ratio> grid{ make_ratio(1, 4), make_ratio(1, 2), make_ratio(3, 4), make_ratio(1, 10), 0, 1 };
    for (auto & [h1, h2] : std::vector<std::pair<Graph, Graph> >{
            { complete_graph(3), complete_graph(3) },
            { pendant_triangle(), complete_graph(3) },
            { complete_graph(3), complete_graph(5) },
            { path_graph(3), complete_graph(3) },
            { complete_graph(3), cycle_graph(5) } }) {
        auto ctx = make_context(h1, h2);
        for (int n = std::max(ctx.v1, ctx.v2) ; n <= 8 ; ++n) {
            oracle::DeletionExpectation brute{ ctx, n };
            PerturbationModel model{ ctx, n };
            for (auto & eps : grid)
                REQUIRE(model.expected(eps).value == brute.at(eps));
        }
    }
}

TEST_CASE("expected objective agrees with sampling")
{
    auto ctx = make_context(complete_graph(3), complete_graph(3));
    int n = 6;
    double exact = static_cast<double>(expected_objective(ctx, n, make_ratio(1, 2)));

    Graph cliques = complement(turan_graph(n, 2));
    auto edges = cliques.edges();
    Xorshift64Star rng{ 2024 };
    const int samples = 100000;
    double sum = 0, sum_sq = 0;
    for (int s = 0 ; s < samples ; ++s) {
        Graph g = cliques;
        for (auto [u, v] : edges)
            if (rng.next() >> 63)
                g.remove_edge(u, v);
        double value = static_cast<double>(m_objective(ctx, g).value);
        sum += value;
        sum_sq += value * value;
    }
    double mean = sum / samples;
    double se = std::sqrt((sum_sq / samples - mean * mean) / samples);
    CHECK(std::abs(mean - exact) <= 3 * se);
}

TEST_CASE("linear coefficient and threshold")
{
    auto k3 = complete_graph(3);
    CHECK(linear_coefficient(make_context(k3, k3)) == 0);
    CHECK(linear_coefficient(make_context(pendant_triangle(), k3)) == -1);
    CHECK(linear_coefficient(make_context(complete_graph(2), k3)) == make_ratio(-1, 4));

    auto a = imbalance_threshold(make_context(k3, k3));
    CHECK(a.threshold == 3);
    CHECK(a.verdict == ImbalanceVerdict::inconclusive);
    auto b = imbalance_threshold(make_context(pendant_triangle(), k3));
    CHECK(b.threshold == 3);
    CHECK(b.verdict == ImbalanceVerdict::not_multiplicity_good);

    // chi(H2) = 4: crit 6, v 4, k 1 gives 6 * 2^2 * 2^3 / 3^3
    auto c = imbalance_threshold(make_context(k3, complete_graph(4)));
    CHECK(c.threshold == make_ratio(64, 9));
    CHECK(c.verdict == ImbalanceVerdict::inconclusive);
    CHECK(imbalance_threshold(make_context(make_hairy({ k3, { 0, 0, 0, 0 } }), complete_graph(4))).verdict
            == ImbalanceVerdict::inconclusive);
    CHECK(imbalance_threshold(make_context(make_hairy({ k3, { 0, 0, 0, 0, 0 } }), complete_graph(4))).verdict
            == ImbalanceVerdict::not_multiplicity_good);

    CHECK_THROWS_AS(linear_coefficient(make_context(k3, complete_graph(2))), InvalidArgument);
    CHECK_THROWS_AS(imbalance_threshold(make_context(k3, path_graph(3))), InvalidArgument);
}

TEST_CASE("threshold is the linear coefficient with the nearly-proper bound in place of the count")
{
    std::vector<Graph> blues{ complete_graph(3), cycle_graph(5), complete_graph(4), complete_graph(5),
        make_hairy({ complete_graph(3), { 1 } }), make_hairy({ complete_graph(4), { 0, 2 } }), petersen_graph() };
    std::vector<Graph> reds{ complete_graph(2), complete_graph(3), pendant_triangle(), complete_graph(4), cycle_graph(5) };
    for (auto & h2 : blues)
        for (auto & h1 : reds) {
            auto ctx = make_context(h1, h2);
            auto t = imbalance_threshold(ctx);
            Ratio scale = make_ratio(power(BigCount(ctx.chi1 - 1), ctx.v2 - ctx.k2), power(BigCount(ctx.chi2 - 1), ctx.v2));
            REQUIRE(t.threshold == Ratio{ nearly_proper_bound(ctx.h2) } * scale);
            REQUIRE(linear_coefficient(ctx) == Ratio{ -ctx.e1 } + Ratio{ nearly_proper_count(ctx.h2) } * scale);
            REQUIRE(linear_coefficient(ctx) <= Ratio{ -ctx.e1 } + t.threshold);
            REQUIRE((t.verdict == ImbalanceVerdict::not_multiplicity_good) == (Ratio{ ctx.e1 } > t.threshold));
            if (t.verdict == ImbalanceVerdict::not_multiplicity_good)
                REQUIRE(linear_coefficient(ctx) < 0);
        }
}

TEST_CASE("pendants on the red side only raise e1")
{
    auto h2 = complete_graph(3);
    auto base = make_context(complete_graph(3), h2);
    auto previous = imbalance_threshold(base);
    for (int t = 1 ; t <= 4 ; ++t) {
        std::vector<int> attach(t, t % 3);
        auto ctx = make_context(make_hairy({ complete_graph(3), attach }), h2);
        auto now = imbalance_threshold(ctx);
        REQUIRE(ctx.e1 == base.e1 + t);
        REQUIRE(now.threshold == previous.threshold);
        if (previous.verdict == ImbalanceVerdict::not_multiplicity_good)
            REQUIRE(now.verdict == ImbalanceVerdict::not_multiplicity_good);
        previous = now;
    }
}

TEST_CASE("finite differences approach the linear coefficient")
{
    for (auto & [h1, h2] : std::vector<std::pair<Graph, Graph> >{
            { complete_graph(3), complete_graph(3) },
            { pendant_triangle(), complete_graph(3) },
            { complete_graph(2), complete_graph(3) } }) {
        auto ctx = make_context(h1, h2);
        auto linear = linear_coefficient(ctx);
        Ratio weight = Ratio{ std::abs(ctx.e1) } + Ratio{ nearly_proper_count(ctx.h2) };
        for (int n : { 20, 40, 80 }) {
            PerturbationModel model{ ctx, n };
            auto f0 = model.expected(0).value;
            for (auto eps : { make_ratio(1, 100), make_ratio(1, 1000) }) {
                Ratio slope = (model.expected(eps).value - f0) / eps;
                REQUIRE(absolute(slope - linear) <= 5 * (make_ratio(1, n) + eps) * weight);
            }
        }
    }

    auto ctx = make_context(complete_graph(3), complete_graph(3));
    // n = 30: 4 (1/2 split share) eps - 4 (same part share) (1 - (1 - eps)^3) + O(eps^3), by hand
    PerturbationModel thirty{ ctx, 30 };
    CHECK((thirty.expected(make_ratio(1, 1000)).value - thirty.expected(0).value) * 1000 == make_ratio(6039, 14500));

    Ratio previous = -1;
    for (int n : { 15, 30, 60, 120 }) {
        PerturbationModel model{ ctx, n };
        Ratio slope = absolute(model.expected(make_ratio(1, 1000)).value - model.expected(0).value) * 1000;
        if (previous >= 0)
            CHECK(slope < previous);
        previous = slope;
    }
}

TEST_CASE("sweeps")
{
    auto ctx = make_context(pendant_triangle(), complete_graph(3));
    auto report = sweep(ctx, 40, default_grid());
    REQUIRE(report.points.size() == 11);
    CHECK(report.points[1].epsilon == make_ratio(1, 100));
    CHECK(report.verdict == ImbalanceVerdict::not_multiplicity_good);
    CHECK(*report.linear_coefficient == -1);
    bool below = false;
    for (auto & p : report.points) {
        REQUIRE(p.below_baseline == (p.value < report.baseline.value));
        below = below || p.below_baseline;
    }
    CHECK(below);

    auto k3 = make_context(complete_graph(3), complete_graph(3));
    auto single = sweep(k3, 40, { Ratio{ 0 } });
    REQUIRE(single.points.size() == 1);
    CHECK(single.points[0].value == single.baseline.blue_value);
    CHECK(single.points[0].value == single.baseline.value);
    CHECK(! single.points[0].below_baseline);
    CHECK(single.verdict == ImbalanceVerdict::inconclusive);

    auto bipartite_blue = sweep(make_context(complete_graph(3), complete_graph(2)), 10, { Ratio{ 0 } });
    CHECK(! bipartite_blue.linear_coefficient);
    CHECK_THROWS_AS(sweep(k3, 10, { Ratio{ 2 } }), InvalidArgument);

    for (unsigned jobs : { 2u, 8u }) {
        auto again = sweep(ctx, 40, default_grid(), jobs);
        for (std::size_t i = 0 ; i < again.points.size() ; ++i)
            REQUIRE(again.points[i].value == report.points[i].value);
    }
}
