/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/canonical.hh>
#include <ramsey/chromatic.hh>
#include <ramsey/errors.hh>
#include <ramsey/homomorphism.hh>
#include <ramsey/search.hh>

#include "oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace ramsey;

TEST_CASE("counting examples")
{
    auto c5 = cycle_graph(5);
    CHECK(hom_count(complete_graph(2), c5) == 10);
    CHECK(hom_count(complete_graph(2), petersen_graph()) == 30);
    CHECK(hom_count(complete_graph(3), c5) == 0);
    CHECK(hom_count(complete_graph(3), complete_graph(3)) == 6);
    CHECK(inj_hom_count(complete_graph(3), complete_graph(4)) == 24);
    CHECK(inj_hom_count(complete_graph(2), c5) == 10);
    CHECK(inj_hom_count(complete_graph(3), turan_graph(6, 2)) == 0);
    CHECK(inj_hom_count(complete_graph(3), complement(turan_graph(6, 2))) == 12);
    CHECK(inj_hom_count(complete_graph(4), complete_graph(3)) == 0);
    CHECK(hom_count(Graph{ 3 }, c5) == 125);
    CHECK(inj_hom_count(Graph{ 3 }, c5) == 60);
}

TEST_CASE("counts against enumeration")
{
    Xorshift64Star rng{ 11 };
    std::vector<Graph> hosts;
    for (int n = 1 ; n <= 6 ; ++n)
        for (int rep = 0 ; rep < 3 ; ++rep)
            hosts.push_back(random_graph(n, rng));
    hosts.push_back(complete_graph(5));
    hosts.push_back(cycle_graph(6));

    for (int v = 1 ; v <= 4 ; ++v)
        for (auto & h : all_graphs(v))
            for (auto & g : hosts) {
                auto hom = hom_count(h, g);
                auto inj = inj_hom_count(h, g);
                REQUIRE(hom == oracle::hom_count(h, g, false));
                REQUIRE(inj == oracle::hom_count(h, g, true));
                REQUIRE(inj <= hom);
            }
}

TEST_CASE("homomorphisms into cliques count proper colourings")
{
    for (int v = 1 ; v <= 6 ; ++v)
        for (auto & h : all_graphs(v))
            for (int m = 1 ; m <= 5 ; ++m)
                REQUIRE(hom_count(h, complete_graph(m)) == count_proper_colourings(h, m));
}

TEST_CASE("pattern plans handle components and forbidden vertices")
{
    auto h = disjoint_union(complete_graph(3), complete_graph(2));
    auto g = complement(turan_graph(7, 2));   // K4 plus K3
    PatternPlan plan{ h };
    CHECK(plan.injective_count(g) == oracle::hom_count(h, g, true));
    CHECK(plan.homomorphism_count(g) == oracle::hom_count(h, g, false));
    CHECK(plan.injective_count_u64(g) == oracle::hom_count(h, g, true));

    for (int v = 0 ; v < g.order() ; ++v) {
        auto avoiding = plan.injective_count(g, vertex_bit(v));
        REQUIRE(plan.injective_count(g) - avoiding == oracle::hom_count_through(h, g, v));
    }
}

TEST_CASE("densities")
{
    for (int n = 2 ; n <= 8 ; ++n)
        CHECK(t_density(complete_graph(2), complete_graph(n), false) == make_ratio(n - 1, n));
    CHECK(t_density(complete_graph(3), complete_graph(5), true) == 1);
    CHECK(t_density(complete_graph(3), complement(turan_graph(6, 2)), true) == make_ratio(1, 10));
    CHECK(inj_density(complete_graph(3), complete_graph(5), InjectiveDenominator::all_functions) == make_ratio(60, 125));
    CHECK_THROWS_AS(inj_density(complete_graph(4), complete_graph(3), InjectiveDenominator::falling_factorial), SizeError);
    CHECK(inj_density(complete_graph(4), complete_graph(3), InjectiveDenominator::all_functions) == 0);
}

TEST_CASE("injective and plain densities are close")
{
    Xorshift64Star rng{ 4 };
    for (int rep = 0 ; rep < 20 ; ++rep) {
        int n = 6 + static_cast<int>(rng.next() % 10);
        auto g = random_graph(n, rng);
        for (auto & h : { complete_graph(2), complete_graph(3), path_graph(3), cycle_graph(4) }) {
            int v = h.order();
            Ratio gap = t_density(h, g, false) - t_density(h, g, true);
            if (gap < 0)
                gap = -gap;
            REQUIRE(gap <= make_ratio(BigCount(v * (v - 1) / 2) * power(BigCount(v), v), n));
        }
    }
}

TEST_CASE("vertex contributions")
{
    CHECK(vertex_contribution(complete_graph(2), complete_graph(2), 0) == make_ratio(1, 2));
    for (int v = 0 ; v < 5 ; ++v)
        CHECK(vertex_contribution(complete_graph(3), cycle_graph(5), v) == 0);
    CHECK_THROWS_AS(vertex_contribution(complete_graph(2), complete_graph(3), 3), InvalidArgument);

    Xorshift64Star rng{ 8 };
    for (int rep = 0 ; rep < 10 ; ++rep) {
        auto g = random_graph(6, rng);
        for (auto & h : { complete_graph(2), complete_graph(3), path_graph(3) }) {
            Ratio total = 0;
            for (int v = 0 ; v < g.order() ; ++v) {
                auto c = vertex_contribution(h, g, v);
                REQUIRE(c == make_ratio(oracle::hom_count_through(h, g, v), power(BigCount(6), h.order())));
                total += c;
            }
            REQUIRE(total == make_ratio(h.order() * inj_hom_count(h, g), power(BigCount(6), h.order())));
        }
    }
}

TEST_CASE("counts are invariant under relabelling")
{
    Xorshift64Star rng{ 21 };
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0 ; rep < 10 ; ++rep) {
        auto g = random_graph(9, rng);
        std::rotate(perm.begin(), perm.begin() + 2, perm.end());
        std::swap(perm[0], perm[rep % 9]);
        auto r = relabel(g, perm);
        for (auto & h : { complete_graph(3), cycle_graph(4), make_hairy({ complete_graph(3), { 0 } }) }) {
            REQUIRE(hom_count(h, g) == hom_count(h, r));
            REQUIRE(inj_hom_count(h, g) == inj_hom_count(h, r));
            std::vector<int> reversed(h.order());
            std::iota(reversed.rbegin(), reversed.rend(), 0);
            REQUIRE(inj_hom_count(relabel(h, reversed), g) == inj_hom_count(h, g));
        }
    }
}

TEST_CASE("large counts do not overflow")
{
    CHECK(inj_hom_count(complete_graph(3), complete_graph(64)) == falling_factorial(64, 3));
    CHECK(hom_count(Graph{ 12 }, complete_graph(64)) == power(BigCount(64), 12));
    CHECK(inj_hom_count(Graph{ 12 }, complete_graph(64)) == falling_factorial(64, 12));
}
