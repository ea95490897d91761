/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/canonical.hh>
#include <ramsey/chromatic.hh>
#include <ramsey/errors.hh>
#include <ramsey/graph6.hh>
#include <ramsey/search.hh>

#include "oracles.hh"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ramsey;

namespace
{
    auto k3k3() -> PairContext
    {
        return make_context(complete_graph(3), complete_graph(3));
    }

    auto contains(const SearchReport & report, const Graph & g) -> bool
    {
        return std::binary_search(report.minimizers.begin(), report.minimizers.end(), canonical_form(g));
    }

    auto same(const SearchReport & a, const SearchReport & b) -> bool
    {
        return a.n == b.n && a.mode == b.mode && a.min_value == b.min_value && a.minimizers == b.minimizers
            && a.turan_verdict == b.turan_verdict && a.graphs_examined == b.graphs_examined
            && a.turan_attains_minimum == b.turan_attains_minimum;
    }
}

TEST_CASE("triangle pair at five and six vertices")
{
    auto five = exhaustive_minimize(k3k3(), 5);
    CHECK(five.min_value == 0);
    CHECK(contains(five, cycle_graph(5)));
    CHECK(five.minimizers.size() == 1);
    CHECK(five.turan_verdict == TuranVerdict::contains_non_turan);
    CHECK(five.graphs_examined == 1024);

    auto six = exhaustive_minimize(k3k3(), 6);
    CHECK(six.min_value == make_ratio(2, 5));
    CHECK(six.graphs_examined == 32768);
    CHECK(contains(six, turan_graph(6, 2)));
    CHECK(contains(six, complement(turan_graph(6, 2))));
    CHECK(six.turan_attains_minimum);
    // K33 minus one edge still has just two monochromatic triangles
    Graph k33_minus = turan_graph(6, 2);
    k33_minus.remove_edge(0, 1);
    CHECK(contains(six, k33_minus));
    CHECK(six.turan_verdict == TuranVerdict::contains_non_turan);
}

TEST_CASE("six-vertex minimum matches the degree identity")
{
    // with K3 on both sides the objective is (monochromatic triangles) / 5 at n = 6
    long fewest = 1000;
    oracle::for_each_labelled_graph(6, [&] (const Graph & g) {
            fewest = std::min(fewest, oracle::goodman_monochromatic_triangles(g));
            });
    CHECK(fewest == 2);
    CHECK(exhaustive_minimize(k3k3(), 6).min_value == make_ratio(fewest, 5));

    std::set<CanonicalForm> expected;
    oracle::for_each_labelled_graph(6, [&] (const Graph & g) {
            if (oracle::goodman_monochromatic_triangles(g) == fewest)
                expected.insert(canonical_form(g));
            });
    auto report = exhaustive_minimize(k3k3(), 6);
    CHECK(std::set<CanonicalForm>(report.minimizers.begin(), report.minimizers.end()) == expected);
}

TEST_CASE("edge pair: every graph is a minimizer")
{
    auto ctx = make_context(complete_graph(2), complete_graph(2));
    auto three = exhaustive_minimize(ctx, 3);
    CHECK(three.min_value == 1);
    CHECK(three.minimizers.size() == 4);
    auto four = exhaustive_minimize(ctx, 4);
    CHECK(four.minimizers.size() == 11);
    CHECK(four.turan_verdict == TuranVerdict::contains_non_turan);
    CHECK(bonbon_verdict(ctx, 4) == TuranVerdict::contains_non_turan);
}

TEST_CASE("minimizers attain the minimum")
{
    for (auto & [h1, h2] : std::vector<std::pair<Graph, Graph> >{
            { complete_graph(3), complete_graph(3) },
            { make_hairy({ complete_graph(3), { 0 } }), complete_graph(3) },
            { complete_graph(2), complete_graph(3) },
            { path_graph(3), complete_graph(3) } }) {
        auto ctx = make_context(h1, h2);
        for (int n = std::max(ctx.v1, ctx.v2) ; n <= 6 ; ++n) {
            auto report = exhaustive_minimize(ctx, n);
            REQUIRE(! report.minimizers.empty());
            Ratio brute = 1000;
            oracle::for_each_labelled_graph(n, [&] (const Graph & g) { brute = std::min(brute, m_objective(ctx, g).value); });
            REQUIRE(report.min_value == brute);
            for (auto & form : report.minimizers)
                REQUIRE(m_objective(ctx, parse_graph6(form.code)).value == report.min_value);
            REQUIRE(report.min_value <= report.baseline.value);

            // swapping the pair leaves the minimum unchanged
            REQUIRE(exhaustive_minimize(swapped(ctx), n).min_value == report.min_value);
        }
    }
}

TEST_CASE("exhaustive results do not depend on chunking or threads")
{
    auto ctx = make_context(make_hairy({ complete_graph(3), { 0 } }), complete_graph(3));
    auto reference = exhaustive_minimize(ctx, 6);
    for (unsigned jobs : { 1u, 3u, 8u })
        for (std::size_t chunks : { std::size_t{ 1 }, std::size_t{ 7 }, std::size_t{ 1000 } }) {
            ExhaustiveOptions options;
            options.jobs = jobs;
            options.chunks = chunks;
            REQUIRE(same(exhaustive_minimize(ctx, 6, options), reference));
        }
}

TEST_CASE("budget guard")
{
    CHECK_THROWS_AS(exhaustive_minimize(k3k3(), 8), BudgetExceeded);
    CHECK_THROWS_AS(exhaustive_minimize(k3k3(), 12), BudgetExceeded);
    ExhaustiveOptions raised;
    raised.max_n = 12;
    CHECK_THROWS_AS(exhaustive_minimize(k3k3(), 12, raised), BudgetExceeded);
    CHECK_THROWS_AS(exhaustive_minimize(k3k3(), 2), SizeError);
}

TEST_CASE("clone move")
{
    auto star = clone_move(path_graph(3), 0, 2);
    Graph expected{ 3 };
    expected.add_edge(0, 1);
    expected.add_edge(2, 1);
    CHECK(star == expected);
    CHECK(clone_move(complete_graph(2), 0, 1) == empty_graph(2));
    CHECK_THROWS_AS(clone_move(path_graph(3), 1, 1), InvalidArgument);
    CHECK_THROWS_AS(clone_move(path_graph(3), 0, 3), InvalidArgument);

    Xorshift64Star rng{ 77 };
    for (int rep = 0 ; rep < 200 ; ++rep) {
        int n = 2 + static_cast<int>(rng.next() % 10);
        auto g = random_graph(n, rng);
        int u = static_cast<int>(rng.next() % n), w = static_cast<int>(rng.next() % n);
        if (u == w)
            continue;
        auto c = clone_move(g, u, w);
        REQUIRE(c.neighbours(w) == (g.neighbours(u) & ~vertex_bit(w)));
        REQUIRE(! c.adjacent(u, w));
        REQUIRE(clone_move(c, u, w) == c);
        for (int a = 0 ; a < n ; ++a) {
            REQUIRE(! c.adjacent(a, a));
            for (int b = 0 ; b < n ; ++b) {
                REQUIRE(c.adjacent(a, b) == c.adjacent(b, a));
                if (a != w && b != w)
                    REQUIRE(c.adjacent(a, b) == g.adjacent(a, b));
            }
        }
    }
}

TEST_CASE("local search")
{
    for (std::uint64_t seed : { 0ull, 1ull, 2ull, 42ull, 12345ull }) {
        auto five = local_search(k3k3(), 5, seed);
        CHECK(five.mode == SearchMode::local);
        CHECK(five.min_value == 0);
        CHECK(five.turan_verdict == TuranVerdict::turan_not_minimal);
        auto six = local_search(k3k3(), 6, seed);
        CHECK(six.min_value == make_ratio(2, 5));
        CHECK(six.min_value <= six.baseline.value);
    }

    auto ctx = make_context(make_hairy({ complete_graph(3), { 0 } }), complete_graph(3));
    for (int n = 4 ; n <= 7 ; ++n) {
        auto exhaustive = exhaustive_minimize(ctx, n);
        auto local = local_search(ctx, n, 9);
        REQUIRE(local.min_value >= exhaustive.min_value);
        REQUIRE(local.min_value <= local.baseline.value);
    }

    LocalSearchOptions options;
    options.restarts = 1;
    CHECK_THROWS_AS(local_search(k3k3(), 6, 0, options), InvalidArgument);
}

TEST_CASE("local search is reproducible")
{
    auto ctx = make_context(make_hairy({ complete_graph(3), { 0 } }), complete_graph(3));
    LocalSearchOptions serial, threaded;
    threaded.jobs = 4;
    for (MoveSet moves : { MoveSet::flips, MoveSet::clones, MoveSet::both }) {
        serial.move_set = threaded.move_set = moves;
        auto a = local_search(ctx, 9, 5, serial);
        auto b = local_search(ctx, 9, 5, serial);
        auto c = local_search(ctx, 9, 5, threaded);
        REQUIRE(same(a, b));
        REQUIRE(same(a, c));
    }
}

TEST_CASE("random graphs")
{
    Xorshift64Star a{ 1 }, b{ 1 }, c{ 2 };
    CHECK(a.next() == b.next());
    CHECK(a.next() != c.next());
    Xorshift64Star rng{ 0 };
    CHECK(rng.next() != 0);
    auto g = random_graph(20, rng);
    CHECK(g.order() == 20);
}

TEST_CASE("best partition")
{
    Graph k33{ 6 };
    for (int u = 0 ; u < 3 ; ++u)
        for (int v = 3 ; v < 6 ; ++v)
            k33.add_edge(u, v);
    auto p = best_partition(k33, 2);
    CHECK(p.internal_edges == 0);
    CHECK(p.assignment == std::vector<int>{ 0, 0, 0, 1, 1, 1 });

    auto k4 = best_partition(complete_graph(4), 2);
    CHECK(k4.internal_edges == 2);
    CHECK(std::count(k4.assignment.begin(), k4.assignment.end(), 0) == 2);

    auto singles = best_partition(petersen_graph(), 10);
    CHECK(singles.internal_edges == 0);

    CHECK_THROWS_AS(best_partition(complete_graph(3), 0), InvalidArgument);
    CHECK_THROWS_AS(best_partition(complete_graph(3), 4), InvalidArgument);
    CHECK_THROWS_AS(best_partition(complete_graph(15), 2), SizeError);
}

TEST_CASE("best partition is optimal and consistent")
{
    Xorshift64Star rng{ 31 };
    for (int rep = 0 ; rep < 40 ; ++rep) {
        int n = 2 + static_cast<int>(rng.next() % 6);
        auto g = random_graph(n, rng);
        for (int r = 1 ; r <= std::min(n, 3) ; ++r) {
            auto p = best_partition(g, r);
            REQUIRE(static_cast<int>(p.assignment.size()) == n);
            std::uint64_t internal = 0;
            for (auto [a, b] : g.edges())
                if (p.assignment[a] == p.assignment[b])
                    ++internal;
            REQUIRE(internal == p.internal_edges);
            for (int c : p.assignment)
                REQUIRE((c >= 0 && c < r));

            std::uint64_t best = ~std::uint64_t{ 0 };
            oracle::for_each_map(n, r, [&] (const std::vector<int> & f) {
                    best = std::min<std::uint64_t>(best, oracle::monochromatic_edges(g, f));
                    });
            REQUIRE(p.internal_edges == best);
        }
    }

    // zero internal edges exactly when r colours suffice
    for (int n = 1 ; n <= 7 ; ++n)
        for (auto & g : all_graphs(n)) {
            int chi = chromatic_number(g);
            for (int r = 1 ; r <= std::min(n, 5) ; ++r)
                REQUIRE((best_partition(g, r).internal_edges == 0) == (chi <= r));
        }

    // a 14-vertex instance stays within the cap
    auto t = turan_graph(14, 3);
    std::uint64_t best = ~std::uint64_t{ 0 };
    oracle::for_each_map(14, 2, [&] (const std::vector<int> & f) {
            best = std::min<std::uint64_t>(best, oracle::monochromatic_edges(t, f));
            });
    CHECK(best_partition(t, 2).internal_edges == best);
}

TEST_CASE("turan colouring recognition")
{
    auto ctx = k3k3();
    CHECK(is_turan_colouring(ctx, turan_graph(6, 2)));
    CHECK(is_turan_colouring(ctx, complement(turan_graph(6, 2))));
    CHECK(! is_turan_colouring(ctx, cycle_graph(5)));
}
