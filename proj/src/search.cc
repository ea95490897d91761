/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/search.hh>
#include <ramsey/errors.hh>
#include <ramsey/graph6.hh>
#include <ramsey/parallel.hh>

#include <algorithm>
#include <optional>
#include <set>
#include <string>

using std::optional;
using std::pair;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace ramsey
{
    auto verdict_name(TuranVerdict v) -> string
    {
        switch (v) {
            case TuranVerdict::all_turan:           return "all-turan";
            case TuranVerdict::contains_non_turan:  return "contains-non-turan";
            case TuranVerdict::turan_not_minimal:   return "turan-not-minimal";
        }
        return "unknown";
    }

    auto mode_name(SearchMode m) -> string
    {
        return m == SearchMode::exhaustive ? "exhaustive" : "local";
    }

    auto is_turan_colouring(const PairContext & ctx, const Graph & g) -> bool
    {
        return is_turan(g, ctx.chi1 - 1) || is_turan(complement(g), ctx.chi2 - 1);
    }

    namespace
    {
        auto all_minimizers_turan(const PairContext & ctx, const vector<CanonicalForm> & minimizers) -> bool
        {
            return std::all_of(minimizers.begin(), minimizers.end(), [&] (const CanonicalForm & f) {
                    return is_turan_colouring(ctx, parse_graph6(f.code));
                    });
        }

        /// Pairs (i, j), i < j, in graph6 bit order.
        auto pair_order(int n) -> vector<pair<int, int> >
        {
            vector<pair<int, int> > result;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i)
                    result.emplace_back(i, j);
            return result;
        }

        auto graph_from_id(int n, const vector<pair<int, int> > & pairs, std::uint64_t id) -> Graph
        {
            Graph g{ n };
            for (std::size_t k = 0 ; k < pairs.size() ; ++k)
                if ((id >> k) & 1)
                    g.add_edge(pairs[k].first, pairs[k].second);
            return g;
        }

        struct ChunkBest
        {
            optional<BigCount> key;
            vector<std::uint64_t> ids;
        };

        auto splitmix64(std::uint64_t x) -> std::uint64_t
        {
            x += 0x9E3779B97F4A7C15ULL;
            x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
            x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
            return x ^ (x >> 31);
        }
    }

    auto exhaustive_minimize(const PairContext & ctx, int n, const ExhaustiveOptions & options) -> SearchReport
    {
        int cap = std::min(options.max_n, exhaustive_hard_cap);
        if (n > cap)
            throw BudgetExceeded{ "exhaustive search on " + to_string(n) + " vertices exceeds the cap of " + to_string(cap)
                + " (raise it with --max-n-override, at most " + to_string(exhaustive_hard_cap) + ")" };

        ScaledObjective objective{ ctx, n };
        auto pairs = pair_order(n);
        std::uint64_t total = std::uint64_t{ 1 } << pairs.size();
        std::size_t chunks = static_cast<std::size_t>(std::clamp<std::uint64_t>(options.chunks, 1, total));

        auto chunk_range = [&] (std::size_t c) {
            return pair{ total * c / chunks, total * (c + 1) / chunks };
        };

        auto bests = run_indexed(chunks, options.jobs, [&] (std::size_t c) {
                ChunkBest best;
                auto [first, last] = chunk_range(c);
                for (std::uint64_t id = first ; id < last ; ++id) {
                    auto key = objective.key(graph_from_id(n, pairs, id));
                    if (! best.key || key < *best.key) {
                        best.key = std::move(key);
                        best.ids.clear();
                        best.ids.push_back(id);
                    }
                    else if (key == *best.key)
                        best.ids.push_back(id);
                }
                return best;
                });

        BigCount global = *bests.front().key;
        for (auto & b : bests)
            global = std::min(global, *b.key);

        auto forms = run_indexed(chunks, options.jobs, [&] (std::size_t c) {
                set<CanonicalForm> found;
                if (*bests[c].key == global)
                    for (auto id : bests[c].ids)
                        found.insert(canonical_form(graph_from_id(n, pairs, id)));
                return found;
                });

        set<CanonicalForm> merged;
        for (auto & f : forms)
            merged.insert(f.begin(), f.end());

        SearchReport report;
        report.n = n;
        report.mode = SearchMode::exhaustive;
        report.min_value = objective.value_of(global);
        report.minimizers.assign(merged.begin(), merged.end());
        report.graphs_examined = total;
        report.baseline = turan_baseline(ctx, n);
        report.turan_attains_minimum = report.baseline.value == report.min_value;
        report.turan_verdict = all_minimizers_turan(ctx, report.minimizers) ? TuranVerdict::all_turan : TuranVerdict::contains_non_turan;
        return report;
    }

    auto bonbon_verdict(const PairContext & ctx, int n, const ExhaustiveOptions & options) -> TuranVerdict
    {
        return exhaustive_minimize(ctx, n, options).turan_verdict;
    }

    auto clone_move(const Graph & g, int u, int w) -> Graph
    {
        if (u < 0 || w < 0 || u >= g.order() || w >= g.order())
            throw InvalidArgument{ "clone move vertices out of range" };
        if (u == w)
            throw InvalidArgument{ "clone move needs two distinct vertices" };

        Graph result = g;
        result.isolate(w);
        for (VertexSet nb = g.neighbours(u) & ~vertex_bit(w) ; nb ; nb &= nb - 1)
            result.add_edge(w, std::countr_zero(nb));
        return result;
    }

    Xorshift64Star::Xorshift64Star(std::uint64_t seed) :
        _state(splitmix64(seed))
    {
        if (_state == 0)
            _state = 0x9E3779B97F4A7C15ULL;
    }

    auto Xorshift64Star::next() -> std::uint64_t
    {
        _state ^= _state >> 12;
        _state ^= _state << 25;
        _state ^= _state >> 27;
        return _state * 0x2545F4914F6CDD1DULL;
    }

    auto random_graph(int n, Xorshift64Star & rng) -> Graph
    {
        Graph g{ n };
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (rng.next() >> 63)
                    g.add_edge(u, v);
        return g;
    }

    namespace
    {
        struct Descent
        {
            Graph graph;
            BigCount key;
            std::uint64_t evaluations = 0;
        };

        auto descend(const ScaledObjective & objective, Graph start, const LocalSearchOptions & options) -> Descent
        {
            Descent d{ start, objective.key(start), 1 };
            int n = start.order();
            bool use_flips = options.move_set != MoveSet::clones;
            bool use_clones = options.move_set != MoveSet::flips;

            for (int step = 0 ; step < options.max_steps ; ++step) {
                optional<Graph> best_graph;
                BigCount best_key = d.key;

                auto consider = [&] (Graph candidate) {
                    auto key = objective.key(candidate);
                    ++d.evaluations;
                    if (key < best_key) {
                        best_key = std::move(key);
                        best_graph = std::move(candidate);
                    }
                };

                if (use_flips)
                    for (int u = 0 ; u < n ; ++u)
                        for (int v = u + 1 ; v < n ; ++v) {
                            Graph candidate = d.graph;
                            if (candidate.adjacent(u, v))
                                candidate.remove_edge(u, v);
                            else
                                candidate.add_edge(u, v);
                            consider(std::move(candidate));
                        }

                if (use_clones)
                    for (int u = 0 ; u < n ; ++u)
                        for (int w = 0 ; w < n ; ++w)
                            if (u != w) {
                                Graph candidate = clone_move(d.graph, u, w);
                                if (! (candidate == d.graph))
                                    consider(std::move(candidate));
                            }

                if (! best_graph)
                    break;
                d.graph = std::move(*best_graph);
                d.key = std::move(best_key);
            }
            return d;
        }
    }

    auto local_search(const PairContext & ctx, int n, std::uint64_t seed, const LocalSearchOptions & options) -> SearchReport
    {
        if (options.restarts < 2)
            throw InvalidArgument{ "local search needs at least 2 restarts (the two Turán seeds)" };
        if (options.max_steps < 0)
            throw InvalidArgument{ "max_steps must be non-negative" };

        ScaledObjective objective{ ctx, n };

        auto runs = run_indexed(static_cast<std::size_t>(options.restarts), options.jobs, [&] (std::size_t r) {
                Graph start = r == 0 ? red_turan_graph(ctx, n) : r == 1 ? blue_turan_graph(ctx, n) : [&] {
                    Xorshift64Star rng{ seed ^ splitmix64(r) };
                    return random_graph(n, rng);
                }();
                return descend(objective, start, options);
                });

        BigCount best = runs.front().key;
        std::uint64_t evaluations = 0;
        for (auto & r : runs) {
            best = std::min(best, r.key);
            evaluations += r.evaluations;
        }

        set<CanonicalForm> found;
        for (auto & r : runs)
            if (r.key == best)
                found.insert(canonical_form(r.graph));

        SearchReport report;
        report.n = n;
        report.mode = SearchMode::local;
        report.min_value = objective.value_of(best);
        report.minimizers.assign(found.begin(), found.end());
        report.graphs_examined = evaluations;
        report.baseline = turan_baseline(ctx, n);
        report.turan_attains_minimum = report.baseline.value == report.min_value;
        if (report.min_value < report.baseline.value)
            report.turan_verdict = TuranVerdict::turan_not_minimal;
        else
            report.turan_verdict = all_minimizers_turan(ctx, report.minimizers) ? TuranVerdict::all_turan : TuranVerdict::contains_non_turan;
        return report;
    }

    namespace
    {
        struct PartitionSearch
        {
            const Graph & g;
            int r;
            vector<int> assignment;
            vector<VertexSet> classes;
            vector<int> best_assignment;
            std::uint64_t best_cost;

            /// Every unassigned vertex will add at least its fewest edges into any class.
            auto lower_bound(int next, int used) const -> std::uint64_t
            {
                std::uint64_t bound = 0;
                for (int v = next ; v < g.order() ; ++v) {
                    int fewest = used < r ? 0 : g.order();
                    for (int c = 0 ; c < used ; ++c)
                        fewest = std::min(fewest, set_size(g.neighbours(v) & classes[c]));
                    bound += static_cast<std::uint64_t>(fewest);
                }
                return bound;
            }

            void search(int v, int used, std::uint64_t cost)
            {
                if (best_cost == 0 || cost + lower_bound(v, used) >= best_cost)
                    return;
                if (v == g.order()) {
                    best_cost = cost;
                    best_assignment = assignment;
                    return;
                }

                int limit = std::min(r, used + 1);
                for (int c = 0 ; c < limit ; ++c) {
                    std::uint64_t added = static_cast<std::uint64_t>(set_size(g.neighbours(v) & classes[c]));
                    assignment[v] = c;
                    classes[c] |= vertex_bit(v);
                    search(v + 1, std::max(used, c + 1), cost + added);
                    classes[c] &= ~vertex_bit(v);
                }
            }
        };
    }

    auto best_partition(const Graph & g, int r) -> Partition
    {
        if (r < 1 || r > g.order())
            throw InvalidArgument{ "best_partition needs 1 <= r <= v(g), got r=" + to_string(r) };
        if (g.order() > partition_vertex_cap)
            throw SizeError{ "best_partition is limited to " + to_string(partition_vertex_cap) + " vertices" };

        PartitionSearch s{ g, r, vector<int>(g.order(), 0), vector<VertexSet>(r, 0), {},
            static_cast<std::uint64_t>(g.edge_count()) + 1 };
        s.search(0, 0, 0);
        return Partition{ r, s.best_assignment, s.best_cost };
    }
}
