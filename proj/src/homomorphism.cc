/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/homomorphism.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

using std::array;
using std::to_string;
using std::vector;

namespace ramsey
{
    namespace
    {
        /// Largest number of pattern vertices r with n^r < 2^62, so that a
        /// subtree over r vertices can be counted in a machine word.
        auto word_sized_depth(int n) -> int
        {
            if (n <= 1)
                return max_vertices;
            return static_cast<int>(std::floor(62.0 / std::log2(static_cast<double>(n)))) - 1;
        }

        struct Counter
        {
            const Graph & g;
            const vector<VertexSet> & earlier;
            int end;
            bool injective;
            int word_depth;
            int tail = 0;           // isolated pattern vertices after `end`, injective only
            array<int, max_vertices> mapped{};

            auto candidates(int depth, VertexSet available) const -> VertexSet
            {
                VertexSet cand = available;
                for (VertexSet e = earlier[depth] ; e ; e &= e - 1)
                    cand &= g.neighbours(mapped[std::countr_zero(e)]);
                return cand;
            }

            auto place_tail(VertexSet available) const -> std::uint64_t
            {
                std::uint64_t ways = 1;
                for (int free = set_size(available), i = 0 ; i < tail ; ++i)
                    ways *= static_cast<std::uint64_t>(std::max(free - i, 0));
                return ways;
            }

            auto small(int depth, VertexSet available) -> std::uint64_t
            {
                if (depth == end)
                    return place_tail(available);
                VertexSet cand = candidates(depth, available);
                if (depth + 1 == end && tail == 0)
                    return static_cast<std::uint64_t>(set_size(cand));

                std::uint64_t total = 0;
                for ( ; cand ; cand &= cand - 1) {
                    int c = std::countr_zero(cand);
                    mapped[depth] = c;
                    total += small(depth + 1, injective ? available & ~vertex_bit(c) : available);
                }
                return total;
            }

            auto big(int depth, VertexSet available) -> BigCount
            {
                if (end + tail - depth <= word_depth)
                    return BigCount{ small(depth, available) };
                if (depth == end)
                    return falling_factorial(static_cast<unsigned>(set_size(available)), static_cast<unsigned>(tail));

                VertexSet cand = candidates(depth, available);
                BigCount total = 0;
                for ( ; cand ; cand &= cand - 1) {
                    int c = std::countr_zero(cand);
                    mapped[depth] = c;
                    total += big(depth + 1, injective ? available & ~vertex_bit(c) : available);
                }
                return total;
            }
        };

        /// Same visiting rule as the colouring counter: most already placed
        /// neighbours first, then highest degree, then lowest index.
        auto visit_order(const Graph & h) -> vector<int>
        {
            vector<int> order;
            VertexSet placed = 0;
            while (placed != h.vertices()) {
                int best = -1, best_links = -1, best_deg = -1;
                for (VertexSet s = h.vertices() & ~placed ; s ; s &= s - 1) {
                    int v = std::countr_zero(s);
                    int links = set_size(h.neighbours(v) & placed);
                    if (links > best_links || (links == best_links && h.degree(v) > best_deg)) {
                        best = v;
                        best_links = links;
                        best_deg = h.degree(v);
                    }
                }
                order.push_back(best);
                placed |= vertex_bit(best);
            }
            return order;
        }
    }

    PatternPlan::PatternPlan(const Graph & h) :
        _order(h.order()),
        _visit(visit_order(h)),
        _earlier(h.order(), 0)
    {
        vector<int> position(h.order());
        for (int i = 0 ; i < _order ; ++i)
            position[_visit[i]] = i;

        for (int i = 0 ; i < _order ; ++i)
            for (VertexSet nb = h.neighbours(_visit[i]) ; nb ; nb &= nb - 1) {
                int j = position[std::countr_zero(nb)];
                if (j < i)
                    _earlier[i] |= vertex_bit(j);
            }

        // isolated vertices come last; injective counts place them in one step
        while (_isolated < _order && h.degree(_visit[_order - 1 - _isolated]) == 0)
            ++_isolated;

        // components occupy contiguous position ranges in the visiting order
        for (int i = 0 ; i < _order ; ++i) {
            if (i == 0 || _earlier[i] == 0)
                _component_masks.push_back(0);
            _component_masks.back() |= vertex_bit(i);
        }
    }

    auto PatternPlan::injective_count(const Graph & g, VertexSet forbidden) const -> BigCount
    {
        if (_order > g.order())
            return 0;
        Counter counter{ g, _earlier, _order - _isolated, true, word_sized_depth(g.order()), _isolated };
        return counter.big(0, g.vertices() & ~forbidden);
    }

    auto PatternPlan::injective_count_u64(const Graph & g) const -> std::uint64_t
    {
        if (_order > g.order())
            return 0;
        Counter counter{ g, _earlier, _order - _isolated, true, max_vertices, _isolated };
        return counter.small(0, g.vertices());
    }

    auto PatternPlan::homomorphism_count(const Graph & g) const -> BigCount
    {
        BigCount result = 1;
        for (auto mask : _component_masks) {
            int start = std::countr_zero(mask);
            int end = start + set_size(mask);
            Counter counter{ g, _earlier, end, false, word_sized_depth(g.order()), 0 };
            if (end - start <= counter.word_depth)
                result *= counter.small(start, g.vertices());
            else
                result *= counter.big(start, g.vertices());
            if (result == 0)
                break;
        }
        return result;
    }

    auto hom_count(const Graph & h, const Graph & g) -> BigCount
    {
        return PatternPlan{ h }.homomorphism_count(g);
    }

    auto inj_hom_count(const Graph & h, const Graph & g) -> BigCount
    {
        return PatternPlan{ h }.injective_count(g);
    }

    auto hom_density(const Graph & h, const Graph & g) -> Ratio
    {
        return make_ratio(hom_count(h, g), power(BigCount(g.order()), static_cast<unsigned>(h.order())));
    }

    auto inj_density(const Graph & h, const Graph & g, InjectiveDenominator denominator) -> Ratio
    {
        switch (denominator) {
            case InjectiveDenominator::falling_factorial:
                if (h.order() > g.order())
                    throw SizeError{ "injective density needs v(h) <= v(g), got " + to_string(h.order()) + " > " + to_string(g.order()) };
                return make_ratio(inj_hom_count(h, g), falling_factorial(g.order(), h.order()));

            case InjectiveDenominator::all_functions:
                return make_ratio(inj_hom_count(h, g), power(BigCount(g.order()), static_cast<unsigned>(h.order())));
        }
        throw InvalidArgument{ "unknown denominator" };
    }

    auto t_density(const Graph & h, const Graph & g, bool injective) -> Ratio
    {
        return injective ? inj_density(h, g) : hom_density(h, g);
    }

    auto vertex_contribution(const Graph & h, const Graph & g, int v) -> Ratio
    {
        if (v < 0 || v >= g.order())
            throw InvalidArgument{ "vertex " + to_string(v) + " out of range for a host on " + to_string(g.order()) + " vertices" };
        PatternPlan plan{ h };
        BigCount touching = plan.injective_count(g) - plan.injective_count(g, vertex_bit(v));
        return make_ratio(touching, power(BigCount(g.order()), static_cast<unsigned>(h.order())));
    }
}
