/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/objective.hh>
#include <ramsey/chromatic.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <cmath>

using std::string;
using std::to_string;

namespace ramsey
{
    auto strip_singletons(const Graph & h) -> Graph
    {
        VertexSet keep = 0;
        for (int v = 0 ; v < h.order() ; ++v)
            if (h.degree(v) > 0)
                keep |= vertex_bit(v);
        if (! keep)
            throw InvalidArgument{ "pattern graphs must have at least one edge" };
        return induced_subgraph(h, keep);
    }

    auto make_context(const Graph & h1, const Graph & h2) -> PairContext
    {
        auto a = strip_singletons(h1), b = strip_singletons(h2);
        PairContext ctx{ a, b,
            a.order(), b.order(), a.edge_count(), b.edge_count(),
            component_count(a), component_count(b),
            chromatic_number(a), chromatic_number(b),
            0, 0,
            std::make_shared<PatternPlan>(a), std::make_shared<PatternPlan>(b) };
        ctx.rho1 = power(BigCount(ctx.chi2 - 1), static_cast<unsigned>(ctx.v1 - ctx.k1));
        ctx.rho2 = power(BigCount(ctx.chi1 - 1), static_cast<unsigned>(ctx.v2 - ctx.k2));
        return ctx;
    }

    auto swapped(const PairContext & ctx) -> PairContext
    {
        return PairContext{ ctx.h2, ctx.h1, ctx.v2, ctx.v1, ctx.e2, ctx.e1, ctx.k2, ctx.k1, ctx.chi2, ctx.chi1,
            ctx.rho2, ctx.rho1, ctx.plan2, ctx.plan1 };
    }

    namespace
    {
        void check_host(const PairContext & ctx, int n)
        {
            if (n < std::max(ctx.v1, ctx.v2))
                throw SizeError{ "host graph on " + to_string(n) + " vertices is smaller than the patterns (need at least "
                    + to_string(std::max(ctx.v1, ctx.v2)) + ")" };
        }
    }

    auto m_objective(const PairContext & ctx, const Graph & g) -> ObjectiveValue
    {
        int n = g.order();
        check_host(ctx, n);
        ObjectiveValue result;
        result.red_term = Ratio{ ctx.rho1 } * make_ratio(ctx.plan1->injective_count(g), falling_factorial(n, ctx.v1));
        result.blue_term = Ratio{ ctx.rho2 } * make_ratio(ctx.plan2->injective_count(complement(g)), falling_factorial(n, ctx.v2));
        result.value = result.red_term + result.blue_term;
        return result;
    }

    auto lambda_objective(const Graph & h1, const Graph & h2, const Graph & g, const Ratio & lambda) -> Ratio
    {
        if (lambda < 0 || lambda > 2)
            throw InvalidArgument{ "lambda must lie in [0, 2], got " + fraction_string(lambda) };
        return lambda * hom_density(h1, g) + (Ratio{ 2 } - lambda) * hom_density(h2, complement(g));
    }

    auto side_name(TuranSide side) -> string
    {
        switch (side) {
            case TuranSide::red:  return "red";
            case TuranSide::blue: return "blue";
            case TuranSide::both: return "both";
        }
        return "unknown";
    }

    auto red_turan_graph(const PairContext & ctx, int n) -> Graph
    {
        return turan_graph(n, ctx.chi1 - 1);
    }

    auto blue_turan_graph(const PairContext & ctx, int n) -> Graph
    {
        return complement(turan_graph(n, ctx.chi2 - 1));
    }

    auto turan_baseline(const PairContext & ctx, int n) -> TuranBaseline
    {
        check_host(ctx, n);
        TuranBaseline result;
        result.red_value = m_objective(ctx, red_turan_graph(ctx, n)).value;
        result.blue_value = m_objective(ctx, blue_turan_graph(ctx, n)).value;
        if (result.red_value < result.blue_value) {
            result.value = result.red_value;
            result.side = TuranSide::red;
        }
        else if (result.blue_value < result.red_value) {
            result.value = result.blue_value;
            result.side = TuranSide::blue;
        }
        else {
            result.value = result.red_value;
            result.side = TuranSide::both;
        }
        return result;
    }

    ScaledObjective::ScaledObjective(const PairContext & ctx, int n) :
        _ctx(&ctx),
        _n(n)
    {
        check_host(ctx, n);
        BigCount d1 = falling_factorial(n, ctx.v1), d2 = falling_factorial(n, ctx.v2);
        _d = boost::multiprecision::lcm(d1, d2);
        _a = ctx.rho1 * (_d / d1);
        _b = ctx.rho2 * (_d / d2);
        _word_counts = std::max(ctx.v1, ctx.v2) * std::log2(static_cast<double>(n)) < 62.0;
    }

    auto ScaledObjective::key(const Graph & g) const -> BigCount
    {
        auto co = complement(g);
        if (_word_counts)
            return _a * _ctx->plan1->injective_count_u64(g) + _b * _ctx->plan2->injective_count_u64(co);
        return _a * _ctx->plan1->injective_count(g) + _b * _ctx->plan2->injective_count(co);
    }
}
