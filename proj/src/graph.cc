/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/graph.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <string>

using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace ramsey
{
    namespace
    {
        void check_vertex(const Graph & g, int v)
        {
            if (v < 0 || v >= g.order())
                throw InvalidArgument{ "vertex " + to_string(v) + " out of range for a graph on " + to_string(g.order()) + " vertices" };
        }
    }

    Graph::Graph(int n) :
        _n(n)
    {
        if (n < 1 || n > max_vertices)
            throw InvalidArgument{ "graphs must have between 1 and 64 vertices, not " + to_string(n) };
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0 ; v < _n ; ++v)
            twice += set_size(_adj[v]);
        return twice / 2;
    }

    auto Graph::edges() const -> vector<pair<int, int> >
    {
        vector<pair<int, int> > result;
        for (int u = 0 ; u < _n ; ++u) {
            VertexSet later = _adj[u] & ~first_vertices(u + 1);
            for ( ; later ; later &= later - 1)
                result.emplace_back(u, std::countr_zero(later));
        }
        return result;
    }

    void Graph::add_edge(int u, int v)
    {
        check_vertex(*this, u);
        check_vertex(*this, v);
        if (u == v)
            throw InvalidArgument{ "loops are not permitted (vertex " + to_string(u) + ")" };
        _adj[u] |= vertex_bit(v);
        _adj[v] |= vertex_bit(u);
    }

    void Graph::remove_edge(int u, int v)
    {
        check_vertex(*this, u);
        check_vertex(*this, v);
        _adj[u] &= ~vertex_bit(v);
        _adj[v] &= ~vertex_bit(u);
    }

    void Graph::isolate(int v)
    {
        check_vertex(*this, v);
        for (VertexSet nb = _adj[v] ; nb ; nb &= nb - 1)
            _adj[std::countr_zero(nb)] &= ~vertex_bit(v);
        _adj[v] = 0;
    }

    auto Graph::operator== (const Graph & other) const -> bool
    {
        return _n == other._n && std::equal(_adj.begin(), _adj.begin() + _n, other._adj.begin());
    }

    auto complete_graph(int n) -> Graph
    {
        return complement(empty_graph(n));
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph{ n };
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw InvalidArgument{ "cycles need at least 3 vertices" };
        Graph g{ n };
        for (int v = 0 ; v < n ; ++v)
            g.add_edge(v, (v + 1) % n);
        return g;
    }

    auto path_graph(int n) -> Graph
    {
        Graph g{ n };
        for (int v = 0 ; v + 1 < n ; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    auto petersen_graph() -> Graph
    {
        Graph g{ 10 };
        for (int i = 0 ; i < 5 ; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }

    auto turan_graph(int n, int r) -> Graph
    {
        if (r < 1 || r > n)
            throw InvalidArgument{ "turan graph needs 1 <= r <= n, got n=" + to_string(n) + " r=" + to_string(r) };
        Graph g{ n };
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (u % r != v % r)
                    g.add_edge(u, v);
        return g;
    }

    auto turan_part_size(int n, int r, int part) -> int
    {
        return (n - part + r - 1) / r;
    }

    auto complement(const Graph & g) -> Graph
    {
        Graph result{ g.order() };
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v)
                if (! g.adjacent(u, v))
                    result.add_edge(u, v);
        return result;
    }

    auto components(const Graph & g) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        VertexSet unseen = g.vertices();
        while (unseen) {
            VertexSet component = unseen & -unseen, frontier = component;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                VertexSet fresh = g.neighbours(v) & ~component;
                component |= fresh;
                frontier |= fresh;
            }
            result.push_back(component);
            unseen &= ~component;
        }
        return result;
    }

    auto component_count(const Graph & g) -> int
    {
        return static_cast<int>(components(g).size());
    }

    auto induced_subgraph(const Graph & g, VertexSet keep) -> Graph
    {
        keep &= g.vertices();
        vector<int> index(g.order(), -1);
        int next = 0;
        for (VertexSet k = keep ; k ; k &= k - 1)
            index[std::countr_zero(k)] = next++;

        Graph result{ next };
        for (auto [u, v] : g.edges())
            if (index[u] >= 0 && index[v] >= 0)
                result.add_edge(index[u], index[v]);
        return result;
    }

    auto relabel(const Graph & g, std::span<const int> perm) -> Graph
    {
        if (static_cast<int>(perm.size()) != g.order())
            throw InvalidArgument{ "permutation size does not match graph order" };
        Graph result{ g.order() };
        for (auto [u, v] : g.edges())
            result.add_edge(perm[u], perm[v]);
        return result;
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        Graph result{ a.order() + b.order() };
        for (auto [u, v] : a.edges())
            result.add_edge(u, v);
        for (auto [u, v] : b.edges())
            result.add_edge(a.order() + u, a.order() + v);
        return result;
    }

    auto is_turan(const Graph & g, int r) -> bool
    {
        if (r < 1 || r > g.order())
            return false;

        // the complement of a complete multipartite graph is a disjoint union of cliques
        auto co = complement(g);
        auto parts = components(co);
        if (static_cast<int>(parts.size()) != r)
            return false;

        int smallest = g.order(), largest = 0;
        for (auto part : parts) {
            for (VertexSet p = part ; p ; p &= p - 1) {
                int v = std::countr_zero(p);
                if ((co.neighbours(v) | vertex_bit(v)) != part)
                    return false;
            }
            smallest = std::min(smallest, set_size(part));
            largest = std::max(largest, set_size(part));
        }
        return largest - smallest <= 1;
    }

    auto make_hairy(const HairySpec & spec) -> Graph
    {
        int base_n = spec.base.order();
        for (int a : spec.attachments)
            if (a < 0 || a >= base_n)
                throw InvalidArgument{ "attachment index " + to_string(a) + " out of range for a base graph on " + to_string(base_n) + " vertices" };

        int total = base_n + static_cast<int>(spec.attachments.size());
        if (total > max_vertices)
            throw InvalidArgument{ "hairy graph would have " + to_string(total) + " vertices, more than 64" };

        Graph result{ total };
        for (auto [u, v] : spec.base.edges())
            result.add_edge(u, v);
        int next = base_n;
        for (int a : spec.attachments)
            result.add_edge(a, next++);
        return result;
    }
}
