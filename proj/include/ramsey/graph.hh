/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_GRAPH_HH
#define RAMSEY_GUARD_GRAPH_HH 1

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ramsey
{
    /// A set of vertices, one bit per vertex.
    using VertexSet = std::uint64_t;

    inline constexpr int max_vertices = 64;

    inline constexpr auto vertex_bit(int v) -> VertexSet
    {
        return VertexSet{ 1 } << v;
    }

    inline constexpr auto first_vertices(int n) -> VertexSet
    {
        return n >= 64 ? ~VertexSet{ 0 } : (vertex_bit(n) - 1);
    }

    inline auto set_size(VertexSet s) -> int
    {
        return std::popcount(s);
    }

    /**
     * Undirected simple graph on vertices 0 .. n-1, n between 1 and 64, stored
     * as one adjacency bitset per vertex. The mutators keep the adjacency
     * symmetric and loop free, so every reachable value satisfies the graph
     * invariants.
     */
    class Graph
    {
        private:
            int _n;
            std::array<VertexSet, max_vertices> _adj{};

        public:
            explicit Graph(int n);

            auto order() const -> int
            {
                return _n;
            }

            auto vertices() const -> VertexSet
            {
                return first_vertices(_n);
            }

            auto neighbours(int v) const -> VertexSet
            {
                return _adj[v];
            }

            auto adjacent(int u, int v) const -> bool
            {
                return (_adj[u] >> v) & 1;
            }

            auto degree(int v) const -> int
            {
                return set_size(_adj[v]);
            }

            auto rows() const -> std::span<const VertexSet>
            {
                return { _adj.data(), static_cast<std::size_t>(_n) };
            }

            auto edge_count() const -> int;

            /// Edges as (u, v) with u < v, in lexicographic order.
            auto edges() const -> std::vector<std::pair<int, int> >;

            void add_edge(int u, int v);
            void remove_edge(int u, int v);

            /// Removes every edge at v.
            void isolate(int v);

            auto operator== (const Graph & other) const -> bool;
    };

    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto petersen_graph() -> Graph;

    /// Balanced complete r-partite graph on n vertices; vertex i lies in part i mod r.
    auto turan_graph(int n, int r) -> Graph;

    /// Size of part `part` in turan_graph(n, r).
    auto turan_part_size(int n, int r, int part) -> int;

    auto complement(const Graph & g) -> Graph;

    /// Vertex sets of the connected components, ordered by smallest vertex.
    auto components(const Graph & g) -> std::vector<VertexSet>;

    auto component_count(const Graph & g) -> int;

    /// Subgraph induced by `keep`, relabelled 0 .. |keep|-1 in increasing vertex order.
    auto induced_subgraph(const Graph & g, VertexSet keep) -> Graph;

    /// Vertex v of g becomes vertex perm[v].
    auto relabel(const Graph & g, std::span<const int> perm) -> Graph;

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    /// True iff g is complete multipartite with exactly r parts whose sizes differ by at most one.
    auto is_turan(const Graph & g, int r) -> bool;

    /// A base graph plus one pendant edge per entry of `attachments`, each to a fresh vertex.
    struct HairySpec
    {
        Graph base;
        std::vector<int> attachments;
    };

    /// Pendant vertices are numbered v(base), v(base)+1, ... in attachment order.
    auto make_hairy(const HairySpec & spec) -> Graph;
}

#endif
