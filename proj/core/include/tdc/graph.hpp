#ifndef TDC_GRAPH_HPP
#define TDC_GRAPH_HPP

#include "tdc/bitset.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tdc {

// Unordered vertex pair, canonicalized so u < v.
struct Edge {
    int u, v;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a)
    {
        if (a == b) throw std::invalid_argument("edge endpoints must differ");
    }
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const
    {
        return u != o.u ? u < o.u : v < o.v;
    }
};

// Simple undirected graph on dense ids 0..n-1, adjacency kept as one bitset
// row per vertex. No loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges)
    {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const
    {
        int deg = 0;
        for (const auto& row : adj_) deg += row.count();
        return deg / 2;
    }

    void add_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const
    {
        return u != v && in_range(u) && in_range(v) && adj_[u].test(v);
    }
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    Bitset closed_neighborhood(int v) const
    {
        Bitset s = adj_[v];
        s.set(v);
        return s;
    }
    // Open neighborhood of a set (union of rows; may intersect the set).
    Bitset neighborhood_of(const Bitset& s) const
    {
        Bitset out(n_);
        s.for_each([&](int v) { out |= adj_[v]; });
        return out;
    }
    Bitset closed_neighborhood_of(const Bitset& s) const
    {
        Bitset out = neighborhood_of(s);
        out |= s;
        return out;
    }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    Bitset all_vertices() const { return Bitset(n_, true); }

    bool is_connected() const;
    bool has_isolated_vertex() const
    {
        for (int v = 0; v < n_; ++v)
            if (adj_[v].none()) return true;
        return false;
    }

    bool operator==(const Graph& o) const
    {
        return n_ == o.n_ && adj_ == o.adj_;
    }

private:
    bool in_range(int v) const { return v >= 0 && v < n_; }
    void check_vertex(int v) const
    {
        if (!in_range(v)) throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
};

// Contraction result: the merged vertex takes min(u,v), ids above max(u,v)
// shift down by one. vertex_map[old] = id in the contracted graph.
struct Contraction {
    Graph graph;
    std::vector<int> vertex_map;
};

Contraction contract_edge(const Graph& g, Edge e);

// Replaces edge e by a path through k fresh internal vertices (appended as
// ids n..n+k-1 in path order from e.u to e.v).
Graph k_subdivide(const Graph& g, Edge e, int k);

// Multi-source BFS distance between vertex sets; 0 if they intersect,
// nullopt if unreachable.
std::optional<int> set_distance(const Graph& g, const Bitset& s, const Bitset& t);

// Induced subgraph on `keep`, relabeled densely in increasing id order.
// old_to_new, when given, receives the relabel map (-1 for dropped ids).
Graph induced_subgraph(const Graph& g, const Bitset& keep,
                       std::vector<int>* old_to_new = nullptr);

// Backtracking search for an induced copy of `pattern` in g (exact adjacency
// on the image). Returns the image vertex set of the first embedding found.
std::optional<VertexSet> find_induced(const Graph& g, const Graph& pattern);
bool contains_induced(const Graph& g, const Graph& pattern);
bool is_h_free(const Graph& g, const std::vector<Graph>& family);

// True when some vertex of d has at least two d-neighbors, i.e. g[d] has a
// 3-vertex path as a subgraph.
bool set_contains_p3(const Graph& g, const Bitset& d);

} // namespace tdc

#endif
