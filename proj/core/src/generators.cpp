#include "tdc/generators.hpp"

#include <random>
#include <stdexcept>

namespace tdc {

Graph path_graph(int n)
{
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n)
{
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int n)
{
    if (n < 1) throw std::invalid_argument("star_graph: n must be >= 1");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    const int na = a.vertex_count();
    Graph g(na + b.vertex_count());
    for (auto e : a.edges()) g.add_edge(e.u, e.v);
    for (auto e : b.edges()) g.add_edge(na + e.u, na + e.v);
    return g;
}

Graph join(const Graph& a, const Graph& b)
{
    const int na = a.vertex_count();
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < b.vertex_count(); ++v) g.add_edge(u, na + v);
    return g;
}

Graph random_connected(int n, double p, uint64_t seed)
{
    if (n < 1) throw std::invalid_argument("random_connected: n must be >= 1");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_connected: p must be in [0,1]");
    std::mt19937_64 rng(seed);
    // Raw 53-bit draws keep the sequence independent of the standard
    // library's distribution implementations.
    auto coin = [&]() { return (rng() >> 11) * 0x1.0p-53 < p; };
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin()) g.add_edge(i, j);
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("random_connected: no connected draw found");
}

} // namespace tdc
