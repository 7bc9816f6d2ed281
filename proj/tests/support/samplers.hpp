#ifndef TDC_TESTS_SAMPLERS_HPP
#define TDC_TESTS_SAMPLERS_HPP

#include "tdc/generators.hpp"
#include "tdc/graph.hpp"

#include <random>

namespace tdc::testsupport {

struct Rng {
    std::mt19937_64 rng;
    explicit Rng(uint64_t seed) : rng(seed) {}
    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
    }
    int uniform_int(int lo, int hi)
    {
        return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    }
    uint64_t raw() { return rng(); }
};

inline Graph random_connected_graph(Rng& r, int n_lo, int n_hi,
                                    double p_lo = 0.2, double p_hi = 0.8)
{
    const int n = r.uniform_int(n_lo, n_hi);
    const double p = r.uniform(p_lo, p_hi);
    return random_connected(n, p, r.raw());
}

// Any graph on n vertices, connected or not (each pair an independent coin).
inline Graph random_graph(Rng& r, int n, double p)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (r.uniform(0, 1) < p) g.add_edge(i, j);
    return g;
}

// Random cotree: unions and joins of smaller pieces; root forced to a join
// so the result is connected. Cographs are exactly the P4-free graphs.
inline Graph random_cograph(Rng& r, int n, bool root_join = true)
{
    if (n == 1) return Graph(1);
    const int a = r.uniform_int(1, n - 1);
    Graph left = random_cograph(r, a, false);
    Graph right = random_cograph(r, n - a, false);
    const bool do_join = root_join || r.uniform_int(0, 1) == 1;
    return do_join ? join(left, right) : disjoint_union(left, right);
}

inline Graph linear_forest(const std::vector<int>& path_sizes)
{
    Graph g(0);
    for (int size : path_sizes) g = disjoint_union(g, path_graph(size));
    return g;
}

} // namespace tdc::testsupport

#endif
