#ifndef TDC_GENERATORS_HPP
#define TDC_GENERATORS_HPP

#include "tdc/graph.hpp"

#include <cstdint>

namespace tdc {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// One center (id 0) with n-1 leaves; star_graph(4) is the claw.
Graph star_graph(int n);

Graph disjoint_union(const Graph& a, const Graph& b);
// Disjoint union plus all edges between the two sides.
Graph join(const Graph& a, const Graph& b);

// Erdos-Renyi G(n,p) resampled until connected; deterministic under seed.
// Throws after too many failed draws (e.g. p = 0 with n > 1).
Graph random_connected(int n, double p, uint64_t seed);

} // namespace tdc

#endif
