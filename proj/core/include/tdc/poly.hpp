#ifndef TDC_POLY_HPP
#define TDC_POLY_HPP

#include "tdc/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace tdc {

// A/B/C decomposition used by the (P4+kP3)-free decision procedure:
// g[a] is an induced P4 + (k-1)P3, b holds the vertices at distance one
// from a, c the rest (then g[c] is a disjoint union of cliques whenever g
// is (P4+kP3)-free).
struct AbcPartition {
    VertexSet a, b, c;
};

std::optional<AbcPartition> compute_partition(const Graph& g, int k);

struct RegularCliqueSet {
    std::vector<VertexSet> all_cliques; // components of g[c], each a clique
    std::vector<int> kprime;            // indices: N[K] P4-free, no B-vertex complete to K
    std::vector<int> regular;           // indices: k pairwise-distance->=4 partners in kprime
};

RegularCliqueSet compute_regular_cliques(const Graph& g, const AbcPartition& part, int k);

// 3(|A|-1) + s(s+1) + k + 1 with s = k(k+3)/2.
long long f_bound(int a_size, int k);

struct PolyOptions {
    bool verify_preconditions = true;
    int verify_max_n = 40; // pattern checks are skipped above this size
};

// Connected P4-free graphs on >= 2 vertices always have a dominating edge,
// so the answer is always no.
bool decide_p4_free(const Graph& g, const PolyOptions& opts = {});

// P5-free graphs: no exactly when a dominating edge exists.
bool decide_p5_free(const Graph& g, const PolyOptions& opts = {});

// The six-step procedure for (P4+kP3)-free graphs (k >= 0).
bool decide_p4_kp3_free(const Graph& g, int k, const PolyOptions& opts = {});

// Decision on (h+K1)-free graphs from a decision procedure for h-free
// graphs. q defaults to |V(h)|.
bool lift_plus_k1(const Graph& g, const Graph& h,
                  const std::function<bool(const Graph&)>& base, int q = -1);

// Dispatcher: routes through the class solvers when the hint identifies an
// applicable class (membership verified at small scale), otherwise falls
// back to the definition oracle.
bool decide_auto(const Graph& g, const std::optional<Graph>& h_hint = std::nullopt,
                 const PolyOptions& opts = {});

} // namespace tdc

#endif
