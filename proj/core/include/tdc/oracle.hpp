#ifndef TDC_ORACLE_HPP
#define TDC_ORACLE_HPP

#include "tdc/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tdc {

// Node budget for the subset searches; generous by default. A search that
// hits the budget reports so instead of returning a wrong answer.
struct SearchBudget {
    uint64_t max_nodes = UINT64_MAX;
};

// Total domination number; nullopt when the graph has an isolated vertex
// (including n = 1), i.e. no total dominating set exists.
std::optional<int> gamma_t(const Graph& g);

// Domination number (n >= 1 always has one).
int gamma(const Graph& g);

// gamma_t capped: value if gamma_t(g) <= cap, nullopt otherwise.
std::optional<int> gamma_t_at_most(const Graph& g, int cap);

// Budgeted variant for big instances: value, or nullopt with exceeded=true
// when the search budget runs out before an answer is proven.
struct BudgetedValue {
    std::optional<int> value;
    bool exceeded = false;
};
BudgetedValue gamma_t_budgeted(const Graph& g, const SearchBudget& budget);

struct TdsEnumeration {
    int size = 0;                        // gamma_t(g)
    std::vector<std::vector<int>> sets;  // sorted ids, lexicographic order
};
// All minimum total dominating sets. Throws when no TDS exists.
TdsEnumeration enumerate_min_tds(const Graph& g);

// True iff some minimum total dominating set D has a vertex with two or more
// neighbors inside D (so g[D] has a 3-vertex path as a subgraph).
bool has_min_tds_with_p3(const Graph& g);
BudgetedValue has_min_tds_with_p3_budgeted(const Graph& g, const SearchBudget& budget);

// Ground truth for the one-contraction question: does some edge e satisfy
// gamma_t(g/e) <= gamma_t(g) - 1? Requires g connected with n >= 2.
bool decide_by_definition(const Graph& g);

// Least number of contractions (up to max_depth, breadth-first over
// contraction sequences with exact-labeled-graph dedup) that lowers gamma_t
// by at least one. nullopt = irreducible within max_depth; graphs with
// gamma_t <= 2 are irreducible outright.
std::optional<int> ct_gamma_t(const Graph& g, int max_depth = 3);

// Some edge uv with N[u] ∪ N[v] = V, if one exists. On a connected graph
// with n >= 2 this is equivalent to gamma_t(g) = 2.
std::optional<Edge> find_dominating_edge(const Graph& g);

// Minimum subset S of `candidates` with N(x) ∩ S nonempty for every
// x in `targets`; nullopt if none of size <= cap exists.
std::optional<int> min_dominating_subset(const Graph& g, const Bitset& targets,
                                         const Bitset& candidates, int cap);
// All such subsets of exactly the minimum size, lexicographically sorted.
std::vector<std::vector<int>> enumerate_min_dominating_subsets(
    const Graph& g, const Bitset& targets, const Bitset& candidates, int min_size);

// Minimum relaxed total-dominating count: every vertex outside `predominated`
// needs a neighbor in the set. Used for lower-bound checks on gadget pieces.
std::optional<int> min_tds_with_predominated(const Graph& g,
                                             const Bitset& predominated, int cap);

} // namespace tdc

#endif
