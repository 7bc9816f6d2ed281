#ifndef TDC_COVER_SEARCH_HPP
#define TDC_COVER_SEARCH_HPP

#include "tdc/bitset.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace tdc::detail {

// Minimum cover: pick vertices from `candidates` so that the union of their
// cover rows contains `universe`. Total domination, domination and the
// partial V2-domination queries are all instances (row = open or closed
// neighborhood, universe possibly shrunk by pre-dominated vertices).
struct CoverProblem {
    int n = 0;                   // id space of both candidates and positions
    std::vector<Bitset> rows;    // rows[v] = positions covered by picking v
    Bitset candidates;           // pickable vertex ids
    Bitset universe;             // positions that must be covered
};

struct SearchLimits {
    uint64_t max_nodes = UINT64_MAX;
};

struct SearchStats {
    uint64_t nodes = 0;
    bool exceeded = false;
};

// Exact minimum cover size, or nullopt if no cover of size <= cap exists.
// Branches on the dominators of the lowest uncovered position with
// forbidden-set splitting, pruned by a greedy disjoint-dominator-set
// packing lower bound.
std::optional<int> min_cover_size(const CoverProblem& p, int cap,
                                  const SearchLimits& limits, SearchStats& stats);

// Visits covers of size <= cap. `cap` must equal the true minimum cover
// size; then every minimum cover is visited exactly once (as a set). The
// visitor returns false to stop the search early.
void for_each_cover(const CoverProblem& p, int cap, const SearchLimits& limits,
                    SearchStats& stats, const std::function<bool(const Bitset&)>& visit);

// Greedy cover for upper bounds; empty optional when some position has no
// available dominator.
std::optional<Bitset> greedy_cover(const CoverProblem& p);

} // namespace tdc::detail

#endif
