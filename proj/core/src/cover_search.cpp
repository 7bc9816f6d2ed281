#include "cover_search.hpp"

namespace tdc::detail {

namespace {

struct Searcher {
    const CoverProblem& p;
    const SearchLimits& limits;
    SearchStats& stats;

    std::vector<Bitset> dominated_by; // per position: candidates covering it
    Bitset chosen;
    Bitset forbidden;
    Bitset covered_universe;
    int chosen_count = 0;

    int best; // exact-min mode: best cover size found (cap+1 if none)
    const std::function<bool(const Bitset&)>* visit = nullptr;
    int cap_enum = 0;
    bool stopped = false;

    explicit Searcher(const CoverProblem& prob, const SearchLimits& lim,
                      SearchStats& st)
        : p(prob), limits(lim), stats(st),
          dominated_by(prob.n, Bitset(prob.n)),
          chosen(prob.n), forbidden(prob.n), covered_universe(prob.n), best(0)
    {
        for (int v = p.candidates.first(); v >= 0; v = p.candidates.next(v + 1)) {
            Bitset hits = p.rows[v];
            hits &= p.universe;
            for (int pos = hits.first(); pos >= 0; pos = hits.next(pos + 1))
                dominated_by[pos].set(v);
        }
    }

    // Greedy packing of uncovered positions whose dominator sets are pairwise
    // disjoint; each packed position forces one distinct further pick. A
    // position with no available dominator makes the node infeasible.
    int packing_lower_bound(const Bitset& unc, const Bitset& avail) const
    {
        Bitset used(p.n);
        int packed = 0;
        for (int pos = unc.first(); pos >= 0; pos = unc.next(pos + 1)) {
            Bitset doms = dominated_by[pos];
            doms &= avail;
            if (doms.none()) return unc.count() + packed + 1;
            if (!doms.intersects(used)) {
                ++packed;
                used |= doms;
            }
        }
        return packed;
    }

    void run_min(int depth_cap)
    {
        best = depth_cap + 1;
        dfs();
    }

    void run_enum(int depth_cap, const std::function<bool(const Bitset&)>& v)
    {
        visit = &v;
        cap_enum = depth_cap;
        dfs();
    }

    void dfs()
    {
        if (stopped || stats.exceeded) return;
        if (++stats.nodes > limits.max_nodes) {
            stats.exceeded = true;
            return;
        }
        Bitset unc = p.universe;
        unc.subtract(covered_universe);
        if (unc.none()) {
            if (visit) {
                if (!(*visit)(chosen)) stopped = true;
            } else if (chosen_count < best) {
                best = chosen_count;
            }
            return;
        }
        const int budget = (visit ? cap_enum : best - 1) - chosen_count;
        if (budget <= 0) return;

        Bitset avail = p.candidates;
        avail.subtract(chosen);
        avail.subtract(forbidden);
        if (packing_lower_bound(unc, avail) > budget) return;

        // Branch on the dominators of the lowest uncovered position; each
        // branch forbids the earlier picks, partitioning the cover space.
        Bitset doms = dominated_by[unc.first()];
        doms &= avail;
        std::vector<int> picks = doms.to_vector();
        for (size_t i = 0; i < picks.size() && !stopped && !stats.exceeded; ++i) {
            const int v = picks[i];
            chosen.set(v);
            ++chosen_count;
            Bitset saved_cov = covered_universe;
            covered_universe |= p.rows[v];
            covered_universe &= p.universe;

            dfs();

            covered_universe = std::move(saved_cov);
            chosen.reset(v);
            --chosen_count;
            forbidden.set(v);
        }
        for (int v : picks) forbidden.reset(v);
    }
};

} // namespace

std::optional<int> min_cover_size(const CoverProblem& p, int cap,
                                  const SearchLimits& limits, SearchStats& stats)
{
    if (cap < 0) return std::nullopt;
    if (p.universe.none()) return 0;
    Searcher s(p, limits, stats);
    s.run_min(cap);
    if (stats.exceeded || s.best > cap) return std::nullopt;
    return s.best;
}

void for_each_cover(const CoverProblem& p, int cap, const SearchLimits& limits,
                    SearchStats& stats, const std::function<bool(const Bitset&)>& visit)
{
    if (cap < 0) return;
    if (p.universe.none()) {
        visit(Bitset(p.n));
        return;
    }
    Searcher s(p, limits, stats);
    s.run_enum(cap, visit);
}

std::optional<Bitset> greedy_cover(const CoverProblem& p)
{
    Bitset chosen(p.n);
    Bitset unc = p.universe;
    while (unc.any()) {
        int best_v = -1, best_gain = 0;
        for (int v = p.candidates.first(); v >= 0; v = p.candidates.next(v + 1)) {
            if (chosen.test(v)) continue;
            int gain = p.rows[v].intersection_count(unc);
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
            }
        }
        if (best_v < 0) return std::nullopt;
        chosen.set(best_v);
        unc.subtract(p.rows[best_v]);
    }
    return chosen;
}

} // namespace tdc::detail
