#include "tdc/oracle.hpp"

#include "cover_search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tdc {

namespace {

detail::CoverProblem tds_problem(const Graph& g)
{
    detail::CoverProblem p;
    p.n = g.vertex_count();
    p.rows.reserve(p.n);
    for (int v = 0; v < p.n; ++v) p.rows.push_back(g.neighbors(v));
    p.candidates = Bitset(p.n, true);
    p.universe = Bitset(p.n, true);
    return p;
}

detail::CoverProblem ds_problem(const Graph& g)
{
    detail::CoverProblem p;
    p.n = g.vertex_count();
    p.rows.reserve(p.n);
    for (int v = 0; v < p.n; ++v) p.rows.push_back(g.closed_neighborhood(v));
    p.candidates = Bitset(p.n, true);
    p.universe = Bitset(p.n, true);
    return p;
}

int greedy_cap(const detail::CoverProblem& p)
{
    auto greedy = detail::greedy_cover(p);
    return greedy ? greedy->count() : -1;
}

std::vector<std::vector<int>> sorted_id_lists(std::vector<Bitset> sets)
{
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.to_vector());
    std::sort(out.begin(), out.end());
    return out;
}

// Serialized adjacency used to dedup identically-labeled graphs in the
// contraction-sequence search.
std::vector<uint32_t> labeled_key(const Graph& g)
{
    std::vector<uint32_t> key;
    key.push_back(static_cast<uint32_t>(g.vertex_count()));
    for (auto e : g.edges()) {
        key.push_back(static_cast<uint32_t>(e.u));
        key.push_back(static_cast<uint32_t>(e.v));
    }
    return key;
}

} // namespace

std::optional<int> gamma_t(const Graph& g)
{
    if (g.vertex_count() == 0 || g.has_isolated_vertex()) return std::nullopt;
    auto p = tds_problem(g);
    int cap = greedy_cap(p);
    detail::SearchLimits limits;
    detail::SearchStats stats;
    auto r = detail::min_cover_size(p, cap, limits, stats);
    if (!r) throw std::logic_error("gamma_t: greedy cap missed");
    return r;
}

int gamma(const Graph& g)
{
    if (g.vertex_count() < 1) throw std::invalid_argument("gamma: empty graph");
    auto p = ds_problem(g);
    int cap = greedy_cap(p);
    detail::SearchLimits limits;
    detail::SearchStats stats;
    auto r = detail::min_cover_size(p, cap, limits, stats);
    if (!r) throw std::logic_error("gamma: greedy cap missed");
    return *r;
}

std::optional<int> gamma_t_at_most(const Graph& g, int cap)
{
    if (g.vertex_count() == 0 || g.has_isolated_vertex()) return std::nullopt;
    auto p = tds_problem(g);
    int greedy = greedy_cap(p);
    detail::SearchLimits limits;
    detail::SearchStats stats;
    return detail::min_cover_size(p, std::min(cap, greedy), limits, stats);
}

BudgetedValue gamma_t_budgeted(const Graph& g, const SearchBudget& budget)
{
    if (g.vertex_count() == 0 || g.has_isolated_vertex()) return {std::nullopt, false};
    auto p = tds_problem(g);
    int cap = greedy_cap(p);
    detail::SearchLimits limits{budget.max_nodes};
    detail::SearchStats stats;
    auto r = detail::min_cover_size(p, cap, limits, stats);
    if (stats.exceeded) return {std::nullopt, true};
    if (!r) throw std::logic_error("gamma_t_budgeted: greedy cap missed");
    return {r, false};
}

TdsEnumeration enumerate_min_tds(const Graph& g)
{
    auto size = gamma_t(g);
    if (!size) throw std::invalid_argument("enumerate_min_tds: graph has no total dominating set");
    auto p = tds_problem(g);
    std::vector<Bitset> found;
    detail::SearchLimits limits;
    detail::SearchStats stats;
    detail::for_each_cover(p, *size, limits, stats, [&](const Bitset& s) {
        found.push_back(s);
        return true;
    });
    return {*size, sorted_id_lists(std::move(found))};
}

bool has_min_tds_with_p3(const Graph& g)
{
    auto r = has_min_tds_with_p3_budgeted(g, SearchBudget{});
    return r.value.value_or(0) != 0;
}

BudgetedValue has_min_tds_with_p3_budgeted(const Graph& g, const SearchBudget& budget)
{
    if (g.vertex_count() == 0 || g.has_isolated_vertex())
        throw std::invalid_argument("has_min_tds_with_p3: graph has no total dominating set");
    detail::SearchLimits limits{budget.max_nodes};
    detail::SearchStats stats;
    auto p = tds_problem(g);
    int cap = greedy_cap(p);
    auto size = detail::min_cover_size(p, cap, limits, stats);
    if (stats.exceeded) return {std::nullopt, true};
    bool hit = false;
    detail::for_each_cover(p, *size, limits, stats, [&](const Bitset& s) {
        if (set_contains_p3(g, s)) {
            hit = true;
            return false;
        }
        return true;
    });
    if (stats.exceeded) return {std::nullopt, true};
    return {hit ? 1 : 0, false};
}

bool decide_by_definition(const Graph& g)
{
    if (g.vertex_count() < 2)
        throw std::invalid_argument("decide_by_definition: need n >= 2");
    if (!g.is_connected())
        throw std::invalid_argument("decide_by_definition: graph must be connected");
    const int base = *gamma_t(g);
    for (auto e : g.edges()) {
        Graph contracted = contract_edge(g, e).graph;
        if (contracted.vertex_count() == 0 || contracted.has_isolated_vertex())
            continue; // no total dominating set after contraction
        if (gamma_t_at_most(contracted, base - 1)) return true;
    }
    return false;
}

std::optional<int> ct_gamma_t(const Graph& g, int max_depth)
{
    if (!g.is_connected())
        throw std::invalid_argument("ct_gamma_t: graph must be connected");
    auto base = gamma_t(g);
    if (!base || *base <= 2) return std::nullopt;

    std::vector<Graph> level{g};
    std::set<std::vector<uint32_t>> seen{labeled_key(g)};
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::vector<Graph> next;
        for (const auto& h : level) {
            for (auto e : h.edges()) {
                Graph contracted = contract_edge(h, e).graph;
                if (contracted.vertex_count() < 2) continue;
                if (contracted.has_isolated_vertex()) continue;
                if (gamma_t_at_most(contracted, *base - 1)) return depth;
                auto key = labeled_key(contracted);
                if (seen.insert(std::move(key)).second)
                    next.push_back(std::move(contracted));
            }
        }
        level = std::move(next);
    }
    return std::nullopt;
}

std::optional<Edge> find_dominating_edge(const Graph& g)
{
    const Bitset all = g.all_vertices();
    for (auto e : g.edges()) {
        Bitset cov = g.closed_neighborhood(e.u);
        cov |= g.closed_neighborhood(e.v);
        if (cov == all) return e;
    }
    return std::nullopt;
}

std::optional<int> min_dominating_subset(const Graph& g, const Bitset& targets,
                                         const Bitset& candidates, int cap)
{
    detail::CoverProblem p;
    p.n = g.vertex_count();
    for (int v = 0; v < p.n; ++v) {
        Bitset row = g.neighbors(v);
        row &= targets;
        p.rows.push_back(std::move(row));
    }
    p.candidates = candidates;
    p.universe = targets;
    detail::SearchLimits limits;
    detail::SearchStats stats;
    return detail::min_cover_size(p, cap, limits, stats);
}

std::vector<std::vector<int>> enumerate_min_dominating_subsets(
    const Graph& g, const Bitset& targets, const Bitset& candidates, int min_size)
{
    detail::CoverProblem p;
    p.n = g.vertex_count();
    for (int v = 0; v < p.n; ++v) {
        Bitset row = g.neighbors(v);
        row &= targets;
        p.rows.push_back(std::move(row));
    }
    p.candidates = candidates;
    p.universe = targets;
    std::vector<Bitset> found;
    detail::SearchLimits limits;
    detail::SearchStats stats;
    detail::for_each_cover(p, min_size, limits, stats, [&](const Bitset& s) {
        found.push_back(s);
        return true;
    });
    return sorted_id_lists(std::move(found));
}

std::optional<int> min_tds_with_predominated(const Graph& g,
                                             const Bitset& predominated, int cap)
{
    detail::CoverProblem p;
    p.n = g.vertex_count();
    for (int v = 0; v < p.n; ++v) p.rows.push_back(g.neighbors(v));
    p.candidates = Bitset(p.n, true);
    p.universe = Bitset(p.n, true);
    p.universe.subtract(predominated);
    detail::SearchLimits limits;
    detail::SearchStats stats;
    return detail::min_cover_size(p, cap, limits, stats);
}

} // namespace tdc
