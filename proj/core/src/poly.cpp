#include "tdc/poly.hpp"

#include "tdc/generators.hpp"
#include "tdc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdc {

namespace {

Graph p4_plus_p3s(int k)
{
    Graph pattern = path_graph(4);
    for (int i = 1; i < k; ++i) pattern = disjoint_union(pattern, path_graph(3));
    return pattern;
}

void require(bool cond, const char* what)
{
    if (!cond) throw std::invalid_argument(what);
}

bool should_verify(const Graph& g, const PolyOptions& opts)
{
    return opts.verify_preconditions && g.vertex_count() <= opts.verify_max_n;
}

// Connected components of g restricted to `within`.
std::vector<VertexSet> components_within(const Graph& g, const Bitset& within)
{
    std::vector<VertexSet> comps;
    Bitset remaining = within;
    while (remaining.any()) {
        Bitset comp(g.vertex_count());
        Bitset frontier(g.vertex_count());
        int start = remaining.first();
        comp.set(start);
        frontier.set(start);
        while (frontier.any()) {
            Bitset next = g.neighborhood_of(frontier);
            next &= within;
            next.subtract(comp);
            comp |= next;
            frontier = std::move(next);
        }
        remaining.subtract(comp);
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_clique(const Graph& g, const Bitset& s)
{
    for (int v = s.first(); v >= 0; v = s.next(v + 1)) {
        Bitset others = s;
        others.reset(v);
        if (!others.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

// Answer on graphs with bounded total domination number: a dominating edge
// means no, otherwise the P3 criterion on the minimum sets decides.
bool decide_bounded(const Graph& g)
{
    if (find_dominating_edge(g)) return false;
    return has_min_tds_with_p3(g);
}

} // namespace

std::optional<AbcPartition> compute_partition(const Graph& g, int k)
{
    if (k < 1) throw std::invalid_argument("compute_partition: k must be >= 1");
    auto witness = find_induced(g, p4_plus_p3s(k));
    if (!witness) return std::nullopt;
    AbcPartition part{*witness, Bitset(g.vertex_count()), Bitset(g.vertex_count())};
    Bitset closed = g.closed_neighborhood_of(part.a);
    part.b = closed;
    part.b.subtract(part.a);
    part.c = g.all_vertices();
    part.c.subtract(closed);
    return part;
}

RegularCliqueSet compute_regular_cliques(const Graph& g, const AbcPartition& part, int k)
{
    RegularCliqueSet out;
    out.all_cliques = components_within(g, part.c);
    for (const auto& comp : out.all_cliques)
        if (!is_clique(g, comp))
            throw std::invalid_argument(
                "compute_regular_cliques: g[c] is not a disjoint union of cliques");

    const Graph p4 = path_graph(4);
    for (size_t i = 0; i < out.all_cliques.size(); ++i) {
        const auto& clique = out.all_cliques[i];
        Bitset closed = g.closed_neighborhood_of(clique);
        if (contains_induced(induced_subgraph(g, closed), p4)) continue;
        bool complete_b = false;
        for (int b = part.b.first(); b >= 0 && !complete_b; b = part.b.next(b + 1))
            if (clique.is_subset_of(g.neighbors(b))) complete_b = true;
        if (complete_b) continue;
        out.kprime.push_back(static_cast<int>(i));
    }

    // Pairwise clique distances over the filtered set.
    const int q = static_cast<int>(out.kprime.size());
    std::vector<std::vector<int>> dist(q, std::vector<int>(q, -1));
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            auto d = set_distance(g, out.all_cliques[out.kprime[i]],
                                  out.all_cliques[out.kprime[j]]);
            dist[i][j] = dist[j][i] = d ? *d : -1; // -1: unreachable, treat as far
        }
    auto far = [&](int i, int j) { return dist[i][j] < 0 || dist[i][j] >= 4; };

    // K is regular when k partners from kprime can be packed so that K and
    // the partners are pairwise at distance >= 4. Exact search over the
    // candidate combinations; the candidate pool is small at this scale.
    for (int i = 0; i < q; ++i) {
        std::vector<int> picked{i};
        std::function<bool(int)> extend = [&](int need) {
            if (need == 0) return true;
            int last = picked.back() == i && picked.size() == 1 ? -1 : picked.back();
            for (int j = last + 1; j < q; ++j) {
                if (j == i) continue;
                bool ok = true;
                for (int p : picked)
                    if (!far(p, j)) { ok = false; break; }
                if (!ok) continue;
                picked.push_back(j);
                if (extend(need - 1)) return true;
                picked.pop_back();
            }
            return false;
        };
        if (extend(k)) out.regular.push_back(out.kprime[i]);
    }
    return out;
}

long long f_bound(int a_size, int k)
{
    if (k < 1) throw std::invalid_argument("f_bound: k must be >= 1");
    const long long s = static_cast<long long>(k) * (k + 3) / 2;
    return 3LL * (a_size - 1) + s * (s + 1) + k + 1;
}

bool decide_p4_free(const Graph& g, const PolyOptions& opts)
{
    require(g.vertex_count() >= 2, "decide_p4_free: need n >= 2");
    if (should_verify(g, opts)) {
        require(g.is_connected(), "decide_p4_free: graph must be connected");
        require(is_h_free(g, {path_graph(4)}), "decide_p4_free: graph is not P4-free");
        // A connected cograph on >= 2 vertices is a join, so a dominating
        // edge always exists.
        if (!find_dominating_edge(g))
            throw std::logic_error("decide_p4_free: no dominating edge found");
    }
    return false;
}

bool decide_p5_free(const Graph& g, const PolyOptions& opts)
{
    require(g.vertex_count() >= 2, "decide_p5_free: need n >= 2");
    if (should_verify(g, opts)) {
        require(g.is_connected(), "decide_p5_free: graph must be connected");
        require(is_h_free(g, {path_graph(5)}), "decide_p5_free: graph is not P5-free");
    }
    return !find_dominating_edge(g).has_value();
}

bool decide_p4_kp3_free(const Graph& g, int k, const PolyOptions& opts)
{
    require(k >= 0, "decide_p4_kp3_free: k must be >= 0");
    if (k == 0) return decide_p4_free(g, opts);
    require(g.vertex_count() >= 2, "decide_p4_kp3_free: need n >= 2");
    if (should_verify(g, opts)) {
        require(g.is_connected(), "decide_p4_kp3_free: graph must be connected");
        require(is_h_free(g, {p4_plus_p3s(k + 1)}),
                "decide_p4_kp3_free: graph is not (P4+kP3)-free");
    }

    // Without an induced P4+(k-1)P3 the graph lies in the next smaller
    // class; recurse down to the P4-free base.
    auto part = compute_partition(g, k);
    if (!part) {
        PolyOptions inner = opts;
        inner.verify_preconditions = false; // membership follows from the recursion guard
        return decide_p4_kp3_free(g, k - 1, inner);
    }

    const long long f = f_bound(part->a.count(), k);
    auto cliques = compute_regular_cliques(g, *part, k);

    if (cliques.regular.empty()) {
        auto value = gamma_t_at_most(g, static_cast<int>(std::min<long long>(f, g.vertex_count())));
        if (!value) return true; // every minimum set is larger than f(k)
        return decide_bounded(g);
    }

    // Two regular cliques close to each other force a yes.
    for (size_t i = 0; i < cliques.regular.size(); ++i)
        for (size_t j = i + 1; j < cliques.regular.size(); ++j) {
            auto d = set_distance(g, cliques.all_cliques[cliques.regular[i]],
                                  cliques.all_cliques[cliques.regular[j]]);
            if (d && *d <= 3) return true;
        }

    Bitset closed_r(g.vertex_count());
    for (int idx : cliques.regular) closed_r |= g.closed_neighborhood_of(cliques.all_cliques[idx]);
    Bitset v1 = g.neighborhood_of(closed_r);
    v1.subtract(closed_r);
    Bitset v2 = g.all_vertices();
    v2.subtract(closed_r);
    v2.subtract(v1);
    if (v2.none()) return false;

    Bitset ground = v1;
    ground |= v2;
    const int cap = static_cast<int>(std::min<long long>(2 * f, ground.count()));
    auto min_size = min_dominating_subset(g, v2, ground, cap);
    if (!min_size) return true; // nothing of size <= 2f(k) dominates V2

    auto family = enumerate_min_dominating_subsets(g, v2, ground, *min_size);
    for (const auto& ids : family) {
        Bitset s(g.vertex_count());
        for (int v : ids) s.set(v);
        if (set_contains_p3(g, s)) return true;
        if (s.intersects(v1)) return true;
    }
    // Reaching here every minimum set avoided V1 and carried no 3-vertex
    // path, which forces each one to induce a perfect matching on itself.
    for (const auto& ids : family) {
        Bitset s(g.vertex_count());
        for (int v : ids) s.set(v);
        for (int v : ids)
            if (g.neighbors(v).intersection_count(s) != 1)
                throw std::logic_error(
                    "decide_p4_kp3_free: no-answer set is not an induced matching");
    }
    return false;
}

bool lift_plus_k1(const Graph& g, const Graph& h,
                  const std::function<bool(const Graph&)>& base, int q)
{
    if (q < 0) q = h.vertex_count();
    if (is_h_free(g, {h})) return base(g);
    // An induced copy of h dominates g, so gamma_t(g) <= 2q and the bounded
    // procedure applies.
    auto value = gamma_t_at_most(g, 2 * q);
    if (!value)
        throw std::logic_error("lift_plus_k1: bound violated; input not (h+K1)-free?");
    return decide_bounded(g);
}

namespace {

struct HintShape {
    bool linear_forest = false;
    std::vector<int> path_sizes; // per component, when linear forest
};

HintShape analyze_hint(const Graph& h)
{
    HintShape shape;
    const int n = h.vertex_count();
    for (int v = 0; v < n; ++v)
        if (h.degree(v) >= 3) return shape;
    auto comps = components_within(h, Bitset(n, true));
    for (const auto& comp : comps) {
        int edges = 0;
        for (int v = comp.first(); v >= 0; v = comp.next(v + 1))
            edges += h.neighbors(v).count();
        edges /= 2;
        if (edges != comp.count() - 1) return shape; // cycle component
        shape.path_sizes.push_back(comp.count());
    }
    shape.linear_forest = true;
    std::sort(shape.path_sizes.rbegin(), shape.path_sizes.rend());
    return shape;
}

} // namespace

bool decide_auto(const Graph& g, const std::optional<Graph>& h_hint,
                 const PolyOptions& opts)
{
    if (!g.is_connected())
        throw std::invalid_argument("decide_auto: graph must be connected");
    if (!h_hint) return decide_by_definition(g);
    const HintShape shape = analyze_hint(*h_hint);
    auto fallback = [&]() { return decide_by_definition(g); };
    if (!shape.linear_forest || shape.path_sizes.empty()) return fallback();
    if (shape.path_sizes.front() >= 6) return fallback();

    // Verify the class actually applies before trusting a solver with it.
    if (g.vertex_count() <= opts.verify_max_n && !is_h_free(g, {*h_hint}))
        return fallback();

    const auto& sizes = shape.path_sizes;
    const int longest = sizes.front();
    if (longest == 5) {
        // Solvable only as P5 + tK1; any second component with an edge is
        // out of reach of the class solvers.
        for (size_t i = 1; i < sizes.size(); ++i)
            if (sizes[i] >= 2) return fallback();
        const int t = static_cast<int>(sizes.size()) - 1;
        PolyOptions inner = opts;
        inner.verify_preconditions = false; // hint-freeness checked above
        std::function<bool(const Graph&, int)> solve = [&](const Graph& gg, int level) {
            if (level == 0) return decide_p5_free(gg, inner);
            Graph smaller = path_graph(5);
            for (int i = 1; i < level; ++i) smaller = disjoint_union(smaller, path_graph(1));
            return lift_plus_k1(gg, smaller,
                                [&](const Graph& ggg) { return solve(ggg, level - 1); });
        };
        return solve(g, t);
    }
    if (std::count(sizes.begin(), sizes.end(), 4) >= 2) return fallback();
    // Every component fits in a P3 slot (or the single P4 slot), so the
    // graph is (P4+kP3)-free with k = number of remaining components.
    const int k = static_cast<int>(sizes.size()) - 1;
    PolyOptions inner = opts;
    inner.verify_preconditions = false;
    return decide_p4_kp3_free(g, k, inner);
}

} // namespace tdc
