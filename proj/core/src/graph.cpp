#include "tdc/graph.hpp"

#include <algorithm>

namespace tdc {

bool Graph::is_connected() const
{
    if (n_ <= 1) return true;
    Bitset seen(n_);
    seen.set(0);
    Bitset frontier(n_);
    frontier.set(0);
    while (frontier.any()) {
        Bitset next = neighborhood_of(frontier);
        next.subtract(seen);
        seen |= next;
        frontier = std::move(next);
    }
    return seen.count() == n_;
}

Contraction contract_edge(const Graph& g, Edge e)
{
    if (!g.has_edge(e)) throw std::invalid_argument("contract_edge: not an edge");
    const int n = g.vertex_count();
    std::vector<int> map(n);
    for (int w = 0; w < n; ++w) {
        if (w == e.u || w == e.v)
            map[w] = e.u;
        else
            map[w] = w > e.v ? w - 1 : w;
    }
    Graph out(n - 1);
    for (int w = 0; w < n; ++w) {
        const Bitset& row = g.neighbors(w);
        for (int x = row.next(w + 1); x >= 0; x = row.next(x + 1))
            if (map[w] != map[x]) out.add_edge(map[w], map[x]);
    }
    return {std::move(out), std::move(map)};
}

Graph k_subdivide(const Graph& g, Edge e, int k)
{
    if (!g.has_edge(e)) throw std::invalid_argument("k_subdivide: not an edge");
    if (k < 1) throw std::invalid_argument("k_subdivide: k must be positive");
    const int n = g.vertex_count();
    Graph out(n + k);
    for (auto f : g.edges())
        if (!(f == e)) out.add_edge(f.u, f.v);
    out.add_edge(e.u, n);
    for (int i = 0; i + 1 < k; ++i) out.add_edge(n + i, n + i + 1);
    out.add_edge(n + k - 1, e.v);
    return out;
}

std::optional<int> set_distance(const Graph& g, const Bitset& s, const Bitset& t)
{
    if (s.none() || t.none())
        throw std::invalid_argument("set_distance: empty set");
    if (s.intersects(t)) return 0;
    Bitset seen = s;
    Bitset frontier = s;
    int d = 0;
    while (frontier.any()) {
        ++d;
        Bitset next = g.neighborhood_of(frontier);
        next.subtract(seen);
        if (next.intersects(t)) return d;
        seen |= next;
        frontier = std::move(next);
    }
    return std::nullopt;
}

Graph induced_subgraph(const Graph& g, const Bitset& keep,
                       std::vector<int>* old_to_new)
{
    const int n = g.vertex_count();
    std::vector<int> map(n, -1);
    int next_id = 0;
    for (int v = keep.first(); v >= 0; v = keep.next(v + 1)) map[v] = next_id++;
    Graph out(next_id);
    for (int v = keep.first(); v >= 0; v = keep.next(v + 1)) {
        Bitset row = g.neighbors(v);
        row &= keep;
        for (int w = row.next(v + 1); w >= 0; w = row.next(w + 1))
            out.add_edge(map[v], map[w]);
    }
    if (old_to_new) *old_to_new = std::move(map);
    return out;
}

namespace {

// Pattern vertices are matched in an order that keeps each new vertex as
// constrained as possible: most already-ordered neighbors first, then by
// degree. Components of a disconnected pattern get anchored one at a time.
std::vector<int> pattern_order(const Graph& h)
{
    const int k = h.vertex_count();
    std::vector<int> order;
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (h.has_edge(u, v)) ++links;
            int deg = h.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    return order;
}

struct InducedSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;
    std::vector<int> image;   // image[i] = g-vertex for pattern order[i]
    Bitset used;
    std::vector<Bitset> degree_ok; // candidates per pattern vertex

    InducedSearch(const Graph& g_, const Graph& h_)
        : g(g_), h(h_), order(pattern_order(h_)), used(g_.vertex_count())
    {
        degree_ok.assign(h.vertex_count(), Bitset(g.vertex_count()));
        for (int pv = 0; pv < h.vertex_count(); ++pv)
            for (int gv = 0; gv < g.vertex_count(); ++gv)
                if (g.degree(gv) >= h.degree(pv)) degree_ok[pv].set(gv);
    }

    bool extend(size_t depth)
    {
        if (depth == order.size()) return true;
        const int pv = order[depth];
        Bitset cand = degree_ok[pv];
        cand.subtract(used);
        for (size_t i = 0; i < depth; ++i) {
            if (h.has_edge(order[i], pv))
                cand &= g.neighbors(image[i]);
            else
                cand.subtract(g.neighbors(image[i]));
            if (cand.none()) return false;
        }
        for (int gv = cand.first(); gv >= 0; gv = cand.next(gv + 1)) {
            image.push_back(gv);
            used.set(gv);
            if (extend(depth + 1)) return true;
            used.reset(gv);
            image.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<VertexSet> find_induced(const Graph& g, const Graph& pattern)
{
    if (pattern.vertex_count() < 1)
        throw std::invalid_argument("find_induced: empty pattern");
    if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
    InducedSearch search(g, pattern);
    if (!search.extend(0)) return std::nullopt;
    VertexSet witness(g.vertex_count());
    for (int gv : search.image) witness.set(gv);
    return witness;
}

bool contains_induced(const Graph& g, const Graph& pattern)
{
    return find_induced(g, pattern).has_value();
}

bool is_h_free(const Graph& g, const std::vector<Graph>& family)
{
    for (const auto& h : family)
        if (contains_induced(g, h)) return false;
    return true;
}

bool set_contains_p3(const Graph& g, const Bitset& d)
{
    for (int v = d.first(); v >= 0; v = d.next(v + 1))
        if (g.neighbors(v).intersection_count(d) >= 2) return true;
    return false;
}

} // namespace tdc
