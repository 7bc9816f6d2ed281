#include "tdc/dichotomy.hpp"

#include <algorithm>
#include <vector>

namespace tdc {

namespace {

struct Shape {
    bool forest = false;
    bool max_degree_le_2 = false;
    std::vector<int> component_sizes; // descending, for linear forests
};

Shape analyze(const Graph& h)
{
    Shape shape;
    const int n = h.vertex_count();
    shape.max_degree_le_2 = true;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) >= 3) shape.max_degree_le_2 = false;

    // Component scan; a component with as many edges as vertices has a cycle.
    Bitset remaining(n, true);
    shape.forest = true;
    while (remaining.any()) {
        Bitset comp(n), frontier(n);
        const int start = remaining.first();
        comp.set(start);
        frontier.set(start);
        while (frontier.any()) {
            Bitset next = h.neighborhood_of(frontier);
            next.subtract(comp);
            comp |= next;
            frontier = std::move(next);
        }
        int edges = 0;
        for (int v = comp.first(); v >= 0; v = comp.next(v + 1))
            edges += h.neighbors(v).count();
        edges /= 2;
        if (edges != comp.count() - 1) shape.forest = false;
        shape.component_sizes.push_back(comp.count());
        remaining.subtract(comp);
    }
    std::sort(shape.component_sizes.rbegin(), shape.component_sizes.rend());
    return shape;
}

} // namespace

HClassification classify_h(const Graph& h)
{
    const Shape shape = analyze(h);
    if (!shape.forest) return {Verdict::NpHard, Branch::Cycle, std::nullopt};
    if (!shape.max_degree_le_2) return {Verdict::CoNpHard, Branch::Claw, std::nullopt};

    // Linear forest: components are paths.
    const auto& sizes = shape.component_sizes;
    const int longest = sizes.empty() ? 0 : sizes.front();
    if (longest >= 6) return {Verdict::NpHard, Branch::P6, std::nullopt};
    if (longest == 5) {
        if (sizes.size() > 1 && sizes[1] >= 2)
            return {Verdict::NpHard, Branch::P5PlusComponent, std::nullopt};
        FamilyWitness w;
        w.p5 = true;
        w.t = static_cast<int>(sizes.size()) - 1;
        return {Verdict::Poly, Branch::WithinFamily, w};
    }
    if (std::count(sizes.begin(), sizes.end(), 4) >= 2)
        return {Verdict::CoNpHard, Branch::TwoP4, std::nullopt};
    FamilyWitness w;
    for (size_t i = (longest == 4 ? 1 : 0); i < sizes.size(); ++i) {
        if (sizes[i] == 3) ++w.q;
        else if (sizes[i] == 2) ++w.p;
        else ++w.t;
    }
    return {Verdict::Poly, Branch::WithinFamily, w};
}

bool in_poly_family(const Graph& h)
{
    const Shape shape = analyze(h);
    if (!shape.forest || !shape.max_degree_le_2) return false;
    const auto& sizes = shape.component_sizes;
    if (sizes.empty()) return true;
    if (sizes.front() >= 6) return false;
    if (sizes.front() == 5) {
        for (size_t i = 1; i < sizes.size(); ++i)
            if (sizes[i] != 1) return false;
        return true;
    }
    // At most one component of size 4; the rest at most 3 vertices.
    return std::count(sizes.begin(), sizes.end(), 4) <= 1;
}

std::string HClassification::verdict_line() const
{
    std::string v;
    switch (verdict) {
    case Verdict::Poly: v = "poly"; break;
    case Verdict::NpHard: v = "NP-hard"; break;
    case Verdict::CoNpHard: v = "coNP-hard"; break;
    }
    std::string b;
    switch (branch) {
    case Branch::Cycle: b = "cycle"; break;
    case Branch::Claw: b = "claw"; break;
    case Branch::P6: b = "P6"; break;
    case Branch::P5PlusComponent: b = "P5+component"; break;
    case Branch::TwoP4: b = "2P4"; break;
    case Branch::WithinFamily: b = "within-family"; break;
    }
    return v + " (" + b + " branch)";
}

std::string HClassification::explanation() const
{
    switch (branch) {
    case Branch::Cycle: return "H contains a cycle";
    case Branch::Claw: return "H is a forest with a vertex of degree at least 3";
    case Branch::P6: return "H contains a path on 6 or more vertices";
    case Branch::P5PlusComponent:
        return "H contains a P5 plus another component with at least 2 vertices";
    case Branch::TwoP4: return "H contains two P4 components";
    case Branch::WithinFamily: {
        if (!family) return "H fits a solvable family";
        if (family->p5)
            return "H fits P5 + tK1 (t=" + std::to_string(family->t) + ")";
        return "H fits P4 + qP3 + pK2 + tK1 (q=" + std::to_string(family->q)
            + ", p=" + std::to_string(family->p) + ", t=" + std::to_string(family->t) + ")";
    }
    }
    return "";
}

} // namespace tdc
