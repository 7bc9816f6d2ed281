#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/samplers.hpp"

#include "tdc/dichotomy.hpp"
#include "tdc/generators.hpp"

using namespace tdc;
using namespace tdc::testsupport;

TEST_CASE("the six fixed verdicts")
{
    auto line = [](const Graph& h) { return classify_h(h).verdict_line(); };

    CHECK(line(linear_forest({5, 1, 1})) == "poly (within-family branch)");
    CHECK(line(linear_forest({4, 4})) == "coNP-hard (2P4 branch)");
    CHECK(line(cycle_graph(4)) == "NP-hard (cycle branch)");
    CHECK(line(star_graph(4)) == "coNP-hard (claw branch)");
    CHECK(line(linear_forest({5, 2})) == "NP-hard (P5+component branch)");
    CHECK(line(linear_forest({4, 3, 3, 2, 1})) == "poly (within-family branch)");
}

TEST_CASE("family witnesses carry the decomposition")
{
    auto p5 = classify_h(linear_forest({5, 1, 1}));
    REQUIRE(p5.family.has_value());
    CHECK(p5.family->p5);
    CHECK(p5.family->t == 2);

    auto p4 = classify_h(linear_forest({4, 3, 3, 2, 1}));
    REQUIRE(p4.family.has_value());
    CHECK_FALSE(p4.family->p5);
    CHECK(p4.family->q == 2);
    CHECK(p4.family->p == 1);
    CHECK(p4.family->t == 1);
}

TEST_CASE("more fixed branches")
{
    CHECK(classify_h(path_graph(6)).branch == Branch::P6);
    CHECK(classify_h(linear_forest({6, 3})).branch == Branch::P6);
    CHECK(classify_h(cycle_graph(3)).branch == Branch::Cycle);
    CHECK(classify_h(disjoint_union(cycle_graph(3), path_graph(2))).branch == Branch::Cycle);
    CHECK(classify_h(path_graph(5)).verdict == Verdict::Poly);
    CHECK(classify_h(path_graph(4)).verdict == Verdict::Poly);
    CHECK(classify_h(Graph(3)).verdict == Verdict::Poly);
    CHECK(classify_h(disjoint_union(star_graph(4), path_graph(1))).branch == Branch::Claw);
}

TEST_CASE("exhaustive over all graphs with up to five vertices")
{
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph h(n);
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask >> bit & 1) h.add_edge(i, j);
            auto cls = classify_h(h); // must be total: every graph classified
            const bool poly = cls.verdict == Verdict::Poly;
            CHECK(poly == in_poly_family(h));
            if (poly) CHECK(cls.family.has_value());
        }
    }
}

TEST_CASE("random graphs up to eight vertices never fall through")
{
    Rng r(21);
    for (int i = 0; i < 3000; ++i) {
        Graph h = random_graph(r, r.uniform_int(1, 8), r.uniform(0.0, 1.0));
        auto cls = classify_h(h);
        CHECK((cls.verdict == Verdict::Poly) == in_poly_family(h));
        CHECK(!cls.verdict_line().empty());
        CHECK(!cls.explanation().empty());
    }
}

TEST_CASE("family membership on all linear forests with up to ten vertices")
{
    // Enumerate partitions of n into path sizes.
    std::vector<std::vector<int>> partitions;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            partitions.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    for (int n = 1; n <= 10; ++n) rec(n, n);

    for (const auto& sizes : partitions) {
        Graph h = linear_forest(sizes);
        auto cls = classify_h(h);
        // Membership characterization: at most one component of size >= 4,
        // none of size >= 6; a 5-component forbids companions with edges.
        int big = 0;
        bool has5 = false, huge = false, edged_companion_of_5 = false;
        for (int s : sizes) {
            if (s >= 4) ++big;
            if (s == 5) has5 = true;
            if (s >= 6) huge = true;
        }
        if (has5)
            for (int s : sizes)
                if (s >= 2 && s != 5) edged_companion_of_5 = true;
        bool member = !huge && big <= 1 && !(has5 && edged_companion_of_5);
        CHECK(in_poly_family(h) == member);
        CHECK((cls.verdict == Verdict::Poly) == member);
    }
}
