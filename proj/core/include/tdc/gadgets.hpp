#ifndef TDC_GADGETS_HPP
#define TDC_GADGETS_HPP

#include "tdc/graph.hpp"
#include "tdc/oracle.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace tdc {

// Clause list over signed 1-based variable literals (DIMACS convention).
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

// "p cnf V C" header, clauses as 0-terminated integer lists, 'c' comments.
CnfFormula read_dimacs(std::istream& in);
CnfFormula load_dimacs(const std::string& path);

// Every literal positive, every clause exactly three distinct variables,
// every variable in exactly three clauses. On failure `why` explains.
bool is_positive_cubic_1in3(const CnfFormula& phi, std::string* why = nullptr);

enum class GadgetKind { EvenDominatingSet, TwoP4Sat, ClawFree1In3 };

struct GadgetOutput {
    Graph graph;
    std::map<std::string, int> roles; // injective, covers every vertex
    GadgetKind kind{};
    // Value the construction ties the instance to: min(gamma(src), 2*ell)
    // for the even-ds build, 2|X| and 14|X|+8|C| for the SAT builds.
    long long gamma_t_target = 0;
    std::string target_note;
    CnfFormula formula;           // SAT kinds
    int ell = 0;                  // even-ds
    std::optional<int> source_gamma; // even-ds, when the oracle verified it
};

// Layered construction over a source graph: 2*ell spine vertices plus
// 2*ell+1 copies of V(src), copy 0 a clique, the others independent with
// closed-neighborhood wiring into copy 0. The source must have gamma >= 4;
// verified by the oracle for n <= 20, otherwise only with trust_promise.
GadgetOutput build_even_ds_gadget(const Graph& src, int ell, bool trust_promise = false);

// Per variable a 4-vertex gadget with positive/negative literal vertices,
// per clause one vertex adjacent to its literals, clause vertices a clique.
GadgetOutput build_2p4_gadget(const CnfFormula& phi);

// The claw-free construction: a 34-vertex gadget per variable, a 24-vertex
// gadget per clause (16 + 8), cross edges per occurrence.
GadgetOutput build_clawfree_gadget(const CnfFormula& phi);

// 4-subdivides every edge of g (frozen snapshot of E(g)); needs n >= 3.
Graph four_subdivide_all(const Graph& g);

// The explicit total dominating set induced by a truth assignment
// (assignment[i] for variable i, 1-based; index 0 ignored). Requires the
// assignment to satisfy the formula under the gadget's semantics, rejects
// otherwise naming the violated clause. The returned set is validated.
VertexSet tds_witness_from_assignment(const GadgetOutput& gadget,
                                      const std::vector<bool>& assignment);

struct VerifyReport {
    enum class Status { Confirmed, Refuted, BudgetExceeded };
    struct Item {
        std::string property;
        Status status;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_confirmed_or_budget() const
    {
        for (const auto& it : items)
            if (it.status == Status::Refuted) return false;
        return true;
    }
};

// Structural checks always run; the gamma_t and decision comparisons run
// within the node budget and report BudgetExceeded when it runs out.
VerifyReport verify_gadget_equivalence(const GadgetOutput& gadget,
                                       const SearchBudget& budget = {});

} // namespace tdc

#endif
