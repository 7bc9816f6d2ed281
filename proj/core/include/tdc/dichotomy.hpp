#ifndef TDC_DICHOTOMY_HPP
#define TDC_DICHOTOMY_HPP

#include "tdc/graph.hpp"

#include <optional>
#include <string>

namespace tdc {

enum class Verdict { Poly, NpHard, CoNpHard };

// Which case of the classification fired.
enum class Branch { Cycle, Claw, P6, P5PlusComponent, TwoP4, WithinFamily };

struct FamilyWitness {
    bool p5 = false; // member of P5 + tK1; otherwise P4 + qP3 + pK2 + tK1
    int q = 0, p = 0, t = 0;
};

struct HClassification {
    Verdict verdict{};
    Branch branch{};
    std::optional<FamilyWitness> family;

    // "<verdict> (<branch> branch)", e.g. "coNP-hard (claw branch)".
    std::string verdict_line() const;
    std::string explanation() const;
};

// Classifies a pattern graph h (possibly disconnected): deciding whether one
// contraction can lower the total domination number is polynomial-time
// solvable on h-free graphs exactly when h fits one of the two solvable
// families; otherwise the matching hardness construction applies.
HClassification classify_h(const Graph& h);

// The solvable families, checked by direct component analysis: a linear
// forest with at most one component of size >= 4, that component P4 or P5;
// a P5 allows only K1 companions, a P4 allows companions up to 3 vertices.
bool in_poly_family(const Graph& h);

} // namespace tdc

#endif
