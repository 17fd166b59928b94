#pragma once

// Finite truncations of directed systems of symmetric Frobenius algebras:
// towers like kC_p < kC_{p^2} < ... whose union is a locally Frobenius
// algebra.  Every stage is an augmented algebra with a chosen symmetric
// form, every arrow is a unital inclusion admitting a two-sided free basis,
// and elements of the union are stage-tagged coordinate vectors compared
// after pushing into a common upper stage.

#include "locfrob/extension.hpp"
#include "locfrob/hopf.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace locfrob {

struct NotComparable : Error {
    using Error::Error;
};

// One stage: the algebra with its Frobenius form and, for group and
// function algebras, the Hopf structure the family provides.
struct Stage {
    int id = 0;
    AlgebraPtr algebra;
    FrobeniusData frob;
    std::optional<HopfData> hopf;
};

struct SystemCache; // memo table for composed inclusions and free bases

struct DirectedSystem {
    std::string family;
    Field field;
    std::vector<Stage> stages;               // stage ids index this vector
    std::vector<std::pair<int, int>> covers; // covering relations a < b
    std::map<std::pair<int, int>, AlgebraMorphism> arrows; // one per cover
    int base = 0; // the one-dimensional bottom stage

    std::shared_ptr<SystemCache> cache;

    const Stage& at(int id) const;
    int stageCount() const { return static_cast<int>(stages.size()); }
    std::vector<int> stageIds() const;

    bool leq(int a, int b) const;

    // Least stage above both arguments, by id; throws NotComparable when
    // the truncation holds none.
    int upperBound(int a, int b) const;

    // Composed inclusion A(a) -> A(b) for a below b, memoized.
    const AlgebraMorphism& inclusion(int a, int b) const;

    // Two-sided free basis of A(b) over A(a), memoized.
    const FreeBasis& basis(int a, int b) const;
};

// Assembles a system and memo table; arrows must be keyed by the covers.
DirectedSystem makeSystem(std::string family, const Field& f,
                          std::vector<Stage> stages,
                          std::vector<std::pair<int, int>> covers,
                          std::map<std::pair<int, int>, AlgebraMorphism> arrows);

// kC_1 < kC_p < kC_{p^2} < ... < kC_{p^depth}, the generator of each cyclic
// group mapping to the p-th power of the next one.
DirectedSystem pruferSystem(const Field& f, int p, int depth);

// kS_1 < kS_2 < ... < kS_n with n = min(nMax, depth + 1); permutations embed
// by fixing the new letter.
DirectedSystem symmetricChainSystem(const Field& f, int nMax, int depth);

// Functions on Z/1 < Z/p < Z/p^2 < ... pulled back along the reduction maps;
// indicator functions map to indicator functions of fibres.
DirectedSystem dualProfiniteSystem(const Field& f, int p, int depth);

// A small non-total order: two lines generated by different transpositions
// merging into kS_3.  Exercises the upper-bound search off the chain case.
DirectedSystem mergeDemoSystem(const Field& f);

// Dispatch by family name: "prufer", "symmetric_chain", "dual_profinite",
// "merge_demo" (param ignored for the last).  Throws Error on unknown names.
DirectedSystem builtinSystem(const std::string& family, int param,
                             const Field& f, int depth);

struct SystemReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the bottom stage is one-dimensional, every stage algebra and its
// symmetric form validate, Hopf stages satisfy the axioms, arrows compose
// coherently along alternative paths, every arrow admits a free basis whose
// rank times the small dimension is the big dimension, and every pair of
// stages has an upper bound.
SystemReport validateSystem(const DirectedSystem& sys);

// An element of the union, presented at a stage.
struct ColimElement {
    int stage = 0;
    Vec coords;
};

// Shape-checks and imprints the coordinates.
ColimElement colimElement(const DirectedSystem& sys, int stage, Vec coords);

// Image at a higher stage; NotComparable when toStage is not above.
ColimElement push(const DirectedSystem& sys, const ColimElement& e, int toStage);

// Product and equality after pushing both arguments to the least common
// upper stage.
ColimElement colimMul(const DirectedSystem& sys, const ColimElement& a,
                      const ColimElement& b);
bool colimEq(const DirectedSystem& sys, const ColimElement& a,
             const ColimElement& b);

} // namespace locfrob
