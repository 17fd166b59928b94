#pragma once

// Stage-bounded probes of colimit phenomena: modules defined compatibly at
// every stage, towers of hom spaces, locality and radical behaviour along
// the system, and the witness searches for essentiality, noncoherence, and
// minimal ideals descending to a stage.

#include "locfrob/coherent.hpp"

#include <map>
#include <utility>
#include <vector>

namespace locfrob {

struct NotFoundAtDepth : Error {
    using Error::Error;
};

// One carrier with an A(λ)-module structure for every stage, agreeing under
// restriction along the inclusions.
struct CompatibleFDModule {
    Index dim = 0;
    std::map<int, FDModule> perStage;
};

// The trivial module at every stage.
CompatibleFDModule compatibleTrivial(const DirectedSystem& sys);

// Validates the carrier dimensions match and the structures restrict to
// each other along every covering inclusion.
CompatibleFDModule makeCompatible(const DirectedSystem& sys,
                                  std::map<int, FDModule> perStage);

// Hom over each stage algebra: a descending chain of subspaces of the
// linear maps M -> N, with the stabilization verdict over the last two
// stages.
struct HomTower {
    std::vector<int> stages;
    std::vector<Index> dims;
    std::vector<Mat> spaces; // canonical row bases of the flattened hom spaces
    bool descending = true;  // each space lies inside every comparable earlier one
    bool stabilized = false; // equal spaces across the final two stages
    Index finalDim = 0;
};

HomTower homTower(const DirectedSystem& sys, const CompatibleFDModule& m,
                  const CompatibleFDModule& n, int depth);

// rad A(λ) equals the augmentation ideal at every stage; the union is then
// local with maximal ideal the union of the augmentation ideals.
struct LocalReport {
    std::vector<std::pair<int, bool>> stageLocal;
    bool local = true;
};

LocalReport isLocalSystem(const DirectedSystem& sys);

// Pushed along each covering inclusion, A(α) meets rad A(β) inside the
// image of rad A(α).
struct RadicalContainment {
    struct Row {
        int from = 0;
        int to = 0;
        bool ok = true;
        Index meetDim = 0;
    };
    std::vector<Row> rows;
    bool ok = true;
};

RadicalContainment radicalContainment(const DirectedSystem& sys, int depth);

// A stage where the left ideal of z meets the left ideal generated by the
// subsystem's augmentation ideal, with a nonzero element of the
// intersection.  The subsystem is given by per-stage row bases; omitted, it
// is the whole system.  Throws NotFoundAtDepth past the last stage.
struct Essentiality {
    int stage = 0;
    Vec element;
};

Essentiality essentialityWitness(const DirectedSystem& sys, const ColimElement& z,
                                 int depth,
                                 const std::map<int, Mat>* subalgebra = nullptr);

// Embeds the compatible simple module into the regular module at a stage,
// then finds a later stage, a multiplier, and a member of the embedded copy
// whose product escapes it, witnessing that the union of the copies is not
// a submodule presented at the first stage.
struct Noncoherence {
    int stage = 0;
    Vec multiplier;
    Vec element;
};

Noncoherence noncoherenceWitness(const DirectedSystem& sys,
                                 const CompatibleFDModule& s, int atStage,
                                 int depth);

// The first stage where the left ideal generated by w is simple and proper,
// together with the ascent certificate at the next (up to two) stages: the
// ideal generated by the pushed basis equals the ideal of the pushed
// generator, its dimension scales by the index, and multiplication
// identifies the induced module with it.
struct MinimalIdealDescent {
    int stage = 0;
    Mat idealRows;
    std::vector<int> certifiedStages;
};

MinimalIdealDescent minimalIdealDescend(const DirectedSystem& sys,
                                        const ColimElement& w, int depth);

} // namespace locfrob
