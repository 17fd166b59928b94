#pragma once

// Finitely generated modules over a directed system, presented at a stage:
// normalized dimension and rank, transport of short exact sequences between
// stages, growth tables for the quotients by an ideal, and finite
// presentations of generated submodules.

#include "locfrob/system.hpp"

#include <string>
#include <utility>
#include <vector>

namespace locfrob {

struct UnsupportedStage : Error {
    using Error::Error;
};
struct NotExact : Error {
    using Error::Error;
};

// Exact nonnegative rational, reduced, positive denominator.
struct Ratio {
    long long num = 0;
    long long den = 1;

    std::string str() const;
};

Ratio makeRatio(long long num, long long den);
bool operator==(const Ratio& a, const Ratio& b);
bool operator<(const Ratio& a, const Ratio& b);

// A module over the union, presented as a finite-dimensional module over
// the stage algebra.
struct CoherentModule {
    int stage = 0;
    FDModule mod;
};

// Checks the module really is a module over the stage algebra.
CoherentModule coherentModule(const DirectedSystem& sys, int stage, FDModule mod);

// The same module presented at a higher stage, by induction along the free
// basis of the inclusion.
CoherentModule representAt(const DirectedSystem& sys, const CoherentModule& m,
                           int toStage);

// dim M / dim A(stage); unchanged under representAt.
Ratio cohDim(const DirectedSystem& sys, const CoherentModule& m);

// A covering module with a verified epimorphism onto M.  Exact on local
// stages (minimal free cover, rank = dim of the radical quotient) and on
// semisimple stages (M covers itself, rank = cohDim); other stages throw
// UnsupportedStage unless boundIfUnsupported, which returns the plain free
// cover rank flagged as inexact.
struct CoherentRank {
    Ratio rank;
    bool exact = true;
    std::string method; // "local", "semisimple", or "free-cover"
    FDModule cover;
    Mat epi; // m.dim x cover.dim, intertwining and surjective
};

CoherentRank cohRank(const DirectedSystem& sys, const CoherentModule& m,
                     bool boundIfUnsupported = false);

// A short exact sequence 0 -> S -f-> M -g-> Q -> 0 of modules at one stage.
struct StageSES {
    int stage = 0;
    FDModule sub, mid, quot;
    Mat f; // mid.dim x sub.dim
    Mat g; // quot.dim x mid.dim
};

// Verifies the maps intertwine and the sequence is exact; NotExact otherwise.
StageSES makeSES(const DirectedSystem& sys, int stage, FDModule sub, FDModule mid,
                 FDModule quot, Mat f, Mat g);

// Transports the sequence to a higher stage by inducing everything along
// the free basis, and re-verifies exactness there.
StageSES descendSes(const DirectedSystem& sys, const StageSES& ses, int toStage);

// dim A(mu) - dim A(mu)L for every stage mu above the presenting one within
// depth; strict asks that the quotient dimensions grow strictly along every
// comparable pair.  idealRows must span a proper left ideal of A(stage).
struct GrowthTable {
    std::vector<std::pair<int, Index>> rows; // (stage id, quotient dimension)
    bool strict = true;
};

GrowthTable stageDimGrowth(const DirectedSystem& sys, int stage, const Mat& idealRows,
                           int depth);

// The submodule generated by a subspace, finitely presented: generators of
// the closure and the relations among them, read off a free cover.
struct Presentation {
    std::vector<Vec> generators; // elements of the ambient module
    Index coverRank = 0;
    Mat relations; // rows: kernel basis of the cover map
};

Presentation fpWitness(const FDModule& m, const Mat& subspaceRows);

} // namespace locfrob
