#pragma once

// Finite-dimensional left modules over an Algebra: hom spaces, submodules and
// quotients, simplicity and projectivity tests, free resolutions and Ext,
// and the stable-category tools (maps modulo those factoring through frees,
// the syzygy functor and its inverse, stable isomorphism).

#include "locfrob/algebra.hpp"
#include "locfrob/rng.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace locfrob {

struct AlgebraMismatch : Error {
    using Error::Error;
};
struct NotSubmodule : Error {
    using Error::Error;
};
struct Inconclusive : Error {
    using Error::Error;
};

// action[i] is the matrix of b_i acting on column coordinates; a left module
// structure means the assignment is unital and multiplicative.
struct FDModule {
    AlgebraPtr algebra;
    Index dim = 0;
    std::vector<Mat> action;

    Mat actMat(const Vec& x) const; // matrix of the algebra element x
    Vec act(const Vec& x, const Vec& v) const { return actMat(x) * v; }
    void validate() const;
};

struct ModuleHom {
    Mat matrix; // target.dim x source.dim
};

// Pointer equality or full structural comparison of the tables.
bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b);
void requireSameAlgebra(const FDModule& m, const FDModule& n); // throws AlgebraMismatch

FDModule regularModule(const AlgebraPtr& a);
FDModule trivialModule(const AlgebraPtr& a); // the augmentation as a 1-dim module
FDModule freeModule(const AlgebraPtr& a, Index copies);
FDModule zeroModule(const AlgebraPtr& a);
FDModule directSum(const std::vector<FDModule>& parts);

// Deterministic pseudo-random module: a free module of the given rank modulo
// the submodule generated by seeded random rows.  With seeds < copies the
// result is never zero.
FDModule randomModule(const AlgebraPtr& a, Rng& rng, Index copies, Index seeds);

// Basis of the space of A-linear maps M -> N, one map per row, flattened
// row-major (a row reshapes to an N.dim x M.dim matrix).
Mat homSpace(const FDModule& m, const FDModule& n);
std::vector<Mat> homBasis(const FDModule& m, const FDModule& n);
bool intertwines(const FDModule& m, const FDModule& n, const Mat& f);

// Smallest submodule containing the given rows, as canonical rows.
Mat submoduleGenerated(const FDModule& m, const Mat& vectors);

// The row space of subBasis as an abstract module; optional out-parameter
// receives the inclusion matrix (m.dim x sub.dim).
FDModule submoduleModule(const FDModule& m, const Mat& subBasis, Mat* inclusion = nullptr);

// M / S with the induced action; throws NotSubmodule if S is not invariant.
// The returned hom is the projection M -> M/S.
std::pair<FDModule, ModuleHom> quotientModule(const FDModule& m, const Mat& subBasis);

enum class SimpleVerdict { Simple, NotSimple, Unknown };

struct Simplicity {
    SimpleVerdict verdict = SimpleVerdict::Unknown;
    Mat witness; // a proper nonzero submodule when NotSimple
};

// Exhaustive generator spinning over small finite fields; invariant-line
// analysis for two-dimensional rational modules; a bounded randomized
// search elsewhere, which may return Unknown.
Simplicity isSimple(const FDModule& m);

// A surjection from a free module, with generators chosen greedily.
// proj has shape m.dim x (rank * dimA); column (c, j) is rho(b_j) g_c.
struct FreeCover {
    Index rank = 0;
    Mat proj;
    std::vector<Vec> generators;
};

FreeCover freeCover(const FDModule& m);
FreeCover coverFromGenerators(const FDModule& m, const std::vector<Vec>& gens);

struct ProjectivityResult {
    bool projective = false;
    Mat splitting; // s with proj * s = identity, when projective
    FreeCover cover;
};

// Projectivity via a linear search for a splitting of the free cover.
ProjectivityResult isProjective(const FDModule& m);

// F_L -> ... -> F_1 -> F_0 -> M -> 0 with free F_i; ranks[i] is the rank of
// F_i, diff[i] maps F_{i+1} into F_i, augment maps F_0 onto M.  Differentials
// send each generator of F_{i+1} to an element of the kernel below, so any
// Hom(F_i, N) computation reduces to assembling action matrices.
struct FreeResolution {
    std::vector<Index> ranks;
    std::vector<Mat> diff;
    Mat augment;
};

FreeResolution freeResolution(const FDModule& m, Index length);

// dim Ext^i(M, N) for 0 <= i <= maxDegree, as cohomology of the transported
// complex N^{r_0} -> N^{r_1} -> ...
std::vector<Index> extDims(const FDModule& m, const FDModule& n, Index maxDegree);

// Maps M -> N modulo those factoring through a free module; factoring is
// tested against the free cover of N, which every such map lifts across.
struct StableHomResult {
    Mat hom;  // basis rows of Hom(M, N)
    Mat phom; // basis rows of the factoring-through-free subspace
    Index dim = 0;
    Mat reps; // rows extending phom to hom: coset representatives
};

StableHomResult stableHom(const FDModule& m, const FDModule& n);

// Kernel of the free cover.
FDModule omega(const FDModule& m);

// Cokernel of the embedding m |-> sum_i u_i (x) v_i m into A^{dim m}, which
// is injective and A-linear whenever the form is Frobenius.
FDModule mho(const FDModule& m, const FrobeniusData& fd);

// Splits off copies of the regular module as long as an element with zero
// annihilator exists (over a self-injective algebra such a copy is always a
// direct summand); returns the complement.
FDModule stripFreeSummands(const FDModule& m);

// An invertible A-linear map M -> N when one exists: exhaustive over small
// finite coefficient spaces, bounded random sampling otherwise.  nullopt
// means no isomorphism exists; Inconclusive means sampling gave up.
std::optional<Mat> findIsomorphism(const FDModule& m, const FDModule& n);

// After stripping free summands from both sides, searches Hom for an
// invertible element: exhaustively over small finite fields, by bounded
// random sampling otherwise.  Throws Inconclusive when sampling cannot
// settle the answer.
bool stablyIsomorphic(const FDModule& m, const FDModule& n);

} // namespace locfrob
