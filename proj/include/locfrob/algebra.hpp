#pragma once

// Finite-dimensional associative unital algebras over an exact field, given by
// structure constants and carrying a mandatory augmentation (an algebra map
// to the ground field).  On top of that: Frobenius forms with dual bases,
// integrals, Jacobson radicals and socles, one-sided ideals, and the
// square-zero / idempotent dichotomy for minimal left ideals.

#include "locfrob/field.hpp"
#include "locfrob/group.hpp"
#include "locfrob/linalg.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace locfrob {

struct DegenerateForm : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct NotMinimal : Error {
    using Error::Error;
};
struct AlgorithmInapplicable : Error {
    using Error::Error;
};

// An algebra of dimension d stores one d x d matrix per basis element:
// lmul[i].col(j) holds the coefficients of b_i * b_j.  The augmentation `aug`
// is a functional (row vector) required to be multiplicative with aug(1) = 1.
// `gens` lists basis indices known to generate the algebra together with the
// unit; several operations only need to quantify over generators.
struct Algebra {
    Field field;
    Index dim = 0;
    std::vector<std::string> labels;
    std::vector<Mat> lmul;
    Vec one;
    RowVec aug;
    std::vector<Index> gens;

    Vec mul(const Vec& x, const Vec& y) const;
    Mat lmat(const Vec& x) const; // matrix of a |-> x*a
    Mat rmat(const Vec& x) const; // matrix of a |-> a*x
    Scalar eps(const Vec& x) const;
    Vec basisVec(Index i) const
    {
        Vec v = unitVec(dim, i);
        imprint(field, v);
        return v;
    }

    void requireVec(const Vec& x) const;
    void validate() const; // throws Error on the first broken axiom
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraValidation {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks associativity on all basis triples, both unit laws, and
// multiplicativity of the augmentation; collects every violation.
AlgebraValidation validateAlgebra(const Algebra& a);

// Imprints all data into the field and checks shapes; does not validate the
// axioms, so deliberately broken tables can still be built and reported on.
AlgebraPtr makeAlgebra(Field field, std::vector<std::string> labels, std::vector<Mat> lmul,
                       Vec one, RowVec aug, std::vector<Index> gens = {});

AlgebraPtr trivialAlgebra(Field field);

// Group algebra with basis indexed by group elements, augmentation g |-> 1,
// generators taken from the group's generating set.
AlgebraPtr groupAlgebra(Field field, const FiniteGroup& g);

// Direct product with componentwise operations; the augmentation is taken
// from the first factor (projection followed by its augmentation).
AlgebraPtr productAlgebra(const AlgebraPtr& a, const AlgebraPtr& b);

// A Frobenius form together with its Gram matrix gram[i][j] = form(b_i b_j)
// and a pair of dual bases: columns u_i of dualU and v_j of dualV satisfy
// form(u_i v_j) = delta_ij.  With u = standard basis this makes
//   x = sum_i form(x v_i) u_i = sum_i v_i form(u_i x)
// the two expansion identities used throughout.
struct FrobeniusData {
    RowVec form;
    Mat gram;
    Mat dualU;
    Mat dualV;
    bool symmetric = false;

    Scalar apply(const Vec& x) const { return (form * x)(0, 0); }
};

FrobeniusData frobeniusData(const Algebra& a, const RowVec& form, bool requireSymmetric = true);

enum class Side { Left, Right, TwoSided };

// A subspace of the algebra closed under the declared multiplications,
// stored as a canonical row basis.  Closure is verified at construction.
struct Ideal {
    AlgebraPtr parent;
    Side side = Side::TwoSided;
    Mat basis; // canonical rows

    Index dim() const { return basis.rows(); }
    bool isZero() const { return basis.rows() == 0; }
};

Ideal makeIdeal(const AlgebraPtr& a, Side side, const Mat& span);

// Smallest subspace containing `seed` (as rows) and closed under the given
// one- or two-sided multiplication.
Mat idealClosure(const Algebra& a, Side side, const Mat& seed);

// A*v, the left ideal generated by a single element, as canonical rows.
Mat spinLeft(const Algebra& a, const Vec& v);

// Span of all pairwise products u*v, u over rows of `u`, v over rows of `v`.
Mat productSpan(const Algebra& a, const Mat& u, const Mat& v);

// ker(aug) as a two-sided ideal.
Ideal augmentationIdeal(const AlgebraPtr& a);

// Solutions of y*h = aug(y)*h for all y (rows); right-handed analogue.
// For an augmented Frobenius algebra both spaces are one-dimensional.
Mat leftIntegrals(const Algebra& a);
Mat rightIntegrals(const Algebra& a);

// Left and right integrals agree as subspaces.
bool isUnimodular(const Algebra& a);

// The integral criterion for semisimplicity: aug is nonzero on both integral
// spaces.  The equivalence with semisimplicity is a theorem for Hopf algebra
// stages only; callers on plain augmented Frobenius algebras get the raw
// predicate value (see maschkeCounterexample).
bool maschkeSemisimple(const Algebra& a);

// Jacobson radical as a canonical row basis.  Characteristic zero uses the
// trace-form kernel; characteristic p the iterated characteristic-polynomial
// coefficient chain (valid over prime fields).  Nilpotency is verified by
// repeated squaring before returning.
Mat radicalSubspace(const Algebra& a);
Ideal radical(const AlgebraPtr& a);

// Exhaustive cross-check for small algebras over finite fields: an element
// lies in the radical iff the two-sided ideal it generates is nilpotent.
// Requires q^dim <= limit; throws AlgorithmInapplicable otherwise.
Mat radicalBrute(const Algebra& a, unsigned long long limit = 1u << 16);

// {x : rad * x = 0} (Left) or {x : x * rad = 0} (Right).
Ideal socle(const AlgebraPtr& a, Side side);

// Annihilator of a set of module elements under the given basis action
// (action[i] = matrix of b_i on the module); the intersection of the
// per-element annihilators, a left ideal.
Ideal annihilator(const AlgebraPtr& a, const std::vector<Mat>& action, const Mat& vectors);

// Annihilators inside the algebra itself: Side::Left gives {x : x*v = 0 for
// all v}, Side::Right gives {x : v*x = 0 for all v}.
Ideal annihilatorRegular(const AlgebraPtr& a, const Mat& vectors, Side side);

// Decides simplicity of a left ideal as a module: dimension one is always
// simple; over a finite field all nonzero elements are tested as generators
// (bounded enumeration); over the rationals two-dimensional ideals are
// settled by searching for an invariant line.  Throws AlgorithmInapplicable
// outside those regimes.
bool isMinimalLeftIdeal(const Algebra& a, const Mat& basisRows);

// A line fixed by every 2x2 matrix in `mats` over the rationals, if one
// exists; the decision procedure behind the two-dimensional simplicity
// checks (an invariant line must be a rational eigenline of each matrix).
std::optional<Vec> commonInvariantLine2(const std::vector<Mat>& mats);

struct MinimalIdealClass {
    bool squareZero = false;
    Vec idempotent; // e with e*e = e and A*e = L, when squareZero is false
};

// For a minimal left ideal L: either L*L = 0, or L = A*e for an idempotent e
// recovered by inverting right multiplication by a suitable element of L.
MinimalIdealClass minimalIdealDichotomy(const AlgebraPtr& a, const Ideal& l,
                                        bool verifyMinimal = true);

// Builds k x R0 from a local non-semisimple Frobenius algebra (R0, form0):
// augmentation is the first projection, form (x, y) |-> x + form0(y).  The
// result satisfies the integral criterion (aug of the integral (1, 0) is
// nonzero) while failing to be semisimple, so the criterion's equivalence
// with semisimplicity genuinely needs the Hopf hypothesis.
std::pair<AlgebraPtr, FrobeniusData> maschkeCounterexample(const AlgebraPtr& r0,
                                                           const RowVec& form0);

} // namespace locfrob
