#pragma once

// Hopf structure on top of the algebra layer: coproducts and antipodes as
// dense matrices, group algebras and their function-algebra duals, diagonal
// tensor actions, adjoint actions, the projection-formula isomorphism for
// modules induced along a subalgebra, coinvariant quotients, and normality
// tests for inclusions.

#include "locfrob/algebra.hpp"
#include "locfrob/extension.hpp"
#include "locfrob/module.hpp"

namespace locfrob {

struct NotNormalized : Error {
    using Error::Error;
};

// Coproduct and antipode over the base algebra's basis.  The coproduct is a
// (dim*dim) x dim matrix whose column j holds Delta(b_j) in the tensor basis
// b_u (x) b_v at flat index u*dim + v, the same layout kron produces.
struct HopfData {
    AlgebraPtr base;
    Mat coproduct;
    Mat antipode;
};

// The full package a directed-system stage carries.
struct HopfTriple {
    AlgebraPtr algebra;
    HopfData hopf;
    FrobeniusData frob;
};

struct HopfReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Group algebra kG with Delta(g) = g (x) g, antipode g -> g^{-1}, and the
// symmetric Frobenius form picking out the coefficient of the identity.
HopfTriple groupHopf(const Field& f, const FiniteGroup& g);

// Function algebra k(G): indicator functions delta_x multiplied pointwise,
// Delta(delta_x) = sum over factorizations uv = x of delta_u (x) delta_v,
// antipode by inversion, counit evaluation at the identity, and the form
// summing all values (its Gram matrix is the identity).
HopfTriple dualFunctionAlgebra(const Field& f, const FiniteGroup& g);

// Checks the counit laws, coassociativity, multiplicativity of the
// coproduct, Delta(1) = 1 (x) 1, and both antipode identities; collects one
// message per violation.
HopfReport verifyHopf(const HopfData& h);

bool isInvolutive(const HopfData& h); // antipode squared = identity

// Diagonal action on L (x) M through the coproduct; flat index s*m.dim + t,
// so the action matrices are coproduct-weighted sums of kron blocks.
FDModule tensorModule(const HopfData& h, const FDModule& l, const FDModule& m);

// Left adjoint act(a): x -> sum a' x chi(a''); right adjoint uses
// x -> sum chi(a') x a''.  Side::TwoSided is rejected.
Vec adjointAction(const HopfData& h, const Vec& a, const Vec& x, Side side);

// Pullback of functions along the quotient map G -> G/N: the inclusion
// k(G/N) -> k(G) sending a coset indicator to its fiber indicator.
// Optional out-parameters receive the quotient group and the projection.
AlgebraMorphism dualPullback(const Field& f, const FiniteGroup& big,
                             const std::vector<int>& normalSub,
                             FiniteGroup* quotientOut = nullptr,
                             std::vector<int>* projOut = nullptr);

// H // K: the left regular module modulo the left ideal generated by the
// augmentation ideal of K; the hom is the quotient projection.
std::pair<FDModule, ModuleHom> hModK(const AlgebraMorphism& inclusion);

// The projection formula iso  Ind(Res M (x) N) -> M (x) Ind N  along a free
// inclusion of Hopf algebras, sending a (x) (m (x) n) to sum a'm (x) (a'' (x) n).
struct TwistingIso {
    FDModule source; // induce(fb, Res M (x) N)
    FDModule target; // M (x) induce(fb, N)
    Mat matrix;      // target.dim x source.dim
};

// h is the Hopf structure of the big algebra, k the one of the subalgebra;
// m is a module over the big algebra, n over the small.  Throws IsoFailure
// if the assembled map fails to intertwine or to be invertible.
TwistingIso twistingIso(const HopfData& h, const HopfData& k, const FreeBasis& fb,
                        const FDModule& m, const FDModule& n);

// Two faces of normality for an inclusion of Hopf algebras K -> H:
// the one-sided ideals H K+ and K+ H coincide, and the image of K is stable
// under both adjoint actions of every basis element of H.
struct NormalityReport {
    bool idealsMatch = false;
    bool adjointStable = false;

    bool normal() const { return idealsMatch && adjointStable; }
};

NormalityReport normalityCheck(const HopfData& h, const AlgebraMorphism& inclusion);

// Row span of the product K L of two sub-Hopf-algebras given by row bases.
// Requires the left adjoint action of L to keep K stable (NotNormalized
// otherwise) and checks K L = L K plus closure of the product under the
// coproduct and the antipode.
Mat subHopfProduct(const HopfData& h, const Mat& kRows, const Mat& lRows);

} // namespace locfrob
