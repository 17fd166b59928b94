#pragma once

// Algebra morphisms and free Frobenius extensions: extracting a two-sided
// free basis of the big algebra over the small one, bimodule projections
// with dual-basis witnesses, induction and coinduction of modules along an
// inclusion, and the natural isomorphism between them.

#include "locfrob/module.hpp"

#include <string>
#include <vector>

namespace locfrob {

struct NotFree : Error {
    using Error::Error;
};
struct IsoFailure : Error {
    using Error::Error;
};

// A unital algebra map B -> A preserving the augmentations, stored as the
// matrix taking B-basis coordinates to A-coordinates.
struct AlgebraMorphism {
    AlgebraPtr source; // B
    AlgebraPtr target; // A
    Mat matrix;        // target.dim x source.dim

    Vec apply(const Vec& x) const;
};

// Verifies unitality, multiplicativity on all basis pairs, augmentation
// preservation, and (by default) injectivity; throws Error on violations.
AlgebraMorphism makeMorphism(const AlgebraPtr& source, const AlgebraPtr& target,
                             const Mat& matrix, bool requireInjective = true);

AlgebraMorphism identityMorphism(const AlgebraPtr& a);

// The inclusion of group algebras spanned by a subgroup's elements; subOut
// and embedOut receive the abstract subgroup and its element embedding.
AlgebraMorphism groupInclusion(const Field& f, const FiniteGroup& big,
                               const std::vector<int>& subElements,
                               FiniteGroup* subOut = nullptr,
                               std::vector<int>* embedOut = nullptr);

// Elements e_1 .. e_r of A with A = ⊕ B e_i = ⊕ e_i B.  The two coordinate
// matrices turn an element of A into its stacked B-coordinate vectors
// (block i holds the B-coordinates at e_i), one for each side.
struct FreeBasis {
    AlgebraMorphism inclusion;
    std::vector<Vec> elements;
    Mat leftCoords;  // x = sum_i iota(beta_i) e_i,  beta stacked = leftCoords x
    Mat rightCoords; // x = sum_i e_i iota(beta_i),  beta stacked = rightCoords x

    Index rank() const { return static_cast<Index>(elements.size()); }
};

// Searches the target's basis vectors, lexicographically with backtracking,
// for a set that is simultaneously a left and a right B-basis of A; when no
// set of basis vectors works it falls back to a deterministic pool of
// combined candidates.  Throws NotFree when the index is not an integer or
// the search fails.
FreeBasis freeBasis(const AlgebraMorphism& inclusion);

// A Frobenius system for B ⊆ A: a B-bimodule projection Λ: A -> B and dual
// elements with Σ y_i Λ(x_i a) = a = Σ Λ(a y_i) x_i.
struct FrobeniusExtensionWitness {
    AlgebraMorphism inclusion;
    Mat lambda; // source.dim x target.dim
    std::vector<Vec> xs;
    std::vector<Vec> ys;
};

struct WitnessReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the bimodule property of Λ on all basis triples and both dual-basis
// identities on every basis element; collects violations instead of throwing.
WitnessReport verifyWitness(const FrobeniusExtensionWitness& w);

// The coset witness for a subgroup pair: Λ projects onto the subalgebra
// coordinates, xs are the lexicographically first right-coset representatives
// and ys their inverses.
FrobeniusExtensionWitness cosetWitness(const Field& f, const FiniteGroup& big,
                                       const std::vector<int>& subElements);

// A ⊗_B M along the free basis; carrier ⊕_i e_i ⊗ M, copy-major layout.
FDModule induce(const FreeBasis& fb, const FDModule& m);

// Hom_B(A, M) with (a f)(x) = f(x a); carrier records f(e_i) per copy.
FDModule coinduce(const FreeBasis& fb, const FDModule& m);

// Functoriality on maps: id ⊗ f, block diagonal in the copy-major layout.
Mat induceHom(const FreeBasis& fb, const Mat& f);

// The natural isomorphism coinduce -> induce, f ↦ Σ y_i ⊗ f(x_i), in the
// carriers above; verified to intertwine and be invertible (IsoFailure
// otherwise, which would signal a broken witness).
ModuleHom indCoindIso(const FrobeniusExtensionWitness& w, const FreeBasis& fb,
                      const FDModule& m);

// Restriction of an A-module to B through the inclusion.
FDModule restrictModule(const AlgebraMorphism& inclusion, const FDModule& m);

} // namespace locfrob
