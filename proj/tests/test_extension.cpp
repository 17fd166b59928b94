#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "locfrob/extension.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace locfrob;
using fixtures::matOver;

namespace {

Vec sumOfBasis(const Algebra& a)
{
    Vec s = Vec::Zero(a.dim);
    for (Index i = 0; i < a.dim; ++i)
        s += a.basisVec(i);
    imprint(a.field, s);
    return s;
}

} // namespace

TEST_CASE("algebra morphisms: identity, group inclusions, broken maps")
{
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    auto a = groupAlgebra(Field::prime(2), c4);

    AlgebraMorphism idA = identityMorphism(a);
    CHECK(matEq<Scalar>(Mat(idA.apply(a->one)), Mat(a->one)));

    AlgebraMorphism inc = groupInclusion(Field::prime(2), c4, subgroupClosure(c4, {2}));
    CHECK(inc.source->dim == 2);
    CHECK(inc.target->dim == 4);
    // the order-two subgroup generator sits at g^2
    CHECK(matEq<Scalar>(Mat(Vec(inc.matrix.col(1))), Mat(a->basisVec(2))));

    // sending the order-two generator to the order-four one breaks g*g = 1
    auto b = groupAlgebra(Field::prime(2), FiniteGroup::cyclic(2));
    Mat bad = Mat::Zero(4, 2);
    bad(0, 0) = Scalar(1);
    bad(1, 1) = Scalar(1);
    CHECK_THROWS_AS(makeMorphism(b, a, bad), Error);
}

TEST_CASE("free bases over subalgebras")
{
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    AlgebraMorphism inc = groupInclusion(Field::prime(2), c4, subgroupClosure(c4, {2}));
    FreeBasis fb = freeBasis(inc);
    REQUIRE(fb.rank() == 2);
    CHECK(matEq<Scalar>(Mat(fb.elements[0]), Mat(inc.target->basisVec(0))));
    CHECK(matEq<Scalar>(Mat(fb.elements[1]), Mat(inc.target->basisVec(1))));

    // both coordinate maps reconstruct every basis element of the big algebra
    const Algebra& big = *inc.target;
    const Index db = inc.source->dim;
    for (Index g = 0; g < big.dim; ++g) {
        Vec e = big.basisVec(g);
        Vec beta = fb.leftCoords * e;
        Vec gamma = fb.rightCoords * e;
        Vec left = Vec::Zero(big.dim);
        Vec right = Vec::Zero(big.dim);
        for (Index i = 0; i < fb.rank(); ++i) {
            left += big.mul(inc.apply(Vec(beta.segment(i * db, db))),
                            fb.elements[static_cast<size_t>(i)]);
            right += big.mul(fb.elements[static_cast<size_t>(i)],
                             inc.apply(Vec(gamma.segment(i * db, db))));
        }
        imprint(big.field, left);
        imprint(big.field, right);
        CHECK(matEq<Scalar>(Mat(left), Mat(e)));
        CHECK(matEq<Scalar>(Mat(right), Mat(e)));
    }

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FreeBasis fb3 =
        freeBasis(groupInclusion(Field::rationals(), s3, subgroupClosure(s3, {3})));
    CHECK(fb3.rank() == 2);

    FreeBasis fbId = freeBasis(identityMorphism(groupAlgebra(Field::prime(2),
                                                             FiniteGroup::cyclic(2))));
    CHECK(fbId.rank() == 1);
    CHECK(matEq<Scalar>(Mat(fbId.elements[0]), Mat(fbId.inclusion.target->basisVec(0))));
}

TEST_CASE("non-free extensions are detected")
{
    Field q = Field::rationals();
    auto k1 = trivialAlgebra(q);
    auto k2 = productAlgebra(k1, k1);
    auto k3 = productAlgebra(k2, k1);
    auto k4 = productAlgebra(k3, k1);

    // (x, y) -> (x, y, y): the index 3/2 is not an integer
    Mat into3 = matOver(q, {{1, 0}, {0, 1}, {0, 1}});
    CHECK_THROWS_AS(freeBasis(makeMorphism(k2, k3, into3)), NotFree);

    // (x, y) -> (x, y, y, y): index 2, but the module splits as 1 + 3
    Mat into4 = matOver(q, {{1, 0}, {0, 1}, {0, 1}, {0, 1}});
    CHECK_THROWS_AS(freeBasis(makeMorphism(k2, k4, into4)), NotFree);
}

TEST_CASE("coset witnesses satisfy the dual-basis identities")
{
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    FrobeniusExtensionWitness w = cosetWitness(Field::prime(2), c4, subgroupClosure(c4, {2}));
    const Algebra& a = *w.inclusion.target;
    REQUIRE(w.xs.size() == 2);
    CHECK(matEq<Scalar>(Mat(w.xs[1]), Mat(a.basisVec(1))));
    CHECK(matEq<Scalar>(Mat(w.ys[1]), Mat(a.basisVec(3)))); // the inverse of g
    CHECK(verifyWitness(w).ok);

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FrobeniusExtensionWitness w3 =
        cosetWitness(Field::rationals(), s3, subgroupClosure(s3, {3}));
    REQUIRE(w3.xs.size() == 2);
    CHECK(matEq<Scalar>(Mat(w3.xs[1]), Mat(w3.inclusion.target->basisVec(1))));
    CHECK(verifyWitness(w3).ok);

    // the identity extension projects with the identity map
    std::vector<int> all{0, 1, 2, 3};
    FrobeniusExtensionWitness wId = cosetWitness(Field::prime(2), c4, all);
    Mat eye = Mat::Identity(4, 4);
    imprint(Field::prime(2), eye);
    CHECK(matEq<Scalar>(wId.lambda, eye));
    CHECK(wId.xs.size() == 1);
    CHECK(verifyWitness(wId).ok);
}

TEST_CASE("broken witnesses are reported with a reason")
{
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    std::vector<int> sub = subgroupClosure(c4, {2});

    FrobeniusExtensionWitness shuffled = cosetWitness(Field::prime(2), c4, sub);
    std::swap(shuffled.ys[0], shuffled.ys[1]);
    WitnessReport rep = verifyWitness(shuffled);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front().find("identity fails") != std::string::npos);

    FrobeniusExtensionWitness leaky = cosetWitness(Field::prime(2), c4, sub);
    leaky.lambda(0, 1) = Scalar::of(Field::prime(2), 1);
    WitnessReport rep2 = verifyWitness(leaky);
    CHECK_FALSE(rep2.ok);
    REQUIRE_FALSE(rep2.violations.empty());
    CHECK(rep2.violations.front().find("bimodule") != std::string::npos);
}

TEST_CASE("induction and coinduction along an inclusion")
{
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    AlgebraMorphism inc = groupInclusion(Field::prime(2), c4, subgroupClosure(c4, {2}));
    FreeBasis fb = freeBasis(inc);
    AlgebraPtr bAlg = inc.source;

    FDModule kB = trivialModule(bAlg);
    FDModule ind = induce(fb, kB);
    ind.validate();
    REQUIRE(ind.dim == 2);
    // on the basis 1 (x) 1, g (x) 1 the generator swaps the two copies
    CHECK(matEq<Scalar>(ind.action[1], matOver(inc.target->field, {{0, 1}, {1, 0}})));

    FDModule coind = coinduce(fb, kB);
    coind.validate();
    CHECK(coind.dim == 2);

    // inducing the regular module gives the regular module upstairs
    FDModule indReg = induce(fb, regularModule(bAlg));
    indReg.validate();
    CHECK(indReg.dim == 4);
    CHECK(stripFreeSummands(indReg).dim == 0);

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    AlgebraMorphism inc3 =
        groupInclusion(Field::rationals(), s3, subgroupClosure(s3, {3}));
    FreeBasis fb3 = freeBasis(inc3);
    FDModule ind3 = induce(fb3, trivialModule(inc3.source));
    ind3.validate();
    CHECK(ind3.dim == 2); // rank x dim = [S3 : C3] x 1
    FDModule coind3 = coinduce(fb3, trivialModule(inc3.source));
    coind3.validate();
    CHECK(coind3.dim == 2);

    // along the identity, coinduction is the identity functor on the nose
    auto c2alg = groupAlgebra(Field::prime(2), FiniteGroup::cyclic(2));
    FreeBasis fbId = freeBasis(identityMorphism(c2alg));
    FDModule regB = regularModule(c2alg);
    FDModule coId = coinduce(fbId, regB);
    REQUIRE(coId.dim == regB.dim);
    for (Index i = 0; i < c2alg->dim; ++i)
        CHECK(matEq<Scalar>(coId.action[static_cast<size_t>(i)],
                            regB.action[static_cast<size_t>(i)]));
}

TEST_CASE("induction is exact and reflects injectivity and surjectivity")
{
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    AlgebraMorphism inc = groupInclusion(Field::prime(2), c4, subgroupClosure(c4, {2}));
    FreeBasis fb = freeBasis(inc);
    AlgebraPtr bAlg = inc.source;

    // the short exact sequence soc(B) -> B -> k of B-modules
    FDModule regB = regularModule(bAlg);
    Mat line = matOver(bAlg->field, {{1, 1}});
    Mat incl;
    FDModule sub = submoduleModule(regB, line, &incl);
    auto [quo, proj] = quotientModule(regB, line);

    FDModule indSub = induce(fb, sub);
    FDModule indReg = induce(fb, regB);
    FDModule indQuo = induce(fb, quo);
    CHECK(indSub.dim + indQuo.dim == indReg.dim);

    Mat fi = induceHom(fb, incl);
    Mat fp = induceHom(fb, proj.matrix);
    CHECK(intertwines(indSub, indReg, fi));
    CHECK(intertwines(indReg, indQuo, fp));
    CHECK(isZeroMat<Scalar>(Mat(fp * fi)));
    CHECK(matEq<Scalar>(rowBasis<Scalar>(kernel<Scalar>(fp)), image<Scalar>(fi)));

    // ranks scale by the free rank, so defects survive induction
    CHECK(rankOf<Scalar>(fi) == rankOf<Scalar>(incl) * fb.rank());
    CHECK(rankOf<Scalar>(fp) == rankOf<Scalar>(proj.matrix) * fb.rank());
    CHECK(rankOf<Scalar>(fi) == indSub.dim);  // still injective
    CHECK(rankOf<Scalar>(fp) == indQuo.dim);  // still surjective
}

TEST_CASE("the dual-basis map identifies coinduction with induction")
{
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    std::vector<int> sub = subgroupClosure(c4, {2});
    FrobeniusExtensionWitness w = cosetWitness(Field::prime(2), c4, sub);
    FreeBasis fb = freeBasis(w.inclusion);
    AlgebraPtr bAlg = w.inclusion.source;

    ModuleHom iso = indCoindIso(w, fb, trivialModule(bAlg));
    CHECK(iso.matrix.rows() == 2);
    CHECK(invert<Scalar>(iso.matrix).has_value());

    ModuleHom isoReg = indCoindIso(w, fb, regularModule(bAlg));
    CHECK(isoReg.matrix.rows() == 4);

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FrobeniusExtensionWitness w3 =
        cosetWitness(Field::rationals(), s3, subgroupClosure(s3, {3}));
    FreeBasis fb3 = freeBasis(w3.inclusion);
    ModuleHom iso3 = indCoindIso(w3, fb3, trivialModule(w3.inclusion.source));
    CHECK(iso3.matrix.rows() == 2);

    // along the identity extension the map is the identity
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    FrobeniusExtensionWitness wId = cosetWitness(Field::prime(2), c2, {0, 1});
    FreeBasis fbId = freeBasis(wId.inclusion);
    ModuleHom isoId = indCoindIso(wId, fbId, regularModule(wId.inclusion.source));
    Mat eye = Mat::Identity(2, 2);
    imprint(Field::prime(2), eye);
    CHECK(matEq<Scalar>(isoId.matrix, eye));
}

TEST_CASE("restriction along an inclusion")
{
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    AlgebraMorphism inc = groupInclusion(Field::prime(2), c4, subgroupClosure(c4, {2}));

    FDModule resReg = restrictModule(inc, regularModule(inc.target));
    resReg.validate();
    CHECK(resReg.dim == 4);
    CHECK(stripFreeSummands(resReg).dim == 0); // free of rank two downstairs

    FDModule resTriv = restrictModule(inc, trivialModule(inc.target));
    FDModule kB = trivialModule(inc.source);
    for (Index i = 0; i < inc.source->dim; ++i)
        CHECK(matEq<Scalar>(resTriv.action[static_cast<size_t>(i)],
                            kB.action[static_cast<size_t>(i)]));

    // over the rationals the unit of the adjunction splits: the module sits
    // inside the restriction of its induction
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    AlgebraMorphism inc3 =
        groupInclusion(Field::rationals(), s3, subgroupClosure(s3, {3}));
    FreeBasis fb3 = freeBasis(inc3);
    FDModule kC3 = trivialModule(inc3.source);
    FDModule back = restrictModule(inc3, induce(fb3, kC3));
    back.validate();
    CHECK(homSpace(kC3, back).rows() >= 1);
}

TEST_CASE("integrals are compatible with coset decompositions")
{
    struct Case {
        Field field;
        FiniteGroup big;
        std::vector<int> sub;
    };
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    std::vector<Case> cases = {
        {Field::prime(2), c4, subgroupClosure(c4, {2})},
        {Field::rationals(), s3, subgroupClosure(s3, {3})},
    };
    for (const auto& c : cases) {
        FrobeniusExtensionWitness w = cosetWitness(c.field, c.big, c.sub);
        const Algebra& a = *w.inclusion.target;
        const Algebra& b = *w.inclusion.source;

        // (k_1 + ... + k_r) * sum over the subgroup = sum over the group
        Vec reps = Vec::Zero(a.dim);
        for (const Vec& x : w.xs)
            reps += x;
        imprint(a.field, reps);
        Vec lhs = a.mul(reps, w.inclusion.apply(sumOfBasis(b)));
        CHECK(matEq<Scalar>(Mat(lhs), Mat(sumOfBasis(a))));

        // every integral upstairs lies in A * (integral downstairs)
        Mat intB = leftIntegrals(b);
        REQUIRE(intB.rows() == 1);
        Vec up = w.inclusion.apply(Vec(intB.row(0).transpose()));
        Mat span = rowBasis<Scalar>(Mat(a.rmat(up).transpose()));
        Mat intA = leftIntegrals(a);
        for (Index r = 0; r < intA.rows(); ++r)
            CHECK(member<Scalar>(span, Vec(intA.row(r).transpose())));
    }
}
