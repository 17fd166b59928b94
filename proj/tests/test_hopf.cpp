#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "locfrob/hopf.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace locfrob;
using fixtures::matOver;
using fixtures::vecOver;

namespace {

// One-dimensional parity representation of S3: transpositions act by -1.
FDModule signRepS3(const AlgebraPtr& a, const FiniteGroup& g)
{
    FDModule m;
    m.algebra = a;
    m.dim = 1;
    for (int i = 0; i < g.order(); ++i)
        m.action.push_back(matOver(a->field, {{g.elementOrder(i) == 2 ? -1 : 1}}));
    m.validate();
    return m;
}

Mat unitRowsAt(const AlgebraPtr& a, const std::vector<int>& idx)
{
    Mat m = Mat::Zero(static_cast<Index>(idx.size()), a->dim);
    for (size_t i = 0; i < idx.size(); ++i)
        m(static_cast<Index>(i), idx[i]) = Scalar(1);
    imprint(a->field, m);
    return m;
}

Mat eye(const AlgebraPtr& a)
{
    Mat m = Mat::Identity(a->dim, a->dim);
    imprint(a->field, m);
    return m;
}

} // namespace

TEST_CASE("group algebras carry a verified Hopf and Frobenius structure")
{
    for (const FiniteGroup& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2),
                                 FiniteGroup::symmetric(3), FiniteGroup::quaternion()}) {
        for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
            HopfTriple ht = groupHopf(f, g);
            ht.algebra->validate();
            HopfReport rep = verifyHopf(ht.hopf);
            CAPTURE(rep.violations);
            CHECK(rep.ok);
            CHECK(isInvolutive(ht.hopf));
            CHECK(ht.frob.symmetric);
            CHECK(rowBasis<Scalar>(leftIntegrals(*ht.algebra)).rows() == 1);
            CHECK(isUnimodular(*ht.algebra));
        }
    }
}

TEST_CASE("function algebras are dual Hopf structures with identity Gram matrix")
{
    for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        for (const FiniteGroup& g :
             {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
            HopfTriple du = dualFunctionAlgebra(f, g);
            du.algebra->validate();
            HopfReport rep = verifyHopf(du.hopf);
            CAPTURE(rep.violations);
            CHECK(rep.ok);
            CHECK(isInvolutive(du.hopf));
            CHECK(du.frob.symmetric);
            CHECK(matEq<Scalar>(du.frob.gram, eye(du.algebra)));

            // integrals concentrate on the identity element and the algebra
            // is split semisimple whatever the characteristic
            Mat li = rowBasis<Scalar>(leftIntegrals(*du.algebra));
            CHECK(matEq<Scalar>(li, unitRowsAt(du.algebra, {g.id})));
            CHECK(isUnimodular(*du.algebra));
            CHECK(maschkeSemisimple(*du.algebra));
            CHECK(radicalSubspace(*du.algebra).rows() == 0);
        }
    }
    // contrast: the group algebra of C4 over GF(2) is far from semisimple
    CHECK(!maschkeSemisimple(*groupAlgebra(Field::prime(2), FiniteGroup::cyclic(4))));
}

TEST_CASE("verifyHopf pinpoints broken axioms")
{
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    HopfTriple ht = groupHopf(Field::prime(3), c3);

    HopfData wrongAntipode = ht.hopf;
    wrongAntipode.antipode = eye(ht.algebra); // identity is not an antipode here
    HopfReport rep = verifyHopf(wrongAntipode);
    CHECK(!rep.ok);
    bool sawAntipode = false;
    for (const auto& v : rep.violations)
        sawAntipode = sawAntipode || v.find("antipode law fails") != std::string::npos;
    CHECK(sawAntipode);

    HopfData wrongCop = ht.hopf;
    wrongCop.coproduct.col(1).setZero(); // kills the counit law at g
    rep = verifyHopf(wrongCop);
    CHECK(!rep.ok);
    bool sawCounit = false;
    for (const auto& v : rep.violations)
        sawCounit = sawCounit || v.find("counit law fails") != std::string::npos;
    CHECK(sawCounit);
}

TEST_CASE("indicator and group bases pair off: products against coproducts")
{
    Field f = Field::prime(5);
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfTriple gh = groupHopf(f, s3);
    HopfTriple du = dualFunctionAlgebra(f, s3);
    const Index d = gh.algebra->dim;

    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            for (Index k = 0; k < d; ++k) {
                // <delta_i delta_j, g_k> = <delta_i (x) delta_j, Delta g_k>
                CHECK(du.algebra->lmul[static_cast<size_t>(i)].col(j)(k) ==
                      gh.hopf.coproduct.col(k)(i * d + j));
                // <Delta delta_i, g_j (x) g_k> = <delta_i, g_j g_k>
                CHECK(du.hopf.coproduct.col(i)(j * d + k) ==
                      gh.algebra->lmul[static_cast<size_t>(j)].col(k)(i));
            }
    CHECK(matEq<Scalar>(du.hopf.antipode, Mat(gh.hopf.antipode.transpose())));
}

TEST_CASE("diagonal tensor actions behave like representations")
{
    Field q = Field::rationals();
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfTriple ht = groupHopf(q, s3);
    const AlgebraPtr& a = ht.algebra;
    FDModule triv = trivialModule(a);
    FDModule sign = signRepS3(a, s3);
    FDModule reg = regularModule(a);

    FDModule ts = tensorModule(ht.hopf, triv, sign);
    ts.validate();
    CHECK(ts.dim == 1);
    CHECK(findIsomorphism(ts, sign).has_value());

    FDModule ss = tensorModule(ht.hopf, sign, sign);
    ss.validate();
    CHECK(findIsomorphism(ss, triv).has_value());

    FDModule rt = tensorModule(ht.hopf, reg, triv);
    rt.validate();
    CHECK(rt.dim == 6);
    CHECK(findIsomorphism(rt, reg).has_value());

    // over GF(2)C2 the square of the regular module is free of rank two
    HopfTriple h2 = groupHopf(Field::prime(2), FiniteGroup::cyclic(2));
    FDModule rr = tensorModule(h2.hopf, regularModule(h2.algebra), regularModule(h2.algebra));
    rr.validate();
    CHECK(rr.dim == 4);
    CHECK(stripFreeSummands(rr).dim == 0);
}

TEST_CASE("adjoint actions reduce to conjugation on group bases")
{
    Field q = Field::rationals();
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfTriple ht = groupHopf(q, s3);
    const AlgebraPtr& a = ht.algebra;

    for (int g = 0; g < s3.order(); ++g)
        for (int x = 0; x < s3.order(); ++x) {
            Vec left = adjointAction(ht.hopf, a->basisVec(g), a->basisVec(x), Side::Left);
            Vec right = adjointAction(ht.hopf, a->basisVec(g), a->basisVec(x), Side::Right);
            int conj = s3.op(s3.op(g, x), s3.inv[static_cast<size_t>(g)]);
            int jnoc = s3.op(s3.op(s3.inv[static_cast<size_t>(g)], x), g);
            CHECK(matEq<Scalar>(Mat(left), Mat(a->basisVec(conj))));
            CHECK(matEq<Scalar>(Mat(right), Mat(a->basisVec(jnoc))));
        }

    // on a central element the adjoint action collapses to the counit
    Vec center = fixtures::vec(*a, {1, 1, 1, 1, 1, 1});
    Vec h = fixtures::vec(*a, {1, 1, 0, 0, 0, 0}); // e + (23), counit 2
    Vec moved = adjointAction(ht.hopf, h, center, Side::Left);
    Vec expected = center + center;
    imprint(q, expected);
    CHECK(matEq<Scalar>(Mat(moved), Mat(expected)));

    CHECK_THROWS_AS(adjointAction(ht.hopf, h, center, Side::TwoSided), Error);
}

TEST_CASE("coinvariant quotients match induced trivial modules")
{
    Field f2 = Field::prime(2);
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    AlgebraMorphism inc = groupInclusion(f2, c4, subgroupClosure(c4, {2}));
    auto [quot, proj] = hModK(inc);
    quot.validate();
    CHECK(quot.dim == 2);
    CHECK(intertwines(regularModule(inc.target), quot, proj.matrix));

    FreeBasis fb = freeBasis(inc);
    FDModule ind = induce(fb, trivialModule(inc.source));
    CHECK(findIsomorphism(quot, ind).has_value());

    // K = H collapses to the trivial module, K = k changes nothing
    auto [one, projOne] = hModK(identityMorphism(inc.target));
    CHECK(one.dim == 1);
    CHECK(findIsomorphism(one, trivialModule(inc.target)).has_value());
    auto [whole, projWhole] = hModK(groupInclusion(f2, c4, {0}));
    CHECK(whole.dim == 4);
    CHECK(findIsomorphism(whole, regularModule(inc.target)).has_value());

    // and the rational S3 / C3 quotient is the induced trivial module again
    Field q = Field::rationals();
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    AlgebraMorphism inc3 = groupInclusion(q, s3, subgroupClosure(s3, {3}));
    auto [hk, projHk] = hModK(inc3);
    CHECK(hk.dim == 2);
    CHECK(findIsomorphism(hk, induce(freeBasis(inc3), trivialModule(inc3.source))).has_value());
}

TEST_CASE("the projection formula map is the identity along the identity inclusion")
{
    Field q = Field::rationals();
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfTriple ht = groupHopf(q, s3);
    FreeBasis fb = freeBasis(identityMorphism(ht.algebra));

    FDModule m = signRepS3(ht.algebra, s3);
    FDModule n = trivialModule(ht.algebra);
    TwistingIso ti = twistingIso(ht.hopf, ht.hopf, fb, m, n);
    CHECK(ti.source.dim == 1);
    CHECK(ti.target.dim == 1);
    CHECK(matEq<Scalar>(ti.matrix, eye(trivialAlgebra(q))));
}

TEST_CASE("the projection formula holds along proper subgroup inclusions")
{
    // S3 over C3 with one-dimensional factors
    Field q = Field::rationals();
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfTriple big = groupHopf(q, s3);
    std::vector<int> c3elems = subgroupClosure(s3, {3});
    FiniteGroup c3sub;
    AlgebraMorphism inc = groupInclusion(q, s3, c3elems, &c3sub);
    HopfTriple small = groupHopf(q, c3sub);
    FreeBasis fb = freeBasis(inc);

    FDModule m = signRepS3(big.algebra, s3);
    FDModule n = trivialModule(fb.inclusion.source);
    TwistingIso ti = twistingIso(big.hopf, small.hopf, fb, m, n);
    ti.source.validate();
    ti.target.validate();
    CHECK(ti.source.dim == 2);
    CHECK(ti.target.dim == 2);

    // C4 over C2 with the regular module on top, eight-dimensional carriers
    Field f2 = Field::prime(2);
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    HopfTriple big2 = groupHopf(f2, c4);
    FiniteGroup c2sub;
    AlgebraMorphism inc2 = groupInclusion(f2, c4, subgroupClosure(c4, {2}), &c2sub);
    HopfTriple small2 = groupHopf(f2, c2sub);
    FreeBasis fb2 = freeBasis(inc2);

    TwistingIso t2 = twistingIso(big2.hopf, small2.hopf, fb2, regularModule(big2.algebra),
                                 trivialModule(fb2.inclusion.source));
    CHECK(t2.source.dim == 8);
    CHECK(t2.target.dim == 8);

    // seeded random pairs keep the construction honest
    Rng rng(501);
    for (int trial = 0; trial < 3; ++trial) {
        FDModule rm = randomModule(big2.algebra, rng, 2, 1);
        FDModule rn = randomModule(fb2.inclusion.source, rng, 2, 1);
        TwistingIso tr = twistingIso(big2.hopf, small2.hopf, fb2, rm, rn);
        CHECK(tr.source.dim == tr.target.dim);
    }

    // modules over the wrong algebra are rejected
    CHECK_THROWS_AS(twistingIso(big2.hopf, small2.hopf, fb2, regularModule(big2.algebra),
                                trivialModule(big2.algebra)),
                    AlgebraMismatch);
}

TEST_CASE("normality of a subgroup inclusion is detected on both criteria")
{
    auto checkAgainstGroups = [](const Field& f, const FiniteGroup& g) {
        HopfTriple ht = groupHopf(f, g);
        for (const auto& sub : allSubgroups(g)) {
            AlgebraMorphism inc = groupInclusion(f, g, sub);
            NormalityReport rep = normalityCheck(ht.hopf, inc);
            bool expect = isNormalSubgroup(g, sub);
            CAPTURE(sub);
            CHECK(rep.idealsMatch == expect);
            CHECK(rep.adjointStable == expect);
            CHECK(rep.normal() == expect);
        }
    };
    checkAgainstGroups(Field::rationals(), FiniteGroup::symmetric(3));
    checkAgainstGroups(Field::prime(2), FiniteGroup::symmetric(3));
    checkAgainstGroups(Field::prime(3), FiniteGroup::dihedral(4));

    // pullback inclusions of function algebras sit inside a commutative host
    Field f2 = Field::prime(2);
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    HopfTriple du = dualFunctionAlgebra(f2, c4);
    AlgebraMorphism pull = dualPullback(f2, c4, subgroupClosure(c4, {2}));
    NormalityReport rep = normalityCheck(du.hopf, pull);
    CHECK(rep.normal());
}

TEST_CASE("products of subgroup algebras recover the algebra of the product group")
{
    Field q = Field::rationals();
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfTriple ht = groupHopf(q, s3);

    Mat c3rows = unitRowsAt(ht.algebra, subgroupClosure(s3, {3}));
    Mat c2rows = unitRowsAt(ht.algebra, {0, 1}); // e, (23)
    Mat prod = subHopfProduct(ht.hopf, c3rows, c2rows);
    CHECK(matEq<Scalar>(prod, eye(ht.algebra)));

    Mat same = subHopfProduct(ht.hopf, c3rows, c3rows);
    CHECK(matEq<Scalar>(same, c3rows));

    // two distinct transposition subgroups fail to normalize each other
    CHECK_THROWS_AS(subHopfProduct(ht.hopf, unitRowsAt(ht.algebra, {0, 2}),
                                   unitRowsAt(ht.algebra, {0, 5})),
                    NotNormalized);

    Field f2 = Field::prime(2);
    HopfTriple h4 = groupHopf(f2, FiniteGroup::cyclic(4));
    Mat krows = unitRowsAt(h4.algebra, {0, 2});
    CHECK(matEq<Scalar>(subHopfProduct(h4.hopf, krows, krows), krows));
}

TEST_CASE("function algebras pull back along group quotients")
{
    // Z/4 -> Z/2: the coset indicator lifts to the even-fiber indicator
    Field f2 = Field::prime(2);
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    std::vector<int> proj;
    FiniteGroup quot;
    AlgebraMorphism pull = dualPullback(f2, c4, subgroupClosure(c4, {2}), &quot, &proj);
    CHECK(quot.order() == 2);
    CHECK(pull.source->dim == 2);
    CHECK(pull.target->dim == 4);

    Vec cosetOfZero = pull.source->basisVec(proj[0]);
    Vec lifted = pull.apply(cosetOfZero);
    CHECK(matEq<Scalar>(Mat(lifted), Mat(vecOver(f2, {1, 0, 1, 0}))));
    Vec delta0 = pull.target->basisVec(0);
    CHECK(matEq<Scalar>(Mat(pull.target->mul(delta0, lifted)), Mat(delta0)));

    // Z/9 -> Z/3 over GF(3)
    Field f3 = Field::prime(3);
    FiniteGroup c9 = FiniteGroup::cyclic(9);
    std::vector<int> proj9;
    AlgebraMorphism pull9 = dualPullback(f3, c9, subgroupClosure(c9, {3}), nullptr, &proj9);
    Vec lifted9 = pull9.apply(pull9.source->basisVec(proj9[0]));
    CHECK(matEq<Scalar>(Mat(lifted9), Mat(vecOver(f3, {1, 0, 0, 1, 0, 0, 1, 0, 0}))));
    CHECK(matEq<Scalar>(Mat(pull9.target->mul(pull9.target->basisVec(0), lifted9)),
                        Mat(pull9.target->basisVec(0))));

    // pullback inclusions admit free bases even without basis-vector ones
    FreeBasis fb = freeBasis(pull);
    CHECK(fb.rank() == 2);
    FreeBasis fb9 = freeBasis(pull9);
    CHECK(fb9.rank() == 3);
    CHECK(induce(fb9, trivialModule(pull9.source)).dim == 3);
}
