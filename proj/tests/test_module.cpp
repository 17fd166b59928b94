#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "locfrob/module.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace locfrob;
using fixtures::matOver;
using fixtures::vecOver;

namespace {

AlgebraPtr gf2c2()
{
    return groupAlgebra(Field::prime(2), FiniteGroup::cyclic(2));
}

AlgebraPtr gf2c4()
{
    return groupAlgebra(Field::prime(2), FiniteGroup::cyclic(4));
}

// The two-dimensional irreducible of S3 on {(x, y, z) : x + y + z = 0},
// basis e1 - e2, e2 - e3, one matrix per group element in storage order
// e, (23), (12), (123), (132), (13).
FDModule standardRepS3(const AlgebraPtr& a)
{
    const Field& f = a->field;
    FDModule m;
    m.algebra = a;
    m.dim = 2;
    m.action = {
        matOver(f, {{1, 0}, {0, 1}}),   matOver(f, {{1, 0}, {1, -1}}),
        matOver(f, {{-1, 1}, {0, 1}}),  matOver(f, {{0, -1}, {1, -1}}),
        matOver(f, {{-1, 1}, {-1, 0}}), matOver(f, {{0, -1}, {-1, 0}}),
    };
    return m;
}

} // namespace

TEST_CASE("module constructors validate and have the expected shapes")
{
    auto a = gf2c2();
    FDModule reg = regularModule(a);
    FDModule triv = trivialModule(a);
    FDModule fr = freeModule(a, 3);
    FDModule zero = zeroModule(a);
    reg.validate();
    triv.validate();
    fr.validate();
    zero.validate();
    CHECK(reg.dim == 2);
    CHECK(triv.dim == 1);
    CHECK(fr.dim == 6);
    CHECK(zero.dim == 0);

    FDModule sum = directSum({reg, triv});
    sum.validate();
    CHECK(sum.dim == 3);

    auto s3 = groupAlgebra(Field::rationals(), FiniteGroup::symmetric(3));
    standardRepS3(s3).validate();

    FDModule broken = reg;
    broken.action[1](0, 0) = Scalar::of(a->field, 1);
    CHECK_THROWS_AS(broken.validate(), Error);
}

TEST_CASE("hom spaces over the group algebra of C2 in characteristic two")
{
    auto a = gf2c2();
    FDModule reg = regularModule(a);
    FDModule triv = trivialModule(a);

    CHECK(homSpace(triv, triv).rows() == 1);
    CHECK(homSpace(reg, reg).rows() == 2);
    CHECK(homSpace(reg, triv).rows() == 1);

    // maps k -> A are exactly the multiples of the integral 1 + g; a row of
    // the hom space is a flattened 2x1 matrix, which is the image of 1
    Mat embeddings = homSpace(triv, reg);
    REQUIRE(embeddings.rows() == 1);
    CHECK(matEq<Scalar>(rowBasis<Scalar>(embeddings), leftIntegrals(*a)));

    for (const Mat& h : homBasis(reg, reg))
        CHECK(intertwines(reg, reg, h));

    auto b = groupAlgebra(Field::prime(3), FiniteGroup::cyclic(3));
    CHECK_THROWS_AS(homSpace(triv, trivialModule(b)), AlgebraMismatch);
}

TEST_CASE("the trivial module embeds into the regular one along integrals")
{
    std::vector<AlgebraPtr> algebras = {
        gf2c2(),
        gf2c4(),
        groupAlgebra(Field::prime(3), FiniteGroup::cyclic(3)),
        groupAlgebra(Field::rationals(), FiniteGroup::symmetric(3)),
    };
    for (const auto& a : algebras) {
        Mat hom = homSpace(trivialModule(a), regularModule(a));
        REQUIRE(hom.rows() == 1);
        // each basis map sends 1 to an integral
        Vec img = hom.row(0).transpose();
        CHECK(member<Scalar>(leftIntegrals(*a), img));
    }
}

TEST_CASE("submodules and quotients of the regular module")
{
    auto a = gf2c2();
    FDModule reg = regularModule(a);

    CHECK(submoduleGenerated(reg, fixtures::rows(*a, {{1, 0}})).rows() == 2);
    Mat line = submoduleGenerated(reg, fixtures::rows(*a, {{1, 1}}));
    CHECK(matEq<Scalar>(line, fixtures::rows(*a, {{1, 1}})));

    Mat incl;
    FDModule sub = submoduleModule(reg, line, &incl);
    sub.validate();
    CHECK(sub.dim == 1);
    // g fixes 1 + g, so the abstract submodule is the trivial module
    CHECK(matEq<Scalar>(sub.action[1], trivialModule(a).action[1]));
    CHECK(matEq<Scalar>(incl, matOver(a->field, {{1}, {1}})));

    CHECK_THROWS_AS(submoduleModule(reg, fixtures::rows(*a, {{1, 0}})), NotSubmodule);

    auto [quot, proj] = quotientModule(reg, line);
    quot.validate();
    CHECK(quot.dim == 1);
    CHECK(matEq<Scalar>(quot.action[1], trivialModule(a).action[1]));
    // the projection kills the submodule and intertwines the actions
    CHECK(isZeroMat<Scalar>(Mat(proj.matrix * incl)));
    CHECK(intertwines(reg, quot, proj.matrix));
    CHECK(rankOf<Scalar>(proj.matrix) == 1);
}

TEST_CASE("simplicity: exhaustive spin, invariant lines, witnesses")
{
    auto a = gf2c2();
    FDModule reg = regularModule(a);
    FDModule triv = trivialModule(a);

    CHECK(isSimple(triv).verdict == SimpleVerdict::Simple);
    Simplicity s = isSimple(reg);
    CHECK(s.verdict == SimpleVerdict::NotSimple);
    CHECK(matEq<Scalar>(s.witness, fixtures::rows(*a, {{1, 1}})));

    auto qs3 = groupAlgebra(Field::rationals(), FiniteGroup::symmetric(3));
    CHECK(isSimple(standardRepS3(qs3)).verdict == SimpleVerdict::Simple);

    auto qc2 = groupAlgebra(Field::rationals(), FiniteGroup::cyclic(2));
    Simplicity r = isSimple(regularModule(qc2));
    CHECK(r.verdict == SimpleVerdict::NotSimple);
    FDModule w = submoduleModule(regularModule(qc2), r.witness);
    CHECK(w.dim == 1);

    CHECK(isSimple(zeroModule(a)).verdict == SimpleVerdict::NotSimple);
}

TEST_CASE("free covers and projectivity")
{
    auto a = gf2c2();
    FDModule reg = regularModule(a);
    FDModule triv = trivialModule(a);

    FreeCover cov = freeCover(triv);
    CHECK(cov.rank == 1);
    CHECK(matEq<Scalar>(cov.proj, matOver(a->field, {{1, 1}})));

    ProjectivityResult pr = isProjective(reg);
    CHECK(pr.projective);
    Mat eye = Mat::Identity(2, 2);
    imprint(a->field, eye);
    CHECK(matEq<Scalar>(Mat(pr.cover.proj * pr.splitting), eye));
    CHECK(intertwines(reg, freeModule(a, pr.cover.rank), pr.splitting));

    CHECK_FALSE(isProjective(triv).projective);
    CHECK(isProjective(freeModule(a, 2)).projective);

    // in characteristic zero every module over a group algebra is projective
    auto qc2 = groupAlgebra(Field::rationals(), FiniteGroup::cyclic(2));
    CHECK(isProjective(trivialModule(qc2)).projective);
}

TEST_CASE("the free resolution of the trivial module over GF(2)[C2] is periodic")
{
    auto a = gf2c2();
    FreeResolution res = freeResolution(trivialModule(a), 4);
    REQUIRE(res.ranks.size() == 5);
    for (Index r : res.ranks)
        CHECK(r == 1);
    CHECK(matEq<Scalar>(res.augment, matOver(a->field, {{1, 1}})));
    Mat expected = matOver(a->field, {{1, 1}, {1, 1}});
    for (const Mat& d : res.diff)
        CHECK(matEq<Scalar>(d, expected));
    CHECK(isZeroMat<Scalar>(Mat(res.augment * res.diff[0])));
    for (size_t i = 0; i + 1 < res.diff.size(); ++i)
        CHECK(isZeroMat<Scalar>(Mat(res.diff[i] * res.diff[i + 1])));
}

TEST_CASE("free resolutions are exact complexes of the right size")
{
    auto a = gf2c4();
    // the radical quotient A / soc(A) is neither free nor simple
    FDModule reg = regularModule(a);
    FDModule m = quotientModule(reg, socle(a, Side::Left).basis).first;
    m.validate();
    REQUIRE(m.dim == 3);

    FreeResolution res = freeResolution(m, 3);
    CHECK(rankOf<Scalar>(res.augment) == m.dim);
    CHECK(isZeroMat<Scalar>(Mat(res.augment * res.diff[0])));
    // exactness at F_0: the kernel of the augmentation equals the image below
    Mat kerAug = rowBasis<Scalar>(kernel<Scalar>(res.augment));
    CHECK(matEq<Scalar>(kerAug, image<Scalar>(res.diff[0])));
    for (size_t i = 0; i + 1 < res.diff.size(); ++i) {
        CHECK(isZeroMat<Scalar>(Mat(res.diff[i] * res.diff[i + 1])));
        CHECK(matEq<Scalar>(rowBasis<Scalar>(kernel<Scalar>(res.diff[i])),
                            image<Scalar>(res.diff[i + 1])));
    }
}

TEST_CASE("Ext dimensions match group cohomology")
{
    auto a = gf2c2();
    FDModule k2 = trivialModule(a);
    // H^i(C2, F2) is one-dimensional in every degree
    CHECK(extDims(k2, k2, 4) == std::vector<Index>{1, 1, 1, 1, 1});
    // free modules have no higher Ext in either slot
    CHECK(extDims(regularModule(a), k2, 3) == std::vector<Index>{1, 0, 0, 0});
    CHECK(extDims(k2, regularModule(a), 3) == std::vector<Index>{1, 0, 0, 0});

    auto b = groupAlgebra(Field::prime(3), FiniteGroup::cyclic(3));
    FDModule k3 = trivialModule(b);
    // H^i(C3, F3) is one-dimensional in every degree
    CHECK(extDims(k3, k3, 3) == std::vector<Index>{1, 1, 1, 1});

    // semisimple case: everything above degree zero vanishes
    auto q = groupAlgebra(Field::rationals(), FiniteGroup::cyclic(2));
    CHECK(extDims(trivialModule(q), trivialModule(q), 3) ==
          std::vector<Index>{1, 0, 0, 0});

    // degree zero agrees with the hom space
    auto s3 = groupAlgebra(Field::prime(2), FiniteGroup::symmetric(3));
    FDModule ks3 = trivialModule(s3);
    CHECK(extDims(ks3, regularModule(s3), 0)[0] == homSpace(ks3, regularModule(s3)).rows());
}

TEST_CASE("stable hom quotients away maps through free modules")
{
    auto a = gf2c2();
    FDModule k = trivialModule(a);
    FDModule reg = regularModule(a);

    StableHomResult kk = stableHom(k, k);
    CHECK(kk.hom.rows() == 1);
    CHECK(kk.phom.rows() == 0); // k -> A -> k passes through aug(1+g) = 0
    CHECK(kk.dim == 1);
    CHECK(kk.reps.rows() == 1);

    CHECK(stableHom(reg, reg).dim == 0);
    CHECK(stableHom(reg, k).dim == 0);
    CHECK(stableHom(k, reg).dim == 0);

    // over the rationals the composite k -> A -> k is multiplication by 2
    auto q = groupAlgebra(Field::rationals(), FiniteGroup::cyclic(2));
    StableHomResult qkk = stableHom(trivialModule(q), trivialModule(q));
    CHECK(qkk.hom.rows() == 1);
    CHECK(qkk.dim == 0);
}

TEST_CASE("syzygies: omega of the trivial module and of free modules")
{
    auto a = gf2c2();
    FDModule k = trivialModule(a);
    FDModule ok = omega(k);
    ok.validate();
    CHECK(ok.dim == 1);
    CHECK(stablyIsomorphic(ok, k));

    CHECK(omega(regularModule(a)).dim == 0);
    CHECK(omega(freeModule(a, 2)).dim == 0);

    auto b = gf2c4();
    FDModule kb = trivialModule(b);
    FDModule okb = omega(kb);
    okb.validate();
    CHECK(okb.dim == 3); // the augmentation ideal of a 4-dim local algebra
    CHECK_FALSE(stablyIsomorphic(okb, kb));
}

TEST_CASE("Ext in degree one is stable hom out of the syzygy")
{
    auto a = gf2c4();
    FDModule k = trivialModule(a);
    FDModule reg = regularModule(a);
    FDModule m = quotientModule(reg, socle(a, Side::Left).basis).first;

    std::vector<std::pair<FDModule, FDModule>> pairs = {
        {k, k}, {m, k}, {k, m}, {m, m}};
    for (const auto& [x, y] : pairs) {
        Index ext1 = extDims(x, y, 1)[1];
        CHECK(stableHom(omega(x), y).dim == ext1);
    }
}

TEST_CASE("mho inverts omega up to stable isomorphism")
{
    auto a = gf2c2();
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    FrobeniusData fd = frobeniusData(*a, fixtures::groupForm(*a, c2));

    FDModule k = trivialModule(a);
    FDModule mk = mho(k, fd);
    mk.validate();
    CHECK(mk.dim == 1);
    CHECK(stablyIsomorphic(mk, k));

    auto b = gf2c4();
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    FrobeniusData fdb = frobeniusData(*b, fixtures::groupForm(*b, c4));
    FDModule kb = trivialModule(b);
    FDModule regb = regularModule(b);
    FDModule mb = quotientModule(regb, socle(b, Side::Left).basis).first;
    for (const FDModule& m : {kb, mb}) {
        CHECK(stablyIsomorphic(mho(omega(m), fdb), m));
        CHECK(stablyIsomorphic(omega(mho(m, fdb)), m));
    }
}

TEST_CASE("stripping free summands")
{
    auto a = gf2c2();
    FDModule k = trivialModule(a);
    FDModule reg = regularModule(a);

    CHECK(stripFreeSummands(directSum({k, reg})).dim == 1);
    CHECK(stripFreeSummands(directSum({reg, reg})).dim == 0);
    CHECK(stripFreeSummands(k).dim == 1);

    // the augmentation ideal of GF(2)[C4] has no free summand
    auto b = gf2c4();
    FDModule okb = omega(trivialModule(b));
    CHECK(stripFreeSummands(okb).dim == 3);
}

TEST_CASE("stable isomorphism ignores free summands and sees dimensions")
{
    auto a = gf2c2();
    FDModule k = trivialModule(a);
    FDModule reg = regularModule(a);

    CHECK(stablyIsomorphic(k, directSum({k, reg})));
    CHECK_FALSE(stablyIsomorphic(k, directSum({k, k})));
    CHECK(stablyIsomorphic(reg, zeroModule(a)));

    // rational sampling path: distinct one-dimensional modules are rigid
    auto q = groupAlgebra(Field::rationals(), FiniteGroup::cyclic(2));
    FDModule kq = trivialModule(q);
    FDModule sign = kq;
    sign.action[1](0, 0) = Scalar::of(q->field, -1);
    sign.validate();
    CHECK(stablyIsomorphic(kq, kq));
    CHECK_FALSE(stablyIsomorphic(kq, sign));
}

TEST_CASE("Schanuel: kernels of different covers agree stably")
{
    auto a = gf2c4();
    FDModule k = trivialModule(a);

    Vec one = vecOver(a->field, {1});
    FreeCover small = coverFromGenerators(k, {one});
    FreeCover big = coverFromGenerators(k, {one, one});
    REQUIRE(small.rank == 1);
    REQUIRE(big.rank == 2);

    FDModule kerSmall = submoduleModule(freeModule(a, 1), kernel<Scalar>(small.proj));
    FDModule kerBig = submoduleModule(freeModule(a, 2), kernel<Scalar>(big.proj));
    CHECK(kerSmall.dim == 3);
    CHECK(kerBig.dim == 7);
    CHECK(stablyIsomorphic(kerSmall, kerBig));
}
