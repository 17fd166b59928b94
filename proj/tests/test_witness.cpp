#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "locfrob/witness.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace locfrob;
using fixtures::vecOver;

namespace {

// the rank-one module where a permutation acts by its parity
FDModule signModule(const AlgebraPtr& a, const FiniteGroup& g)
{
    std::vector<int> even{0};
    if (g.n > 1)
        for (const auto& h : allSubgroups(g))
            if (static_cast<int>(h.size()) * 2 == g.n && isNormalSubgroup(g, h)) {
                even = h;
                break;
            }
    FDModule m;
    m.algebra = a;
    m.dim = 1;
    for (Index i = 0; i < a->dim; ++i) {
        bool evenElt = std::find(even.begin(), even.end(), static_cast<int>(i)) != even.end();
        Mat cell(1, 1);
        cell(0, 0) = Scalar::of(a->field, evenElt ? 1 : -1);
        imprint(a->field, cell);
        m.action.push_back(cell);
    }
    m.validate();
    return m;
}

} // namespace

TEST_CASE("the trivial hom tower is constant at dimension one")
{
    auto sys = pruferSystem(Field::prime(2), 2, 3);
    auto k = compatibleTrivial(sys);
    auto tower = homTower(sys, k, k, 3);
    REQUIRE(tower.stages == std::vector<int>{0, 1, 2, 3});
    for (Index d : tower.dims)
        CHECK(d == 1);
    CHECK(tower.descending);
    CHECK(tower.stabilized);
    CHECK(tower.finalDim == 1);

    std::map<int, FDModule> doubled;
    for (const auto& s : sys.stages) {
        FDModule t = trivialModule(s.algebra);
        doubled.emplace(s.id, directSum({t, t}));
    }
    auto kk = makeCompatible(sys, doubled);
    auto two = homTower(sys, k, kk, 3);
    CHECK(two.finalDim == 2);
    CHECK(two.stabilized);
}

TEST_CASE("a module turning nontrivial upstairs drops the tower dimension")
{
    auto sys = pruferSystem(Field::prime(2), 2, 2);
    std::map<int, FDModule> perStage;
    for (int id : {0, 1}) {
        FDModule t = trivialModule(sys.at(id).algebra);
        perStage.emplace(id, directSum({t, t}));
    }
    // at the top stage the generator acts by the unipotent Jordan block
    const auto& a2 = sys.at(2).algebra;
    FDModule top;
    top.algebra = a2;
    top.dim = 2;
    Mat id2 = Mat::Identity(2, 2);
    imprint(sys.field, id2);
    Mat jordan = fixtures::matOver(sys.field, {{1, 1}, {0, 1}});
    for (Index i = 0; i < a2->dim; ++i)
        top.action.push_back(i % 2 == 0 ? id2 : jordan);
    top.validate();
    perStage.emplace(2, top);

    auto n = makeCompatible(sys, perStage);
    auto k = compatibleTrivial(sys);
    auto tower = homTower(sys, k, n, 2);
    CHECK(tower.dims == std::vector<Index>{2, 2, 1});
    CHECK(tower.descending);
    CHECK_FALSE(tower.stabilized);
    CHECK(tower.finalDim == 1);

    // a family whose lower structure is not the restriction of the upper one
    // is rejected: here the middle stage acts by the Jordan block, which is
    // not the square of anything the top stage could do
    FDModule middle;
    middle.algebra = sys.at(1).algebra;
    middle.dim = 2;
    middle.action.push_back(id2);
    middle.action.push_back(jordan);
    middle.validate();
    std::map<int, FDModule> bad = perStage;
    bad.at(1) = middle;
    CHECK_THROWS_AS(makeCompatible(sys, bad), Error);
}

TEST_CASE("stage locality matches the modular group-algebra picture")
{
    CHECK(isLocalSystem(pruferSystem(Field::prime(2), 2, 3)).local);
    CHECK(isLocalSystem(pruferSystem(Field::prime(3), 3, 2)).local);

    auto rational = isLocalSystem(pruferSystem(Field::rationals(), 2, 2));
    CHECK_FALSE(rational.local);
    CHECK(rational.stageLocal[0].second);  // the bottom field stage
    CHECK_FALSE(rational.stageLocal[1].second);

    CHECK_FALSE(isLocalSystem(symmetricChainSystem(Field::rationals(), 3, 2)).local);
}

TEST_CASE("the radical of a stage pulls back into the radical below")
{
    auto modular = radicalContainment(pruferSystem(Field::prime(2), 2, 3), 3);
    CHECK(modular.ok);
    REQUIRE(modular.rows.size() == 3);
    CHECK(modular.rows[0].meetDim == 0); // the field stage meets nothing
    CHECK(modular.rows[1].meetDim == 1);
    CHECK(modular.rows[2].meetDim == 3);

    CHECK(radicalContainment(symmetricChainSystem(Field::prime(3), 4, 3), 3).ok);
    auto semisimple = radicalContainment(symmetricChainSystem(Field::rationals(), 4, 3), 3);
    CHECK(semisimple.ok);
    for (const auto& row : semisimple.rows)
        CHECK(row.meetDim == 0);
}

TEST_CASE("cyclic ideals meet the augmentation ideal within a few stages")
{
    auto sys = pruferSystem(Field::prime(2), 2, 3);

    auto g2 = colimElement(sys, 2, vecOver(sys.field, {0, 1, 0, 0}));
    auto w1 = essentialityWitness(sys, g2, 3);
    CHECK(w1.stage == 2);
    CHECK_FALSE(isZeroMat<Scalar>(Mat(w1.element)));

    // already inside the augmentation ideal: the witness is immediate
    auto inPlus = colimElement(sys, 1, vecOver(sys.field, {1, 1}));
    auto w2 = essentialityWitness(sys, inPlus, 3);
    CHECK(w2.stage == 1);
    CHECK(matEq<Scalar>(Mat(w2.element), Mat(vecOver(sys.field, {1, 1}))));

    // the unit generates everything, so any augmentation-ideal element works
    auto one = colimElement(sys, 0, vecOver(sys.field, {1}));
    auto w3 = essentialityWitness(sys, one, 3);
    CHECK(w3.stage == 1);
    CHECK(Scalar::of(sys.field, 0) == sys.at(w3.stage).algebra->eps(w3.element));

    CHECK_THROWS_AS(essentialityWitness(sys, colimElement(sys, 1, vecOver(sys.field, {0, 0})), 3),
                    Error);

    // against the subsystem spanned by the units alone nothing can meet
    std::map<int, Mat> units;
    for (const auto& s : sys.stages) {
        Mat row = Mat::Zero(1, s.algebra->dim);
        row(0, 0) = Scalar::of(sys.field, 1);
        imprint(sys.field, row);
        units.emplace(s.id, row);
    }
    CHECK_THROWS_AS(essentialityWitness(sys, g2, 3, &units), NotFoundAtDepth);
}

TEST_CASE("the trivial module escapes its embedded copy one stage up")
{
    auto sys = pruferSystem(Field::prime(2), 2, 2);
    auto w = noncoherenceWitness(sys, compatibleTrivial(sys), 1, 2);
    CHECK(w.stage == 2);
    CHECK(matEq<Scalar>(Mat(w.multiplier), Mat(vecOver(sys.field, {0, 1, 0, 0}))));
    CHECK(matEq<Scalar>(Mat(w.element), Mat(vecOver(sys.field, {1, 0, 1, 0}))));
    // the escape: g * (1 + g^2) = g + g^3 has left the line of 1 + g^2

    auto chain = symmetricChainSystem(Field::rationals(), 3, 2);
    auto wq = noncoherenceWitness(chain, compatibleTrivial(chain), 1, 2);
    CHECK(wq.stage == 2);

    auto dual = dualProfiniteSystem(Field::rationals(), 2, 2);
    auto wd = noncoherenceWitness(dual, compatibleTrivial(dual), 1, 2);
    CHECK(wd.stage == 2);

    // the sign line of the two-letter stage escapes inside the three-letter one
    std::map<int, FDModule> perStage;
    std::vector<FiniteGroup> groups{FiniteGroup::symmetric(1), FiniteGroup::symmetric(2),
                                    FiniteGroup::symmetric(3)};
    for (int id : {0, 1, 2})
        perStage.emplace(id, signModule(chain.at(id).algebra, groups[static_cast<size_t>(id)]));
    auto sign = makeCompatible(chain, perStage);
    auto ws = noncoherenceWitness(chain, sign, 1, 2);
    CHECK(ws.stage == 2);

    // within one stage no product ever leaves a submodule
    CHECK_THROWS_AS(noncoherenceWitness(sys, compatibleTrivial(sys), 2, 2),
                    NotFoundAtDepth);
}

TEST_CASE("minimal ideals descend to a stage with a certified ascent")
{
    auto rational = pruferSystem(Field::rationals(), 2, 3);
    auto w = colimElement(rational, 1, vecOver(rational.field, {1, 1}));
    auto descent = minimalIdealDescend(rational, w, 3);
    CHECK(descent.stage == 1);
    CHECK(descent.idealRows.rows() == 1);
    CHECK(descent.certifiedStages == std::vector<int>{2, 3});

    auto modular = pruferSystem(Field::prime(2), 2, 3);
    auto wm = colimElement(modular, 1, vecOver(modular.field, {1, 1}));
    auto dm = minimalIdealDescend(modular, wm, 3);
    CHECK(dm.stage == 1);
    CHECK(dm.certifiedStages == std::vector<int>{2, 3});

    auto dual = dualProfiniteSystem(Field::rationals(), 2, 3);
    auto delta = colimElement(dual, 1, vecOver(dual.field, {1, 0}));
    auto dd = minimalIdealDescend(dual, delta, 3);
    CHECK(dd.stage == 1);
    CHECK(dd.idealRows.rows() == 1);
    CHECK(dd.certifiedStages == std::vector<int>{2, 3});

    // the unit generates the improper ideal everywhere
    auto one = colimElement(rational, 0, vecOver(rational.field, {1}));
    try {
        minimalIdealDescend(rational, one, 3);
        FAIL("expected NotFoundAtDepth");
    } catch (const NotFoundAtDepth& e) {
        CHECK(std::string(e.what()).find("whole algebra") != std::string::npos);
    }

    // 1 + g at stage 2 spins up a three-dimensional ideal: never simple
    auto wide = colimElement(modular, 2, vecOver(modular.field, {1, 1, 0, 0}));
    CHECK_THROWS_AS(minimalIdealDescend(modular, wide, 3), NotFoundAtDepth);
}

TEST_CASE("compatible structures are validated along the inclusions")
{
    auto sys = pruferSystem(Field::prime(2), 2, 1);
    std::map<int, FDModule> perStage;
    perStage.emplace(0, trivialModule(sys.at(0).algebra));
    CHECK_THROWS_AS(makeCompatible(sys, perStage), Error); // stage 1 missing

    perStage.emplace(1, freeModule(sys.at(1).algebra, 1));
    CHECK_THROWS_AS(makeCompatible(sys, perStage), Error); // carrier dims differ
}
