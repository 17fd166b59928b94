#include "locfrob/suites.hpp"

#include "locfrob/rng.hpp"
#include "locfrob/witness.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace locfrob {
namespace {

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Every random draw comes from a stream derived from the seed and a label,
// so checks see the same data whether they run alone or inside "all".
Rng seededRng(std::uint64_t seed, const std::string& label)
{
    return Rng(seed ^ fnv1a(label));
}

std::string pad2(size_t n)
{
    std::string s = std::to_string(n);
    return s.size() < 2 ? "0" + s : s;
}

CheckRecord record(std::string id, std::string anchor, bool ok, OrderedJson data)
{
    CheckRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.status = ok ? "pass" : "fail";
    r.data = std::move(data);
    return r;
}

int namedElement(const FiniteGroup& g, const std::string& name)
{
    for (int i = 0; i < g.n; ++i)
        if (g.names[static_cast<size_t>(i)] == name)
            return i;
    throw Error("no element named " + name);
}

Vec unitAt(const Field& f, Index dim, Index at)
{
    Vec v = Vec::Zero(dim);
    v(at) = Scalar::of(f, 1);
    imprint(f, v);
    return v;
}

// A named directed system a suite runs over: the acceptance fixtures are
// pinned, and the configured system is appended when it is not already one
// of them.
struct SystemFixture {
    std::string tag;
    DirectedSystem sys;
};

struct Pin {
    const char* tag;
    const char* family;
    int param;
    const char* field;
    int depth;
};

std::vector<SystemFixture> fixturesWithConfig(const SystemConfig& cfg, int depth,
                                              const std::vector<Pin>& pins)
{
    std::vector<SystemFixture> out;
    bool configIsPinned = false;
    for (const Pin& p : pins) {
        out.push_back({p.tag, builtinSystem(p.family, p.param, Field::parse(p.field),
                                            p.depth)});
        if (cfg.family == p.family && cfg.param == p.param &&
            cfg.field.name() == p.field && depth == p.depth)
            configIsPinned = true;
    }
    if (!configIsPinned)
        out.push_back({"config", buildSystem(cfg, depth)});
    return out;
}

// ---------------------------------------------------------------- frobenius

void frobeniusStageChecks(const DirectedSystem& sys, const std::string& tag,
                          std::vector<CheckRecord>& out)
{
    for (int id : sys.stageIds()) {
        const Stage& st = sys.at(id);
        const Algebra& a = *st.algebra;
        AlgebraValidation av = validateAlgebra(a);
        bool gramOk = st.frob.symmetric && invert<Scalar>(st.frob.gram).has_value();
        Mat il = leftIntegrals(a);
        Mat ir = rightIntegrals(a);
        bool uni = isUnimodular(a);
        bool ss = maschkeSemisimple(a);
        bool ssOk = true;
        std::optional<bool> ssExpected;
        if (sys.family == "dual_profinite") {
            ssExpected = true; // split commutative function algebra
        } else if (sys.family != "custom") {
            std::uint32_t p = a.field.characteristic();
            ssExpected = (p == 0) || (a.dim % static_cast<Index>(p) != 0);
        }
        if (ssExpected)
            ssOk = (ss == *ssExpected);
        bool ok = av.ok && gramOk && il.rows() == 1 && ir.rows() == 1 && uni && ssOk;
        OrderedJson data;
        data["system"] = tag;
        data["dim"] = a.dim;
        data["left_integrals"] = matJson(il);
        data["right_integrals"] = matJson(ir);
        data["unimodular"] = uni;
        data["semisimple"] = ss;
        if (ssExpected)
            data["semisimple_expected"] = *ssExpected;
        if (!av.ok)
            data["algebra_violations"] = av.violations;
        out.push_back(record(
            "frobenius.stage." + tag + "." + std::to_string(id),
            "every stage is a symmetric Frobenius algebra whose left and right "
            "integrals are one-dimensional and equal, and it is semisimple exactly "
            "when the characteristic predicts",
            ok, std::move(data)));
    }
}

void frobeniusSuite(const SystemConfig& cfg, std::uint64_t, int depth,
                    std::vector<CheckRecord>& out)
{
    frobeniusStageChecks(buildSystem(cfg, depth), "config", out);

    struct Entry {
        const char* name;
        FiniteGroup group;
    };
    const Entry groups[] = {
        {"c2", FiniteGroup::cyclic(2)},   {"c3", FiniteGroup::cyclic(3)},
        {"c4", FiniteGroup::cyclic(4)},   {"c6", FiniteGroup::cyclic(6)},
        {"s3", FiniteGroup::symmetric(3)}, {"d4", FiniteGroup::dihedral(4)},
        {"q8", FiniteGroup::quaternion()},
    };
    const char* fields[] = {"QQ", "GF(2)", "GF(3)", "GF(5)"};
    for (const Entry& e : groups) {
        for (const char* fname : fields) {
            Field f = Field::parse(fname);
            OrderedJson data;
            data["group"] = e.name;
            data["field"] = fname;
            bool ok = false;
            try {
                HopfTriple ht = groupHopf(f, e.group);
                const Algebra& a = *ht.algebra;
                AlgebraValidation av = validateAlgebra(a);
                bool gramOk =
                    ht.frob.symmetric && invert<Scalar>(ht.frob.gram).has_value();
                Mat il = leftIntegrals(a);
                Mat ir = rightIntegrals(a);
                bool uni = isUnimodular(a);
                bool ss = maschkeSemisimple(a);
                std::uint32_t p = f.characteristic();
                bool ssExpected = (p == 0) || (e.group.order() % static_cast<int>(p) != 0);
                ok = av.ok && gramOk && il.rows() == 1 && ir.rows() == 1 && uni &&
                     ss == ssExpected;
                data["order"] = e.group.order();
                data["left_integrals"] = matJson(il);
                data["right_integrals"] = matJson(ir);
                data["unimodular"] = uni;
                data["semisimple"] = ss;
                data["semisimple_expected"] = ssExpected;
            } catch (const Error& err) {
                data["error"] = err.what();
            }
            out.push_back(record(
                "frobenius.grid." + std::string(e.name) + "." + fname,
                "the group algebra is symmetric Frobenius with one-dimensional "
                "integrals, unimodular, and semisimple exactly when the "
                "characteristic does not divide the group order",
                ok, std::move(data)));
        }
    }

    // k x kC2 over GF(2): the integral (1,0,0) has nonzero augmentation, so
    // the raw integral criterion is satisfied, yet the radical is nonzero.
    // The criterion's equivalence with semisimplicity genuinely needs the
    // Hopf hypothesis.
    {
        Field f2 = Field::prime(2);
        AlgebraPtr r0 = groupAlgebra(f2, FiniteGroup::cyclic(2));
        RowVec form0 = groupHopf(f2, FiniteGroup::cyclic(2)).frob.form;
        OrderedJson data;
        bool ok = false;
        try {
            auto [r, fd] = maschkeCounterexample(r0, form0);
            AlgebraValidation av = validateAlgebra(*r);
            bool gramOk = fd.symmetric && invert<Scalar>(fd.gram).has_value();
            Mat il = leftIntegrals(*r);
            Vec e0 = unitAt(f2, r->dim, 0);
            bool integralIn = member<Scalar>(il, e0);
            bool criterionHolds = maschkeSemisimple(*r);
            Mat rad = radicalSubspace(*r);
            ok = av.ok && gramOk && integralIn && criterionHolds && rad.rows() > 0;
            data["dim"] = r->dim;
            data["left_integrals"] = matJson(il);
            data["unit_vector_is_integral"] = integralIn;
            data["integral_criterion"] = criterionHolds;
            data["radical_dim"] = rad.rows();
        } catch (const Error& err) {
            data["error"] = err.what();
        }
        out.push_back(record(
            "frobenius.counterexample",
            "the product of the ground field with the modular group algebra of "
            "the two-element group satisfies the integral criterion while having "
            "a nonzero radical, so the criterion needs the Hopf hypothesis",
            ok, std::move(data)));
    }
}

// --------------------------------------------------------------- extensions

void extensionsSuite(const SystemConfig&, std::uint64_t seed, int,
                     std::vector<CheckRecord>& out)
{
    const Field f = Field::prime(2);
    FiniteGroup s4 = FiniteGroup::symmetric(4);
    auto classes = subgroupConjugacyClasses(s4);
    std::vector<std::vector<int>> reps;
    for (const auto& cls : classes) {
        std::vector<int> rep = cls.front();
        std::sort(rep.begin(), rep.end());
        reps.push_back(std::move(rep));
    }

    for (size_t i = 0; i < reps.size(); ++i) {
        for (size_t j = 0; j < reps.size(); ++j) {
            if (!std::includes(reps[j].begin(), reps[j].end(), reps[i].begin(),
                               reps[i].end()))
                continue;
            OrderedJson data;
            data["subgroup"] = reps[i];
            data["overgroup"] = reps[j];
            Index index = static_cast<Index>(reps[j].size() / reps[i].size());
            data["index"] = index;
            bool ok = false;
            try {
                FiniteGroup k = subgroupAsGroup(s4, reps[j]);
                std::vector<int> hInK;
                for (size_t t = 0; t < reps[j].size(); ++t)
                    if (std::binary_search(reps[i].begin(), reps[i].end(), reps[j][t]))
                        hInK.push_back(static_cast<int>(t));
                FrobeniusExtensionWitness w = cosetWitness(f, k, hInK);
                WitnessReport wr = verifyWitness(w);
                FreeBasis fb = freeBasis(w.inclusion);
                bool rankOk = fb.rank() == index;
                Rng rng = seededRng(seed, "extensions." + pad2(i) + "-" + pad2(j));
                int isoOk = 0;
                for (int t = 0; t < 10; ++t) {
                    FDModule m = randomModule(w.inclusion.source, rng, 2, 1);
                    try {
                        indCoindIso(w, fb, m);
                        ++isoOk;
                    } catch (const Error&) {
                    }
                }
                ok = wr.ok && rankOk && isoOk == 10;
                data["witness_ok"] = wr.ok;
                if (!wr.ok)
                    data["witness_violations"] = wr.violations;
                data["free_basis_rank"] = fb.rank();
                data["iso_ok"] = isoOk;
            } catch (const Error& err) {
                data["error"] = err.what();
            }
            out.push_back(record(
                "extensions.s4.pair." + pad2(i) + "-" + pad2(j),
                "the coset projection is a bimodule map with two-sided dual bases, "
                "the free basis rank equals the subgroup index, and coinduction is "
                "naturally isomorphic to induction on random modules",
                ok, std::move(data)));
        }
    }
}

// ----------------------------------------------------------------- coherent

const std::vector<Pin>& coherentPins()
{
    static const std::vector<Pin> pins = {
        {"prufer2-gf2", "prufer", 2, "GF(2)", 3},
        {"prufer3-gf3", "prufer", 3, "GF(3)", 3},
        {"symmetric4-qq", "symmetric_chain", 4, "QQ", 3},
    };
    return pins;
}

void coherentSuite(const SystemConfig& cfg, std::uint64_t seed, int depth,
                   std::vector<CheckRecord>& out)
{
    for (const SystemFixture& fix : fixturesWithConfig(cfg, depth, coherentPins())) {
        const DirectedSystem& sys = fix.sys;
        const std::vector<int> ids = sys.stageIds();
        const int top = ids.back();

        {
            bool ok = true;
            OrderedJson cases = OrderedJson::array();
            for (int lam : ids) {
                AlgebraPtr a = sys.at(lam).algebra;
                Rng rng = seededRng(seed, "coherent.cohdim." + fix.tag + "." +
                                              std::to_string(lam));
                std::vector<std::pair<std::string, FDModule>> mods;
                mods.emplace_back("trivial", trivialModule(a));
                mods.emplace_back("regular", regularModule(a));
                mods.emplace_back("random", randomModule(a, rng, 2, 1));
                for (const auto& [mname, mod] : mods) {
                    CoherentModule cm = coherentModule(sys, lam, mod);
                    Ratio d0 = cohDim(sys, cm);
                    bool invariant = true;
                    for (int mu : ids)
                        if (mu != lam && sys.leq(lam, mu))
                            invariant = invariant &&
                                        cohDim(sys, representAt(sys, cm, mu)) == d0;
                    ok = ok && invariant;
                    OrderedJson c;
                    c["stage"] = lam;
                    c["module"] = mname;
                    c["cohdim"] = d0.str();
                    c["invariant"] = invariant;
                    cases.push_back(std::move(c));
                }
            }
            OrderedJson data;
            data["cases"] = std::move(cases);
            out.push_back(record(
                "coherent.cohdim-invariance." + fix.tag,
                "the normalized dimension of a stage module is unchanged by "
                "re-presenting it at any higher stage",
                ok, std::move(data)));
        }

        {
            bool ok = true;
            OrderedJson cases = OrderedJson::array();
            for (int lam : ids) {
                AlgebraPtr a = sys.at(lam).algebra;
                Rng rng = seededRng(seed, "coherent.cohrk." + fix.tag + "." +
                                              std::to_string(lam));
                std::vector<std::pair<std::string, FDModule>> mods;
                mods.emplace_back("trivial", trivialModule(a));
                mods.emplace_back("regular", regularModule(a));
                mods.emplace_back("random", randomModule(a, rng, 2, 1));
                for (const auto& [mname, mod] : mods) {
                    CoherentModule cm = coherentModule(sys, lam, mod);
                    Ratio d = cohDim(sys, cm);
                    CoherentRank r = cohRank(sys, cm, true);
                    bool dominates = !(r.rank < d);
                    ok = ok && dominates;
                    OrderedJson c;
                    c["stage"] = lam;
                    c["module"] = mname;
                    c["cohdim"] = d.str();
                    c["cohrank"] = r.rank.str();
                    c["method"] = r.method;
                    c["exact"] = r.exact;
                    cases.push_back(std::move(c));
                }
            }
            OrderedJson data;
            data["cases"] = std::move(cases);
            out.push_back(record(
                "coherent.cohrk-dominates." + fix.tag,
                "the normalized rank of a covering projective is at least the "
                "normalized dimension of the module it covers",
                ok, std::move(data)));
        }

        {
            bool ok = true;
            OrderedJson cases = OrderedJson::array();
            Rng rng = seededRng(seed, "coherent.growth." + fix.tag);
            for (int t = 0; t < 10; ++t) {
                int stage =
                    top <= 1 ? top
                             : 1 + static_cast<int>(rng.below(
                                       static_cast<std::uint64_t>(top - 1)));
                AlgebraPtr a = sys.at(stage).algebra;
                const Field& f = a->field;
                Mat rows;
                for (int tries = 0; tries < 200 && rows.rows() == 0; ++tries) {
                    // Projecting away the augmentation lands in a proper ideal,
                    // so the seeds generate proper left ideals even over
                    // semisimple stages where random elements are units.
                    Vec v = rng.vec(f, a->dim);
                    Vec vPlus = v - (a->aug * v)(0, 0) * a->one;
                    imprint(f, vPlus);
                    if (isZeroMat<Scalar>(vPlus))
                        continue;
                    Mat cand = spinLeft(*a, vPlus);
                    if (cand.rows() > 0 && cand.rows() < a->dim)
                        rows = cand;
                }
                OrderedJson c;
                c["stage"] = stage;
                if (rows.rows() == 0) {
                    ok = false;
                    c["error"] = "no proper ideal found";
                } else {
                    GrowthTable g = stageDimGrowth(sys, stage, rows, top);
                    ok = ok && g.strict;
                    OrderedJson table = OrderedJson::array();
                    for (const auto& [mu, q] : g.rows)
                        table.push_back(OrderedJson::array({mu, q}));
                    c["ideal_dim"] = rows.rows();
                    c["quotient_dims"] = std::move(table);
                    c["strict"] = g.strict;
                }
                cases.push_back(std::move(c));
            }
            OrderedJson data;
            data["cases"] = std::move(cases);
            out.push_back(record(
                "coherent.growth-strict." + fix.tag,
                "the codimension of the ideal generated by a proper stage ideal "
                "grows strictly along every comparable pair of higher stages",
                ok, std::move(data)));
        }
    }
}

// ------------------------------------------------------------------- ideals

// Finds up to `want` distinct minimal left ideals by spinning candidate
// vectors and descending along proper submodules. Candidates whose spin is
// the whole algebra are skipped: descending from the full regular module
// funnels every start into the same ideal, which defeats the search for
// distinct ones.
std::vector<Mat> minimalLeftIdeals(const AlgebraPtr& a, size_t want, Rng& rng)
{
    FDModule reg = regularModule(a);
    std::vector<Mat> found;
    auto addDistinct = [&](const Mat& rows) {
        for (const Mat& have : found)
            if (have.rows() == rows.rows() && matEq<Scalar>(have, rows))
                return;
        found.push_back(rows);
    };
    auto descend = [&](Vec v) {
        for (int guard = 0; guard < 32; ++guard) {
            if (isZeroMat<Scalar>(v))
                return;
            Mat rows = spinLeft(*a, v);
            if (rows.rows() == 0 || (rows.rows() == a->dim && a->dim > 1))
                return;
            int minimal = -1;
            if (rows.rows() == 1) {
                minimal = 1;
            } else {
                try {
                    minimal = isMinimalLeftIdeal(*a, rows) ? 1 : 0;
                } catch (const AlgorithmInapplicable&) {
                }
            }
            if (minimal == 1) {
                addDistinct(rows);
                return;
            }
            Mat inc;
            FDModule sub = submoduleModule(reg, rows, &inc);
            Simplicity s = isSimple(sub);
            if (s.verdict == SimpleVerdict::Simple) {
                if (minimal != 0)
                    addDistinct(rows);
                return;
            }
            if (s.verdict != SimpleVerdict::NotSimple || s.witness.rows() == 0)
                return;
            Mat lifted = s.witness * inc.transpose();
            imprint(a->field, lifted);
            v = Vec(lifted.row(0).transpose());
        }
    };

    for (Index i = 0; i < a->dim && found.size() < want; ++i)
        descend(a->basisVec(i));
    for (Index i = 0; i < a->dim && found.size() < want; ++i)
        for (Index j = i + 1; j < a->dim && found.size() < want; ++j) {
            Vec v = a->basisVec(i) - a->basisVec(j);
            imprint(a->field, v);
            descend(v);
        }
    for (int t = 0; t < 300 && found.size() < want; ++t)
        descend(rng.nonzeroVec(a->field, a->dim));
    return found;
}

struct DichotomyOutcome {
    bool exactlyOne = false;
    bool squareZero = false;
    Vec idempotent;
};

DichotomyOutcome classifyMinimalIdeal(const AlgebraPtr& a, const Mat& rows)
{
    Ideal l = makeIdeal(a, Side::Left, rows);
    MinimalIdealClass cls = minimalIdealDichotomy(a, l);
    bool squareIsZero = productSpan(*a, rows, rows).rows() == 0;
    DichotomyOutcome outcome;
    outcome.squareZero = cls.squareZero;
    if (cls.squareZero) {
        outcome.exactlyOne = squareIsZero;
    } else {
        const Vec& e = cls.idempotent;
        Vec ee = a->mul(e, e);
        outcome.exactlyOne = !squareIsZero && !isZeroMat<Scalar>(e) &&
                             matEq<Scalar>(Mat(ee), Mat(e)) &&
                             member<Scalar>(rows, e);
        outcome.idempotent = e;
    }
    return outcome;
}

void idealsSuite(const SystemConfig& cfg, std::uint64_t seed, int depth,
                 std::vector<CheckRecord>& out)
{
    {
        bool ok = true;
        OrderedJson cases = OrderedJson::array();
        struct Entry {
            std::string name;
            AlgebraPtr algebra;
        };
        std::vector<Entry> algebras;
        const char* fields[] = {"GF(2)", "GF(3)"};
        const std::pair<const char*, FiniteGroup> groups[] = {
            {"c2", FiniteGroup::cyclic(2)},   {"c3", FiniteGroup::cyclic(3)},
            {"c4", FiniteGroup::cyclic(4)},   {"c6", FiniteGroup::cyclic(6)},
            {"s3", FiniteGroup::symmetric(3)}, {"d4", FiniteGroup::dihedral(4)},
            {"q8", FiniteGroup::quaternion()},
        };
        for (const char* fname : fields) {
            Field f = Field::parse(fname);
            for (const auto& [gname, group] : groups)
                algebras.push_back(
                    {std::string(gname) + "/" + fname, groupAlgebra(f, group)});
            algebras.push_back({std::string("dual-c8/") + fname,
                                dualFunctionAlgebra(f, FiniteGroup::cyclic(8)).algebra});
        }
        for (const Entry& e : algebras) {
            Mat fast = radicalSubspace(*e.algebra);
            Mat brute = radicalBrute(*e.algebra);
            bool agree = fast.rows() == brute.rows() && matEq<Scalar>(fast, brute);
            ok = ok && agree;
            OrderedJson c;
            c["algebra"] = e.name;
            c["dim"] = e.algebra->dim;
            c["radical_dim"] = fast.rows();
            c["agree"] = agree;
            cases.push_back(std::move(c));
        }
        OrderedJson data;
        data["cases"] = std::move(cases);
        out.push_back(record(
            "ideals.radical-vs-brute",
            "the radical computed through annihilators agrees with brute-force "
            "enumeration of nilpotent ideal elements on every small algebra",
            ok, std::move(data)));
    }

    for (const SystemFixture& fix : fixturesWithConfig(cfg, depth, coherentPins())) {
        bool ok = true;
        OrderedJson stages = OrderedJson::array();
        for (int id : fix.sys.stageIds()) {
            AlgebraPtr a = fix.sys.at(id).algebra;
            Ideal sl = socle(a, Side::Left);
            Ideal sr = socle(a, Side::Right);
            bool equal = sl.dim() == sr.dim() && matEq<Scalar>(sl.basis, sr.basis);
            ok = ok && equal;
            OrderedJson c;
            c["stage"] = id;
            c["socle_dim"] = sl.dim();
            c["left_equals_right"] = equal;
            stages.push_back(std::move(c));
        }
        OrderedJson data;
        data["stages"] = std::move(stages);
        out.push_back(record("ideals.socle-symmetric." + fix.tag,
                             "left and right socles coincide at every symmetric "
                             "Frobenius stage",
                             ok, std::move(data)));
    }

    {
        struct Fixture {
            const char* tag;
            AlgebraPtr algebra;
            size_t want;
        };
        const std::vector<Fixture> fixtures = {
            {"gf5-s3", groupAlgebra(Field::prime(5), FiniteGroup::symmetric(3)), 5},
            {"gf5-d4", groupAlgebra(Field::prime(5), FiniteGroup::dihedral(4)), 5},
            {"gf2-dual-c8",
             dualFunctionAlgebra(Field::prime(2), FiniteGroup::cyclic(8)).algebra, 5},
        };
        for (const Fixture& fx : fixtures) {
            Rng rng = seededRng(seed, std::string("ideals.dichotomy.") + fx.tag);
            std::vector<Mat> ideals = minimalLeftIdeals(fx.algebra, fx.want, rng);
            bool ok = ideals.size() >= fx.want;
            OrderedJson cases = OrderedJson::array();
            for (const Mat& rows : ideals) {
                DichotomyOutcome o = classifyMinimalIdeal(fx.algebra, rows);
                ok = ok && o.exactlyOne;
                OrderedJson c;
                c["ideal_dim"] = rows.rows();
                c["square_zero"] = o.squareZero;
                if (!o.squareZero)
                    c["idempotent"] = vecJson(o.idempotent);
                c["exactly_one_branch"] = o.exactlyOne;
                cases.push_back(std::move(c));
            }
            OrderedJson data;
            data["found"] = ideals.size();
            data["cases"] = std::move(cases);
            out.push_back(record(
                std::string("ideals.dichotomy.") + fx.tag,
                "every minimal left ideal either squares to zero or is generated "
                "by an idempotent, never both",
                ok, std::move(data)));
        }

        // Local modular stages supply the square-zero branch: the unique
        // minimal ideal is spanned by the sum of the group elements.
        const std::vector<std::pair<const char*, AlgebraPtr>> locals = {
            {"gf2-c4", groupAlgebra(Field::prime(2), FiniteGroup::cyclic(4))},
            {"gf3-c3", groupAlgebra(Field::prime(3), FiniteGroup::cyclic(3))},
        };
        bool ok = true;
        OrderedJson cases = OrderedJson::array();
        for (const auto& [name, a] : locals) {
            Rng rng = seededRng(seed, std::string("ideals.dichotomy.sq.") + name);
            std::vector<Mat> ideals = minimalLeftIdeals(a, 1, rng);
            bool thisOk = false;
            OrderedJson c;
            c["algebra"] = name;
            if (!ideals.empty()) {
                DichotomyOutcome o = classifyMinimalIdeal(a, ideals.front());
                thisOk = o.exactlyOne && o.squareZero;
                c["ideal_dim"] = ideals.front().rows();
                c["square_zero"] = o.squareZero;
            }
            ok = ok && thisOk;
            cases.push_back(std::move(c));
        }
        OrderedJson data;
        data["cases"] = std::move(cases);
        out.push_back(record("ideals.dichotomy.square-zero",
                             "the minimal ideal of a local modular group algebra "
                             "squares to zero",
                             ok, std::move(data)));
    }

    for (const SystemFixture& fix : fixturesWithConfig(cfg, depth, coherentPins())) {
        RadicalContainment rc = radicalContainment(fix.sys, 3);
        OrderedJson rows = OrderedJson::array();
        for (const auto& r : rc.rows) {
            OrderedJson c;
            c["from"] = r.from;
            c["to"] = r.to;
            c["meet_dim"] = r.meetDim;
            c["contained"] = r.ok;
            rows.push_back(std::move(c));
        }
        OrderedJson data;
        data["pairs"] = std::move(rows);
        out.push_back(record("ideals.radical-containment." + fix.tag,
                             "a stage meets the radical of any higher stage inside "
                             "the image of its own radical",
                             rc.ok, std::move(data)));
    }
}

// --------------------------------------------------------------------- hopf

void hopfAxiomChecks(const DirectedSystem& sys, const std::string& tag,
                     std::vector<CheckRecord>& out)
{
    bool ok = true;
    OrderedJson stages = OrderedJson::array();
    for (int id : sys.stageIds()) {
        const Stage& st = sys.at(id);
        OrderedJson c;
        c["stage"] = id;
        if (!st.hopf) {
            c["hopf"] = false;
        } else {
            HopfReport hr = verifyHopf(*st.hopf);
            bool inv = isInvolutive(*st.hopf);
            ok = ok && hr.ok && inv;
            c["axioms_ok"] = hr.ok;
            c["involutive"] = inv;
            if (!hr.ok)
                c["violations"] = hr.violations;
        }
        stages.push_back(std::move(c));
    }
    OrderedJson data;
    data["stages"] = std::move(stages);
    out.push_back(record("hopf.stage-axioms." + tag,
                         "every stage coproduct is coassociative and counital, "
                         "multiplicative with grouplike unit, and its antipode "
                         "satisfies both defining identities and is involutive",
                         ok, std::move(data)));
}

void hopfSuite(const SystemConfig& cfg, std::uint64_t seed, int depth,
               std::vector<CheckRecord>& out)
{
    const std::vector<Pin> pins = {
        {"dual2-qq", "dual_profinite", 2, "QQ", 3},
        {"dual3-qq", "dual_profinite", 3, "QQ", 3},
        {"symmetric3-qq", "symmetric_chain", 3, "QQ", 2},
    };
    std::vector<SystemFixture> fixtures = fixturesWithConfig(cfg, depth, pins);
    for (const SystemFixture& fix : fixtures)
        hopfAxiomChecks(fix.sys, fix.tag, out);

    struct TwistCase {
        const char* tag;
        Field field;
        FiniteGroup big;
        std::vector<int> sub;
    };
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    const std::vector<TwistCase> twists = {
        {"s3-over-c3", Field::rationals(), s3,
         subgroupClosure(s3, {namedElement(s3, "(123)")})},
        {"c4-over-c2", Field::prime(2), c4, {0, 2}},
    };
    for (const TwistCase& tc : twists) {
        OrderedJson data;
        bool ok = false;
        try {
            HopfTriple big = groupHopf(tc.field, tc.big);
            FiniteGroup subGroup;
            AlgebraMorphism inc =
                groupInclusion(tc.field, tc.big, tc.sub, &subGroup);
            HopfTriple small = groupHopf(tc.field, subGroup);
            FreeBasis fb = freeBasis(inc);
            Rng rng = seededRng(seed, std::string("hopf.twisting.") + tc.tag);
            int isoOk = 0;
            for (int t = 0; t < 10; ++t) {
                FDModule m = randomModule(big.algebra, rng, 1, 1);
                FDModule n = randomModule(inc.source, rng, 1, 1);
                try {
                    twistingIso(big.hopf, small.hopf, fb, m, n);
                    ++isoOk;
                } catch (const Error&) {
                }
            }
            ok = isoOk == 10;
            data["pairs_ok"] = isoOk;
        } catch (const Error& err) {
            data["error"] = err.what();
        }
        out.push_back(record(
            std::string("hopf.twisting.") + tc.tag,
            "induction along the subalgebra twists across tensor products: the "
            "projection-formula map is a bijective intertwiner on random modules",
            ok, std::move(data)));
    }

    {
        const std::vector<std::pair<const char*, FiniteGroup>> groups = {
            {"s3", FiniteGroup::symmetric(3)},
            {"s4", FiniteGroup::symmetric(4)},
            {"d4", FiniteGroup::dihedral(4)},
        };
        Field f2 = Field::prime(2);
        for (const auto& [gname, g] : groups) {
            HopfTriple h = groupHopf(f2, g);
            bool ok = true;
            OrderedJson subs = OrderedJson::array();
            for (const std::vector<int>& sub : allSubgroups(g)) {
                AlgebraMorphism inc = groupInclusion(f2, g, sub);
                NormalityReport nr = normalityCheck(h.hopf, inc);
                bool expected = isNormalSubgroup(g, sub);
                bool agree = nr.normal() == expected;
                ok = ok && agree;
                OrderedJson c;
                c["order"] = sub.size();
                c["elements"] = sub;
                c["normal"] = nr.normal();
                c["expected"] = expected;
                subs.push_back(std::move(c));
            }
            OrderedJson data;
            data["subgroups"] = std::move(subs);
            out.push_back(record(
                std::string("hopf.normality.") + gname,
                "adjoint stability together with equality of the one-sided ideals "
                "detects exactly the normal subgroups",
                ok, std::move(data)));
        }
    }

    {
        OrderedJson data;
        bool ok = false;
        try {
            Field f = Field::rationals();
            HopfTriple h = groupHopf(f, s3);
            std::vector<int> c3 = subgroupClosure(s3, {namedElement(s3, "(123)")});
            std::vector<int> c2 = subgroupClosure(s3, {namedElement(s3, "(12)")});
            auto spanOf = [&](const std::vector<int>& elems) {
                Mat rows = Mat::Zero(static_cast<Index>(elems.size()), h.algebra->dim);
                for (size_t r = 0; r < elems.size(); ++r)
                    rows(static_cast<Index>(r), elems[r]) = Scalar::of(f, 1);
                imprint(f, rows);
                return rows;
            };
            Mat prod = subHopfProduct(h.hopf, spanOf(c3), spanOf(c2));
            ok = prod.rows() == h.algebra->dim;
            data["product_dim"] = prod.rows();
            data["ambient_dim"] = h.algebra->dim;
        } catch (const Error& err) {
            data["error"] = err.what();
        }
        out.push_back(record(
            "hopf.subhopf-product",
            "the product of the order-three and order-two subalgebras of the "
            "symmetric-group algebra on three letters is the whole algebra",
            ok, std::move(data)));
    }

    for (int p : {2, 3}) {
        OrderedJson data;
        bool ok = false;
        try {
            DirectedSystem sys = builtinSystem("dual_profinite", p, Field::rationals(), 3);
            AlgebraPtr a3 = sys.at(3).algebra;
            Vec d0 = unitAt(sys.field, a3->dim, 0);
            Vec pulled = sys.inclusion(2, 3).apply(unitAt(sys.field, sys.at(2).algebra->dim, 0));
            Vec prod = a3->mul(d0, pulled);
            ok = matEq<Scalar>(Mat(prod), Mat(d0));
            data["p"] = p;
            data["product"] = vecJson(prod);
        } catch (const Error& err) {
            data["error"] = err.what();
        }
        out.push_back(record(
            "hopf.dual-delta." + std::to_string(p),
            "the depth-three point mass at zero, multiplied by the pullback of "
            "the depth-two point mass at zero, reproduces itself",
            ok, std::move(data)));
    }
}

// -------------------------------------------------------------- homological

void homologicalSuite(const SystemConfig& cfg, std::uint64_t seed, int depth,
                      std::vector<CheckRecord>& out)
{
    const Field f2 = Field::prime(2);

    {
        AlgebraPtr a = groupAlgebra(f2, FiniteGroup::cyclic(2));
        FDModule k = trivialModule(a);
        std::vector<Index> dims = extDims(k, k, 4);
        bool ok = dims.size() == 5;
        for (Index d : dims)
            ok = ok && d == 1;
        OrderedJson data;
        data["ext_dims"] = dims;
        out.push_back(record(
            "homological.ext-kk",
            "the self-extensions of the trivial module over the modular group "
            "algebra of the two-element group are one-dimensional in every degree",
            ok, std::move(data)));
    }

    {
        DirectedSystem sys = buildSystem(cfg, depth);
        bool ok = true;
        OrderedJson pairs = OrderedJson::array();
        for (const auto& cover : sys.covers) {
            const AlgebraMorphism& arrow = sys.arrows.at(cover);
            FDModule n = restrictModule(arrow, regularModule(arrow.target));
            Rng rng = seededRng(seed, "homological.vanishing." +
                                          std::to_string(cover.first) + "-" +
                                          std::to_string(cover.second));
            int okCount = 0;
            for (int t = 0; t < 10; ++t) {
                FDModule m = randomModule(arrow.source, rng, 2, 1);
                std::vector<Index> dims = extDims(m, n, 2);
                if (dims[1] == 0 && dims[2] == 0)
                    ++okCount;
            }
            ok = ok && okCount == 10;
            OrderedJson c;
            c["from"] = cover.first;
            c["to"] = cover.second;
            c["vanishing_ok"] = okCount;
            pairs.push_back(std::move(c));
        }
        OrderedJson data;
        data["pairs"] = std::move(pairs);
        out.push_back(record(
            "homological.induced-free-vanishing",
            "higher extensions of any stage module by the restriction of a higher "
            "stage vanish, since the extension is free over the lower stage",
            ok, std::move(data)));
    }

    {
        AlgebraPtr a = groupAlgebra(f2, FiniteGroup::cyclic(4));
        Rng rng = seededRng(seed, "homological.stable-hom");
        bool ok = true;
        OrderedJson cases = OrderedJson::array();
        for (int t = 0; t < 10; ++t) {
            FDModule m = randomModule(a, rng, 2, 1);
            FDModule n = randomModule(a, rng, 2, 1);
            Index lhs = stableHom(omega(m), n).dim;
            Index rhs = extDims(m, n, 1)[1];
            ok = ok && lhs == rhs;
            OrderedJson c;
            c["stable_hom_dim"] = lhs;
            c["ext1_dim"] = rhs;
            cases.push_back(std::move(c));
        }
        OrderedJson data;
        data["cases"] = std::move(cases);
        out.push_back(record(
            "homological.stable-hom-ext",
            "maps from the syzygy modulo those factoring through a free module "
            "compute first extensions",
            ok, std::move(data)));
    }

    {
        AlgebraPtr a = groupAlgebra(f2, FiniteGroup::cyclic(4));
        FrobeniusData fd = groupHopf(f2, FiniteGroup::cyclic(4)).frob;
        Rng rng = seededRng(seed, "homological.mho-omega");
        bool ok = true;
        OrderedJson cases = OrderedJson::array();
        for (int t = 0; t < 10; ++t) {
            FDModule m = randomModule(a, rng, 2, 1);
            bool iso = stablyIsomorphic(mho(omega(m), fd), m);
            ok = ok && iso;
            OrderedJson c;
            c["dim"] = m.dim;
            c["stably_isomorphic"] = iso;
            cases.push_back(std::move(c));
        }
        OrderedJson data;
        data["cases"] = std::move(cases);
        out.push_back(record(
            "homological.mho-omega",
            "the cosyzygy of the syzygy is stably isomorphic to the module over a "
            "self-injective algebra",
            ok, std::move(data)));
    }
}

// ---------------------------------------------------------------- witnesses

void witnessesSuite(const SystemConfig&, std::uint64_t seed, int,
                    std::vector<CheckRecord>& out)
{
    const std::vector<Pin> pins = {
        {"prufer2-gf2", "prufer", 2, "GF(2)", 3},
        {"symmetric4-qq", "symmetric_chain", 4, "QQ", 3},
        {"dual2-qq", "dual_profinite", 2, "QQ", 3},
    };
    std::vector<SystemFixture> fixtures;
    for (const Pin& p : pins)
        fixtures.push_back(
            {p.tag, builtinSystem(p.family, p.param, Field::parse(p.field), p.depth)});

    for (const SystemFixture& fix : fixtures) {
        OrderedJson data;
        std::string status = "fail";
        try {
            CompatibleFDModule triv = compatibleTrivial(fix.sys);
            Noncoherence nc = noncoherenceWitness(fix.sys, triv, 1, 2);
            status = "pass";
            data["stage"] = nc.stage;
            data["multiplier"] = vecJson(nc.multiplier);
            data["element"] = vecJson(nc.element);
        } catch (const NotFoundAtDepth& err) {
            status = "not-found-at-depth";
            data["error"] = err.what();
        } catch (const Error& err) {
            data["error"] = err.what();
        }
        CheckRecord r;
        r.id = "witnesses.noncoherence." + fix.tag;
        r.anchor = "the union of the embedded copies of the trivial module is not "
                   "a submodule presented at the first stage: some product escapes "
                   "within two further stages";
        r.status = status;
        r.data = std::move(data);
        out.push_back(std::move(r));
    }

    for (const SystemFixture& fix : fixtures) {
        Rng rng = seededRng(seed, "witnesses.essentiality." + fix.tag);
        const std::vector<int> ids = fix.sys.stageIds();
        int okCount = 0;
        OrderedJson cases = OrderedJson::array();
        for (int t = 0; t < 20; ++t) {
            int stage = ids[static_cast<size_t>(rng.below(ids.size()))];
            AlgebraPtr a = fix.sys.at(stage).algebra;
            Vec z = rng.nonzeroVec(fix.sys.field, a->dim);
            OrderedJson c;
            c["stage"] = stage;
            try {
                Essentiality e =
                    essentialityWitness(fix.sys, colimElement(fix.sys, stage, z), 3);
                ++okCount;
                c["found_at"] = e.stage;
            } catch (const NotFoundAtDepth& err) {
                c["error"] = err.what();
            }
            cases.push_back(std::move(c));
        }
        OrderedJson data;
        data["found"] = okCount;
        data["cases"] = std::move(cases);
        out.push_back(record(
            "witnesses.essentiality." + fix.tag,
            "the ideal generated by the subsystem's augmentation ideals is "
            "essential: every sampled nonzero element generates an ideal meeting "
            "it within three stages",
            okCount == 20, std::move(data)));
    }

    {
        Field qq = Field::rationals();
        DirectedSystem pruferQ = builtinSystem("prufer", 2, qq, 3);
        DirectedSystem dualQ = builtinSystem("dual_profinite", 2, qq, 3);

        auto descendRecord = [&](const std::string& id, const DirectedSystem& sys,
                                 int stage, Vec w, int expectStage) {
            OrderedJson data;
            bool ok = false;
            try {
                MinimalIdealDescent d =
                    minimalIdealDescend(sys, colimElement(sys, stage, w), 3);
                ok = d.stage == expectStage && !d.certifiedStages.empty();
                data["stage"] = d.stage;
                data["ideal_dim"] = d.idealRows.rows();
                data["ideal"] = matJson(d.idealRows);
                data["certified_stages"] = d.certifiedStages;
            } catch (const Error& err) {
                data["error"] = err.what();
            }
            out.push_back(record(
                id,
                "the left ideal of the generator becomes a proper simple ideal at "
                "a stage, and the induced module up the tower is identified with "
                "the generated ideal by multiplication",
                ok, std::move(data)));
        };

        Vec onePlusG(2);
        onePlusG(0) = Scalar::of(qq, 1);
        onePlusG(1) = Scalar::of(qq, 1);
        imprint(qq, onePlusG);
        descendRecord("witnesses.minimal-descend.prufer2-qq", pruferQ, 1, onePlusG, 1);
        descendRecord("witnesses.minimal-descend.dual2-qq", dualQ, 1,
                      unitAt(qq, 2, 0), 1);

        OrderedJson data;
        bool ok = false;
        try {
            minimalIdealDescend(pruferQ, colimElement(pruferQ, 0, unitAt(qq, 1, 0)), 3);
        } catch (const NotFoundAtDepth& err) {
            ok = std::string(err.what()).find("whole algebra") != std::string::npos;
            data["error"] = err.what();
        } catch (const Error& err) {
            data["error"] = err.what();
        }
        out.push_back(record(
            "witnesses.minimal-descend.improper",
            "a unit generates the whole algebra at every stage, so the search "
            "reports exhaustion instead of a minimal ideal",
            ok, std::move(data)));
    }

    for (const SystemFixture& fix : fixtures) {
        CompatibleFDModule triv = compatibleTrivial(fix.sys);
        HomTower tower = homTower(fix.sys, triv, triv, 2);
        bool ok = tower.descending && tower.stabilized && tower.finalDim == 1;
        OrderedJson data;
        data["stages"] = tower.stages;
        data["dims"] = tower.dims;
        data["stabilized"] = tower.stabilized;
        out.push_back(record(
            "witnesses.hom-tower." + fix.tag,
            "the tower of stage hom spaces between the trivial modules descends "
            "and stabilizes at dimension one by depth two",
            ok, std::move(data)));
    }

    {
        struct LocalCase {
            const char* tag;
            const char* family;
            int param;
            const char* field;
            int depth;
            bool expected;
        };
        const LocalCase cases[] = {
            {"prufer2-gf2", "prufer", 2, "GF(2)", 3, true},
            {"prufer3-gf3", "prufer", 3, "GF(3)", 2, true},
            {"prufer2-qq", "prufer", 2, "QQ", 2, false},
        };
        for (const LocalCase& lc : cases) {
            DirectedSystem sys =
                builtinSystem(lc.family, lc.param, Field::parse(lc.field), lc.depth);
            LocalReport lr = isLocalSystem(sys);
            bool ok = lr.local == lc.expected;
            OrderedJson perStage = OrderedJson::array();
            for (const auto& [id, loc] : lr.stageLocal)
                perStage.push_back(OrderedJson::array({id, loc}));
            OrderedJson data;
            data["local"] = lr.local;
            data["expected"] = lc.expected;
            data["stages"] = std::move(perStage);
            out.push_back(record(
                std::string("witnesses.is-local.") + lc.tag,
                "the system is local exactly when every stage radical is the "
                "augmentation ideal, which holds for the modular tower and fails "
                "rationally",
                ok, std::move(data)));
        }
    }
}

using SuiteFn = void (*)(const SystemConfig&, std::uint64_t, int,
                         std::vector<CheckRecord>&);

const std::vector<std::pair<std::string, SuiteFn>>& suiteTable()
{
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"frobenius", frobeniusSuite},   {"extensions", extensionsSuite},
        {"coherent", coherentSuite},     {"ideals", idealsSuite},
        {"hopf", hopfSuite},             {"homological", homologicalSuite},
        {"witnesses", witnessesSuite},
    };
    return table;
}

} // namespace

std::vector<std::string> suiteNames()
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : suiteTable())
        names.push_back(name);
    names.push_back("all");
    return names;
}

SuiteReport validateReport(const SystemConfig& cfg, int depthOverride)
{
    int depth = depthOverride > 0 ? depthOverride : cfg.depth;
    SuiteReport report;
    report.suite = "validate";
    report.seed = 0;
    report.depth = depth;

    DirectedSystem sys = buildSystem(cfg, depthOverride);
    SystemReport sr = validateSystem(sys);
    OrderedJson data;
    data["system"] = cfg.describe();
    data["stage_count"] = sys.stageCount();
    OrderedJson dims = OrderedJson::array();
    for (int id : sys.stageIds())
        dims.push_back(sys.at(id).algebra->dim);
    data["stage_dims"] = std::move(dims);
    data["violations"] = sr.violations;
    report.checks.push_back(record(
        "validate.system",
        "the bottom stage is the ground field, every stage is a symmetric "
        "Frobenius algebra, every inclusion is free of rank matching the "
        "dimensions, arrows compose coherently, and all stage pairs have upper "
        "bounds",
        sr.ok, std::move(data)));
    return report;
}

SuiteReport runSuite(const SystemConfig& cfg, const std::string& suite,
                     std::uint64_t seed, int depthOverride)
{
    int depth = depthOverride > 0 ? depthOverride : cfg.depth;
    SuiteReport report;
    report.suite = suite;
    report.seed = seed;
    report.depth = depth;

    if (suite == "all") {
        for (const auto& [name, fn] : suiteTable())
            fn(cfg, seed, depth, report.checks);
        return report;
    }
    for (const auto& [name, fn] : suiteTable()) {
        if (name == suite) {
            fn(cfg, seed, depth, report.checks);
            return report;
        }
    }
    throw UnknownRequest("unknown suite \"" + suite + "\"");
}

SuiteReport computeReport(const SystemConfig& cfg, const std::string& expr,
                          int depthOverride)
{
    int depth = depthOverride > 0 ? depthOverride : cfg.depth;
    SuiteReport report;
    report.suite = "compute";
    report.seed = 0;
    report.depth = depth;

    std::string flat;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c)))
            flat.push_back(c);
    size_t open = flat.find('(');
    if (open == std::string::npos || flat.back() != ')')
        throw UnknownRequest("cannot parse expression \"" + expr + "\"");
    std::string op = flat.substr(0, open);
    std::string args = flat.substr(open + 1, flat.size() - open - 2);

    auto parseStage = [&](const std::string& s) -> int {
        if (s.rfind("stage", 0) != 0)
            throw UnknownRequest("expected a stage reference, got \"" + s + "\"");
        try {
            return std::stoi(s.substr(5));
        } catch (const std::exception&) {
            throw UnknownRequest("cannot read stage number in \"" + s + "\"");
        }
    };

    DirectedSystem sys = buildSystem(cfg, depthOverride);
    auto stageAlgebra = [&](int id) -> AlgebraPtr {
        for (int have : sys.stageIds())
            if (have == id)
                return sys.at(id).algebra;
        throw UnknownRequest("no stage " + std::to_string(id) + " in " +
                             cfg.describe());
    };

    OrderedJson data;
    data["expression"] = expr;
    std::string anchor;

    if (op == "cohdim" || op == "cohrank") {
        size_t at = args.find('@');
        if (at == std::string::npos)
            throw UnknownRequest("expected module@stageN in \"" + expr + "\"");
        std::string mname = args.substr(0, at);
        int stage = parseStage(args.substr(at + 1));
        AlgebraPtr a = stageAlgebra(stage);
        FDModule mod;
        if (mname == "trivial")
            mod = trivialModule(a);
        else if (mname == "regular")
            mod = regularModule(a);
        else
            throw UnknownRequest("unknown fixture module \"" + mname + "\"");
        CoherentModule cm = coherentModule(sys, stage, mod);
        if (op == "cohdim") {
            data["value"] = cohDim(sys, cm).str();
            anchor = "normalized dimension of a stage module";
        } else {
            CoherentRank r = cohRank(sys, cm, true);
            data["value"] = r.rank.str();
            data["method"] = r.method;
            data["exact"] = r.exact;
            anchor = "normalized rank of a covering projective";
        }
    } else if (op == "ext") {
        std::vector<std::string> parts;
        std::istringstream in(args);
        std::string piece;
        while (std::getline(in, piece, ','))
            parts.push_back(piece);
        if (parts.size() != 3 || parts[0] != "k" || parts[1] != "k")
            throw UnknownRequest("expected ext(k,k,degree) in \"" + expr + "\"");
        int stage = 1;
        std::string degPart = parts[2];
        size_t at = degPart.find('@');
        if (at != std::string::npos) {
            stage = parseStage(degPart.substr(at + 1));
            degPart = degPart.substr(0, at);
        }
        int maxDegree = 0;
        try {
            maxDegree = std::stoi(degPart);
        } catch (const std::exception&) {
            throw UnknownRequest("cannot read degree in \"" + expr + "\"");
        }
        if (maxDegree < 0 || maxDegree > 16)
            throw UnknownRequest("degree out of range in \"" + expr + "\"");
        AlgebraPtr a = stageAlgebra(stage);
        FDModule k = trivialModule(a);
        data["stage"] = stage;
        data["value"] = extDims(k, k, maxDegree);
        anchor = "self-extensions of the trivial stage module by degree";
    } else if (op == "integrals") {
        int stage = parseStage(args);
        AlgebraPtr a = stageAlgebra(stage);
        data["stage"] = stage;
        data["left"] = matJson(leftIntegrals(*a));
        data["right"] = matJson(rightIntegrals(*a));
        anchor = "bases of the left and right integral spaces of a stage";
    } else {
        throw UnknownRequest("unknown operation \"" + op + "\"");
    }

    report.checks.push_back(record("compute." + op, anchor, true, std::move(data)));
    return report;
}

} // namespace locfrob
