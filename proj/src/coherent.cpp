#include "locfrob/coherent.hpp"

#include <numeric>

namespace locfrob {

Ratio makeRatio(long long num, long long den) {
    if (den == 0) throw Error("makeRatio: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Ratio{num, den == 0 ? 1 : den};
}

std::string Ratio::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
}

bool operator<(const Ratio& a, const Ratio& b) {
    return a.num * b.den < b.num * a.den;
}

CoherentModule coherentModule(const DirectedSystem& sys, int stage, FDModule mod) {
    if (!sameAlgebra(mod.algebra, sys.at(stage).algebra))
        throw AlgebraMismatch("coherentModule: the module is not over the stage algebra");
    return CoherentModule{stage, std::move(mod)};
}

CoherentModule representAt(const DirectedSystem& sys, const CoherentModule& m,
                           int toStage) {
    if (m.stage == toStage) return m;
    if (!sys.leq(m.stage, toStage))
        throw NotComparable("representAt: stage " + std::to_string(m.stage) +
                            " is not below stage " + std::to_string(toStage));
    return CoherentModule{toStage, induce(sys.basis(m.stage, toStage), m.mod)};
}

Ratio cohDim(const DirectedSystem& sys, const CoherentModule& m) {
    return makeRatio(m.mod.dim, sys.at(m.stage).algebra->dim);
}

namespace {

// rows spanning rad * M, from the action of a radical row basis
Mat radicalTimes(const FDModule& m, const Mat& radRows) {
    Mat stack = Mat::Zero(radRows.rows() * m.dim, m.dim);
    imprint(m.algebra->field, stack);
    for (Index r = 0; r < radRows.rows(); ++r) {
        Mat act = m.actMat(radRows.row(r).transpose());
        stack.block(r * m.dim, 0, m.dim, m.dim) = act.transpose();
    }
    return rowBasis<Scalar>(stack);
}

} // namespace

CoherentRank cohRank(const DirectedSystem& sys, const CoherentModule& m,
                     bool boundIfUnsupported) {
    const auto& a = sys.at(m.stage).algebra;
    Mat rad = radicalSubspace(*a);

    CoherentRank out;
    if (rad.rows() == 0) {
        out.rank = cohDim(sys, m);
        out.method = "semisimple";
        out.cover = m.mod;
        out.epi = Mat::Identity(m.mod.dim, m.mod.dim);
        imprint(a->field, out.epi);
        return out;
    }
    if (rad.rows() == a->dim - 1) {
        // local stage: generators lift a basis of M / rad M
        Mat radM = radicalTimes(m.mod, rad);
        Index g = m.mod.dim - radM.rows();
        std::vector<Vec> gens;
        Mat span = radM;
        for (Index j = 0; j < m.mod.dim && static_cast<Index>(gens.size()) < g; ++j) {
            Vec e = unitVec(m.mod.dim, j);
            imprint(a->field, e);
            if (member<Scalar>(span, e)) continue;
            gens.push_back(e);
            Mat row = e.transpose();
            span = sumSpace<Scalar>(span, row);
        }
        FreeCover fc = coverFromGenerators(m.mod, gens);
        out.rank = makeRatio(fc.rank, 1);
        out.method = "local";
        out.cover = freeModule(a, fc.rank);
        out.epi = fc.proj;
        return out;
    }
    if (!boundIfUnsupported)
        throw UnsupportedStage("cohRank: stage " + std::to_string(m.stage) +
                               " is neither local nor semisimple");
    FreeCover fc = freeCover(m.mod);
    out.rank = makeRatio(fc.rank, 1);
    out.exact = false;
    out.method = "free-cover";
    out.cover = freeModule(a, fc.rank);
    out.epi = fc.proj;
    return out;
}

namespace {

void checkExact(const StageSES& s, const char* who) {
    auto fail = [&](const std::string& msg) { throw NotExact(std::string(who) + ": " + msg); };
    if (s.f.rows() != s.mid.dim || s.f.cols() != s.sub.dim ||
        s.g.rows() != s.quot.dim || s.g.cols() != s.mid.dim)
        fail("map shapes do not match the modules");
    if (!intertwines(s.sub, s.mid, s.f)) fail("the injection is not a module map");
    if (!intertwines(s.mid, s.quot, s.g)) fail("the surjection is not a module map");
    if (rankOf<Scalar>(s.f) != s.sub.dim) fail("the first map is not injective");
    if (rankOf<Scalar>(s.g) != s.quot.dim) fail("the second map is not surjective");
    Mat comp = s.g * s.f;
    if (!isZeroMat<Scalar>(comp)) fail("the composite is not zero");
    if (rankOf<Scalar>(s.f) + rankOf<Scalar>(s.g) != s.mid.dim)
        fail("the image does not fill the kernel");
}

} // namespace

StageSES makeSES(const DirectedSystem& sys, int stage, FDModule sub, FDModule mid,
                 FDModule quot, Mat f, Mat g) {
    const auto& a = sys.at(stage).algebra;
    for (const auto* part : {&sub, &mid, &quot})
        if (!sameAlgebra(part->algebra, a))
            throw AlgebraMismatch("makeSES: a term is not over the stage algebra");
    StageSES s{stage, std::move(sub), std::move(mid), std::move(quot), std::move(f),
               std::move(g)};
    checkExact(s, "makeSES");
    return s;
}

StageSES descendSes(const DirectedSystem& sys, const StageSES& ses, int toStage) {
    checkExact(ses, "descendSes");
    if (ses.stage == toStage) return ses;
    if (!sys.leq(ses.stage, toStage))
        throw NotComparable("descendSes: stage " + std::to_string(ses.stage) +
                            " is not below stage " + std::to_string(toStage));
    const FreeBasis& fb = sys.basis(ses.stage, toStage);
    StageSES out{toStage, induce(fb, ses.sub), induce(fb, ses.mid),
                 induce(fb, ses.quot), induceHom(fb, ses.f), induceHom(fb, ses.g)};
    checkExact(out, "descendSes (transported)");
    return out;
}

GrowthTable stageDimGrowth(const DirectedSystem& sys, int stage, const Mat& idealRows,
                           int depth) {
    const auto& a = sys.at(stage).algebra;
    Mat rows = rowBasis<Scalar>(idealRows);
    if (rows.rows() > 0) {
        if (rows.cols() != a->dim)
            throw Error("stageDimGrowth: ideal rows have the wrong width");
        if (!matEq<Scalar>(idealClosure(*a, Side::Left, rows), rows))
            throw Error("stageDimGrowth: the rows do not span a left ideal");
        if (rows.rows() == a->dim)
            throw Error("stageDimGrowth: the ideal is the whole algebra");
    }

    GrowthTable table;
    for (int mu : sys.stageIds()) {
        if (mu > depth || !sys.leq(stage, mu)) continue;
        const auto& b = sys.at(mu).algebra;
        Index quotient = b->dim;
        if (rows.rows() > 0) {
            Mat pushed = rows * sys.inclusion(stage, mu).matrix.transpose();
            Mat span = submoduleGenerated(regularModule(b), pushed);
            quotient = b->dim - span.rows();
        }
        table.rows.emplace_back(mu, quotient);
    }
    for (size_t i = 0; i < table.rows.size(); ++i)
        for (size_t j = i + 1; j < table.rows.size(); ++j) {
            if (!sys.leq(table.rows[i].first, table.rows[j].first)) continue;
            if (table.rows[j].second <= table.rows[i].second) table.strict = false;
        }
    return table;
}

Presentation fpWitness(const FDModule& m, const Mat& subspaceRows) {
    Presentation out;
    Mat closure = submoduleGenerated(m, subspaceRows);
    if (closure.rows() == 0) {
        out.relations = Mat::Zero(0, 0);
        imprint(m.algebra->field, out.relations);
        return out;
    }
    Mat inclusion;
    FDModule sub = submoduleModule(m, closure, &inclusion);
    FreeCover fc = freeCover(sub);
    out.coverRank = fc.rank;
    for (const Vec& g : fc.generators) out.generators.push_back(inclusion * g);
    out.relations = kernel<Scalar>(fc.proj);
    return out;
}

} // namespace locfrob
