#include "locfrob/witness.hpp"

#include <algorithm>

namespace locfrob {

CompatibleFDModule compatibleTrivial(const DirectedSystem& sys) {
    CompatibleFDModule m;
    m.dim = 1;
    for (const auto& s : sys.stages) m.perStage.emplace(s.id, trivialModule(s.algebra));
    return m;
}

CompatibleFDModule makeCompatible(const DirectedSystem& sys,
                                  std::map<int, FDModule> perStage) {
    CompatibleFDModule m;
    if (perStage.empty()) throw Error("makeCompatible: no stages given");
    m.dim = perStage.begin()->second.dim;
    for (const auto& s : sys.stages) {
        auto it = perStage.find(s.id);
        if (it == perStage.end())
            throw Error("makeCompatible: stage " + std::to_string(s.id) + " is missing");
        if (!sameAlgebra(it->second.algebra, s.algebra))
            throw AlgebraMismatch("makeCompatible: stage " + std::to_string(s.id) +
                                  " structure is not over the stage algebra");
        if (it->second.dim != m.dim)
            throw Error("makeCompatible: carrier dimensions disagree at stage " +
                        std::to_string(s.id));
    }
    for (const auto& [a, b] : sys.covers) {
        const auto& small = perStage.at(a);
        const auto& big = perStage.at(b);
        const Mat& inc = sys.arrows.at({a, b}).matrix;
        for (Index i = 0; i < small.algebra->dim; ++i) {
            Mat viaBig = big.actMat(inc * small.algebra->basisVec(i));
            if (!matEq<Scalar>(viaBig, small.action[static_cast<size_t>(i)]))
                throw Error("makeCompatible: structures disagree along " +
                            std::to_string(a) + " -> " + std::to_string(b));
        }
    }
    m.perStage = std::move(perStage);
    return m;
}

HomTower homTower(const DirectedSystem& sys, const CompatibleFDModule& m,
                  const CompatibleFDModule& n, int depth) {
    HomTower tower;
    for (int id : sys.stageIds()) {
        if (id > depth) continue;
        Mat space = homSpace(m.perStage.at(id), n.perStage.at(id));
        tower.stages.push_back(id);
        tower.dims.push_back(space.rows());
        tower.spaces.push_back(std::move(space));
    }
    for (size_t i = 0; i < tower.stages.size(); ++i)
        for (size_t j = i + 1; j < tower.stages.size(); ++j) {
            if (!sys.leq(tower.stages[i], tower.stages[j])) continue;
            for (Index r = 0; r < tower.spaces[j].rows(); ++r) {
                Vec row = tower.spaces[j].row(r).transpose();
                if (!member<Scalar>(tower.spaces[i], row)) tower.descending = false;
            }
        }
    size_t k = tower.stages.size();
    if (k >= 2)
        tower.stabilized = matEq<Scalar>(tower.spaces[k - 2], tower.spaces[k - 1]);
    if (k > 0) tower.finalDim = tower.dims[k - 1];
    return tower;
}

LocalReport isLocalSystem(const DirectedSystem& sys) {
    LocalReport report;
    for (const auto& s : sys.stages) {
        Mat rad = radicalSubspace(*s.algebra);
        bool local = matEq<Scalar>(rad, augmentationIdeal(s.algebra).basis);
        report.stageLocal.emplace_back(s.id, local);
        if (!local) report.local = false;
    }
    return report;
}

RadicalContainment radicalContainment(const DirectedSystem& sys, int depth) {
    RadicalContainment report;
    for (const auto& [a, b] : sys.covers) {
        if (a > depth || b > depth) continue;
        const Mat& inc = sys.arrows.at({a, b}).matrix;
        Mat image = rowBasis<Scalar>(Mat(inc.transpose()));
        Mat radBig = radicalSubspace(*sys.at(b).algebra);
        Mat meet = intersectSpace<Scalar>(image, radBig);
        Mat radSmall = radicalSubspace(*sys.at(a).algebra);
        Mat pushed = rowBasis<Scalar>(Mat(radSmall * inc.transpose()));
        RadicalContainment::Row row{a, b, true, meet.rows()};
        for (Index r = 0; r < meet.rows(); ++r) {
            Vec v = meet.row(r).transpose();
            if (!member<Scalar>(pushed, v)) row.ok = false;
        }
        report.rows.push_back(row);
        if (!row.ok) report.ok = false;
    }
    return report;
}

Essentiality essentialityWitness(const DirectedSystem& sys, const ColimElement& z,
                                 int depth, const std::map<int, Mat>* subalgebra) {
    if (isZeroMat<Scalar>(Mat(z.coords)))
        throw Error("essentialityWitness: z must be nonzero");
    for (int gamma : sys.stageIds()) {
        if (gamma > depth || !sys.leq(z.stage, gamma)) continue;
        const auto& a = sys.at(gamma).algebra;
        ColimElement zg = push(sys, z, gamma);
        Mat cyclic = spinLeft(*a, zg.coords);

        Mat bRows;
        if (subalgebra) {
            auto it = subalgebra->find(gamma);
            if (it == subalgebra->end()) continue;
            bRows = rowBasis<Scalar>(it->second);
        } else {
            bRows = Mat::Identity(a->dim, a->dim);
            imprint(a->field, bRows);
        }
        Mat augKernel = kernel<Scalar>(Mat(a->aug));
        Mat bPlus = intersectSpace<Scalar>(bRows, rowBasis<Scalar>(augKernel));
        Mat ideal = submoduleGenerated(regularModule(a), bPlus);
        Mat meet = intersectSpace<Scalar>(cyclic, ideal);
        if (meet.rows() > 0) {
            Mat canon = rowBasis<Scalar>(meet);
            return Essentiality{gamma, canon.row(0).transpose()};
        }
    }
    throw NotFoundAtDepth("essentialityWitness: the ideals stay disjoint at every "
                          "stage within depth " + std::to_string(depth));
}

Noncoherence noncoherenceWitness(const DirectedSystem& sys,
                                 const CompatibleFDModule& s, int atStage,
                                 int depth) {
    const auto& a = sys.at(atStage).algebra;
    const FDModule& mod = s.perStage.at(atStage);
    Mat homs = homSpace(mod, regularModule(a));
    Mat embed;
    bool found = false;
    for (Index r = 0; r < homs.rows() && !found; ++r) {
        Mat f = unflatten(homs.row(r).transpose(), a->dim, mod.dim);
        if (rankOf<Scalar>(f) == mod.dim) {
            embed = f;
            found = true;
        }
    }
    if (!found)
        throw Error("noncoherenceWitness: the module does not embed in the regular "
                    "module at stage " + std::to_string(atStage));
    Mat image = rowBasis<Scalar>(Mat(embed.transpose()));

    for (int beta : sys.stageIds()) {
        if (beta > depth || !sys.leq(atStage, beta)) continue;
        const auto& b = sys.at(beta).algebra;
        Mat copy = rowBasis<Scalar>(
            Mat(image * sys.inclusion(atStage, beta).matrix.transpose()));
        for (Index g = 0; g < b->dim; ++g) {
            Vec mult = b->basisVec(g);
            for (Index r = 0; r < copy.rows(); ++r) {
                Vec v = copy.row(r).transpose();
                Vec prod = b->mul(mult, v);
                if (!member<Scalar>(copy, prod))
                    return Noncoherence{beta, mult, v};
            }
        }
    }
    throw NotFoundAtDepth("noncoherenceWitness: every product stays in the embedded "
                          "copy at every stage within depth " + std::to_string(depth));
}

namespace {

// multiplication from the induced module onto the pushed ideal: column
// (copy j, basis t) holds e_j * iota(l_t) in the ideal's coordinates
bool multiplicationIdentifies(const DirectedSystem& sys, int from, int to,
                              const Mat& idealRows, const Mat& pushedSpan) {
    const FreeBasis& fb = sys.basis(from, to);
    const auto& small = sys.at(from).algebra;
    const auto& big = sys.at(to).algebra;
    FDModule source = induce(fb, submoduleModule(regularModule(small), idealRows));
    Mat targetInc;
    FDModule target = submoduleModule(regularModule(big), pushedSpan, &targetInc);
    if (source.dim != target.dim) return false;

    const Mat& inc = sys.inclusion(from, to).matrix;
    Index dl = idealRows.rows();
    Mat mult = Mat::Zero(target.dim, source.dim);
    imprint(big->field, mult);
    for (Index j = 0; j < fb.rank(); ++j)
        for (Index t = 0; t < dl; ++t) {
            Vec elem = big->mul(fb.elements[static_cast<size_t>(j)],
                                inc * idealRows.row(t).transpose());
            auto coords = solve<Scalar>(targetInc, elem);
            if (!coords) return false;
            mult.col(j * dl + t) = *coords;
        }
    if (!intertwines(source, target, mult)) return false;
    return invert<Scalar>(mult).has_value();
}

} // namespace

MinimalIdealDescent minimalIdealDescend(const DirectedSystem& sys,
                                        const ColimElement& w, int depth) {
    if (isZeroMat<Scalar>(Mat(w.coords)))
        throw Error("minimalIdealDescend: w must be nonzero");
    bool sawProperCandidate = false;
    for (int lambda : sys.stageIds()) {
        if (lambda > depth || !sys.leq(w.stage, lambda)) continue;
        const auto& a = sys.at(lambda).algebra;
        ColimElement wl = push(sys, w, lambda);
        Mat rows = spinLeft(*a, wl.coords);
        if (rows.rows() == a->dim) continue; // improper ideal, never minimal
        sawProperCandidate = true;

        FDModule lmod = submoduleModule(regularModule(a), rows);
        if (isSimple(lmod).verdict != SimpleVerdict::Simple) continue;

        std::vector<int> certified;
        bool ok = true;
        for (int mu : sys.stageIds()) {
            if (certified.size() == 2) break;
            if (mu <= lambda || mu > depth || !sys.leq(lambda, mu)) continue;
            const auto& b = sys.at(mu).algebra;
            Mat pushed = rows * sys.inclusion(lambda, mu).matrix.transpose();
            Mat span = submoduleGenerated(regularModule(b), pushed);
            Mat direct = spinLeft(*b, push(sys, w, mu).coords);
            Index index = b->dim / a->dim;
            if (!matEq<Scalar>(span, direct) || span.rows() != index * rows.rows() ||
                !multiplicationIdentifies(sys, lambda, mu, rows, span)) {
                ok = false;
                break;
            }
            certified.push_back(mu);
        }
        if (ok) return MinimalIdealDescent{lambda, rows, certified};
    }
    throw NotFoundAtDepth(
        sawProperCandidate
            ? "minimalIdealDescend: no stage within depth " + std::to_string(depth) +
                  " generates a simple ideal with a certified ascent"
            : "minimalIdealDescend: w generates the whole algebra at every stage "
              "within depth " + std::to_string(depth));
}

} // namespace locfrob
