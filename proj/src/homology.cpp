#include "locfrob/module.hpp"

namespace locfrob {

namespace {

// Greedy generating rows for a submodule given by its row basis: walk the
// rows and keep those not yet reached by spinning the kept ones.
std::vector<Vec> greedyGeneratorsOf(const FDModule& ambient, const Mat& subRows)
{
    std::vector<Vec> gens;
    Mat kept(0, ambient.dim);
    Mat reached(0, ambient.dim);
    for (Index r = 0; r < subRows.rows(); ++r) {
        Vec cand = subRows.row(r).transpose();
        if (member<Scalar>(reached, cand))
            continue;
        gens.push_back(cand);
        kept = vstack<Scalar>(kept, Mat(cand.transpose()));
        reached = submoduleGenerated(ambient, kept);
    }
    return gens;
}

// d: A^{rank} -> ambient sending the unit of copy c to gens[c]; the image
// is the submodule the generators span.
Mat generatorDifferential(const FDModule& ambient, const std::vector<Vec>& gens)
{
    const Index da = ambient.algebra->dim;
    const Index rank = static_cast<Index>(gens.size());
    Mat d(ambient.dim, rank * da);
    for (Index c = 0; c < rank; ++c)
        for (Index j = 0; j < da; ++j)
            d.col(c * da + j) = ambient.action[static_cast<size_t>(j)] * gens[static_cast<size_t>(c)];
    imprint(ambient.algebra->field, d);
    return d;
}

} // namespace

FreeResolution freeResolution(const FDModule& m, Index length)
{
    if (length < 0)
        throw Error("freeResolution: negative length");
    FreeResolution res;
    FreeCover cover = freeCover(m);
    res.ranks.push_back(cover.rank);
    res.augment = cover.proj;

    Mat ker = kernel<Scalar>(cover.proj); // rows inside F_0
    for (Index step = 0; step < length; ++step) {
        FDModule below = freeModule(m.algebra, res.ranks.back());
        std::vector<Vec> gens = greedyGeneratorsOf(below, ker);
        Mat d = generatorDifferential(below, gens);
        res.ranks.push_back(static_cast<Index>(gens.size()));
        ker = kernel<Scalar>(d);
        res.diff.push_back(std::move(d));
    }
    return res;
}

namespace {

// Transport of Hom(F_i, N) -> Hom(F_{i+1}, N) along d: F_{i+1} -> F_i under
// the identification Hom(A^r, N) = N^r, f |-> (f(1_c))_c.  If d sends the
// unit of copy c' to sum_c a_{c,c'} in copy c, the induced block (c', c) is
// the action of a_{c,c'} on N.
Mat transportedDifferential(const FDModule& n, const Mat& d, Index rankLow, Index rankHigh)
{
    const Index da = n.algebra->dim;
    const Index nd = n.dim;
    Mat delta = Mat::Zero(rankHigh * nd, rankLow * nd);
    for (Index cp = 0; cp < rankHigh; ++cp) {
        Vec gen = Vec::Zero(rankHigh * da);
        gen.segment(cp * da, da) = n.algebra->one;
        imprint(n.algebra->field, gen);
        Vec img = d * gen;
        for (Index c = 0; c < rankLow; ++c)
            delta.block(cp * nd, c * nd, nd, nd) = n.actMat(Vec(img.segment(c * da, da)));
    }
    imprint(n.algebra->field, delta);
    return delta;
}

} // namespace

std::vector<Index> extDims(const FDModule& m, const FDModule& n, Index maxDegree)
{
    requireSameAlgebra(m, n);
    if (maxDegree < 0)
        throw Error("extDims: negative degree");
    FreeResolution res = freeResolution(m, maxDegree + 1);

    std::vector<Mat> delta; // delta[i]: N^{r_i} -> N^{r_{i+1}}
    for (Index i = 0; i <= maxDegree; ++i)
        delta.push_back(transportedDifferential(n, res.diff[static_cast<size_t>(i)],
                                                res.ranks[static_cast<size_t>(i)],
                                                res.ranks[static_cast<size_t>(i) + 1]));

    std::vector<Index> dims;
    for (Index i = 0; i <= maxDegree; ++i) {
        Index cycles = delta[static_cast<size_t>(i)].cols() -
                       rankOf<Scalar>(delta[static_cast<size_t>(i)]);
        Index boundaries =
            i == 0 ? 0 : rankOf<Scalar>(delta[static_cast<size_t>(i) - 1]);
        dims.push_back(cycles - boundaries);
    }
    return dims;
}

StableHomResult stableHom(const FDModule& m, const FDModule& n)
{
    requireSameAlgebra(m, n);
    StableHomResult out;
    out.hom = homSpace(m, n);

    FreeCover cover = freeCover(n);
    FDModule fm = freeModule(n.algebra, cover.rank);
    Mat lifts = homSpace(m, fm);
    Mat pushed(lifts.rows(), n.dim * m.dim);
    for (Index r = 0; r < lifts.rows(); ++r) {
        Mat h = unflatten(Vec(lifts.row(r).transpose()), fm.dim, m.dim);
        pushed.row(r) = flatten(Mat(cover.proj * h)).transpose();
    }
    if (pushed.rows() == 0)
        pushed = Mat(0, n.dim * m.dim);
    imprint(m.algebra->field, pushed);
    out.phom = rowBasis<Scalar>(pushed);
    out.dim = out.hom.rows() - out.phom.rows();

    Mat cur = out.phom;
    Mat reps(0, n.dim * m.dim);
    for (Index r = 0; r < out.hom.rows(); ++r) {
        Vec cand = out.hom.row(r).transpose();
        if (member<Scalar>(cur, cand))
            continue;
        reps = vstack<Scalar>(reps, Mat(cand.transpose()));
        cur = sumSpace<Scalar>(cur, Mat(cand.transpose()));
    }
    out.reps = std::move(reps);
    return out;
}

FDModule omega(const FDModule& m)
{
    FreeCover cover = freeCover(m);
    FDModule fm = freeModule(m.algebra, cover.rank);
    Mat ker = kernel<Scalar>(cover.proj);
    return submoduleModule(fm, ker);
}

FDModule mho(const FDModule& m, const FrobeniusData& fd)
{
    const Index da = m.algebra->dim;
    if (fd.dualV.rows() != da || fd.dualV.cols() != da)
        throw DimensionMismatch("mho: Frobenius data does not match the algebra");
    FDModule fm = freeModule(m.algebra, m.dim);
    if (m.dim == 0)
        return fm;

    // the Casimir embedding t |-> sum_i u_i (x) v_i t into A^{dim m}, where
    // copy t' coordinate j records the a_j-coefficient; applying
    // (form (x) id) gives back t, so the map is injective
    Mat embed(m.dim * da, m.dim);
    for (Index j = 0; j < da; ++j) {
        Mat actV = m.actMat(Vec(fd.dualV.col(j)));
        for (Index tp = 0; tp < m.dim; ++tp)
            embed.row(tp * da + j) = actV.row(tp);
    }
    imprint(m.algebra->field, embed);
    if (rankOf<Scalar>(embed) != m.dim)
        throw DegenerateForm("mho: embedding not injective; form is not Frobenius here");

    Mat imageRows = rowBasis<Scalar>(Mat(embed.transpose()));
    return quotientModule(fm, imageRows).first;
}

} // namespace locfrob
