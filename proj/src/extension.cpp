#include "locfrob/extension.hpp"
#include "locfrob/rng.hpp"

namespace locfrob {

Vec AlgebraMorphism::apply(const Vec& x) const
{
    source->requireVec(x);
    Vec y = matrix * x;
    imprint(target->field, y);
    return y;
}

AlgebraMorphism makeMorphism(const AlgebraPtr& source, const AlgebraPtr& target,
                             const Mat& matrix, bool requireInjective)
{
    if (source->field != target->field)
        throw FieldMismatch("makeMorphism: endpoints over different fields");
    if (matrix.rows() != target->dim || matrix.cols() != source->dim)
        throw DimensionMismatch("makeMorphism: matrix shape mismatch");
    AlgebraMorphism f{source, target, matrix};
    imprint(target->field, f.matrix);

    if (!matEq<Scalar>(Mat(f.matrix * source->one), Mat(target->one)))
        throw Error("makeMorphism: unit not preserved");
    for (Index i = 0; i < source->dim; ++i) {
        Vec fi = f.matrix.col(i);
        for (Index j = 0; j < source->dim; ++j) {
            Vec lhs = f.matrix * source->lmul[static_cast<size_t>(i)].col(j);
            Vec rhs = target->mul(fi, Vec(f.matrix.col(j)));
            if (!matEq<Scalar>(Mat(lhs), Mat(rhs)))
                throw Error("makeMorphism: not multiplicative at basis pair (" +
                            source->labels[static_cast<size_t>(i)] + ", " +
                            source->labels[static_cast<size_t>(j)] + ")");
        }
        if (target->eps(fi) != source->aug(i))
            throw Error("makeMorphism: augmentation not preserved at " +
                        source->labels[static_cast<size_t>(i)]);
    }
    if (requireInjective && rankOf<Scalar>(f.matrix) != source->dim)
        throw Error("makeMorphism: inclusion matrix is not injective");
    return f;
}

AlgebraMorphism identityMorphism(const AlgebraPtr& a)
{
    Mat eye = Mat::Identity(a->dim, a->dim);
    imprint(a->field, eye);
    return AlgebraMorphism{a, a, std::move(eye)};
}

AlgebraMorphism groupInclusion(const Field& f, const FiniteGroup& big,
                               const std::vector<int>& subElements, FiniteGroup* subOut,
                               std::vector<int>* embedOut)
{
    std::vector<int> embed;
    FiniteGroup sub = subgroupAsGroup(big, subElements, &embed);
    AlgebraPtr b = groupAlgebra(f, sub);
    AlgebraPtr a = groupAlgebra(f, big);
    Mat matrix = Mat::Zero(a->dim, b->dim);
    for (Index i = 0; i < b->dim; ++i)
        matrix(embed[static_cast<size_t>(i)], i) = Scalar(1);
    if (subOut)
        *subOut = sub;
    if (embedOut)
        *embedOut = embed;
    return makeMorphism(b, a, matrix);
}

namespace {

// Rows spanning iota(B) * e inside A.
Mat sidedSpan(const AlgebraMorphism& inc, const Vec& e, bool leftOfE)
{
    const Algebra& a = *inc.target;
    const Index db = inc.source->dim;
    Mat rows(db, a.dim);
    for (Index t = 0; t < db; ++t) {
        Vec f = inc.matrix.col(t);
        Vec prod = leftOfE ? a.mul(f, e) : a.mul(e, f);
        rows.row(t) = prod.transpose();
    }
    return rowBasis<Scalar>(rows);
}

// Columns (i, t) |-> products of elements[i] with iota(b_t) on the chosen
// side; invertible exactly when the elements form a one-sided B-basis.
Mat sideMatrix(const AlgebraMorphism& inc, const std::vector<Vec>& elements, bool leftOfE)
{
    const Algebra& a = *inc.target;
    const Index db = inc.source->dim;
    const Index r = static_cast<Index>(elements.size());
    Mat m(a.dim, r * db);
    for (Index i = 0; i < r; ++i)
        for (Index t = 0; t < db; ++t) {
            Vec f = inc.matrix.col(t);
            const Vec& e = elements[static_cast<size_t>(i)];
            Vec prod = leftOfE ? a.mul(f, e) : a.mul(e, f);
            m.col(i * db + t) = prod;
        }
    return m;
}

// A candidate joins when it contributes a full fresh block on both sides,
// which keeps every partial choice a two-sided direct sum.
bool accepts(const AlgebraMorphism& inc, const Vec& e, Mat& spanL, Mat& spanR)
{
    const Index db = inc.source->dim;
    Mat grownL = sumSpace<Scalar>(spanL, sidedSpan(inc, e, true));
    if (grownL.rows() != spanL.rows() + db)
        return false;
    Mat grownR = sumSpace<Scalar>(spanR, sidedSpan(inc, e, false));
    if (grownR.rows() != spanR.rows() + db)
        return false;
    spanL = std::move(grownL);
    spanR = std::move(grownR);
    return true;
}

bool freeBasisSearch(const AlgebraMorphism& inc, Index rank, Index nextUnit, Mat& spanL,
                     Mat& spanR, std::vector<Vec>& chosen)
{
    const Algebra& a = *inc.target;
    if (static_cast<Index>(chosen.size()) == rank)
        return spanL.rows() == a.dim && spanR.rows() == a.dim;
    for (Index u = nextUnit; u < a.dim; ++u) {
        Vec e = a.basisVec(u);
        Mat savedL = spanL;
        Mat savedR = spanR;
        if (!accepts(inc, e, spanL, spanR))
            continue;
        chosen.push_back(e);
        if (freeBasisSearch(inc, rank, u + 1, spanL, spanR, chosen))
            return true;
        chosen.pop_back();
        spanL = std::move(savedL);
        spanR = std::move(savedR);
    }
    return false;
}

// When no set of basis vectors works (pointwise function algebras have no
// basis vector generating a free block) fall back to a deterministic greedy
// pass over unit vectors, prefix sums of them, and a seeded random stream.
bool freeBasisGreedyPool(const AlgebraMorphism& inc, Index rank, Mat& spanL, Mat& spanR,
                         std::vector<Vec>& chosen)
{
    const Algebra& a = *inc.target;
    chosen.clear();
    spanL = Mat(0, a.dim);
    spanR = Mat(0, a.dim);

    std::vector<Vec> pool;
    for (Index u = 0; u < a.dim; ++u)
        pool.push_back(a.basisVec(u));
    Vec prefix = a.basisVec(0);
    for (Index u = 1; u < a.dim; ++u) {
        prefix += a.basisVec(u);
        Vec copy = prefix;
        imprint(a.field, copy);
        pool.push_back(copy);
    }
    Rng rng(11);
    for (int t = 0; t < 150; ++t)
        pool.push_back(rng.nonzeroVec(a.field, a.dim));

    for (const Vec& v : pool) {
        if (accepts(inc, v, spanL, spanR))
            chosen.push_back(v);
        if (static_cast<Index>(chosen.size()) == rank)
            return true;
    }
    return false;
}

} // namespace

FreeBasis freeBasis(const AlgebraMorphism& inclusion)
{
    const Index da = inclusion.target->dim;
    const Index db = inclusion.source->dim;
    if (db == 0 || da % db != 0)
        throw NotFree("freeBasis: dimension of the big algebra is not a multiple of the "
                      "small one");
    const Index rank = da / db;

    Mat spanL(0, da);
    Mat spanR(0, da);
    std::vector<Vec> chosen;
    if (!freeBasisSearch(inclusion, rank, 0, spanL, spanR, chosen) &&
        !freeBasisGreedyPool(inclusion, rank, spanL, spanR, chosen))
        throw NotFree("freeBasis: found no two-sided free basis over the subalgebra");

    FreeBasis fb;
    fb.inclusion = inclusion;
    fb.elements = std::move(chosen);
    auto leftInv = invert<Scalar>(sideMatrix(inclusion, fb.elements, true));
    auto rightInv = invert<Scalar>(sideMatrix(inclusion, fb.elements, false));
    if (!leftInv || !rightInv)
        throw NotFree("freeBasis: chosen elements are not independent on both sides");
    fb.leftCoords = std::move(*leftInv);
    fb.rightCoords = std::move(*rightInv);
    return fb;
}

WitnessReport verifyWitness(const FrobeniusExtensionWitness& w)
{
    WitnessReport rep;
    auto flag = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    const Algebra& a = *w.inclusion.target;
    const Algebra& b = *w.inclusion.source;
    if (w.lambda.rows() != b.dim || w.lambda.cols() != a.dim) {
        flag("lambda has the wrong shape");
        return rep;
    }
    if (w.xs.size() != w.ys.size()) {
        flag("xs and ys have different lengths");
        return rep;
    }

    auto lam = [&](const Vec& x) {
        Vec v = w.lambda * x;
        imprint(b.field, v);
        return v;
    };
    auto up = [&](const Vec& x) { return w.inclusion.apply(x); };

    for (Index i = 0; i < b.dim && rep.ok; ++i)
        for (Index g = 0; g < a.dim && rep.ok; ++g)
            for (Index j = 0; j < b.dim; ++j) {
                Vec left = lam(a.mul(a.mul(up(b.basisVec(i)), a.basisVec(g)),
                                     up(b.basisVec(j))));
                Vec right = b.mul(b.basisVec(i), b.mul(lam(a.basisVec(g)), b.basisVec(j)));
                if (!matEq<Scalar>(Mat(left), Mat(right))) {
                    flag("lambda is not a bimodule map at (" +
                         b.labels[static_cast<size_t>(i)] + ", " +
                         a.labels[static_cast<size_t>(g)] + ", " +
                         b.labels[static_cast<size_t>(j)] + ")");
                    break;
                }
            }

    for (Index g = 0; g < a.dim; ++g) {
        Vec e = a.basisVec(g);
        Vec sumLeft = Vec::Zero(a.dim);
        Vec sumRight = Vec::Zero(a.dim);
        for (size_t i = 0; i < w.xs.size(); ++i) {
            sumLeft += a.mul(w.ys[i], up(lam(a.mul(w.xs[i], e))));
            sumRight += a.mul(up(lam(a.mul(e, w.ys[i]))), w.xs[i]);
        }
        imprint(a.field, sumLeft);
        imprint(a.field, sumRight);
        if (!matEq<Scalar>(Mat(sumLeft), Mat(e))) {
            flag("left dual-basis identity fails at " + a.labels[static_cast<size_t>(g)]);
            break;
        }
        if (!matEq<Scalar>(Mat(sumRight), Mat(e))) {
            flag("right dual-basis identity fails at " + a.labels[static_cast<size_t>(g)]);
            break;
        }
    }
    return rep;
}

FrobeniusExtensionWitness cosetWitness(const Field& f, const FiniteGroup& big,
                                       const std::vector<int>& subElements)
{
    FiniteGroup sub;
    std::vector<int> embed;
    AlgebraMorphism inc = groupInclusion(f, big, subElements, &sub, &embed);
    const Algebra& a = *inc.target;
    const Algebra& b = *inc.source;

    FrobeniusExtensionWitness w;
    w.inclusion = inc;
    w.lambda = Mat::Zero(b.dim, a.dim);
    for (Index i = 0; i < b.dim; ++i)
        w.lambda(i, embed[static_cast<size_t>(i)]) = Scalar(1);
    imprint(b.field, w.lambda);

    std::vector<bool> covered(static_cast<size_t>(big.order()), false);
    for (int x = 0; x < big.order(); ++x) {
        if (covered[static_cast<size_t>(x)])
            continue;
        for (int h : embed)
            covered[static_cast<size_t>(big.op(h, x))] = true;
        w.xs.push_back(a.basisVec(x));
        w.ys.push_back(a.basisVec(big.inv[static_cast<size_t>(x)]));
    }
    return w;
}

FDModule induce(const FreeBasis& fb, const FDModule& m)
{
    if (!sameAlgebra(m.algebra, fb.inclusion.source))
        throw AlgebraMismatch("induce: module is not over the small algebra");
    const Algebra& a = *fb.inclusion.target;
    const Index db = fb.inclusion.source->dim;
    const Index r = fb.rank();
    const Index dm = m.dim;

    FDModule out;
    out.algebra = fb.inclusion.target;
    out.dim = r * dm;
    for (Index g = 0; g < a.dim; ++g) {
        Mat act = Mat::Zero(out.dim, out.dim);
        for (Index i = 0; i < r; ++i) {
            // b_g e_i = sum_j e_j iota(beta_j) moves copy i to copy j with
            // beta_j acting inside
            Vec beta = fb.rightCoords * a.mul(a.basisVec(g), fb.elements[static_cast<size_t>(i)]);
            imprint(a.field, beta);
            for (Index j = 0; j < r; ++j)
                act.block(j * dm, i * dm, dm, dm) = m.actMat(Vec(beta.segment(j * db, db)));
        }
        out.action.push_back(std::move(act));
    }
    return out;
}

FDModule coinduce(const FreeBasis& fb, const FDModule& m)
{
    if (!sameAlgebra(m.algebra, fb.inclusion.source))
        throw AlgebraMismatch("coinduce: module is not over the small algebra");
    const Algebra& a = *fb.inclusion.target;
    const Index db = fb.inclusion.source->dim;
    const Index r = fb.rank();
    const Index dm = m.dim;

    FDModule out;
    out.algebra = fb.inclusion.target;
    out.dim = r * dm;
    for (Index g = 0; g < a.dim; ++g) {
        Mat act = Mat::Zero(out.dim, out.dim);
        for (Index i = 0; i < r; ++i) {
            // (b_g f)(e_i) = f(e_i b_g) = sum_j gamma_j f(e_j)
            Vec gamma = fb.leftCoords * a.mul(fb.elements[static_cast<size_t>(i)], a.basisVec(g));
            imprint(a.field, gamma);
            for (Index j = 0; j < r; ++j)
                act.block(i * dm, j * dm, dm, dm) = m.actMat(Vec(gamma.segment(j * db, db)));
        }
        out.action.push_back(std::move(act));
    }
    return out;
}

Mat induceHom(const FreeBasis& fb, const Mat& f)
{
    Mat eye = Mat::Identity(fb.rank(), fb.rank());
    imprint(fb.inclusion.target->field, eye);
    return kron<Scalar>(eye, f);
}

ModuleHom indCoindIso(const FrobeniusExtensionWitness& w, const FreeBasis& fb,
                      const FDModule& m)
{
    if (!sameAlgebra(m.algebra, fb.inclusion.source))
        throw AlgebraMismatch("indCoindIso: module is not over the small algebra");
    const Algebra& a = *fb.inclusion.target;
    const Index db = fb.inclusion.source->dim;
    const Index r = fb.rank();
    const Index dm = m.dim;

    Mat t = Mat::Zero(r * dm, r * dm);
    for (size_t i = 0; i < w.xs.size(); ++i) {
        Vec gamma = fb.leftCoords * w.xs[i]; // f(x_i) from the values f(e_j)
        Vec delta = fb.rightCoords * w.ys[i]; // y_i (x) u lands in the copies
        imprint(a.field, gamma);
        imprint(a.field, delta);
        for (Index jp = 0; jp < r; ++jp) {
            Mat dAct = m.actMat(Vec(delta.segment(jp * db, db)));
            for (Index j = 0; j < r; ++j)
                t.block(jp * dm, j * dm, dm, dm) +=
                    dAct * m.actMat(Vec(gamma.segment(j * db, db)));
        }
    }
    imprint(a.field, t);

    FDModule ind = induce(fb, m);
    FDModule coind = coinduce(fb, m);
    if (!intertwines(coind, ind, t) || !invert<Scalar>(t))
        throw IsoFailure("indCoindIso: the dual-basis map failed to be an isomorphism");
    return ModuleHom{std::move(t)};
}

FDModule restrictModule(const AlgebraMorphism& inclusion, const FDModule& m)
{
    if (!sameAlgebra(m.algebra, inclusion.target))
        throw AlgebraMismatch("restrictModule: module is not over the big algebra");
    FDModule out;
    out.algebra = inclusion.source;
    out.dim = m.dim;
    for (Index i = 0; i < inclusion.source->dim; ++i)
        out.action.push_back(m.actMat(Vec(inclusion.matrix.col(i))));
    return out;
}

} // namespace locfrob
