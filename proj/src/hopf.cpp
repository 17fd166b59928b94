#include "locfrob/hopf.hpp"

namespace locfrob {

namespace {

// Walk the nonzero entries of a tensor-square vector as (u, v, coefficient).
template <class F> void forEachTensorEntry(const Vec& col, Index dim, F&& f)
{
    for (Index flat = 0; flat < col.size(); ++flat)
        if (!col(flat).isZero())
            f(flat / dim, flat % dim, col(flat));
}

Scalar oneOf(const Field& f) { return Scalar::of(f, 1); }

} // namespace

HopfTriple groupHopf(const Field& f, const FiniteGroup& g)
{
    AlgebraPtr a = groupAlgebra(f, g);
    const Index d = a->dim;

    Mat cop = Mat::Zero(d * d, d);
    Mat anti = Mat::Zero(d, d);
    for (Index j = 0; j < d; ++j) {
        cop(j * d + j, j) = oneOf(f);
        anti(g.inv[static_cast<size_t>(j)], j) = oneOf(f);
    }
    imprint(f, cop);
    imprint(f, anti);

    RowVec form = RowVec::Zero(d);
    form(g.id) = oneOf(f);
    imprint(f, form);
    FrobeniusData fd = frobeniusData(*a, form);
    return HopfTriple{a, HopfData{a, std::move(cop), std::move(anti)}, std::move(fd)};
}

HopfTriple dualFunctionAlgebra(const Field& f, const FiniteGroup& g)
{
    const Index d = g.order();
    std::vector<std::string> labels;
    std::vector<Mat> lmul;
    std::vector<Index> gens;
    for (Index x = 0; x < d; ++x) {
        labels.push_back("d(" + g.names[static_cast<size_t>(x)] + ")");
        Mat m = Mat::Zero(d, d);
        m(x, x) = oneOf(f);
        lmul.push_back(std::move(m));
        gens.push_back(x); // no proper subset of indicators generates
    }
    Vec one = Vec::Zero(d);
    RowVec aug = RowVec::Zero(d);
    for (Index x = 0; x < d; ++x)
        one(x) = oneOf(f);
    aug(g.id) = oneOf(f);
    AlgebraPtr a = makeAlgebra(f, std::move(labels), std::move(lmul), std::move(one),
                               std::move(aug), std::move(gens));

    Mat cop = Mat::Zero(d * d, d);
    Mat anti = Mat::Zero(d, d);
    for (int x = 0; x < g.order(); ++x) {
        for (int u = 0; u < g.order(); ++u) {
            int v = g.op(g.inv[static_cast<size_t>(u)], x); // uv = x
            cop(static_cast<Index>(u) * d + v, x) = oneOf(f);
        }
        anti(g.inv[static_cast<size_t>(x)], x) = oneOf(f);
    }
    imprint(f, cop);
    imprint(f, anti);

    RowVec form = RowVec::Zero(d);
    for (Index x = 0; x < d; ++x)
        form(x) = oneOf(f); // sum over the group; gram = identity
    imprint(f, form);
    FrobeniusData fd = frobeniusData(*a, form);
    return HopfTriple{a, HopfData{a, std::move(cop), std::move(anti)}, std::move(fd)};
}

HopfReport verifyHopf(const HopfData& h)
{
    HopfReport rep;
    auto flag = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    const Algebra& a = *h.base;
    const Field& f = a.field;
    const Index d = a.dim;
    if (h.coproduct.rows() != d * d || h.coproduct.cols() != d) {
        flag("coproduct has the wrong shape");
        return rep;
    }
    if (h.antipode.rows() != d || h.antipode.cols() != d) {
        flag("antipode has the wrong shape");
        return rep;
    }

    for (Index j = 0; j < d; ++j) {
        const Vec col = h.coproduct.col(j);
        Vec viaLeft = Vec::Zero(d);  // (eps (x) id) Delta
        Vec viaRight = Vec::Zero(d); // (id (x) eps) Delta
        forEachTensorEntry(col, d, [&](Index u, Index v, const Scalar& c) {
            viaLeft(v) += c * a.aug(u);
            viaRight(u) += c * a.aug(v);
        });
        imprint(f, viaLeft);
        imprint(f, viaRight);
        const Vec unit = a.basisVec(j);
        if (!matEq<Scalar>(Mat(viaLeft), Mat(unit)) || !matEq<Scalar>(Mat(viaRight), Mat(unit)))
            flag("counit law fails at " + a.labels[static_cast<size_t>(j)]);

        Vec lhs = Vec::Zero(d * d * d); // (Delta (x) id) Delta
        Vec rhs = Vec::Zero(d * d * d); // (id (x) Delta) Delta
        forEachTensorEntry(col, d, [&](Index s, Index w, const Scalar& c1) {
            forEachTensorEntry(h.coproduct.col(s), d, [&](Index u, Index v, const Scalar& c2) {
                lhs(u * d * d + v * d + w) += c1 * c2;
            });
        });
        forEachTensorEntry(col, d, [&](Index u, Index s, const Scalar& c1) {
            forEachTensorEntry(h.coproduct.col(s), d, [&](Index v, Index w, const Scalar& c2) {
                rhs(u * d * d + v * d + w) += c1 * c2;
            });
        });
        imprint(f, lhs);
        imprint(f, rhs);
        if (!matEq<Scalar>(Mat(lhs), Mat(rhs)))
            flag("coassociativity fails at " + a.labels[static_cast<size_t>(j)]);
    }

    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            Vec lhs = h.coproduct * a.lmul[static_cast<size_t>(i)].col(j);
            Vec rhs = Vec::Zero(d * d);
            forEachTensorEntry(h.coproduct.col(i), d,
                               [&](Index u1, Index v1, const Scalar& c1) {
                forEachTensorEntry(h.coproduct.col(j), d,
                                   [&](Index u2, Index v2, const Scalar& c2) {
                    const Vec p = a.lmul[static_cast<size_t>(u1)].col(u2);
                    const Vec q = a.lmul[static_cast<size_t>(v1)].col(v2);
                    for (Index s = 0; s < d; ++s) {
                        if (p(s).isZero())
                            continue;
                        for (Index t = 0; t < d; ++t)
                            if (!q(t).isZero())
                                rhs(s * d + t) += c1 * c2 * p(s) * q(t);
                    }
                });
            });
            imprint(f, lhs);
            imprint(f, rhs);
            if (!matEq<Scalar>(Mat(lhs), Mat(rhs)))
                flag("coproduct not multiplicative at (" + a.labels[static_cast<size_t>(i)] +
                     ", " + a.labels[static_cast<size_t>(j)] + ")");
        }
    }

    {
        Vec lhs = h.coproduct * a.one;
        Vec rhs = Vec::Zero(d * d);
        for (Index u = 0; u < d; ++u)
            for (Index v = 0; v < d; ++v)
                rhs(u * d + v) = a.one(u) * a.one(v);
        imprint(f, lhs);
        imprint(f, rhs);
        if (!matEq<Scalar>(Mat(lhs), Mat(rhs)))
            flag("coproduct of the unit is not 1 (x) 1");
    }

    for (Index j = 0; j < d; ++j) {
        Vec left = Vec::Zero(d);  // m (chi (x) id) Delta
        Vec right = Vec::Zero(d); // m (id (x) chi) Delta
        forEachTensorEntry(h.coproduct.col(j), d, [&](Index u, Index v, const Scalar& c) {
            left += c * a.mul(Vec(h.antipode.col(u)), a.basisVec(v));
            right += c * a.mul(a.basisVec(u), Vec(h.antipode.col(v)));
        });
        Vec target = a.aug(j) * a.one;
        imprint(f, left);
        imprint(f, right);
        imprint(f, target);
        if (!matEq<Scalar>(Mat(left), Mat(target)))
            flag("antipode law fails at " + a.labels[static_cast<size_t>(j)] + " on the left");
        if (!matEq<Scalar>(Mat(right), Mat(target)))
            flag("antipode law fails at " + a.labels[static_cast<size_t>(j)] + " on the right");
    }
    return rep;
}

bool isInvolutive(const HopfData& h)
{
    Mat sq = h.antipode * h.antipode;
    Mat eye = Mat::Identity(h.base->dim, h.base->dim);
    imprint(h.base->field, sq);
    imprint(h.base->field, eye);
    return matEq<Scalar>(sq, eye);
}

FDModule tensorModule(const HopfData& h, const FDModule& l, const FDModule& m)
{
    if (!sameAlgebra(h.base, l.algebra) || !sameAlgebra(h.base, m.algebra))
        throw AlgebraMismatch("tensorModule: factors live over different algebras");
    const Algebra& a = *h.base;
    FDModule t;
    t.algebra = h.base;
    t.dim = l.dim * m.dim;
    for (Index i = 0; i < a.dim; ++i) {
        Mat act = Mat::Zero(t.dim, t.dim);
        forEachTensorEntry(h.coproduct.col(i), a.dim, [&](Index u, Index v, const Scalar& c) {
            act += c * kron<Scalar>(l.action[static_cast<size_t>(u)],
                                    m.action[static_cast<size_t>(v)]);
        });
        imprint(a.field, act);
        t.action.push_back(std::move(act));
    }
    return t;
}

Vec adjointAction(const HopfData& h, const Vec& a, const Vec& x, Side side)
{
    if (side == Side::TwoSided)
        throw Error("adjointAction: pick Side::Left or Side::Right");
    const Algebra& alg = *h.base;
    alg.requireVec(a);
    alg.requireVec(x);
    Vec out = Vec::Zero(alg.dim);
    for (Index i = 0; i < alg.dim; ++i) {
        if (a(i).isZero())
            continue;
        forEachTensorEntry(h.coproduct.col(i), alg.dim, [&](Index u, Index v, const Scalar& c) {
            Vec term = side == Side::Left
                           ? alg.mul(alg.mul(alg.basisVec(u), x), Vec(h.antipode.col(v)))
                           : alg.mul(alg.mul(Vec(h.antipode.col(u)), x), alg.basisVec(v));
            out += a(i) * c * term;
        });
    }
    imprint(alg.field, out);
    return out;
}

AlgebraMorphism dualPullback(const Field& f, const FiniteGroup& big,
                             const std::vector<int>& normalSub, FiniteGroup* quotientOut,
                             std::vector<int>* projOut)
{
    std::vector<int> proj;
    FiniteGroup quot = quotientGroup(big, normalSub, &proj);
    AlgebraPtr source = dualFunctionAlgebra(f, quot).algebra;
    AlgebraPtr target = dualFunctionAlgebra(f, big).algebra;
    Mat matrix = Mat::Zero(target->dim, source->dim);
    for (int x = 0; x < big.order(); ++x)
        matrix(x, proj[static_cast<size_t>(x)]) = oneOf(f);
    if (quotientOut)
        *quotientOut = quot;
    if (projOut)
        *projOut = std::move(proj);
    return makeMorphism(source, target, matrix);
}

std::pair<FDModule, ModuleHom> hModK(const AlgebraMorphism& inclusion)
{
    const Algebra& b = *inclusion.source;
    FDModule reg = regularModule(inclusion.target);
    Mat kplus = kernel<Scalar>(Mat(b.aug)); // basis of the augmentation ideal of K
    Mat pushed = kplus * inclusion.matrix.transpose();
    imprint(inclusion.target->field, pushed);
    Mat ideal = submoduleGenerated(reg, pushed);
    return quotientModule(reg, ideal);
}

TwistingIso twistingIso(const HopfData& h, const HopfData& k, const FreeBasis& fb,
                        const FDModule& m, const FDModule& n)
{
    const AlgebraPtr& ha = fb.inclusion.target;
    const AlgebraPtr& ka = fb.inclusion.source;
    if (!sameAlgebra(h.base, ha) || !sameAlgebra(k.base, ka))
        throw AlgebraMismatch("twistingIso: Hopf data does not match the inclusion");
    if (!sameAlgebra(m.algebra, ha) || !sameAlgebra(n.algebra, ka))
        throw AlgebraMismatch("twistingIso: modules over the wrong algebras");

    const Field& f = ha->field;
    const Index d = ha->dim;
    const Index db = ka->dim;
    const Index r = fb.rank();
    const Index dm = m.dim;
    const Index dn = n.dim;

    TwistingIso out;
    FDModule restricted = restrictModule(fb.inclusion, m);
    out.source = induce(fb, tensorModule(k, restricted, n));
    out.target = tensorModule(h, m, induce(fb, n));

    // a (x) (m (x) n)  |->  sum a'm (x) (a'' (x) n), with the second leg
    // rewritten in the induced basis through the right coordinates.
    Mat theta = Mat::Zero(out.target.dim, out.source.dim);
    for (Index j = 0; j < r; ++j) {
        Vec dx = h.coproduct * fb.elements[static_cast<size_t>(j)];
        imprint(f, dx);
        forEachTensorEntry(dx, d, [&](Index u, Index v, const Scalar& c) {
            const Mat& mAct = m.action[static_cast<size_t>(u)];
            Vec beta = fb.rightCoords * ha->basisVec(v);
            imprint(f, beta);
            for (Index i = 0; i < r; ++i) {
                Mat nAct = n.actMat(beta.segment(i * db, db));
                for (Index s = 0; s < dm; ++s) {
                    for (Index t = 0; t < dn; ++t) {
                        const Index colIdx = j * dm * dn + s * dn + t;
                        for (Index sp = 0; sp < dm; ++sp) {
                            if (mAct(sp, s).isZero())
                                continue;
                            for (Index w = 0; w < dn; ++w)
                                if (!nAct(w, t).isZero())
                                    theta(sp * r * dn + i * dn + w, colIdx) +=
                                        c * mAct(sp, s) * nAct(w, t);
                        }
                    }
                }
            }
        });
    }
    imprint(f, theta);

    if (!intertwines(out.source, out.target, theta))
        throw IsoFailure("twistingIso: assembled map does not intertwine");
    if (out.source.dim != out.target.dim || rankOf<Scalar>(theta) != out.source.dim)
        throw IsoFailure("twistingIso: assembled map is not invertible");
    out.matrix = std::move(theta);
    return out;
}

NormalityReport normalityCheck(const HopfData& h, const AlgebraMorphism& inclusion)
{
    if (!sameAlgebra(h.base, inclusion.target))
        throw AlgebraMismatch("normalityCheck: Hopf data does not match the inclusion");
    const Algebra& a = *h.base;
    const Algebra& b = *inclusion.source;
    NormalityReport rep;

    Mat kplus = kernel<Scalar>(Mat(b.aug)) * inclusion.matrix.transpose();
    imprint(a.field, kplus);
    Mat full = Mat::Identity(a.dim, a.dim);
    imprint(a.field, full);
    rep.idealsMatch = matEq<Scalar>(productSpan(a, full, kplus), productSpan(a, kplus, full));

    Mat image = rowBasis<Scalar>(Mat(inclusion.matrix.transpose()));
    rep.adjointStable = true;
    for (Index i = 0; i < a.dim && rep.adjointStable; ++i) {
        for (Index t = 0; t < b.dim && rep.adjointStable; ++t) {
            Vec x = inclusion.matrix.col(t);
            if (!member<Scalar>(image, adjointAction(h, a.basisVec(i), x, Side::Left)) ||
                !member<Scalar>(image, adjointAction(h, a.basisVec(i), x, Side::Right)))
                rep.adjointStable = false;
        }
    }
    return rep;
}

Mat subHopfProduct(const HopfData& h, const Mat& kRows, const Mat& lRows)
{
    const Algebra& a = *h.base;
    Mat kBasis = rowBasis<Scalar>(kRows);
    Mat lBasis = rowBasis<Scalar>(lRows);
    for (Index i = 0; i < lBasis.rows(); ++i) {
        for (Index j = 0; j < kBasis.rows(); ++j) {
            Vec moved = adjointAction(h, Vec(lBasis.row(i).transpose()),
                                      Vec(kBasis.row(j).transpose()), Side::Left);
            if (!member<Scalar>(kBasis, moved))
                throw NotNormalized("subHopfProduct: left adjoint action of the second "
                                    "factor does not stabilize the first");
        }
    }

    Mat prod = productSpan(a, kBasis, lBasis);
    if (!matEq<Scalar>(prod, productSpan(a, lBasis, kBasis)))
        throw Error("subHopfProduct: K L and L K span different subspaces");
    if (!member<Scalar>(prod, a.one))
        throw Error("subHopfProduct: product does not contain the unit");

    Mat tensorRows(prod.rows() * prod.rows(), a.dim * a.dim);
    for (Index i = 0; i < prod.rows(); ++i)
        for (Index j = 0; j < prod.rows(); ++j)
            tensorRows.row(i * prod.rows() + j) =
                kron<Scalar>(Mat(prod.row(i)), Mat(prod.row(j)));
    Mat tensorBasis = rowBasis<Scalar>(tensorRows);
    for (Index i = 0; i < prod.rows(); ++i) {
        Vec row = prod.row(i).transpose();
        if (!member<Scalar>(tensorBasis, Vec(h.coproduct * row)))
            throw Error("subHopfProduct: product is not closed under the coproduct");
        if (!member<Scalar>(prod, Vec(h.antipode * row)))
            throw Error("subHopfProduct: product is not closed under the antipode");
    }
    return prod;
}

} // namespace locfrob
