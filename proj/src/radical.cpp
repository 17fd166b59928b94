#include "locfrob/algebra.hpp"

namespace locfrob {

namespace {

// I^(2^k) chain by repeated squaring; an ideal is nilpotent iff it hits zero.
bool nilpotentSpan(const Algebra& a, Mat span)
{
    while (span.rows() > 0) {
        Mat next = productSpan(a, span, span);
        if (matEq<Scalar>(next, span))
            return false;
        span = std::move(next);
    }
    return true;
}

Mat radicalCharZero(const Algebra& a)
{
    // trace-form criterion: x is radical iff trace(L_x L_y) = 0 for all y
    Mat t(a.dim, a.dim);
    for (Index i = 0; i < a.dim; ++i)
        for (Index j = 0; j <= i; ++j) {
            t(i, j) = traceProduct<Scalar>(a.lmul[static_cast<size_t>(i)],
                                           a.lmul[static_cast<size_t>(j)]);
            t(j, i) = t(i, j);
        }
    return kernel<Scalar>(t);
}

Mat radicalCharP(const Algebra& a)
{
    // Shrinking chain R_0 = A, R_{i+1} = {x in R_i : c_{p^i}(L_{xy}) = 0 for
    // all y in R_i}, where c_k is the k-th characteristic polynomial
    // coefficient; after the last step with p^i <= dim the chain equals the
    // radical.  Linearity of x |-> c_{p^i}(L_{xy}) needs a prime field.
    const uint32_t p = a.field.characteristic();
    Mat r = Mat::Identity(a.dim, a.dim);
    imprint(a.field, r);

    std::vector<Scalar> basisTrace;
    for (const auto& m : a.lmul)
        basisTrace.push_back(m.trace());

    for (uint64_t q = 1; q <= static_cast<uint64_t>(a.dim); q *= p) {
        const Index m = r.rows();
        if (m == 0)
            break;
        Mat c(m, m);
        for (Index s = 0; s < m; ++s)
            for (Index t = 0; t <= s; ++t) {
                Vec prod = a.mul(r.row(s).transpose(), r.row(t).transpose());
                if (q == 1) {
                    Scalar tr = Scalar(0);
                    for (Index i = 0; i < a.dim; ++i)
                        tr += prod(i) * basisTrace[static_cast<size_t>(i)];
                    c(s, t) = -tr;
                } else {
                    c(s, t) = charPolyHessenberg<Scalar>(a.lmat(prod))[static_cast<size_t>(q)];
                }
                c(t, s) = c(s, t); // L_{xy} and L_{yx} share a char poly
            }
        imprint(a.field, c);
        r = rowBasis<Scalar>(Mat(kernel<Scalar>(c) * r));
    }
    return r;
}

} // namespace

Mat radicalSubspace(const Algebra& a)
{
    Mat rad = a.field.isRational() ? radicalCharZero(a) : radicalCharP(a);
    if (!nilpotentSpan(a, rad))
        throw Error("radical: computed subspace is not nilpotent");
    return rad;
}

Ideal radical(const AlgebraPtr& a)
{
    // makeIdeal re-verifies two-sidedness of the computed subspace
    return makeIdeal(a, Side::TwoSided, radicalSubspace(*a));
}

Mat radicalBrute(const Algebra& a, unsigned long long limit)
{
    if (!a.field.isFinite())
        throw AlgorithmInapplicable("radicalBrute: finite fields only");
    const uint32_t q = a.field.characteristic();
    unsigned long long count = 1;
    for (Index i = 0; i < a.dim; ++i) {
        count *= q;
        if (count > limit)
            throw AlgorithmInapplicable("radicalBrute: q^dim exceeds the enumeration limit");
    }

    // The radical is a nil ideal, so an element with a nonzero power can be
    // rejected before the expensive ideal-closure nilpotency test.
    auto elementNilpotent = [&a](Vec v) {
        for (Index reached = 1; reached < a.dim; reached *= 2) {
            v = a.mul(v, v);
            if (isZeroMat<Scalar>(Mat(v)))
                return true;
        }
        return isZeroMat<Scalar>(Mat(v));
    };

    Mat cur(0, a.dim);
    std::vector<uint32_t> digits(static_cast<size_t>(a.dim), 0);
    auto bump = [&]() {
        for (auto& d : digits) {
            if (++d < q)
                return true;
            d = 0;
        }
        return false;
    };
    while (bump()) {
        Vec v(a.dim);
        for (Index i = 0; i < a.dim; ++i)
            v(i) = Scalar::of(a.field, digits[static_cast<size_t>(i)], 1);
        if (member<Scalar>(cur, v))
            continue; // spans of confirmed elements stay radical
        if (!elementNilpotent(v))
            continue;
        Mat seed(1, a.dim);
        seed.row(0) = v.transpose();
        if (nilpotentSpan(a, idealClosure(a, Side::TwoSided, seed)))
            cur = sumSpace<Scalar>(cur, seed);
    }
    return cur;
}

Ideal socle(const AlgebraPtr& a, Side side)
{
    if (side == Side::TwoSided)
        throw Error("socle: choose the Left or Right module socle");
    Mat rad = radicalSubspace(*a);
    if (rad.rows() == 0) {
        Mat whole = Mat::Identity(a->dim, a->dim);
        imprint(a->field, whole);
        return makeIdeal(a, Side::TwoSided, whole);
    }
    Mat stack(rad.rows() * a->dim, a->dim);
    for (Index k = 0; k < rad.rows(); ++k) {
        Vec r = rad.row(k).transpose();
        // Left socle kills the radical acting from the left: rad * x = 0.
        stack.middleRows(k * a->dim, a->dim) =
            side == Side::Left ? a->lmat(r) : a->rmat(r);
    }
    // the annihilator of a two-sided ideal on either side is two-sided
    return makeIdeal(a, Side::TwoSided, kernel<Scalar>(stack));
}

} // namespace locfrob
