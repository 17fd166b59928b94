#include "locfrob/algebra.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>

namespace locfrob {

void Algebra::requireVec(const Vec& x) const
{
    if (x.size() != dim)
        throw DimensionMismatch("algebra: vector has wrong dimension");
    for (Index i = 0; i < dim; ++i) {
        uint32_t m = x(i).modulus();
        if (m != 0 && m != field.characteristic())
            throw FieldMismatch("algebra: vector entry from a different field");
    }
}

Vec Algebra::mul(const Vec& x, const Vec& y) const
{
    requireVec(x);
    requireVec(y);
    Vec out = Vec::Zero(dim);
    for (Index i = 0; i < dim; ++i)
        if (!x(i).isZero())
            out += x(i) * (lmul[static_cast<size_t>(i)] * y);
    imprint(field, out);
    return out;
}

Mat Algebra::lmat(const Vec& x) const
{
    requireVec(x);
    Mat m = Mat::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i)
        if (!x(i).isZero())
            m += x(i) * lmul[static_cast<size_t>(i)];
    imprint(field, m);
    return m;
}

Mat Algebra::rmat(const Vec& x) const
{
    requireVec(x);
    Mat m(dim, dim);
    for (Index j = 0; j < dim; ++j)
        m.col(j) = lmul[static_cast<size_t>(j)] * x;
    imprint(field, m);
    return m;
}

Scalar Algebra::eps(const Vec& x) const
{
    requireVec(x);
    return (aug * x)(0, 0);
}

void Algebra::validate() const
{
    auto rep = validateAlgebra(*this);
    if (!rep.ok)
        throw Error("algebra axiom check failed: " + rep.violations.front());
}

AlgebraValidation validateAlgebra(const Algebra& a)
{
    AlgebraValidation rep;
    auto fail = [&rep](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };

    if (a.dim <= 0 || static_cast<Index>(a.lmul.size()) != a.dim || a.one.size() != a.dim ||
        a.aug.size() != a.dim || static_cast<Index>(a.labels.size()) != a.dim) {
        fail("inconsistent dimensions in algebra data");
        return rep;
    }
    for (const auto& m : a.lmul)
        if (m.rows() != a.dim || m.cols() != a.dim) {
            fail("structure constant slice has wrong shape");
            return rep;
        }

    Mat eye = Mat::Identity(a.dim, a.dim);
    imprint(a.field, eye);
    if (!matEq<Scalar>(a.lmat(a.one), eye))
        fail("left unit law fails");
    if (!matEq<Scalar>(a.rmat(a.one), eye))
        fail("right unit law fails");

    for (Index i = 0; i < a.dim; ++i) {
        const Mat& li = a.lmul[static_cast<size_t>(i)];
        for (Index j = 0; j < a.dim; ++j) {
            Mat lhs = li * a.lmul[static_cast<size_t>(j)]; // maps b_k to b_i(b_j b_k)
            Mat rhs = a.lmat(li.col(j));                   // maps b_k to (b_i b_j)b_k
            if (!matEq<Scalar>(lhs, rhs))
                for (Index k = 0; k < a.dim; ++k)
                    if (!matEq<Scalar>(Mat(lhs.col(k)), Mat(rhs.col(k)))) {
                        std::ostringstream os;
                        os << "associativity fails at basis triple (" << i << "," << j << ","
                           << k << ")";
                        fail(os.str());
                    }
        }
    }

    if (a.eps(a.one) != Scalar(1))
        fail("augmentation of the unit is not 1");
    for (Index i = 0; i < a.dim; ++i)
        for (Index j = 0; j < a.dim; ++j) {
            Scalar lhs = (a.aug * a.lmul[static_cast<size_t>(i)].col(j))(0, 0);
            if (lhs != a.aug(i) * a.aug(j)) {
                std::ostringstream os;
                os << "augmentation not multiplicative on pair (" << i << "," << j << ")";
                fail(os.str());
            }
        }
    return rep;
}

AlgebraPtr makeAlgebra(Field field, std::vector<std::string> labels, std::vector<Mat> lmul,
                       Vec one, RowVec aug, std::vector<Index> gens)
{
    Algebra a;
    a.field = field;
    a.dim = static_cast<Index>(lmul.size());
    if (a.dim == 0)
        throw Error("makeAlgebra: at least one basis element required");
    for (auto& m : lmul) {
        if (m.rows() != a.dim || m.cols() != a.dim)
            throw DimensionMismatch("makeAlgebra: structure slice has wrong shape");
        imprint(field, m);
    }
    if (one.size() != a.dim || aug.size() != a.dim)
        throw DimensionMismatch("makeAlgebra: unit or augmentation has wrong length");
    imprint(field, one);
    imprint(field, aug);
    a.lmul = std::move(lmul);
    a.one = std::move(one);
    a.aug = std::move(aug);
    if (labels.empty())
        for (Index i = 0; i < a.dim; ++i)
            labels.push_back("b" + std::to_string(i));
    if (static_cast<Index>(labels.size()) != a.dim)
        throw DimensionMismatch("makeAlgebra: wrong number of labels");
    a.labels = std::move(labels);
    if (gens.empty())
        for (Index i = 0; i < a.dim; ++i)
            gens.push_back(i);
    a.gens = std::move(gens);
    return std::make_shared<const Algebra>(std::move(a));
}

AlgebraPtr trivialAlgebra(Field field)
{
    Mat unit(1, 1);
    unit(0, 0) = Scalar(1);
    Vec one(1);
    one(0) = Scalar(1);
    RowVec aug(1);
    aug(0) = Scalar(1);
    return makeAlgebra(field, {"1"}, {unit}, one, aug);
}

AlgebraPtr groupAlgebra(Field field, const FiniteGroup& g)
{
    const Index n = g.order();
    std::vector<Mat> lmul(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) {
        Mat m = Mat::Zero(n, n);
        for (Index j = 0; j < n; ++j)
            m(g.op(static_cast<int>(i), static_cast<int>(j)), j) = Scalar(1);
        lmul[static_cast<size_t>(i)] = std::move(m);
    }
    Vec one = unitVec(n, g.id);
    RowVec aug = RowVec::Constant(n, Scalar(1));
    std::vector<Index> gens(g.gens.begin(), g.gens.end());
    return makeAlgebra(field, g.names, std::move(lmul), std::move(one), std::move(aug),
                       std::move(gens));
}

AlgebraPtr productAlgebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    if (!(a->field == b->field))
        throw FieldMismatch("productAlgebra: factors over different fields");
    const Index da = a->dim, db = b->dim, d = da + db;
    std::vector<Mat> lmul(static_cast<size_t>(d), Mat::Zero(d, d));
    for (Index i = 0; i < da; ++i)
        lmul[static_cast<size_t>(i)].topLeftCorner(da, da) = a->lmul[static_cast<size_t>(i)];
    for (Index i = 0; i < db; ++i)
        lmul[static_cast<size_t>(da + i)].bottomRightCorner(db, db) =
            b->lmul[static_cast<size_t>(i)];
    Vec one(d);
    one << a->one, b->one;
    RowVec aug = RowVec::Zero(d);
    aug.head(da) = a->aug; // augmentation through the first projection
    std::vector<std::string> labels;
    for (const auto& s : a->labels)
        labels.push_back("(" + s + ",0)");
    for (const auto& s : b->labels)
        labels.push_back("(0," + s + ")");
    return makeAlgebra(a->field, std::move(labels), std::move(lmul), std::move(one),
                       std::move(aug));
}

FrobeniusData frobeniusData(const Algebra& a, const RowVec& form, bool requireSymmetric)
{
    RowVec f = form;
    imprint(a.field, f);
    if (f.size() != a.dim)
        throw DimensionMismatch("frobeniusData: form has wrong length");
    Mat gram(a.dim, a.dim);
    for (Index i = 0; i < a.dim; ++i)
        gram.row(i) = f * a.lmul[static_cast<size_t>(i)];
    bool symmetric = matEq<Scalar>(gram, gram.transpose());
    if (requireSymmetric && !symmetric)
        throw NotSymmetric("frobeniusData: Gram matrix is not symmetric");
    auto gi = invert<Scalar>(gram);
    if (!gi)
        throw DegenerateForm("frobeniusData: Gram matrix is singular");
    FrobeniusData fd;
    fd.form = std::move(f);
    fd.gram = std::move(gram);
    fd.dualU = Mat::Identity(a.dim, a.dim);
    imprint(a.field, fd.dualU);
    fd.dualV = std::move(*gi);
    fd.symmetric = symmetric;
    return fd;
}

Mat idealClosure(const Algebra& a, Side side, const Mat& seed)
{
    Mat cur = seed;
    imprint(a.field, cur);
    cur = rowBasis<Scalar>(cur);
    for (;;) {
        std::vector<Mat> extra;
        for (Index r = 0; r < cur.rows(); ++r) {
            Vec v = cur.row(r).transpose();
            for (Index i = 0; i < a.dim; ++i) {
                if (side != Side::Right)
                    extra.push_back(a.mul(a.basisVec(i), v).transpose());
                if (side != Side::Left)
                    extra.push_back(a.mul(v, a.basisVec(i)).transpose());
            }
        }
        Mat stack = cur;
        for (const auto& row : extra)
            stack = vstack<Scalar>(stack, row);
        Mat next = rowBasis<Scalar>(stack);
        if (next.rows() == cur.rows())
            return next;
        cur = std::move(next);
    }
}

Mat spinLeft(const Algebra& a, const Vec& v)
{
    Mat seed(1, a.dim);
    seed.row(0) = v.transpose();
    return idealClosure(a, Side::Left, seed);
}

Mat productSpan(const Algebra& a, const Mat& u, const Mat& v)
{
    Mat rows(u.rows() * v.rows(), a.dim);
    Index at = 0;
    for (Index r = 0; r < u.rows(); ++r)
        for (Index s = 0; s < v.rows(); ++s)
            rows.row(at++) = a.mul(u.row(r).transpose(), v.row(s).transpose()).transpose();
    return rowBasis<Scalar>(rows);
}

Ideal makeIdeal(const AlgebraPtr& a, Side side, const Mat& span)
{
    Mat basis = span;
    imprint(a->field, basis);
    if (basis.cols() != a->dim && basis.rows() > 0)
        throw DimensionMismatch("makeIdeal: wrong ambient dimension");
    basis = rowBasis<Scalar>(basis);
    for (Index r = 0; r < basis.rows(); ++r) {
        Vec v = basis.row(r).transpose();
        for (Index i = 0; i < a->dim; ++i) {
            if (side != Side::Right && !member<Scalar>(basis, a->mul(a->basisVec(i), v)))
                throw Error("makeIdeal: span not closed under left multiplication");
            if (side != Side::Left && !member<Scalar>(basis, a->mul(v, a->basisVec(i))))
                throw Error("makeIdeal: span not closed under right multiplication");
        }
    }
    Ideal l;
    l.parent = a;
    l.side = side;
    l.basis = std::move(basis);
    return l;
}

Ideal augmentationIdeal(const AlgebraPtr& a)
{
    Mat row(1, a->dim);
    row.row(0) = a->aug;
    return makeIdeal(a, Side::TwoSided, kernel<Scalar>(row));
}

namespace {

Mat integralSpace(const Algebra& a, bool left)
{
    Mat stack(a.dim * a.dim, a.dim);
    Mat eye = Mat::Identity(a.dim, a.dim);
    imprint(a.field, eye);
    for (Index i = 0; i < a.dim; ++i) {
        Mat act = left ? a.lmul[static_cast<size_t>(i)] : a.rmat(a.basisVec(i));
        stack.middleRows(i * a.dim, a.dim) = act - a.aug(i) * eye;
    }
    imprint(a.field, stack);
    return kernel<Scalar>(stack);
}

} // namespace

Mat leftIntegrals(const Algebra& a) { return integralSpace(a, true); }

Mat rightIntegrals(const Algebra& a) { return integralSpace(a, false); }

bool isUnimodular(const Algebra& a)
{
    return matEq<Scalar>(leftIntegrals(a), rightIntegrals(a));
}

bool maschkeSemisimple(const Algebra& a)
{
    for (bool left : {true, false}) {
        Mat ints = integralSpace(a, left);
        bool hit = false;
        for (Index r = 0; r < ints.rows() && !hit; ++r)
            hit = !a.eps(ints.row(r).transpose()).isZero();
        if (!hit)
            return false;
    }
    return true;
}

Ideal annihilator(const AlgebraPtr& a, const std::vector<Mat>& action, const Mat& vectors)
{
    if (static_cast<Index>(action.size()) != a->dim)
        throw DimensionMismatch("annihilator: one action matrix per basis element required");
    Mat space = rowBasis<Scalar>(Mat(Mat::Identity(a->dim, a->dim)));
    imprint(a->field, space);
    for (Index r = 0; r < vectors.rows(); ++r) {
        Vec v = vectors.row(r).transpose();
        Mat m(v.size(), a->dim);
        for (Index i = 0; i < a->dim; ++i)
            m.col(i) = action[static_cast<size_t>(i)] * v;
        imprint(a->field, m);
        space = intersectSpace<Scalar>(space, kernel<Scalar>(m));
    }
    return makeIdeal(a, Side::Left, space);
}

Ideal annihilatorRegular(const AlgebraPtr& a, const Mat& vectors, Side side)
{
    if (side == Side::TwoSided)
        throw Error("annihilatorRegular: choose Left or Right");
    if (side == Side::Left)
        return annihilator(a, a->lmul, vectors);
    Mat space = rowBasis<Scalar>(Mat(Mat::Identity(a->dim, a->dim)));
    imprint(a->field, space);
    for (Index r = 0; r < vectors.rows(); ++r) {
        // v*x = lmat(v) x, so the right annihilator of v is ker lmat(v)
        Mat m = a->lmat(vectors.row(r).transpose());
        space = intersectSpace<Scalar>(space, kernel<Scalar>(m));
    }
    return makeIdeal(a, Side::Right, space);
}

namespace {

std::optional<Scalar> rationalSqrt(const Scalar& s)
{
    using boost::multiprecision::cpp_int;
    Rational q = s.rational();
    cpp_int num = boost::multiprecision::numerator(q);
    cpp_int den = boost::multiprecision::denominator(q);
    if (num < 0)
        return std::nullopt;
    cpp_int sn = boost::multiprecision::sqrt(num);
    cpp_int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den)
        return std::nullopt;
    return Scalar::of(Field::rationals(), Rational(sn, sd));
}

// coordinates of w with respect to the rows of basis
Vec coordsIn(const Mat& basis, const Vec& w)
{
    auto c = solve<Scalar>(Mat(basis.transpose()), w);
    if (!c)
        throw Error("coordsIn: vector outside subspace");
    return *c;
}

// action of b_i restricted to the row space of basis, in basis coordinates
std::vector<Mat> restrictedAction(const Algebra& a, const Mat& basis)
{
    std::vector<Mat> act;
    for (Index i = 0; i < a.dim; ++i) {
        Mat m(basis.rows(), basis.rows());
        for (Index k = 0; k < basis.rows(); ++k)
            m.col(k) = coordsIn(basis, a.mul(a.basisVec(i), basis.row(k).transpose()));
        act.push_back(std::move(m));
    }
    return act;
}

// all nonzero coefficient vectors of length m over GF(q), as an odometer
bool nextTuple(std::vector<uint32_t>& digits, uint32_t q)
{
    for (auto& d : digits) {
        if (++d < q)
            return true;
        d = 0;
    }
    return false;
}

} // namespace

std::optional<Vec> commonInvariantLine2(const std::vector<Mat>& mats)
{
    // an invariant line is a rational eigenline of every matrix; either some
    // matrix is non-scalar and its (at most two) rational eigenlines are the
    // only candidates, or all matrices are scalar and every line works
    std::optional<size_t> pivot;
    for (size_t i = 0; i < mats.size() && !pivot; ++i) {
        const Mat& mi = mats[i];
        if (mi.rows() != 2 || mi.cols() != 2)
            throw DimensionMismatch("commonInvariantLine2: expects 2x2 matrices");
        bool scalar = mi(0, 1).isZero() && mi(1, 0).isZero() && mi(0, 0) == mi(1, 1);
        if (!scalar)
            pivot = i;
    }
    Vec fallback(2);
    fallback(0) = Scalar(1);
    fallback(1) = Scalar(0);
    if (!pivot)
        return fallback;
    const Mat& mp = mats[*pivot];
    Scalar tr = mp(0, 0) + mp(1, 1);
    Scalar det = mp(0, 0) * mp(1, 1) - mp(0, 1) * mp(1, 0);
    auto root = rationalSqrt(tr * tr - Scalar(4) * det);
    if (!root)
        return std::nullopt; // no rational eigenvalue, hence no invariant line
    Scalar half = Scalar::of(Field::rationals(), 1, 2);
    for (int sign : {+1, -1}) {
        Scalar lam = (tr + Scalar(sign) * *root) * half;
        Mat shifted = mp;
        shifted(0, 0) -= lam;
        shifted(1, 1) -= lam;
        Mat lines = kernel<Scalar>(shifted);
        for (Index r = 0; r < lines.rows(); ++r) {
            bool invariant = true;
            for (const auto& mi : mats) {
                Mat pair(2, 2);
                pair.row(0) = lines.row(r);
                pair.row(1) = (mi * lines.row(r).transpose()).transpose();
                if (rankOf<Scalar>(pair) > 1) {
                    invariant = false;
                    break;
                }
            }
            if (invariant)
                return Vec(lines.row(r).transpose());
        }
    }
    return std::nullopt;
}

bool isMinimalLeftIdeal(const Algebra& a, const Mat& basisRows)
{
    Mat basis = rowBasis<Scalar>(basisRows);
    imprint(a.field, basis);
    const Index m = basis.rows();
    if (m == 0)
        return false;
    if (m == 1)
        return true;

    if (a.field.isFinite()) {
        const uint32_t q = a.field.characteristic();
        double count = 1;
        for (Index k = 0; k < m; ++k)
            count *= q;
        if (count > 4096)
            throw AlgorithmInapplicable("isMinimalLeftIdeal: too many elements to enumerate");
        std::vector<uint32_t> digits(static_cast<size_t>(m), 0);
        while (nextTuple(digits, q)) {
            Vec v = Vec::Zero(a.dim);
            for (Index k = 0; k < m; ++k)
                v += Scalar::of(a.field, digits[static_cast<size_t>(k)], 1) *
                     basis.row(k).transpose();
            if (!matEq<Scalar>(spinLeft(a, v), basis))
                return false;
        }
        return true;
    }

    if (m == 2)
        return !commonInvariantLine2(restrictedAction(a, basis));

    throw AlgorithmInapplicable(
        "isMinimalLeftIdeal: no decision procedure for this field/dimension");
}

MinimalIdealClass minimalIdealDichotomy(const AlgebraPtr& a, const Ideal& l, bool verifyMinimal)
{
    if (l.side == Side::Right)
        throw Error("minimalIdealDichotomy: expects a left (or two-sided) ideal");
    if (verifyMinimal && !isMinimalLeftIdeal(*a, l.basis))
        throw NotMinimal("minimalIdealDichotomy: ideal is not minimal");

    const Mat& b = l.basis;
    if (productSpan(*a, b, b).rows() == 0)
        return {true, Vec()};

    // pick x in L with L*x != 0, then solve e*x = x inside L
    for (Index s = 0; s < b.rows(); ++s) {
        Vec x = b.row(s).transpose();
        Mat m(a->dim, b.rows());
        for (Index k = 0; k < b.rows(); ++k)
            m.col(k) = a->mul(b.row(k).transpose(), x);
        if (isZeroMat<Scalar>(m))
            continue;
        auto c = solve<Scalar>(m, x);
        if (!c)
            throw NotMinimal("minimalIdealDichotomy: right multiplication not onto");
        Vec e = Vec::Zero(a->dim);
        for (Index k = 0; k < b.rows(); ++k)
            e += (*c)(k)*b.row(k).transpose();
        imprint(a->field, e);
        if (!matEq<Scalar>(Mat(a->mul(e, e)), Mat(e)))
            throw NotMinimal("minimalIdealDichotomy: recovered element fails e*e = e");
        if (!matEq<Scalar>(spinLeft(*a, e), b))
            throw NotMinimal("minimalIdealDichotomy: A*e is a proper subideal");
        return {false, e};
    }
    throw NotMinimal("minimalIdealDichotomy: L*L nonzero but no basis witness found");
}

std::pair<AlgebraPtr, FrobeniusData> maschkeCounterexample(const AlgebraPtr& r0,
                                                           const RowVec& form0)
{
    frobeniusData(*r0, form0); // throws unless form0 is a symmetric Frobenius form
    Mat rad0 = radicalSubspace(*r0);
    if (rad0.rows() != r0->dim - 1 || r0->dim < 2)
        throw Error("maschkeCounterexample: base algebra must be local and not semisimple");

    AlgebraPtr prod = productAlgebra(trivialAlgebra(r0->field), r0);
    RowVec form(prod->dim);
    form(0) = Scalar(1);
    form.tail(r0->dim) = form0;
    FrobeniusData fd = frobeniusData(*prod, form);

    if (!member<Scalar>(leftIntegrals(*prod), prod->basisVec(0)))
        throw Error("maschkeCounterexample: (1,0) is not a left integral");
    if (radicalSubspace(*prod).rows() == 0)
        throw Error("maschkeCounterexample: product is unexpectedly semisimple");
    return {prod, fd};
}

} // namespace locfrob
