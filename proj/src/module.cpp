#include "locfrob/module.hpp"

#include "locfrob/rng.hpp"

namespace locfrob {

bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    if (a.get() == b.get())
        return true;
    if (!a || !b || !(a->field == b->field) || a->dim != b->dim)
        return false;
    for (Index i = 0; i < a->dim; ++i)
        if (!matEq<Scalar>(a->lmul[static_cast<size_t>(i)], b->lmul[static_cast<size_t>(i)]))
            return false;
    return matEq<Scalar>(Mat(a->one), Mat(b->one)) &&
           matEq<Scalar>(Mat(a->aug.transpose()), Mat(b->aug.transpose()));
}

void requireSameAlgebra(const FDModule& m, const FDModule& n)
{
    if (!sameAlgebra(m.algebra, n.algebra))
        throw AlgebraMismatch("modules live over different algebras");
}

namespace {

Mat identityOver(const Field& f, Index n)
{
    Mat eye = Mat::Identity(n, n);
    imprint(f, eye);
    return eye;
}

} // namespace

Mat FDModule::actMat(const Vec& x) const
{
    algebra->requireVec(x);
    Mat m = Mat::Zero(dim, dim);
    for (Index i = 0; i < algebra->dim; ++i)
        if (!x(i).isZero())
            m += x(i) * action[static_cast<size_t>(i)];
    imprint(algebra->field, m);
    return m;
}

void FDModule::validate() const
{
    if (!algebra)
        throw Error("module: missing algebra");
    if (dim < 0 || static_cast<Index>(action.size()) != algebra->dim)
        throw Error("module: one action matrix per algebra basis element required");
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim)
            throw Error("module: action matrix has wrong shape");
    if (dim == 0)
        return;
    if (!matEq<Scalar>(actMat(algebra->one), identityOver(algebra->field, dim)))
        throw Error("module: unit does not act as identity");
    for (Index i = 0; i < algebra->dim; ++i)
        for (Index j = 0; j < algebra->dim; ++j) {
            Mat lhs = action[static_cast<size_t>(i)] * action[static_cast<size_t>(j)];
            Mat rhs = actMat(algebra->lmul[static_cast<size_t>(i)].col(j));
            if (!matEq<Scalar>(lhs, rhs))
                throw Error("module: action not multiplicative on a basis pair");
        }
}

FDModule regularModule(const AlgebraPtr& a)
{
    FDModule m;
    m.algebra = a;
    m.dim = a->dim;
    m.action = a->lmul;
    return m;
}

FDModule trivialModule(const AlgebraPtr& a)
{
    FDModule m;
    m.algebra = a;
    m.dim = 1;
    for (Index i = 0; i < a->dim; ++i) {
        Mat s(1, 1);
        s(0, 0) = a->aug(i);
        m.action.push_back(std::move(s));
    }
    return m;
}

FDModule zeroModule(const AlgebraPtr& a)
{
    FDModule m;
    m.algebra = a;
    m.dim = 0;
    m.action.assign(static_cast<size_t>(a->dim), Mat(0, 0));
    return m;
}

FDModule directSum(const std::vector<FDModule>& parts)
{
    if (parts.empty())
        throw Error("directSum: need at least one summand");
    FDModule out;
    out.algebra = parts.front().algebra;
    out.dim = 0;
    for (const auto& p : parts) {
        requireSameAlgebra(parts.front(), p);
        out.dim += p.dim;
    }
    for (Index i = 0; i < out.algebra->dim; ++i) {
        Mat blk = Mat::Zero(out.dim, out.dim);
        Index at = 0;
        for (const auto& p : parts) {
            blk.block(at, at, p.dim, p.dim) = p.action[static_cast<size_t>(i)];
            at += p.dim;
        }
        imprint(out.algebra->field, blk);
        out.action.push_back(std::move(blk));
    }
    return out;
}

FDModule freeModule(const AlgebraPtr& a, Index copies)
{
    if (copies == 0)
        return zeroModule(a);
    return directSum(std::vector<FDModule>(static_cast<size_t>(copies), regularModule(a)));
}

FDModule randomModule(const AlgebraPtr& a, Rng& rng, Index copies, Index seeds)
{
    FDModule f = freeModule(a, copies);
    if (f.dim == 0 || seeds == 0)
        return f;
    Mat seedRows(seeds, f.dim);
    for (Index r = 0; r < seeds; ++r)
        seedRows.row(r) = rng.vec(a->field, f.dim).transpose();
    return quotientModule(f, submoduleGenerated(f, seedRows)).first;
}

bool intertwines(const FDModule& m, const FDModule& n, const Mat& f)
{
    if (f.rows() != n.dim || f.cols() != m.dim)
        return false;
    for (Index g : m.algebra->gens) {
        const Mat& rm = m.action[static_cast<size_t>(g)];
        const Mat& rn = n.action[static_cast<size_t>(g)];
        if (!matEq<Scalar>(Mat(rn * f), Mat(f * rm)))
            return false;
    }
    return true;
}

Mat homSpace(const FDModule& m, const FDModule& n)
{
    requireSameAlgebra(m, n);
    if (m.dim == 0 || n.dim == 0)
        return Mat(0, n.dim * m.dim);
    // row-major flattening: vec(R F) = (R (x) I) vec(F), vec(F S) = (I (x) S^T) vec(F);
    // it suffices to intertwine a generating set of the algebra
    Mat eyeN = identityOver(n.algebra->field, n.dim);
    Mat eyeM = identityOver(m.algebra->field, m.dim);
    Mat stack(0, n.dim * m.dim);
    for (Index g : m.algebra->gens) {
        const Mat& rm = m.action[static_cast<size_t>(g)];
        const Mat& rn = n.action[static_cast<size_t>(g)];
        Mat eq = kron<Scalar>(rn, eyeM) - kron<Scalar>(eyeN, Mat(rm.transpose()));
        stack = vstack<Scalar>(stack, eq);
    }
    if (stack.rows() == 0)
        return rowBasis<Scalar>(identityOver(m.algebra->field, n.dim * m.dim));
    return kernel<Scalar>(stack);
}

std::vector<Mat> homBasis(const FDModule& m, const FDModule& n)
{
    Mat flat = homSpace(m, n);
    std::vector<Mat> out;
    for (Index r = 0; r < flat.rows(); ++r)
        out.push_back(unflatten(flat.row(r).transpose(), n.dim, m.dim));
    return out;
}

Mat submoduleGenerated(const FDModule& m, const Mat& vectors)
{
    Mat cur = vectors;
    imprint(m.algebra->field, cur);
    cur = rowBasis<Scalar>(cur);
    for (;;) {
        Mat stack = cur;
        for (Index r = 0; r < cur.rows(); ++r)
            for (Index g : m.algebra->gens) {
                Mat row(1, m.dim);
                row.row(0) =
                    (m.action[static_cast<size_t>(g)] * cur.row(r).transpose()).transpose();
                stack = vstack<Scalar>(stack, row);
            }
        Mat next = rowBasis<Scalar>(stack);
        if (next.rows() == cur.rows())
            return next;
        cur = std::move(next);
    }
}

namespace {

bool isSubmodule(const FDModule& m, const Mat& subBasis)
{
    for (Index g : m.algebra->gens)
        for (Index r = 0; r < subBasis.rows(); ++r)
            if (!member<Scalar>(subBasis,
                                Vec(m.action[static_cast<size_t>(g)] *
                                    subBasis.row(r).transpose())))
                return false;
    return true;
}

} // namespace

FDModule submoduleModule(const FDModule& m, const Mat& subBasis, Mat* inclusion)
{
    Mat basis = rowBasis<Scalar>(subBasis);
    imprint(m.algebra->field, basis);
    if (!isSubmodule(m, basis))
        throw NotSubmodule("submoduleModule: subspace is not invariant");
    FDModule sub;
    sub.algebra = m.algebra;
    sub.dim = basis.rows();
    Mat bt = basis.transpose(); // columns are the sub basis inside M
    for (Index i = 0; i < m.algebra->dim; ++i) {
        Mat img = m.action[static_cast<size_t>(i)] * bt;
        Mat coords(sub.dim, sub.dim);
        for (Index c = 0; c < sub.dim; ++c) {
            auto sol = solve<Scalar>(bt, Vec(img.col(c)));
            if (!sol)
                throw NotSubmodule("submoduleModule: action leaves the subspace");
            coords.col(c) = *sol;
        }
        sub.action.push_back(std::move(coords));
    }
    if (inclusion)
        *inclusion = bt;
    return sub;
}

std::pair<FDModule, ModuleHom> quotientModule(const FDModule& m, const Mat& subBasis)
{
    Mat basis = rowBasis<Scalar>(subBasis);
    imprint(m.algebra->field, basis);
    if (!isSubmodule(m, basis))
        throw NotSubmodule("quotientModule: subspace is not invariant");

    // with the sub in reduced row form, non-pivot coordinates survive as
    // coordinates on the quotient; reduce away pivots first
    auto ech = rref<Scalar>(basis);
    std::vector<Index> pivots = ech.pivots;
    std::vector<bool> isPivot(static_cast<size_t>(m.dim), false);
    for (Index p : pivots)
        isPivot[static_cast<size_t>(p)] = true;
    std::vector<Index> rest;
    for (Index c = 0; c < m.dim; ++c)
        if (!isPivot[static_cast<size_t>(c)])
            rest.push_back(c);

    const Index qdim = static_cast<Index>(rest.size());
    Mat reduce = identityOver(m.algebra->field, m.dim);
    for (Index r = 0; r < basis.rows(); ++r)
        reduce -= basis.row(r).transpose() * RowVec::Unit(m.dim, pivots[static_cast<size_t>(r)]);
    imprint(m.algebra->field, reduce);
    Mat proj(qdim, m.dim);
    for (Index k = 0; k < qdim; ++k)
        proj.row(k) = reduce.row(rest[static_cast<size_t>(k)]);
    Mat lift = Mat::Zero(m.dim, qdim);
    for (Index k = 0; k < qdim; ++k)
        lift(rest[static_cast<size_t>(k)], k) = Scalar(1);
    imprint(m.algebra->field, lift);

    FDModule q;
    q.algebra = m.algebra;
    q.dim = qdim;
    for (Index i = 0; i < m.algebra->dim; ++i)
        q.action.push_back(Mat(proj * m.action[static_cast<size_t>(i)] * lift));
    return {std::move(q), ModuleHom{std::move(proj)}};
}

namespace {

// all nonzero tuples over GF(q) of the given length, odometer-style
bool bumpDigits(std::vector<uint32_t>& digits, uint32_t q)
{
    for (auto& d : digits) {
        if (++d < q)
            return true;
        d = 0;
    }
    return false;
}

} // namespace

Simplicity isSimple(const FDModule& m)
{
    if (m.dim == 0)
        return {SimpleVerdict::NotSimple, Mat(0, 0)};
    if (m.dim == 1)
        return {SimpleVerdict::Simple, Mat()};

    const Field& f = m.algebra->field;
    if (f.isFinite()) {
        const uint32_t q = f.characteristic();
        double count = 1;
        for (Index k = 0; k < m.dim && count <= 4096; ++k)
            count *= q;
        if (count <= 4096) {
            std::vector<uint32_t> digits(static_cast<size_t>(m.dim), 0);
            while (bumpDigits(digits, q)) {
                Vec v(m.dim);
                for (Index k = 0; k < m.dim; ++k)
                    v(k) = Scalar::of(f, digits[static_cast<size_t>(k)], 1);
                Mat spun = submoduleGenerated(m, Mat(v.transpose()));
                if (spun.rows() < m.dim)
                    return {SimpleVerdict::NotSimple, spun};
            }
            return {SimpleVerdict::Simple, Mat()};
        }
    } else if (m.dim == 2) {
        auto line = commonInvariantLine2(m.action);
        if (!line)
            return {SimpleVerdict::Simple, Mat()};
        return {SimpleVerdict::NotSimple, Mat(line->transpose())};
    }

    // bounded randomized search: spun vectors and kernels of random elements
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        Vec v = rng.nonzeroVec(f, m.dim);
        Mat spun = submoduleGenerated(m, Mat(v.transpose()));
        if (spun.rows() < m.dim)
            return {SimpleVerdict::NotSimple, spun};
        Mat theta = m.actMat(rng.vec(f, m.algebra->dim));
        Mat ker = kernel<Scalar>(theta);
        for (Index r = 0; r < ker.rows(); ++r) {
            Mat spunK = submoduleGenerated(m, Mat(ker.row(r)));
            if (spunK.rows() > 0 && spunK.rows() < m.dim)
                return {SimpleVerdict::NotSimple, spunK};
        }
    }
    return {SimpleVerdict::Unknown, Mat()};
}

FreeCover coverFromGenerators(const FDModule& m, const std::vector<Vec>& gens)
{
    const Index da = m.algebra->dim;
    FreeCover cover;
    cover.rank = static_cast<Index>(gens.size());
    cover.generators = gens;
    cover.proj = Mat(m.dim, cover.rank * da);
    for (Index c = 0; c < cover.rank; ++c)
        for (Index j = 0; j < da; ++j)
            cover.proj.col(c * da + j) =
                m.action[static_cast<size_t>(j)] * gens[static_cast<size_t>(c)];
    imprint(m.algebra->field, cover.proj);
    if (rankOf<Scalar>(cover.proj) != m.dim)
        throw Error("coverFromGenerators: generators do not span the module");
    return cover;
}

FreeCover freeCover(const FDModule& m)
{
    std::vector<Vec> gens;
    Mat reached(0, m.dim);
    for (Index i = 0; i < m.dim && reached.rows() < m.dim; ++i) {
        Vec cand = unitVec(m.dim, i);
        imprint(m.algebra->field, cand);
        if (member<Scalar>(reached, cand))
            continue;
        gens.push_back(cand);
        Mat withNew = vstack<Scalar>(reached, Mat(cand.transpose()));
        reached = submoduleGenerated(m, withNew);
    }
    if (m.dim == 0) {
        FreeCover cover;
        cover.rank = 0;
        cover.proj = Mat(0, 0);
        return cover;
    }
    return coverFromGenerators(m, gens);
}

ProjectivityResult isProjective(const FDModule& m)
{
    ProjectivityResult out;
    out.cover = freeCover(m);
    if (m.dim == 0) {
        out.projective = true;
        out.splitting = Mat(0, 0);
        return out;
    }
    FDModule fm = freeModule(m.algebra, out.cover.rank);
    const Index rows = fm.dim, cols = m.dim;
    // unknown splitting s: M -> F, flattened row-major; require
    // intertwining with generators and proj * s = identity
    Mat eyeM = identityOver(m.algebra->field, cols);
    Mat eyeF = identityOver(m.algebra->field, rows);
    Mat stack(0, rows * cols);
    Vec rhs(0);
    for (Index g : m.algebra->gens) {
        Mat eq = kron<Scalar>(fm.action[static_cast<size_t>(g)], eyeM) -
                 kron<Scalar>(eyeF, Mat(m.action[static_cast<size_t>(g)].transpose()));
        stack = vstack<Scalar>(stack, eq);
        Vec zeros = Vec::Zero(eq.rows());
        Vec grown(rhs.size() + zeros.size());
        grown << rhs, zeros;
        rhs = grown;
    }
    Mat eval = kron<Scalar>(out.cover.proj, eyeM);
    stack = vstack<Scalar>(stack, eval);
    Vec idFlat = flatten(eyeM);
    Vec grown(rhs.size() + idFlat.size());
    grown << rhs, idFlat;
    rhs = grown;
    imprint(m.algebra->field, rhs);

    auto sol = solve<Scalar>(stack, rhs);
    if (!sol) {
        out.projective = false;
        return out;
    }
    out.projective = true;
    out.splitting = unflatten(*sol, rows, cols);
    return out;
}

FDModule stripFreeSummands(const FDModule& m)
{
    FDModule cur = m;
    const Index da = m.algebra->dim;
    const Field& f = m.algebra->field;
    while (cur.dim >= da) {
        // hunt for an element with zero annihilator: its orbit is free
        auto annRank = [&](const Vec& v) {
            Mat cols(cur.dim, da);
            for (Index i = 0; i < da; ++i)
                cols.col(i) = cur.action[static_cast<size_t>(i)] * v;
            return rankOf<Scalar>(cols);
        };
        std::optional<Vec> found;
        if (f.isFinite()) {
            const uint32_t q = f.characteristic();
            double count = 1;
            for (Index k = 0; k < cur.dim && count <= 4096; ++k)
                count *= q;
            if (count <= 4096) {
                std::vector<uint32_t> digits(static_cast<size_t>(cur.dim), 0);
                while (!found && bumpDigits(digits, q)) {
                    Vec v(cur.dim);
                    for (Index k = 0; k < cur.dim; ++k)
                        v(k) = Scalar::of(f, digits[static_cast<size_t>(k)], 1);
                    if (annRank(v) == da)
                        found = v;
                }
            }
        }
        if (!found) {
            Rng rng(99);
            for (Index i = 0; i < cur.dim && !found; ++i) {
                Vec v = unitVec(cur.dim, i);
                imprint(f, v);
                if (annRank(v) == da)
                    found = v;
            }
            for (int t = 0; t < 50 && !found; ++t) {
                Vec v = rng.nonzeroVec(f, cur.dim);
                if (annRank(v) == da)
                    found = v;
            }
        }
        if (!found)
            break;

        // retract onto the free copy: solve for pi with pi(v) = 1 in A
        FDModule reg = regularModule(m.algebra);
        Mat eyeC = identityOver(f, cur.dim);
        Mat eyeA = identityOver(f, da);
        Mat stack(0, da * cur.dim);
        Vec rhs(0);
        for (Index g : m.algebra->gens) {
            Mat eq = kron<Scalar>(reg.action[static_cast<size_t>(g)], eyeC) -
                     kron<Scalar>(eyeA, Mat(cur.action[static_cast<size_t>(g)].transpose()));
            stack = vstack<Scalar>(stack, eq);
            Vec zeros = Vec::Zero(eq.rows());
            Vec grown(rhs.size() + zeros.size());
            grown << rhs, zeros;
            rhs = grown;
        }
        // evaluation rows: (pi * v) = one
        Mat ones(da, da * cur.dim);
        ones.setZero();
        for (Index r = 0; r < da; ++r)
            ones.block(r, r * cur.dim, 1, cur.dim) = found->transpose();
        imprint(f, ones);
        stack = vstack<Scalar>(stack, ones);
        Vec grown(rhs.size() + da);
        grown << rhs, m.algebra->one;
        rhs = grown;
        imprint(f, rhs);
        auto sol = solve<Scalar>(stack, rhs);
        if (!sol)
            break; // no retraction: not a direct summand here
        Mat pi = unflatten(*sol, da, cur.dim);
        Mat comp = kernel<Scalar>(pi);
        if (comp.rows() != cur.dim - da)
            break;
        cur = submoduleModule(cur, comp);
    }
    return cur;
}

std::optional<Mat> findIsomorphism(const FDModule& m, const FDModule& n)
{
    requireSameAlgebra(m, n);
    if (m.dim != n.dim)
        return std::nullopt;
    if (m.dim == 0)
        return Mat(0, 0);
    Mat h = homSpace(m, n);
    const Index k = h.rows();
    if (k == 0)
        return std::nullopt;
    const Field& f = m.algebra->field;

    auto assembleInvertible = [&](const Vec& coeff) -> std::optional<Mat> {
        Mat cand = Mat::Zero(n.dim, m.dim);
        for (Index r = 0; r < k; ++r)
            if (!coeff(r).isZero())
                cand += coeff(r) * unflatten(h.row(r).transpose(), n.dim, m.dim);
        imprint(f, cand);
        if (rankOf<Scalar>(cand) == m.dim)
            return cand;
        return std::nullopt;
    };

    if (f.isFinite()) {
        const uint32_t q = f.characteristic();
        double count = 1;
        for (Index r = 0; r < k && count <= 65536; ++r)
            count *= q;
        if (count <= 65536) {
            std::vector<uint32_t> digits(static_cast<size_t>(k), 0);
            while (bumpDigits(digits, q)) {
                Vec coeff(k);
                for (Index r = 0; r < k; ++r)
                    coeff(r) = Scalar::of(f, digits[static_cast<size_t>(r)], 1);
                if (auto iso = assembleInvertible(coeff))
                    return iso;
            }
            return std::nullopt; // exhaustive: no invertible hom exists
        }
    }

    Rng rng(4242);
    for (int t = 0; t < 200; ++t)
        if (auto iso = assembleInvertible(rng.vec(f, k)))
            return iso;
    throw Inconclusive("findIsomorphism: sampling found no isomorphism but space too large "
                       "to exhaust");
}

bool stablyIsomorphic(const FDModule& m, const FDModule& n)
{
    requireSameAlgebra(m, n);
    FDModule ms = stripFreeSummands(m);
    FDModule ns = stripFreeSummands(n);
    if (ms.dim != ns.dim)
        return false;
    return findIsomorphism(ms, ns).has_value();
}

} // namespace locfrob
