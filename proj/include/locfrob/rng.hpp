#pragma once

/**
 * Seeded randomness for suites and property tests. mt19937_64 output is
 * pinned by the standard and reduction is plain modulo, so a fixed seed
 * reproduces the same stream on every platform; report determinism
 * depends on this.
 */

#include "locfrob/linalg.hpp"

#include <random>

namespace locfrob {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t k) { return k ? eng() % k : 0; }

    Scalar scalar(const Field& f)
    {
        if (f.isFinite())
            return Scalar::of(f, static_cast<long long>(below(f.characteristic())));
        long long num = static_cast<long long>(below(9)) - 4;
        long long den = 1 + static_cast<long long>(below(3));
        return Scalar::of(f, num, den);
    }

    Scalar nonzeroScalar(const Field& f)
    {
        for (;;) {
            Scalar s = scalar(f);
            if (!s.isZero())
                return s;
        }
    }

    Vec vec(const Field& f, Index n)
    {
        Vec v(n);
        for (Index i = 0; i < n; ++i)
            v(i) = scalar(f);
        return v;
    }

    Vec nonzeroVec(const Field& f, Index n)
    {
        for (;;) {
            Vec v = vec(f, n);
            if (!isZeroMat<Scalar>(v))
                return v;
        }
    }

    Mat mat(const Field& f, Index r, Index c)
    {
        Mat m(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j)
                m(i, j) = scalar(f);
        return m;
    }
};

} // namespace locfrob
