#pragma once

/**
 * Exact scalar arithmetic over the rationals or a prime field GF(p).
 *
 * The field is runtime data (configs may name any prime), so a Scalar
 * carries a modulus tag: tag 0 means a rational value, tag p > 0 means a
 * residue in [0, p). Plain integer literals (as produced by Eigen's
 * internal Scalar(0) / Scalar(1)) are rationals with denominator 1 and
 * coerce into whichever prime field they first meet, which is what makes
 * Eigen expressions like A * B + C work unchanged over GF(p).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace locfrob {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

bool isPrime(std::uint32_t n);

/// Ground field descriptor: the rationals, or GF(p) for a prime p.
class Field {
  public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }

    static Field prime(std::uint32_t p)
    {
        if (!isPrime(p))
            throw Error("Field::prime: " + std::to_string(p) + " is not prime");
        Field f;
        f.p_ = p;
        return f;
    }

    /// Accepts "QQ", "Q", "rationals", "GF(p)", "Fp".
    static Field parse(const std::string& s);

    std::uint32_t characteristic() const { return p_; }
    bool isRational() const { return p_ == 0; }
    bool isFinite() const { return p_ != 0; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string name() const
    {
        return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
    }

  private:
    std::uint32_t p_;
};

/// Element of the rationals or of GF(p), tagged with its modulus.
class Scalar {
  public:
    Scalar() : r_(0), p_(0) {}

    // Integer literals are modulus-agnostic rationals; they pick up the
    // field of the first tagged operand they are combined with.
    Scalar(int v) : q_(v), r_(0), p_(0) {}
    Scalar(long v) : q_(v), r_(0), p_(0) {}
    Scalar(long long v) : q_(v), r_(0), p_(0) {}

    explicit Scalar(Rational q) : q_(std::move(q)), r_(0), p_(0) {}

    /// Canonical embedding of num/den into the given field.
    static Scalar of(const Field& f, long long num, long long den = 1);
    static Scalar of(const Field& f, const Rational& q);

    /// Parses "n" or "n/d" into the given field.
    static Scalar parse(const Field& f, const std::string& s);

    std::uint32_t modulus() const { return p_; }
    bool inField(const Field& f) const;

    bool isZero() const { return p_ ? r_ == 0 : q_.is_zero(); }
    bool isOne() const { return p_ ? r_ == 1 : q_ == 1; }

    /// Rational value; only valid when modulus() == 0.
    const Rational& rational() const
    {
        if (p_)
            throw FieldMismatch("Scalar::rational on a GF(p) value");
        return q_;
    }

    /// Residue in [0, p); only valid when modulus() > 0.
    std::int64_t residue() const
    {
        if (!p_)
            throw FieldMismatch("Scalar::residue on a rational value");
        return r_;
    }

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

  private:
    // p_ == 0: value lives in q_. p_ > 0: residue lives in r_, q_ stays 0.
    Rational q_;
    std::int64_t r_;
    std::uint32_t p_;

    // Reconciles moduli before arithmetic: integer rationals coerce into a
    // tagged operand's field, anything else mixed is a bug upstream.
    static void align(Scalar& a, const Scalar& b, Scalar& bAligned);
    void coerceInto(std::uint32_t p);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Multiplicative inverse of a mod p via extended Euclid; throws on a ≡ 0.
std::int64_t modInverse(std::int64_t a, std::int64_t p);

} // namespace locfrob

namespace Eigen {

template <typename T> struct NumTraits;

template <> struct NumTraits<locfrob::Scalar> {
    using Real = locfrob::Scalar;
    using NonInteger = locfrob::Scalar;
    using Nested = locfrob::Scalar;
    using Literal = locfrob::Scalar;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 20,
        MulCost = 40
    };

    static inline Real epsilon() { return locfrob::Scalar(0); }
    static inline Real dummy_precision() { return locfrob::Scalar(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
