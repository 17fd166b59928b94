#include "locfrob/field.hpp"

#include <ostream>

namespace locfrob {

bool isPrime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::parse(const std::string& s)
{
    if (s == "QQ" || s == "Q" || s == "rationals")
        return rationals();
    auto scan = [&](const std::string& head, const std::string& tail) -> long {
        if (s.size() <= head.size() + tail.size())
            return -1;
        if (s.compare(0, head.size(), head) != 0)
            return -1;
        if (s.compare(s.size() - tail.size(), tail.size(), tail) != 0)
            return -1;
        std::string mid = s.substr(head.size(), s.size() - head.size() - tail.size());
        if (mid.empty() || mid.find_first_not_of("0123456789") != std::string::npos)
            return -1;
        return std::stol(mid);
    };
    long p = scan("GF(", ")");
    if (p < 0)
        p = scan("F", "");
    if (p < 0)
        throw Error("Field::parse: cannot read field from \"" + s + "\"");
    return prime(static_cast<std::uint32_t>(p));
}

std::int64_t modInverse(std::int64_t a, std::int64_t p)
{
    std::int64_t r0 = p, r1 = ((a % p) + p) % p;
    if (r1 == 0)
        throw Error("modInverse: division by zero in GF(" + std::to_string(p) + ")");
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    return ((t0 % p) + p) % p;
}

Scalar Scalar::of(const Field& f, long long num, long long den)
{
    return of(f, Rational(num, den));
}

Scalar Scalar::of(const Field& f, const Rational& q)
{
    Scalar s;
    if (f.isRational()) {
        s.q_ = q;
        return s;
    }
    const std::int64_t p = f.characteristic();
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    std::int64_t n = static_cast<std::int64_t>(num % p);
    std::int64_t d = static_cast<std::int64_t>(den % p);
    if (d == 0)
        throw FieldMismatch("Scalar::of: denominator vanishes in " + f.name());
    s.p_ = f.characteristic();
    s.r_ = ((n % p) + p) % p;
    if (s.r_ != 0 && d != 1)
        s.r_ = (s.r_ * modInverse(d, p)) % p;
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return of(f, Rational(BigInt(s)));
        return of(f, Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1))));
    } catch (const std::exception&) {
        throw Error("Scalar::parse: cannot read \"" + s + "\"");
    }
}

bool Scalar::inField(const Field& f) const
{
    if (p_ == f.characteristic())
        return true;
    // Integer literals belong to every field.
    return p_ == 0 && boost::multiprecision::denominator(q_) == 1;
}

void Scalar::coerceInto(std::uint32_t p)
{
    if (p_ == p)
        return;
    if (p_ != 0 || p == 0)
        throw FieldMismatch("Scalar: mixed GF(" + std::to_string(p_) + ") and GF(" +
                            std::to_string(p) + ") operands");
    if (boost::multiprecision::denominator(q_) != 1)
        throw FieldMismatch("Scalar: non-integer rational used in GF(" + std::to_string(p) + ")");
    std::int64_t n = static_cast<std::int64_t>(boost::multiprecision::numerator(q_) %
                                               static_cast<std::int64_t>(p));
    p_ = p;
    r_ = ((n % p) + p) % p;
    q_ = 0;
}

void Scalar::align(Scalar& a, const Scalar& b, Scalar& bAligned)
{
    bAligned = b;
    if (a.p_ == b.p_)
        return;
    if (a.p_ == 0)
        a.coerceInto(b.p_);
    else
        bAligned.coerceInto(a.p_);
}

Scalar Scalar::operator-() const
{
    Scalar s(*this);
    if (s.p_)
        s.r_ = s.r_ == 0 ? 0 : s.p_ - s.r_;
    else
        s.q_ = -s.q_;
    return s;
}

Scalar Scalar::inverse() const
{
    Scalar s(*this);
    if (s.p_) {
        s.r_ = modInverse(s.r_, s.p_);
    } else {
        if (s.q_.is_zero())
            throw Error("Scalar::inverse: division by zero");
        s.q_ = 1 / s.q_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    Scalar rhs;
    align(*this, o, rhs);
    if (p_)
        r_ = (r_ + rhs.r_) % p_;
    else
        q_ += rhs.q_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    Scalar rhs;
    align(*this, o, rhs);
    if (p_)
        r_ = ((r_ - rhs.r_) % p_ + p_) % p_;
    else
        q_ -= rhs.q_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    Scalar rhs;
    align(*this, o, rhs);
    if (p_)
        r_ = (r_ * rhs.r_) % p_; // residues < 2^31, product fits in int64
    else
        q_ *= rhs.q_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    Scalar rhs;
    align(*this, o, rhs);
    if (p_) {
        r_ = (r_ * modInverse(rhs.r_, p_)) % p_;
    } else {
        if (rhs.q_.is_zero())
            throw Error("Scalar: division by zero");
        q_ /= rhs.q_;
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    Scalar x(a), y;
    Scalar::align(x, b, y);
    return x.p_ ? x.r_ == y.r_ : x.q_ == y.q_;
}

std::string Scalar::str() const
{
    if (p_)
        return std::to_string(r_);
    if (boost::multiprecision::denominator(q_) == 1)
        return boost::multiprecision::numerator(q_).str();
    return q_.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace locfrob
