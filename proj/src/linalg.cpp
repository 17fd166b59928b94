#include "locfrob/linalg.hpp"

namespace locfrob {

namespace {

Scalar imprintOne(const Field& f, const Scalar& s)
{
    if (s.modulus() == f.characteristic())
        return s;
    if (s.modulus() != 0)
        throw FieldMismatch("imprint: entry from GF(" + std::to_string(s.modulus()) +
                            ") cannot live in " + f.name());
    return Scalar::of(f, s.rational());
}

} // namespace

void imprint(const Field& f, Mat& m)
{
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            m(i, j) = imprintOne(f, m(i, j));
}

void imprint(const Field& f, Vec& v)
{
    for (Index i = 0; i < v.size(); ++i)
        v(i) = imprintOne(f, v(i));
}

void imprint(const Field& f, RowVec& v)
{
    for (Index i = 0; i < v.size(); ++i)
        v(i) = imprintOne(f, v(i));
}

} // namespace locfrob
