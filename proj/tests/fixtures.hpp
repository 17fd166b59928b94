#pragma once

// Small helpers shared by the test binaries: building vectors over a chosen
// algebra from integer literals and addressing basis elements by label.

#include "locfrob/algebra.hpp"

#include <initializer_list>
#include <string>

namespace fixtures {

using namespace locfrob;

inline Index labelIndex(const Algebra& a, const std::string& name)
{
    for (Index i = 0; i < a.dim; ++i)
        if (a.labels[static_cast<size_t>(i)] == name)
            return i;
    throw Error("fixture: no basis element labelled " + name);
}

inline Vec elem(const Algebra& a, const std::string& label)
{
    return a.basisVec(labelIndex(a, label));
}

inline Vec vec(const Algebra& a, std::initializer_list<long long> entries)
{
    if (static_cast<Index>(entries.size()) != a.dim)
        throw Error("fixture: wrong entry count");
    Vec v(a.dim);
    Index i = 0;
    for (long long e : entries)
        v(i++) = Scalar::of(a.field, e, 1);
    return v;
}

inline RowVec rowOf(const Algebra& a, std::initializer_list<long long> entries)
{
    return vec(a, entries).transpose();
}

inline Mat rows(const Algebra& a, std::initializer_list<std::initializer_list<long long>> rr)
{
    Mat m(static_cast<Index>(rr.size()), a.dim);
    Index r = 0;
    for (const auto& row : rr)
        m.row(r++) = vec(a, row).transpose();
    return m;
}

inline Vec vecOver(const Field& f, std::initializer_list<long long> entries)
{
    Vec v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (long long e : entries)
        v(i++) = Scalar::of(f, e, 1);
    return v;
}

inline Mat matOver(const Field& f, std::initializer_list<std::initializer_list<long long>> rr)
{
    const Index nr = static_cast<Index>(rr.size());
    const Index nc = nr ? static_cast<Index>(rr.begin()->size()) : 0;
    Mat m(nr, nc);
    Index r = 0;
    for (const auto& row : rr) {
        if (static_cast<Index>(row.size()) != nc)
            throw Error("fixture: ragged matrix literal");
        m.row(r++) = vecOver(f, row).transpose();
    }
    return m;
}

// The classical group-algebra Frobenius form: coefficient of the identity.
inline RowVec groupForm(const Algebra& a, const FiniteGroup& g)
{
    RowVec f = RowVec::Zero(a.dim);
    f(g.id) = Scalar(1);
    imprint(a.field, f);
    return f;
}

} // namespace fixtures
