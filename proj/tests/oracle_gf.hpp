#pragma once

// Self-contained mod-p integer linear algebra used as an independent
// cross-check for the library kernel. Deliberately primitive: plain
// int grids, Fermat inverses, Laplace determinants, brute-force vector
// enumeration. Keep this file free of library includes so the oracle
// cannot inherit a bug from the code under test.

#include <cstdint>
#include <vector>

namespace oracle {

using Row = std::vector<long long>;
using Grid = std::vector<Row>;

inline long long normm(long long v, long long p)
{
    v %= p;
    return v < 0 ? v + p : v;
}

inline long long powm(long long b, long long e, long long p)
{
    long long r = 1;
    b = normm(b, p);
    for (; e; e >>= 1) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
    }
    return r;
}

inline long long invm(long long a, long long p) { return powm(a, p - 2, p); }

inline Grid rref(Grid m, long long p, std::vector<int>* pivOut = nullptr)
{
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    std::vector<int> piv;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (normm(m[i][c], p) != 0) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        std::swap(m[pr], m[r]);
        long long iv = invm(normm(m[r][c], p), p);
        for (auto& x : m[r])
            x = normm(x, p) * iv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            long long f = normm(m[i][c], p);
            if (!f)
                continue;
            for (int j = 0; j < cols; ++j)
                m[i][j] = normm(m[i][j] - f * m[r][j], p);
        }
        piv.push_back(c);
        ++r;
    }
    for (auto& row : m)
        for (auto& x : row)
            x = normm(x, p);
    if (pivOut)
        *pivOut = piv;
    return m;
}

inline int rank(const Grid& m, long long p)
{
    std::vector<int> piv;
    rref(m, p, &piv);
    return static_cast<int>(piv.size());
}

inline bool inRowSpace(const Grid& basis, const Row& v, long long p)
{
    Grid ext = basis;
    ext.push_back(v);
    return rank(basis, p) == rank(ext, p);
}

inline bool sameRowSpace(const Grid& a, const Grid& b, long long p)
{
    for (const auto& r : a)
        if (!inRowSpace(b, r, p))
            return false;
    for (const auto& r : b)
        if (!inRowSpace(a, r, p))
            return false;
    return true;
}

inline long long det(const Grid& m, long long p)
{
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return 1;
    if (n == 1)
        return normm(m[0][0], p);
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
        if (normm(m[i][0], p) == 0)
            continue;
        Grid minor;
        for (int r = 0; r < n; ++r) {
            if (r == i)
                continue;
            Row row(m[r].begin() + 1, m[r].end());
            minor.push_back(row);
        }
        long long term = normm(m[i][0], p) * det(minor, p) % p;
        acc = normm(acc + (i % 2 ? -term : term), p);
    }
    return acc;
}

// All vectors of GF(p)^n, for exhaustive membership arguments (keep p^n small).
inline std::vector<Row> allVectors(int n, long long p)
{
    std::vector<Row> out;
    Row v(n, 0);
    for (;;) {
        out.push_back(v);
        int i = 0;
        while (i < n && ++v[i] == p) {
            v[i] = 0;
            ++i;
        }
        if (i == n)
            break;
    }
    return out;
}

} // namespace oracle
