#include "locfrob/group.hpp"

#include "locfrob/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace locfrob {

void FiniteGroup::validate() const
{
    if (n <= 0 || static_cast<int>(mul.size()) != n || static_cast<int>(inv.size()) != n ||
        static_cast<int>(names.size()) != n)
        throw Error("FiniteGroup: inconsistent table sizes");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n)
            throw Error("FiniteGroup: ragged multiplication table");
        for (int v : row)
            if (v < 0 || v >= n)
                throw Error("FiniteGroup: table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (op(id, a) != a || op(a, id) != a)
            throw Error("FiniteGroup: identity fails");
    for (int a = 0; a < n; ++a)
        if (op(a, inv[static_cast<size_t>(a)]) != id || op(inv[static_cast<size_t>(a)], a) != id)
            throw Error("FiniteGroup: inverses fail");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw Error("FiniteGroup: associativity fails");
}

int FiniteGroup::elementOrder(int a) const
{
    int x = a, k = 1;
    while (x != id) {
        x = op(x, a);
        ++k;
    }
    return k;
}

namespace {

void fillInverses(FiniteGroup& g)
{
    g.inv.assign(static_cast<size_t>(g.n), -1);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (g.op(a, b) == g.id)
                g.inv[static_cast<size_t>(a)] = b;
}

std::vector<std::vector<int>> allPermutations(int n)
{
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return perms;
}

std::string cycleName(const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size());
    std::string out;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)] || perm[static_cast<size_t>(s)] == s)
            continue;
        out += '(';
        int x = s;
        while (!seen[static_cast<size_t>(x)]) {
            seen[static_cast<size_t>(x)] = true;
            out += std::to_string(x + 1);
            x = perm[static_cast<size_t>(x)];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

} // namespace

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1)
        throw Error("cyclic: order must be positive");
    FiniteGroup g;
    g.n = n;
    g.id = 0;
    g.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    for (int a = 0; a < n; ++a)
        g.names.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g" + std::to_string(a)));
    fillInverses(g);
    if (n > 1)
        g.gens = {1};
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n)
{
    if (n < 1)
        throw Error("symmetric: need at least one point");
    auto perms = allPermutations(n);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i)
        index[perms[i]] = static_cast<int>(i);

    FiniteGroup g;
    g.n = static_cast<int>(perms.size());
    g.mul.assign(static_cast<size_t>(g.n), std::vector<int>(static_cast<size_t>(g.n)));
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b) {
            // composition acts on the left: (s*t)(x) = s(t(x))
            std::vector<int> st(static_cast<size_t>(n));
            for (int x = 0; x < n; ++x)
                st[static_cast<size_t>(x)] =
                    perms[static_cast<size_t>(a)]
                         [static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(x)])];
            g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = index[st];
        }
    }
    std::vector<int> identity(static_cast<size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    g.id = index[identity];
    for (const auto& p : perms)
        g.names.push_back(cycleName(p));
    fillInverses(g);
    if (n >= 2) {
        std::vector<int> swap01 = identity;
        std::swap(swap01[0], swap01[1]);
        std::vector<int> shift(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x)
            shift[static_cast<size_t>(x)] = (x + 1) % n;
        g.gens = {index[swap01]};
        if (n >= 3)
            g.gens.push_back(index[shift]);
    }
    return g;
}

FiniteGroup FiniteGroup::dihedral(int n)
{
    if (n < 2)
        throw Error("dihedral: need n >= 2");
    FiniteGroup g;
    g.n = 2 * n;
    g.id = 0;
    auto idx = [n](bool flip, int rot) { return (flip ? n : 0) + ((rot % n) + n) % n; };
    g.mul.assign(static_cast<size_t>(g.n), std::vector<int>(static_cast<size_t>(g.n)));
    for (int a = 0; a < g.n; ++a) {
        bool fa = a >= n;
        int ra = a % n;
        for (int b = 0; b < g.n; ++b) {
            bool fb = b >= n;
            int rb = b % n;
            // s r^a * s r^b = r^(b-a), r^a * s r^b = s r^(b-a), s r^a * r^b = s r^(a+b)
            int out = fa ? (fb ? idx(false, rb - ra) : idx(true, ra + rb))
                         : (fb ? idx(true, rb - ra) : idx(false, ra + rb));
            g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = out;
        }
    }
    for (int a = 0; a < g.n; ++a) {
        std::string nm = a < n ? (a == 0 ? "e" : "r" + std::to_string(a))
                               : (a == n ? "s" : "sr" + std::to_string(a - n));
        if (a == 1)
            nm = "r";
        g.names.push_back(nm);
    }
    fillInverses(g);
    g.gens = {1, n};
    return g;
}

FiniteGroup FiniteGroup::quaternion()
{
    // elements (axis, sign) with axes 1,i,j,k; index = 2*axis + (sign < 0)
    FiniteGroup g;
    g.n = 8;
    g.id = 0;
    g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto pack = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
    g.mul.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a) {
        int axA = a / 2, sgA = a % 2 ? -1 : 1;
        for (int b = 0; b < 8; ++b) {
            int axB = b / 2, sgB = b % 2 ? -1 : 1;
            int axis, sign;
            if (axA == 0) {
                axis = axB;
                sign = sgA * sgB;
            } else if (axB == 0) {
                axis = axA;
                sign = sgA * sgB;
            } else if (axA == axB) {
                axis = 0;
                sign = -sgA * sgB;
            } else {
                axis = 6 - axA - axB; // the remaining axis among {1,2,3}
                bool cyclic = (axB - axA + 3) % 3 == 1; // ij=k, jk=i, ki=j
                sign = (cyclic ? 1 : -1) * sgA * sgB;
            }
            g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = pack(axis, sign);
        }
    }
    fillInverses(g);
    g.gens = {2, 4}; // i and j
    return g;
}

FiniteGroup FiniteGroup::directProduct(const FiniteGroup& a, const FiniteGroup& b)
{
    FiniteGroup g;
    g.n = a.n * b.n;
    auto pack = [&](int x, int y) { return x * b.n + y; };
    g.id = pack(a.id, b.id);
    g.mul.assign(static_cast<size_t>(g.n), std::vector<int>(static_cast<size_t>(g.n)));
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1)
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    g.mul[static_cast<size_t>(pack(x1, y1))][static_cast<size_t>(pack(x2, y2))] =
                        pack(a.op(x1, x2), b.op(y1, y2));
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < b.n; ++y)
            g.names.push_back("(" + a.names[static_cast<size_t>(x)] + "," +
                              b.names[static_cast<size_t>(y)] + ")");
    fillInverses(g);
    for (int x : a.gens)
        g.gens.push_back(pack(x, b.id));
    for (int y : b.gens)
        g.gens.push_back(pack(a.id, y));
    return g;
}

std::vector<int> subgroupClosure(const FiniteGroup& g, std::vector<int> elems)
{
    std::set<int> have(elems.begin(), elems.end());
    have.insert(g.id);
    for (;;) {
        std::set<int> next = have;
        for (int a : have)
            for (int b : have)
                next.insert(g.op(a, b));
        for (int a : have)
            next.insert(g.inv[static_cast<size_t>(a)]);
        if (next.size() == have.size())
            break;
        have.swap(next);
    }
    return {have.begin(), have.end()};
}

std::vector<std::vector<int>> allSubgroups(const FiniteGroup& g)
{
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier{subgroupClosure(g, {})};
    found.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& h : frontier) {
            std::set<int> in(h.begin(), h.end());
            for (int x = 0; x < g.n; ++x) {
                if (in.count(x))
                    continue;
                auto ext = h;
                ext.push_back(x);
                auto k = subgroupClosure(g, ext);
                if (found.insert(k).second)
                    next.push_back(k);
            }
        }
        frontier.swap(next);
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<int> conjugateSubgroup(const FiniteGroup& g, const std::vector<int>& h, int by)
{
    std::vector<int> out;
    for (int x : h)
        out.push_back(g.op(g.op(by, x), g.inv[static_cast<size_t>(by)]));
    std::sort(out.begin(), out.end());
    return out;
}

bool isNormalSubgroup(const FiniteGroup& g, const std::vector<int>& h)
{
    for (int by = 0; by < g.n; ++by)
        if (conjugateSubgroup(g, h, by) != h)
            return false;
    return true;
}

std::vector<std::vector<std::vector<int>>> subgroupConjugacyClasses(const FiniteGroup& g)
{
    auto subs = allSubgroups(g);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<std::vector<int>>> classes;
    for (const auto& h : subs) {
        if (seen.count(h))
            continue;
        std::vector<std::vector<int>> cls;
        std::set<std::vector<int>> orbit;
        for (int by = 0; by < g.n; ++by)
            orbit.insert(conjugateSubgroup(g, h, by));
        cls.push_back(h);
        for (const auto& k : orbit)
            if (k != h)
                cls.push_back(k);
        for (const auto& k : orbit)
            seen.insert(k);
        classes.push_back(cls);
    }
    return classes;
}

std::vector<int> findGenerators(const FiniteGroup& g)
{
    if (g.n == 1)
        return {};
    const int full = g.n;
    for (int a = 0; a < g.n; ++a)
        if (static_cast<int>(subgroupClosure(g, {a}).size()) == full)
            return {a};
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (static_cast<int>(subgroupClosure(g, {a, b}).size()) == full)
                return {a, b};
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                if (static_cast<int>(subgroupClosure(g, {a, b, c}).size()) == full)
                    return {a, b, c};
    std::vector<int> all(static_cast<size_t>(g.n));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

FiniteGroup subgroupAsGroup(const FiniteGroup& g, const std::vector<int>& elems,
                            std::vector<int>* embed)
{
    std::map<int, int> pos;
    for (size_t i = 0; i < elems.size(); ++i)
        pos[elems[i]] = static_cast<int>(i);
    FiniteGroup h;
    h.n = static_cast<int>(elems.size());
    h.mul.assign(static_cast<size_t>(h.n), std::vector<int>(static_cast<size_t>(h.n)));
    for (int a = 0; a < h.n; ++a)
        for (int b = 0; b < h.n; ++b) {
            int prod = g.op(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]);
            auto it = pos.find(prod);
            if (it == pos.end())
                throw Error("subgroupAsGroup: set is not closed under products");
            h.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = it->second;
        }
    h.id = pos.at(g.id);
    for (int x : elems)
        h.names.push_back(g.names[static_cast<size_t>(x)]);
    fillInverses(h);
    h.gens = findGenerators(h);
    if (embed)
        *embed = elems;
    return h;
}

FiniteGroup quotientGroup(const FiniteGroup& g, const std::vector<int>& normal,
                          std::vector<int>* proj)
{
    if (!isNormalSubgroup(g, normal))
        throw Error("quotientGroup: subgroup is not normal");
    std::vector<int> cosetOf(static_cast<size_t>(g.n), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.n; ++x) {
        if (cosetOf[static_cast<size_t>(x)] >= 0)
            continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int nrm : normal)
            cosetOf[static_cast<size_t>(g.op(x, nrm))] = c;
    }
    FiniteGroup q;
    q.n = static_cast<int>(reps.size());
    q.mul.assign(static_cast<size_t>(q.n), std::vector<int>(static_cast<size_t>(q.n)));
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b)
            q.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                cosetOf[static_cast<size_t>(g.op(reps[static_cast<size_t>(a)],
                                                 reps[static_cast<size_t>(b)]))];
    q.id = cosetOf[static_cast<size_t>(g.id)];
    for (int r : reps)
        q.names.push_back("[" + g.names[static_cast<size_t>(r)] + "]");
    fillInverses(q);
    q.gens = findGenerators(q);
    if (proj)
        *proj = cosetOf;
    return q;
}

} // namespace locfrob
