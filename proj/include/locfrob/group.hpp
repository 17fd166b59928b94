#pragma once

/**
 * Finite groups as explicit multiplication tables, plus the subgroup
 * machinery the suites lean on (enumeration, conjugacy classes of
 * subgroups, normality, quotients). Everything is index based; names are
 * carried along for labeling algebra bases.
 */

#include <string>
#include <vector>

namespace locfrob {

struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> mul; // mul[a][b] = index of a*b
    std::vector<int> inv;
    int id = 0;
    std::vector<std::string> names;
    std::vector<int> gens;

    int order() const { return n; }
    int op(int a, int b) const { return mul[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

    /// Throws unless the table is a genuine group (closure bounds,
    /// associativity, two-sided identity, two-sided inverses).
    void validate() const;

    int elementOrder(int a) const;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);   // order n!
    static FiniteGroup dihedral(int n);    // order 2n, n >= 2
    static FiniteGroup quaternion();       // order 8
    static FiniteGroup directProduct(const FiniteGroup& a, const FiniteGroup& b);
};

/// Smallest subgroup containing the given elements, as a sorted index list.
std::vector<int> subgroupClosure(const FiniteGroup& g, std::vector<int> elems);

/// Every subgroup, each a sorted index list, ordered by (size, lexicographic).
std::vector<std::vector<int>> allSubgroups(const FiniteGroup& g);

std::vector<int> conjugateSubgroup(const FiniteGroup& g, const std::vector<int>& h, int by);

bool isNormalSubgroup(const FiniteGroup& g, const std::vector<int>& h);

/// Subgroups grouped into conjugacy classes; class representative first.
std::vector<std::vector<std::vector<int>>> subgroupConjugacyClasses(const FiniteGroup& g);

/// A small generating set found greedily (singletons, then pairs, then triples).
std::vector<int> findGenerators(const FiniteGroup& g);

/// The subgroup on the given elements as a group of its own;
/// embed[i] = index in the parent of the i-th subgroup element.
FiniteGroup subgroupAsGroup(const FiniteGroup& g, const std::vector<int>& elems,
                            std::vector<int>* embed = nullptr);

/// Quotient by a normal subgroup; proj[i] = coset index of parent element i.
FiniteGroup quotientGroup(const FiniteGroup& g, const std::vector<int>& normal,
                          std::vector<int>* proj = nullptr);

} // namespace locfrob
