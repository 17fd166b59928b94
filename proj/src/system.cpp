#include "locfrob/system.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

namespace locfrob {

struct SystemCache {
    std::mutex lock;
    std::map<std::pair<int, int>, AlgebraMorphism> composed;
    std::map<std::pair<int, int>, FreeBasis> bases;
};

const Stage& DirectedSystem::at(int id) const {
    for (const auto& s : stages)
        if (s.id == id) return s;
    throw Error("DirectedSystem: no stage with id " + std::to_string(id));
}

std::vector<int> DirectedSystem::stageIds() const {
    std::vector<int> ids;
    ids.reserve(stages.size());
    for (const auto& s : stages) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool DirectedSystem::leq(int a, int b) const {
    if (a == b) return true;
    std::set<int> seen{a};
    std::deque<int> queue{a};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const auto& [from, to] : covers) {
            if (from != cur || seen.count(to)) continue;
            if (to == b) return true;
            seen.insert(to);
            queue.push_back(to);
        }
    }
    return false;
}

int DirectedSystem::upperBound(int a, int b) const {
    for (int id : stageIds())
        if (leq(a, id) && leq(b, id)) return id;
    throw NotComparable("upperBound: stages " + std::to_string(a) + " and " +
                        std::to_string(b) + " have no common upper stage");
}

namespace {

// shortest cover path a -> b, as the visited stage ids in order
std::vector<int> coverPath(const DirectedSystem& sys, int a, int b) {
    std::map<int, int> parent;
    std::deque<int> queue{a};
    parent[a] = a;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == b) break;
        for (const auto& [from, to] : sys.covers) {
            if (from != cur || parent.count(to)) continue;
            parent[to] = cur;
            queue.push_back(to);
        }
    }
    if (!parent.count(b))
        throw NotComparable("inclusion: stage " + std::to_string(a) +
                            " is not below stage " + std::to_string(b));
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

const AlgebraMorphism& DirectedSystem::inclusion(int a, int b) const {
    std::lock_guard<std::mutex> guard(cache->lock);
    auto key = std::make_pair(a, b);
    auto hit = cache->composed.find(key);
    if (hit != cache->composed.end()) return hit->second;

    AlgebraMorphism m;
    if (a == b) {
        m = identityMorphism(at(a).algebra);
    } else {
        auto path = coverPath(*this, a, b);
        m = arrows.at({path[0], path[1]});
        for (size_t i = 2; i < path.size(); ++i) {
            const auto& step = arrows.at({path[i - 1], path[i]});
            m = AlgebraMorphism{m.source, step.target, step.matrix * m.matrix};
        }
    }
    return cache->composed.emplace(key, std::move(m)).first->second;
}

const FreeBasis& DirectedSystem::basis(int a, int b) const {
    const AlgebraMorphism& inc = inclusion(a, b);
    std::lock_guard<std::mutex> guard(cache->lock);
    auto key = std::make_pair(a, b);
    auto hit = cache->bases.find(key);
    if (hit != cache->bases.end()) return hit->second;
    return cache->bases.emplace(key, freeBasis(inc)).first->second;
}

DirectedSystem makeSystem(std::string family, const Field& f,
                          std::vector<Stage> stages,
                          std::vector<std::pair<int, int>> covers,
                          std::map<std::pair<int, int>, AlgebraMorphism> arrows) {
    DirectedSystem sys;
    sys.family = std::move(family);
    sys.field = f;
    sys.stages = std::move(stages);
    sys.covers = std::move(covers);
    sys.arrows = std::move(arrows);
    sys.cache = std::make_shared<SystemCache>();
    for (const auto& cover : sys.covers)
        if (!sys.arrows.count(cover))
            throw Error("makeSystem: cover " + std::to_string(cover.first) + " -> " +
                        std::to_string(cover.second) + " has no inclusion");
    return sys;
}

namespace {

long long stagePower(int p, int i, const char* who) {
    long long n = 1;
    for (int k = 0; k < i; ++k) {
        n *= p;
        if (n > 4096) throw Error(std::string(who) + ": stage dimension too large");
    }
    return n;
}

Stage hopfStage(int id, HopfTriple t) {
    return Stage{id, t.algebra, std::move(t.frob), std::move(t.hopf)};
}

} // namespace

DirectedSystem pruferSystem(const Field& f, int p, int depth) {
    if (p < 2) throw Error("pruferSystem: p must be at least 2");
    if (depth < 0) throw Error("pruferSystem: depth must be nonnegative");
    std::vector<Stage> stages;
    std::vector<std::pair<int, int>> covers;
    std::map<std::pair<int, int>, AlgebraMorphism> arrows;
    for (int i = 0; i <= depth; ++i) {
        long long n = stagePower(p, i, "pruferSystem");
        stages.push_back(hopfStage(i, groupHopf(f, FiniteGroup::cyclic(static_cast<int>(n)))));
        if (i == 0) continue;
        const auto& small = stages[i - 1].algebra;
        const auto& big = stages[i].algebra;
        Mat inc = Mat::Zero(big->dim, small->dim);
        imprint(f, inc);
        for (Index j = 0; j < small->dim; ++j)
            inc(j * p, j) = Scalar::of(f, 1); // generator -> generator^p
        covers.emplace_back(i - 1, i);
        arrows.emplace(std::make_pair(i - 1, i), makeMorphism(small, big, inc));
    }
    return makeSystem("prufer", f, std::move(stages), std::move(covers), std::move(arrows));
}

DirectedSystem symmetricChainSystem(const Field& f, int nMax, int depth) {
    if (nMax < 1) throw Error("symmetricChainSystem: nMax must be at least 1");
    if (depth < 0) throw Error("symmetricChainSystem: depth must be nonnegative");
    int top = std::min(nMax, depth + 1);
    std::vector<Stage> stages;
    std::vector<FiniteGroup> groups;
    std::vector<std::pair<int, int>> covers;
    std::map<std::pair<int, int>, AlgebraMorphism> arrows;
    for (int i = 0; i < top; ++i) {
        groups.push_back(FiniteGroup::symmetric(i + 1));
        stages.push_back(hopfStage(i, groupHopf(f, groups[i])));
        if (i == 0) continue;
        // a permutation keeps its cycle name when the new letter is fixed
        std::map<std::string, int> where;
        for (int x = 0; x < groups[i].n; ++x) where[groups[i].names[x]] = x;
        const auto& small = stages[i - 1].algebra;
        const auto& big = stages[i].algebra;
        Mat inc = Mat::Zero(big->dim, small->dim);
        imprint(f, inc);
        for (Index j = 0; j < small->dim; ++j)
            inc(where.at(groups[i - 1].names[j]), j) = Scalar::of(f, 1);
        covers.emplace_back(i - 1, i);
        arrows.emplace(std::make_pair(i - 1, i), makeMorphism(small, big, inc));
    }
    return makeSystem("symmetric_chain", f, std::move(stages), std::move(covers),
                      std::move(arrows));
}

DirectedSystem dualProfiniteSystem(const Field& f, int p, int depth) {
    if (p < 2) throw Error("dualProfiniteSystem: p must be at least 2");
    if (depth < 0) throw Error("dualProfiniteSystem: depth must be nonnegative");
    std::vector<Stage> stages;
    std::vector<std::pair<int, int>> covers;
    std::map<std::pair<int, int>, AlgebraMorphism> arrows;
    for (int i = 0; i <= depth; ++i) {
        long long n = stagePower(p, i, "dualProfiniteSystem");
        stages.push_back(
            hopfStage(i, dualFunctionAlgebra(f, FiniteGroup::cyclic(static_cast<int>(n)))));
        if (i == 0) continue;
        const auto& small = stages[i - 1].algebra;
        const auto& big = stages[i].algebra;
        // pull back along reduction mod p^(i-1): indicators of fibres
        Mat inc = Mat::Zero(big->dim, small->dim);
        imprint(f, inc);
        for (Index x = 0; x < big->dim; ++x)
            inc(x, x % small->dim) = Scalar::of(f, 1);
        covers.emplace_back(i - 1, i);
        arrows.emplace(std::make_pair(i - 1, i), makeMorphism(small, big, inc));
    }
    return makeSystem("dual_profinite", f, std::move(stages), std::move(covers),
                      std::move(arrows));
}

DirectedSystem mergeDemoSystem(const Field& f) {
    std::vector<Stage> stages;
    stages.push_back(hopfStage(0, groupHopf(f, FiniteGroup::trivial())));
    stages.push_back(hopfStage(1, groupHopf(f, FiniteGroup::cyclic(2))));
    stages.push_back(hopfStage(2, groupHopf(f, FiniteGroup::cyclic(2))));
    auto s3 = FiniteGroup::symmetric(3);
    stages.push_back(hopfStage(3, groupHopf(f, s3)));

    std::map<std::string, int> where;
    for (int x = 0; x < s3.n; ++x) where[s3.names[x]] = x;

    auto unitInto = [&](const AlgebraPtr& small, const AlgebraPtr& big,
                        std::vector<int> targets) {
        Mat inc = Mat::Zero(big->dim, small->dim);
        imprint(f, inc);
        for (Index j = 0; j < small->dim; ++j)
            inc(targets[j], j) = Scalar::of(f, 1);
        return makeMorphism(small, big, inc);
    };

    std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    std::map<std::pair<int, int>, AlgebraMorphism> arrows;
    arrows.emplace(std::make_pair(0, 1), unitInto(stages[0].algebra, stages[1].algebra, {0}));
    arrows.emplace(std::make_pair(0, 2), unitInto(stages[0].algebra, stages[2].algebra, {0}));
    arrows.emplace(std::make_pair(1, 3), unitInto(stages[1].algebra, stages[3].algebra,
                                                  {0, where.at("(12)")}));
    arrows.emplace(std::make_pair(2, 3), unitInto(stages[2].algebra, stages[3].algebra,
                                                  {0, where.at("(23)")}));
    return makeSystem("merge_demo", f, std::move(stages), std::move(covers),
                      std::move(arrows));
}

DirectedSystem builtinSystem(const std::string& family, int param, const Field& f,
                             int depth) {
    if (family == "prufer") return pruferSystem(f, param, depth);
    if (family == "symmetric_chain") return symmetricChainSystem(f, param, depth);
    if (family == "dual_profinite") return dualProfiniteSystem(f, param, depth);
    if (family == "merge_demo") return mergeDemoSystem(f);
    throw Error("builtinSystem: unknown family '" + family + "'");
}

SystemReport validateSystem(const DirectedSystem& sys) {
    SystemReport report;
    auto flag = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    if (sys.stages.empty()) {
        flag("system has no stages");
        return report;
    }
    if (sys.at(sys.base).algebra->dim != 1)
        flag("bottom stage is not one-dimensional");

    for (const auto& s : sys.stages) {
        std::string tag = "stage " + std::to_string(s.id) + ": ";
        try {
            s.algebra->validate();
        } catch (const Error& e) {
            flag(tag + e.what());
        }
        if (!s.frob.symmetric) flag(tag + "Frobenius form is not symmetric");
        if (!invert<Scalar>(s.frob.gram)) flag(tag + "Frobenius form is degenerate");
        if (s.hopf) {
            auto hr = verifyHopf(*s.hopf);
            for (const auto& v : hr.violations) flag(tag + v);
        }
    }

    for (const auto& [a, b] : sys.covers) {
        std::string tag = "inclusion " + std::to_string(a) + " -> " + std::to_string(b) + ": ";
        auto it = sys.arrows.find({a, b});
        if (it == sys.arrows.end()) {
            flag(tag + "missing");
            continue;
        }
        const auto& inc = it->second;
        if (inc.source->dim != sys.at(a).algebra->dim ||
            inc.target->dim != sys.at(b).algebra->dim) {
            flag(tag + "endpoints do not match the stages");
            continue;
        }
        try {
            makeMorphism(inc.source, inc.target, inc.matrix);
        } catch (const Error& e) {
            flag(tag + e.what());
            continue;
        }
        try {
            const auto& fb = sys.basis(a, b);
            if (fb.rank() * sys.at(a).algebra->dim != sys.at(b).algebra->dim)
                flag(tag + "free basis rank does not match the index");
        } catch (const Error& e) {
            flag(tag + e.what());
        }
    }
    if (!report.ok) return report; // composites need sound covers

    auto ids = sys.stageIds();
    for (int x : ids)
        for (int y : ids) {
            if (x == y) continue;
            if (sys.leq(x, y) && sys.leq(y, x))
                flag("stages " + std::to_string(x) + " and " + std::to_string(y) +
                     " are below each other");
        }
    for (int x : ids)
        for (int z : ids) {
            if (x >= z || !sys.leq(x, z)) continue;
            for (int y : ids) {
                if (y == x || y == z || !sys.leq(x, y) || !sys.leq(y, z)) continue;
                Mat composite = sys.inclusion(y, z).matrix * sys.inclusion(x, y).matrix;
                if (!matEq<Scalar>(composite, sys.inclusion(x, z).matrix))
                    flag("inclusions along " + std::to_string(x) + " -> " +
                         std::to_string(y) + " -> " + std::to_string(z) +
                         " disagree with the direct composite");
            }
        }
    for (int x : ids)
        for (int y : ids) {
            if (x >= y) continue;
            try {
                sys.upperBound(x, y);
            } catch (const NotComparable&) {
                flag("stages " + std::to_string(x) + " and " + std::to_string(y) +
                     " have no upper bound");
            }
        }
    return report;
}

ColimElement colimElement(const DirectedSystem& sys, int stage, Vec coords) {
    const auto& s = sys.at(stage);
    if (coords.size() != s.algebra->dim)
        throw Error("colimElement: coordinate length does not match stage " +
                    std::to_string(stage));
    imprint(sys.field, coords);
    return ColimElement{stage, std::move(coords)};
}

ColimElement push(const DirectedSystem& sys, const ColimElement& e, int toStage) {
    if (e.stage == toStage) return e;
    if (!sys.leq(e.stage, toStage))
        throw NotComparable("push: stage " + std::to_string(e.stage) +
                            " is not below stage " + std::to_string(toStage));
    return ColimElement{toStage, sys.inclusion(e.stage, toStage).matrix * e.coords};
}

ColimElement colimMul(const DirectedSystem& sys, const ColimElement& a,
                      const ColimElement& b) {
    int u = sys.upperBound(a.stage, b.stage);
    ColimElement pa = push(sys, a, u);
    ColimElement pb = push(sys, b, u);
    return ColimElement{u, sys.at(u).algebra->mul(pa.coords, pb.coords)};
}

bool colimEq(const DirectedSystem& sys, const ColimElement& a, const ColimElement& b) {
    int u = sys.upperBound(a.stage, b.stage);
    Mat diff = push(sys, a, u).coords - push(sys, b, u).coords;
    return isZeroMat<Scalar>(diff);
}

} // namespace locfrob
