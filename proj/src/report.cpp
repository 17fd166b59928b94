#include "locfrob/report.hpp"

#include <algorithm>

namespace locfrob {

bool SuiteReport::allPassed() const
{
    for (const auto& c : checks)
        if (c.status != "pass")
            return false;
    return true;
}

OrderedJson scalarJson(const Scalar& s)
{
    if (s.modulus() != 0)
        return s.residue();
    return s.str();
}

OrderedJson vecJson(const Vec& v)
{
    OrderedJson out = OrderedJson::array();
    for (Index i = 0; i < v.rows(); ++i)
        out.push_back(scalarJson(v(i)));
    return out;
}

OrderedJson rowVecJson(const RowVec& v)
{
    OrderedJson out = OrderedJson::array();
    for (Index j = 0; j < v.cols(); ++j)
        out.push_back(scalarJson(v(j)));
    return out;
}

OrderedJson matJson(const Mat& m)
{
    OrderedJson out = OrderedJson::array();
    for (Index i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (Index j = 0; j < m.cols(); ++j)
            row.push_back(scalarJson(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

OrderedJson reportJson(const SuiteReport& r)
{
    std::vector<const CheckRecord*> order;
    order.reserve(r.checks.size());
    for (const auto& c : r.checks)
        order.push_back(&c);
    std::sort(order.begin(), order.end(),
              [](const CheckRecord* a, const CheckRecord* b) { return a->id < b->id; });

    OrderedJson out = OrderedJson::object();
    out["suite"] = r.suite;
    out["seed"] = r.seed;
    out["depth"] = r.depth;
    OrderedJson checks = OrderedJson::array();
    for (const CheckRecord* c : order) {
        OrderedJson rec = OrderedJson::object();
        rec["id"] = c->id;
        rec["anchor"] = c->anchor;
        rec["status"] = c->status;
        rec["data"] = c->data;
        checks.push_back(std::move(rec));
    }
    out["checks"] = std::move(checks);
    return out;
}

std::string reportString(const SuiteReport& r)
{
    return reportJson(r).dump(2) + "\n";
}

} // namespace locfrob
