#pragma once

// Check records and their JSON form.  Reports are meant to be byte-stable:
// running the same suite with the same configuration and seed twice must
// produce identical output, so serialization avoids anything volatile
// (timestamps, addresses, hash order).  Exact rationals are rendered as
// strings like "3/4", prime-field scalars as plain integers, and matrices
// as row-major nested arrays.

#include "locfrob/field.hpp"
#include "locfrob/linalg.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace locfrob {

using OrderedJson = nlohmann::ordered_json;

// One verified statement.  `anchor` spells out the mathematical property the
// check exercises; `status` is one of "pass", "fail", "not-found-at-depth",
// "unknown"; `data` holds whatever exact values the check produced.
struct CheckRecord {
    std::string id;
    std::string anchor;
    std::string status;
    OrderedJson data = OrderedJson::object();
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int depth = 0;
    std::vector<CheckRecord> checks;

    bool allPassed() const;
};

OrderedJson scalarJson(const Scalar& s);
OrderedJson vecJson(const Vec& v);
OrderedJson rowVecJson(const RowVec& v);
OrderedJson matJson(const Mat& m);

// Checks sorted by id, then serialized with two-space indentation and a
// trailing newline.
OrderedJson reportJson(const SuiteReport& r);
std::string reportString(const SuiteReport& r);

} // namespace locfrob
