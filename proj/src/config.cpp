#include "locfrob/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace locfrob {
namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Flat `key = value` lines with # comments; values are quoted strings or
// integers.  Enough TOML for the builtin-family shape.
OrderedJson parseFlatToml(const std::string& text)
{
    OrderedJson out = OrderedJson::object();
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineNo) +
                              ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config line " + std::to_string(lineNo) +
                              ": expected key = value");
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"') {
            out[key] = val.substr(1, val.size() - 2);
        } else {
            try {
                size_t used = 0;
                long long n = std::stoll(val, &used);
                if (used != val.size())
                    throw std::invalid_argument(val);
                out[key] = n;
            } catch (const std::exception&) {
                throw ConfigError("config line " + std::to_string(lineNo) +
                                  ": cannot read value \"" + val + "\"");
            }
        }
    }
    return out;
}

int intField(const OrderedJson& j, const std::string& key, int fallback)
{
    if (!j.contains(key))
        return fallback;
    if (!j.at(key).is_number_integer())
        throw ConfigError("config key \"" + key + "\" must be an integer");
    return j.at(key).get<int>();
}

std::string stringField(const OrderedJson& j, const std::string& key,
                        const std::string& fallback)
{
    if (!j.contains(key))
        return fallback;
    if (!j.at(key).is_string())
        throw ConfigError("config key \"" + key + "\" must be a string");
    return j.at(key).get<std::string>();
}

Scalar scalarEntry(const Field& f, const OrderedJson& j, const std::string& where)
{
    try {
        if (j.is_number_integer())
            return Scalar::of(f, j.get<long long>());
        if (j.is_string())
            return Scalar::parse(f, j.get<std::string>());
    } catch (const Error& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + ": scalars must be integers or \"n/d\" strings");
}

Vec vecEntry(const Field& f, const OrderedJson& j, const std::string& where)
{
    if (!j.is_array())
        throw ConfigError(where + ": expected an array of scalars");
    Vec v(static_cast<Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i)
        v(static_cast<Index>(i)) = scalarEntry(f, j[i], where);
    return v;
}

Mat matEntry(const Field& f, const OrderedJson& j, const std::string& where)
{
    if (!j.is_array() || j.empty())
        throw ConfigError(where + ": expected a non-empty array of rows");
    size_t cols = j[0].is_array() ? j[0].size() : 0;
    Mat m(static_cast<Index>(j.size()), static_cast<Index>(cols));
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ConfigError(where + ": rows must be arrays of equal length");
        for (size_t k = 0; k < cols; ++k)
            m(static_cast<Index>(i), static_cast<Index>(k)) =
                scalarEntry(f, j[i][k], where);
    }
    return m;
}

// Frobenius data assembled without the usual nondegeneracy check, so that a
// deliberately broken custom stage still builds and gets reported on by
// validateSystem instead of dying here.
FrobeniusData rawFrobenius(const Algebra& a, RowVec form)
{
    imprint(a.field, form);
    FrobeniusData fd;
    fd.form = form;
    fd.gram = Mat(a.dim, a.dim);
    for (Index i = 0; i < a.dim; ++i)
        for (Index j = 0; j < a.dim; ++j)
            fd.gram(i, j) = (form * a.mul(a.basisVec(i), a.basisVec(j)))(0, 0);
    fd.symmetric = matEq<Scalar>(fd.gram, Mat(fd.gram.transpose()));
    auto inv = invert<Scalar>(fd.gram);
    Mat id = Mat::Identity(a.dim, a.dim);
    imprint(a.field, id);
    fd.dualU = id;
    fd.dualV = inv ? *inv : id;
    return fd;
}

DirectedSystem buildCustom(const SystemConfig& cfg)
{
    const OrderedJson& j = cfg.custom;
    const Field f = cfg.field;
    if (!j.contains("stages") || !j.at("stages").is_array() || j.at("stages").empty())
        throw ConfigError("custom config: \"stages\" must be a non-empty array");

    std::vector<Stage> stages;
    int id = 0;
    for (const auto& sj : j.at("stages")) {
        std::string where = "custom stage " + std::to_string(id);
        if (!sj.is_object())
            throw ConfigError(where + ": expected an object");
        if (!sj.contains("labels") || !sj.at("labels").is_array())
            throw ConfigError(where + ": \"labels\" must be an array");
        std::vector<std::string> labels;
        for (const auto& l : sj.at("labels"))
            labels.push_back(l.get<std::string>());
        const Index dim = static_cast<Index>(labels.size());
        if (dim == 0)
            throw ConfigError(where + ": needs at least one basis label");

        if (!sj.contains("mul") || !sj.at("mul").is_array() ||
            sj.at("mul").size() != labels.size())
            throw ConfigError(where + ": \"mul\" must list one table row per label");
        std::vector<Mat> lmul;
        for (size_t i = 0; i < labels.size(); ++i) {
            const auto& row = sj.at("mul")[i];
            if (!row.is_array() || row.size() != labels.size())
                throw ConfigError(where + ": mul[" + std::to_string(i) +
                                  "] must have one product per label");
            Mat li(dim, dim);
            for (size_t k = 0; k < labels.size(); ++k) {
                Vec prod = vecEntry(f, row[k], where + " mul entry");
                if (prod.rows() != dim)
                    throw ConfigError(where + ": products must have " +
                                      std::to_string(dim) + " coordinates");
                li.col(static_cast<Index>(k)) = prod;
            }
            lmul.push_back(li);
        }

        Vec one = vecEntry(f, sj.contains("one") ? sj.at("one") : OrderedJson(),
                           where + " one");
        Vec augCol = vecEntry(f, sj.contains("aug") ? sj.at("aug") : OrderedJson(),
                              where + " aug");
        Vec formCol = vecEntry(f, sj.contains("form") ? sj.at("form") : OrderedJson(),
                               where + " form");
        if (one.rows() != dim || augCol.rows() != dim || formCol.rows() != dim)
            throw ConfigError(where + ": one, aug, and form must have " +
                              std::to_string(dim) + " coordinates");

        AlgebraPtr alg = makeAlgebra(f, labels, lmul, one, RowVec(augCol.transpose()));
        Stage st;
        st.id = id;
        st.algebra = alg;
        st.frob = rawFrobenius(*alg, RowVec(formCol.transpose()));
        stages.push_back(std::move(st));
        ++id;
    }

    if (!j.contains("covers") || !j.at("covers").is_array())
        throw ConfigError("custom config: \"covers\" must be an array of [from, to] pairs");
    std::vector<std::pair<int, int>> covers;
    for (const auto& cj : j.at("covers")) {
        if (!cj.is_array() || cj.size() != 2 || !cj[0].is_number_integer() ||
            !cj[1].is_number_integer())
            throw ConfigError("custom config: covers entries must be [from, to] pairs");
        int a = cj[0].get<int>(), b = cj[1].get<int>();
        if (a < 0 || b < 0 || a >= id || b >= id)
            throw ConfigError("custom config: cover [" + std::to_string(a) + ", " +
                              std::to_string(b) + "] names a missing stage");
        covers.emplace_back(a, b);
    }

    if (!j.contains("inclusions") || !j.at("inclusions").is_array())
        throw ConfigError("custom config: \"inclusions\" must be an array");
    std::map<std::pair<int, int>, AlgebraMorphism> arrows;
    for (const auto& ij : j.at("inclusions")) {
        if (!ij.is_object() || !ij.contains("from") || !ij.contains("to") ||
            !ij.contains("matrix"))
            throw ConfigError("custom config: inclusions need from, to, and matrix");
        int a = ij.at("from").get<int>();
        int b = ij.at("to").get<int>();
        if (a < 0 || b < 0 || a >= id || b >= id)
            throw ConfigError("custom config: inclusion " + std::to_string(a) + " -> " +
                              std::to_string(b) + " names a missing stage");
        Mat m = matEntry(f, ij.at("matrix"),
                         "custom inclusion " + std::to_string(a) + " -> " +
                             std::to_string(b));
        // Stored raw: validateSystem re-derives the morphism and reports any
        // corruption against the pair instead of us throwing here.
        AlgebraMorphism mor;
        mor.source = stages[static_cast<size_t>(a)].algebra;
        mor.target = stages[static_cast<size_t>(b)].algebra;
        mor.matrix = std::move(m);
        arrows.emplace(std::make_pair(a, b), std::move(mor));
    }
    for (const auto& cover : covers)
        if (!arrows.count(cover))
            throw ConfigError("custom config: cover [" + std::to_string(cover.first) +
                              ", " + std::to_string(cover.second) +
                              "] has no inclusion matrix");

    return makeSystem("custom", f, std::move(stages), std::move(covers),
                      std::move(arrows));
}

} // namespace

std::string SystemConfig::describe() const
{
    std::string s = family;
    if (family != "custom" && family != "merge_demo")
        s += "(" + std::to_string(param) + ")";
    s += "/" + field.name() + "/depth " + std::to_string(depth);
    return s;
}

SystemConfig parseConfigText(const std::string& text)
{
    OrderedJson j;
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            j = OrderedJson::parse(text);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("config JSON: ") + e.what());
        }
    } else {
        j = parseFlatToml(text);
    }
    if (!j.is_object())
        throw ConfigError("config must be a key/value table");

    static const std::set<std::string> known = {"family", "param",  "params",
                                               "field",  "depth",  "stages",
                                               "covers", "inclusions"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw ConfigError("config: unknown key \"" + it.key() + "\"");

    SystemConfig cfg;
    cfg.family = stringField(j, "family", "prufer");
    static const std::set<std::string> families = {
        "prufer", "symmetric_chain", "dual_profinite", "merge_demo", "custom"};
    if (!families.count(cfg.family))
        throw ConfigError("config: unknown family \"" + cfg.family + "\"");

    cfg.param = intField(j, "param", intField(j, "params", 2));
    if (cfg.param < 1)
        throw ConfigError("config: param must be positive");
    try {
        cfg.field = Field::parse(stringField(j, "field", "QQ"));
    } catch (const Error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    cfg.depth = intField(j, "depth", 3);
    if (cfg.depth < 0 || cfg.depth > 8)
        throw ConfigError("config: depth must be between 0 and 8");

    if (cfg.family == "custom") {
        OrderedJson payload = OrderedJson::object();
        for (const char* key : {"stages", "covers", "inclusions"})
            if (j.contains(key))
                payload[key] = j.at(key);
        cfg.custom = std::move(payload);
    } else if (j.contains("stages") || j.contains("covers") || j.contains("inclusions")) {
        throw ConfigError("config: stage tables are only legal with family \"custom\"");
    }
    return cfg;
}

SystemConfig parseConfigFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseConfigText(buf.str());
}

DirectedSystem buildSystem(const SystemConfig& cfg, int depthOverride)
{
    int depth = depthOverride > 0 ? depthOverride : cfg.depth;
    if (cfg.family == "custom") {
        DirectedSystem sys = buildCustom(cfg);
        if (depth >= sys.stageCount())
            throw ConfigError("config: depth " + std::to_string(depth) +
                              " exceeds the custom stage list");
        return sys;
    }
    try {
        return builtinSystem(cfg.family, cfg.param, cfg.field, depth);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

} // namespace locfrob
