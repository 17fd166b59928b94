// Command-line front end: validate a configured directed system, run a named
// verification suite over it, or evaluate a single quantity. Reports are
// JSON on stdout; identical (config, seed, depth) inputs produce identical
// bytes, which also makes them safe to cache.

#include "locfrob/config.hpp"
#include "locfrob/report.hpp"
#include "locfrob/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw locfrob::ConfigError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Reports are pure functions of their inputs, so a cache directory (set via
// LOCFROB_CACHE_DIR) can hand back the stored bytes for a repeated request.
std::optional<std::filesystem::path> cachePath(const std::string& key)
{
    const char* dir = std::getenv("LOCFROB_CACHE_DIR");
    if (!dir || !*dir)
        return std::nullopt;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        return std::nullopt;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(key)));
    return std::filesystem::path(dir) / (std::string(hex) + ".json");
}

int exitCodeOf(const std::string& reportText)
{
    auto parsed = locfrob::OrderedJson::parse(reportText);
    for (const auto& check : parsed.at("checks"))
        if (check.at("status").get<std::string>() != "pass")
            return 1;
    return 0;
}

int emit(const std::string& reportText, const std::string& jsonOut,
         const std::optional<std::filesystem::path>& cacheFile)
{
    std::cout << reportText;
    if (!jsonOut.empty()) {
        std::ofstream out(jsonOut, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << jsonOut << "\n";
            return 2;
        }
        out << reportText;
    }
    if (cacheFile) {
        std::ofstream out(*cacheFile, std::ios::binary);
        if (out)
            out << reportText;
    }
    return exitCodeOf(reportText);
}

std::optional<std::string> cachedReport(const std::optional<std::filesystem::path>& file)
{
    if (!file)
        return std::nullopt;
    std::ifstream in(*file, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"verification suites for directed systems of symmetric "
                 "Frobenius algebras"};
    app.require_subcommand(1);

    std::string configPath;
    std::string suiteName;
    std::string expr;
    std::string jsonOut;
    std::uint64_t seed = 0;
    int depth = 0;

    CLI::App* validate = app.add_subcommand("validate", "check the configured system");
    validate->add_option("config", configPath, "config file (JSON or TOML)")
        ->required();
    validate->add_option("--depth", depth, "override the configured depth");
    validate->add_option("--json", jsonOut, "also write the report to this file");

    CLI::App* suite = app.add_subcommand("suite", "run a named verification suite");
    suite->add_option("config", configPath, "config file (JSON or TOML)")->required();
    suite->add_option("--suite", suiteName, "suite name, or \"all\"")->required();
    suite->add_option("--seed", seed, "seed for the randomized checks");
    suite->add_option("--depth", depth, "override the configured depth");
    suite->add_option("--json", jsonOut, "also write the report to this file");

    CLI::App* compute = app.add_subcommand("compute", "evaluate one quantity");
    compute->add_option("config", configPath, "config file (JSON or TOML)")
        ->required();
    compute->add_option("--expr", expr, "e.g. cohdim(trivial@stage1)")->required();
    compute->add_option("--depth", depth, "override the configured depth");
    compute->add_option("--json", jsonOut, "also write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string configText = readFile(configPath);
        locfrob::SystemConfig cfg = locfrob::parseConfigText(configText);

        std::string mode = app.get_subcommands().front()->get_name();
        std::string key = mode + "|" + configText + "|" + suiteName + "|" +
                          std::to_string(seed) + "|" + std::to_string(depth) + "|" +
                          expr;
        auto cacheFile = cachePath(key);
        if (auto cached = cachedReport(cacheFile)) {
            std::cout << *cached;
            if (!jsonOut.empty()) {
                std::ofstream out(jsonOut, std::ios::binary);
                out << *cached;
            }
            return exitCodeOf(*cached);
        }

        locfrob::SuiteReport report;
        if (mode == "validate")
            report = locfrob::validateReport(cfg, depth);
        else if (mode == "suite")
            report = locfrob::runSuite(cfg, suiteName, seed, depth);
        else
            report = locfrob::computeReport(cfg, expr, depth);
        return emit(locfrob::reportString(report), jsonOut, cacheFile);
    } catch (const locfrob::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const locfrob::UnknownRequest& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const locfrob::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
