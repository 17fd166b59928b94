#pragma once

// System configuration files for the command-line tool.  Two shapes are
// accepted (see docs/config-schema.md):
//
//   builtin   {family, param, field, depth}   as JSON or flat TOML
//   custom    {family: "custom", field, stages, covers, inclusions}  as JSON
//
// Custom stages carry explicit multiplication tables and inclusion matrices;
// they are stored as given and judged later by validateSystem, so a config
// describing a broken system parses fine and fails its checks instead.

#include "locfrob/report.hpp"
#include "locfrob/system.hpp"

#include <string>

namespace locfrob {

// Anything wrong with the configuration text itself: unreadable file,
// malformed syntax, unknown keys or family names, out-of-range parameters.
struct ConfigError : Error {
    using Error::Error;
};

struct SystemConfig {
    std::string family = "prufer";
    int param = 2;
    Field field = Field::rationals();
    int depth = 3;
    OrderedJson custom; // stage/cover/inclusion payload when family == "custom"

    // Stable one-line description, used for cache keys and report payloads.
    std::string describe() const;
};

SystemConfig parseConfigText(const std::string& text);
SystemConfig parseConfigFile(const std::string& path);

// Realizes the configured directed system.  `depthOverride` > 0 replaces the
// configured depth for builtin families; custom systems have a fixed stage
// list, so the override must not exceed it.
DirectedSystem buildSystem(const SystemConfig& cfg, int depthOverride = 0);

} // namespace locfrob
