#ifndef GOLOMB_CONFIG_HPP
#define GOLOMB_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace golomb {

/// One experiment: a section name (the operation) plus its key = value
/// parameters. Bounds carry no silent defaults: handlers demand every bound
/// they use, naming the section line on failure.
struct ConfigEntry {
    std::string op;
    std::map<std::string, std::string> params;
    long line = 0;
};

struct Config {
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    std::vector<ConfigEntry> entries;
};

/// Parses the declarative key-value format:
///
///     seed = 42
///     [closure]
///     field = Fp:2
///     ...
///
/// '#' starts a comment; repeated section names queue independent entries.
Config parse_config(const std::string& text);

Config load_config_file(const std::string& path);

}  // namespace golomb

#endif
