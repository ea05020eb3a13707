#include "golomb/config.hpp"

#include <fstream>
#include <sstream>

#include "golomb/error.hpp"

namespace golomb {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream is(text);
    std::string raw;
    long line = 0;
    ConfigEntry* current = nullptr;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        std::size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = strip(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw Error(Err::ConfigError, "line " + std::to_string(line) + ": unclosed section");
            std::string name = strip(s.substr(1, s.size() - 2));
            if (name.empty())
                throw Error(Err::ConfigError, "line " + std::to_string(line) + ": empty section name");
            cfg.entries.push_back({name, {}, line});
            current = &cfg.entries.back();
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw Error(Err::ConfigError,
                        "line " + std::to_string(line) + ": expected key = value, got '" + s + "'");
        std::string key = strip(s.substr(0, eq));
        std::string value = strip(s.substr(eq + 1));
        if (key.empty())
            throw Error(Err::ConfigError, "line " + std::to_string(line) + ": empty key");
        if (current == nullptr) {
            if (key == "seed") {
                try {
                    cfg.seed = std::stoull(value);
                } catch (...) {
                    throw Error(Err::ConfigError,
                                "line " + std::to_string(line) + ": seed must be an integer");
                }
            } else if (key == "out") {
                cfg.out = value;
            } else if (key == "format") {
                if (value != "json" && value != "csv")
                    throw Error(Err::ConfigError,
                                "line " + std::to_string(line) + ": format must be json or csv");
                cfg.format = value;
            } else {
                throw Error(Err::ConfigError, "line " + std::to_string(line) + ": unknown global key '" +
                                                  key + "' (sections start with [op])");
            }
            continue;
        }
        if (current->params.count(key))
            throw Error(Err::ConfigError,
                        "line " + std::to_string(line) + ": duplicate key '" + key + "'");
        current->params[key] = value;
    }
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::ConfigError, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace golomb
