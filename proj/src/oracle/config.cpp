#include "qlan/oracle/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "qlan/error.hpp"

namespace qlan::oracle {

namespace {

void read_env(const char* name, std::size_t& target) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return;
    std::string_view text(raw);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
        throw Error(ErrorKind::Parse, std::string(name) + " must be a positive integer, got '" + std::string(text) + "'");
    }
    target = value;
}

}  // namespace

OracleConfig OracleConfig::from_env() {
    OracleConfig config;
    read_env("QLAN_ORBIT_CAP", config.orbit_cap);
    read_env("QLAN_DENSE_MAX", config.dense_max);
    return config;
}

}  // namespace qlan::oracle
