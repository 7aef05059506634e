#pragma once

#include <cstddef>

namespace qlan::oracle {

// Size guards for the brute-force oracle.
struct OracleConfig {
    // Largest number of labelled graphs a local-complementation orbit search
    // may visit before giving up with a Resource error.
    std::size_t orbit_cap = 1'000'000;
    // Largest qubit count for which dense state vectors are built.
    std::size_t dense_max = 14;

    // Defaults overridden by QLAN_ORBIT_CAP and QLAN_DENSE_MAX when set.
    // Throws Parse on malformed values.
    static OracleConfig from_env();
};

}  // namespace qlan::oracle
