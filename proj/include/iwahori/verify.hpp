#pragma once

#include <functional>

#include "iwahori/comparison.hpp"

namespace iwahori {

struct VerifyOptions {
    int p = 3;
    int ext_degree = 1;
    int radius = 3;
    int trials = 100;
    unsigned long long seed = 20240801ull;
};

/// Operator table used by the verification checks; replaceable so the harness
/// can be tested against deliberately corrupted operators.
struct OperatorHooks {
    std::function<IwahoriElement(const IwahoriElement&)> t10;
    std::function<IwahoriElement(const IwahoriElement&)> t12;
    std::function<IwahoriElement(const IwahoriElement&)> tm10;
    std::function<SphericalElement(const SphericalElement&)> hecke_T;

    static OperatorHooks real();
};

const std::vector<std::string>& verify_suite_names();
bool is_verify_suite(const std::string& name);

/// Runs one named suite (or "all") and returns the report; deterministic in
/// (options, suite). Failures never throw, they are report entries.
ComparisonReport verify_suite(const VerifyOptions& opt, const std::string& suite);
ComparisonReport verify_suite(const VerifyOptions& opt, const std::string& suite,
                              const OperatorHooks& ops);

}  // namespace iwahori
