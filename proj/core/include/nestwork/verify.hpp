#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nestwork/enumerate.hpp"

namespace nestwork {

struct VerifyCheck {
    std::string name;
    bool pass = true;
    std::string detail;  // first counterexample (canonical JSON) or note
};

struct VerifyReport {
    std::string suite;
    int max_n = 0;
    bool pass = true;
    std::vector<VerifyCheck> checks;
};

// Named invariant suites:
//   oracle           closed-form counts against exhaustive enumeration
//   roundtrip-alpha  alpha_inv . alpha = id, images in class Q, bijectivity
//   roundtrip-beta   beta_inv . beta = id and beta . beta_inv = id
//   roundtrip-gamma  gamma_inv . gamma = id, images in class T, bijectivity
//   oeis             row-sum sequences against their frozen prefixes
//   statistics       transients <-> left crossings under alpha and gamma
//   all              everything above
const std::vector<std::string>& verify_suite_names();

VerifyReport run_verify_suite(std::string_view suite, int max_n,
                              const BruteForceGuard& guard = BruteForceGuard::from_env());

}  // namespace nestwork
