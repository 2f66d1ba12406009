#pragma once

/**
 * @file verify.hpp
 * @brief The verification suite behind `domroots verify`.
 *
 * Each check ends PASS, FAIL or REPORTED. REPORTED marks a documented
 * discrepancy between a published value and what the engine computes; it
 * never affects the exit status.
 */

#include <optional>
#include <string>
#include <vector>

#include "domroots/mpreal.hpp"

namespace domroots {

enum class CheckStatus { Pass, Fail, Reported };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

enum class VerifyScope { All, Friendship, Book, Corona, Limits };
std::optional<VerifyScope> parse_scope(const std::string& s);

struct VerifyOptions {
  mpfr_prec_t precision_bits = 256;
  double tol = 1e-12;
};

std::vector<CheckResult> run_verify(VerifyScope scope, const VerifyOptions& options = {});

/// "name — STATUS", followed by an indented detail line when there is one.
std::string format_check(const CheckResult& c);
bool any_failed(const std::vector<CheckResult>& checks);

}  // namespace domroots
