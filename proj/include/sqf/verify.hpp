#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqf/bipoly.hpp"
#include "sqf/experiments.hpp"

namespace sqf {

struct CheckLine {
  std::string label;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> checks;
  bool pass() const noexcept;
};

/// Exhaustive roots mod P^2 against roots mod P for bad_degree < deg P <=
/// max_deg, and the uniform root bound for every prime of degree <= max_deg.
SuiteReport verify_hensel(const Admissible& f, int max_deg, std::uint64_t budget = kLocalScanBudget);

/// sum_{d | n} d |pi_q(d)| = q^n for n <= n_max; the prime counts come from
/// enumeration for n <= enum_max and from Moebius inversion beyond.
SuiteReport verify_explicit_formula(const FieldPtr& field, int n_max, int enum_max);

SuiteReport verify_weil(const std::vector<Poly>& moduli, int n_max, std::optional<double> slack,
                        const RunOptions& opts = {});

/// Round trip and degree bounds on `samples` pseudo-random polynomials per
/// degree 1..n_max, plus monicity of the distinguished component.
SuiteReport verify_frobenius(const FieldPtr& field, int n_max, int samples, std::uint64_t seed = 1);

SuiteReport verify_sieve(const Admissible& f, const std::vector<int>& ns, const std::vector<int>& Ms,
                         const RunOptions& opts = {});

/// Remainder ratios at every n must stay within twice the ratio measured at
/// the smallest n (per M).
SuiteReport verify_remainder(const Admissible& f, const std::vector<int>& ns, const std::vector<int>& Ms,
                             const RunOptions& opts = {});

}  // namespace sqf
