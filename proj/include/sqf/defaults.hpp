#pragma once

#include <cstdint>

// Tunable thresholds and default budgets, in one place. The CLI exposes the
// budgets through --budget; the rest are fixed at build time.

namespace sqf {

/// Root counts mod P scan all residues up to this degree, then switch to the
/// gcd with X^{|P|} - X.
inline constexpr int kExhaustiveRootDegree = 4;

/// Largest residue scan mod P^2 (q^{2 deg P} candidates).
inline constexpr std::uint64_t kLocalScanBudget = std::uint64_t{1} << 20;

/// Largest enumeration over M_n(q) (q^n candidates).
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;

/// Weil check slack is 2 (deg Q + 1) / deg Q unless overridden. Measured
/// worst case for q = 2, Q in {t, t+1, t^2+t+1}, n <= 14 is well inside it.
inline double default_weil_slack(int deg_Q) { return 2.0 * (deg_Q + 1) / deg_Q; }

/// Acceptance tolerance for |fraction - truncated c| at n = 12, 14, 16
/// (x^3 + t over F_2, M = 8).
inline constexpr double kScanTolerance = 0.05;

/// Terms of the density tail summed one by one before the geometric bound
/// takes over.
inline constexpr int kTailExplicitTerms = 64;

}  // namespace sqf
