#pragma once

#include <optional>
#include <vector>

#include "sqf/bigint.hpp"
#include "sqf/bipoly.hpp"
#include "sqf/defaults.hpp"
#include "sqf/poly.hpp"

namespace sqf {

/// Truncated Euler product for c_{f,2} with a certified enclosure of the full
/// product.
struct DensityEstimate {
  double truncated_value = 1.0;  // prod over deg P < M
  int M = 1;
  double lower = 0.0;            // certified lower bound for the infinite product
  double upper = 1.0;            // = truncated_value (every factor is <= 1)
  BigInt B;                      // max{deg_x f, q^{2 max{deg disc, deg w_f}}}
  double tail = 0.0;             // T * K, so lower = truncated * exp(-tail)
  bool positive = true;
  std::optional<PrimeMod> culprit;  // first prime whose factor vanishes
};

/// Product of (1 - rho(P^2) / (|P|^2 - |P|)) over primes of degree < M,
/// accumulated in log space with compensated summation; zero factors are
/// detected by exact integer comparison.
///
/// Tail: a prime of degree i >= M contributes at most b_i / (|P|^2 - |P|),
/// where b_i = deg_x f above the bad degree (Hensel) and B at or below it;
/// with pi_q(i) <= q^i / i that gives T = sum_{i >= M} b_i / (i (q^i - 1)),
/// summed explicitly for kTailExplicitTerms degrees and geometrically after.
/// -log(1 - x) <= x / (1 - x_max) with x_max = b_M / (q^{2M} - q^M) turns T
/// into the enclosure. Throws InvalidArgument when x_max >= 1 (raise M), unless
/// some factor already vanishes, in which case the interval is [0, 0].
DensityEstimate truncated_density(const Admissible& f, int M, std::uint64_t budget = kLocalScanBudget);

/// T for the given cutoff, before the 1/(1 - x_max) factor. Exposed for tests.
double tail_sum(const Admissible& f, int M);

struct PositivityRecord {
  PrimeMod prime;
  std::optional<Poly> witness;  // C coprime to P with f(C) != 0 mod P^2
};

struct PositivityResult {
  bool positive = true;
  std::vector<PositivityRecord> records;  // every prime of degree <= bad_degree
  std::optional<PrimeMod> culprit;
};

/// Finite test for c_{f,2} > 0: each prime of degree <= bad_degree needs a
/// witness; larger primes always have one by Hensel's lemma.
PositivityResult positivity_check(const Admissible& f, std::uint64_t budget = kLocalScanBudget);

}  // namespace sqf
