#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqf/bipoly.hpp"
#include "sqf/defaults.hpp"
#include "sqf/density.hpp"
#include "sqf/poly.hpp"

namespace sqf {

struct RunOptions {
  std::uint64_t budget = kEnumerationBudget;  // max candidates per enumeration
  std::uint64_t local_budget = kLocalScanBudget;
  unsigned threads = 1;
};

/// Degrees of the primes P with P^2 | h, from gcd(h, h'). `zero` marks h = 0,
/// which every square divides.
struct SquareDivisors {
  bool zero = false;
  std::vector<int> degrees;
  bool squarefree() const noexcept { return !zero && degrees.empty(); }
  /// Some P with P^2 | h has lo <= deg P <= hi.
  bool any_in(int lo, int hi) const noexcept;
};
SquareDivisors square_divisors(const Poly& h);

/// Counts over pi_q(n) (and, for remainder sets, over M_n(q)).
struct SieveCounts {
  int n = 0;
  int M = 0;
  std::uint64_t primes_total = 0;         // |pi_q(n)|
  std::uint64_t squarefree_hits = 0;      // |P_{f,2}(n)|
  std::uint64_t p_prime_count = 0;        // no P^2 | f(a) with deg P < M
  std::uint64_t p_doubleprime_count = 0;  // some P^2 | f(a) with deg P >= M
  std::uint64_t bad_middle = 0;           // over M_n(q): some P^2 | f(a), M <= deg P <= n/2
  std::uint64_t bad_large = 0;            // over M_n(q): some P^2 | f(a), deg P > n/2

  SieveCounts& operator+=(const SieveCounts& o);
  bool sandwich_holds() const noexcept {
    // |P'| - |P''| <= |P| <= |P'|, kept in unsigned arithmetic
    return p_prime_count <= squarefree_hits + p_doubleprime_count && squarefree_hits <= p_prime_count;
  }
};

SieveCounts empirical_density(const Admissible& f, int n, const RunOptions& opts = {});
SieveCounts sieve_split_counts(const Admissible& f, int n, int M, const RunOptions& opts = {});

struct RemainderCounts {
  int n = 0;
  int M = 0;
  std::uint64_t monic_total = 0;
  std::uint64_t bad_middle = 0;
  std::uint64_t bad_large = 0;
  double middle_ratio = 0.0;  // bad_middle / (q^n / (M q^M))
  double large_ratio = 0.0;   // bad_large / q^{n (p-1) / p}
};
RemainderCounts remainder_counts(const Admissible& f, int n, int M, const RunOptions& opts = {});

struct WeilRow {
  Poly residue;
  std::uint64_t count = 0;
  double deviation = 0.0;
};
struct WeilResult {
  int n = 0;
  Poly Q;
  double main_term = 0.0;  // q^n / (n phi(Q))
  double slack = 0.0;
  double bound = 0.0;      // slack * deg Q * q^{n/2} / n
  double max_deviation = 0.0;
  bool pass = false;
  std::vector<WeilRow> rows;  // residues coprime to Q, odometer order
};
/// Without a slack the default 2 (deg Q + 1) / deg Q applies.
WeilResult weil_check(int n, const Poly& Q, std::optional<double> slack = std::nullopt, const RunOptions& opts = {});

struct ScanRow {
  int n = 0;
  std::uint64_t primes = 0;
  std::uint64_t hits = 0;
  double fraction = 0.0;
  double c_trunc = 0.0;
  double c_lower = 0.0;
  double c_upper = 0.0;
  double deviation = 0.0;  // |fraction - c_trunc|
  double log_ref = 0.0;    // 1 / log_q n
};
struct ScanResult {
  DensityEstimate density;
  std::vector<ScanRow> rows;
};

/// Default cutoff: floor(log_q(n / 9)), raised to the smallest M at which the
/// density tail is certifiable.
int default_cutoff(const Admissible& f, int n);

ScanResult scan(const Admissible& f, int n_min, int n_max, std::optional<int> M = std::nullopt,
                const RunOptions& opts = {});

struct QScanRow {
  std::uint64_t q = 0;
  std::string status;  // "ok" or the reason the instantiation was skipped
  std::uint64_t primes = 0;
  std::uint64_t hits = 0;
  double fraction = 0.0;
};
/// The same expression instantiated over F_q for each q (default moduli).
std::vector<QScanRow> qscan(const std::string& expr, const std::vector<std::uint64_t>& qs, int n,
                            const RunOptions& opts = {});

std::string scan_csv(const std::vector<ScanRow>& rows);
std::string format_real(double v);

}  // namespace sqf
