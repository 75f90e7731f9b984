#include "sqf/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sqf/local_counts.hpp"
#include "sqf/parse.hpp"
#include "sqf/primes.hpp"

namespace sqf {

namespace {

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

bool SuiteReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

SuiteReport verify_hensel(const Admissible& f, int max_deg, std::uint64_t budget) {
  SuiteReport r{"hensel", {}};
  for (const auto& P : primes_up_to(f.poly().field(), max_deg)) {
    const std::uint64_t sq = roots_mod_prime_square_exhaustive(f.poly(), P, budget);
    const std::string name = format(P.poly());
    if (P.degree() > f.bad_degree()) {
      const std::uint64_t lin = roots_mod_prime(f, P);
      r.checks.push_back({"lift " + name, sq == lin, "mod P^2: " + str(sq) + ", mod P: " + str(lin)});
    }
    r.checks.push_back({"bound " + name, BigInt(sq) <= f.root_bound(),
                        "mod P^2: " + str(sq) + " <= " + str(f.root_bound())});
  }
  return r;
}

SuiteReport verify_explicit_formula(const FieldPtr& field, int n_max, int enum_max) {
  SuiteReport r{"explicit-formula", {}};
  const std::uint64_t q = field->order();
  std::vector<BigInt> pi(static_cast<std::size_t>(n_max) + 1);
  for (int d = 1; d <= n_max; ++d) {
    pi[d] = d <= enum_max ? BigInt(enumerate_primes(field, d).size()) : count_primes(q, d);
    if (d <= enum_max) {
      const BigInt mob = count_primes(q, d);
      r.checks.push_back({"count n=" + str(d), mob == pi[d], "enumerated " + str(pi[d]) + ", Moebius " + str(mob)});
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    BigInt sum = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) sum += d * pi[d];
    const BigInt qn = ipow(q, static_cast<unsigned>(n));
    r.checks.push_back({"identity n=" + str(n), sum == qn, str(sum) + " vs q^n = " + str(qn)});
  }
  return r;
}

SuiteReport verify_weil(const std::vector<Poly>& moduli, int n_max, std::optional<double> slack,
                        const RunOptions& opts) {
  SuiteReport r{"weil", {}};
  for (const auto& Q : moduli) {
    for (int n = 1; n <= n_max; ++n) {
      const WeilResult w = weil_check(n, Q, slack, opts);
      r.checks.push_back({"Q=" + format(Q) + " n=" + str(n), w.pass,
                          "max deviation " + format_real(w.max_deviation) + " <= " + format_real(w.bound)});
    }
  }
  return r;
}

SuiteReport verify_frobenius(const FieldPtr& field, int n_max, int samples, std::uint64_t seed) {
  SuiteReport r{"frobenius", {}};
  std::mt19937_64 rng(seed);
  const std::uint32_t q = field->order();
  const std::uint32_t p = field->characteristic();
  std::uniform_int_distribution<Code> any(0, q - 1), nonzero(1, q - 1);
  for (int n = 1; n <= n_max; ++n) {
    int failures = 0;
    std::string first_failure;
    for (int s = 0; s < samples; ++s) {
      const bool monic = s % 2 == 0;
      std::vector<Code> c(static_cast<std::size_t>(n) + 1);
      for (auto& x : c) x = any(rng);
      c[n] = monic ? 1 : nonzero(rng);
      const Poly a(field, c);
      const auto parts = frobenius_decompose(a);
      bool ok = frobenius_recompose(parts) == a;
      for (const auto& part : parts) ok = ok && part.degree() <= n / static_cast<int>(p);
      if (monic) {
        const auto& distinguished = parts[n % p];
        ok = ok && distinguished.is_monic() && distinguished.degree() == n / static_cast<int>(p);
      }
      if (!ok && failures++ == 0) first_failure = format(a);
    }
    r.checks.push_back({"q=" + str(q) + " n=" + str(n), failures == 0,
                        failures ? str(failures) + " failures, first " + first_failure
                                 : str(samples) + " samples"});
  }
  return r;
}

SuiteReport verify_sieve(const Admissible& f, const std::vector<int>& ns, const std::vector<int>& Ms,
                         const RunOptions& opts) {
  SuiteReport r{"sieve", {}};
  for (int n : ns) {
    for (int M : Ms) {
      const SieveCounts c = sieve_split_counts(f, n, M, opts);
      r.checks.push_back({"n=" + str(n) + " M=" + str(M), c.sandwich_holds(),
                          str(c.p_prime_count) + " - " + str(c.p_doubleprime_count) + " <= " +
                              str(c.squarefree_hits) + " <= " + str(c.p_prime_count)});
    }
  }
  return r;
}

SuiteReport verify_remainder(const Admissible& f, const std::vector<int>& ns, const std::vector<int>& Ms,
                             const RunOptions& opts) {
  SuiteReport r{"remainder", {}};
  if (ns.empty()) return r;
  std::vector<int> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  for (int M : Ms) {
    double c1 = 0.0, c2 = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const RemainderCounts rc = remainder_counts(f, sorted[i], M, opts);
      if (i == 0) {
        c1 = rc.middle_ratio;
        c2 = rc.large_ratio;
      }
      const bool ok = rc.middle_ratio <= 2 * c1 && rc.large_ratio <= 2 * c2;
      r.checks.push_back({"n=" + str(rc.n) + " M=" + str(M), ok,
                          "middle " + str(rc.bad_middle) + " (ratio " + format_real(rc.middle_ratio) + ", C1 " +
                              format_real(c1) + "), large " + str(rc.bad_large) + " (ratio " +
                              format_real(rc.large_ratio) + ", C2 " + format_real(c2) + ")"});
    }
  }
  return r;
}

}  // namespace sqf
