#include "doctest.h"
#include "oracles.hpp"
#include "sqf/errors.hpp"
#include "sqf/experiments.hpp"
#include "sqf/parse.hpp"
#include "sqf/primes.hpp"
#include "sqf/verify.hpp"

using namespace sqf;

namespace {

const FieldPtr F2 = Field::make(2);

Admissible A2(const char* s) { return Admissible(parse_bipoly(s, F2)); }
Poly P2(const char* s) { return parse_poly(s, F2); }

// Square-prime degrees of f(a) from trial-division factorization.
std::vector<int> square_degrees(const Poly& h) {
  std::vector<int> out;
  for (const auto& [p, e] : oracle::factor(h))
    if (e >= 2) out.push_back(p.degree());
  return out;
}

bool any_between(const std::vector<int>& ds, int lo, int hi) {
  for (int d : ds)
    if (lo <= d && d <= hi) return true;
  return false;
}

}  // namespace

TEST_CASE("square divisors") {
  CHECK(square_divisors(P2("t^3+t")).degrees == std::vector<int>{1});
  CHECK(square_divisors(P2("t^2*(t^2+t+1)^2*(t^3+t+1)")).degrees == std::vector<int>{1, 2});
  CHECK(square_divisors(P2("t^3+t+1")).squarefree());
  CHECK(square_divisors(P2("t^4")).degrees == std::vector<int>{1});
  const SquareDivisors z = square_divisors(Poly(F2));
  CHECK(z.zero);
  CHECK_FALSE(z.squarefree());
  CHECK(z.any_in(5, 5));
}

TEST_CASE("empirical density: spot values") {
  const SieveCounts a = empirical_density(A2("x^3+t"), 1);
  CHECK(a.primes_total == 2);
  CHECK(a.squarefree_hits == 1);
  const SieveCounts b = empirical_density(A2("x"), 3);
  CHECK(b.primes_total == 2);
  CHECK(b.squarefree_hits == 2);
  // Every prime other than the culprit t gives a non-square-free value; t itself
  // (degree 1) gives (t+1)(t^2+t+1).
  CHECK(empirical_density(A2("(x+1)*(x+1+t^2)"), 1).squarefree_hits == 1);
  for (int n = 2; n <= 12; ++n) CHECK(empirical_density(A2("(x+1)*(x+1+t^2)"), n).squarefree_hits == 0);
  CHECK_THROWS_AS(empirical_density(A2("x"), 0), InvalidArgument);
  RunOptions small;
  small.budget = 100;
  CHECK_NOTHROW(empirical_density(A2("x"), 6, small));
  CHECK_THROWS_AS(empirical_density(A2("x"), 7, small), BudgetExceeded);
}

TEST_CASE("hits and sieve split agree with the factorization oracle") {
  for (const char* s : {"x^3+t", "x^2+x+t", "(x+1)*(x+1+t^2)", "t*x^2+x+1"}) {
    const Admissible f = A2(s);
    for (int n = 1; n <= 7; ++n) {
      std::uint64_t primes = 0, hits = 0;
      std::vector<std::uint64_t> prime_c(n + 1, 0), dprime_c(n + 1, 0);
      for (const Poly& P : oracle::primes_of_degree(F2, n)) {
        const std::vector<int> sq = square_degrees(oracle::value(f.poly(), P));
        ++primes;
        if (sq.empty()) ++hits;
        for (int M = 1; M <= n; ++M) {
          if (!any_between(sq, 1, M - 1)) ++prime_c[M];
          if (any_between(sq, M, 1 << 20)) ++dprime_c[M];
        }
      }
      const SieveCounts e = empirical_density(f, n);
      CHECK(e.primes_total == primes);
      CHECK(e.squarefree_hits == hits);
      for (int M = 1; M <= n; ++M) {
        const SieveCounts c = sieve_split_counts(f, n, M);
        CHECK(c.p_prime_count == prime_c[M]);
        CHECK(c.p_doubleprime_count == dprime_c[M]);
        CHECK(c.sandwich_holds());
        CHECK(c.squarefree_hits <= c.primes_total);
      }
      CHECK(sieve_split_counts(f, n, n).squarefree_hits <= sieve_split_counts(f, n, n).p_prime_count);
    }
  }
  for (int M = 1; M <= 6; ++M) CHECK(sieve_split_counts(A2("x"), 6, M).p_doubleprime_count == 0);
  CHECK_THROWS_AS(sieve_split_counts(A2("x"), 4, 5), InvalidArgument);
  CHECK_THROWS_AS(sieve_split_counts(A2("x"), 4, 0), InvalidArgument);
}

TEST_CASE("remainder counts: spot values") {
  const RemainderCounts r = remainder_counts(A2("x"), 2, 1);
  CHECK(r.bad_middle == 2);
  CHECK(r.bad_large == 0);
  CHECK(r.monic_total == 4);
  CHECK(remainder_counts(A2("x^3+t"), 5, 3).bad_middle == 0);  // n < 2M: empty middle range
}

TEST_CASE("remainder counts agree with the factorization oracle") {
  for (const char* s : {"x^3+t", "x"}) {
    const Admissible f = A2(s);
    for (int n = 2; n <= 8; ++n) {
      for (int M = 1; M <= 3; ++M) {
        std::uint64_t middle = 0, large = 0, bad = 0, small_only = 0;
        oracle::for_each_monic(F2, n, [&](const Poly& a) {
          const auto sq = square_degrees(oracle::value(f.poly(), a));
          if (any_between(sq, M, n / 2)) ++middle;
          if (any_between(sq, n / 2 + 1, 1 << 20)) ++large;
          if (!sq.empty()) ++bad;
          if (!sq.empty() && !any_between(sq, M, 1 << 20)) ++small_only;
        });
        const RemainderCounts rc = remainder_counts(f, n, M);
        CHECK(rc.bad_middle == middle);
        CHECK(rc.bad_large == large);
        CHECK(rc.bad_middle + rc.bad_large >= bad - small_only);
        CHECK(rc.middle_ratio == doctest::Approx(middle / (std::pow(2.0, n) / (M * std::pow(2.0, M)))));
        CHECK(rc.large_ratio == doctest::Approx(large / std::pow(2.0, n / 2.0)));
      }
    }
  }
}

TEST_CASE("weil check") {
  const WeilResult w3 = weil_check(3, P2("t"));
  REQUIRE(w3.rows.size() == 1);
  CHECK(w3.rows[0].count == 2);
  CHECK(w3.max_deviation == doctest::Approx(2.0 / 3.0));
  CHECK(w3.pass);
  const WeilResult w1 = weil_check(1, P2("t"));
  CHECK(w1.rows[0].residue.is_one());
  CHECK(w1.rows[0].count == 1);
  CHECK(w1.main_term == doctest::Approx(2.0));
  CHECK(w1.max_deviation == doctest::Approx(1.0));

  // Rows agree with the progression counter.
  const Poly Q = P2("t^2+t+1");
  for (int n = 1; n <= 10; ++n) {
    const WeilResult w = weil_check(n, Q);
    CHECK(w.rows.size() == 3);
    CHECK(w.slack == doctest::Approx(3.0));
    for (const auto& row : w.rows) CHECK(BigInt(row.count) == count_primes_ap(n, Q, row.residue).count);
    CHECK(w.pass);
  }
  CHECK_THROWS_AS(weil_check(3, P2("1")), InvalidArgument);
  CHECK_FALSE(weil_check(3, P2("t"), 0.1).pass);
}

TEST_CASE("scan rows") {
  const ScanResult s = scan(A2("x"), 2, 6, 3);
  REQUIRE(s.rows.size() == 5);
  for (const auto& r : s.rows) {
    CHECK(r.fraction == 1.0);
    CHECK(r.c_trunc == 1.0);
    CHECK(r.deviation == 0.0);
  }
  CHECK(s.rows[2].log_ref == doctest::Approx(0.5));  // n = 4

  const ScanResult d = scan(A2("(x+1)*(x+1+t^2)"), 2, 6, 2);
  for (const auto& r : d.rows) {
    CHECK(r.fraction == 0.0);
    CHECK(r.c_trunc == 0.0);
  }
  CHECK(scan_csv(s.rows).rfind("n,primes,hits,fraction,c_trunc,c_lower,c_upper,deviation,log_ref\n", 0) == 0);
}

TEST_CASE("default cutoff") {
  const Admissible f = A2("x^3+t");
  CHECK(default_cutoff(f, 16) == 3);  // floor(log2(16/9)) = 0 -> 1, raised until certifiable
  CHECK(default_cutoff(A2("x"), 144) == 4);
  CHECK(default_cutoff(A2("x"), 4) == 1);
}

TEST_CASE("parallel and serial runs agree byte for byte") {
  RunOptions serial, parallel;
  parallel.threads = 4;
  const Admissible f = A2("x^3+t");
  CHECK(scan_csv(scan(f, 6, 12, 8, serial).rows) == scan_csv(scan(f, 6, 12, 8, parallel).rows));
  const RemainderCounts a = remainder_counts(f, 12, 2, serial), b = remainder_counts(f, 12, 2, parallel);
  CHECK(a.bad_middle == b.bad_middle);
  CHECK(a.bad_large == b.bad_large);
  const WeilResult wa = weil_check(10, P2("t^2+t+1"), std::nullopt, serial);
  const WeilResult wb = weil_check(10, P2("t^2+t+1"), std::nullopt, parallel);
  for (std::size_t i = 0; i < wa.rows.size(); ++i) CHECK(wa.rows[i].count == wb.rows[i].count);
}

TEST_CASE("qscan") {
  const auto rows = qscan("x^3+t", {2, 3, 5, 7}, 4);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].status == "ok");
  CHECK(rows[1].status.rfind("skipped: inseparable", 0) == 0);  // 3 | deg_x over F_3
  CHECK(rows[3].fraction >= rows[0].fraction);
  CHECK(qscan("x^3+t", {}, 4).empty());
  const auto one = qscan("x^3+t", {2}, 5);
  const SieveCounts c = empirical_density(A2("x^3+t"), 5);
  CHECK(one[0].hits == c.squarefree_hits);
  CHECK(one[0].primes == c.primes_total);
}

TEST_CASE("verify suites on small inputs") {
  CHECK(verify_hensel(A2("x^3+t"), 4).pass());
  CHECK(verify_explicit_formula(F2, 8, 6).pass());
  CHECK(verify_explicit_formula(Field::make(3, 2), 5, 3).pass());
  CHECK(verify_weil({P2("t"), P2("t+1")}, 8, std::nullopt).pass());
  CHECK(verify_frobenius(Field::make(3), 12, 50).pass());
  CHECK(verify_sieve(A2("x^3+t"), {6, 8}, {2, 3}).pass());
  const SuiteReport r = verify_remainder(A2("x^3+t"), {8, 10}, {2});
  CHECK(r.checks.size() == 2);
  CHECK(r.pass());
}
