#include "sqf/experiments.hpp"

#include <climits>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sqf/errors.hpp"
#include "sqf/parallel.hpp"
#include "sqf/parse.hpp"
#include "sqf/primes.hpp"

namespace sqf {

namespace {

MonicRange checked_range(const FieldPtr& field, int n, const RunOptions& opts) {
  MonicRange range(field, n);
  if (range.size() > opts.budget)
    throw BudgetExceeded("enumeration of q^" + std::to_string(n) + " = " + std::to_string(range.size()) +
                         " candidates exceeds the budget of " + std::to_string(opts.budget));
  return range;
}

// Scan of pi_q(n) classifying f(P) by the degrees of its square prime divisors.
SieveCounts prime_scan(const Admissible& f, int n, int M, const RunOptions& opts) {
  const MonicRange range = checked_range(f.poly().field(), n, opts);
  SieveCounts total = parallel_reduce<SieveCounts>(range.size(), opts.threads, [&](std::uint64_t b, std::uint64_t e) {
    SieveCounts c;
    range.for_each(b, e, [&](const Poly& a) {
      if (!is_irreducible(a)) return;
      const SquareDivisors sd = square_divisors(eval(f.poly(), a));
      ++c.primes_total;
      if (sd.squarefree()) ++c.squarefree_hits;
      if (M > 0) {
        if (!sd.any_in(1, M - 1)) ++c.p_prime_count;
        if (sd.any_in(M, INT_MAX)) ++c.p_doubleprime_count;
      }
    });
    return c;
  });
  total.n = n;
  total.M = M;
  return total;
}

}  // namespace

bool SquareDivisors::any_in(int lo, int hi) const noexcept {
  if (lo > hi) return false;
  if (zero) return true;
  for (int d : degrees)
    if (lo <= d && d <= hi) return true;
  return false;
}

SquareDivisors square_divisors(const Poly& h) {
  SquareDivisors out;
  if (h.is_zero()) {
    out.zero = true;
    return out;
  }
  if (h.degree() < 2) return out;
  // P^2 | h iff P | gcd(h, h'), since every prime of F_q[t] is separable.
  const Poly g = gcd(h, derivative(h));
  if (g.degree() > 0) out.degrees = distinct_prime_degrees(g);
  return out;
}

SieveCounts& SieveCounts::operator+=(const SieveCounts& o) {
  primes_total += o.primes_total;
  squarefree_hits += o.squarefree_hits;
  p_prime_count += o.p_prime_count;
  p_doubleprime_count += o.p_doubleprime_count;
  bad_middle += o.bad_middle;
  bad_large += o.bad_large;
  return *this;
}

SieveCounts empirical_density(const Admissible& f, int n, const RunOptions& opts) {
  if (n < 1) throw InvalidArgument("degree n must be at least 1");
  return prime_scan(f, n, 0, opts);
}

SieveCounts sieve_split_counts(const Admissible& f, int n, int M, const RunOptions& opts) {
  if (M < 1 || M > n) throw InvalidArgument("sieve split needs 1 <= M <= n");
  return prime_scan(f, n, M, opts);
}

RemainderCounts remainder_counts(const Admissible& f, int n, int M, const RunOptions& opts) {
  if (n < 1 || M < 1) throw InvalidArgument("remainder counts need n, M >= 1");
  const MonicRange range = checked_range(f.poly().field(), n, opts);
  const int half = n / 2;
  struct Tally {
    std::uint64_t middle = 0, large = 0;
    Tally& operator+=(const Tally& o) {
      middle += o.middle;
      large += o.large;
      return *this;
    }
  };
  const Tally t = parallel_reduce<Tally>(range.size(), opts.threads, [&](std::uint64_t b, std::uint64_t e) {
    Tally c;
    range.for_each(b, e, [&](const Poly& a) {
      const SquareDivisors sd = square_divisors(eval(f.poly(), a));
      if (sd.any_in(M, half)) ++c.middle;
      if (sd.any_in(half + 1, INT_MAX)) ++c.large;
    });
    return c;
  });
  const double q = f.poly().field()->order();
  const double p = f.poly().field()->characteristic();
  RemainderCounts out;
  out.n = n;
  out.M = M;
  out.monic_total = range.size();
  out.bad_middle = t.middle;
  out.bad_large = t.large;
  out.middle_ratio = t.middle / (std::pow(q, n) / (M * std::pow(q, M)));
  out.large_ratio = t.large / std::pow(q, n * (p - 1) / p);
  return out;
}

WeilResult weil_check(int n, const Poly& Q, std::optional<double> slack, const RunOptions& opts) {
  if (Q.degree() < 1) throw InvalidArgument("Weil check needs deg Q >= 1");
  if (n < 1) throw InvalidArgument("degree n must be at least 1");
  const FieldPtr& field = Q.field();
  const std::uint32_t q = field->order();
  const int dq = Q.degree();
  const MonicRange range = checked_range(field, n, opts);

  // Residues mod Q are indexed by their coefficient codes read as base-q digits.
  std::uint64_t residues = 1;
  for (int i = 0; i < dq; ++i) residues *= q;
  const auto index_of = [q](const Poly& r) {
    std::uint64_t idx = 0;
    for (std::size_t i = r.size(); i-- > 0;) idx = idx * q + r[i];
    return idx;
  };
  struct Tally {
    std::vector<std::uint64_t> counts;
    Tally& operator+=(const Tally& o) {
      if (counts.empty()) counts.assign(o.counts.size(), 0);
      for (std::size_t i = 0; i < o.counts.size(); ++i) counts[i] += o.counts[i];
      return *this;
    }
  };
  const Tally tally = parallel_reduce<Tally>(range.size(), opts.threads, [&](std::uint64_t b, std::uint64_t e) {
    Tally t;
    t.counts.assign(residues, 0);
    range.for_each(b, e, [&](const Poly& a) {
      if (is_irreducible(a)) ++t.counts[index_of(a % Q)];
    });
    return t;
  });

  WeilResult out{n, Q, 0.0, 0.0, 0.0, 0.0, false, {}};
  const double phi = euler_phi(Q).convert_to<double>();
  out.main_term = std::pow(static_cast<double>(q), n) / (n * phi);
  out.slack = slack.value_or(default_weil_slack(dq));
  out.bound = out.slack * dq * std::pow(static_cast<double>(q), n / 2.0) / n;
  std::vector<Code> c(static_cast<std::size_t>(dq), 0);
  for (std::uint64_t i = 0; i < residues; ++i) {
    Poly A(field, c);
    if (!A.is_zero() && gcd(Q, A).is_one()) {
      const std::uint64_t cnt = tally.counts.empty() ? 0 : tally.counts[index_of(A)];
      const double dev = std::abs(static_cast<double>(cnt) - out.main_term);
      out.max_deviation = std::max(out.max_deviation, dev);
      out.rows.push_back({std::move(A), cnt, dev});
    }
    for (std::size_t k = 0; k < c.size() && ++c[k] == q; ++k) c[k] = 0;
  }
  out.pass = out.max_deviation <= out.bound;
  return out;
}

int default_cutoff(const Admissible& f, int n) {
  const double q = f.poly().field()->order();
  int M = n >= 9 ? static_cast<int>(std::floor(std::log(n / 9.0) / std::log(q))) : 0;
  M = std::max(M, 1);
  while (true) {
    const double qM = std::pow(q, M);
    const double bound = M > f.bad_degree() ? f.degree() : f.root_bound().convert_to<double>();
    if (bound / (qM * qM - qM) < 1.0) return M;
    ++M;
  }
}

ScanResult scan(const Admissible& f, int n_min, int n_max, std::optional<int> M, const RunOptions& opts) {
  if (n_min < 1 || n_max < n_min) throw InvalidArgument("scan needs 1 <= n_min <= n_max");
  ScanResult out;
  out.density = truncated_density(f, M.value_or(default_cutoff(f, n_max)), opts.local_budget);
  const double q = f.poly().field()->order();
  for (int n = n_min; n <= n_max; ++n) {
    const SieveCounts c = empirical_density(f, n, opts);
    ScanRow row;
    row.n = n;
    row.primes = c.primes_total;
    row.hits = c.squarefree_hits;
    row.fraction = c.primes_total ? static_cast<double>(c.squarefree_hits) / c.primes_total : 0.0;
    row.c_trunc = out.density.truncated_value;
    row.c_lower = out.density.lower;
    row.c_upper = out.density.upper;
    row.deviation = std::abs(row.fraction - row.c_trunc);
    row.log_ref = 1.0 / (std::log(static_cast<double>(n)) / std::log(q));
    out.rows.push_back(row);
  }
  return out;
}

std::vector<QScanRow> qscan(const std::string& expr, const std::vector<std::uint64_t>& qs, int n,
                            const RunOptions& opts) {
  std::vector<QScanRow> rows;
  for (std::uint64_t q : qs) {
    QScanRow row;
    row.q = q;
    try {
      const FieldPtr field = Field::of_order(q);
      const Admissible f(parse_bipoly(expr, field));
      const SieveCounts c = empirical_density(f, n, opts);
      row.status = "ok";
      row.primes = c.primes_total;
      row.hits = c.squarefree_hits;
      row.fraction = c.primes_total ? static_cast<double>(c.squarefree_hits) / c.primes_total : 0.0;
    } catch (const InvalidArgument& e) {
      row.status = std::string("skipped: ") + e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "n,primes,hits,fraction,c_trunc,c_lower,c_upper,deviation,log_ref\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.primes << ',' << r.hits << ',' << format_real(r.fraction) << ','
       << format_real(r.c_trunc) << ',' << format_real(r.c_lower) << ',' << format_real(r.c_upper) << ','
       << format_real(r.deviation) << ',' << format_real(r.log_ref) << '\n';
  }
  return os.str();
}

}  // namespace sqf
