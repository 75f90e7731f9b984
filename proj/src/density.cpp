#include "sqf/density.hpp"

#include <cmath>

#include "sqf/errors.hpp"
#include "sqf/local_counts.hpp"
#include "sqf/primes.hpp"

namespace sqf {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Bound on rho(P^2) for primes of degree i.
double root_bound_at(const Admissible& f, int i) {
  if (i > f.bad_degree()) return static_cast<double>(f.degree());
  return f.root_bound().convert_to<double>();
}

double x_max_at(const Admissible& f, int M) {
  const double qM = std::pow(static_cast<double>(f.poly().field()->order()), M);
  return root_bound_at(f, M) / (qM * qM - qM);
}

}  // namespace

double tail_sum(const Admissible& f, int M) {
  const double q = f.poly().field()->order();
  CompensatedSum T;
  const int last = M + kTailExplicitTerms;
  for (int i = M; i < last; ++i) T.add(root_bound_at(f, i) / (i * (std::pow(q, i) - 1.0)));
  // sum_{i >= last} b / (i (q^i - 1)) <= b q / (last (q - 1) (q^last - 1))
  const double ql = std::pow(q, last);
  T.add(root_bound_at(f, last) * q / (last * (q - 1.0) * (ql - 1.0)));
  return T.value();
}

DensityEstimate truncated_density(const Admissible& f, int M, std::uint64_t budget) {
  if (M < 1) throw InvalidArgument("cutoff M must be at least 1");
  DensityEstimate est;
  est.M = M;
  est.B = f.root_bound();

  CompensatedSum log_sum;
  for (const auto& P : primes_up_to(f.poly().field(), M - 1)) {
    const std::uint64_t r = rho(f, P, budget);
    const BigInt norm = P.poly().norm();
    const BigInt denom = norm * norm - norm;
    if (BigInt(r) == denom) {
      if (est.positive) est.culprit = P;
      est.positive = false;
      continue;
    }
    if (r == 0) continue;
    const Rational x(BigInt(r), denom);
    log_sum.add(std::log1p(-x.convert_to<double>()));
  }

  // A vanishing factor settles c = 0 whatever the tail does.
  if (!est.positive) {
    est.truncated_value = est.lower = est.upper = 0.0;
    est.tail = 0.0;
    return est;
  }
  const double x_max = x_max_at(f, M);
  if (!(x_max < 1.0)) throw InvalidArgument("density tail is not certifiable at M = " + std::to_string(M) + "; raise M");
  est.truncated_value = std::exp(log_sum.value());
  est.upper = est.truncated_value;
  est.tail = tail_sum(f, M) / (1.0 - x_max);
  est.lower = est.truncated_value * std::exp(-est.tail);
  return est;
}

PositivityResult positivity_check(const Admissible& f, std::uint64_t budget) {
  const auto& field = f.poly().field();
  const int bad = f.bad_degree();
  {
    std::uint64_t n = 1;
    for (int i = 0; i < 2 * bad; ++i) {
      if (n > budget / field->order()) throw BudgetExceeded("positivity scan exceeds the budget");
      n *= field->order();
    }
  }
  PositivityResult out;
  const std::uint32_t q = field->order();
  for (const auto& P : primes_up_to(field, bad)) {
    const Poly& p = P.poly();
    const Poly m = p * p;
    PositivityRecord rec{P, std::nullopt};
    std::vector<Code> c(2 * static_cast<std::size_t>(P.degree()), 0);
    while (true) {
      Poly C(field, c);
      if (!(C % p).is_zero() && !eval_mod(f.poly(), C, m).is_zero()) {
        rec.witness = std::move(C);
        break;
      }
      std::size_t k = 0;
      while (k < c.size() && ++c[k] == q) c[k++] = 0;
      if (k == c.size()) break;
    }
    if (!rec.witness) {
      if (out.positive) out.culprit = P;
      out.positive = false;
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace sqf
