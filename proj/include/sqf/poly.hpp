#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "sqf/bigint.hpp"
#include "sqf/field.hpp"

namespace sqf {

/// Degree reported for the zero polynomial; below every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// An element of F_q[t]. Dense, low-to-high, no trailing zeros.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Code> coeffs);

  static Poly constant(FieldPtr field, Code c) { return Poly(std::move(field), std::vector<Code>{c}); }
  static Poly one(FieldPtr field) { return constant(std::move(field), 1); }
  /// c * t^k
  static Poly monomial(FieldPtr field, Code c, int k);
  static Poly t(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const noexcept { return field_; }
  const Field& F() const noexcept { return *field_; }

  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Zero or a nonzero constant.
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Code lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Code operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  FieldElement coeff(std::size_t i) const { return {field_, (*this)[i]}; }
  std::span<const Code> coeffs() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }

  /// |a| = q^deg a, |0| = 0.
  BigInt norm() const;

  Poly scaled(Code c) const;
  Poly monic() const;
  /// a * t^k
  Poly shifted(int k) const;

  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_; }
  /// Odometer-compatible total order: by degree, then coefficients from the top.
  friend bool operator<(const Poly& a, const Poly& b) noexcept;

  /// Mutable access for hot loops; callers must call normalize() afterwards.
  std::vector<Code>& raw() noexcept { return c_; }
  void normalize() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

 private:
  FieldPtr field_;
  std::vector<Code> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Throws InvalidArgument when b is zero.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// True when b divides a exactly.
bool divides(const Poly& b, const Poly& a);

Poly derivative(const Poly& a);
Poly pow(const Poly& a, unsigned e);

/// Monic gcd; throws on gcd(0, 0).
Poly gcd(const Poly& a, const Poly& b);

/// g = s*a + t*b with g monic.
struct Xgcd {
  Poly g, s, t;
};
Xgcd xgcd(const Poly& a, const Poly& b);

/// a^{-1} mod m; throws InvalidArgument when a is not a unit mod m.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly modpow(const Poly& base, const BigInt& e, const Poly& m);
Poly modpow(const Poly& base, std::uint64_t e, const Poly& m);

/// Rabin's irreducibility test. Throws on constant input.
bool is_irreducible(const Poly& a);
/// Throws on zero input.
bool is_squarefree(const Poly& a);

/// A monic irreducible polynomial.
class PrimeMod {
 public:
  /// Checks monicity and irreducibility; throws InvalidArgument otherwise.
  static PrimeMod certify(Poly p);
  /// Skips the check; for enumeration code that already ran it.
  static PrimeMod trusted(Poly p) { return PrimeMod(std::move(p)); }

  const Poly& poly() const noexcept { return p_; }
  int degree() const noexcept { return p_.degree(); }
  friend bool operator==(const PrimeMod& a, const PrimeMod& b) noexcept { return a.p_ == b.p_; }

 private:
  explicit PrimeMod(Poly p) : p_(std::move(p)) {}
  Poly p_;
};

struct Factorization {
  Code unit = 0;
  std::vector<std::pair<PrimeMod, int>> factors;  // sorted by (degree, odometer order)
};

/// Trial division by monic polynomials of increasing degree.
Factorization factorize(const Poly& a);

/// Degrees of the distinct prime factors of a (ascending, no repeats), by
/// distinct-degree splitting. Throws on zero.
std::vector<int> distinct_prime_degrees(const Poly& a);

/// |(F_q[t]/Q)^*| from the factorization.
BigInt euler_phi(const Poly& Q);

/// The p components (a_0, ..., a_{p-1}) with a = sum_j t^j a_j^p.
std::vector<Poly> frobenius_decompose(const Poly& a);
Poly frobenius_recompose(std::span<const Poly> parts);

}  // namespace sqf
