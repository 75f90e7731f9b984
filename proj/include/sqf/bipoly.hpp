#pragma once

#include <vector>

#include "sqf/bigint.hpp"
#include "sqf/poly.hpp"

namespace sqf {

/// f in F_q[t][x], stored as its coefficients in x (index = power of x).
class BiPoly {
 public:
  explicit BiPoly(FieldPtr field) : field_(std::move(field)) {}
  BiPoly(FieldPtr field, std::vector<Poly> xcoeffs);
  /// Constant in x.
  static BiPoly from_poly(const Poly& c) { return BiPoly(c.field(), {c}); }
  static BiPoly x(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  /// deg_x f; kZeroDegree for f = 0.
  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Poly>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^i (zero beyond the degree).
  Poly operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Poly(field_); }
  /// w_f, the leading coefficient in x.
  const Poly& leading() const;

  BiPoly& operator+=(const BiPoly& b);
  BiPoly& operator-=(const BiPoly& b);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Poly& c, const BiPoly& f);
  friend bool operator==(const BiPoly& a, const BiPoly& b) noexcept { return a.c_ == b.c_; }

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Poly> c_;
};

BiPoly pow(const BiPoly& f, unsigned e);

/// f(a), Horner in F_q[t].
Poly eval(const BiPoly& f, const Poly& a);
/// f(a) mod m, reducing after every Horner step.
Poly eval_mod(const BiPoly& f, const Poly& a, const Poly& m);

enum class Var { x, t };
BiPoly derivative(const BiPoly& f, Var var);

/// Monic gcd of the x-coefficients. Throws on f = 0.
Poly content(const BiPoly& f);

/// Res_x(f, g) as the determinant of the Sylvester matrix, by fraction-free
/// (Bareiss) elimination over F_q[t]. Uses the actual x-degrees.
Poly resultant(const BiPoly& f, const BiPoly& g);
/// The same resultant through the subresultant remainder sequence.
Poly resultant_subresultant(const BiPoly& f, const BiPoly& g);

/// (-1)^{n(n-1)/2} Res_x(f, df/dx) with n = deg_x f; 1 when n = 1, 0 when
/// df/dx = 0. Throws on input constant in x.
Poly discriminant(const BiPoly& f);

/// Square-free content, df/dx != 0 and nonzero discriminant. When df/dx = 0,
/// f with a repeated factor is reported false and a square-free f throws
/// Inseparable. InvalidArgument on the zero polynomial or input constant in x.
bool is_admissible(const BiPoly& f);

/// An admissible f together with the quantities the local-count and density
/// layers keep asking for.
class Admissible {
 public:
  /// Throws InvalidArgument (or Inseparable) unless is_admissible(f).
  explicit Admissible(BiPoly f);

  const BiPoly& poly() const noexcept { return f_; }
  const BiPoly& dx() const noexcept { return dx_; }
  const Poly& discriminant() const noexcept { return disc_; }
  const Poly& leading() const noexcept { return f_.leading(); }
  int degree() const noexcept { return f_.degree(); }
  /// max{deg disc(f), deg w_f}: primes above this degree take the Hensel path.
  int bad_degree() const noexcept { return bad_degree_; }
  /// max{deg_x f, q^{2 bad_degree}}, the uniform bound on roots mod P^2.
  const BigInt& root_bound() const noexcept { return root_bound_; }

 private:
  BiPoly f_;
  BiPoly dx_;
  Poly disc_;
  int bad_degree_;
  BigInt root_bound_;
};

}  // namespace sqf
