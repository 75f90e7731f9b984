#include "sqf/bipoly.hpp"

#include <algorithm>

#include "sqf/errors.hpp"

namespace sqf {

namespace {

Poly exact_div(const Poly& a, const Poly& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw ContractViolation("inexact division in fraction-free elimination");
  return quot;
}

BiPoly exact_div(const BiPoly& f, const Poly& c) {
  std::vector<Poly> out;
  out.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) out.push_back(exact_div(a, c));
  return BiPoly(f.field(), std::move(out));
}

// lc(B)^{deg A - deg B + 1} A mod B, computed without division.
BiPoly pseudo_remainder(BiPoly A, const BiPoly& B) {
  const int db = B.degree();
  const Poly& lb = B.leading();
  int steps = A.degree() - db + 1;
  while (!A.is_zero() && A.degree() >= db) {
    const int shift = A.degree() - db;
    std::vector<Poly> xs(static_cast<std::size_t>(shift) + 1, Poly(A.field()));
    xs[shift] = A.leading();
    A = lb * A - BiPoly(A.field(), std::move(xs)) * B;
    --steps;
  }
  for (; steps > 0; --steps) A = lb * A;
  return A;
}

// g^a / h^b, exact.
Poly ratio_of_powers(const Poly& g, unsigned a, const Poly& h, unsigned b) {
  return exact_div(pow(g, a), pow(h, b));
}

}  // namespace

BiPoly::BiPoly(FieldPtr field, std::vector<Poly> xcoeffs) : field_(std::move(field)), c_(std::move(xcoeffs)) {
  for (const auto& c : c_) require_same_field(field_, c.field());
  normalize();
}

BiPoly BiPoly::x(FieldPtr field) {
  Poly one = Poly::one(field);
  return BiPoly(field, {Poly(field), one});
}

const Poly& BiPoly::leading() const {
  if (c_.empty()) throw InvalidArgument("leading coefficient of zero");
  return c_.back();
}

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& b) {
  require_same_field(field_, b.field_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), Poly(field_));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& b) {
  require_same_field(field_, b.field_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), Poly(field_));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  normalize();
  return *this;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return BiPoly(a.field_);
  std::vector<Poly> r(a.c_.size() + b.c_.size() - 1, Poly(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return BiPoly(a.field_, std::move(r));
}

BiPoly operator*(const Poly& c, const BiPoly& f) {
  std::vector<Poly> r;
  r.reserve(f.c_.size());
  for (const auto& a : f.c_) r.push_back(c * a);
  return BiPoly(f.field_, std::move(r));
}

BiPoly pow(const BiPoly& f, unsigned e) {
  BiPoly r = BiPoly::from_poly(Poly::one(f.field())), b = f;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly eval(const BiPoly& f, const Poly& a) {
  Poly r(f.field());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = r * a + c[i];
  return r;
}

Poly eval_mod(const BiPoly& f, const Poly& a, const Poly& m) {
  Poly r(f.field());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = (mulmod(r, a, m) + c[i]) % m;
  return r;
}

BiPoly derivative(const BiPoly& f, Var var) {
  const auto& F = f.field();
  std::vector<Poly> out;
  const auto& c = f.coeffs();
  if (var == Var::x) {
    for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i].scaled(F->from_int(static_cast<std::int64_t>(i))));
  } else {
    for (const auto& a : c) out.push_back(derivative(a));
  }
  return BiPoly(F, std::move(out));
}

Poly content(const BiPoly& f) {
  if (f.is_zero()) throw InvalidArgument("content of the zero polynomial");
  Poly g(f.field());
  for (const auto& c : f.coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly resultant(const BiPoly& f, const BiPoly& g) {
  require_same_field(f.field(), g.field());
  const auto& F = f.field();
  if (f.is_zero() || g.is_zero()) return Poly(F);
  const int m = f.degree(), n = g.degree();
  const int N = m + n;
  if (N == 0) return Poly::one(F);

  std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N, Poly(F)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) M[i][i + k] = f[m - k];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) M[n + i][i + k] = g[n - k];

  bool negate = false;
  Poly prev = Poly::one(F);
  for (int k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      int piv = k + 1;
      while (piv < N && M[piv][k].is_zero()) ++piv;
      if (piv == N) return Poly(F);
      std::swap(M[k], M[piv]);
      negate = !negate;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = Poly(F);
    }
    prev = M[k][k];
  }
  Poly det = M[N - 1][N - 1];
  return negate ? -det : det;
}

Poly resultant_subresultant(const BiPoly& f, const BiPoly& g) {
  require_same_field(f.field(), g.field());
  const auto& F = f.field();
  if (f.is_zero() || g.is_zero()) return Poly(F);
  BiPoly A = f, B = g;
  bool negate = false;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) negate = true;
  }
  if (B.degree() == 0) {
    Poly r = pow(B[0], static_cast<unsigned>(A.degree()));
    return negate ? -r : r;
  }
  const Poly a = content(A), b = content(B);
  A = exact_div(A, a);
  B = exact_div(B, b);
  const Poly scale = pow(a, static_cast<unsigned>(B.degree())) * pow(b, static_cast<unsigned>(A.degree()));
  Poly gg = Poly::one(F), h = Poly::one(F);
  while (true) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) negate = !negate;
    BiPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = exact_div(R, gg * pow(h, static_cast<unsigned>(delta)));
    gg = A.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      h = ratio_of_powers(gg, static_cast<unsigned>(delta), h, static_cast<unsigned>(delta - 1));
    }
    if (B.is_zero()) return Poly(F);
    if (B.degree() == 0) break;
  }
  const unsigned da = static_cast<unsigned>(A.degree());
  h = ratio_of_powers(B[0], da, h, da - 1);
  Poly r = scale * h;
  return negate ? -r : r;
}

Poly discriminant(const BiPoly& f) {
  const int n = f.degree();
  if (n < 1) throw InvalidArgument("discriminant of a polynomial constant in x");
  if (n == 1) return Poly::one(f.field());
  const BiPoly dx = derivative(f, Var::x);
  if (dx.is_zero()) return Poly(f.field());
  Poly r = resultant(f, dx);
  return (static_cast<long>(n) * (n - 1) / 2) % 2 == 1 ? -r : r;
}

bool is_admissible(const BiPoly& f) {
  if (f.is_zero()) throw InvalidArgument("zero polynomial");
  if (f.degree() < 1) throw InvalidArgument("polynomial is constant in x");
  if (!is_squarefree(content(f))) return false;
  if (derivative(f, Var::x).is_zero()) {
    // f = g(x^p). A factor h dividing f once and also f_t would need
    // h_t = h_x = 0, i.e. be a p-th power; so with f_t != 0 a repeated factor
    // shows up exactly as a common factor of f and f_t.
    const BiPoly ft = derivative(f, Var::t);
    if (ft.is_zero() || resultant(f, ft).is_zero()) return false;
    throw Inseparable();
  }
  return !discriminant(f).is_zero();
}

Admissible::Admissible(BiPoly f) : f_(std::move(f)), dx_(f_.field()), disc_(f_.field()) {
  if (!is_admissible(f_)) throw InvalidArgument("polynomial is not square-free (inadmissible)");
  dx_ = derivative(f_, Var::x);
  disc_ = sqf::discriminant(f_);
  bad_degree_ = std::max(disc_.degree(), f_.leading().degree());
  const std::uint64_t q = f_.field()->order();
  root_bound_ = std::max(BigInt(f_.degree()), ipow(q, 2u * static_cast<unsigned>(bad_degree_)));
}

}  // namespace sqf
