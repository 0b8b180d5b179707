#include "skewroos/skew_poly.hpp"

#include <algorithm>
#include <string>

#include "skewroos/error.hpp"
#include "skewroos/tower.hpp"

namespace skewroos {
namespace {

constexpr std::string_view kModule = "skew-poly";

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

void require_same_ring(const SkewPoly& f, const SkewPoly& g) {
  if (f.field() != g.field() || f.twist() != g.twist()) fail(ErrorCode::RingMismatch, "operands live in different rings");
}

}  // namespace

SkewPoly::SkewPoly(FieldPtr field, std::int64_t twist, std::vector<Elem> coeffs)
    : field_(std::move(field)), twist_(twist), c_(std::move(coeffs)) {
  for (auto c : c_) {
    if (!field_->contains(c)) fail(ErrorCode::ElementNotInField, "coefficient outside the coefficient field");
  }
  normalize();
}

void SkewPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly SkewPoly::constant(FieldPtr field, Elem c, std::int64_t twist) { return {std::move(field), twist, {c}}; }

SkewPoly SkewPoly::linear(FieldPtr field, Elem a, std::int64_t twist) {
  const Elem na = field->neg(a);
  const Elem one = field->one();
  return {std::move(field), twist, {na, one}};
}

SkewPoly SkewPoly::monomial(FieldPtr field, Elem c, unsigned k, std::int64_t twist) {
  std::vector<Elem> v(k + 1);
  v[k] = c;
  return {std::move(field), twist, std::move(v)};
}

SkewPoly SkewPoly::x_pow_minus_one(FieldPtr field, unsigned n, std::int64_t twist) {
  std::vector<Elem> v(n + 1);
  v[0] = field->neg(field->one());
  v[n] = field->add(v[n], field->one());
  return {std::move(field), twist, std::move(v)};
}

Elem SkewPoly::twist_pow(Elem a, std::int64_t i) const { return field_->frobenius(a, twist_ * i); }

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f, g);
  const Field& k = *f.field();
  std::vector<Elem> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.add(f.coeff(i), g.coeff(i));
  return {f.field(), f.twist(), std::move(c)};
}

SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f, g);
  const Field& k = *f.field();
  std::vector<Elem> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.sub(f.coeff(i), g.coeff(i));
  return {f.field(), f.twist(), std::move(c)};
}

SkewPoly mul(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) return SkewPoly::zero(f.field(), f.twist());
  const Field& k = *f.field();
  std::vector<Elem> c(f.coeffs().size() + g.coeffs().size() - 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Elem fi = f.coeffs()[i];
    if (fi.is_zero()) continue;
    // f_i x^i g_j x^j = f_i theta^(s i)(g_j) x^(i+j)
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      c[i + j] = k.add(c[i + j], k.mul(fi, f.twist_pow(g.coeffs()[j], static_cast<std::int64_t>(i))));
    }
  }
  return {f.field(), f.twist(), std::move(c)};
}

SkewPoly scalar_left(Elem s, const SkewPoly& f) {
  const Field& k = *f.field();
  std::vector<Elem> c = f.coeffs();
  for (auto& x : c) x = k.mul(s, x);
  return {f.field(), f.twist(), std::move(c)};
}

SkewPoly monic(const SkewPoly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scalar_left(f.field()->inv(f.lead()), f);
}

DivMod right_divmod(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f, g);
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "right division by the zero polynomial");
  const Field& k = *f.field();
  std::vector<Elem> r = f.coeffs();
  const int dg = g.degree();
  const int df = f.degree();
  std::vector<Elem> q(df >= dg ? static_cast<std::size_t>(df - dg + 1) : 0);
  for (int top = df; top >= dg; --top) {
    const Elem lr = r[static_cast<std::size_t>(top)];
    if (lr.is_zero()) continue;
    const int d = top - dg;
    // (c x^d) g has leading coefficient c theta^(s d)(lead g).
    const Elem c = k.div(lr, g.twist_pow(g.lead(), d));
    q[static_cast<std::size_t>(d)] = c;
    for (int j = 0; j <= dg; ++j) {
      const Elem t = k.mul(c, g.twist_pow(g.coeffs()[static_cast<std::size_t>(j)], d));
      r[static_cast<std::size_t>(d + j)] = k.sub(r[static_cast<std::size_t>(d + j)], t);
    }
  }
  return {SkewPoly(f.field(), f.twist(), std::move(q)), SkewPoly(f.field(), f.twist(), std::move(r))};
}

DivMod left_divmod(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f, g);
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "left division by the zero polynomial");
  const Field& k = *f.field();
  std::vector<Elem> r = f.coeffs();
  const int dg = g.degree();
  const int df = f.degree();
  std::vector<Elem> q(df >= dg ? static_cast<std::size_t>(df - dg + 1) : 0);
  const Elem inv_lead = k.inv(g.lead());
  for (int top = df; top >= dg; --top) {
    const Elem lr = r[static_cast<std::size_t>(top)];
    if (lr.is_zero()) continue;
    const int d = top - dg;
    // g (c x^d) has leading coefficient lead(g) theta^(s dg)(c).
    const Elem c = g.twist_pow(k.mul(inv_lead, lr), -dg);
    q[static_cast<std::size_t>(d)] = c;
    for (int j = 0; j <= dg; ++j) {
      const Elem t = k.mul(g.coeffs()[static_cast<std::size_t>(j)], g.twist_pow(c, j));
      r[static_cast<std::size_t>(d + j)] = k.sub(r[static_cast<std::size_t>(d + j)], t);
    }
  }
  return {SkewPoly(f.field(), f.twist(), std::move(q)), SkewPoly(f.field(), f.twist(), std::move(r))};
}

bool right_divides(const SkewPoly& g, const SkewPoly& f) { return right_divmod(f, g).remainder.is_zero(); }

Elem truncated_norm(const Field& field, std::int64_t twist, std::int64_t i, Elem a) {
  if (i < 0) fail(ErrorCode::InvalidInput, "truncated norm index must be nonnegative");
  Elem r = field.one();
  for (std::int64_t j = 0; j < i; ++j) r = field.mul(r, field.frobenius(a, twist * j));
  return r;
}

Elem eval_right(const SkewPoly& f, Elem a) {
  const Field& k = *f.field();
  if (!k.contains(a)) fail(ErrorCode::ElementNotInField, "evaluation point outside the coefficient field");
  Elem sum{};
  Elem norm = k.one();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    sum = k.add(sum, k.mul(f.coeffs()[i], norm));
    norm = k.mul(norm, f.twist_pow(a, static_cast<std::int64_t>(i)));
  }
  return sum;
}

SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f, g);
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::InvalidInput, "gcrd of two zero polynomials");
  SkewPoly a = f;
  SkewPoly b = g;
  while (!b.is_zero()) {
    SkewPoly r = right_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

LclmCofactors lclm_with_cofactors(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) fail(ErrorCode::InvalidInput, "lclm of a zero polynomial");
  const auto one = SkewPoly::constant(f.field(), f.field()->one(), f.twist());
  const auto zero = SkewPoly::zero(f.field(), f.twist());
  // Invariant: r_i = u_i f + v_i g.
  SkewPoly r0 = f, r1 = g;
  SkewPoly u0 = one, u1 = zero;
  SkewPoly v0 = zero, v1 = one;
  while (!r1.is_zero()) {
    auto [q, r] = right_divmod(r0, r1);
    SkewPoly u2 = u0 - q * u1;
    SkewPoly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  // u1 f + v1 g = 0, so u1 f = -v1 g is a common left multiple of minimal degree.
  const SkewPoly l = u1 * f;
  const Elem inv = f.field()->inv(l.lead());
  const SkewPoly cf = scalar_left(inv, u1);
  const SkewPoly cg = scalar_left(f.field()->neg(inv), v1);
  return {scalar_left(inv, l), cf, cg};
}

SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) { return lclm_with_cofactors(f, g).lclm; }

SkewPoly lclm_many(std::span<const SkewPoly> polys) {
  if (polys.empty()) fail(ErrorCode::InvalidInput, "lclm_many needs at least one polynomial");
  SkewPoly acc = monic(polys.front());
  if (acc.is_zero()) fail(ErrorCode::InvalidInput, "lclm of a zero polynomial");
  for (std::size_t i = 1; i < polys.size(); ++i) acc = lclm(acc, polys[i]);
  return acc;
}

SkewPoly promote(const Tower& tower, const SkewPoly& f) {
  if (f.field() != tower.f()) fail(ErrorCode::RingMismatch, "promote expects a polynomial over F");
  std::vector<Elem> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = tower.embed(f.coeffs()[i]);
  return {tower.e(), f.twist(), std::move(c)};
}

SkewPoly pull_back(const Tower& tower, const SkewPoly& f) {
  if (f.field() != tower.e()) fail(ErrorCode::RingMismatch, "pull_back expects a polynomial over E");
  std::vector<Elem> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto x = tower.pullback(f.coeffs()[i]);
    if (!x) {
      throw Error(ErrorCode::CoefficientOutsideF, kModule,
                  "coefficient of x^" + std::to_string(i) + " does not lie in phi(F)");
    }
    c[i] = *x;
  }
  return {tower.f(), f.twist(), std::move(c)};
}

}  // namespace skewroos
