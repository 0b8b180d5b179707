#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "skewroos/field.hpp"

namespace skewroos {

class Tower;

/// Element of field[x; theta^twist], where theta is the base-order Frobenius
/// of `field` and the commutation rule is x * a = theta^twist(a) * x.
/// Coefficients are ascending and carry no trailing zeros; the zero
/// polynomial has no coefficients and degree -1.
class SkewPoly {
 public:
  SkewPoly() = default;
  SkewPoly(FieldPtr field, std::int64_t twist, std::vector<Elem> coeffs);

  static SkewPoly zero(FieldPtr field, std::int64_t twist = 1) { return {std::move(field), twist, {}}; }
  static SkewPoly constant(FieldPtr field, Elem c, std::int64_t twist = 1);
  /// x - a
  static SkewPoly linear(FieldPtr field, Elem a, std::int64_t twist = 1);
  /// c * x^k
  static SkewPoly monomial(FieldPtr field, Elem c, unsigned k, std::int64_t twist = 1);
  /// x^n - 1
  static SkewPoly x_pow_minus_one(FieldPtr field, unsigned n, std::int64_t twist = 1);

  const FieldPtr& field() const noexcept { return field_; }
  std::int64_t twist() const noexcept { return twist_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == Elem{1}; }
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{}; }
  Elem lead() const noexcept { return c_.empty() ? Elem{} : c_.back(); }

  /// Applies theta^(twist*i).
  Elem twist_pow(Elem a, std::int64_t i) const;

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.field_ == b.field_ && a.twist_ == b.twist_ && a.c_ == b.c_;
  }

 private:
  void normalize();

  FieldPtr field_;
  std::int64_t twist_ = 1;
  std::vector<Elem> c_;
};

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g);
SkewPoly operator-(const SkewPoly& f, const SkewPoly& g);
/// Twisted product.
SkewPoly mul(const SkewPoly& f, const SkewPoly& g);
inline SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) { return mul(f, g); }
/// c * f (scalar on the left).
SkewPoly scalar_left(Elem c, const SkewPoly& f);
/// Left multiple lead(f)^{-1} * f; zero stays zero.
SkewPoly monic(const SkewPoly& f);

struct DivMod {
  SkewPoly quotient;
  SkewPoly remainder;
};
/// f = quotient * g + remainder, deg remainder < deg g.
DivMod right_divmod(const SkewPoly& f, const SkewPoly& g);
/// f = g * quotient + remainder, deg remainder < deg g.
DivMod left_divmod(const SkewPoly& f, const SkewPoly& g);
/// g right-divides f.
bool right_divides(const SkewPoly& g, const SkewPoly& f);

/// N_i(a) = prod_{j<i} theta^(twist*j)(a).
Elem truncated_norm(const Field& field, std::int64_t twist, std::int64_t i, Elem a);
/// f(a) = sum_i f_i N_i(a), the remainder of f under right division by x - a.
Elem eval_right(const SkewPoly& f, Elem a);

SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g);
SkewPoly lclm(const SkewPoly& f, const SkewPoly& g);
/// Monic pairwise fold; the list must be nonempty.
SkewPoly lclm_many(std::span<const SkewPoly> polys);

/// lclm(f, g) with left cofactors: cofactor_f * f == lclm == cofactor_g * g.
struct LclmCofactors {
  SkewPoly lclm;
  SkewPoly cofactor_f;
  SkewPoly cofactor_g;
};
LclmCofactors lclm_with_cofactors(const SkewPoly& f, const SkewPoly& g);

/// Coefficient-wise phi: F[x; sigma] -> E[x; theta].
SkewPoly promote(const Tower& tower, const SkewPoly& f);
/// Coefficient-wise phi^{-1}; throws CoefficientOutsideF when a coefficient is not in phi(F).
SkewPoly pull_back(const Tower& tower, const SkewPoly& f);

}  // namespace skewroos
