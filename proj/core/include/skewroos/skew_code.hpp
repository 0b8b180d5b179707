#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "skewroos/linalg.hpp"
#include "skewroos/skew_poly.hpp"
#include "skewroos/tower.hpp"

namespace skewroos {

/// Sorted subset of C_n = {0, ..., n-1} with n = mu * nu.
class DefiningSet {
 public:
  DefiningSet() = default;
  /// Throws InvalidInput for out-of-range elements or when mu does not divide n.
  DefiningSet(unsigned n, unsigned mu, std::vector<unsigned> elements);

  unsigned n() const noexcept { return n_; }
  unsigned mu() const noexcept { return mu_; }
  unsigned nu() const noexcept { return mu_ == 0 ? 0 : n_ / mu_; }
  const std::vector<unsigned>& elements() const noexcept { return t_; }
  std::size_t size() const noexcept { return t_.size(); }
  bool empty() const noexcept { return t_.empty(); }
  bool full() const noexcept { return t_.size() == n_; }
  bool contains(std::int64_t i) const noexcept;

  /// i in T implies i + mu mod n in T.
  bool is_mu_closed() const;
  /// T^F = {t mod mu : t in T}, sorted.
  std::vector<unsigned> restricted() const;

  friend bool operator==(const DefiningSet&, const DefiningSet&) = default;

 private:
  unsigned n_ = 0;
  unsigned mu_ = 1;
  std::vector<unsigned> t_;
  std::vector<bool> member_;
};

/// Smallest mu-closed superset.
DefiningSet mu_closure(const DefiningSet& t);

/// The code over E cut out by the roots theta^t(beta), t in T: the left
/// kernel of the alpha-column matrix. Built for any T; for mu-closed T it
/// is the extension of the matching code over F.
class ExtensionCode {
 public:
  static ExtensionCode from_set(TowerPtr tower, Elem alpha, DefiningSet t);

  const TowerPtr& tower() const noexcept { return tower_; }
  Elem alpha() const noexcept { return alpha_; }
  Elem beta() const noexcept { return beta_; }
  const DefiningSet& defining_set() const noexcept { return t_; }
  /// Monic generator in E[x; theta].
  const SkewPoly& generator() const noexcept { return g_; }
  unsigned n() const noexcept { return t_.n(); }
  unsigned k() const noexcept { return n() - static_cast<unsigned>(g_.degree()); }

  /// k x n over E; row i holds the coefficients of x^i g.
  const Matrix& generator_matrix() const noexcept { return gen_; }
  /// n x |T| over E with entry (i, j) = theta^i(theta^{t_j}(alpha)).
  const Matrix& alpha_columns() const noexcept { return alpha_cols_; }
  /// n x |T| over E with entry (i, j) = N_i(theta^{t_j}(beta)).
  const Matrix& norm_matrix() const noexcept { return norm_; }

  bool is_codeword(std::span<const Elem> v) const;

 private:
  TowerPtr tower_;
  Elem alpha_{};
  Elem beta_{};
  DefiningSet t_;
  SkewPoly g_;
  Matrix gen_;
  Matrix alpha_cols_;
  Matrix norm_;
};

/// A skew cyclic code R g in F^n with g in F[x; sigma] right-dividing x^n - 1.
class SkewCyclicCode {
 public:
  /// g = lclm{x - theta^i(beta) : i in T}, pulled back to F.
  /// Throws NotNormal, NotMuClosed (when !auto_close and T is not closed),
  /// and CoefficientOutsideF as an invariant violation.
  static SkewCyclicCode from_set(TowerPtr tower, Elem alpha, const DefiningSet& t, bool auto_close = true);
  /// Wraps a given monic right divisor g of x^n - 1 in F[x; sigma]; throws NotADivisor.
  static SkewCyclicCode from_generator(TowerPtr tower, Elem alpha, const SkewPoly& g);

  const TowerPtr& tower() const noexcept { return tower_; }
  Elem alpha() const noexcept { return ext_.alpha(); }
  Elem beta() const noexcept { return ext_.beta(); }
  const DefiningSet& defining_set() const noexcept { return ext_.defining_set(); }
  /// Generator over F.
  const SkewPoly& generator() const noexcept { return g_; }
  unsigned n() const noexcept { return ext_.n(); }
  unsigned k() const noexcept { return ext_.k(); }
  /// The code over E with the same defining set.
  const ExtensionCode& extension() const noexcept { return ext_; }

  /// k x n over F; row i holds the coefficients of x^i g.
  const Matrix& generator_matrix() const noexcept { return gen_; }
  /// (n - k) x n over F with G H^T = 0.
  const Matrix& parity_check() const noexcept { return parity_; }

  /// Coefficients of (sum m_i x^i) g; requires |m| = k.
  std::vector<Elem> encode(std::span<const Elem> m) const;
  /// g right-divides v(x) in F[x; sigma]; requires |v| = n.
  bool is_codeword(std::span<const Elem> v) const;
  /// Membership in the extension code for v over E.
  bool is_codeword_e(std::span<const Elem> v) const { return ext_.is_codeword(v); }

 private:
  SkewCyclicCode(TowerPtr tower, SkewPoly g, ExtensionCode ext);

  TowerPtr tower_;
  SkewPoly g_;
  ExtensionCode ext_;
  Matrix gen_;
  Matrix parity_;
};

/// T_beta(g) = {i : g(theta^i(beta)) = 0}; g over F or E. Throws NotADivisor
/// unless g right-divides x^n - 1.
DefiningSet defining_set_of(const Tower& tower, Elem alpha, const SkewPoly& g);

/// k x n matrix with row i the coefficients of x^i g (deg g = n - k).
Matrix shifted_rows(const SkewPoly& g, unsigned n);

/// Skew Reed-Solomon code over E: roots theta^{b+i}(beta), 0 <= i <= delta - 2.
ExtensionCode skew_rs(TowerPtr tower, Elem alpha, std::int64_t b, unsigned delta);

/// k x N matrix over E with rows tau^i(v), tau = theta^step. Throws
/// RankDeficient unless the entries of v are K-independent, and InvalidInput
/// for k > N or a step not coprime to n.
Matrix gabidulin_generator(const Tower& tower, std::span<const Elem> v, unsigned k, std::int64_t step = 1);

/// (theta^i(alpha))_{0 <= i < n}.
std::vector<Elem> orbit_vector(const Tower& tower, Elem alpha);

}  // namespace skewroos
