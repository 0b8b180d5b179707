#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "skewroos/field.hpp"
#include "skewroos/linalg.hpp"

namespace skewroos {

/// Static description of one field of a tower.
struct FieldSpec {
  std::uint64_t characteristic = 0;
  std::uint64_t base_order = 0;
  unsigned degree = 0;
  std::vector<std::uint64_t> modulus;  // ascending, monic, base codes
};
FieldSpec describe(const Field& field);

/// Inputs for `Tower::build`. Omitted moduli default to the lexicographically
/// smallest primitive polynomial.
struct TowerParams {
  std::uint64_t q = 2;
  unsigned mu = 1;
  unsigned nu = 1;
  std::optional<std::vector<std::uint64_t>> mod_f;
  std::optional<std::vector<std::uint64_t>> mod_e;
  /// K's modulus over GF(p) when q is not prime.
  std::optional<std::vector<std::uint64_t>> mod_k;
  std::optional<std::uint64_t> embed_hint;
};

/// The chain K = GF(q) ⊆ F = GF(q^mu) ⊆ E = GF(q^n), n = mu * nu, with theta
/// the q-power Frobenius on E (order n, fixed field K) and an explicit
/// embedding phi: F -> E sending F's generator a to a root of F's modulus.
///
/// Elements of K are K codes; they are also valid F and E codes (coordinate 0).
class Tower {
 public:
  static Tower build(const TowerParams& params);

  const FieldPtr& k() const noexcept { return k_; }
  const FieldPtr& f() const noexcept { return f_; }
  const FieldPtr& e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return k_->order(); }
  unsigned mu() const noexcept { return mu_; }
  unsigned nu() const noexcept { return nu_; }
  unsigned n() const noexcept { return mu_ * nu_; }

  /// phi(a) and its exponent j with phi(a) = gamma^j.
  Elem embedding_image() const noexcept { return phi_a_; }
  std::uint64_t embedding_exponent() const noexcept { return phi_exp_; }

  Elem embed(Elem x) const;
  /// phi^{-1}(y) when y lies in phi(F).
  std::optional<Elem> pullback(Elem y) const;
  bool in_subfield(Elem y) const { return pullback(y).has_value(); }

  /// theta^i on E (i reduced mod n).
  Elem apply_theta(std::int64_t i, Elem x) const;
  /// sigma^i on F (i reduced mod mu).
  Elem apply_sigma(std::int64_t i, Elem x) const;

  bool is_normal(Elem alpha) const;
  Elem find_normal() const;
  /// Some alpha != 0 with theta(alpha) / alpha = beta; throws NoSolution.
  Elem hilbert90_solve(Elem beta) const;
  /// theta(alpha) * alpha^{-1}.
  Elem beta_of(Elem alpha) const;

  /// Tr_{E/F}(x) as an element of F.
  Elem trace_to_f(Elem x) const;
  /// Tr_{E/K}(x) as a K code.
  Elem trace_to_k(Elem x) const;
  /// N_{E/K}(x) = prod_{j<n} theta^j(x) as a K code.
  Elem norm_to_k(Elem x) const;

  /// n x n matrix over K whose row i is the K-coordinate vector of theta^i(alpha).
  Matrix orbit_matrix(Elem alpha) const;

  void require_in_e(Elem x) const;
  void require_in_f(Elem x) const;

 private:
  FieldPtr k_;
  FieldPtr f_;
  FieldPtr e_;
  unsigned mu_ = 1;
  unsigned nu_ = 1;
  Elem phi_a_{};
  std::uint64_t phi_exp_ = 0;
  std::vector<Elem> phi_basis_;  // phi(a^i), i < mu
  Matrix pull_reduced_;          // RREF of the phi-basis coordinate rows
  Matrix pull_transform_;        // T with T * basis = reduced
  std::vector<std::size_t> pull_pivots_;
};

using TowerPtr = std::shared_ptr<const Tower>;

}  // namespace skewroos
