#include "skewroos/tower.hpp"

#include <string>

#include "skewroos/error.hpp"
#include "skewroos/numtheory.hpp"

namespace skewroos {
namespace {

constexpr std::string_view kModule = "galois-tower";

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

// Evaluates a polynomial with K-coefficients at y in E.
Elem eval_k_poly(const Field& e, const std::vector<std::uint64_t>& poly, Elem y) {
  Elem r{};
  for (std::size_t i = poly.size(); i-- > 0;) r = e.add(e.mul(r, y), Elem{poly[i]});
  return r;
}

FieldPtr make_checked(std::uint64_t p, const FieldPtr& base, const std::optional<std::vector<std::uint64_t>>& given,
                      unsigned degree, const char* name, std::string symbol) {
  std::vector<std::uint64_t> modulus;
  if (given) {
    modulus = *given;
    if (modulus.size() != degree + 1) {
      fail(ErrorCode::DegreeMismatch, std::string("modulus of ") + name + " must have degree " + std::to_string(degree));
    }
    if (!Field::is_primitive_modulus(p, base, modulus)) {
      fail(ErrorCode::NotPrimitive, std::string("modulus of ") + name + " is not monic, irreducible and primitive");
    }
  } else {
    modulus = Field::smallest_primitive_modulus(p, base, degree);
  }
  return Field::make(p, base, std::move(modulus), std::move(symbol));
}

}  // namespace

FieldSpec describe(const Field& field) {
  return {field.characteristic(), field.base_order(), field.degree(), field.modulus()};
}

Tower Tower::build(const TowerParams& params) {
  const auto pp = as_prime_power(params.q);
  if (!pp) fail(ErrorCode::NotPrimePower, "q = " + std::to_string(params.q) + " is not a prime power");
  if (pp->prime >= (std::uint64_t{1} << 31)) fail(ErrorCode::TooLarge, "characteristic too large");
  if (params.mu == 0 || params.nu == 0) fail(ErrorCode::InvalidInput, "mu and nu must be positive");
  const auto n = params.mu * params.nu;
  if (!checked_pow(params.q, n) || *checked_pow(params.q, n) > (std::uint64_t{1} << 62)) {
    fail(ErrorCode::TooLarge, "q^n exceeds 2^62");
  }
  if (pp->exponent == 1 && params.mod_k) fail(ErrorCode::InvalidInput, "mod_k given for a prime q");

  Tower t;
  t.mu_ = params.mu;
  t.nu_ = params.nu;
  t.k_ = make_checked(pp->prime, nullptr, params.mod_k, pp->exponent, "K", "w");
  t.f_ = make_checked(pp->prime, t.k_, params.mod_f, params.mu, "F", "a");
  t.e_ = make_checked(pp->prime, t.k_, params.mod_e, n, "E", "y");

  const Field& e = *t.e_;
  const auto& mod_f = t.f_->modulus();
  if (params.embed_hint) {
    const Elem y = e.exp(static_cast<std::int64_t>(*params.embed_hint % (e.order() - 1)));
    if (!eval_k_poly(e, mod_f, y).is_zero()) {
      fail(ErrorCode::BadEmbedding, "gamma^" + std::to_string(*params.embed_hint) + " is not a root of F's modulus");
    }
    t.phi_a_ = y;
    t.phi_exp_ = *params.embed_hint % (e.order() - 1);
  } else {
    // Roots of a degree-mu primitive polynomial lie in the order-(q^mu - 1)
    // subgroup, i.e. among gamma^(c t) with c = (q^n - 1) / (q^mu - 1).
    const std::uint64_t c = (e.order() - 1) / (t.f_->order() - 1);
    const Elem step = e.exp(static_cast<std::int64_t>(c));
    Elem y = step;
    bool found = false;
    for (std::uint64_t s = 1; s < t.f_->order(); ++s, y = e.mul(y, step)) {
      if (eval_k_poly(e, mod_f, y).is_zero()) {
        t.phi_a_ = y;
        t.phi_exp_ = c * s;
        found = true;
        break;
      }
    }
    if (!found) fail(ErrorCode::InvariantViolation, "F's modulus has no root in E");
  }

  t.phi_basis_.resize(t.mu_);
  Elem pw = e.one();
  for (unsigned i = 0; i < t.mu_; ++i, pw = e.mul(pw, t.phi_a_)) t.phi_basis_[i] = pw;

  Matrix aug(t.k_, t.mu_, n + t.mu_);
  for (unsigned i = 0; i < t.mu_; ++i) {
    const auto cs = e.coords(t.phi_basis_[i]);
    for (unsigned j = 0; j < n; ++j) aug(i, j) = Elem{cs[j]};
    aug(i, n + i) = t.k_->one();
  }
  auto ech = rref(std::move(aug));
  if (ech.pivots.size() != t.mu_ || ech.pivots.back() >= n) {
    fail(ErrorCode::InvariantViolation, "embedding is not injective");
  }
  t.pull_reduced_ = Matrix(t.k_, t.mu_, n);
  t.pull_transform_ = Matrix(t.k_, t.mu_, t.mu_);
  for (unsigned i = 0; i < t.mu_; ++i) {
    for (unsigned j = 0; j < n; ++j) t.pull_reduced_(i, j) = ech.reduced(i, j);
    for (unsigned j = 0; j < t.mu_; ++j) t.pull_transform_(i, j) = ech.reduced(i, n + j);
  }
  t.pull_pivots_ = std::move(ech.pivots);
  return t;
}

void Tower::require_in_e(Elem x) const {
  if (!e_->contains(x)) fail(ErrorCode::ElementNotInField, "element is not in E");
}

void Tower::require_in_f(Elem x) const {
  if (!f_->contains(x)) fail(ErrorCode::ElementNotInField, "element is not in F");
}

Elem Tower::embed(Elem x) const {
  require_in_f(x);
  const auto c = f_->coords(x);
  Elem r{};
  for (unsigned i = 0; i < mu_; ++i) {
    if (c[i] != 0) r = e_->add(r, e_->scale(c[i], phi_basis_[i]));
  }
  return r;
}

std::optional<Elem> Tower::pullback(Elem y) const {
  require_in_e(y);
  const auto yc = e_->coords(y);
  // y = d * reduced with d read off the pivot columns; then c = d * T.
  std::vector<Elem> d(mu_);
  for (unsigned i = 0; i < mu_; ++i) d[i] = Elem{yc[pull_pivots_[i]]};
  const auto recon = vec_mul(d, pull_reduced_);
  for (unsigned j = 0; j < n(); ++j) {
    if (recon[j] != Elem{yc[j]}) return std::nullopt;
  }
  const auto c = vec_mul(d, pull_transform_);
  std::vector<std::uint64_t> raw(mu_);
  for (unsigned i = 0; i < mu_; ++i) raw[i] = c[i].v;
  return f_->from_coords(raw);
}

Elem Tower::apply_theta(std::int64_t i, Elem x) const {
  require_in_e(x);
  return e_->frobenius(x, i);
}

Elem Tower::apply_sigma(std::int64_t i, Elem x) const {
  require_in_f(x);
  return f_->frobenius(x, i);
}

Matrix Tower::orbit_matrix(Elem alpha) const {
  Matrix m(k_, n(), n());
  Elem x = alpha;
  for (unsigned i = 0; i < n(); ++i, x = e_->frobenius(x, 1)) {
    const auto c = e_->coords(x);
    for (unsigned j = 0; j < n(); ++j) m(i, j) = Elem{c[j]};
  }
  return m;
}

bool Tower::is_normal(Elem alpha) const {
  require_in_e(alpha);
  if (alpha.is_zero()) fail(ErrorCode::ZeroElement, "zero is never normal");
  return rank(orbit_matrix(alpha)) == n();
}

Elem Tower::find_normal() const {
  Elem x = e_->generator();
  for (std::uint64_t j = 1; j < e_->order(); ++j, x = e_->mul(x, e_->generator())) {
    if (is_normal(x)) return x;
  }
  fail(ErrorCode::InvariantViolation, "no normal element found");
}

Elem Tower::beta_of(Elem alpha) const {
  require_in_e(alpha);
  return e_->div(e_->frobenius(alpha, 1), alpha);
}

Elem Tower::hilbert90_solve(Elem beta) const {
  require_in_e(beta);
  if (beta.is_zero()) fail(ErrorCode::ZeroElement, "beta must be nonzero");
  const Field& e = *e_;
  // Row j holds the coordinates of theta(e_j) - beta * e_j for the power basis e_j.
  Matrix m(k_, n(), n());
  std::vector<std::uint64_t> unit(n(), 0);
  for (unsigned j = 0; j < n(); ++j) {
    unit[j] = 1;
    const Elem basis = e.from_coords(unit);
    unit[j] = 0;
    const auto c = e.coords(e.sub(e.frobenius(basis, 1), e.mul(beta, basis)));
    for (unsigned i = 0; i < n(); ++i) m(j, i) = Elem{c[i]};
  }
  const Matrix ker = left_kernel(m);
  if (ker.rows() == 0) fail(ErrorCode::NoSolution, "N_n(beta) != 1: no alpha with theta(alpha)/alpha = beta");
  std::vector<std::uint64_t> c(n());
  for (unsigned i = 0; i < n(); ++i) c[i] = ker(0, i).v;
  return e.from_coords(c);
}

Elem Tower::trace_to_f(Elem x) const {
  require_in_e(x);
  Elem s{};
  for (unsigned j = 0; j < nu_; ++j) s = e_->add(s, e_->frobenius(x, static_cast<std::int64_t>(j) * mu_));
  const auto r = pullback(s);
  if (!r) fail(ErrorCode::InvariantViolation, "Tr_{E/F} landed outside phi(F)");
  return *r;
}

Elem Tower::trace_to_k(Elem x) const {
  require_in_e(x);
  Elem s{};
  for (unsigned j = 0; j < n(); ++j) s = e_->add(s, e_->frobenius(x, j));
  if (s.v >= k_->order()) fail(ErrorCode::InvariantViolation, "Tr_{E/K} landed outside K");
  return s;
}

Elem Tower::norm_to_k(Elem x) const {
  require_in_e(x);
  Elem s = e_->one();
  for (unsigned j = 0; j < n(); ++j) s = e_->mul(s, e_->frobenius(x, j));
  if (s.v >= k_->order()) fail(ErrorCode::InvariantViolation, "N_{E/K} landed outside K");
  return s;
}

}  // namespace skewroos
