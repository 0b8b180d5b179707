#include "skewroos/skew_code.hpp"

#include <algorithm>
#include <string>

#include "skewroos/error.hpp"
#include "skewroos/numtheory.hpp"

namespace skewroos {
namespace {

constexpr std::string_view kModule = "skew-code";

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

void require_length(std::span<const Elem> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    fail(ErrorCode::InvalidInput,
         std::string(what) + ": expected length " + std::to_string(n) + ", got " + std::to_string(v.size()));
  }
}

SkewPoly lclm_of_roots(const Tower& tower, Elem beta, std::span<const unsigned> exponents) {
  if (exponents.empty()) return SkewPoly::constant(tower.e(), tower.e()->one());
  std::vector<SkewPoly> factors;
  factors.reserve(exponents.size());
  for (auto i : exponents) factors.push_back(SkewPoly::linear(tower.e(), tower.apply_theta(i, beta)));
  return lclm_many(factors);
}

SkewPoly poly_from_vector(const FieldPtr& field, std::span<const Elem> v) {
  return {field, 1, std::vector<Elem>(v.begin(), v.end())};
}

}  // namespace

DefiningSet::DefiningSet(unsigned n, unsigned mu, std::vector<unsigned> elements)
    : n_(n), mu_(mu), t_(std::move(elements)) {
  if (n == 0 || mu == 0 || n % mu != 0) {
    fail(ErrorCode::InvalidInput, "mu = " + std::to_string(mu) + " must divide n = " + std::to_string(n));
  }
  std::sort(t_.begin(), t_.end());
  t_.erase(std::unique(t_.begin(), t_.end()), t_.end());
  member_.assign(n, false);
  for (auto t : t_) {
    if (t >= n) fail(ErrorCode::InvalidInput, "defining-set element " + std::to_string(t) + " is outside [0, n)");
    member_[t] = true;
  }
}

bool DefiningSet::contains(std::int64_t i) const noexcept {
  if (n_ == 0) return false;
  return member_[static_cast<std::size_t>(mod(i, n_))];
}

bool DefiningSet::is_mu_closed() const {
  for (auto t : t_) {
    if (!member_[(t + mu_) % n_]) return false;
  }
  return true;
}

std::vector<unsigned> DefiningSet::restricted() const {
  std::vector<unsigned> r;
  for (auto t : t_) r.push_back(t % mu_);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

DefiningSet mu_closure(const DefiningSet& t) {
  std::vector<unsigned> out;
  for (auto r : t.restricted()) {
    for (unsigned j = 0; j < t.nu(); ++j) out.push_back(r + j * t.mu());
  }
  return {t.n(), t.mu(), std::move(out)};
}

Matrix shifted_rows(const SkewPoly& g, unsigned n) {
  if (g.is_zero() || static_cast<unsigned>(g.degree()) > n) fail(ErrorCode::InvalidInput, "generator degree exceeds n");
  const unsigned k = n - static_cast<unsigned>(g.degree());
  Matrix m(g.field(), k, n);
  for (unsigned i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) m(i, i + j) = g.twist_pow(g.coeffs()[j], i);
  }
  return m;
}

std::vector<Elem> orbit_vector(const Tower& tower, Elem alpha) {
  std::vector<Elem> v(tower.n());
  Elem x = alpha;
  for (unsigned i = 0; i < tower.n(); ++i, x = tower.apply_theta(1, x)) v[i] = x;
  return v;
}

ExtensionCode ExtensionCode::from_set(TowerPtr tower, Elem alpha, DefiningSet t) {
  const Tower& tw = *tower;
  if (t.n() != tw.n() || t.mu() != tw.mu()) fail(ErrorCode::InvalidInput, "defining set does not match the tower");
  if (!tw.is_normal(alpha)) fail(ErrorCode::NotNormal, "alpha is not a normal element of E over K");
  const Field& e = *tw.e();
  ExtensionCode c;
  c.tower_ = tower;
  c.alpha_ = alpha;
  c.beta_ = tw.beta_of(alpha);
  c.g_ = lclm_of_roots(tw, c.beta_, t.elements());
  if (static_cast<std::size_t>(c.g_.degree()) != t.size()) {
    fail(ErrorCode::InvariantViolation, "lclm of distinct orbit roots lost degree");
  }
  c.gen_ = shifted_rows(c.g_, tw.n());

  const unsigned n = tw.n();
  const auto& els = t.elements();
  c.alpha_cols_ = Matrix(tw.e(), n, els.size());
  c.norm_ = Matrix(tw.e(), n, els.size());
  for (std::size_t j = 0; j < els.size(); ++j) {
    const Elem aj = tw.apply_theta(els[j], alpha);
    const Elem bj = tw.apply_theta(els[j], c.beta_);
    Elem a = aj;
    Elem b = bj;
    Elem norm = e.one();
    for (unsigned i = 0; i < n; ++i) {
      c.alpha_cols_(i, j) = a;
      c.norm_(i, j) = norm;
      norm = e.mul(norm, b);
      a = e.frobenius(a, 1);
      b = e.frobenius(b, 1);
    }
  }
  c.t_ = std::move(t);
  return c;
}

bool ExtensionCode::is_codeword(std::span<const Elem> v) const {
  require_length(v, n(), "is_codeword");
  for (auto x : v) tower_->require_in_e(x);
  return right_divides(g_, poly_from_vector(tower_->e(), v));
}

SkewCyclicCode::SkewCyclicCode(TowerPtr tower, SkewPoly g, ExtensionCode ext)
    : tower_(std::move(tower)), g_(std::move(g)), ext_(std::move(ext)) {
  gen_ = shifted_rows(g_, ext_.n());
  parity_ = right_kernel(gen_);
}

SkewCyclicCode SkewCyclicCode::from_set(TowerPtr tower, Elem alpha, const DefiningSet& t, bool auto_close) {
  if (t.n() != tower->n() || t.mu() != tower->mu()) fail(ErrorCode::InvalidInput, "defining set does not match the tower");
  DefiningSet closed = mu_closure(t);
  if (!auto_close && closed.size() != t.size()) {
    fail(ErrorCode::NotMuClosed, "defining set is not mu-closed; enable auto_close or build the code over E");
  }
  ExtensionCode ext = ExtensionCode::from_set(tower, alpha, std::move(closed));
  SkewPoly g;
  try {
    g = pull_back(*tower, ext.generator());
  } catch (const Error& err) {
    if (err.code() == ErrorCode::CoefficientOutsideF) {
      throw Error(ErrorCode::CoefficientOutsideF, kModule,
                  std::string("generator of a mu-closed set left phi(F): ") + err.what());
    }
    throw;
  }
  return {std::move(tower), std::move(g), std::move(ext)};
}

SkewCyclicCode SkewCyclicCode::from_generator(TowerPtr tower, Elem alpha, const SkewPoly& g) {
  if (g.field() != tower->f() || g.twist() != 1) fail(ErrorCode::RingMismatch, "generator must lie in F[x; sigma]");
  if (!g.is_monic()) fail(ErrorCode::InvalidInput, "generator must be monic");
  DefiningSet t = defining_set_of(*tower, alpha, g);
  ExtensionCode ext = ExtensionCode::from_set(tower, alpha, std::move(t));
  if (ext.generator() != promote(*tower, g)) {
    fail(ErrorCode::InvariantViolation, "generator differs from the lclm of its roots");
  }
  return {std::move(tower), g, std::move(ext)};
}

std::vector<Elem> SkewCyclicCode::encode(std::span<const Elem> m) const {
  require_length(m, k(), "encode");
  for (auto x : m) tower_->require_in_f(x);
  std::vector<Elem> out = (poly_from_vector(tower_->f(), m) * g_).coeffs();
  out.resize(n());
  return out;
}

bool SkewCyclicCode::is_codeword(std::span<const Elem> v) const {
  require_length(v, n(), "is_codeword");
  for (auto x : v) tower_->require_in_f(x);
  return right_divides(g_, poly_from_vector(tower_->f(), v));
}

DefiningSet defining_set_of(const Tower& tower, Elem alpha, const SkewPoly& g) {
  SkewPoly ge = g.field() == tower.f() ? promote(tower, g) : g;
  if (ge.field() != tower.e() || ge.twist() != 1) fail(ErrorCode::RingMismatch, "polynomial is not over F or E");
  if (!right_divides(ge, SkewPoly::x_pow_minus_one(tower.e(), tower.n()))) {
    fail(ErrorCode::NotADivisor, "g does not right-divide x^n - 1");
  }
  const Elem beta = tower.beta_of(alpha);
  std::vector<unsigned> t;
  for (unsigned i = 0; i < tower.n(); ++i) {
    if (eval_right(ge, tower.apply_theta(i, beta)).is_zero()) t.push_back(i);
  }
  return {tower.n(), tower.mu(), std::move(t)};
}

ExtensionCode skew_rs(TowerPtr tower, Elem alpha, std::int64_t b, unsigned delta) {
  const unsigned n = tower->n();
  if (delta < 1 || delta > n) fail(ErrorCode::InvalidInput, "delta must lie in [1, n]");
  std::vector<unsigned> t;
  for (unsigned i = 0; i + 1 < delta; ++i) t.push_back(static_cast<unsigned>(mod(b + i, n)));
  return ExtensionCode::from_set(std::move(tower), alpha, DefiningSet(n, tower->mu(), std::move(t)));
}

Matrix gabidulin_generator(const Tower& tower, std::span<const Elem> v, unsigned k, std::int64_t step) {
  if (v.size() > tower.n()) fail(ErrorCode::InvalidInput, "Gabidulin length exceeds n");
  if (k > v.size()) fail(ErrorCode::InvalidInput, "Gabidulin dimension exceeds length");
  if (gcd(static_cast<std::uint64_t>(mod(step, tower.n())), tower.n()) != 1 && tower.n() > 1) {
    fail(ErrorCode::InvalidInput, "Frobenius step must be coprime to n");
  }
  for (auto x : v) tower.require_in_e(x);
  if (rank(expand_columns(*tower.e(), tower.k(), v)) != v.size()) {
    fail(ErrorCode::RankDeficient, "entries are not K-linearly independent");
  }
  Matrix m(tower.e(), k, v.size());
  for (unsigned i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = tower.apply_theta(step * i, v[j]);
  }
  return m;
}

}  // namespace skewroos
