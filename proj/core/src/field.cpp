#include "skewroos/field.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "skewroos/error.hpp"
#include "skewroos/numtheory.hpp"

namespace skewroos {
namespace {

constexpr std::string_view kModule = "galois-tower";
constexpr unsigned kMaxDegree = 64;

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

}  // namespace

std::uint64_t Field::base_add(std::uint64_t a, std::uint64_t b) const {
  if (base_) return base_->add(Elem{a}, Elem{b}).v;
  const std::uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

std::uint64_t Field::base_mul(std::uint64_t a, std::uint64_t b) const {
  if (base_) return base_->mul(Elem{a}, Elem{b}).v;
  return a * b % p_;
}

std::uint64_t Field::base_neg(std::uint64_t a) const {
  if (base_) return base_->neg(Elem{a}).v;
  return a == 0 ? 0 : p_ - a;
}

std::uint64_t Field::base_inv(std::uint64_t a) const {
  if (base_) return base_->inv(Elem{a}).v;
  if (a == 0) fail(ErrorCode::ZeroElement, "inverse of zero");
  return powmod(a, p_ - 2, p_);
}

std::vector<std::uint64_t> Field::coords(Elem a) const {
  std::vector<std::uint64_t> out(m_);
  std::uint64_t v = a.v;
  if (bbits_ != 0) {
    const std::uint64_t mask = b_ - 1;
    for (unsigned i = 0; i < m_; ++i, v >>= bbits_) out[i] = v & mask;
  } else {
    for (unsigned i = 0; i < m_; ++i, v /= b_) out[i] = v % b_;
  }
  return out;
}

Elem Field::from_coords(std::span<const std::uint64_t> c) const {
  if (c.size() > m_) fail(ErrorCode::ElementNotInField, "too many coordinates for field");
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= b_) fail(ErrorCode::ElementNotInField, "coordinate out of base-field range");
    v = v * b_ + c[i];
  }
  return Elem{v};
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.v ^ b.v};
  if (!base_ && m_ == 1) return Elem{base_add(a.v, b.v)};
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!zech_.empty()) {
    const std::uint64_t n1 = order_ - 1;
    const std::uint64_t la = log_[a.v];
    const std::uint64_t lb = log_[b.v];
    const std::uint64_t d = lb >= la ? lb - la : lb + n1 - la;
    const std::uint32_t z = zech_[d];
    if (z == kZechZero) return Elem{0};
    std::uint64_t e = la + z;
    if (e >= n1) e -= n1;
    return Elem{antilog_[e]};
  }
  std::uint64_t x = a.v, y = b.v, out = 0, scale_b = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += base_add(x % b_, y % b_) * scale_b;
    x /= b_;
    y /= b_;
    scale_b *= b_;
  }
  return Elem{out};
}

Elem Field::neg(Elem a) const {
  if (p_ == 2 || a.is_zero()) return a;
  if (!base_ && m_ == 1) return Elem{p_ - a.v};
  if (!log_.empty()) {
    std::uint64_t e = log_[a.v] + (order_ - 1) / 2;
    if (e >= order_ - 1) e -= order_ - 1;
    return Elem{antilog_[e]};
  }
  std::uint64_t x = a.v, out = 0, scale_b = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += base_neg(x % b_) * scale_b;
    x /= b_;
    scale_b *= b_;
  }
  return Elem{out};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a.is_zero() || b.is_zero()) return Elem{0};
  if (!base_ && m_ == 1) return Elem{a.v * b.v % p_};
  if (!log_.empty()) {
    std::uint64_t e = std::uint64_t{log_[a.v]} + log_[b.v];
    if (e >= order_ - 1) e -= order_ - 1;
    return Elem{antilog_[e]};
  }
  return mul_slow(a, b);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  const auto ca = coords(a);
  const auto cb = coords(b);
  if (!base_) {
    // Plain residues mod p: accumulate then reduce once per slot.
    for (unsigned i = 0; i < m_; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    for (unsigned i = 2 * m_ - 1; i-- > m_;) {
      const std::uint64_t c = prod[i] % p_;
      if (c == 0) continue;
      const std::uint64_t nc = p_ - c;
      for (unsigned j = 0; j < m_; ++j) prod[i - m_ + j] = (prod[i - m_ + j] + nc * modulus_[j]) % p_;
    }
  } else {
    for (unsigned i = 0; i < m_; ++i) {
      if (ca[i] == 0) continue;
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = base_add(prod[i + j], base_mul(ca[i], cb[j]));
    }
    for (unsigned i = 2 * m_ - 1; i-- > m_;) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      const std::uint64_t nc = base_neg(c);
      for (unsigned j = 0; j < m_; ++j) prod[i - m_ + j] = base_add(prod[i - m_ + j], base_mul(nc, modulus_[j]));
    }
  }
  return from_coords(std::span<const std::uint64_t>(prod.data(), m_));
}

Elem Field::pow_slow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e != 0) {
    if (e & 1U) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1U;
  }
  return r;
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) return a;
  if (!log_.empty()) return Elem{antilog_[mulmod(log_[a.v], e, order_ - 1)]};
  return pow_slow(a, e % (order_ - 1) == 0 ? order_ - 1 : e % (order_ - 1));
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "inverse of zero");
  if (!log_.empty()) {
    const std::uint64_t l = log_[a.v];
    return Elem{antilog_[l == 0 ? 0 : order_ - 1 - l]};
  }
  return pow_slow(a, order_ - 2);
}

Elem Field::exp(std::int64_t k) const {
  const auto n1 = static_cast<std::int64_t>(order_ - 1);
  const auto e = static_cast<std::uint64_t>(mod(k, n1));
  if (!log_.empty()) return Elem{antilog_[e]};
  return pow_slow(gen_, e);
}

std::optional<std::uint64_t> Field::log(Elem a) const {
  if (a.is_zero() || log_.empty()) return std::nullopt;
  return log_[a.v];
}

Elem Field::frobenius(Elem a, std::int64_t i) const {
  const auto k = static_cast<std::size_t>(mod(i, m_));
  if (k == 0 || a.is_zero()) return a;
  if (!log_.empty()) return Elem{antilog_[mulmod(log_[a.v], frob_exp_[k], order_ - 1)]};
  const auto c = coords(a);
  Elem r{};
  for (unsigned j = 0; j < m_; ++j) {
    if (c[j] != 0) r = add(r, scale(c[j], frob_basis_[k][j]));
  }
  return r;
}

Elem Field::scale(std::uint64_t s, Elem a) const {
  if (s == 0 || a.is_zero()) return Elem{0};
  if (s == 1) return a;
  auto c = coords(a);
  for (auto& x : c) x = base_mul(s, x);
  return from_coords(c);
}

bool Field::is_primitive_modulus(std::uint64_t characteristic, const FieldPtr& base,
                                 std::span<const std::uint64_t> modulus) {
  if (modulus.size() < 2 || modulus.back() != 1) return false;
  Field raw;
  raw.p_ = characteristic;
  raw.base_ = base;
  raw.b_ = base ? base->order() : characteristic;
  raw.m_ = static_cast<unsigned>(modulus.size() - 1);
  if (raw.m_ > kMaxDegree) fail(ErrorCode::TooLarge, "field degree too large");
  const auto order = checked_pow(raw.b_, raw.m_);
  if (!order || *order > (std::uint64_t{1} << 62)) fail(ErrorCode::TooLarge, "field order exceeds 2^62");
  raw.order_ = *order;
  raw.modulus_.assign(modulus.begin(), modulus.end());
  if ((raw.b_ & (raw.b_ - 1)) == 0) raw.bbits_ = static_cast<unsigned>(__builtin_ctzll(raw.b_));
  for (auto c : raw.modulus_) {
    if (c >= raw.b_) return false;
  }
  if (raw.modulus_[0] == 0) return false;
  // The norm of a primitive element, (-1)^m c_0, generates the base field's unit group.
  std::uint64_t norm = raw.modulus_[0];
  if (raw.m_ % 2 == 1) norm = raw.base_neg(norm);
  const std::uint64_t b1 = raw.b_ - 1;
  auto base_pow = [&](std::uint64_t a, std::uint64_t e) {
    if (base) return base->pow(Elem{a}, e).v;
    return powmod(a, e, characteristic);
  };
  for (std::uint64_t r : prime_divisors(b1)) {
    if (base_pow(norm, b1 / r) == 1) return false;
  }
  const Elem x = raw.m_ == 1 ? Elem{raw.base_neg(raw.modulus_[0])} : Elem{raw.b_};
  const std::uint64_t n1 = raw.order_ - 1;
  if (raw.pow_slow(x, n1) != raw.one()) return false;
  for (std::uint64_t r : prime_divisors(n1)) {
    if (raw.pow_slow(x, n1 / r) == raw.one()) return false;
  }
  return true;
}

std::vector<std::uint64_t> Field::smallest_primitive_modulus(std::uint64_t characteristic, const FieldPtr& base,
                                                             unsigned degree) {
  if (degree == 0) fail(ErrorCode::InvalidInput, "field degree must be positive");
  const std::uint64_t b = base ? base->order() : characteristic;
  const auto count = checked_pow(b, degree);
  if (!count) fail(ErrorCode::TooLarge, "field order overflows");
  // Results over prime fields are memoized; towers rebuild them often.
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::vector<std::uint64_t>> cache;
  const std::pair key{characteristic, degree};
  if (!base) {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<std::uint64_t> poly(degree + 1, 0);
  poly[degree] = 1;
  // Index t enumerates (c_0, ..., c_{m-1}) lexicographically with c_0 most significant.
  for (std::uint64_t t = 0; t < *count; ++t) {
    std::uint64_t v = t;
    for (unsigned i = degree; i-- > 0;) {
      poly[i] = v % b;
      v /= b;
    }
    if (is_primitive_modulus(characteristic, base, poly)) {
      if (!base) {
        std::lock_guard lock(mutex);
        cache.emplace(key, poly);
      }
      return poly;
    }
  }
  fail(ErrorCode::InvariantViolation, "no primitive polynomial found");
}

FieldPtr Field::make(std::uint64_t characteristic, FieldPtr base, std::vector<std::uint64_t> modulus,
                     std::string symbol) {
  if (!is_prime(characteristic)) fail(ErrorCode::NotPrimePower, "characteristic must be prime");
  if (base && base->characteristic() != characteristic) fail(ErrorCode::InvalidInput, "base characteristic mismatch");
  if (!is_primitive_modulus(characteristic, base, modulus)) {
    fail(ErrorCode::NotPrimitive, "modulus is not a monic primitive polynomial over the base field");
  }
  std::shared_ptr<Field> f(new Field());
  f->p_ = characteristic;
  f->base_ = std::move(base);
  f->b_ = f->base_ ? f->base_->order() : characteristic;
  f->m_ = static_cast<unsigned>(modulus.size() - 1);
  f->order_ = *checked_pow(f->b_, f->m_);
  f->modulus_ = std::move(modulus);
  f->symbol_ = std::move(symbol);
  if ((f->b_ & (f->b_ - 1)) == 0) f->bbits_ = static_cast<unsigned>(__builtin_ctzll(f->b_));
  f->gen_ = f->m_ == 1 ? Elem{f->base_neg(f->modulus_[0])} : Elem{f->b_};
  f->build_tables();
  return f;
}

void Field::build_tables() {
  const std::uint64_t n1 = order_ - 1;
  frob_exp_.resize(m_);
  for (unsigned i = 0; i < m_; ++i) frob_exp_[i] = powmod(b_, i, n1);
  if (order_ <= kLogTableLimit) {
    log_.assign(order_, 0);
    antilog_.assign(order_, 0);
    if (m_ == 1) {
      Elem x = one();
      for (std::uint64_t k = 0; k < n1; ++k, x = mul_slow(x, gen_)) {
        antilog_[k] = static_cast<std::uint32_t>(x.v);
        log_[x.v] = static_cast<std::uint32_t>(k);
      }
    } else {
      // Multiplying by the generator shifts coordinates up and folds the top one back.
      std::vector<std::uint64_t> c(m_, 0);
      c[0] = 1;
      for (std::uint64_t k = 0; k < n1; ++k) {
        const std::uint64_t v = from_coords(c).v;
        antilog_[k] = static_cast<std::uint32_t>(v);
        log_[v] = static_cast<std::uint32_t>(k);
        const std::uint64_t top = c[m_ - 1];
        for (unsigned i = m_ - 1; i > 0; --i) c[i] = c[i - 1];
        c[0] = 0;
        if (top != 0) {
          for (unsigned i = 0; i < m_; ++i) c[i] = base_add(c[i], base_neg(base_mul(top, modulus_[i])));
        }
      }
    }
    if (p_ != 2 && n1 > 1) {
      zech_.assign(n1, 0);
      for (std::uint64_t k = 0; k < n1; ++k) {
        // 1 + g^k through the coordinate path (tables for add are not ready yet).
        auto c = coords(Elem{antilog_[k]});
        c[0] = base_add(c[0], 1);
        const Elem s = from_coords(c);
        zech_[k] = s.is_zero() ? kZechZero : log_[s.v];
      }
    }
    return;
  }
  frob_basis_.assign(m_, std::vector<Elem>(m_));
  for (unsigned i = 0; i < m_; ++i) {
    Elem xj = one();
    for (unsigned j = 0; j < m_; ++j) {
      frob_basis_[i][j] = pow_slow(xj, *checked_pow(b_, i));
      xj = mul_slow(xj, gen_);
    }
  }
}

}  // namespace skewroos
