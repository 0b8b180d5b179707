#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skewroos {

/// A finite-field element encoded by its coordinates over the base field:
/// code = sum_i c_i * b^i where b is the base order and c_i are base codes.
/// Zero is code 0 in every field. Codes are meaningful only together with
/// the Field that produced them.
struct Elem {
  std::uint64_t v = 0;

  constexpr bool is_zero() const noexcept { return v == 0; }
  friend constexpr bool operator==(Elem, Elem) noexcept = default;
  friend constexpr auto operator<=>(Elem, Elem) noexcept = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(b^m) = base[x]/(modulus) with the residue of x primitive.
///
/// The base is either another Field or, when `base()` is null, the prime
/// field Z/p with codes 0..p-1. Prime fields themselves are degree-1
/// extensions x + c of Z/p, so every Field has a primitive generator.
/// Fields of order <= 2^20 carry log/antilog tables.
class Field {
 public:
  static constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20;

  /// Builds the field; throws NotPrimitive unless the modulus (ascending base
  /// codes, monic, degree >= 1) has a primitive root residue.
  static FieldPtr make(std::uint64_t characteristic, FieldPtr base, std::vector<std::uint64_t> modulus,
                       std::string symbol);

  /// Lexicographically smallest primitive modulus of the given degree over
  /// `base` (Z/p when null); coefficients compared from degree 0 upward.
  static std::vector<std::uint64_t> smallest_primitive_modulus(std::uint64_t characteristic,
                                                               const FieldPtr& base, unsigned degree);

  /// True iff the (monic) modulus generates a primitive residue of x.
  static bool is_primitive_modulus(std::uint64_t characteristic, const FieldPtr& base,
                                   std::span<const std::uint64_t> modulus);

  std::uint64_t characteristic() const noexcept { return p_; }
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t base_order() const noexcept { return b_; }
  unsigned degree() const noexcept { return m_; }
  const FieldPtr& base() const noexcept { return base_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  const std::string& symbol() const noexcept { return symbol_; }
  bool has_log_table() const noexcept { return !log_.empty(); }

  bool contains(Elem a) const noexcept { return a.v < order_; }
  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Residue of the modulus variable (a primitive element).
  Elem generator() const noexcept { return gen_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws ZeroElement
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// generator()^k for any integer k (reduced mod order-1).
  Elem exp(std::int64_t k) const;
  /// Discrete log base generator(); nullopt for zero or when no table exists.
  std::optional<std::uint64_t> log(Elem a) const;

  /// x -> x^(b^i), the i-th power of the base-order Frobenius (i taken mod degree).
  Elem frobenius(Elem a, std::int64_t i) const;

  /// Multiplies by a base-field scalar (base code).
  Elem scale(std::uint64_t base_scalar, Elem a) const;
  /// Coordinates over the base field, ascending.
  std::vector<std::uint64_t> coords(Elem a) const;
  Elem from_coords(std::span<const std::uint64_t> coords) const;
  /// Base-field arithmetic on base codes.
  std::uint64_t base_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t base_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t base_neg(std::uint64_t a) const;
  std::uint64_t base_inv(std::uint64_t a) const;

 private:
  Field() = default;

  Elem mul_slow(Elem a, Elem b) const;
  Elem pow_slow(Elem a, std::uint64_t e) const;
  void build_tables();

  std::uint64_t p_ = 0;
  std::uint64_t b_ = 0;
  unsigned m_ = 0;
  std::uint64_t order_ = 0;
  FieldPtr base_;
  std::vector<std::uint64_t> modulus_;
  std::string symbol_;
  Elem gen_{};
  std::vector<std::uint64_t> bpow_;  // b^i for i < m
  unsigned bbits_ = 0;                // log2(b) when b is a power of two, else 0

  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
  static constexpr std::uint32_t kZechZero = 0xFFFFFFFFU;
  std::vector<std::uint32_t> zech_;                // log(1 + g^k), odd characteristic only
  std::vector<std::uint64_t> frob_exp_;            // b^i mod (order-1), i < m
  std::vector<std::vector<Elem>> frob_basis_;      // (x^j)^(b^i), used without tables
};

}  // namespace skewroos
