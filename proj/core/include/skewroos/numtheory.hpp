#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace skewroos {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Nonnegative residue of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Returns q^e, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, unsigned e);

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
/// Decomposes q = p^e; nullopt when q is not a prime power (q < 2 included).
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Distinct prime divisors of n in increasing order (trial division; n < 2^63).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// (a * b) mod m without overflow.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Euler totient of n.
std::uint64_t totient(std::uint64_t n);

/// Gaussian binomial coefficient [m choose w]_q; saturates at UINT64_MAX.
std::uint64_t gaussian_binomial(unsigned m, unsigned w, std::uint64_t q);

/// Binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace skewroos
