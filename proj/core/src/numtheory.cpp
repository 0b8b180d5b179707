#include "skewroos/numtheory.hpp"

#include <limits>

namespace skewroos {

__extension__ using u128 = unsigned __int128;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t q, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    r *= q;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, e};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return r;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

namespace {
constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}
}  // namespace

std::uint64_t gaussian_binomial(unsigned m, unsigned w, std::uint64_t q) {
  if (w > m) return 0;
  // Product formula evaluated in 128 bits; terms are exact integers at each step
  // because prod_{i<j} (q^{m-i}-1)/(q^{i+1}-1) is a Gaussian binomial.
  u128 r = 1;
  for (unsigned i = 0; i < w; ++i) {
    const auto num = checked_pow(q, m - i);
    const auto den = checked_pow(q, i + 1);
    if (!num || !den) return kSaturated;
    r = r * (*num - 1);
    r /= (*den - 1);
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    const std::uint64_t next = sat_mul(r, n - k + i);
    if (next == kSaturated) return kSaturated;
    r = next / i;
  }
  return r;
}

}  // namespace skewroos
