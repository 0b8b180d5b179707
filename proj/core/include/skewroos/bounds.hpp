#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewroos/skew_code.hpp"

namespace skewroos {

/// Parameters (b, s, delta, r, k_0 < ... < k_r) whose positions
/// (b + s i + k_j) mod n, 0 <= i <= delta - 2, all lie in the defining set.
/// A valid certificate proves d_H >= delta + r and d_R >= delta + r.
struct RoosCertificate {
  std::int64_t b = 0;
  std::int64_t s = 1;
  unsigned delta = 2;
  unsigned r = 0;
  std::vector<std::int64_t> k;

  unsigned value() const noexcept { return delta + r; }
  friend bool operator==(const RoosCertificate&, const RoosCertificate&) = default;
};

/// Throws MalformedCertificate unless b in [0, n), s in [1, n) coprime to n,
/// delta >= 2, |k| = r + 1, k strictly increasing in [0, n), k_r - k_0 <= delta + r - 2.
void validate_certificate(const RoosCertificate& cert, unsigned n);

/// Positions (b + s i + k_j) mod n, sorted and deduplicated.
std::vector<unsigned> certificate_positions(const RoosCertificate& cert, unsigned n);

/// True iff every certificate position lies in T.
bool verify_certificate(const DefiningSet& t, const RoosCertificate& cert);

struct SearchOptions {
  unsigned threads = 1;
  /// Refuses inputs with n above this.
  unsigned max_n = 100;
};

/// Certificate maximizing delta + r; ties go to larger delta, then smaller s,
/// then smaller b, then the lexicographically smallest k-list.
RoosCertificate search_roos(const DefiningSet& t, const SearchOptions& options = {});
/// The r = 0 slice of search_roos.
RoosCertificate search_bch(const DefiningSet& t, const SearchOptions& options = {});
/// First certificate with exactly the given delta and r (s ascending, then b,
/// then k lexicographic), optionally with b fixed.
std::optional<RoosCertificate> find_certificate(const DefiningSet& t, unsigned delta, unsigned r,
                                                std::optional<std::int64_t> b = std::nullopt);

struct SingletonBounds {
  unsigned hamming = 0;  // n - k + 1
  unsigned rank = 0;     // floor(mu - k mu / n) + 1
};
SingletonBounds singleton_bounds(unsigned n, unsigned k, unsigned mu);

struct MrdCertification {
  bool proven = false;
  unsigned bound_value = 0;      // delta + r
  unsigned restricted_size = 0;  // |T^F|
  std::string reason;
};
/// Proven iff |T^F| = delta + r - 1, so delta + r <= d_R <= |T^F| + 1 collapses.
MrdCertification mrd_certify(const DefiningSet& t, const RoosCertificate& cert);

/// mu-closure in C_n of {b, b + s, ..., b + (delta' - 2) s} mod mu.
DefiningSet repeated_gabidulin(std::int64_t b, std::int64_t s, unsigned delta_prime, unsigned mu, unsigned nu);

/// For prime mu and a certificate with |T^F| = delta + r - 1 < mu, returns a
/// BCH certificate of the same value. Throws Unsupported when the
/// hypotheses fail and InvariantViolation if no such certificate exists.
RoosCertificate vosper_explain(const DefiningSet& t, const RoosCertificate& cert,
                               const SearchOptions& options = {});

struct BoundReport {
  DefiningSet t;
  unsigned n = 0;
  unsigned k = 0;
  std::optional<RoosCertificate> bch;   // absent for empty or full T
  std::optional<RoosCertificate> roos;
  unsigned d_h_lower = 1;
  unsigned d_r_lower = 1;
  SingletonBounds singleton;
  bool mds_proven = false;
  bool mrd_proven = false;
  /// mrd_certify on the Roos certificate.
  bool mrd_proven_via_tf = false;
};

/// Bounds for the mu-closed defining set of a code with k = n - |T|.
BoundReport bound_report(const DefiningSet& t, const SearchOptions& options = {});

}  // namespace skewroos
