#include "skewroos/bounds.hpp"

#include <algorithm>
#include <string>

#include "skewroos/error.hpp"
#include "skewroos/numtheory.hpp"
#include "skewroos/parallel.hpp"

namespace skewroos {
namespace {

constexpr std::string_view kModule = "bound-engine";

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

void require_searchable(const DefiningSet& t, const SearchOptions& options) {
  if (t.empty() || t.full()) fail(ErrorCode::EmptyOrFullSet, "certificate search needs 0 < |T| < n");
  if (t.n() > options.max_n) {
    fail(ErrorCode::TooLarge, "n = " + std::to_string(t.n()) + " exceeds --max-n " + std::to_string(options.max_n));
  }
}

struct Candidate {
  bool found = false;
  RoosCertificate cert;
};

// (value, delta) decide; the caller's scan order settles s and b, and the
// per-(b, s) scan settles k.
bool better(const Candidate& a, const Candidate& b) {
  if (!a.found) return false;
  if (!b.found) return true;
  if (a.cert.value() != b.cert.value()) return a.cert.value() > b.cert.value();
  return a.cert.delta > b.cert.delta;
}

Candidate best_for(const DefiningSet& t, std::int64_t b, std::int64_t s, bool bch_only) {
  const auto n = static_cast<std::int64_t>(t.n());
  std::vector<unsigned> run(static_cast<std::size_t>(n), 0);
  unsigned max_run = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    unsigned m = 0;
    while (m < t.n() && t.contains(b + s * m + k)) ++m;
    run[static_cast<std::size_t>(k)] = m;
    max_run = std::max(max_run, m);
  }
  Candidate best;
  for (unsigned delta = max_run + 1; delta >= 2; --delta) {
    std::vector<std::int64_t> kd;
    for (std::int64_t k = 0; k < n; ++k) {
      if (run[static_cast<std::size_t>(k)] + 1 >= delta) kd.push_back(k);
    }
    // Largest r with r + 1 elements of K_delta inside a window of span delta + r - 2;
    // for that r the smallest start with consecutive elements is lexicographically least.
    unsigned best_r = 0;
    std::size_t best_start = 0;
    const unsigned r_cap = bch_only ? 0 : static_cast<unsigned>(kd.size() - 1);
    for (unsigned r = r_cap; r > 0; --r) {
      bool hit = false;
      for (std::size_t i = 0; i + r < kd.size(); ++i) {
        if (kd[i + r] - kd[i] <= static_cast<std::int64_t>(delta + r) - 2) {
          best_start = i;
          hit = true;
          break;
        }
      }
      if (hit) {
        best_r = r;
        break;
      }
    }
    Candidate c;
    c.found = true;
    c.cert.b = b;
    c.cert.s = s;
    c.cert.delta = delta;
    c.cert.r = best_r;
    c.cert.k.assign(kd.begin() + static_cast<std::ptrdiff_t>(best_start),
                    kd.begin() + static_cast<std::ptrdiff_t>(best_start + best_r + 1));
    if (better(c, best)) best = std::move(c);
  }
  return best;
}

RoosCertificate search(const DefiningSet& t, const SearchOptions& options, bool bch_only) {
  require_searchable(t, options);
  const unsigned n = t.n();
  std::vector<std::int64_t> steps;
  for (unsigned s = 1; s < std::max(n, 2u); ++s) {
    if (gcd(s, n) == 1) steps.push_back(s);
  }
  // Grid in tie-break order: s ascending, then b ascending.
  const std::size_t cells = steps.size() * n;
  std::vector<Candidate> results(cells);
  parallel_for(cells, options.threads, [&](std::size_t idx) {
    results[idx] = best_for(t, static_cast<std::int64_t>(idx % n), steps[idx / n], bch_only);
  });
  Candidate best;
  for (auto& c : results) {
    if (better(c, best)) best = std::move(c);
  }
  if (!best.found) fail(ErrorCode::InvariantViolation, "no certificate found for a nonempty defining set");
  return best.cert;
}

}  // namespace

void validate_certificate(const RoosCertificate& c, unsigned n) {
  auto bad = [](const std::string& why) { fail(ErrorCode::MalformedCertificate, why); };
  if (n == 0) bad("n must be positive");
  if (c.b < 0 || c.b >= n) bad("b must lie in [0, n)");
  if (n > 1 && (c.s < 1 || c.s >= n)) bad("s must lie in [1, n)");
  if (gcd(static_cast<std::uint64_t>(mod(c.s, n)), n) != 1) bad("s must be coprime to n");
  if (c.delta < 2) bad("delta must be at least 2");
  if (c.k.size() != c.r + 1) bad("k-list must hold r + 1 entries");
  for (std::size_t j = 0; j < c.k.size(); ++j) {
    if (c.k[j] < 0 || c.k[j] >= n) bad("k entries must lie in [0, n)");
    if (j > 0 && c.k[j] <= c.k[j - 1]) bad("k entries must be strictly increasing");
  }
  if (c.k.back() - c.k.front() > static_cast<std::int64_t>(c.delta + c.r) - 2) {
    bad("k_r - k_0 = " + std::to_string(c.k.back() - c.k.front()) + " exceeds delta + r - 2 = " +
        std::to_string(c.delta + c.r - 2));
  }
}

std::vector<unsigned> certificate_positions(const RoosCertificate& c, unsigned n) {
  validate_certificate(c, n);
  std::vector<unsigned> out;
  for (auto k : c.k) {
    for (unsigned i = 0; i + 1 < c.delta; ++i) out.push_back(static_cast<unsigned>(mod(c.b + c.s * i + k, n)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool verify_certificate(const DefiningSet& t, const RoosCertificate& cert) {
  for (auto p : certificate_positions(cert, t.n())) {
    if (!t.contains(p)) return false;
  }
  return true;
}

RoosCertificate search_roos(const DefiningSet& t, const SearchOptions& options) { return search(t, options, false); }

RoosCertificate search_bch(const DefiningSet& t, const SearchOptions& options) { return search(t, options, true); }

std::optional<RoosCertificate> find_certificate(const DefiningSet& t, unsigned delta, unsigned r,
                                                std::optional<std::int64_t> b) {
  if (delta < 2) fail(ErrorCode::InvalidInput, "delta must be at least 2");
  const auto n = static_cast<std::int64_t>(t.n());
  for (std::int64_t s = 1; s < std::max<std::int64_t>(n, 2); ++s) {
    if (gcd(static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(n)) != 1) continue;
    for (std::int64_t bb = b ? mod(*b, t.n()) : 0; bb < (b ? mod(*b, t.n()) + 1 : n); ++bb) {
      std::vector<std::int64_t> kd;
      for (std::int64_t k = 0; k < n; ++k) {
        unsigned i = 0;
        while (i + 1 < delta && t.contains(bb + s * i + k)) ++i;
        if (i + 1 == delta) kd.push_back(k);
      }
      for (std::size_t i = 0; i + r < kd.size(); ++i) {
        if (kd[i + r] - kd[i] <= static_cast<std::int64_t>(delta + r) - 2) {
          RoosCertificate c;
          c.b = bb;
          c.s = s;
          c.delta = delta;
          c.r = r;
          c.k.assign(kd.begin() + static_cast<std::ptrdiff_t>(i), kd.begin() + static_cast<std::ptrdiff_t>(i + r + 1));
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

SingletonBounds singleton_bounds(unsigned n, unsigned k, unsigned mu) {
  if (mu == 0 || n % mu != 0) fail(ErrorCode::InvalidInput, "mu must divide n");
  if (k > n) fail(ErrorCode::InvalidInput, "k must not exceed n");
  // floor(mu - k mu / n) = mu - ceil(k mu / n)
  const std::uint64_t num = std::uint64_t{k} * mu;
  const auto ceil_part = static_cast<unsigned>((num + n - 1) / n);
  return {n - k + 1, mu - ceil_part + 1};
}

MrdCertification mrd_certify(const DefiningSet& t, const RoosCertificate& cert) {
  if (!verify_certificate(t, cert)) fail(ErrorCode::MalformedCertificate, "certificate does not hold for T");
  if (!t.is_mu_closed()) fail(ErrorCode::NotMuClosed, "MRD certification needs a mu-closed defining set");
  MrdCertification m;
  m.bound_value = cert.value();
  m.restricted_size = static_cast<unsigned>(t.restricted().size());
  m.proven = m.restricted_size + 1 == m.bound_value;
  m.reason = "delta + r = " + std::to_string(m.bound_value) + ", |T^F| + 1 = " + std::to_string(m.restricted_size + 1) +
             (m.proven ? ": bounds meet" : ": " + std::to_string(m.bound_value) + " <= d_R <= " +
                                                std::to_string(m.restricted_size + 1));
  return m;
}

DefiningSet repeated_gabidulin(std::int64_t b, std::int64_t s, unsigned delta_prime, unsigned mu, unsigned nu) {
  if (mu == 0 || nu == 0) fail(ErrorCode::InvalidInput, "mu and nu must be positive");
  const unsigned n = mu * nu;
  if (delta_prime < 2 || delta_prime > mu) fail(ErrorCode::InvalidInput, "delta' must lie in [2, mu]");
  if (gcd(static_cast<std::uint64_t>(mod(s, n)), n) != 1) fail(ErrorCode::InvalidInput, "s must be coprime to n");
  std::vector<unsigned> tf;
  for (unsigned i = 0; i + 1 < delta_prime; ++i) tf.push_back(static_cast<unsigned>(mod(b + s * i, mu)));
  return mu_closure(DefiningSet(n, mu, std::move(tf)));
}

RoosCertificate vosper_explain(const DefiningSet& t, const RoosCertificate& cert, const SearchOptions& options) {
  const unsigned mu = t.mu();
  if (!is_prime(mu)) fail(ErrorCode::Unsupported, "mu = " + std::to_string(mu) + " is not prime");
  if (!t.is_mu_closed()) fail(ErrorCode::Unsupported, "defining set is not mu-closed");
  bool ok = false;
  try {
    ok = verify_certificate(t, cert);
  } catch (const Error& e) {
    fail(ErrorCode::Unsupported, std::string("certificate rejected: ") + e.what());
  }
  if (!ok) fail(ErrorCode::Unsupported, "certificate does not hold for T");
  const std::size_t tf = t.restricted().size();
  if (tf + 1 != cert.value()) fail(ErrorCode::Unsupported, "|T^F| differs from delta + r - 1");
  if (tf >= mu) fail(ErrorCode::Unsupported, "delta + r - 1 must be below mu");
  RoosCertificate bch = search_bch(t, options);
  if (bch.value() != cert.value()) {
    fail(ErrorCode::InvariantViolation, "no BCH certificate of value " + std::to_string(cert.value()) +
                                            " (best " + std::to_string(bch.value()) + ")");
  }
  return bch;
}

BoundReport bound_report(const DefiningSet& t, const SearchOptions& options) {
  BoundReport rep;
  rep.t = t;
  rep.n = t.n();
  rep.k = t.n() - static_cast<unsigned>(t.size());
  rep.singleton = singleton_bounds(rep.n, rep.k, t.mu());
  if (t.empty()) {
    // Full space: every nonzero word of weight 1 is a codeword.
    rep.d_h_lower = rep.d_r_lower = 1;
  } else if (t.full()) {
    // Zero code: no distance; report the Singleton convention.
    rep.d_h_lower = rep.singleton.hamming;
    rep.d_r_lower = rep.singleton.rank;
  } else {
    rep.bch = search_bch(t, options);
    rep.roos = search_roos(t, options);
    rep.d_h_lower = rep.d_r_lower = rep.roos->value();
    if (t.is_mu_closed()) rep.mrd_proven_via_tf = mrd_certify(t, *rep.roos).proven;
  }
  rep.mds_proven = rep.d_h_lower >= rep.singleton.hamming;
  rep.mrd_proven = rep.d_r_lower >= rep.singleton.rank;
  return rep;
}

}  // namespace skewroos
