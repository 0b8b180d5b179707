#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewroos/linalg.hpp"
#include "skewroos/skew_code.hpp"

namespace skewroos {

/// Closed interval; exact when lo == hi.
struct DistanceValue {
  unsigned lo = 0;
  unsigned hi = 0;
  bool exact() const noexcept { return lo == hi; }
  friend bool operator==(const DistanceValue&, const DistanceValue&) = default;
};

struct DistanceOptions {
  unsigned threads = 1;
  /// Maximum number of column subsets tested; 0 means unlimited.
  std::uint64_t budget_subsets = 0;
  /// Maximum number of support subspaces tested; 0 means unlimited.
  std::uint64_t budget_subspaces = 0;
};

struct DistanceReport {
  std::optional<DistanceValue> d_h;
  std::optional<DistanceValue> d_r;
  std::vector<Elem> witness_hamming;  // over F
  std::vector<Elem> witness_rank;     // over F
  std::string method_hamming;
  std::string method_rank;
  std::uint64_t subsets_examined = 0;
  std::uint64_t subspaces_examined = 0;
  /// A budget ran out and at least one value is an interval.
  bool partial = false;
};

unsigned hamming_weight(std::span<const Elem> v);
/// dim_K of the span of the entries of v, for v over F.
unsigned rank_weight(const Tower& tower, std::span<const Elem> v);
/// Same for v over E.
unsigned rank_weight_e(const Tower& tower, std::span<const Elem> v);

/// Outcome of the smallest-dependent-column-set search on a matrix H.
struct DependencyResult {
  /// Exact minimum (or the interval reached before the budget ran out).
  DistanceValue weight;
  /// Nonzero x with H x^T = 0 and hamming_weight(x) = weight.lo, when exact.
  std::vector<Elem> witness;
  std::uint64_t subsets = 0;
};
/// Smallest w such that some w columns of H are linearly dependent; subsets
/// of each size are visited in colexicographic order. Throws ZeroCode when
/// the columns are independent (the kernel is zero).
DependencyResult min_dependent_columns(const Matrix& h, const DistanceOptions& options = {});

DistanceReport min_hamming_distance(const SkewCyclicCode& code, const DistanceOptions& options = {});
DistanceReport min_rank_distance(const SkewCyclicCode& code, const DistanceOptions& options = {});
/// Both searches in one report.
DistanceReport measure(const SkewCyclicCode& code, const DistanceOptions& options = {});

/// Minimum Hamming distance of the code over E, using its alpha-column matrix as parity check.
DependencyResult extension_hamming_distance(const ExtensionCode& code, const DistanceOptions& options = {});

/// d_H over E equals d_H over F; false is an invariant violation the caller reports.
bool check_subfield_distance_equality(const SkewCyclicCode& code, const DistanceOptions& options = {});

struct Classification {
  bool is_mds = false;
  bool is_mrd = false;
  bool is_almost_mrd = false;
};
Classification classify(unsigned n, unsigned k, unsigned mu, unsigned d_h, unsigned d_r);

/// K-linear expansion of the code: a (k mu) x (n mu) matrix over K whose rows
/// are the coordinate expansions of a^l * (row i of G).
Matrix k_expansion(const SkewCyclicCode& code);

}  // namespace skewroos
