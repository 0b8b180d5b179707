#include "skewroos/distance.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "skewroos/bounds.hpp"
#include "skewroos/error.hpp"
#include "skewroos/parallel.hpp"

namespace skewroos {
namespace {

constexpr std::string_view kModule = "distance-lab";
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

// Echelon basis grown one vector at a time; every stored vector has a unit
// at its pivot and zeros at the pivots stored before it.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(const Field& f) : f_(f) {}

  // Reduces v in place; true when it ended up zero.
  bool reduce(std::vector<Elem>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = v[piv_[i]];
      if (c.is_zero()) continue;
      const Elem m = f_.neg(c);
      const auto& b = rows_[i];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!b[j].is_zero()) v[j] = f_.add(v[j], f_.mul(m, b[j]));
      }
    }
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e.is_zero(); });
  }

  // v must be reduced and nonzero.
  void push(std::vector<Elem> v) {
    std::size_t p = 0;
    while (v[p].is_zero()) ++p;
    const Elem inv = f_.inv(v[p]);
    for (auto& x : v) x = f_.mul(x, inv);
    piv_.push_back(p);
    rows_.push_back(std::move(v));
  }

  void pop() {
    rows_.pop_back();
    piv_.pop_back();
  }

  std::size_t size() const noexcept { return rows_.size(); }

 private:
  const Field& f_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> piv_;
};

struct SharedBudget {
  std::uint64_t limit = 0;  // 0: unlimited
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> exhausted{false};

  // False once the budget is spent.
  bool take() {
    const auto u = ++used;
    if (limit != 0 && u > limit) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

// Colex DFS over w-subsets of columns with a fixed largest element.
class ColumnSearch {
 public:
  ColumnSearch(const Matrix& columns, SharedBudget& budget, const std::atomic<std::size_t>& best)
      : cols_(columns), f_(*columns.field()), basis_(f_), budget_(budget), best_(best) {}

  // First dependent w-subset (in colex order) whose largest element is top.
  std::vector<std::size_t> run(std::size_t top, unsigned w) {
    chosen_.clear();
    found_ = false;
    visit(top, w);
    if (!found_) return {};
    std::vector<std::size_t> out = chosen_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Returns false to unwind (found, budget spent, or a colex-earlier hit elsewhere).
  bool visit(std::size_t x, unsigned slots) {
    std::vector<Elem> v(cols_.row(x).begin(), cols_.row(x).end());
    const bool dependent = basis_.reduce(v);
    chosen_.push_back(x);
    if (slots == 1) {
      if (!budget_.take()) return false;
      if (dependent) {
        found_ = true;
        return false;
      }
      chosen_.pop_back();
      return true;
    }
    // Every smaller subset was already found independent.
    if (dependent) fail(ErrorCode::InvariantViolation, "dependent proper subset missed by a smaller level");
    basis_.push(std::move(v));
    bool go = true;
    for (std::size_t y = slots - 2; go && y < x; ++y) {
      if (best_.load(std::memory_order_relaxed) < chosen_.front()) return false;
      go = visit(y, slots - 1);
    }
    if (found_) return false;
    basis_.pop();
    chosen_.pop_back();
    return go;
  }

  const Matrix& cols_;
  const Field& f_;
  IncrementalBasis basis_;
  SharedBudget& budget_;
  const std::atomic<std::size_t>& best_;
  std::vector<std::size_t> chosen_;
  bool found_ = false;
};

std::vector<Elem> kernel_witness(const Matrix& h, const std::vector<std::size_t>& support) {
  Matrix sub(h.field(), h.rows(), support.size());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < support.size(); ++j) sub(i, j) = h(i, support[j]);
  }
  const Matrix ker = right_kernel(sub);
  if (ker.rows() == 0) fail(ErrorCode::InvariantViolation, "dependent column set has a trivial kernel");
  std::vector<Elem> x(h.cols());
  for (std::size_t j = 0; j < support.size(); ++j) x[support[j]] = ker(0, j);
  return x;
}

// Addition and multiplication tables for the prime or small base field K.
class SmallField {
 public:
  explicit SmallField(const Field& k) : q_(static_cast<std::size_t>(k.order())) {
    if (q_ > 256) fail(ErrorCode::TooLarge, "rank-distance search supports |K| <= 256");
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    for (std::size_t a = 0; a < q_; ++a) {
      neg_[a] = static_cast<std::uint8_t>(k.neg(Elem{a}).v);
      if (a != 0) inv_[a] = static_cast<std::uint8_t>(k.inv(Elem{a}).v);
      for (std::size_t b = 0; b < q_; ++b) {
        add_[a * q_ + b] = static_cast<std::uint8_t>(k.add(Elem{a}, Elem{b}).v);
        mul_[a * q_ + b] = static_cast<std::uint8_t>(k.mul(Elem{a}, Elem{b}).v);
      }
    }
  }
  std::size_t q() const noexcept { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

 private:
  std::size_t q_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

using Row = std::vector<std::uint8_t>;

// True when the rows span all of K^dim; rows are consumed one by one and
// the scan stops as soon as full rank is reached.
class SpanTest {
 public:
  SpanTest(const SmallField& k, std::size_t dim) : k_(k), dim_(dim) { basis_.reserve(dim); }

  void reset() {
    basis_.clear();
    piv_.clear();
  }
  bool full() const noexcept { return basis_.size() == dim_; }

  void insert(Row v) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::uint8_t c = v[piv_[i]];
      if (c == 0) continue;
      const std::uint8_t m = k_.neg(c);
      const Row& b = basis_[i];
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j] != 0) v[j] = k_.add(v[j], k_.mul(m, b[j]));
      }
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return;
    const std::uint8_t inv = k_.inv(v[p]);
    for (auto& x : v) x = k_.mul(x, inv);
    piv_.push_back(p);
    basis_.push_back(std::move(v));
  }

 private:
  const SmallField& k_;
  std::size_t dim_;
  std::vector<Row> basis_;
  std::vector<std::size_t> piv_;
};

// One w-dimensional subspace of K^mu in reduced row echelon form.
struct Subspace {
  std::vector<unsigned> pivots;
  std::vector<std::vector<std::uint8_t>> r;  // w x mu
};

std::vector<std::vector<unsigned>> combinations(unsigned n, unsigned w) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> c(w);
  for (unsigned i = 0; i < w; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = static_cast<int>(w) - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - w + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (auto j = static_cast<std::size_t>(i) + 1; j < w; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

class RankSearch {
 public:
  RankSearch(const SkewCyclicCode& code, const SmallField& k)
      : k_(k), mu_(code.tower()->mu()), n_(code.n()), rows_(static_cast<std::size_t>(code.k()) * mu_) {
    const Matrix b = k_expansion(code);
    cols_.assign(b.cols(), Row(rows_));
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) cols_[j][i] = static_cast<std::uint8_t>(b(i, j).v);
    }
  }

  std::size_t unknowns() const noexcept { return rows_; }

  // True when some nonzero codeword has every column inside the subspace.
  bool admits(const Subspace& s) const {
    SpanTest span(k_, rows_);
    std::vector<bool> is_piv(mu_, false);
    for (auto p : s.pivots) is_piv[p] = true;
    for (unsigned j = 0; j < n_; ++j) {
      for (unsigned u = 0; u < mu_; ++u) {
        if (is_piv[u]) continue;
        span.insert(constraint(s, j, u));
        if (span.full()) return false;
      }
    }
    return true;
  }

  // Coefficient vectors m over K with m * C = 0 for the constraints of s.
  std::vector<Elem> solution(const Subspace& s, const FieldPtr& kf) const {
    std::vector<bool> is_piv(mu_, false);
    for (auto p : s.pivots) is_piv[p] = true;
    Matrix ct(kf, 0, rows_);
    std::vector<Elem> tmp(rows_);
    for (unsigned j = 0; j < n_; ++j) {
      for (unsigned u = 0; u < mu_; ++u) {
        if (is_piv[u]) continue;
        const Row c = constraint(s, j, u);
        for (std::size_t i = 0; i < rows_; ++i) tmp[i] = Elem{c[i]};
        ct.append_row(tmp);
      }
    }
    if (ct.rows() == 0) {
      std::vector<Elem> m(rows_);
      m[0] = kf->one();
      return m;
    }
    const Matrix ker = right_kernel(ct);
    if (ker.rows() == 0) fail(ErrorCode::InvariantViolation, "admissible subspace without a solution");
    return {ker.row(0).begin(), ker.row(0).end()};
  }

 private:
  // Column (j, u) of the constraint matrix:
  // B[:, j mu + u] - sum_l R[l][u] B[:, j mu + p_l].
  Row constraint(const Subspace& s, unsigned j, unsigned u) const {
    Row v = cols_[static_cast<std::size_t>(j) * mu_ + u];
    for (std::size_t l = 0; l < s.pivots.size(); ++l) {
      const std::uint8_t c = s.r[l][u];
      if (c == 0) continue;
      const std::uint8_t m = k_.neg(c);
      const Row& b = cols_[static_cast<std::size_t>(j) * mu_ + s.pivots[l]];
      for (std::size_t i = 0; i < rows_; ++i) {
        if (b[i] != 0) v[i] = k_.add(v[i], k_.mul(m, b[i]));
      }
    }
    return v;
  }

  const SmallField& k_;
  unsigned mu_;
  unsigned n_;
  std::size_t rows_;
  std::vector<Row> cols_;  // columns of the K-expansion
};

// Free positions (row l, column u) of an RREF with the given pivots.
std::vector<std::pair<unsigned, unsigned>> free_positions(const std::vector<unsigned>& piv, unsigned mu) {
  std::vector<bool> is_piv(mu, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned l = 0; l < piv.size(); ++l) {
    for (unsigned u = piv[l] + 1; u < mu; ++u) {
      if (!is_piv[u]) out.emplace_back(l, u);
    }
  }
  return out;
}

std::vector<Elem> from_k_coords(const Field& f, std::span<const Elem> expanded, unsigned n) {
  const unsigned mu = f.degree();
  std::vector<Elem> out(n);
  std::vector<std::uint64_t> c(mu);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned u = 0; u < mu; ++u) c[u] = expanded[static_cast<std::size_t>(j) * mu + u].v;
    out[j] = f.from_coords(c);
  }
  return out;
}

}  // namespace

unsigned hamming_weight(std::span<const Elem> v) {
  return static_cast<unsigned>(std::count_if(v.begin(), v.end(), [](Elem e) { return !e.is_zero(); }));
}

unsigned rank_weight(const Tower& tower, std::span<const Elem> v) {
  for (auto x : v) tower.require_in_f(x);
  return static_cast<unsigned>(rank(expand_columns(*tower.f(), tower.k(), v)));
}

unsigned rank_weight_e(const Tower& tower, std::span<const Elem> v) {
  for (auto x : v) tower.require_in_e(x);
  return static_cast<unsigned>(rank(expand_columns(*tower.e(), tower.k(), v)));
}

DependencyResult min_dependent_columns(const Matrix& h, const DistanceOptions& options) {
  const std::size_t n = h.cols();
  const std::size_t r = rank(h);
  if (n == 0 || r == n) fail(ErrorCode::ZeroCode, "the code is {0}; its minimum distance is undefined");
  DependencyResult out;
  const Matrix cols = h.transpose();
  SharedBudget budget;
  budget.limit = options.budget_subsets;
  // Any r + 1 columns are dependent.
  const auto ceiling = static_cast<unsigned>(r + 1);
  for (unsigned w = 1; w <= ceiling; ++w) {
    const std::size_t tasks = n - w + 1;
    std::vector<std::vector<std::size_t>> hits(tasks);
    std::atomic<std::size_t> best{kNone};
    parallel_for(tasks, options.threads, [&](std::size_t t) {
      const std::size_t top = w - 1 + t;
      if (best.load() < top || budget.exhausted) return;
      ColumnSearch search(cols, budget, best);
      hits[t] = search.run(top, w);
      if (!hits[t].empty()) {
        std::size_t cur = best.load();
        while (top < cur && !best.compare_exchange_weak(cur, top)) {
        }
      }
    });
    out.subsets = std::min<std::uint64_t>(budget.used.load(), budget.limit == 0 ? budget.used.load() : budget.limit);
    const std::size_t winner = best.load();
    if (winner != kNone) {
      const auto& support = hits[winner - (w - 1)];
      out.weight = {w, w};
      out.witness = kernel_witness(h, support);
      return out;
    }
    if (budget.exhausted) {
      out.weight = {w, ceiling};
      return out;
    }
  }
  fail(ErrorCode::InvariantViolation, "no dependent column set up to rank + 1");
}

DependencyResult extension_hamming_distance(const ExtensionCode& code, const DistanceOptions& options) {
  return min_dependent_columns(code.alpha_columns().transpose(), options);
}

Matrix k_expansion(const SkewCyclicCode& code) {
  const Tower& tw = *code.tower();
  const Field& f = *tw.f();
  const unsigned mu = tw.mu();
  const unsigned n = code.n();
  const Matrix& g = code.generator_matrix();
  Matrix b(tw.k(), static_cast<std::size_t>(code.k()) * mu, static_cast<std::size_t>(n) * mu);
  std::vector<std::uint64_t> unit(mu, 0);
  for (unsigned i = 0; i < code.k(); ++i) {
    for (unsigned l = 0; l < mu; ++l) {
      std::fill(unit.begin(), unit.end(), 0);
      unit[l] = 1;
      const Elem a = f.from_coords(unit);
      for (unsigned j = 0; j < n; ++j) {
        const auto c = f.coords(f.mul(a, g(i, j)));
        for (unsigned u = 0; u < mu; ++u) b(static_cast<std::size_t>(i) * mu + l, static_cast<std::size_t>(j) * mu + u) = Elem{c[u]};
      }
    }
  }
  return b;
}

DistanceReport min_hamming_distance(const SkewCyclicCode& code, const DistanceOptions& options) {
  if (code.k() == 0) fail(ErrorCode::ZeroCode, "the code is {0}; its minimum distance is undefined");
  DistanceReport rep;
  if (code.k() == code.n()) {
    rep.d_h = DistanceValue{1, 1};
    rep.witness_hamming.assign(code.n(), Elem{});
    rep.witness_hamming[0] = code.tower()->f()->one();
    rep.method_hamming = "full space";
    return rep;
  }
  DependencyResult d = min_dependent_columns(code.parity_check(), options);
  rep.d_h = d.weight;
  rep.witness_hamming = std::move(d.witness);
  rep.subsets_examined = d.subsets;
  rep.partial = !d.weight.exact();
  rep.method_hamming = rep.partial ? "column-subset search (budget exhausted)" : "column-subset search";
  return rep;
}

DistanceReport min_rank_distance(const SkewCyclicCode& code, const DistanceOptions& options) {
  if (code.k() == 0) fail(ErrorCode::ZeroCode, "the code is {0}; its minimum distance is undefined");
  const Tower& tw = *code.tower();
  const unsigned mu = tw.mu();
  const SmallField k(*tw.k());
  const RankSearch search(code, k);
  const unsigned ceiling = singleton_bounds(code.n(), code.k(), mu).rank;
  DistanceReport rep;
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> exhausted{false};
  const std::uint64_t limit = options.budget_subspaces;

  for (unsigned w = 1; w <= ceiling; ++w) {
    const auto pivot_sets = combinations(mu, w);
    std::vector<std::optional<Subspace>> hits(pivot_sets.size());
    std::atomic<std::size_t> best{kNone};
    parallel_for(pivot_sets.size(), options.threads, [&](std::size_t t) {
      if (best.load() < t || exhausted) return;
      Subspace s;
      s.pivots = pivot_sets[t];
      s.r.assign(w, std::vector<std::uint8_t>(mu, 0));
      for (unsigned l = 0; l < w; ++l) s.r[l][s.pivots[l]] = 1;
      const auto free = free_positions(s.pivots, mu);
      // Mixed-radix counter over the free entries.
      while (true) {
        if (best.load() < t) return;
        const auto u = ++used;
        if (limit != 0 && u > limit) {
          exhausted = true;
          return;
        }
        if (search.admits(s)) {
          hits[t] = s;
          std::size_t cur = best.load();
          while (t < cur && !best.compare_exchange_weak(cur, t)) {
          }
          return;
        }
        std::size_t i = 0;
        for (; i < free.size(); ++i) {
          auto& e = s.r[free[i].first][free[i].second];
          if (++e < k.q()) break;
          e = 0;
        }
        if (i == free.size()) return;
      }
    });
    rep.subspaces_examined = limit == 0 ? used.load() : std::min(used.load(), limit);
    const std::size_t winner = best.load();
    if (winner != kNone) {
      const std::vector<Elem> m = search.solution(*hits[winner], tw.k());
      const Matrix b = k_expansion(code);
      rep.witness_rank = from_k_coords(*tw.f(), vec_mul(m, b), code.n());
      rep.d_r = DistanceValue{w, w};
      rep.method_rank = "support-subspace search";
      return rep;
    }
    if (exhausted) {
      rep.d_r = DistanceValue{w, ceiling};
      rep.partial = true;
      rep.method_rank = "support-subspace search (budget exhausted)";
      return rep;
    }
  }
  fail(ErrorCode::InvariantViolation, "no codeword within the rank Singleton bound");
}

DistanceReport measure(const SkewCyclicCode& code, const DistanceOptions& options) {
  DistanceReport rep = min_hamming_distance(code, options);
  DistanceReport r = min_rank_distance(code, options);
  rep.d_r = r.d_r;
  rep.witness_rank = std::move(r.witness_rank);
  rep.method_rank = std::move(r.method_rank);
  rep.subspaces_examined = r.subspaces_examined;
  rep.partial = rep.partial || r.partial;
  return rep;
}

bool check_subfield_distance_equality(const SkewCyclicCode& code, const DistanceOptions& options) {
  if (code.k() == 0) return true;
  if (code.k() == code.n()) return true;
  const DependencyResult over_f = min_dependent_columns(code.parity_check(), options);
  const DependencyResult over_e = extension_hamming_distance(code.extension(), options);
  if (!over_f.weight.exact() || !over_e.weight.exact()) {
    fail(ErrorCode::TooLarge, "distance search budget exhausted before both values were exact");
  }
  return over_f.weight == over_e.weight;
}

Classification classify(unsigned n, unsigned k, unsigned mu, unsigned d_h, unsigned d_r) {
  const SingletonBounds sb = singleton_bounds(n, k, mu);
  Classification c;
  c.is_mds = d_h == sb.hamming;
  c.is_mrd = d_r == sb.rank;
  const std::uint64_t km = std::uint64_t{k} * mu;
  c.is_almost_mrd = km % n == 0 && d_r + 1 == sb.rank;
  return c;
}

}  // namespace skewroos
