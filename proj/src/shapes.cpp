#include "macdonald/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

// -------------------------------------------------------------- IntVector

IntVector::IntVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("integer vectors need at least one entry");
}

int IntVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool IntVector::is_dominant() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

bool IntVector::is_composition() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x >= 0; });
}

IntVector IntVector::negated() const {
  std::vector<int> out(entries_);
  for (int& x : out) x = -x;
  return IntVector(std::move(out));
}

std::string IntVector::to_string() const { return join_ints(entries_); }

// ------------------------------------------------------------ Composition

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("compositions need at least one entry");
  for (int x : entries_) {
    if (x < 0) throw UsageError("composition entries must be nonnegative, got " + join_ints(entries_));
  }
}

int Composition::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool Composition::is_partition() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

std::string Composition::to_string() const { return join_ints(entries_); }

// ------------------------------------------------------------ Permutation

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size(), false);
  for (int x : one_line_) {
    if (x < 1 || static_cast<std::size_t>(x) > one_line_.size() || seen[static_cast<std::size_t>(x - 1)]) {
      throw UsageError("not a permutation: " + join_ints(one_line_));
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::simple(std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) throw IndexError("simple transposition index out of range");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(std::size_t n, const std::vector<std::size_t>& word) {
  Permutation out = identity(n);
  for (std::size_t i : word) out = out * simple(n, i);
  return out;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

std::size_t Permutation::length() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    for (std::size_t j = i + 1; j < one_line_.size(); ++j) {
      if (one_line_[i] > one_line_[j]) ++count;
    }
  }
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (one_line_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::vector<std::size_t> Permutation::reduced_word() const {
  // Strip right descents: if w(i) > w(i+1) then w = (w s_i) s_i with
  // l(w s_i) = l(w) - 1.
  std::vector<int> cur = one_line_;
  std::vector<std::size_t> reversed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        reversed.push_back(i + 1);
        changed = true;
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

IntVector Permutation::act(const IntVector& v) const {
  if (v.size() != size()) throw DimensionError("permutation and vector sizes differ");
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(one_line_[i] - 1)] = v[i];
  return IntVector(std::move(out));
}

Composition Permutation::act(const Composition& v) const {
  return Composition(act(v.as_vector()).entries());
}

std::vector<Scalar> Permutation::act(const std::vector<Scalar>& v) const {
  if (v.size() != size()) throw DimensionError("permutation and vector sizes differ");
  std::vector<Scalar> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(one_line_[i] - 1)] = v[i];
  return out;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) throw DimensionError("permutation sizes differ");
  std::vector<int> out(lhs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs(rhs.one_line_[i]);
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const { return join_ints(one_line_); }

// --------------------------------------------------------- combinatorics

DominantSort dominant_sort(const IntVector& v) {
  std::vector<int> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return v[i] > v[j]; });
  // v+_i = v_{w(i)}
  std::vector<int> w(v.size());
  std::vector<int> sorted(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = order[i] + 1;
    sorted[i] = v[static_cast<std::size_t>(order[i])];
  }
  return {IntVector(std::move(sorted)), Permutation(std::move(w))};
}

namespace {

void fill_degree(std::size_t n, int d, std::size_t pos, std::vector<int>& cur,
                 std::vector<Composition>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.emplace_back(cur);
    return;
  }
  for (int x = d; x >= 0; --x) {
    cur[pos] = x;
    fill_degree(n, d - x, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Composition> compositions_of_degree(std::size_t n, int d) {
  if (n == 0) throw DimensionError("n must be positive");
  std::vector<Composition> out;
  if (d < 0) return out;
  std::vector<int> cur(n, 0);
  fill_degree(n, d, 0, cur, out);
  return out;
}

std::vector<Composition> enumerate_compositions(std::size_t n, int d) {
  std::vector<Composition> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = compositions_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Composition> enumerate_partitions(std::size_t n, int d) {
  std::vector<Composition> out;
  for (const auto& c : enumerate_compositions(n, d)) {
    if (c.is_partition()) out.push_back(c);
  }
  return out;
}

std::vector<Composition> rearrangements(const Composition& alpha) {
  std::vector<int> v = alpha.entries();
  std::sort(v.begin(), v.end());
  std::vector<Composition> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Composition dominant_rearrangement(const Composition& alpha) {
  return Composition(dominant_sort(alpha.as_vector()).dominant.entries());
}

std::vector<CellStats> diagram_stats(const Composition& alpha) {
  const std::size_t n = alpha.size();
  std::vector<CellStats> out;
  for (std::size_t i = 0; i < n; ++i) {
    const int ai = alpha[i];
    int coleg = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > i && alpha[k] > ai) ++coleg;
      if (k < i && alpha[k] >= ai) ++coleg;
    }
    for (int j = 1; j <= ai; ++j) {
      int leg = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k > i && j <= alpha[k] && alpha[k] <= ai) ++leg;
        if (k < i && j <= alpha[k] + 1 && alpha[k] + 1 <= ai) ++leg;
      }
      out.push_back({static_cast<int>(i + 1), j, ai - j, leg, j - 1, coleg});
    }
  }
  return out;
}

bool contains(const Composition& beta, const Composition& alpha) {
  if (beta.size() != alpha.size()) throw DimensionError("containment needs equal lengths");
  const Permutation wb = dominant_sort(beta.as_vector()).shortest;
  const Permutation wa = dominant_sort(alpha.as_vector()).shortest;
  const Permutation w = wb * wa.inverse();
  for (int i = 1; i <= static_cast<int>(alpha.size()); ++i) {
    const int a = alpha[static_cast<std::size_t>(i - 1)];
    const int b = beta[static_cast<std::size_t>(w(i) - 1)];
    if (i < w(i) ? !(a < b) : !(a <= b)) return false;
  }
  return true;
}

IntVector shift_sharp(const IntVector& v) {
  std::vector<int> out(v.size());
  out[0] = v[v.size() - 1] - 1;
  for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
  return IntVector(std::move(out));
}

Composition shift_sharp(const Composition& alpha) {
  if (alpha[alpha.size() - 1] == 0) throw UsageError("alpha# needs a positive last entry");
  return Composition(shift_sharp(alpha.as_vector()).entries());
}

std::vector<Scalar> tau(std::size_t n, const FieldConfig& cfg) {
  std::vector<Scalar> out(n);
  const Scalar t_inv = cfg.t().inverse();
  Scalar cur(1);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = cur;
    cur *= t_inv;
  }
  return out;
}

std::vector<Scalar> rho(std::size_t n, const FieldConfig& cfg) {
  std::vector<Scalar> out(n);
  const Scalar r = cfg.r();
  for (std::size_t i = 0; i < n; ++i) out[i] = -Scalar(static_cast<long>(i)) * r;
  return out;
}

SpectralPoint spectral_qt(const IntVector& v, const FieldConfig& cfg) {
  if (!is_qt_family(cfg.variant())) throw UsageError("spectral_qt needs a (q,t) field");
  const Permutation w = dominant_sort(v).shortest;
  const std::vector<Scalar> wt = w.act(tau(v.size(), cfg));
  const Scalar q = cfg.q();
  SpectralPoint out{{}, SpectralKind::QtBar};
  out.coords.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.coords.push_back(q.pow(v[i]) * wt[i]);
  return out;
}

SpectralPoint spectral_r(const IntVector& v, const FieldConfig& cfg) {
  if (is_qt_family(cfg.variant())) throw UsageError("spectral_r needs an r field");
  const Permutation w = dominant_sort(v).shortest;
  const std::vector<Scalar> wr = w.act(rho(v.size(), cfg));
  SpectralPoint out{{}, SpectralKind::RBar};
  out.coords.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.coords.push_back(Scalar(static_cast<long>(v[i])) + wr[i]);
  return out;
}

SpectralPoint spectral(const IntVector& v, const FieldConfig& cfg) {
  return is_qt_family(cfg.variant()) ? spectral_qt(v, cfg) : spectral_r(v, cfg);
}

SpectralPoint tilde(const Composition& beta, const FieldConfig& cfg) {
  const IntVector reflected = Permutation::longest(beta.size()).act(beta.as_vector()).negated();
  SpectralPoint out = spectral(reflected, cfg);
  out.kind = is_qt_family(cfg.variant()) ? SpectralKind::QtTilde : SpectralKind::RTilde;
  return out;
}

std::vector<int> spectral_rank(const IntVector& v) {
  std::vector<int> k(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j < i && v[j] >= v[i]) ++k[i];
      if (j > i && v[j] > v[i]) ++k[i];
    }
  }
  return k;
}

std::vector<Scalar> scaled(const Scalar& factor, const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(factor * x);
  return out;
}

std::vector<Scalar> shifted(const Scalar& offset, const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(offset + x);
  return out;
}

}  // namespace macdonald
