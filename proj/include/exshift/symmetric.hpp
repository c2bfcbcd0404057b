#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "exshift/errors.hpp"
#include "exshift/exterior.hpp"
#include "exshift/field.hpp"
#include "exshift/linalg.hpp"

namespace exshift {

inline constexpr int kMaxSymVariables = 8;

/// Monomial x^a of S = K[x_1..x_n] by exponent vector.
struct SymMonomial {
  std::vector<int> exponents;

  int n() const noexcept { return static_cast<int>(exponents.size()); }
  int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }
  bool is_squarefree() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e <= 1; });
  }
  bool divides(const SymMonomial& o) const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > (i < o.exponents.size() ? o.exponents[i] : 0)) return false;
    return true;
  }
  bool operator==(const SymMonomial&) const = default;
  auto operator<=>(const SymMonomial&) const = default;  // storage order only
};

inline std::string format_exponents(const SymMonomial& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(m.exponents[i]);
  return s + "]";
}

inline SymMonomial sym_from_mask(Mask m, int n) {
  SymMonomial x{std::vector<int>(n, 0)};
  for (int i : indices(m)) x.exponents[i - 1] = 1;
  return x;
}

inline Mask support_mask(const SymMonomial& m) {
  Mask s = 0;
  for (int i = 0; i < m.n(); ++i)
    if (m.exponents[i] > 0) s |= bit(i + 1);
  return s;
}

/// Degree first; within a degree the larger monomial has the smaller
/// exponent at the last index where the two differ.
inline std::strong_ordering sym_compare_degrevlex(const SymMonomial& a, const SymMonomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  const std::size_t len = std::max(a.exponents.size(), b.exponents.size());
  for (std::size_t k = len; k-- > 0;) {
    const int ea = k < a.exponents.size() ? a.exponents[k] : 0;
    const int eb = k < b.exponents.size() ? b.exponents[k] : 0;
    if (ea != eb) return ea < eb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

/// x_{i1} x_{i2} ... x_{it} with i1 <= ... <= it  ->  x_{i1} x_{i2+1} ... x_{it+t-1}.
inline SymMonomial sigma_stretch(const SymMonomial& m) {
  std::vector<int> idx;
  for (int i = 0; i < m.n(); ++i)
    for (int e = 0; e < m.exponents[i]; ++e) idx.push_back(i + 1);
  int top = m.n();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    idx[k] += static_cast<int>(k);
    top = std::max(top, idx[k]);
  }
  SymMonomial out{std::vector<int>(top, 0)};
  for (int i : idx) out.exponents[i - 1] = 1;
  return out;
}

/// Squarefree generators (as vertex sets) of the ideal generated by the
/// stretched minimal generators; they must fit in [n].
inline std::vector<Mask> sigma_ideal(const std::vector<SymMonomial>& minimal_gens, int n) {
  std::vector<Mask> out;
  for (const auto& g : minimal_gens) {
    const SymMonomial s = sigma_stretch(g);
    for (int i = n; i < s.n(); ++i)
      if (s.exponents[i]) throw AmbientTooSmall("stretch of " + format_exponents(g) + " uses x_" + std::to_string(i + 1) + " beyond n = " + std::to_string(n));
    Mask m = 0;
    for (int i = 0; i < std::min(n, s.n()); ++i)
      if (s.exponents[i]) m |= bit(i + 1);
    out.push_back(m);
  }
  return out;
}

/// Monomials of S_d, descending in degrevlex, with lookup and multiplication tables.
class SymmetricBasis {
 public:
  SymmetricBasis(int n, int d) : n_(n), d_(d) {
    if (n < 0 || n > kMaxSymVariables) throw InputError("symmetric computations support at most 8 variables");
    std::vector<int> cur(n, 0);
    enumerate(cur, 0, d);
    std::sort(monomials_.begin(), monomials_.end(), [](const SymMonomial& a, const SymMonomial& b) { return sym_compare_degrevlex(a, b) > 0; });
    for (std::size_t i = 0; i < monomials_.size(); ++i) position_.emplace(key(monomials_[i]), i);
  }

  int n() const noexcept { return n_; }
  int degree() const noexcept { return d_; }
  std::size_t dim() const noexcept { return monomials_.size(); }
  const std::vector<SymMonomial>& monomials() const noexcept { return monomials_; }
  std::size_t position(const SymMonomial& m) const { return position_.at(key(m)); }

  static std::uint64_t key(const SymMonomial& m) {
    std::uint64_t k = 0;
    for (int e : m.exponents) k = (k << 8) | static_cast<std::uint64_t>(e);
    return k;
  }

 private:
  void enumerate(std::vector<int>& cur, int i, int left) {
    if (i == n_) {
      if (left == 0) monomials_.push_back(SymMonomial{cur});
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      enumerate(cur, i + 1, left - e);
    }
    cur[i] = 0;
  }

  int n_, d_;
  std::vector<SymMonomial> monomials_;
  std::unordered_map<std::uint64_t, std::size_t> position_;
};

inline std::shared_ptr<const SymmetricBasis> symmetric_basis(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const SymmetricBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_shared<const SymmetricBasis>(n, d);
  return slot;
}

/// Graded ideal of S known in degrees 0..d_max, each degree a reduced row
/// echelon basis over the degrevlex-descending monomials of S_d.
class SymGradedIdeal {
 public:
  SymGradedIdeal(int n, int d_max, const PrimeField& field) : n_(n), d_max_(d_max), field_(field) {
    for (int d = 0; d <= d_max; ++d) components_.emplace_back(field, 0, symmetric_basis(n, d)->dim());
  }

  /// Monomial ideal truncated at d_max.
  static SymGradedIdeal generated_by_monomials(int n, const std::vector<SymMonomial>& gens, int d_max, const PrimeField& field = PrimeField{}) {
    SymGradedIdeal I(n, d_max, field);
    for (const auto& g : gens)
      if (g.n() != n) throw InputError("generator " + format_exponents(g) + " does not have " + std::to_string(n) + " exponents");
    for (int d = 0; d <= d_max; ++d) {
      const auto basis = symmetric_basis(n, d);
      DenseMatrix m(field, 0, basis->dim());
      for (std::size_t i = 0; i < basis->dim(); ++i) {
        const auto& x = basis->monomials()[i];
        if (std::any_of(gens.begin(), gens.end(), [&](const SymMonomial& g) { return g.divides(x); })) {
          Vector v(basis->dim(), 0);
          v[i] = 1;
          m.append_row(v);
        }
      }
      I.components_[d] = std::move(m);
    }
    return I;
  }

  static SymGradedIdeal from_subspaces(int n, const PrimeField& field, const std::vector<DenseMatrix>& comps) {
    SymGradedIdeal I(n, static_cast<int>(comps.size()) - 1, field);
    for (std::size_t d = 0; d < comps.size(); ++d) I.components_[d] = rref(comps[d]).basis;
    return I;
  }

  int n() const noexcept { return n_; }
  int d_max() const noexcept { return d_max_; }
  const PrimeField& field() const noexcept { return field_; }
  const DenseMatrix& component(int d) const { return components_.at(d); }
  std::size_t dim(int d) const { return components_.at(d).rows(); }

  std::vector<std::size_t> hilbert() const {
    std::vector<std::size_t> h;
    for (const auto& c : components_) h.push_back(c.rows());
    return h;
  }

  std::vector<SymMonomial> monomials(int d) const {
    const auto basis = symmetric_basis(n_, d);
    std::vector<SymMonomial> out;
    const auto& c = components_.at(d);
    for (std::size_t r = 0; r < c.rows(); ++r) {
      int found = -1;
      for (std::size_t k = 0; k < c.cols(); ++k)
        if (c(r, k)) {
          if (found >= 0) throw NotMonomial("symmetric component " + std::to_string(d) + " is not monomial");
          found = static_cast<int>(k);
        }
      out.push_back(basis->monomials()[found]);
    }
    return out;
  }

  bool operator==(const SymGradedIdeal& o) const {
    return n_ == o.n_ && d_max_ == o.d_max_ && field_ == o.field_ && components_ == o.components_;
  }

 private:
  int n_, d_max_;
  PrimeField field_;
  std::vector<DenseMatrix> components_;
};

/// Image of components 0..d_max under x_i -> sum_k g(k,i) x_k.
inline SymGradedIdeal sym_substitute(const DenseMatrix& g, const SymGradedIdeal& I, int d_max) {
  const int n = I.n();
  const PrimeField& f = I.field();
  if (static_cast<int>(g.rows()) != n || static_cast<int>(g.cols()) != n) throw DimensionMismatch("substitution matrix must be n x n");
  if (rank(g) != static_cast<std::size_t>(n)) throw SingularMatrix("substitution matrix is not invertible");
  d_max = std::min(d_max, I.d_max());

  // images[d][pos] = image of the pos-th monomial of S_d, computed by peeling
  // off the last variable: image(m) = image(m / x_l) * (sum_k g(k,l) x_k).
  std::vector<std::vector<Vector>> images(d_max + 1);
  images[0] = {Vector{1}};
  std::vector<DenseMatrix> comps;
  comps.push_back(I.component(0));
  for (int d = 1; d <= d_max; ++d) {
    const auto basis = symmetric_basis(n, d);
    const auto lower = symmetric_basis(n, d - 1);
    images[d].resize(basis->dim());
    const DenseMatrix& c = I.component(d);
    // every image of degree d may be needed for degree d+1, so compute all
    for (std::size_t pos = 0; pos < basis->dim(); ++pos) {
      SymMonomial m = basis->monomials()[pos];
      int last = n - 1;
      while (m.exponents[last] == 0) --last;
      m.exponents[last] -= 1;
      const Vector& prev = images[d - 1][lower->position(m)];
      Vector img(basis->dim(), 0);
      for (std::size_t q = 0; q < prev.size(); ++q) {
        if (!prev[q]) continue;
        SymMonomial x = lower->monomials()[q];
        for (int k = 0; k < n; ++k) {
          const std::uint64_t gk = g(k, last);
          if (!gk) continue;
          x.exponents[k] += 1;
          auto& slot = img[basis->position(x)];
          slot = f.reduce(slot + prev[q] * gk);
          x.exponents[k] -= 1;
        }
      }
      images[d][pos] = std::move(img);
    }
    DenseMatrix out(f, 0, basis->dim());
    for (std::size_t r = 0; r < c.rows(); ++r) {
      Vector row(basis->dim(), 0);
      for (std::size_t k = 0; k < c.cols(); ++k) {
        if (!c(r, k)) continue;
        const auto& img = images[d][k];
        for (std::size_t q = 0; q < img.size(); ++q)
          if (img[q]) row[q] = f.reduce(row[q] + c(r, k) * img[q]);
      }
      out.append_row(row);
    }
    comps.push_back(std::move(out));
  }
  return SymGradedIdeal::from_subspaces(n, f, comps);
}

/// Strong stability: x_j m / x_i stays in the ideal whenever x_i | m and j < i.
inline bool is_strongly_stable(const std::vector<std::vector<SymMonomial>>& components) {
  for (const auto& comp : components) {
    std::vector<std::uint64_t> keys;
    for (const auto& m : comp) keys.push_back(SymmetricBasis::key(m));
    std::sort(keys.begin(), keys.end());
    for (const auto& m : comp)
      for (int i = 1; i < m.n(); ++i) {
        if (!m.exponents[i]) continue;
        for (int j = 0; j < i; ++j) {
          SymMonomial x = m;
          x.exponents[i] -= 1;
          x.exponents[j] += 1;
          if (!std::binary_search(keys.begin(), keys.end(), SymmetricBasis::key(x))) return false;
        }
      }
  }
  return true;
}

/// Minimal generators of a monomial ideal given by full components 0..d_max.
inline std::vector<SymMonomial> sym_minimal_generators(const std::vector<std::vector<SymMonomial>>& components) {
  std::vector<SymMonomial> gens;
  for (const auto& comp : components)
    for (const auto& m : comp)
      if (std::none_of(gens.begin(), gens.end(), [&](const SymMonomial& g) { return g.divides(m); })) gens.push_back(m);
  return gens;
}

/// Number of monomials of degree d divisible by at least one generator.
inline std::size_t count_multiples(const std::vector<SymMonomial>& gens, int n, int d) {
  const auto basis = symmetric_basis(n, d);
  std::size_t count = 0;
  for (const auto& x : basis->monomials())
    if (std::any_of(gens.begin(), gens.end(), [&](const SymMonomial& g) { return g.divides(x); })) ++count;
  return count;
}

}  // namespace exshift
