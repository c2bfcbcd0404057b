#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "exshift/errors.hpp"
#include "exshift/field.hpp"
#include "exshift/linalg.hpp"

namespace exshift {

/// Subset of [n] as a bitmask; bit (i-1) stands for vertex / variable i.
using Mask = std::uint32_t;

inline constexpr int kMaxVariables = 16;

inline int degree(Mask m) noexcept { return std::popcount(m); }
inline bool has(Mask m, int i) noexcept { return (m >> (i - 1)) & 1U; }
inline Mask bit(int i) noexcept { return Mask{1} << (i - 1); }
/// Largest index in the set, 0 for the empty set.
inline int max_index(Mask m) noexcept { return m ? 32 - std::countl_zero(m) : 0; }
inline int min_index(Mask m) noexcept { return m ? std::countr_zero(m) + 1 : 0; }
inline Mask full_mask(int n) noexcept { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> indices(Mask m) {
  std::vector<int> out;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1U) out.push_back(i);
  return out;
}

inline Mask mask_of(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) {
    if (i < 1 || i > kMaxVariables) throw InputError("index " + std::to_string(i) + " out of range");
    m |= bit(i);
  }
  return m;
}

/// Text form `[1,3]`.
inline std::string format_mask(Mask m) {
  std::string s = "[";
  bool first = true;
  for (int i : indices(m)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "]";
}

/// Monomial e_F of the exterior algebra on n variables.
struct ExtMonomial {
  Mask support = 0;
  int n = 0;

  int degree() const noexcept { return exshift::degree(support); }
  bool operator==(const ExtMonomial&) const = default;
};

/// Result of a wedge product: sign in {-1, 0, 1} times e_support.
struct SignedMonomial {
  int sign = 0;
  Mask support = 0;
};

inline SignedMonomial wedge(Mask a, Mask b) noexcept {
  if (a & b) return {0, 0};
  // Inversions between sorted(a) followed by sorted(b): pairs x in a, y in b, x > y.
  int inversions = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int y = std::countr_zero(rest);
    inversions += std::popcount(a >> (y + 1));
  }
  return {(inversions & 1) ? -1 : 1, a | b};
}

inline SignedMonomial wedge(const ExtMonomial& a, const ExtMonomial& b) { return wedge(a.support, b.support); }

enum class ExtOrder { DegRevLex, DegLex };

inline std::string to_string(ExtOrder o) { return o == ExtOrder::DegRevLex ? "revlex" : "lex"; }

/// Degree-refining comparison with e_1 > e_2 > ... > e_n.
inline std::strong_ordering compare(ExtOrder order, Mask a, Mask b) noexcept {
  if (a == b) return std::strong_ordering::equal;
  const int da = degree(a), db = degree(b);
  if (da != db) return da <=> db;
  const Mask diff = a ^ b;
  if (order == ExtOrder::DegRevLex) {
    // larger one avoids the largest differing index
    return has(b, max_index(diff)) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return has(a, min_index(diff)) ? std::strong_ordering::greater : std::strong_ordering::less;
}

inline std::strong_ordering compare(ExtOrder order, const ExtMonomial& a, const ExtMonomial& b) noexcept {
  return compare(order, a.support, b.support);
}

/// Monomials of each degree in descending order for a fixed term order,
/// plus the inverse lookup mask -> position.
class ExteriorBasis {
 public:
  ExteriorBasis(int n, ExtOrder order) : n_(n), order_(order), by_degree_(n + 1), position_(std::size_t{1} << n, 0) {
    if (n < 0 || n > kMaxVariables) throw InputError("number of variables must lie in [0, 16]");
    for (Mask m = 0; m <= full_mask(n); ++m) {
      by_degree_[degree(m)].push_back(m);
      if (m == full_mask(n)) break;
    }
    for (auto& list : by_degree_) {
      std::sort(list.begin(), list.end(), [order](Mask a, Mask b) { return compare(order, a, b) > 0; });
      for (std::size_t i = 0; i < list.size(); ++i) position_[list[i]] = static_cast<std::uint32_t>(i);
    }
  }

  int n() const noexcept { return n_; }
  ExtOrder order() const noexcept { return order_; }
  const std::vector<Mask>& monomials(int d) const { return by_degree_.at(d); }
  std::size_t dim(int d) const { return d < 0 || d > n_ ? 0 : by_degree_[d].size(); }
  std::size_t position(Mask m) const { return position_[m]; }

 private:
  int n_;
  ExtOrder order_;
  std::vector<std::vector<Mask>> by_degree_;
  std::vector<std::uint32_t> position_;
};

/// Shared, immutable bases; construction is cheap but they are hot in loops.
inline std::shared_ptr<const ExteriorBasis> exterior_basis(int n, ExtOrder order = ExtOrder::DegRevLex) {
  static std::mutex mutex;
  static std::map<std::pair<int, ExtOrder>, std::shared_ptr<const ExteriorBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, order}];
  if (!slot) slot = std::make_shared<const ExteriorBasis>(n, order);
  return slot;
}

/// Homogeneous or inhomogeneous element of E, as coefficients per monomial.
using ExtPolynomial = std::map<Mask, std::uint64_t>;

/// Graded ideal of E stored degree by degree as a reduced row echelon basis
/// over the monomials of E_d, listed descending in degrevlex.
class ExtGradedIdeal {
 public:
  ExtGradedIdeal() : ExtGradedIdeal(0, PrimeField{}) {}

  /// The zero ideal.
  ExtGradedIdeal(int n, const PrimeField& field) : basis_(exterior_basis(n)), field_(field) {
    for (int d = 0; d <= n; ++d) components_.emplace_back(field_, 0, basis_->dim(d));
  }

  /// Ideal generated by homogeneous elements.
  static ExtGradedIdeal generated_by(int n, const PrimeField& field, const std::vector<ExtPolynomial>& gens) {
    ExtGradedIdeal J(n, field);
    std::vector<std::vector<Vector>> by_degree(n + 1);
    for (const auto& g : gens) {
      int d = -1;
      Vector v;
      for (auto [m, c] : g) {
        if (m & ~full_mask(n)) throw InputError("generator uses a variable outside [n]");
        const std::uint64_t coeff = field.reduce(c);
        if (!coeff) continue;
        if (d < 0) {
          d = degree(m);
          v.assign(J.basis_->dim(d), 0);
        } else if (degree(m) != d) {
          throw InputError("generators must be homogeneous");
        }
        v[J.basis_->position(m)] = field.add(v[J.basis_->position(m)], coeff);
      }
      if (d >= 0) by_degree[d].push_back(std::move(v));
    }
    for (int d = 0; d <= n; ++d) {
      DenseMatrix rows = d > 0 ? J.times_linear(d - 1) : DenseMatrix(field, 0, J.basis_->dim(0));
      for (auto& v : by_degree[d]) rows.append_row(v);
      J.components_[d] = rref(rows).basis;
    }
    return J;
  }

  static ExtGradedIdeal generated_by_monomials(int n, const PrimeField& field, const std::vector<Mask>& gens) {
    std::vector<ExtPolynomial> polys;
    for (Mask m : gens) polys.push_back({{m, 1}});
    return generated_by(n, field, polys);
  }

  /// Monomial ideal from its full per-degree monomial sets. Throws
  /// NotRealizable when the sets are not closed under multiplication.
  static ExtGradedIdeal from_monomial_components(int n, const PrimeField& field, const std::vector<std::vector<Mask>>& comps) {
    ExtGradedIdeal J(n, field);
    for (int d = 0; d <= n && d < static_cast<int>(comps.size()); ++d) {
      std::vector<Mask> sorted = comps[d];
      std::sort(sorted.begin(), sorted.end(), [&](Mask a, Mask b) { return J.basis_->position(a) < J.basis_->position(b); });
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      DenseMatrix m(field, 0, J.basis_->dim(d));
      for (Mask x : sorted) {
        if (degree(x) != d) throw InputError("monomial " + format_mask(x) + " listed in wrong degree");
        Vector v(J.basis_->dim(d), 0);
        v[J.basis_->position(x)] = 1;
        m.append_row(v);
      }
      J.components_[d] = std::move(m);
    }
    if (!J.is_closed()) throw NotRealizable("monomial sets are not closed under multiplication by E_1");
    return J;
  }

  /// Ideal with the given per-degree subspaces (rows in degrevlex-descending coordinates).
  static ExtGradedIdeal from_subspaces(int n, const PrimeField& field, const std::vector<DenseMatrix>& comps) {
    ExtGradedIdeal J(n, field);
    for (int d = 0; d <= n && d < static_cast<int>(comps.size()); ++d) {
      if (comps[d].cols() != J.basis_->dim(d)) throw DimensionMismatch("component " + std::to_string(d) + " has wrong width");
      J.components_[d] = rref(comps[d]).basis;
    }
    return J;
  }

  int n() const noexcept { return basis_->n(); }
  const PrimeField& field() const noexcept { return field_; }
  const ExteriorBasis& basis() const noexcept { return *basis_; }
  const DenseMatrix& component(int d) const { return components_.at(d); }
  std::size_t dim(int d) const { return d < 0 || d > n() ? 0 : components_[d].rows(); }

  std::vector<std::size_t> hilbert() const {
    std::vector<std::size_t> h;
    for (const auto& c : components_) h.push_back(c.rows());
    return h;
  }

  bool is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const DenseMatrix& c) { return c.rows() == 0; });
  }

  bool is_monomial() const {
    for (const auto& c : components_)
      for (std::size_t r = 0; r < c.rows(); ++r) {
        int nonzero = 0;
        for (std::size_t k = 0; k < c.cols(); ++k) nonzero += c(r, k) != 0;
        if (nonzero != 1) return false;
      }
    return true;
  }

  /// Monomials of a monomial component, in degrevlex-descending order.
  std::vector<Mask> monomials(int d) const {
    std::vector<Mask> out;
    if (d < 0 || d > n()) return out;
    const auto& c = components_[d];
    for (std::size_t r = 0; r < c.rows(); ++r) {
      int found = -1;
      for (std::size_t k = 0; k < c.cols(); ++k)
        if (c(r, k)) {
          if (found >= 0) throw NotMonomial("component " + std::to_string(d) + " is not spanned by monomials");
          found = static_cast<int>(k);
        }
      out.push_back(basis_->monomials(d)[found]);
    }
    return out;
  }

  /// Membership table mask -> in J, for monomial ideals.
  std::vector<bool> monomial_table() const {
    std::vector<bool> in(std::size_t{1} << n(), false);
    for (int d = 0; d <= n(); ++d)
      for (Mask m : monomials(d)) in[m] = true;
    return in;
  }

  /// Rows spanning E_1 * J_d inside E_{d+1}, reduced.
  DenseMatrix times_linear(int d) const { return rref(products_with_linear(d)).basis; }

  /// Unreduced spanning set {e_k ^ v} of E_1 * J_d.
  DenseMatrix products_with_linear(int d) const {
    const int n = this->n();
    DenseMatrix out(field_, 0, basis_->dim(d + 1));
    if (d < 0 || d >= n) return out;
    const auto& comp = components_[d];
    const auto& mons = basis_->monomials(d);
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (int k = 1; k <= n; ++k) {
        Vector v(basis_->dim(d + 1), 0);
        bool any = false;
        for (std::size_t c = 0; c < comp.cols(); ++c) {
          if (!comp(r, c)) continue;
          const auto w = wedge(bit(k), mons[c]);
          if (!w.sign) continue;
          const std::uint64_t val = w.sign > 0 ? comp(r, c) : field_.neg(comp(r, c));
          auto& slot = v[basis_->position(w.support)];
          slot = field_.add(slot, val);
          any = true;
        }
        if (any) out.append_row(v);
      }
    return out;
  }

  /// E_1 * J_d contained in J_{d+1} for every d.
  bool is_closed() const {
    for (int d = 0; d < n(); ++d) {
      const DenseMatrix prod = times_linear(d);
      if (prod.rows() == 0) continue;
      if (rank(components_[d + 1].stacked(prod)) != components_[d + 1].rows()) return false;
    }
    return true;
  }

  bool operator==(const ExtGradedIdeal& o) const {
    return n() == o.n() && field_ == o.field_ && components_ == o.components_;
  }

 private:
  std::shared_ptr<const ExteriorBasis> basis_;
  PrimeField field_;
  std::vector<DenseMatrix> components_;
};

/// Minimal monomial generators G(J), by degree then degrevlex-descending.
inline std::vector<Mask> minimal_generators(const ExtGradedIdeal& J) {
  const auto in = J.monomial_table();
  std::vector<Mask> out;
  for (int d = 0; d <= J.n(); ++d)
    for (Mask m : J.monomials(d)) {
      bool minimal = true;
      for (Mask rest = m; rest && minimal; rest &= rest - 1) {
        const Mask lower = m & ~(rest & -rest);
        if (in[lower]) minimal = false;
      }
      if (minimal) out.push_back(m);
    }
  return out;
}

/// Counts by maximal index: m_i, m_{<= i}, and m_{i,j} split by degree j.
struct MStatistics {
  int n = 0;
  std::vector<std::size_t> m;                    // m[i], i = 0..n (i = 0 only for the monomial 1)
  std::vector<std::size_t> m_le;                 // m_le[i] = sum_{k <= i} m[k]
  std::vector<std::vector<std::size_t>> m_deg;   // m_deg[i][j]

  std::size_t at(int i) const { return i < 0 || i > n ? 0 : m[i]; }
  std::size_t le(int i) const {
    if (i < 0) return 0;
    return m_le[std::min(i, n)];
  }
  std::size_t at(int i, int j) const { return i < 0 || i > n || j < 0 || j > n ? 0 : m_deg[i][j]; }
};

inline MStatistics m_stats(const std::vector<Mask>& gens, int n) {
  MStatistics s;
  s.n = n;
  s.m.assign(n + 1, 0);
  s.m_le.assign(n + 1, 0);
  s.m_deg.assign(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (Mask g : gens) {
    const int i = max_index(g);
    ++s.m[i];
    ++s.m_deg[i][degree(g)];
  }
  std::size_t acc = 0;
  for (int i = 0; i <= n; ++i) {
    acc += s.m[i];
    s.m_le[i] = acc;
  }
  return s;
}

/// Exchange condition e_j ^ e_{F \ i} in J for all e_F in J, i in F, j < i, j not in F,
/// checked on every monomial of every component.
inline bool is_squarefree_strongly_stable(const ExtGradedIdeal& J) {
  const auto in = J.monomial_table();
  for (int d = 0; d <= J.n(); ++d)
    for (Mask m : J.monomials(d))
      for (int i : indices(m))
        for (int j = 1; j < i; ++j)
          if (!has(m, j) && !in[(m & ~bit(i)) | bit(j)]) return false;
  return true;
}

inline std::size_t binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  for (long long k = 1; k <= b; ++k) r = r * static_cast<unsigned>(a - b + k) / static_cast<unsigned>(k);
  return static_cast<std::size_t>(r);
}

/// Squarefree lexsegment ideal: component d holds the first hilbert[d]
/// monomials of E_d in deglex order.
inline ExtGradedIdeal lexsegment_ideal(const std::vector<std::size_t>& hilbert, int n, const PrimeField& field = PrimeField{}) {
  const auto lex = exterior_basis(n, ExtOrder::DegLex);
  std::vector<std::vector<Mask>> comps(n + 1);
  for (int d = 0; d <= n && d < static_cast<int>(hilbert.size()); ++d) {
    if (hilbert[d] > lex->dim(d))
      throw NotRealizable("hilbert[" + std::to_string(d) + "] exceeds dim E_" + std::to_string(d));
    comps[d].assign(lex->monomials(d).begin(), lex->monomials(d).begin() + static_cast<long>(hilbert[d]));
  }
  return ExtGradedIdeal::from_monomial_components(n, field, comps);
}

inline ExtGradedIdeal lexsegment_ideal(const ExtGradedIdeal& J) { return lexsegment_ideal(J.hilbert(), J.n(), J.field()); }

/// Matrix of the induced map on E_d: column F holds the image of e_F under
/// e_i -> sum_k g(k,i) e_k, in degrevlex-descending coordinates.
inline DenseMatrix exterior_power(const DenseMatrix& g, int d) {
  const int n = static_cast<int>(g.rows());
  const PrimeField& f = g.field();
  const auto basis = exterior_basis(n);
  const std::size_t dim = basis->dim(d);
  DenseMatrix out(f, dim, dim);
  // images[m] = image of e_m as coefficient map over masks of the same degree
  std::vector<std::vector<std::pair<Mask, std::uint64_t>>> images(std::size_t{1} << n);
  images[0] = {{0, 1}};
  for (Mask m = 1; m <= full_mask(n); ++m) {
    if (degree(m) > d) {
      if (m == full_mask(n)) break;
      continue;
    }
    const int top = max_index(m);
    const Mask rest = m & ~bit(top);
    std::map<Mask, std::uint64_t> acc;
    for (auto [src, c] : images[rest])
      for (int k = 1; k <= n; ++k) {
        const std::uint64_t gk = g(k - 1, top - 1);
        if (!gk) continue;
        const auto w = wedge(src, bit(k));
        if (!w.sign) continue;
        const std::uint64_t val = f.mul(c, gk);
        acc[w.support] = w.sign > 0 ? f.add(acc[w.support], val) : f.sub(acc[w.support], val);
      }
    auto& img = images[m];
    for (auto [mm, c] : acc)
      if (c) img.emplace_back(mm, c);
    if (m == full_mask(n)) break;
  }
  for (Mask m : basis->monomials(d))
    for (auto [target, c] : images[m]) out.set(basis->position(target), basis->position(m), c);
  return out;
}

/// Image of J under the algebra automorphism induced by g.
inline ExtGradedIdeal substitute(const DenseMatrix& g, const ExtGradedIdeal& J) {
  const int n = J.n();
  if (static_cast<int>(g.rows()) != n || static_cast<int>(g.cols()) != n) throw DimensionMismatch("substitution matrix must be n x n");
  if (rank(g) != static_cast<std::size_t>(n)) throw SingularMatrix("substitution matrix is not invertible");
  std::vector<DenseMatrix> comps;
  for (int d = 0; d <= n; ++d) {
    const DenseMatrix& c = J.component(d);
    if (c.rows() == 0) {
      comps.push_back(c);
      continue;
    }
    // rows v -> (W v)^T = v W^T
    comps.push_back(c * exterior_power(g, d).transpose());
  }
  return ExtGradedIdeal::from_subspaces(n, J.field(), comps);
}

/// Ideal generated by the degree-t component of J.
inline ExtGradedIdeal component_ideal(const ExtGradedIdeal& J, int t) {
  const int n = J.n();
  std::vector<DenseMatrix> comps;
  for (int d = 0; d <= n; ++d) comps.emplace_back(J.field(), 0, J.basis().dim(d));
  if (t >= 0 && t <= n) {
    comps[t] = J.component(t);
    ExtGradedIdeal partial = ExtGradedIdeal::from_subspaces(n, J.field(), comps);
    for (int d = t + 1; d <= n; ++d) {
      comps[d] = partial.times_linear(d - 1);
      partial = ExtGradedIdeal::from_subspaces(n, J.field(), comps);
    }
    return partial;
  }
  return ExtGradedIdeal(n, J.field());
}

/// Uniformly random invertible matrix, by rejection.
inline DenseMatrix random_invertible(int n, const PrimeField& field, std::mt19937_64& rng) {
  for (;;) {
    DenseMatrix g(field, n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g.set(r, c, field.random(rng));
    if (rank(g) == static_cast<std::size_t>(n)) return g;
  }
}

}  // namespace exshift
