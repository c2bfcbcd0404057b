#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "exshift/errors.hpp"
#include "exshift/exterior.hpp"
#include "exshift/field.hpp"
#include "exshift/gin.hpp"
#include "exshift/linalg.hpp"

namespace exshift {

/// beta_{ijp} for 1 <= p <= n, 0 <= i <= i_max, 0 <= j <= n + i.
class CartanBettiTable {
 public:
  CartanBettiTable() = default;
  CartanBettiTable(int n, int i_max, bool truncated_above_p = false)
      : n_(n), i_max_(i_max), truncated_(truncated_above_p), data_(n + 1) {
    for (int p = 1; p <= n; ++p) {
      data_[p].resize(i_max + 1);
      for (int i = 0; i <= i_max; ++i) data_[p][i].assign(n + i + 1, 0);
    }
  }

  int n() const noexcept { return n_; }
  int i_max() const noexcept { return i_max_; }
  bool truncated_above_p() const noexcept { return truncated_; }

  std::size_t at(int i, int j, int p) const {
    if (p < 1 || p > n_ || i < 0 || i > i_max_ || j < 0 || j > n_ + i) return 0;
    return data_[p][i][j];
  }
  void set(int i, int j, int p, std::size_t v) { data_.at(p).at(i).at(j) = v; }

  /// Row for one p: [i][j].
  const std::vector<std::vector<std::size_t>>& slice(int p) const { return data_.at(p); }
  void set_slice(int p, std::vector<std::vector<std::size_t>> rows) { data_.at(p) = std::move(rows); }

  /// Zeroes every entry with i > p.
  void truncate_above_p() {
    truncated_ = true;
    for (int p = 1; p <= n_; ++p)
      for (int i = p + 1; i <= i_max_; ++i) std::fill(data_[p][i].begin(), data_[p][i].end(), 0);
  }

  /// First (i, j, p) where this table exceeds `o`, if any.
  std::optional<std::array<int, 3>> first_excess_over(const CartanBettiTable& o) const {
    for (int p = 1; p <= n_; ++p)
      for (int i = 0; i <= i_max_; ++i)
        for (int j = 0; j <= n_ + i; ++j)
          if (at(i, j, p) > o.at(i, j, p)) return std::array<int, 3>{i, j, p};
    return std::nullopt;
  }
  bool leq(const CartanBettiTable& o) const { return !first_excess_over(o); }

  bool operator==(const CartanBettiTable&) const = default;

 private:
  int n_ = 0, i_max_ = 0;
  bool truncated_ = false;
  std::vector<std::vector<std::vector<std::size_t>>> data_;  // [p][i][j]
};

/// Exponent vectors a with |a| = i in p parts, and the lowering maps a -> a - e_k.
class DividedPowers {
 public:
  DividedPowers(int p, int i_max) : p_(p), by_degree_(i_max + 1), lower_(i_max + 1) {
    std::vector<int> cur(p, 0);
    for (int i = 0; i <= i_max; ++i) enumerate(cur, 0, i, by_degree_[i]);
    for (int i = 0; i <= i_max; ++i) {
      std::map<std::vector<int>, int> pos;
      for (std::size_t k = 0; k < by_degree_[i].size(); ++k) pos[by_degree_[i][k]] = static_cast<int>(k);
      index_.push_back(std::move(pos));
    }
    for (int i = 1; i <= i_max; ++i)
      for (const auto& a : by_degree_[i]) {
        std::vector<int> row(p, -1);
        for (int k = 0; k < p; ++k)
          if (a[k] > 0) {
            auto b = a;
            --b[k];
            row[k] = index_[i - 1].at(b);
          }
        lower_[i].push_back(std::move(row));
      }
  }

  int p() const noexcept { return p_; }
  std::size_t count(int i) const { return i < 0 || i >= static_cast<int>(by_degree_.size()) ? 0 : by_degree_[i].size(); }
  const std::vector<int>& index(int i, std::size_t k) const { return by_degree_[i][k]; }
  int position(const std::vector<int>& a) const;
  /// Position of a - e_k in degree i - 1, or -1 when a_k = 0.
  int lowered(int i, std::size_t a, int k) const { return lower_[i][a][k]; }

 private:
  static void enumerate(std::vector<int>& cur, int k, int left, std::vector<std::vector<int>>& out) {
    if (k + 1 == static_cast<int>(cur.size())) {
      cur[k] = left;
      out.push_back(cur);
      return;
    }
    if (cur.empty()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[k] = e;
      enumerate(cur, k + 1, left - e, out);
    }
  }

  int p_;
  std::vector<std::vector<std::vector<int>>> by_degree_;
  std::vector<std::map<std::vector<int>, int>> index_;
  std::vector<std::vector<std::vector<int>>> lower_;
};

inline int DividedPowers::position(const std::vector<int>& a) const {
  int i = 0;
  for (int x : a) i += x;
  return index_.at(i).at(a);
}

/// Cartan complex C(v; E/J) for a sequence of coordinate vectors v_k = e_{vars[k]}.
/// Chains of homological degree i and internal degree j have basis
/// (standard monomial m of degree j - i) x (divided power index a, |a| = i);
/// the differential is m x^(a) -> sum_k (m ^ v_k) x^(a - e_k).
class CartanComplex {
 public:
  /// Chains are built up to homological degree i_top.
  CartanComplex(const ExtGradedIdeal& J, std::vector<int> vars, int i_top)
      : J_(J), vars_(std::move(vars)), powers_(static_cast<int>(vars_.size()), i_top) {
    const int n = J.n();
    const auto& basis = J.basis();
    standard_.resize(n + 2);
    std::vector<std::vector<int>> where(n + 1);  // position in E_d -> index among standard monomials, or -1
    for (int d = 0; d <= n; ++d) {
      const auto red = J.component(d);
      std::vector<bool> pivot(basis.dim(d), false);
      for (std::size_t r = 0; r < red.rows(); ++r)
        for (std::size_t c = 0; c < red.cols(); ++c)
          if (red(r, c)) {
            pivot[c] = true;
            pivot_row_[{d, c}] = r;
            break;
          }
      where[d].assign(basis.dim(d), -1);
      for (std::size_t c = 0; c < basis.dim(d); ++c)
        if (!pivot[c]) {
          where[d][c] = static_cast<int>(standard_[d].size());
          standard_[d].push_back(basis.monomials(d)[c]);
        }
    }
    // right multiplication by each v_k, reduced modulo J
    const PrimeField& f = J.field();
    mult_.assign(vars_.size(), std::vector<DenseMatrix>(n + 1));
    for (std::size_t k = 0; k < vars_.size(); ++k)
      for (int d = 0; d <= n; ++d) {
        const std::size_t rows = d < n ? standard_[d + 1].size() : 0;
        DenseMatrix m(f, rows, standard_[d].size());
        if (d < n)
          for (std::size_t s = 0; s < standard_[d].size(); ++s) {
            const auto w = wedge(standard_[d][s], bit(vars_[k]));
            if (!w.sign) continue;
            Vector v(basis.dim(d + 1), 0);
            v[basis.position(w.support)] = w.sign > 0 ? 1 : f.neg(1);
            reduce(d + 1, v);
            for (std::size_t c = 0; c < v.size(); ++c)
              if (v[c]) m.set(static_cast<std::size_t>(where[d + 1][c]), s, v[c]);
          }
        mult_[k][d] = std::move(m);
      }
  }

  int n() const noexcept { return J_.n(); }
  int p() const noexcept { return static_cast<int>(vars_.size()); }
  const std::vector<int>& vars() const noexcept { return vars_; }
  const DividedPowers& powers() const noexcept { return powers_; }
  const std::vector<Mask>& standard(int d) const { return standard_.at(d); }
  std::size_t module_dim(int d) const { return d < 0 || d > n() ? 0 : standard_[d].size(); }
  /// Matrix of right multiplication by v_k from (E/J)_d to (E/J)_{d+1}.
  const DenseMatrix& multiplication(int k, int d) const { return mult_.at(k).at(d); }

  std::size_t dim(int i, int j) const { return i < 0 ? 0 : module_dim(j - i) * powers_.count(i); }

  /// Coordinates of chain (module index s, power index a) in C_{i,j}.
  std::size_t chain_index(int i, std::size_t s, std::size_t a) const { return s * powers_.count(i) + a; }

  /// Matrix of the differential C_{i,j} -> C_{i-1,j}.
  DenseMatrix boundary(int i, int j) const {
    const PrimeField& f = J_.field();
    DenseMatrix out(f, dim(i - 1, j), dim(i, j));
    if (i <= 0 || out.cols() == 0 || out.rows() == 0) return out;
    const int d = j - i;
    const std::size_t np = powers_.count(i);
    for (std::size_t s = 0; s < module_dim(d); ++s)
      for (std::size_t a = 0; a < np; ++a)
        for (int k = 0; k < p(); ++k) {
          const int b = powers_.lowered(i, a, k);
          if (b < 0) continue;
          const DenseMatrix& m = mult_[k][d];
          for (std::size_t t = 0; t < m.rows(); ++t)
            if (m(t, s)) out.add_to(chain_index(i - 1, t, static_cast<std::size_t>(b)), chain_index(i, s, a), m(t, s));
        }
    return out;
  }

  /// Normal form of a vector of E_d modulo J_d (in place).
  void reduce(int d, Vector& v) const {
    const PrimeField& f = J_.field();
    const DenseMatrix& red = J_.component(d);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c]) continue;
      auto it = pivot_row_.find({d, c});
      if (it == pivot_row_.end()) continue;
      const std::uint64_t factor = f.neg(v[c]);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (red(it->second, k)) v[k] = f.reduce(v[k] + factor * red(it->second, k));
    }
  }

  const ExtGradedIdeal& ideal() const noexcept { return J_; }

 private:
  ExtGradedIdeal J_;
  std::vector<int> vars_;
  DividedPowers powers_;
  std::vector<std::vector<Mask>> standard_;
  std::map<std::pair<int, std::size_t>, std::size_t> pivot_row_;
  std::vector<std::vector<DenseMatrix>> mult_;
};

/// The window e_{n-p+1}, ..., e_n.
inline std::vector<int> last_variables(int n, int p) {
  std::vector<int> v;
  for (int k = n - p + 1; k <= n; ++k) v.push_back(k);
  return v;
}

/// Matrix of the differential for the window of length p on E/J.
inline DenseMatrix boundary_matrix(const ExtGradedIdeal& J, int p, int i, int j) {
  return CartanComplex(J, last_variables(J.n(), p), std::max(i, 0)).boundary(i, j);
}

/// Homology dimensions [i][j] of a Cartan complex, 0 <= i <= i_max, 0 <= j <= n + i.
inline std::vector<std::vector<std::size_t>> cartan_homology(const CartanComplex& C, int i_max) {
  const int n = C.n();
  std::map<std::pair<int, int>, std::size_t> ranks;
  auto rank_at = [&](int i, int j) {
    auto it = ranks.find({i, j});
    if (it != ranks.end()) return it->second;
    const std::size_t r = i <= 0 ? 0 : rank(C.boundary(i, j));
    ranks[{i, j}] = r;
    return r;
  };
  std::vector<std::vector<std::size_t>> out(i_max + 1);
  for (int i = 0; i <= i_max; ++i) {
    out[i].assign(n + i + 1, 0);
    for (int j = i; j <= n + i; ++j) {
      const std::size_t d = C.dim(i, j);
      if (!d) continue;
      out[i][j] = d - rank_at(i, j) - rank_at(i + 1, j);
    }
  }
  return out;
}

/// Cartan homology [i][j] of E/J for a monomial ideal J and the coordinate
/// window `window`. The complex splits by multidegree; every block is the
/// complex on subsets T of the window support P, T -> T + {l}, over the
/// standard monomials S + T, and a block's homology is shared by all
/// multidegrees with the same (S, P).
inline std::vector<std::vector<std::size_t>> monomial_cartan_homology(const std::vector<bool>& in_J, int n, Mask window, int i_max) {
  const PrimeField f;
  std::vector<std::vector<std::size_t>> out(i_max + 1);
  for (int i = 0; i <= i_max; ++i) out[i].assign(n + i + 1, 0);
  const Mask outside = full_mask(n) & ~window;
  auto each_subset = [](Mask set, auto&& fn) {
    for (Mask s = set;; s = (s - 1) & set) {
      fn(s);
      if (s == 0) break;
    }
  };
  each_subset(outside, [&](Mask S) {
    each_subset(window, [&](Mask P) {
      const int size_p = degree(P);
      // chains by |T|
      std::vector<std::vector<Mask>> chains(size_p + 1);
      each_subset(P, [&](Mask T) {
        if (!in_J[S | T]) chains[degree(T)].push_back(T);
      });
      std::vector<std::size_t> ranks(size_p + 1, 0);  // rank of the map out of level c
      for (int c = 0; c < size_p; ++c) {
        if (chains[c].empty() || chains[c + 1].empty()) continue;
        DenseMatrix m(f, chains[c + 1].size(), chains[c].size());
        for (std::size_t t = 0; t < chains[c + 1].size(); ++t)
          for (std::size_t s = 0; s < chains[c].size(); ++s) {
            const Mask diff = chains[c + 1][t] & ~chains[c][s];
            if ((chains[c][s] & ~chains[c + 1][t]) || degree(diff) != 1) continue;
            const auto w = wedge(S | chains[c][s], diff);
            m.set(t, s, w.sign > 0 ? 1 : f.neg(1));
          }
        ranks[c] = rank(m);
      }
      for (int c = 0; c <= size_p; ++c) {
        const std::size_t h = chains[c].size() - ranks[c] - (c > 0 ? ranks[c - 1] : 0);
        if (!h) continue;
        // multidegrees supported exactly on P with total s = i + c
        for (int i = 0; i <= i_max; ++i) {
          const int s = i + c;
          std::size_t count;
          if (size_p == 0) count = s == 0 ? 1 : 0;
          else count = s >= size_p ? binomial(s - 1, size_p - 1) : 0;
          if (!count) continue;
          const int j = degree(S) + s;
          if (j <= n + i) out[i][j] += h * count;
        }
      }
    });
  });
  return out;
}

inline bool is_stable_monomial(const ExtGradedIdeal& J) { return J.is_monomial() && is_squarefree_strongly_stable(J); }

struct CartanOptions {
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  bool truncate_above_p = false;
  std::vector<int> ps;  // empty: all 1..n
};

/// Cartan-Betti numbers by direct homology. Squarefree strongly stable
/// monomial ideals use the coordinate window directly; otherwise the ideal is
/// moved by random invertible matrices, with agreement across trials. For
/// p = n the homology does not depend on coordinates.
inline CartanBettiTable cartan_betti_direct(const ExtGradedIdeal& J, int i_max, const CartanOptions& opt = {}) {
  if (i_max < 0) throw InputError("i_max must be non-negative");
  const int n = J.n();
  CartanBettiTable table(n, i_max);
  std::vector<int> ps = opt.ps;
  if (ps.empty())
    for (int p = 1; p <= n; ++p) ps.push_back(p);
  for (int p : ps)
    if (p < 1 || p > n) throw InputError("p must lie in [1, n]");

  const bool monomial = J.is_monomial();
  const bool stable = monomial && is_squarefree_strongly_stable(J);
  auto window_of = [n](int p) { return full_mask(n) & ~full_mask(n - p); };
  std::vector<int> generic;
  if (monomial) {
    const auto in = J.monomial_table();
    for (int p : ps) {
      if (stable || p == n) table.set_slice(p, monomial_cartan_homology(in, n, window_of(p), i_max));
      else generic.push_back(p);
    }
  } else {
    for (int p : ps) {
      if (p == n) table.set_slice(p, cartan_homology(CartanComplex(J, last_variables(n, p), i_max + 1), i_max));
      else generic.push_back(p);
    }
  }
  if (!generic.empty()) {
    std::mt19937_64 rng(opt.seed);
    using Slices = std::vector<std::vector<std::vector<std::size_t>>>;
    int used = 0;
    bool certified = false;
    const Slices slices = detail::agree<Slices>(
        opt.trials,
        [&] {
          const ExtGradedIdeal moved = substitute(random_invertible(n, J.field(), rng), J);
          Slices s;
          for (int p : generic) {
            if (moved.is_monomial()) s.push_back(monomial_cartan_homology(moved.monomial_table(), n, window_of(p), i_max));
            else s.push_back(cartan_homology(CartanComplex(moved, last_variables(n, p), i_max + 1), i_max));
          }
          return s;
        },
        used, certified, "Cartan homology");
    for (std::size_t k = 0; k < generic.size(); ++k) table.set_slice(generic[k], slices[k]);
  }
  if (opt.truncate_above_p) table.truncate_above_p();
  return table;
}

/// Closed formula for squarefree strongly stable J.
inline std::size_t cartan_betti_closed(const ExtGradedIdeal& J, int i, int jdeg, int p) {
  if (!is_stable_monomial(J)) throw NotStable("closed formula needs a squarefree strongly stable ideal");
  const int n = J.n();
  if (i < 0 || p < 1 || p > n || jdeg < 0) return 0;
  if (i == 0) {
    if (jdeg > n) return 0;
    return binomial(n - p, jdeg) - m_stats(J.monomials(jdeg), n).le(n - p);
  }
  const MStatistics s = m_stats(minimal_generators(J), n);
  std::size_t total = 0;
  for (int k = n - p + 1; k <= n; ++k) total += s.at(k, jdeg - i + 1) * binomial(k + p - n + i - 2, i - 1);
  return total;
}

inline CartanBettiTable cartan_betti_closed_table(const ExtGradedIdeal& J, int i_max) {
  if (!is_stable_monomial(J)) throw NotStable("closed formula needs a squarefree strongly stable ideal");
  const int n = J.n();
  CartanBettiTable table(n, i_max);
  const MStatistics gens = m_stats(minimal_generators(J), n);
  std::vector<MStatistics> comps;
  for (int d = 0; d <= n; ++d) comps.push_back(m_stats(J.monomials(d), n));
  for (int p = 1; p <= n; ++p)
    for (int i = 0; i <= i_max; ++i)
      for (int j = 0; j <= n + i; ++j) {
        std::size_t v = 0;
        if (i == 0) {
          if (j <= n) v = binomial(n - p, j) - comps[j].le(n - p);
        } else {
          for (int k = n - p + 1; k <= n; ++k) v += gens.at(k, j - i + 1) * binomial(k + p - n + i - 2, i - 1);
        }
        table.set(i, j, p, v);
      }
  return table;
}

/// Rank of the connecting map H_i(v_1..v_{p+1})(-1)_jdeg -> H_i(v_1..v_p)_jdeg,
/// [z] -> [h_0 ^ v_{p+1}] where h_0 is the part of z free of x_{p+1}.
/// Sequences are v_k = e_{n+1-k} in the coordinates of `moved`.
inline std::size_t connecting_rank_in(const ExtGradedIdeal& moved, int p, int i, int jdeg) {
  const int n = moved.n();
  std::vector<int> big_vars, small_vars;
  for (int k = 1; k <= p + 1; ++k) big_vars.push_back(n + 1 - k);
  small_vars.assign(big_vars.begin(), big_vars.end() - 1);
  const CartanComplex big(moved, big_vars, i + 1);
  const CartanComplex small(moved, small_vars, i + 1);
  const PrimeField& f = moved.field();

  const int d = jdeg - 1 - i;  // module degree of the cycle
  if (d < 0 || d + 1 > n || big.dim(i, jdeg - 1) == 0 || small.dim(i, jdeg) == 0) return 0;
  const auto cycles = kernel_basis(big.boundary(i, jdeg - 1));
  if (cycles.empty()) return 0;

  const DenseMatrix& times_v = big.multiplication(p, d);  // right multiplication by v_{p+1}
  const auto& bp = big.powers();
  const auto& sp = small.powers();
  DenseMatrix images(f, 0, small.dim(i, jdeg));
  for (const auto& z : cycles) {
    Vector img(small.dim(i, jdeg), 0);
    for (std::size_t s = 0; s < big.module_dim(d); ++s)
      for (std::size_t a = 0; a < bp.count(i); ++a) {
        const std::uint64_t c = z[big.chain_index(i, s, a)];
        if (!c) continue;
        const auto& idx = bp.index(i, a);
        if (idx[p] != 0) continue;
        const std::vector<int> head(idx.begin(), idx.end() - 1);
        const std::size_t b = static_cast<std::size_t>(sp.position(head));
        for (std::size_t t = 0; t < times_v.rows(); ++t)
          if (times_v(t, s)) {
            auto& slot = img[small.chain_index(i, t, b)];
            slot = f.reduce(slot + c * times_v(t, s));
          }
      }
    images.append_row(img);
  }
  const DenseMatrix boundaries = small.boundary(i + 1, jdeg).transpose();
  return rank(boundaries.stacked(images)) - rank(boundaries);
}

/// Coordinates in which the reversed coordinate sequence is generic for E/J:
/// the ideal itself when squarefree strongly stable, else a random image.
inline ExtGradedIdeal generic_coordinates(const ExtGradedIdeal& J, std::mt19937_64& rng) {
  if (is_stable_monomial(J)) return J;
  return substitute(random_invertible(J.n(), J.field(), rng), J);
}

inline std::size_t connecting_map_rank(const ExtGradedIdeal& J, int p_from, int i, int jdeg, std::uint64_t seed = 0) {
  if (p_from < 1 || p_from >= J.n()) throw InputError("p_from must lie in [1, n)");
  if (i < 1) throw InputError("i must be at least 1");
  std::mt19937_64 rng(seed);
  return connecting_rank_in(generic_coordinates(J, rng), p_from, i, jdeg);
}

struct ProperSequenceResult {
  bool proper = true;
  int p_from = 0, i = 0, jdeg = 0;  // witness when not proper
  std::size_t rank = 0;
};

inline ProperSequenceResult is_proper_sequence(const ExtGradedIdeal& J, int i_max, std::uint64_t seed = 0) {
  if (i_max < 1) throw InputError("i_max must be at least 1");
  std::mt19937_64 rng(seed);
  const ExtGradedIdeal moved = generic_coordinates(J, rng);
  const int n = J.n();
  for (int i = 1; i <= i_max; ++i)
    for (int p = 1; p < n; ++p)
      for (int jdeg = i + 1; jdeg <= n + i; ++jdeg) {
        const std::size_t r = connecting_rank_in(moved, p, i, jdeg);
        if (r) return {false, p, i, jdeg, r};
      }
  return {};
}

}  // namespace exshift
