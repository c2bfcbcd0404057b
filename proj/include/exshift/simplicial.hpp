#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "exshift/errors.hpp"
#include "exshift/exterior.hpp"
#include "exshift/field.hpp"
#include "exshift/linalg.hpp"
#include "exshift/symmetric.hpp"

namespace exshift {

/// Simplicial complex on [n] given by its facets. No facets at all is the
/// void complex; the single facet {} is the complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  SimplicialComplex(int n, std::vector<Mask> facets) : n_(n) {
    if (n < 0 || n > kMaxVariables) throw InputError("vertex count must lie in [0, 16]");
    for (Mask f : facets)
      if (f & ~full_mask(n)) throw InputError("facet " + format_mask(f) + " leaves [" + std::to_string(n) + "]");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (Mask f : facets)
      if (std::none_of(facets.begin(), facets.end(), [f](Mask g) { return g != f && (f & g) == f; })) facets_.push_back(f);
    std::sort(facets_.begin(), facets_.end(), lex_less);
  }

  /// Complex whose faces are the marked subsets (must be closed under subsets).
  static SimplicialComplex from_face_table(int n, const std::vector<bool>& is_face) {
    std::vector<Mask> maximal;
    for (Mask m = 0; m < is_face.size(); ++m) {
      if (!is_face[m]) continue;
      bool top = true;
      for (int v = 1; v <= n && top; ++v)
        if (!has(m, v) && is_face[m | bit(v)]) top = false;
      if (top) maximal.push_back(m);
    }
    return SimplicialComplex(n, maximal);
  }

  static SimplicialComplex simplex(int n) { return SimplicialComplex(n, {full_mask(n)}); }
  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }

  int n() const noexcept { return n_; }
  const std::vector<Mask>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }

  /// Largest face size (dim + 1); -1 for the void complex.
  int max_face_size() const {
    int d = -1;
    for (Mask f : facets_) d = std::max(d, degree(f));
    return d;
  }
  int dimension() const { return is_void() ? -2 : max_face_size() - 1; }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](Mask f) { return degree(f) == max_face_size(); });
  }

  std::vector<bool> face_table() const {
    std::vector<bool> is_face(std::size_t{1} << n_, false);
    for (Mask f : facets_)
      for (Mask s = f;; s = (s - 1) & f) {
        is_face[s] = true;
        if (s == 0) break;
      }
    return is_face;
  }

  bool contains(Mask face) const {
    return std::any_of(facets_.begin(), facets_.end(), [face](Mask f) { return (face & f) == face; });
  }

  /// Faces grouped by size, each group in increasing bitmask order.
  std::vector<std::vector<Mask>> faces_by_size() const {
    std::vector<std::vector<Mask>> out(std::max(max_face_size() + 1, 0));
    const auto table = face_table();
    for (Mask m = 0; m < table.size(); ++m)
      if (table[m]) out[degree(m)].push_back(m);
    return out;
  }

  bool operator==(const SimplicialComplex& o) const { return n_ == o.n_ && facets_ == o.facets_; }

  /// Lexicographic order on sorted vertex lists.
  static bool lex_less(Mask a, Mask b) {
    const auto x = indices(a), y = indices(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  int n_ = 0;
  std::vector<Mask> facets_;
};

/// (f_{-1}, f_0, ..., f_{dim}); empty for the void complex.
inline std::vector<std::size_t> f_vector(const SimplicialComplex& c) {
  std::vector<std::size_t> f;
  for (const auto& group : c.faces_by_size()) f.push_back(group.size());
  return f;
}

inline SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  const auto is_face = c.face_table();
  const Mask all = full_mask(c.n());
  std::vector<bool> dual(is_face.size(), false);
  for (Mask m = 0; m < dual.size(); ++m) dual[m] = !is_face[all & ~m];
  return SimplicialComplex::from_face_table(c.n(), dual);
}

/// Minimal subsets of [n] that are not faces.
inline std::vector<Mask> minimal_nonfaces(const SimplicialComplex& c) {
  const auto is_face = c.face_table();
  std::vector<Mask> out;
  for (Mask m = 0; m < is_face.size(); ++m) {
    if (is_face[m]) continue;
    bool minimal = true;
    for (int v : indices(m))
      if (!is_face[m & ~bit(v)]) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

inline ExtGradedIdeal sr_ideal_exterior(const SimplicialComplex& c, const PrimeField& field = PrimeField{}) {
  return ExtGradedIdeal::generated_by_monomials(c.n(), field, minimal_nonfaces(c));
}

inline std::vector<SymMonomial> sr_generators_symmetric(const SimplicialComplex& c) {
  std::vector<SymMonomial> gens;
  for (Mask m : minimal_nonfaces(c)) gens.push_back(sym_from_mask(m, c.n()));
  return gens;
}

/// Stanley-Reisner ideal in S, known through degree n.
inline SymGradedIdeal sr_ideal_symmetric(const SimplicialComplex& c, const PrimeField& field = PrimeField{}) {
  return SymGradedIdeal::generated_by_monomials(c.n(), sr_generators_symmetric(c), c.n(), field);
}

/// Complex of the monomials outside a monomial ideal of E.
inline SimplicialComplex complex_of_ideal(const ExtGradedIdeal& J) {
  const auto in = J.monomial_table();
  std::vector<bool> is_face(in.size());
  for (std::size_t m = 0; m < in.size(); ++m) is_face[m] = !in[m];
  return SimplicialComplex::from_face_table(J.n(), is_face);
}

/// Complex of a squarefree monomial ideal of S given by generators.
inline SimplicialComplex complex_of_ideal(const std::vector<SymMonomial>& gens, int n) {
  std::vector<Mask> masks;
  for (const auto& g : gens) {
    if (!g.is_squarefree()) throw NotSquarefree("generator " + format_exponents(g) + " is not squarefree");
    masks.push_back(support_mask(g));
  }
  std::vector<bool> is_face(std::size_t{1} << n, true);
  for (Mask m = 0; m < is_face.size(); ++m)
    for (Mask g : masks)
      if ((g & m) == g) is_face[m] = false;
  return SimplicialComplex::from_face_table(n, is_face);
}

/// Faces are closed under replacing a vertex by a larger unused one.
inline bool is_shifted(const SimplicialComplex& c) {
  const auto is_face = c.face_table();
  for (Mask m = 0; m < is_face.size(); ++m) {
    if (!is_face[m]) continue;
    for (int i : indices(m))
      for (int j = i + 1; j <= c.n(); ++j)
        if (!has(m, j) && !is_face[(m & ~bit(i)) | bit(j)]) return false;
  }
  return true;
}

/// Size of the largest face containing F.
inline int face_degree(const SimplicialComplex& c, Mask face) {
  int d = -1;
  for (Mask f : c.facets())
    if ((face & f) == face) d = std::max(d, degree(f));
  return d;
}

using Triangle = std::vector<std::vector<long long>>;  // [i][r], 0 <= r <= i <= dim + 1

inline Triangle f_triangle(const SimplicialComplex& c) {
  const int top = c.max_face_size();
  Triangle f(std::max(top + 1, 0));
  for (int i = 0; i <= top; ++i) f[i].assign(i + 1, 0);
  const auto is_face = c.face_table();
  for (Mask m = 0; m < is_face.size(); ++m)
    if (is_face[m]) ++f[face_degree(c, m)][degree(m)];
  return f;
}

inline Triangle h_from_f(const Triangle& f) {
  Triangle h = f;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t r = 0; r <= i; ++r) {
      long long v = 0;
      for (std::size_t s = 0; s <= r; ++s) {
        const long long term = static_cast<long long>(binomial(i - s, r - s)) * f[i][s];
        v += ((r - s) % 2) ? -term : term;
      }
      h[i][r] = v;
    }
  return h;
}

inline Triangle f_from_h(const Triangle& h) {
  Triangle f = h;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t r = 0; r <= i; ++r) {
      long long v = 0;
      for (std::size_t s = 0; s <= r; ++s) v += static_cast<long long>(binomial(i - s, r - s)) * h[i][s];
      f[i][r] = v;
    }
  return f;
}

inline Triangle h_triangle(const SimplicialComplex& c) { return h_from_f(f_triangle(c)); }

/// Complex generated by the faces of dimension i.
inline SimplicialComplex skeleton_pure(const SimplicialComplex& c, int i) {
  std::vector<Mask> top;
  const auto by_size = c.faces_by_size();
  if (i + 1 >= 0 && i + 1 < static_cast<int>(by_size.size())) top = by_size[i + 1];
  return SimplicialComplex(c.n(), top);
}

inline SimplicialComplex link(const SimplicialComplex& c, Mask face) {
  std::vector<Mask> out;
  for (Mask f : c.facets())
    if ((face & f) == face) out.push_back(f & ~face);
  return SimplicialComplex(c.n(), out);
}

/// Reduced homology dimensions over F_q for dimensions -1..dim (index k holds
/// dimension k - 1). Empty for the void complex.
inline std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& c, const PrimeField& field = PrimeField{}) {
  const auto groups = c.faces_by_size();
  const int sizes = static_cast<int>(groups.size());
  // boundary from faces of size k to size k - 1, for k = 1..sizes-1
  std::vector<std::size_t> ranks(sizes + 1, 0);
  for (int k = 1; k < sizes; ++k) {
    const auto& hi = groups[k];
    const auto& lo = groups[k - 1];
    DenseMatrix m(field, lo.size(), hi.size());
    for (std::size_t col = 0; col < hi.size(); ++col) {
      int pos = 0;
      for (int v : indices(hi[col])) {
        const Mask face = hi[col] & ~bit(v);
        const auto row = static_cast<std::size_t>(std::lower_bound(lo.begin(), lo.end(), face) - lo.begin());
        m.set(row, col, pos % 2 ? field.neg(1) : 1);
        ++pos;
      }
    }
    ranks[k] = rank(m);
  }
  std::vector<std::size_t> out;
  for (int k = 0; k < sizes; ++k) out.push_back(groups[k].size() - ranks[k] - ranks[k + 1]);
  return out;
}

/// Reisner: every link (including that of ∅) has reduced homology only in its top dimension.
inline bool is_cm_reisner(const SimplicialComplex& c, const PrimeField& field = PrimeField{}) {
  const auto is_face = c.face_table();
  for (Mask m = 0; m < is_face.size(); ++m) {
    if (!is_face[m]) continue;
    const SimplicialComplex lk = link(c, m);
    const auto h = reduced_homology_dims(lk, field);
    const int top = lk.dimension();
    for (int k = -1; k < top; ++k)
      if (h[k + 1]) return false;
  }
  return true;
}

/// Duval: every pure skeleton is Cohen-Macaulay.
inline bool is_sequentially_cm_duval(const SimplicialComplex& c, const PrimeField& field = PrimeField{}) {
  for (int i = -1; i <= c.dimension(); ++i)
    if (!is_cm_reisner(skeleton_pure(c, i), field)) return false;
  return true;
}

/// Socle of the exterior face ring E/J_Γ by degree: kernels of the stacked
/// multiplication maps x -> e_k ^ x.
inline std::vector<std::size_t> socle_dims(const SimplicialComplex& c, const PrimeField& field = PrimeField{}) {
  const auto groups = c.faces_by_size();
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < groups.size(); ++d) {
    const auto& src = groups[d];
    DenseMatrix m(field, 0, src.size());
    if (d + 1 < groups.size()) {
      const auto& dst = groups[d + 1];
      for (int k = 1; k <= c.n(); ++k) {
        DenseMatrix block(field, dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
          const auto w = wedge(bit(k), src[col]);
          if (!w.sign) continue;
          auto it = std::lower_bound(dst.begin(), dst.end(), w.support);
          if (it == dst.end() || *it != w.support) continue;  // product lies in J_Γ
          block.set(static_cast<std::size_t>(it - dst.begin()), col, w.sign > 0 ? 1 : field.neg(1));
        }
        m = m.stacked(block);
      }
    }
    out.push_back(kernel_basis(m).size());
  }
  return out;
}

/// Facets by size 0..dim+1.
inline std::vector<std::size_t> facet_counts_by_size(const SimplicialComplex& c) {
  std::vector<std::size_t> out(std::max(c.max_face_size() + 1, 0), 0);
  for (Mask f : c.facets()) ++out[degree(f)];
  return out;
}

}  // namespace exshift
