#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exshift/cartan.hpp"
#include "exshift/errors.hpp"
#include "exshift/exterior.hpp"
#include "exshift/gin.hpp"
#include "exshift/simplicial.hpp"
#include "exshift/symmetric.hpp"

namespace exshift {

enum class ShiftKind { Exterior, ExteriorLex, Symmetric };

inline std::string to_string(ShiftKind k) {
  switch (k) {
    case ShiftKind::Exterior: return "e";
    case ShiftKind::ExteriorLex: return "tau-lex";
    case ShiftKind::Symmetric: return "s";
  }
  return "?";
}

struct ShiftSettings {
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  PrimeField field{};
};

inline SimplicialComplex shift_exterior(const SimplicialComplex& c, ExtOrder order = ExtOrder::DegRevLex, const ShiftSettings& s = {}) {
  const auto gin = gin_exterior(sr_ideal_exterior(c, s.field), order, s.trials, s.seed);
  return complex_of_ideal(gin.ideal);
}

inline SimplicialComplex shift_symmetric(const SimplicialComplex& c, const ShiftSettings& s = {}) {
  const auto gin = gin_symmetric(sr_ideal_symmetric(c, s.field), s.trials, s.seed);
  const auto gens = sigma_ideal(gin.generators, c.n());
  std::vector<bool> is_face(std::size_t{1} << c.n(), true);
  for (Mask m = 0; m < is_face.size(); ++m)
    for (Mask g : gens)
      if ((g & m) == g) is_face[m] = false;
  return SimplicialComplex::from_face_table(c.n(), is_face);
}

inline SimplicialComplex shift(const SimplicialComplex& c, ShiftKind kind, const ShiftSettings& s = {}) {
  switch (kind) {
    case ShiftKind::Exterior: return shift_exterior(c, ExtOrder::DegRevLex, s);
    case ShiftKind::ExteriorLex: return shift_exterior(c, ExtOrder::DegLex, s);
    case ShiftKind::Symmetric: return shift_symmetric(c, s);
  }
  throw InputError("unknown shifting operation");
}

/// Every face of `small` is a face of `big`.
inline bool is_subcomplex(const SimplicialComplex& small, const SimplicialComplex& big) {
  for (Mask f : small.facets())
    if (!big.contains(f)) return false;
  return true;
}

struct DegreeReport {
  std::size_t deg = 0;
  std::vector<std::size_t> adeg_i;  // facets by size
  std::size_t adeg = 0;
  std::size_t sdeg = 0;
};

/// Facets of maximal dimension.
inline std::size_t deg(const SimplicialComplex& c) {
  const int top = c.max_face_size();
  std::size_t k = 0;
  for (Mask f : c.facets()) k += degree(f) == top;
  return k;
}

inline std::size_t adeg(const SimplicialComplex& c) { return c.facets().size(); }

/// adeg_i for i = 0..top, padded with zeros.
inline std::vector<std::size_t> adeg_vector(const SimplicialComplex& c, int top) {
  auto v = facet_counts_by_size(c);
  v.resize(std::max(top + 1, 0), 0);
  return v;
}

inline DegreeReport degree_report(const SimplicialComplex& c, const ShiftSettings& s = {}) {
  DegreeReport r;
  r.deg = deg(c);
  r.adeg_i = facet_counts_by_size(c);
  r.adeg = adeg(c);
  r.sdeg = adeg(shift_symmetric(c, s));
  if (r.deg > r.adeg || r.adeg > r.sdeg)
    throw OracleDisagreement("degree chain deg <= adeg <= sdeg fails: " + std::to_string(r.deg) + ", " + std::to_string(r.adeg) + ", " +
                             std::to_string(r.sdeg));
  return r;
}

/// Size of the longest final segment {k, ..., n} contained in F.
inline int init_size(Mask f, int n) {
  int k = 0;
  while (k < n && has(f, n - k)) ++k;
  return k;
}

/// b_{i,r} = facets F with |F| = i and |init(F)| = i - r.
inline Triangle iterated_betti_formula(const SimplicialComplex& c) {
  const int top = c.max_face_size();
  Triangle b(std::max(top + 1, 0));
  for (int i = 0; i <= top; ++i) b[i].assign(i + 1, 0);
  for (Mask f : c.facets()) {
    const int i = degree(f);
    ++b[i][i - init_size(f, c.n())];
  }
  return b;
}

/// Iterated Betti numbers of c for the given shift, by the facet formula on
/// the shifted complex; the h-triangle of the shifted complex must agree.
inline Triangle iterated_betti(const SimplicialComplex& c, ShiftKind kind, const ShiftSettings& s = {}) {
  const SimplicialComplex shifted = shift(c, kind, s);
  const Triangle b = iterated_betti_formula(shifted);
  if (b != h_triangle(shifted)) throw RouteMismatch("facet formula and h-triangle of the shifted complex disagree");
  return b;
}

/// Triangles compared after padding to a common size.
inline bool same_triangle(Triangle a, Triangle b) {
  const std::size_t size = std::max(a.size(), b.size());
  for (Triangle* t : {&a, &b}) {
    while (t->size() < size) t->push_back(std::vector<long long>(t->size() + 1, 0));
  }
  return a == b;
}

/// dim (J / E_1 J)_j for j = 0..n, the number of minimal generators by degree.
inline std::vector<std::size_t> generator_degrees(const ExtGradedIdeal& J) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= J.n(); ++d) {
    const std::size_t below = d > 0 ? rank(J.products_with_linear(d - 1)) : 0;
    out.push_back(J.dim(d) - below);
  }
  return out;
}

inline bool is_componentwise_linear(const ExtGradedIdeal& J, std::uint64_t seed = 0, int trials = kDefaultTrials) {
  return generator_degrees(J) == generator_degrees(gin_exterior(J, ExtOrder::DegRevLex, trials, seed).ideal);
}

/// Every component ideal J_<t> has a t-linear resolution up to i_max, checked
/// on graded Betti numbers (the full window p = n).
inline bool has_linear_component_resolutions(const ExtGradedIdeal& J, int i_max) {
  const int n = J.n();
  for (int t = 0; t <= n; ++t) {
    if (J.dim(t) == 0) continue;
    const ExtGradedIdeal Jt = component_ideal(J, t);
    CartanOptions opt;
    opt.ps = {n};
    const auto table = cartan_betti_direct(Jt, i_max, opt);
    for (int i = 1; i <= i_max; ++i)
      for (int j = 0; j <= n + i; ++j)
        if (j != i + t - 1 && table.at(i, j, n)) return false;
  }
  return true;
}

/// dim E_1 J_j = dim E_1 lex(J)_j for every j.
inline bool is_gotzmann(const ExtGradedIdeal& J) {
  const ExtGradedIdeal L = lexsegment_ideal(J);
  for (int d = 0; d < J.n(); ++d)
    if (J.times_linear(d).rows() != L.times_linear(d).rows()) return false;
  return true;
}

/// Cohen-Macaulay via purity of the symmetric shift, checked against Reisner.
inline bool is_cm(const SimplicialComplex& c, const ShiftSettings& s = {}) {
  const bool primary = shift_symmetric(c, s).is_pure();
  if (primary != is_cm_reisner(c, s.field)) throw OracleDisagreement("purity of the symmetric shift disagrees with Reisner's criterion");
  return primary;
}

/// Sequentially Cohen-Macaulay via adeg under exterior shifting, checked against Duval.
inline bool is_sequentially_cm(const SimplicialComplex& c, const ShiftSettings& s = {}) {
  const bool primary = adeg(c) == adeg(shift_exterior(c, ExtOrder::DegRevLex, s));
  if (primary != is_sequentially_cm_duval(c, s.field))
    throw OracleDisagreement("adeg preservation under exterior shifting disagrees with the skeleton criterion");
  return primary;
}

}  // namespace exshift
