#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "exshift/errors.hpp"
#include "exshift/exterior.hpp"
#include "exshift/field.hpp"
#include "exshift/simplicial.hpp"

namespace exshift {

/// Uniform integer in [lo, hi] from the raw engine output.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  const std::uint64_t limit = ~0ULL - (~0ULL % span);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

/// Random subset of [n] with exactly k elements.
inline Mask random_subset(int n, int k, std::mt19937_64& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  for (int i = 0; i < k; ++i) std::swap(v[i], v[uniform_int(rng, i, n - 1)]);
  Mask m = 0;
  for (int i = 0; i < k; ++i) m |= bit(v[i]);
  return m;
}

/// 1 + floor(density * 2n) random subsets of size 1..n-1 (a single vertex
/// for n = 1); their maximal members are the facets. Density 0 gives a
/// single facet.
inline SimplicialComplex generate_random_complex(int n, double density, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random complexes need n >= 1");
  const int count = 1 + static_cast<int>(density * 2 * n);
  std::vector<Mask> sets;
  for (int k = 0; k < count; ++k) sets.push_back(random_subset(n, uniform_int(rng, 1, std::max(1, n - 1)), rng));
  return SimplicialComplex(n, sets);
}

/// Smallest squarefree strongly stable ideal containing the given monomials,
/// as a membership table over all subsets of [n].
inline std::vector<bool> stable_closure(const std::vector<Mask>& seeds, int n) {
  std::vector<bool> in(std::size_t{1} << n, false);
  std::vector<Mask> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    const Mask m = todo.back();
    todo.pop_back();
    if (in[m]) continue;
    in[m] = true;
    for (int i : indices(m))
      for (int j = 1; j < i; ++j)
        if (!has(m, j)) todo.push_back((m & ~bit(i)) | bit(j));
    for (int k = 1; k <= n; ++k)
      if (!has(m, k)) todo.push_back(m | bit(k));
  }
  return in;
}

inline ExtGradedIdeal ideal_from_table(const std::vector<bool>& in, int n, const PrimeField& field) {
  std::vector<std::vector<Mask>> comps(n + 1);
  for (Mask m = 0; m < in.size(); ++m)
    if (in[m]) comps[degree(m)].push_back(m);
  return ExtGradedIdeal::from_monomial_components(n, field, comps);
}

/// Stable closure of one to three random monomials of degree 1..n.
inline ExtGradedIdeal generate_random_stable_ideal(int n, std::mt19937_64& rng, const PrimeField& field = PrimeField{}) {
  if (n < 1) throw InputError("random ideals need n >= 1");
  std::vector<Mask> seeds;
  const int count = uniform_int(rng, 1, 3);
  for (int k = 0; k < count; ++k) seeds.push_back(random_subset(n, uniform_int(rng, std::min(2, n), n), rng));
  return ideal_from_table(stable_closure(seeds, n), n, field);
}

/// One to three homogeneous generators of degree 1..3, each a combination
/// of one to three monomials with random nonzero coefficients.
inline std::vector<ExtPolynomial> random_graded_generators(int n, std::mt19937_64& rng, const PrimeField& field = PrimeField{}) {
  if (n < 1) throw InputError("random ideals need n >= 1");
  std::vector<ExtPolynomial> gens;
  const int count = uniform_int(rng, 1, 3);
  for (int k = 0; k < count; ++k) {
    const int d = uniform_int(rng, 1, std::min(3, n));
    const int terms = uniform_int(rng, 1, 3);
    ExtPolynomial g;
    for (int t = 0; t < terms; ++t) g[random_subset(n, d, rng)] = field.random_nonzero(rng);
    gens.push_back(g);
  }
  return gens;
}

inline ExtGradedIdeal generate_random_graded_ideal(int n, std::mt19937_64& rng, const PrimeField& field = PrimeField{}) {
  return ExtGradedIdeal::generated_by(n, field, random_graded_generators(n, rng, field));
}

/// Every squarefree strongly stable ideal of E on n <= 4 variables other than
/// E itself, including the zero ideal.
inline std::vector<ExtGradedIdeal> all_stable_ideals(int n, const PrimeField& field = PrimeField{}) {
  if (n < 1 || n > 4) throw InputError("exhaustive enumeration supports 1 <= n <= 4");
  const std::size_t nonunit = (std::size_t{1} << n) - 1;  // masks 1..2^n - 1
  std::vector<ExtGradedIdeal> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << nonunit); ++choice) {
    std::vector<bool> in(std::size_t{1} << n, false);
    for (std::size_t k = 0; k < nonunit; ++k)
      if ((choice >> k) & 1) in[k + 1] = true;
    bool ok = true;
    for (Mask m = 1; m < in.size() && ok; ++m) {
      if (!in[m]) continue;
      for (int k = 1; k <= n && ok; ++k)
        if (!has(m, k) && !in[m | bit(k)]) ok = false;
      for (int i : indices(m))
        for (int j = 1; j < i && ok; ++j)
          if (!has(m, j) && !in[(m & ~bit(i)) | bit(j)]) ok = false;
    }
    if (ok) out.push_back(ideal_from_table(in, n, field));
  }
  return out;
}

}  // namespace exshift
