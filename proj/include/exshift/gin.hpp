#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exshift/errors.hpp"
#include "exshift/exterior.hpp"
#include "exshift/field.hpp"
#include "exshift/linalg.hpp"
#include "exshift/symmetric.hpp"

namespace exshift {

inline constexpr int kDefaultTrials = 3;

struct ExtGinResult {
  ExtGradedIdeal ideal;
  int trials_used = 0;
  bool certified = false;  // the first round of trials was unanimous
};

struct SymGinResult {
  SymGradedIdeal ideal;
  std::vector<std::vector<SymMonomial>> components;  // degrees 0..n
  std::vector<SymMonomial> generators;
  int trials_used = 0;
  bool certified = false;
};

/// Degreewise initial ideal: pivots of each component after ordering the
/// columns descending in `order`.
inline ExtGradedIdeal initial_ideal(const ExtGradedIdeal& J, ExtOrder order) {
  const int n = J.n();
  const auto target = exterior_basis(n, order);
  std::vector<std::vector<Mask>> comps(n + 1);
  for (int d = 0; d <= n; ++d) {
    const DenseMatrix& c = J.component(d);
    if (c.rows() == 0) continue;
    std::vector<std::size_t> cols;
    for (Mask m : target->monomials(d)) cols.push_back(J.basis().position(m));
    for (auto p : rref(c.select_columns(cols)).pivots) comps[d].push_back(target->monomials(d)[p]);
  }
  return ExtGradedIdeal::from_monomial_components(n, J.field(), comps);
}

/// Leading monomials of each component of a symmetric ideal, degrees 0..d_max.
inline std::vector<std::vector<SymMonomial>> initial_ideal(const SymGradedIdeal& I) {
  std::vector<std::vector<SymMonomial>> comps;
  for (int d = 0; d <= I.d_max(); ++d) {
    const auto basis = symmetric_basis(I.n(), d);
    std::vector<SymMonomial> lead;
    for (auto p : rref(I.component(d)).pivots) lead.push_back(basis->monomials()[p]);
    comps.push_back(std::move(lead));
  }
  return comps;
}

namespace detail {

// Runs `one_trial` in rounds of `trials`; returns the common value of the
// first unanimous round. At most two rounds.
template <class T, class Trial>
T agree(int trials, Trial one_trial, int& used, bool& certified, const std::string& what) {
  if (trials < 2) throw InputError("at least two trials are required");
  used = 0;
  for (int round = 0; round < 2; ++round) {
    T first = one_trial();
    bool same = true;
    for (int t = 1; t < trials; ++t)
      if (!(one_trial() == first)) same = false;
    used += trials;
    if (same) {
      certified = round == 0;
      return first;
    }
  }
  throw GenericityFailure(what + ": random trials disagree after resampling");
}

}  // namespace detail

inline ExtGinResult gin_exterior(const ExtGradedIdeal& J, ExtOrder order = ExtOrder::DegRevLex, int trials = kDefaultTrials, std::uint64_t seed = 0) {
  std::mt19937_64 rng(seed);
  ExtGinResult res;
  res.ideal = detail::agree<ExtGradedIdeal>(
      trials, [&] { return initial_ideal(substitute(random_invertible(J.n(), J.field(), rng), J), order); }, res.trials_used,
      res.certified, "exterior gin");
  if (!is_squarefree_strongly_stable(res.ideal)) throw StabilityFailure("exterior gin is not squarefree strongly stable");
  return res;
}

/// Generic initial ideal in S with respect to degrevlex, degrees 0..n. The
/// input must be known through degree n; for monomial input the Hilbert
/// function of the generated ideal is re-checked in degree n + 1.
inline SymGinResult gin_symmetric(const SymGradedIdeal& I, int trials = kDefaultTrials, std::uint64_t seed = 0) {
  const int n = I.n();
  if (I.d_max() < n) throw InputError("symmetric ideal must be known through degree n");
  std::mt19937_64 rng(seed);
  SymGinResult res{SymGradedIdeal(n, n, I.field()), {}, {}, 0, false};
  res.components = detail::agree<std::vector<std::vector<SymMonomial>>>(
      trials,
      [&] {
        auto comps = initial_ideal(sym_substitute(random_invertible(n, I.field(), rng), I, n));
        comps.resize(n + 1);
        return comps;
      },
      res.trials_used, res.certified, "symmetric gin");
  if (!is_strongly_stable(res.components)) throw StabilityFailure("symmetric gin is not strongly stable");
  res.generators = sym_minimal_generators(res.components);
  res.ideal = SymGradedIdeal::generated_by_monomials(n, res.generators, n, I.field());
  if (res.ideal.hilbert() != I.hilbert()) throw GenericityFailure("gin generators do not reproduce the Hilbert function");

  bool monomial = true;
  std::vector<std::vector<SymMonomial>> input;
  try {
    for (int d = 0; d <= n; ++d) input.push_back(I.monomials(d));
  } catch (const NotMonomial&) {
    monomial = false;
  }
  if (monomial) {
    const auto input_gens = sym_minimal_generators(input);
    if (count_multiples(res.generators, n, n + 1) != count_multiples(input_gens, n, n + 1))
      throw GenericityFailure("Hilbert function of the gin differs in degree n + 1");
  }
  return res;
}

}  // namespace exshift
