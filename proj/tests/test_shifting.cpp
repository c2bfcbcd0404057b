#include <gtest/gtest.h>

#include <random>

#include "exshift/generators.hpp"
#include "exshift/shifting.hpp"

using namespace exshift;

namespace {

SimplicialComplex complex(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Mask> masks;
  for (const auto& f : facets) masks.push_back(mask_of(f));
  return SimplicialComplex(n, masks);
}

ExtGradedIdeal monomial_ideal(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<Mask> masks;
  for (const auto& g : gens) masks.push_back(mask_of(g));
  return ExtGradedIdeal::generated_by_monomials(n, PrimeField{}, masks);
}

const SimplicialComplex kTriangle = complex(3, {{1, 2}, {1, 3}, {2, 3}});
const SimplicialComplex kEdges = complex(4, {{1, 2}, {3, 4}});
const SimplicialComplex kCycle = complex(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
const SimplicialComplex kShiftedEdges = complex(4, {{1}, {2, 4}, {3, 4}});

constexpr ShiftKind kKinds[] = {ShiftKind::Exterior, ShiftKind::ExteriorLex, ShiftKind::Symmetric};

// Every shifted complex on [n] (n <= 4): complements of stable ideals, plus the
// void complex.
std::vector<SimplicialComplex> all_shifted(int n) {
  std::vector<SimplicialComplex> out{SimplicialComplex::void_complex(n)};
  for (const auto& J : all_stable_ideals(n)) out.push_back(complex_of_ideal(J));
  return out;
}

SimplicialComplex random_subcomplex(const SimplicialComplex& c, std::mt19937_64& rng) {
  std::vector<Mask> keep;
  for (Mask f : c.facets())
    if (uniform_int(rng, 0, 1)) keep.push_back(f);
  return SimplicialComplex(c.n(), keep);
}

std::vector<SimplicialComplex> samples(std::uint64_t seed, int count, int n_max) {
  std::mt19937_64 rng(seed);
  std::vector<SimplicialComplex> out{kTriangle, kEdges, kCycle};
  while (static_cast<int>(out.size()) < count) {
    const int n = uniform_int(rng, 2, n_max);
    out.push_back(generate_random_complex(n, uniform_int(rng, 1, 5) / 6.0, rng));
  }
  return out;
}

}  // namespace

TEST(Shift, Fixtures) {
  for (auto kind : kKinds) {
    EXPECT_EQ(shift(kTriangle, kind), kTriangle) << to_string(kind);
    EXPECT_EQ(shift(SimplicialComplex::simplex(3), kind), SimplicialComplex::simplex(3));
    EXPECT_EQ(shift(SimplicialComplex::void_complex(3), kind), SimplicialComplex::void_complex(3));
    EXPECT_EQ(shift(SimplicialComplex(3, {0}), kind), SimplicialComplex(3, {0}));
  }
  EXPECT_EQ(shift(kEdges, ShiftKind::Exterior), kShiftedEdges);
  EXPECT_EQ(shift(kEdges, ShiftKind::Symmetric), kShiftedEdges);
}

TEST(Shift, DisjointEdgesHaveOnlyOneShiftedCandidate) {
  int count = 0;
  for (const auto& s : all_shifted(4))
    if (f_vector(s) == f_vector(kEdges)) {
      ++count;
      EXPECT_EQ(s, kShiftedEdges);
    }
  EXPECT_EQ(count, 1);
}

TEST(Shift, OutputIsAShiftedComplexWithTheSameFVector) {
  // For n <= 4 the output must be one of the enumerated shifted complexes.
  const auto shifted = all_shifted(4);
  for (const auto& c : samples(11, 30, 4))
    for (auto kind : kKinds) {
      const auto s = shift(c, kind);
      EXPECT_TRUE(is_shifted(s));
      EXPECT_EQ(f_vector(s), f_vector(c));
      if (c.n() == 4) EXPECT_NE(std::find(shifted.begin(), shifted.end(), s), shifted.end());
    }
}

TEST(Shift, AxiomsOnRandomComplexes) {
  std::mt19937_64 rng(13);
  for (const auto& c : samples(12, 25, 6))
    for (auto kind : kKinds) {
      ShiftSettings st;
      st.seed = 5;
      const auto s = shift(c, kind, st);
      EXPECT_TRUE(is_shifted(s));
      EXPECT_EQ(shift(s, kind, st), s);
      EXPECT_EQ(f_vector(s), f_vector(c));
      const auto sub = random_subcomplex(c, rng);
      EXPECT_TRUE(is_subcomplex(shift(sub, kind, st), s));
    }
}

TEST(Shift, ExteriorShiftCommutesWithDuality) {
  for (const auto& c : samples(14, 30, 6))
    for (auto order : {ExtOrder::DegRevLex, ExtOrder::DegLex}) EXPECT_EQ(alexander_dual(shift_exterior(c, order)), shift_exterior(alexander_dual(c), order));
}

TEST(Shift, ReproducibleAcrossSeedsAndPrimes) {
  for (const auto& c : samples(15, 10, 5))
    for (auto kind : kKinds) {
      ShiftSettings a, b;
      b.seed = 99;
      b.field = PrimeField(1000000007);
      EXPECT_EQ(shift(c, kind, a), shift(c, kind, b));
    }
}

TEST(Degrees, Fixtures) {
  const auto edges = degree_report(kEdges);
  EXPECT_EQ(edges.deg, 2u);
  EXPECT_EQ(edges.adeg, 2u);
  EXPECT_EQ(edges.sdeg, 3u);
  EXPECT_EQ(edges.adeg_i, (std::vector<std::size_t>{0, 0, 2}));
  const auto tri = degree_report(kTriangle);
  EXPECT_EQ(tri.deg, 3u);
  EXPECT_EQ(tri.adeg, 3u);
  EXPECT_EQ(tri.sdeg, 3u);
  const auto full = degree_report(SimplicialComplex::simplex(4));
  EXPECT_EQ(full.deg, 1u);
  EXPECT_EQ(full.adeg, 1u);
  EXPECT_EQ(full.sdeg, 1u);
  EXPECT_EQ(adeg(shift_exterior(kEdges)), 3u);
  const auto none = degree_report(SimplicialComplex::void_complex(3));
  EXPECT_EQ(none.deg + none.adeg + none.sdeg, 0u);
}

TEST(Degrees, FacetCountsGrowUnderShiftingAndExteriorStaysBelowLex) {
  for (const auto& c : samples(16, 30, 6)) {
    const int top = c.max_face_size();
    const auto base = adeg_vector(c, top);
    const auto e = adeg_vector(shift(c, ShiftKind::Exterior), top);
    const auto l = adeg_vector(shift(c, ShiftKind::ExteriorLex), top);
    const auto s = adeg_vector(shift(c, ShiftKind::Symmetric), top);
    for (int i = 0; i <= top; ++i) {
      EXPECT_LE(base[i], e[i]);
      EXPECT_LE(base[i], l[i]);
      EXPECT_LE(base[i], s[i]);
      EXPECT_LE(e[i], l[i]);
    }
  }
}

TEST(Degrees, ChainAndSequentialEquality) {
  for (const auto& c : samples(17, 30, 6)) {
    const auto r = degree_report(c);
    EXPECT_LE(r.deg, r.adeg);
    EXPECT_LE(r.adeg, r.sdeg);
    if (is_sequentially_cm_duval(c)) {
      EXPECT_EQ(r.sdeg, r.adeg);
    }
  }
}

TEST(Predicates, ShiftedOutputsAreSequentiallyCMAndPureMeansCM) {
  for (const auto& c : samples(18, 25, 6))
    for (auto kind : kKinds) {
      const auto s = shift(c, kind);
      EXPECT_TRUE(is_sequentially_cm_duval(s));
      EXPECT_EQ(s.is_pure(), is_cm_reisner(s));
    }
}

TEST(Predicates, CohenMacaulayFixtures) {
  EXPECT_TRUE(is_cm(kTriangle));
  EXPECT_TRUE(is_sequentially_cm(kTriangle));
  EXPECT_FALSE(is_cm(kEdges));
  EXPECT_FALSE(is_sequentially_cm(kEdges));
  EXPECT_TRUE(is_cm(kCycle));
}

TEST(Predicates, PrimaryRoutesAgreeWithTheirOracles) {
  int cm = 0, seq = 0, total = 0;
  for (const auto& c : samples(19, 40, 6)) {
    EXPECT_EQ(shift_symmetric(c).is_pure(), is_cm_reisner(c));
    EXPECT_EQ(adeg(shift_exterior(c)) == adeg(c), is_sequentially_cm_duval(c));
    cm += is_cm(c);
    seq += is_sequentially_cm(c);
    ++total;
  }
  EXPECT_GT(seq, cm);
  EXPECT_LT(seq, total);
}

TEST(IteratedBetti, Fixtures) {
  const auto tri = iterated_betti(kTriangle, ShiftKind::Exterior);
  EXPECT_EQ(tri[2], (std::vector<long long>{1, 1, 1}));
  const auto edges = iterated_betti(kEdges, ShiftKind::Exterior);
  ASSERT_EQ(edges.size(), 3u);
  EXPECT_EQ(edges[1], (std::vector<long long>{0, 1}));
  EXPECT_EQ(edges[2], (std::vector<long long>{1, 1, 0}));
  EXPECT_EQ(h_triangle(kEdges)[2][2], -1);
  EXPECT_FALSE(same_triangle(edges, h_triangle(kEdges)));
  const auto full = iterated_betti(SimplicialComplex::simplex(3), ShiftKind::Symmetric);
  EXPECT_EQ(full[3], (std::vector<long long>{1, 0, 0, 0}));
  EXPECT_EQ(init_size(mask_of({2, 4}), 4), 1);
  EXPECT_EQ(init_size(mask_of({3, 4}), 4), 2);
  EXPECT_EQ(init_size(mask_of({1}), 4), 0);
}

TEST(IteratedBetti, SumsAndTheSequentialCharacterization) {
  for (const auto& c : samples(20, 30, 6)) {
    for (auto kind : kKinds) {
      const auto s = shift(c, kind);
      const auto b = iterated_betti(c, kind);
      long long top = 0, all = 0;
      for (std::size_t i = 0; i < b.size(); ++i)
        for (long long v : b[i]) {
          all += v;
          if (static_cast<int>(i) == s.max_face_size()) top += v;
        }
      EXPECT_EQ(top, static_cast<long long>(deg(s)));
      EXPECT_EQ(all, static_cast<long long>(adeg(s)));
      EXPECT_TRUE(same_triangle(iterated_betti(s, kind), b));
    }
    const bool seq = is_sequentially_cm_duval(c);
    const auto be = iterated_betti(c, ShiftKind::Exterior);
    EXPECT_EQ(same_triangle(be, h_triangle(c)), seq);
    if (seq) {
      EXPECT_TRUE(same_triangle(iterated_betti(c, ShiftKind::Symmetric), be));
    }
  }
}

TEST(IdealPredicates, Fixtures) {
  const auto two = monomial_ideal(4, {{1, 2}, {3, 4}});
  EXPECT_FALSE(is_componentwise_linear(two));
  EXPECT_FALSE(is_gotzmann(two));
  EXPECT_FALSE(has_linear_component_resolutions(two, 4));
  EXPECT_TRUE(is_componentwise_linear(monomial_ideal(3, {{1, 3}})));
  EXPECT_TRUE(is_gotzmann(monomial_ideal(3, {{1, 2}})));
  EXPECT_EQ(generator_degrees(two), (std::vector<std::size_t>{0, 0, 2, 0, 0}));
  EXPECT_EQ(generator_degrees(gin_exterior(two).ideal), (std::vector<std::size_t>{0, 0, 2, 1, 0}));
  for (const auto& J : all_stable_ideals(4)) {
    EXPECT_TRUE(is_componentwise_linear(J));
    EXPECT_TRUE(is_gotzmann(lexsegment_ideal(J)));
  }
}

TEST(IdealPredicates, ComponentwiseLinearMatchesTheDeepCheck) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 12; ++k) {
    const auto J = generate_random_graded_ideal(3 + k % 2, rng);
    EXPECT_EQ(is_componentwise_linear(J, k), has_linear_component_resolutions(J, J.n() + 1));
  }
}
