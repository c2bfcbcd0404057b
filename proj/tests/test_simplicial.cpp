#include <gtest/gtest.h>

#include <random>

#include "exshift/generators.hpp"
#include "exshift/simplicial.hpp"

using namespace exshift;

namespace {

SimplicialComplex complex(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Mask> masks;
  for (const auto& f : facets) masks.push_back(mask_of(f));
  return SimplicialComplex(n, masks);
}

const SimplicialComplex kTriangle = complex(3, {{1, 2}, {1, 3}, {2, 3}});
const SimplicialComplex kEdges = complex(4, {{1, 2}, {3, 4}});
const SimplicialComplex kCycle = complex(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});

// Faces by brute force: subsets of [n] inside some facet.
std::vector<std::size_t> brute_f_vector(const SimplicialComplex& c) {
  std::vector<std::size_t> f;
  for (Mask m = 0; m < (Mask{1} << c.n()); ++m) {
    bool face = false;
    for (Mask F : c.facets()) face = face || (m & F) == m;
    if (!face) continue;
    if (f.size() <= static_cast<std::size_t>(degree(m))) f.resize(degree(m) + 1, 0);
    ++f[degree(m)];
  }
  return f;
}

// Connected components of the graph formed by the edges of c, counted over
// the vertices that lie on an edge.
int edge_components(const SimplicialComplex& c) {
  std::vector<int> parent(c.n() + 1);
  for (int v = 0; v <= c.n(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> used(c.n() + 1, false);
  for (Mask F : c.facets()) {
    if (degree(F) != 2) continue;
    const auto vs = indices(F);
    used[vs[0]] = used[vs[1]] = true;
    parent[find(vs[0])] = find(vs[1]);
  }
  int k = 0;
  for (int v = 1; v <= c.n(); ++v) k += used[v] && find(v) == v;
  return k;
}

// Random graph plus isolated-vertex facets on [n].
SimplicialComplex random_graph(int n, std::mt19937_64& rng) {
  std::vector<Mask> facets;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (uniform_int(rng, 0, 2) == 0) facets.push_back(bit(a) | bit(b));
  if (uniform_int(rng, 0, 1)) facets.push_back(bit(uniform_int(rng, 1, n)));
  return SimplicialComplex(n, facets);
}

}  // namespace

TEST(Complex, FacetsAreMaximalAndSorted) {
  const auto c = complex(4, {{3, 4}, {1}, {1, 2}, {3}, {2, 4}});
  EXPECT_EQ(c.facets(), (std::vector<Mask>{mask_of({1, 2}), mask_of({2, 4}), mask_of({3, 4})}));
  EXPECT_EQ(c.dimension(), 1);
  EXPECT_TRUE(c.is_pure());
  EXPECT_TRUE(SimplicialComplex::void_complex(3).is_void());
  EXPECT_EQ(SimplicialComplex::void_complex(3).dimension(), -2);
  EXPECT_EQ(SimplicialComplex(3, {0}).dimension(), -1);
}

TEST(FVector, Fixtures) {
  EXPECT_EQ(f_vector(kTriangle), (std::vector<std::size_t>{1, 3, 3}));
  EXPECT_EQ(f_vector(complex(1, {{1}})), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(f_vector(kEdges), (std::vector<std::size_t>{1, 4, 2}));
  EXPECT_TRUE(f_vector(SimplicialComplex::void_complex(2)).empty());
}

TEST(FVector, MatchesBruteForce) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    const auto c = generate_random_complex(1 + k % 6, (k % 7) / 6.0, rng);
    EXPECT_EQ(f_vector(c), brute_f_vector(c));
  }
}

TEST(AlexanderDual, Fixtures) {
  EXPECT_EQ(alexander_dual(kEdges), kCycle);
  EXPECT_TRUE(alexander_dual(SimplicialComplex::simplex(3)).is_void());
  EXPECT_EQ(alexander_dual(SimplicialComplex::void_complex(3)), SimplicialComplex::simplex(3));
}

TEST(AlexanderDual, InvolutionAndComplementRule) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 6;
    const auto c = generate_random_complex(n, (k % 5) / 4.0, rng);
    const auto d = alexander_dual(c);
    EXPECT_EQ(alexander_dual(d), c);
    for (Mask m = 0; m < (Mask{1} << n); ++m) EXPECT_EQ(d.contains(m), !c.contains(full_mask(n) & ~m));
  }
}

TEST(StanleyReisner, Fixtures) {
  EXPECT_EQ(minimal_nonfaces(kTriangle), (std::vector<Mask>{mask_of({1, 2, 3})}));
  auto edges = minimal_nonfaces(kEdges);
  std::sort(edges.begin(), edges.end());
  std::vector<Mask> expect{mask_of({1, 3}), mask_of({2, 3}), mask_of({1, 4}), mask_of({2, 4})};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(edges, expect);
  EXPECT_EQ(complex_of_ideal(ExtGradedIdeal::generated_by(3, PrimeField{}, {})), SimplicialComplex::simplex(3));
  EXPECT_THROW(complex_of_ideal({SymMonomial{{2, 0}}}, 2), NotSquarefree);
}

TEST(StanleyReisner, RoundTripsInBothRings) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    const int n = 1 + k % 6;
    const auto c = generate_random_complex(n, (k % 7) / 6.0, rng);
    EXPECT_EQ(complex_of_ideal(sr_ideal_exterior(c)), c);
    EXPECT_EQ(complex_of_ideal(sr_generators_symmetric(c), n), c);
  }
}

TEST(Shifted, Fixtures) {
  EXPECT_TRUE(is_shifted(kTriangle));
  EXPECT_FALSE(is_shifted(kEdges));
  EXPECT_TRUE(is_shifted(complex(4, {{2, 4}, {3, 4}, {1}})));
}

TEST(Shifted, MatchesStabilityOfTheFaceIdeal) {
  std::mt19937_64 rng(5);
  int shifted = 0;
  for (int k = 0; k < 200; ++k) {
    const auto c = generate_random_complex(1 + k % 5, (k % 4) / 6.0, rng);
    EXPECT_EQ(is_shifted(c), is_squarefree_strongly_stable(sr_ideal_exterior(c)));
    shifted += is_shifted(c);
  }
  for (const auto& J : all_stable_ideals(4)) EXPECT_TRUE(is_shifted(complex_of_ideal(J)));
  EXPECT_GT(shifted, 0);
}

TEST(Triangles, Fixtures) {
  const auto h = h_triangle(kTriangle);
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[2], (std::vector<long long>{1, 1, 1}));
  EXPECT_EQ(h[1], (std::vector<long long>{0, 0}));
  EXPECT_EQ(h_triangle(kEdges)[2], (std::vector<long long>{1, 2, -1}));
  const auto v = h_triangle(complex(1, {{1}}));
  EXPECT_EQ(v[1], (std::vector<long long>{1, 0}));
}

TEST(Triangles, RoundTripAndRowSums) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 50; ++k) {
    const auto c = generate_random_complex(1 + k % 6, (k % 7) / 6.0, rng);
    const auto f = f_triangle(c);
    EXPECT_EQ(f_from_h(h_from_f(f)), f);
    const auto fv = f_vector(c);
    for (std::size_t r = 0; r < fv.size(); ++r) {
      long long sum = 0;
      for (std::size_t i = r; i < f.size(); ++i) sum += f[i][r];
      EXPECT_EQ(sum, static_cast<long long>(fv[r]));
    }
  }
}

TEST(Skeleton, Fixtures) {
  EXPECT_EQ(skeleton_pure(kEdges, 0), complex(4, {{1}, {2}, {3}, {4}}));
  EXPECT_EQ(skeleton_pure(kTriangle, 0), complex(3, {{1}, {2}, {3}}));
  EXPECT_EQ(skeleton_pure(kCycle, 1), kCycle);
  EXPECT_EQ(link(kCycle, mask_of({1})), complex(4, {{3}, {4}}));
}

TEST(ReducedHomology, Fixtures) {
  EXPECT_EQ(reduced_homology_dims(kTriangle), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(reduced_homology_dims(SimplicialComplex::simplex(3)), (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_EQ(reduced_homology_dims(kEdges), (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(reduced_homology_dims(SimplicialComplex(2, {0})), (std::vector<std::size_t>{1}));
}

TEST(ReducedHomology, EulerCharacteristic) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const auto c = generate_random_complex(1 + k % 6, (k % 7) / 6.0, rng);
    const auto f = f_vector(c);
    const auto h = reduced_homology_dims(c);
    ASSERT_EQ(f.size(), h.size());
    long long ef = 0, eh = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      ef += (i % 2 ? -1 : 1) * static_cast<long long>(f[i]);
      eh += (i % 2 ? -1 : 1) * static_cast<long long>(h[i]);
    }
    EXPECT_EQ(ef, eh);
  }
}

TEST(CohenMacaulay, Fixtures) {
  EXPECT_TRUE(is_cm_reisner(kTriangle));
  EXPECT_FALSE(is_cm_reisner(kEdges));
  EXPECT_TRUE(is_cm_reisner(kCycle));
  EXPECT_TRUE(is_sequentially_cm_duval(kTriangle));
  EXPECT_FALSE(is_sequentially_cm_duval(kEdges));
  // an edge with a separate vertex is sequentially CM but not pure
  EXPECT_TRUE(is_sequentially_cm_duval(complex(3, {{1, 2}, {3}})));
  EXPECT_FALSE(is_cm_reisner(complex(3, {{1, 2}, {3}})));
}

TEST(CohenMacaulay, GraphsAreCMExactlyWhenPureAndConnected) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 60; ++k) {
    const auto g = random_graph(3 + k % 4, rng);
    const bool one_dim = g.dimension() == 1;
    const bool expect_cm = one_dim ? g.is_pure() && edge_components(g) == 1 : true;
    EXPECT_EQ(is_cm_reisner(g), expect_cm);
    const bool expect_seq = one_dim ? edge_components(g) == 1 : true;
    EXPECT_EQ(is_sequentially_cm_duval(g), expect_seq);
  }
}

TEST(Socle, Fixtures) {
  EXPECT_EQ(socle_dims(kEdges), (std::vector<std::size_t>{0, 0, 2}));
  EXPECT_EQ(socle_dims(kTriangle), (std::vector<std::size_t>{0, 0, 3}));
  EXPECT_EQ(socle_dims(SimplicialComplex::simplex(3)), (std::vector<std::size_t>{0, 0, 0, 1}));
}

TEST(Socle, CountsFacetsBySize) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    const auto c = generate_random_complex(1 + k % 6, (k % 7) / 6.0, rng);
    EXPECT_EQ(socle_dims(c), facet_counts_by_size(c));
  }
}

TEST(Socle, FacetsOfSizeIAreDegreeNMinusIGeneratorsOfTheDualIdeal) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 6;
    const auto c = generate_random_complex(n, (k % 7) / 6.0, rng);
    const auto gens = minimal_generators(sr_ideal_exterior(alexander_dual(c)));
    const auto counts = facet_counts_by_size(c);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      std::size_t g = 0;
      for (Mask m : gens) g += degree(m) == n - static_cast<int>(i);
      EXPECT_EQ(counts[i], g);
    }
  }
}
