#include <gtest/gtest.h>

#include <random>

#include "exshift/cartan.hpp"
#include "exshift/generators.hpp"

using namespace exshift;

namespace {

ExtGradedIdeal monomial_ideal(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<Mask> masks;
  for (const auto& g : gens) masks.push_back(mask_of(g));
  return ExtGradedIdeal::generated_by_monomials(n, PrimeField{}, masks);
}

void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= total; ++e) {
    cur.push_back(e);
    compositions(parts, total - e, cur, out);
    cur.pop_back();
  }
}

// Brute-force Cartan complex of E/J for a monomial J on the coordinate
// sequence `vars`: basis pairs (standard monomial, exponent vector), sign of
// m ^ e_l counted from the members of m above l.
struct BruteCartan {
  const std::vector<bool>& in;
  int n;
  std::vector<int> vars;

  std::vector<std::pair<Mask, std::vector<int>>> basis(int i, int j) const {
    std::vector<std::pair<Mask, std::vector<int>>> out;
    if (i < 0 || j - i < 0) return out;
    std::vector<std::vector<int>> as;
    std::vector<int> cur;
    compositions(static_cast<int>(vars.size()), i, cur, as);
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (degree(m) == j - i && !in[m])
        for (const auto& a : as) out.push_back({m, a});
    return out;
  }

  std::size_t boundary_rank(int i, int j) const {
    if (i <= 0) return 0;
    const auto src = basis(i, j), dst = basis(i - 1, j);
    if (src.empty() || dst.empty()) return 0;
    const PrimeField f;
    DenseMatrix d(f, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (std::size_t k = 0; k < vars.size(); ++k) {
        const auto& [m, a] = src[c];
        const int l = vars[k];
        if (a[k] == 0 || (m >> (l - 1)) & 1) continue;
        const Mask target = m | (Mask{1} << (l - 1));
        if (in[target]) continue;
        int above = 0;
        for (int x = l + 1; x <= n; ++x) above += (m >> (x - 1)) & 1;
        auto b = a;
        --b[k];
        for (std::size_t r = 0; r < dst.size(); ++r)
          if (dst[r].first == target && dst[r].second == b) d.add_to(r, c, above % 2 ? f.neg(1) : 1);
      }
    return rank(d);
  }

  std::size_t homology(int i, int j) const {
    return basis(i, j).size() - boundary_rank(i, j) - boundary_rank(i + 1, j);
  }
};

ExtGradedIdeal random_monomial_ideal(int n, std::mt19937_64& rng) {
  std::vector<Mask> gens;
  const int count = uniform_int(rng, 1, 3);
  for (int k = 0; k < count; ++k) gens.push_back(random_subset(n, uniform_int(rng, 1, n), rng));
  return ExtGradedIdeal::generated_by_monomials(n, PrimeField{}, gens);
}

}  // namespace

TEST(CartanTable, ExampleEdgeIdealOnThreeVariables) {
  const auto J = monomial_ideal(3, {{1, 2}});
  for (const auto& t : {cartan_betti_direct(J, 5), cartan_betti_closed_table(J, 5)}) {
    EXPECT_EQ(t.at(0, 0, 1), 1u);
    EXPECT_EQ(t.at(0, 1, 1), 2u);
    EXPECT_EQ(t.at(0, 2, 1), 0u);
    EXPECT_EQ(t.at(0, 3, 1), 0u);
    for (int i = 1; i <= 5; ++i) {
      for (int j = 0; j <= 3 + i; ++j) {
        EXPECT_EQ(t.at(i, j, 1), 0u);
        EXPECT_EQ(t.at(i, j, 3), j == i + 1 ? static_cast<std::size_t>(i) : 0u) << i << "," << j;
        EXPECT_EQ(t.at(i, j, 2), j == i + 1 ? 1u : 0u);
      }
    }
  }
}

TEST(CartanTable, ZeroIdeal) {
  const auto J = ExtGradedIdeal::generated_by(3, PrimeField{}, {});
  const auto t = cartan_betti_direct(J, 4);
  for (int p = 1; p <= 3; ++p)
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 3 + i; ++j) EXPECT_EQ(t.at(i, j, p), i == 0 && j <= 3 ? binomial(3 - p, j) : 0u);
}

TEST(CartanTable, TruncationAndComparison) {
  const auto t = cartan_betti_direct(monomial_ideal(3, {{1, 2}}), 4);
  auto cut = t;
  cut.truncate_above_p();
  EXPECT_TRUE(cut.truncated_above_p());
  EXPECT_EQ(cut.at(2, 3, 1), 0u);
  EXPECT_EQ(cut.at(3, 4, 3), 3u);
  EXPECT_EQ(cut.at(4, 5, 3), 0u);
  EXPECT_TRUE(cut.leq(t));
  EXPECT_FALSE(t.leq(cut));
  EXPECT_EQ(t.first_excess_over(cut), (std::array<int, 3>{3, 4, 2}));
  CartanOptions opt;
  opt.truncate_above_p = true;
  EXPECT_EQ(cartan_betti_direct(monomial_ideal(3, {{1, 2}}), 4, opt), cut);
}

TEST(DividedPowers, CountsAndLowering) {
  for (int p = 1; p <= 4; ++p) {
    const DividedPowers d(p, 5);
    for (int i = 0; i <= 5; ++i) {
      EXPECT_EQ(d.count(i), binomial(p + i - 1, i));
      for (std::size_t a = 0; a < d.count(i); ++a) {
        EXPECT_EQ(d.position(d.index(i, a)), static_cast<int>(a));
        for (int k = 0; i > 0 && k < p; ++k) {
          const int b = d.lowered(i, a, k);
          if (d.index(i, a)[k] == 0) {
            EXPECT_EQ(b, -1);
          } else {
            auto low = d.index(i, a);
            --low[k];
            EXPECT_EQ(d.index(i - 1, b), low);
          }
        }
      }
    }
  }
}

TEST(DividedPowers, ProductRuleIsCompatibleWithTheDifferential) {
  // x^(a) x^(b) = prod_k C(a_k + b_k, a_k) x^(a + b). Applying the
  // differential to both sides and comparing the coefficient of
  // v_k x^(a + b - e_k) reduces the Leibniz rule to
  // c(a, b) = c(a - e_k, b) + c(a, b - e_k).
  const DividedPowers d(3, 4);
  auto coeff = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t c = 1;
    for (std::size_t k = 0; k < a.size(); ++k) c *= binomial(a[k] + b[k], a[k]);
    return c;
  };
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (std::size_t x = 0; x < d.count(i); ++x)
        for (std::size_t y = 0; y < d.count(j); ++y) {
          const auto a = d.index(i, x), b = d.index(j, y);
          for (int k = 0; k < 3; ++k) {
            if (a[k] + b[k] == 0) continue;
            std::size_t rhs = 0;
            if (a[k] > 0) {
              auto al = a;
              --al[k];
              rhs += coeff(al, b);
            }
            if (b[k] > 0) {
              auto bl = b;
              --bl[k];
              rhs += coeff(a, bl);
            }
            EXPECT_EQ(coeff(a, b), rhs);
          }
        }
}

TEST(Boundary, Fixtures) {
  const auto J = monomial_ideal(3, {{1, 2}});
  // p = 1, i = 1, j = 2: (E/J)_1 x v -> (E/J)_2, e1 -> e13, e2 -> e23, e3 -> 0
  const auto d = boundary_matrix(J, 1, 1, 2);
  EXPECT_EQ(d.rows(), 2u);
  EXPECT_EQ(d.cols(), 3u);
  EXPECT_EQ(rank(d), 2u);
  EXPECT_EQ(boundary_matrix(J, 2, 3, 2).cols(), 0u);
}

TEST(Boundary, SquaresToZero) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 15; ++k) {
    const int n = 3 + k % 3;
    const auto J = generate_random_graded_ideal(n, rng);
    for (int p = 1; p <= n; ++p) {
      const CartanComplex C(J, last_variables(n, p), 4);
      for (int i = 2; i <= 4; ++i)
        for (int j = i; j <= n + i; ++j) {
          const auto a = C.boundary(i, j), b = C.boundary(i - 1, j);
          if (a.cols() && b.rows()) EXPECT_TRUE((b * a).is_zero());
        }
    }
  }
}

TEST(Boundary, EulerCharacteristicMatchesChainDimensions) {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 10; ++k) {
    const int n = 3 + k % 2;
    const auto J = generate_random_graded_ideal(n, rng);
    const int top = 8;  // the complex in a fixed internal degree j stops at i = j
    const CartanComplex C(J, last_variables(n, n), top + 1);
    const auto h = cartan_homology(C, top);
    for (int j = 0; j <= n && j <= top; ++j) {
      long long chains = 0, homology = 0;
      for (int i = 0; i <= j; ++i) {
        const long long sign = i % 2 ? -1 : 1;
        chains += sign * static_cast<long long>(C.dim(i, j));
        homology += sign * static_cast<long long>(h[i][j]);
      }
      EXPECT_EQ(chains, homology);
    }
  }
}

TEST(MonomialRoute, MatchesBruteForceComplex) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 3;
    const auto J = random_monomial_ideal(n, rng);
    const auto in = J.monomial_table();
    for (int p = 1; p <= n; ++p) {
      const Mask window = full_mask(n) & ~full_mask(n - p);
      const auto h = monomial_cartan_homology(in, n, window, 3);
      const BruteCartan brute{in, n, last_variables(n, p)};
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= n + i; ++j) EXPECT_EQ(h[i][j], brute.homology(i, j)) << "k=" << k << " p=" << p << " i=" << i << " j=" << j;
    }
  }
}

TEST(ClosedFormula, AgreesWithDirectOnEveryStableIdealUpToFourVariables) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& J : all_stable_ideals(n)) {
      const auto closed = cartan_betti_closed_table(J, n + 2);
      EXPECT_EQ(cartan_betti_direct(J, n + 2), closed);
      for (int p = 1; p <= n; ++p) EXPECT_EQ(cartan_betti_closed(J, 2, 3, p), closed.at(2, 3, p));
    }
}

TEST(ClosedFormula, RejectsNonStable) {
  EXPECT_THROW(cartan_betti_closed(monomial_ideal(3, {{1, 3}}), 1, 2, 1), NotStable);
  EXPECT_THROW(cartan_betti_closed_table(monomial_ideal(3, {{1, 3}}), 2), NotStable);
}

TEST(GenericRoute, CoordinateChangeOfAStableIdealKeepsItsTable) {
  std::mt19937_64 rng(29);
  const PrimeField f;
  for (int k = 0; k < 8; ++k) {
    const int n = 3 + k % 2;
    const auto J = generate_random_stable_ideal(n, rng);
    const auto moved = substitute(random_invertible(n, f, rng), J);
    CartanOptions opt;
    opt.seed = k;
    EXPECT_EQ(cartan_betti_direct(moved, n + 1, opt), cartan_betti_closed_table(J, n + 1));
  }
}

TEST(GenericRoute, BoundedByGinAndLexAndEqualInHomologicalDegreeZero) {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 8; ++k) {
    const int n = 3 + k % 2;
    const auto J = generate_random_graded_ideal(n, rng);
    const auto gin = gin_exterior(J, ExtOrder::DegRevLex, kDefaultTrials, k).ideal;
    const auto lex = lexsegment_ideal(J);
    CartanOptions opt;
    opt.seed = k;
    const auto bj = cartan_betti_direct(J, n + 1, opt);
    const auto bg = cartan_betti_closed_table(gin, n + 1);
    const auto bl = cartan_betti_closed_table(lex, n + 1);
    EXPECT_TRUE(bj.leq(bg));
    EXPECT_TRUE(bg.leq(bl));
    for (int p = 1; p <= n; ++p)
      for (int j = 0; j <= n; ++j) EXPECT_EQ(bj.at(0, j, p), bg.at(0, j, p));
  }
}

TEST(ConnectingMap, NonProperWitness) {
  const auto J = monomial_ideal(4, {{1, 2}, {3, 4}});
  const auto r = is_proper_sequence(J, 6);
  EXPECT_FALSE(r.proper);
  EXPECT_EQ(r.p_from, 1);
  EXPECT_EQ(r.i, 1);
  EXPECT_EQ(r.jdeg, 3);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(connecting_map_rank(J, 1, 1, 3), 1u);
  EXPECT_THROW(connecting_map_rank(J, 4, 1, 3), InputError);
  EXPECT_THROW(connecting_map_rank(J, 1, 0, 3), InputError);
}

TEST(ConnectingMap, StableIdealsAreProper) {
  for (const auto& J : all_stable_ideals(4)) EXPECT_TRUE(is_proper_sequence(J, 6).proper);
}

TEST(ConnectingMap, RanksFitTheLongExactSequence) {
  // H_i(p)_j -> H_i(p+1)_j -> H_{i-1}(p+1)_{j-1} -> H_{i-1}(p)_j is exact, so
  // dim H_i(p+1)_j = dim H_i(p)_j - r_i(j) + dim H_{i-1}(p+1)_{j-1} - r_{i-1}(j)
  // where r_i(j) is the rank of the connecting map into H_i(p)_j.
  std::mt19937_64 rng(41);
  for (int k = 0; k < 6; ++k) {
    const int n = 3 + k % 2;
    const auto J = k % 3 == 0 ? generate_random_stable_ideal(n, rng) : generate_random_graded_ideal(n, rng);
    const auto moved = generic_coordinates(J, rng);
    const int top = 3;
    std::vector<std::vector<std::vector<std::size_t>>> h(n + 1);
    for (int p = 1; p <= n; ++p) {
      std::vector<int> vars;
      for (int t = 1; t <= p; ++t) vars.push_back(n + 1 - t);
      h[p] = cartan_homology(CartanComplex(moved, vars, top + 1), top);
    }
    auto H = [&](int p, int i, int j) -> long long {
      if (i < 0 || j < 0 || j >= static_cast<int>(h[p][i].size())) return 0;
      return static_cast<long long>(h[p][i][j]);
    };
    for (int p = 1; p < n; ++p)
      for (int i = 1; i <= top; ++i)
        for (int j = 1; j <= n + i; ++j) {
          const long long ri = static_cast<long long>(connecting_rank_in(moved, p, i, j));
          const long long rlow = static_cast<long long>(connecting_rank_in(moved, p, i - 1, j));
          EXPECT_EQ(H(p + 1, i, j), H(p, i, j) - ri + H(p + 1, i - 1, j - 1) - rlow) << "k=" << k << " p=" << p << " i=" << i << " j=" << j;
        }
  }
}
