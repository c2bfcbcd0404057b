#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "exshift/cartan.hpp"
#include "exshift/errors.hpp"
#include "exshift/exterior.hpp"
#include "exshift/generators.hpp"
#include "exshift/gin.hpp"
#include "exshift/io.hpp"
#include "exshift/shifting.hpp"
#include "exshift/simplicial.hpp"

namespace exshift {

/// Largest n for suites that run dense Cartan homology in generic
/// coordinates on non-monomial ideals.
inline constexpr int kDenseCartanMaxN = 5;

struct RunConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = kDefaultTrials;
  int i_max = -1;  // -1 means n + 2
  int n_max = 6;
  int samples = 25;
  bool truncate_above_p = false;

  int imax_for(int n) const { return i_max < 0 ? n + 2 : i_max; }
  PrimeField field() const { return PrimeField(prime); }

  void validate() const {
    const PrimeField f(prime);  // throws on a non-prime
    if (n_max < 2 || n_max > 8) throw InputError("--n-max must lie in [2, 8]");
    if (prime <= static_cast<std::uint64_t>(2 * n_max)) throw InputError("the prime must exceed 2 * n-max");
    if (trials < 2) throw InputError("--trials must be at least 2");
    if (samples < 0 || samples > 100000) throw InputError("--samples must lie in [0, 100000]");
    if (i_max < -1 || i_max > 16) throw InputError("--imax must lie in [0, 16]");
  }

  std::string replay(const std::string& suite) const {
    std::ostringstream out;
    out << "exshift verify --suite " << suite << " --n-max " << n_max << " --samples " << samples << " --seed " << seed << " --prime " << prime
        << " --trials " << trials;
    if (i_max >= 0) out << " --imax " << i_max;
    if (truncate_above_p) out << " --truncate-above-p";
    return out.str();
  }
};

struct SuiteFailure {
  std::string where;
  std::string message;
  std::string input;
};

struct SuiteReport {
  std::string name;
  std::string title;
  int samples = 0;
  long checks = 0;
  std::vector<SuiteFailure> failures;
  std::vector<std::string> notes;
  bool passed() const { return failures.empty(); }
};

struct VerifyReport {
  RunConfig config;
  std::vector<SuiteReport> suites;
  bool passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
  }
};

namespace detail {

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (family, n, index) so that suites drawing from the
// same family see the same instances.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t family, int n, int k) {
  return std::mt19937_64(splitmix(splitmix(splitmix(seed ^ family) + static_cast<std::uint64_t>(n)) + static_cast<std::uint64_t>(k)));
}

enum Family : std::uint64_t { kGraded = 0x67726164, kStable = 0x73746162, kComplex = 0x636f6d70, kSub = 0x73756263 };

class Checker {
 public:
  explicit Checker(SuiteReport& r) : r_(r) {}

  template <class Body>
  void sample(const std::string& where, const std::string& input, Body&& body) {
    where_ = where;
    input_ = input;
    ++r_.samples;
    try {
      body();
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  bool check(bool ok, const std::string& message) {
    ++r_.checks;
    if (!ok) fail(message);
    return ok;
  }

  void fail(const std::string& message) { r_.failures.push_back({where_, message, input_}); }

 private:
  SuiteReport& r_;
  std::string where_, input_;
};

struct IdealSample {
  std::string where;
  std::string input;
  ExtGradedIdeal ideal;
  std::uint64_t seed = 0;
};

inline std::string monomial_echo(const ExtGradedIdeal& J) { return ideal_to_json(J.n(), minimal_generators(J)).dump(); }

inline std::vector<IdealSample> graded_samples(const RunConfig& cfg, int n) {
  const PrimeField f = cfg.field();
  std::vector<IdealSample> out;
  for (int k = 0; k < cfg.samples; ++k) {
    auto rng = sample_rng(cfg.seed, kGraded, n, k);
    const auto gens = random_graded_generators(n, rng, f);
    std::string echo = "n=" + std::to_string(n) + " generators: [";
    for (std::size_t g = 0; g < gens.size(); ++g) echo += (g ? "; " : "") + format_polynomial(gens[g]);
    echo += "]";
    out.push_back({"n=" + std::to_string(n) + " graded #" + std::to_string(k), echo, ExtGradedIdeal::generated_by(n, f, gens), rng()});
  }
  return out;
}

/// All stable ideals for n <= 4, otherwise `samples` random ones.
inline std::vector<IdealSample> stable_samples(const RunConfig& cfg, int n) {
  const PrimeField f = cfg.field();
  std::vector<IdealSample> out;
  if (n <= 4) {
    const auto all = all_stable_ideals(n, f);
    for (std::size_t k = 0; k < all.size(); ++k)
      out.push_back({"n=" + std::to_string(n) + " stable (all) #" + std::to_string(k), monomial_echo(all[k]), all[k], splitmix(cfg.seed + k)});
    return out;
  }
  for (int k = 0; k < cfg.samples; ++k) {
    auto rng = sample_rng(cfg.seed, kStable, n, k);
    auto J = generate_random_stable_ideal(n, rng, f);
    out.push_back({"n=" + std::to_string(n) + " stable #" + std::to_string(k), monomial_echo(J), std::move(J), rng()});
  }
  return out;
}

inline IdealSample fixed_ideal(int n, const std::vector<std::vector<int>>& gens, const RunConfig& cfg, const std::string& name) {
  std::vector<Mask> masks;
  for (const auto& g : gens) masks.push_back(mask_of(g));
  auto J = ExtGradedIdeal::generated_by_monomials(n, cfg.field(), masks);
  return {"fixture " + name, monomial_echo(J), std::move(J), cfg.seed};
}

struct ComplexSample {
  std::string where;
  std::string input;
  SimplicialComplex complex;
  std::uint64_t seed = 0;
};

inline SimplicialComplex complex_of(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Mask> masks;
  for (const auto& f : facets) masks.push_back(mask_of(f));
  return SimplicialComplex(n, masks);
}

inline SimplicialComplex complex_avoiding(const std::vector<Mask>& nonfaces, int n) {
  std::vector<bool> is_face(std::size_t{1} << n, true);
  for (Mask m = 0; m < is_face.size(); ++m)
    for (Mask g : nonfaces)
      if ((g & m) == g) is_face[m] = false;
  return SimplicialComplex::from_face_table(n, is_face);
}

inline const SimplicialComplex& hollow_triangle() {
  static const SimplicialComplex c = complex_of(3, {{1, 2}, {1, 3}, {2, 3}});
  return c;
}
inline const SimplicialComplex& disjoint_edges() {
  static const SimplicialComplex c = complex_of(4, {{1, 2}, {3, 4}});
  return c;
}

/// Fixtures that fit in n_max, then `samples` random complexes on 2..n_max vertices.
inline std::vector<ComplexSample> complex_samples(const RunConfig& cfg) {
  std::vector<ComplexSample> out;
  const std::vector<std::pair<std::string, SimplicialComplex>> fixtures = {
      {"hollow triangle", hollow_triangle()},
      {"two disjoint edges", disjoint_edges()},
      {"4-cycle", complex_of(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})},
      {"edge and vertex", complex_of(3, {{1, 2}, {3}})},
  };
  for (const auto& [name, c] : fixtures)
    if (c.n() <= cfg.n_max) out.push_back({"fixture " + name, to_json(c).dump(), c, cfg.seed});
  for (int k = 0; k < cfg.samples; ++k) {
    auto rng = sample_rng(cfg.seed, kComplex, 0, k);
    const int n = uniform_int(rng, 2, cfg.n_max);
    const double density = uniform_int(rng, 1, 5) / 6.0;
    auto c = generate_random_complex(n, density, rng);
    out.push_back({"complex #" + std::to_string(k) + " (n=" + std::to_string(n) + ")", to_json(c).dump(), std::move(c), rng()});
  }
  return out;
}

inline CartanBettiTable maybe_truncated(CartanBettiTable t, const RunConfig& cfg) {
  if (cfg.truncate_above_p) t.truncate_above_p();
  return t;
}

inline CartanBettiTable direct_table(const ExtGradedIdeal& J, const RunConfig& cfg, std::uint64_t seed) {
  CartanOptions opt;
  opt.trials = cfg.trials;
  opt.seed = seed;
  opt.truncate_above_p = cfg.truncate_above_p;
  return cartan_betti_direct(J, cfg.imax_for(J.n()), opt);
}

inline CartanBettiTable closed_table(const ExtGradedIdeal& J, const RunConfig& cfg) {
  return maybe_truncated(cartan_betti_closed_table(J, cfg.imax_for(J.n())), cfg);
}

inline std::string excess(const CartanBettiTable& a, const CartanBettiTable& b, const std::string& an, const std::string& bn) {
  const auto w = a.first_excess_over(b);
  if (!w) return "";
  const auto [i, j, p] = *w;
  return "beta_{" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(p) + "}: " + an + " = " + std::to_string(a.at(i, j, p)) +
         " > " + bn + " = " + std::to_string(b.at(i, j, p));
}

inline bool leq_checked(Checker& ck, const CartanBettiTable& a, const CartanBettiTable& b, const std::string& an, const std::string& bn) {
  const std::string w = excess(a, b, an, bn);
  return ck.check(w.empty(), w);
}

inline bool same_first_syzygies(const CartanBettiTable& a, const CartanBettiTable& b) {
  const int n = a.n();
  for (int j = 0; j <= n + 1; ++j)
    if (a.at(1, j, n) != b.at(1, j, n)) return false;
  return true;
}

inline bool same_zeroth(const CartanBettiTable& a, const CartanBettiTable& b) {
  for (int p = 1; p <= a.n(); ++p)
    for (int j = 0; j <= a.n(); ++j)
      if (a.at(0, j, p) != b.at(0, j, p)) return false;
  return true;
}

inline std::string flags(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s += b ? '1' : '0';
  return s;
}

inline int dense_cap(const RunConfig& cfg) { return std::min(cfg.n_max, kDenseCartanMaxN); }

inline ShiftSettings shift_settings(const RunConfig& cfg, std::uint64_t seed) { return ShiftSettings{cfg.trials, seed, cfg.field()}; }

constexpr ShiftKind kAllKinds[] = {ShiftKind::Exterior, ShiftKind::ExteriorLex, ShiftKind::Symmetric};

// ---- suites on ideals ----

inline void suite_closed_form(const RunConfig& cfg, SuiteReport& r) {
  r.title = "closed formula for stable ideals agrees with direct Cartan homology";
  Checker ck(r);
  int exhaustive = 0;
  for (int n = 1; n <= cfg.n_max; ++n)
    for (const auto& s : stable_samples(cfg, n)) {
      if (n <= 4) ++exhaustive;
      ck.sample(s.where, s.input, [&] {
        const auto closed = closed_table(s.ideal, cfg);
        const auto direct = direct_table(s.ideal, cfg, s.seed);
        ck.check(direct == closed, "closed and direct tables differ: " + excess(closed, direct, "closed", "direct") + excess(direct, closed, "direct", "closed"));
        if (n <= 4) {
          // also through the dense complex, without the monomial block splitting
          CartanBettiTable dense(n, cfg.imax_for(n));
          for (int p = 1; p <= n; ++p)
            dense.set_slice(p, cartan_homology(CartanComplex(s.ideal, last_variables(n, p), cfg.imax_for(n) + 1), cfg.imax_for(n)));
          ck.check(maybe_truncated(dense, cfg) == closed, "dense Cartan homology differs from the closed formula");
        }
      });
    }
  if (cfg.n_max >= 3) {
    const auto s = fixed_ideal(3, {{1, 2}}, cfg, "(e12) n=3");
    ck.sample(s.where, s.input, [&] {
      const auto t = direct_table(s.ideal, cfg, s.seed);
      const std::vector<std::size_t> row0{1, 2, 0, 0};
      for (int j = 0; j <= 3; ++j) ck.check(t.at(0, j, 1) == row0[j], "beta_{0," + std::to_string(j) + ",1} differs from (1,2,0,0)");
      for (int i = 1; i <= t.i_max(); ++i)
        for (int j = 0; j <= 3 + i; ++j) {
          ck.check(t.at(i, j, 1) == 0, "beta_{i,j,1} must vanish for i >= 1");
          const std::size_t expect = j == i + 1 && !(cfg.truncate_above_p && i > 3) ? static_cast<std::size_t>(i) : 0;
          ck.check(t.at(i, j, 3) == expect, "beta_{" + std::to_string(i) + "," + std::to_string(j) + ",3} differs from the fixture");
        }
    });
  }
  r.notes.push_back("stable ideals checked exhaustively for n <= " + std::to_string(std::min(4, cfg.n_max)) + ": " + std::to_string(exhaustive));
}

inline void suite_zeroth(const RunConfig& cfg, SuiteReport& r) {
  r.title = "gin preserves Hilbert functions and beta_0; gin is stable, idempotent, reproducible";
  Checker ck(r);
  for (int n = 3; n <= cfg.n_max; ++n)
    for (const auto& s : graded_samples(cfg, n))
      ck.sample(s.where, s.input, [&] {
        const auto g = gin_exterior(s.ideal, ExtOrder::DegRevLex, cfg.trials, s.seed);
        ck.check(g.ideal.hilbert() == s.ideal.hilbert(), "gin changes the Hilbert function");
        ck.check(is_squarefree_strongly_stable(g.ideal), "gin is not squarefree strongly stable");
        ck.check(gin_exterior(g.ideal, ExtOrder::DegRevLex, cfg.trials, s.seed + 1).ideal == g.ideal, "gin is not idempotent");
        ck.check(gin_exterior(s.ideal, ExtOrder::DegRevLex, cfg.trials, s.seed).ideal == g.ideal, "gin is not reproducible from its seed");
        CartanOptions opt;
        opt.trials = cfg.trials;
        opt.seed = s.seed;
        const auto b = cartan_betti_direct(s.ideal, 0, opt);
        const auto bg = cartan_betti_closed_table(g.ideal, 0);
        ck.check(same_zeroth(b, bg), "beta_0 of J and gin(J) differ: " + excess(b, bg, "J", "gin") + excess(bg, b, "gin", "J"));
      });
}

inline void suite_chain(const RunConfig& cfg, SuiteReport& r) {
  r.title = "beta(E/J) <= beta(E/gin_tau(J)) <= beta(E/lex(J)) for revlex and deglex";
  Checker ck(r);
  auto run = [&](const IdealSample& s) {
    ck.sample(s.where, s.input, [&] {
      const auto b = direct_table(s.ideal, cfg, s.seed);
      const auto lex = closed_table(lexsegment_ideal(s.ideal), cfg);
      for (auto order : {ExtOrder::DegRevLex, ExtOrder::DegLex}) {
        const std::string name = order == ExtOrder::DegRevLex ? "gin" : "gin_deglex";
        const auto g = closed_table(gin_exterior(s.ideal, order, cfg.trials, s.seed).ideal, cfg);
        leq_checked(ck, b, g, "J", name);
        leq_checked(ck, g, lex, name, "lex");
      }
    });
  };
  for (int n = 1; n <= std::min(4, cfg.n_max); ++n)
    for (const auto& s : stable_samples(cfg, n)) run(s);
  for (int n = 3; n <= dense_cap(cfg); ++n)
    for (const auto& s : graded_samples(cfg, n)) run(s);
  r.notes.push_back("random graded ideals for 3 <= n <= " + std::to_string(dense_cap(cfg)));
}

inline void suite_gin_orders(const RunConfig& cfg, SuiteReport& r) {
  r.title = "beta(E/gin(J)) <= beta(E/gin_deglex(J))";
  Checker ck(r);
  int strict = 0;
  auto run = [&](const IdealSample& s) {
    ck.sample(s.where, s.input, [&] {
      const auto rev = closed_table(gin_exterior(s.ideal, ExtOrder::DegRevLex, cfg.trials, s.seed).ideal, cfg);
      const auto lex = closed_table(gin_exterior(s.ideal, ExtOrder::DegLex, cfg.trials, s.seed).ideal, cfg);
      if (leq_checked(ck, rev, lex, "gin", "gin_deglex") && !(rev == lex)) ++strict;
    });
  };
  for (int n = 1; n <= std::min(4, cfg.n_max); ++n)
    for (const auto& s : stable_samples(cfg, n)) run(s);
  for (int n = 3; n <= cfg.n_max; ++n)
    for (const auto& s : graded_samples(cfg, n)) run(s);
  r.notes.push_back("samples with a strict inequality: " + std::to_string(strict));
}

inline void suite_componentwise_linear(const RunConfig& cfg, SuiteReport& r) {
  r.title = "equal tables with gin <=> equal beta_1 <=> componentwise linear <=> proper sequence";
  Checker ck(r);
  int yes = 0, no = 0;
  auto run = [&](const IdealSample& s, int expect) {
    ck.sample(s.where, s.input, [&] {
      const auto b = direct_table(s.ideal, cfg, s.seed);
      const auto g = closed_table(gin_exterior(s.ideal, ExtOrder::DegRevLex, cfg.trials, s.seed).ideal, cfg);
      const bool all = b == g;
      const bool first = same_first_syzygies(b, g);
      const bool cl = is_componentwise_linear(s.ideal, s.seed, cfg.trials);
      const auto proper = is_proper_sequence(s.ideal, cfg.imax_for(s.ideal.n()), s.seed);
      const std::vector<bool> v{all, first, cl, proper.proper};
      ck.check(std::all_of(v.begin(), v.end(), [&](bool x) { return x == all; }),
               "conditions (all equal, beta_1 equal, componentwise linear, proper) = " + flags(v));
      (all ? yes : no)++;
      if (expect >= 0) {
        ck.check(cl == (expect == 1), "fixture componentwise linearity differs");
        if (expect == 0) {
          const std::string w = excess(g, b, "gin", "J");
          ck.check(!w.empty(), "no strict inequality witness");
          if (!w.empty()) r.notes.push_back(s.where + " strict witness " + w);
          if (!proper.proper)
            r.notes.push_back(s.where + " connecting map nonzero at p=" + std::to_string(proper.p_from) + " i=" + std::to_string(proper.i) +
                              " j=" + std::to_string(proper.jdeg) + " (rank " + std::to_string(proper.rank) + ")");
        }
      }
    });
  };
  if (cfg.n_max >= 4) run(fixed_ideal(4, {{1, 2}, {3, 4}}, cfg, "(e12,e34) n=4"), 0);
  if (cfg.n_max >= 3) run(fixed_ideal(3, {{1, 2}}, cfg, "(e12) n=3"), 1);
  for (int n = 3; n <= dense_cap(cfg); ++n)
    for (const auto& s : graded_samples(cfg, n)) run(s, -1);
  r.notes.push_back("componentwise linear: " + std::to_string(yes) + ", not: " + std::to_string(no));
}

inline void suite_gotzmann(const RunConfig& cfg, SuiteReport& r) {
  r.title = "equal tables with lex <=> equal beta_1 <=> Gotzmann <=> equal beta_0 and componentwise linear";
  Checker ck(r);
  int yes = 0, no = 0;
  auto run = [&](const IdealSample& s, int expect) {
    ck.sample(s.where, s.input, [&] {
      const auto b = direct_table(s.ideal, cfg, s.seed);
      const auto lex = closed_table(lexsegment_ideal(s.ideal), cfg);
      const bool all = b == lex;
      const bool first = same_first_syzygies(b, lex);
      const bool gotz = is_gotzmann(s.ideal);
      const bool fourth = same_zeroth(b, lex) && is_componentwise_linear(s.ideal, s.seed, cfg.trials);
      const std::vector<bool> v{all, first, gotz, fourth};
      ck.check(std::all_of(v.begin(), v.end(), [&](bool x) { return x == all; }),
               "conditions (all equal, beta_1 equal, Gotzmann, beta_0 equal and componentwise linear) = " + flags(v));
      (gotz ? yes : no)++;
      if (expect >= 0) {
        ck.check(gotz == (expect == 1), "fixture Gotzmann property differs");
        if (expect == 0) {
          const std::string w = excess(lex, b, "lex", "J");
          ck.check(!w.empty(), "no strict inequality witness");
          if (!w.empty()) r.notes.push_back(s.where + " strict witness " + w);
        }
      }
    });
  };
  if (cfg.n_max >= 4) run(fixed_ideal(4, {{1, 2}, {3, 4}}, cfg, "(e12,e34) n=4"), 0);
  if (cfg.n_max >= 3) run(fixed_ideal(3, {{1, 2}}, cfg, "(e12) n=3"), 1);
  for (int n = 3; n <= dense_cap(cfg); ++n)
    for (const auto& s : graded_samples(cfg, n)) run(s, -1);
  r.notes.push_back("Gotzmann: " + std::to_string(yes) + ", not: " + std::to_string(no));
}

// m_{<=i}(A_j) <= m_{<=i}(B_j) for all i, j.
inline bool m_dominated(const ExtGradedIdeal& A, const ExtGradedIdeal& B) {
  const int n = A.n();
  for (int j = 0; j <= n; ++j) {
    const auto a = m_stats(A.monomials(j), n), b = m_stats(B.monomials(j), n);
    for (int i = 0; i <= n; ++i)
      if (a.le(i) > b.le(i)) return false;
  }
  return true;
}

inline bool same_m(const ExtGradedIdeal& A, const ExtGradedIdeal& B, bool cumulative) {
  const int n = A.n();
  for (int j = 0; j <= n; ++j) {
    const auto a = m_stats(A.monomials(j), n), b = m_stats(B.monomials(j), n);
    for (int i = 0; i <= n; ++i)
      if (cumulative ? a.le(i) != b.le(i) : a.at(i) != b.at(i)) return false;
  }
  return true;
}

// For stable J, J' with equal Hilbert functions and m(J) <= m(J'):
// beta(J') <= beta(J), and the equality statements agree.
inline void check_pair(Checker& ck, const ExtGradedIdeal& J, const ExtGradedIdeal& Jp, const RunConfig& cfg, const std::string& label) {
  const auto b = closed_table(J, cfg), bp = closed_table(Jp, cfg);
  leq_checked(ck, bp, b, label + " J'", label + " J");
  const int n = J.n();
  bool graded = true, first = true;
  std::size_t total = 0, total_p = 0;
  for (int i = 0; i <= b.i_max(); ++i)
    for (int j = 0; j <= n + i; ++j) {
      if (b.at(i, j, n) != bp.at(i, j, n)) {
        graded = false;
        if (i == 1) first = false;
      }
      if (i == 1) {
        total += b.at(1, j, n);
        total_p += bp.at(1, j, n);
      }
    }
  const std::vector<bool> v{b == bp, graded, first, total == total_p, same_m(J, Jp, false), same_m(J, Jp, true)};
  ck.check(std::all_of(v.begin(), v.end(), [&](bool x) { return x == v[0]; }), label + " equality statements disagree: " + flags(v));
}

inline void suite_m_statistics(const RunConfig& cfg, SuiteReport& r) {
  r.title = "lex has the smallest m_{<=i}; m-dominance orders Betti tables; equality statements agree";
  Checker ck(r);
  int pairs = 0;
  std::vector<std::vector<IdealSample>> by_n(cfg.n_max + 1);
  for (int n = 1; n <= cfg.n_max; ++n) by_n[n] = stable_samples(cfg, n);
  for (int n = 1; n <= cfg.n_max; ++n)
    for (const auto& s : by_n[n])
      ck.sample(s.where, s.input, [&] {
        const auto lex = lexsegment_ideal(s.ideal);
        ck.check(m_dominated(lex, s.ideal), "m_{<=i}(lex(J)_j) exceeds m_{<=i}(J_j)");
        check_pair(ck, lex, s.ideal, cfg, "(lex, J)");
        ++pairs;
        if (n <= 4)
          for (const auto& t : by_n[n]) {
            if (&t == &s || t.ideal.hilbert() != s.ideal.hilbert() || !m_dominated(s.ideal, t.ideal)) continue;
            check_pair(ck, s.ideal, t.ideal, cfg, "(J, " + t.where + ")");
            ++pairs;
          }
      });
  r.notes.push_back("dominated pairs checked: " + std::to_string(pairs));
}

// ---- suites on complexes ----

inline void suite_facet_counts(const RunConfig& cfg, SuiteReport& r) {
  r.title = "adeg_i grows under every shift, exterior below deglex, adeg kept iff sequentially CM, socle counts facets";
  Checker ck(r);
  int strict = 0, seq = 0;
  bool edges_seen = false;
  for (const auto& s : complex_samples(cfg))
    ck.sample(s.where, s.input, [&] {
      const auto& c = s.complex;
      const auto st = shift_settings(cfg, s.seed);
      const int top = c.max_face_size();
      const auto base = adeg_vector(c, top);
      std::vector<std::vector<std::size_t>> shifted;
      for (auto kind : kAllKinds) {
        const auto sh = shift(c, kind, st);
        shifted.push_back(adeg_vector(sh, top));
        ck.check(static_cast<int>(facet_counts_by_size(sh).size()) <= top + 1, "shift raised the dimension");
        for (int i = 0; i <= top; ++i)
          ck.check(base[i] <= shifted.back()[i], "adeg_" + std::to_string(i) + " drops under shift " + to_string(kind));
      }
      for (int i = 0; i <= top; ++i) ck.check(shifted[0][i] <= shifted[1][i], "adeg_" + std::to_string(i) + " of the exterior shift exceeds deglex");
      const std::size_t a = adeg(c), ae = adeg(shift_exterior(c, ExtOrder::DegRevLex, st));
      const bool duval = is_sequentially_cm_duval(c, st.field);
      ck.check((a == ae) == duval, "adeg preserved = " + std::to_string(a == ae) + " but skeleton criterion = " + std::to_string(duval));
      if (ae > a) ++strict;
      seq += duval;
      ck.check(socle_dims(c, st.field) == facet_counts_by_size(c), "socle dimensions differ from facet counts");
      const auto gens = minimal_generators(sr_ideal_exterior(alexander_dual(c), st.field));
      const auto counts = facet_counts_by_size(c);
      for (std::size_t i = 0; i < counts.size(); ++i) {
        std::size_t g = 0;
        for (Mask m : gens) g += degree(m) == c.n() - static_cast<int>(i);
        ck.check(counts[i] == g, "adeg_" + std::to_string(i) + " differs from the dual generator count");
      }
      if (c == disjoint_edges()) {
        edges_seen = true;
        ck.check(a == 2 && ae == 3, "two disjoint edges: expected adeg 2 -> 3");
      }
    });
  if (cfg.n_max >= 4) {
    ++r.checks;
    if (!edges_seen) r.failures.push_back({"fixture two disjoint edges", "fixture missing from the sample set", ""});
  }
  r.notes.push_back("strict adeg increase under the exterior shift: " + std::to_string(strict) + "; sequentially CM: " + std::to_string(seq));
}

inline void suite_duality(const RunConfig& cfg, SuiteReport& r) {
  r.title = "exterior shifting commutes with Alexander duality (revlex and deglex)";
  Checker ck(r);
  for (const auto& s : complex_samples(cfg))
    ck.sample(s.where, s.input, [&] {
      const auto st = shift_settings(cfg, s.seed);
      for (auto order : {ExtOrder::DegRevLex, ExtOrder::DegLex})
        ck.check(alexander_dual(shift_exterior(s.complex, order, st)) == shift_exterior(alexander_dual(s.complex), order, st),
                 std::string("dual of the shift differs from the shift of the dual (") + (order == ExtOrder::DegRevLex ? "revlex" : "deglex") + ")");
    });
}

inline void suite_sdeg(const RunConfig& cfg, SuiteReport& r) {
  r.title = "deg <= adeg <= sdeg = adeg of the symmetric shift; CM <=> symmetric shift pure <=> Reisner";
  Checker ck(r);
  int cm = 0;
  for (const auto& s : complex_samples(cfg))
    ck.sample(s.where, s.input, [&] {
      const auto& c = s.complex;
      const auto st = shift_settings(cfg, s.seed);
      const auto sym = shift_symmetric(c, st);
      const std::size_t d = deg(c), a = adeg(c), sd = adeg(sym);
      ck.check(d <= a && a <= sd, "chain deg <= adeg <= sdeg fails: " + std::to_string(d) + ", " + std::to_string(a) + ", " + std::to_string(sd));
      if (is_sequentially_cm_duval(c, st.field)) ck.check(sd == a, "sequentially CM but sdeg != adeg");
      const bool pure = sym.is_pure(), reisner = is_cm_reisner(c, st.field);
      ck.check(pure == reisner, "symmetric shift pure = " + std::to_string(pure) + " but Reisner = " + std::to_string(reisner));
      cm += reisner;
      // sdeg through gin(gin(I)) must match: a consistency check of the pipeline
      const auto g = gin_symmetric(sr_ideal_symmetric(c, st.field), st.trials, st.seed);
      const auto gg = gin_symmetric(g.ideal, st.trials, st.seed + 1);
      ck.check(gg.generators == g.generators, "gin of the symmetric gin differs");
      ck.check(adeg(complex_avoiding(sigma_ideal(gg.generators, c.n()), c.n())) == sd, "sdeg through gin(gin(I)) differs");
      if (c == hollow_triangle()) ck.check(sd == 3 && d == 3, "hollow triangle: expected sdeg = deg = 3");
      if (c == disjoint_edges()) ck.check(sd == 3 && a == 2, "two disjoint edges: expected sdeg 3 > adeg 2");
    });
  r.notes.push_back("Cohen-Macaulay samples: " + std::to_string(cm));
}

inline void suite_iterated_betti(const RunConfig& cfg, SuiteReport& r) {
  r.title = "iterated Betti numbers: both routes agree; equal to the h-triangle iff sequentially CM";
  Checker ck(r);
  int seq = 0;
  for (const auto& s : complex_samples(cfg))
    ck.sample(s.where, s.input, [&] {
      const auto& c = s.complex;
      const auto st = shift_settings(cfg, s.seed);
      std::vector<Triangle> b;
      for (auto kind : kAllKinds) {
        const auto sh = shift(c, kind, st);
        b.push_back(iterated_betti(c, kind, st));  // throws if the routes disagree
        ck.check(same_triangle(iterated_betti(sh, kind, st), b.back()), "iterated Betti numbers change when shifting again (" + to_string(kind) + ")");
        long long top = 0, all = 0;
        for (std::size_t i = 0; i < b.back().size(); ++i)
          for (long long v : b.back()[i]) {
            all += v;
            if (static_cast<int>(i) == sh.max_face_size()) top += v;
          }
        ck.check(top == static_cast<long long>(deg(sh)) && all == static_cast<long long>(adeg(sh)), "sums of iterated Betti numbers differ from deg/adeg");
        ck.check(is_sequentially_cm_duval(sh, st.field), "shifted complex is not sequentially CM (" + to_string(kind) + ")");
        ck.check(sh.is_pure() == is_cm_reisner(sh, st.field), "shifted complex: pure and CM differ (" + to_string(kind) + ")");
      }
      const auto h = h_triangle(c);
      const bool duval = is_sequentially_cm_duval(c, st.field);
      seq += duval;
      ck.check(same_triangle(b[0], h) == duval, "b^e = h is " + std::to_string(same_triangle(b[0], h)) + " but sequentially CM is " + std::to_string(duval));
      if (duval) ck.check(same_triangle(b[2], b[0]), "sequentially CM but b^s differs from b^e");
      if (c == hollow_triangle()) ck.check(b[0].size() == 3 && b[0][2] == std::vector<long long>{1, 1, 1}, "hollow triangle: expected b_2 = (1,1,1)");
      if (c == disjoint_edges())
        ck.check(same_triangle(b[0], Triangle{{0}, {0, 1}, {1, 1, 0}}) && h.size() == 3 && h[2][2] == -1, "two disjoint edges: fixture triangles differ");
    });
  r.notes.push_back("sequentially CM samples: " + std::to_string(seq));
}

inline void suite_axioms(const RunConfig& cfg, SuiteReport& r) {
  r.title = "shifting axioms: shifted output, idempotent, f-vector kept, monotone on subcomplexes";
  Checker ck(r);
  int k = 0;
  for (const auto& s : complex_samples(cfg)) {
    auto rng = sample_rng(cfg.seed, kSub, 0, k++);
    std::vector<Mask> keep;
    for (Mask f : s.complex.facets())
      if (uniform_int(rng, 0, 1)) keep.push_back(f);
    const SimplicialComplex sub(s.complex.n(), keep);
    ck.sample(s.where, s.input + " subcomplex " + to_json(sub).dump(), [&] {
      const auto st = shift_settings(cfg, s.seed);
      for (auto kind : kAllKinds) {
        const auto sh = shift(s.complex, kind, st);
        const std::string tag = " (" + to_string(kind) + ")";
        ck.check(is_shifted(sh), "S1: output is not shifted" + tag);
        ck.check(shift(sh, kind, st) == sh, "S2: shifted complex is not fixed" + tag);
        ck.check(f_vector(sh) == f_vector(s.complex), "S3: f-vector changes" + tag);
        ck.check(is_subcomplex(shift(sub, kind, st), sh), "S4: shift of a subcomplex is not contained in the shift" + tag);
      }
    });
  }
}

struct SuiteEntry {
  const char* name;
  void (*run)(const RunConfig&, SuiteReport&);
};

inline const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> suites = {
      {"V1", suite_closed_form},       {"V2", suite_zeroth},         {"V3", suite_chain},        {"V4", suite_gin_orders},
      {"V5", suite_componentwise_linear}, {"V6", suite_gotzmann},    {"V7", suite_facet_counts}, {"V8", suite_duality},
      {"V9", suite_sdeg},              {"V10", suite_iterated_betti}, {"V11", suite_axioms},      {"V12", suite_m_statistics},
  };
  return suites;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::registry()) out.push_back(e.name);
  return out;
}

/// "all" or a comma-separated list such as "V1,V7", returned in registry order.
inline std::vector<std::string> parse_suites(const std::string& selection) {
  const auto names = suite_names();
  if (selection == "all") return names;
  std::vector<std::string> wanted;
  std::stringstream in(selection);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (std::find(names.begin(), names.end(), item) == names.end()) throw InputError("unknown suite \"" + item + "\"");
    wanted.push_back(item);
  }
  if (wanted.empty()) throw InputError("no suite selected");
  std::vector<std::string> out;
  for (const auto& n : names)
    if (std::find(wanted.begin(), wanted.end(), n) != wanted.end()) out.push_back(n);
  return out;
}

inline SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  for (const auto& e : detail::registry())
    if (name == e.name) {
      SuiteReport r;
      r.name = name;
      e.run(cfg, r);
      return r;
    }
  throw InputError("unknown suite \"" + name + "\"");
}

inline VerifyReport run_verify(const std::vector<std::string>& names, const RunConfig& cfg) {
  VerifyReport rep{cfg, {}};
  for (const auto& n : names) rep.suites.push_back(run_suite(n, cfg));
  return rep;
}

inline constexpr std::size_t kShownFailures = 10;

inline std::string render(const VerifyReport& rep) {
  const RunConfig& c = rep.config;
  std::ostringstream out;
  out << "exshift verify\n";
  out << "config: prime=" << c.prime << " seed=" << c.seed << " trials=" << c.trials << " imax=" << (c.i_max < 0 ? std::string("n+2") : std::to_string(c.i_max))
      << " n-max=" << c.n_max << " samples=" << c.samples << " truncate-above-p=" << (c.truncate_above_p ? "yes" : "no") << "\n";
  int passed = 0;
  for (const auto& s : rep.suites) {
    passed += s.passed();
    out << s.name << " " << (s.passed() ? "PASS" : "FAIL") << "  " << s.title << "  [samples=" << s.samples << " checks=" << s.checks << "]\n";
    for (const auto& n : s.notes) out << "  note: " << n << "\n";
    for (std::size_t k = 0; k < s.failures.size() && k < kShownFailures; ++k) {
      const auto& f = s.failures[k];
      out << "  failure: " << f.where << ": " << f.message << "\n";
      if (!f.input.empty()) out << "    input: " << f.input << "\n";
      out << "    replay: " << c.replay(s.name) << "\n";
    }
    if (s.failures.size() > kShownFailures) out << "  ... " << s.failures.size() - kShownFailures << " more failures\n";
  }
  out << "result: " << (rep.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << rep.suites.size() << " suites passed)\n";
  return out.str();
}

/// Counts for two open questions on complexes; never asserts anything.
inline std::string explore(const RunConfig& cfg) {
  cfg.validate();
  int total = 0, e_least = 0, s_least = 0, lex_least = 0, conj_holds = 0;
  std::vector<std::string> counterexamples;
  for (const auto& s : detail::complex_samples(cfg)) {
    const auto st = detail::shift_settings(cfg, s.seed);
    const std::size_t ae = adeg(shift(s.complex, ShiftKind::Exterior, st));
    const std::size_t al = adeg(shift(s.complex, ShiftKind::ExteriorLex, st));
    const std::size_t as = adeg(shift(s.complex, ShiftKind::Symmetric, st));
    const std::size_t least = std::min({ae, al, as});
    ++total;
    e_least += ae == least;
    lex_least += al == least;
    s_least += as == least;
    Triangle be = iterated_betti(s.complex, ShiftKind::Exterior, st);
    Triangle bs = iterated_betti(s.complex, ShiftKind::Symmetric, st);
    const std::size_t size = std::max(be.size(), bs.size());
    for (Triangle* t : {&be, &bs})
      while (t->size() < size) t->push_back(std::vector<long long>(t->size() + 1, 0));
    bool holds = true;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t r = 0; r <= i; ++r) holds = holds && bs[i][r] <= be[i][r];
    conj_holds += holds;
    if (!holds && counterexamples.size() < 5) counterexamples.push_back(s.input);
  }
  std::ostringstream out;
  out << "exshift explore\n";
  out << "config: prime=" << cfg.prime << " seed=" << cfg.seed << " trials=" << cfg.trials << " n-max=" << cfg.n_max << " samples=" << cfg.samples << "\n";
  out << "complexes: " << total << "\n";
  out << "smallest adeg attained by: exterior " << e_least << ", exterior deglex " << lex_least << ", symmetric " << s_least << "\n";
  out << "b^s <= b^e entrywise: " << conj_holds << " of " << total << "\n";
  for (const auto& c : counterexamples) out << "  b^s exceeds b^e somewhere: " << c << "\n";
  return out.str();
}

}  // namespace exshift
