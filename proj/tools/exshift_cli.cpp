#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "exshift/cartan.hpp"
#include "exshift/errors.hpp"
#include "exshift/gin.hpp"
#include "exshift/io.hpp"
#include "exshift/shifting.hpp"
#include "exshift/simplicial.hpp"
#include "exshift/verify.hpp"

using namespace exshift;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitInput = 4;

struct Common {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  int trials = kDefaultTrials;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--prime", c.prime, "field characteristic");
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--trials", c.trials, "random coordinate changes that must agree");
}

ShiftSettings settings(const Common& c) {
  if (c.trials < 2) throw InputError("--trials must be at least 2");
  return ShiftSettings{c.trials, c.seed, PrimeField(c.prime)};
}

Json triangle_json(const Triangle& t) {
  Json out = Json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

int run_gin(const Common& c, const std::string& ring, const std::string& order, const std::string& file) {
  const PrimeField field(c.prime);
  if (c.trials < 2) throw InputError("--trials must be at least 2");
  const IdealInput in = ideal_from_json(read_json_file(file));
  Json out;
  if (ring == "E") {
    const auto* e = std::get_if<ExteriorIdealInput>(&in);
    if (!e) throw InputError("--ring E needs an exterior ideal file");
    const auto J = ExtGradedIdeal::generated_by_monomials(e->n, field, e->generators);
    const auto g = gin_exterior(J, order == "lex" ? ExtOrder::DegLex : ExtOrder::DegRevLex, c.trials, c.seed);
    out = ideal_to_json(e->n, minimal_generators(g.ideal));
    out["order"] = order;
    out["hilbert"] = g.ideal.hilbert();
    out["certified"] = g.certified;
    out["trials_used"] = g.trials_used;
  } else {
    const auto* s = std::get_if<SymmetricIdealInput>(&in);
    if (!s) throw InputError("--ring S needs a symmetric ideal file");
    if (order != "revlex") throw InputError("symmetric gins use the revlex order only");
    for (const auto& m : s->generators)
      if (m.degree() > s->n) throw InputError("symmetric generators must have degree at most n");
    const auto I = SymGradedIdeal::generated_by_monomials(s->n, s->generators, s->n, field);
    const auto g = gin_symmetric(I, c.trials, c.seed);
    out = ideal_to_json(s->n, g.generators);
    out["order"] = order;
    out["hilbert"] = g.ideal.hilbert();
    out["certified"] = g.certified;
    out["trials_used"] = g.trials_used;
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_cartan(const Common& c, int i_max, const std::string& p, bool truncate, const std::string& file) {
  const PrimeField field(c.prime);
  const IdealInput in = ideal_from_json(read_json_file(file));
  const auto* e = std::get_if<ExteriorIdealInput>(&in);
  if (!e) throw InputError("Cartan-Betti numbers need an exterior ideal file");
  const auto J = ExtGradedIdeal::generated_by_monomials(e->n, field, e->generators);
  CartanOptions opt;
  opt.trials = c.trials;
  opt.seed = c.seed;
  opt.truncate_above_p = truncate;
  int only = 0;
  if (p != "all") {
    try {
      std::size_t used = 0;
      only = std::stoi(p, &used);
      if (used != p.size()) throw std::invalid_argument(p);
    } catch (const std::exception&) {
      throw InputError("--p must be an integer or \"all\"");
    }
    if (only < 1 || only > e->n) throw InputError("--p must lie in [1, n]");
    opt.ps = {only};
  }
  if (i_max < 0) i_max = e->n + 2;
  std::cout << to_json(cartan_betti_direct(J, i_max, opt), only).dump(2) << "\n";
  return kExitOk;
}

int run_shift(const Common& c, const std::string& op, const std::string& file) {
  const auto complex = complex_from_json(read_json_file(file));
  const ShiftKind kind = op == "e" ? ShiftKind::Exterior : op == "s" ? ShiftKind::Symmetric : ShiftKind::ExteriorLex;
  Json out = to_json(shift(complex, kind, settings(c)));
  out["op"] = op;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_invariants(const Common& c, const std::string& file) {
  const auto complex = complex_from_json(read_json_file(file));
  const auto st = settings(c);
  const auto report = degree_report(complex, st);
  Json out = to_json(complex);
  out["f_vector"] = f_vector(complex);
  out["deg"] = report.deg;
  out["adeg"] = report.adeg;
  out["adeg_i"] = report.adeg_i;
  out["sdeg"] = report.sdeg;
  out["f_triangle"] = triangle_json(f_triangle(complex));
  out["h_triangle"] = triangle_json(h_triangle(complex));
  Json betti = Json::object();
  for (auto kind : {ShiftKind::Exterior, ShiftKind::ExteriorLex, ShiftKind::Symmetric})
    betti[to_string(kind)] = triangle_json(iterated_betti(complex, kind, st));
  out["iterated_betti"] = betti;
  out["cohen_macaulay"] = is_cm(complex, st);
  out["sequentially_cohen_macaulay"] = is_sequentially_cm(complex, st);
  out["shifted"] = is_shifted(complex);
  out["socle"] = socle_dims(complex, st.field);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::GenericityFailure:
    case ErrorKind::StabilityFailure: return kExitGenericity;
    case ErrorKind::RouteMismatch:
    case ErrorKind::OracleDisagreement:
    case ErrorKind::CompositionNotZero: return kExitVerify;
    default: return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan-Betti numbers, generic initial ideals and algebraic shifting over F_q"};
  app.require_subcommand(1);

  Common gin_c, cb_c, shift_c, inv_c;
  std::string ring = "E", order = "revlex", gin_file;
  auto* gin = app.add_subcommand("gin", "generic initial ideal of a monomial ideal");
  add_common(gin, gin_c);
  gin->add_option("--ring", ring, "E (exterior) or S (symmetric)")->check(CLI::IsMember({"E", "S"}));
  gin->add_option("--order", order, "term order")->check(CLI::IsMember({"revlex", "lex"}));
  gin->add_option("ideal-file", gin_file)->required();

  int cb_imax = -1;
  std::string cb_p = "all", cb_file;
  bool cb_truncate = false;
  auto* cb = app.add_subcommand("cartan-betti", "Cartan-Betti table of an exterior monomial ideal in generic coordinates");
  add_common(cb, cb_c);
  cb->add_option("--imax", cb_imax, "largest homological degree (default n + 2)")->check(CLI::Range(0, 16));
  cb->add_option("--p", cb_p, "sequence length, or all");
  cb->add_flag("--truncate-above-p", cb_truncate, "set entries with i > p to zero");
  cb->add_option("ideal-file", cb_file)->required();

  std::string op = "e", shift_file;
  auto* sh = app.add_subcommand("shift", "algebraic shifting of a simplicial complex");
  add_common(sh, shift_c);
  sh->add_option("--op", op, "e, s or tau-lex")->check(CLI::IsMember({"e", "s", "tau-lex"}));
  sh->add_option("complex-file", shift_file)->required();

  std::string inv_file;
  auto* inv = app.add_subcommand("invariants", "degrees, triangles and iterated Betti numbers of a complex");
  add_common(inv, inv_c);
  inv->add_option("complex-file", inv_file)->required();

  RunConfig cfg;
  std::string suites = "all";
  auto* ver = app.add_subcommand("verify", "run verification suites on seeded random instances");
  auto* exp = app.add_subcommand("explore", "counts for open questions on random complexes; asserts nothing");
  for (auto* cmd : {ver, exp}) {
    cmd->add_option("--prime", cfg.prime, "field characteristic");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--trials", cfg.trials, "random coordinate changes that must agree");
    cmd->add_option("--n-max", cfg.n_max, "largest number of variables");
    cmd->add_option("--samples", cfg.samples, "random instances (per n for ideal suites)");
  }
  ver->add_option("--suite", suites, "all, or a comma-separated list of V1..V12");
  ver->add_option("--imax", cfg.i_max, "largest homological degree (default n + 2)");
  ver->add_flag("--truncate-above-p", cfg.truncate_above_p, "set entries with i > p to zero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gin) return run_gin(gin_c, ring, order, gin_file);
    if (*cb) return run_cartan(cb_c, cb_imax, cb_p, cb_truncate, cb_file);
    if (*sh) return run_shift(shift_c, op, shift_file);
    if (*inv) return run_invariants(inv_c, inv_file);
    if (*ver) {
      const auto names = parse_suites(suites);
      const auto report = run_verify(names, cfg);
      std::cout << render(report);
      return report.passed() ? kExitOk : kExitVerify;
    }
    if (*exp) {
      std::cout << explore(cfg);
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return kExitInput;
}
