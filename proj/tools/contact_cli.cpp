// Command-line front end: verification suites over contact-graded algebras
// with human-readable and machine-readable (JSON, schema 1) output.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contact/checks.hpp"
#include "contact/json_io.hpp"
#include "contact/sampling.hpp"
#include "contact/symmetry.hpp"
#include "contact/weyl.hpp"

namespace {

using contact::json_io::Json;

struct Options {
  std::string alg;
  int samples = 100;
  std::uint64_t seed = 0;
  bool json = false;
  bool print_basis = false;
  bool involutive_only = false;
  std::string u1_coeffs;
};

void add_common(CLI::App* cmd, Options& opt, bool needs_alg) {
  auto* a = cmd->add_option("--alg", opt.alg, "algebra spec, e.g. sl:n=2 or su:p=1,q=1");
  if (needs_alg) a->required();
  cmd->add_option("--samples", opt.samples, "number of random samples")->default_val(100);
  cmd->add_option("--seed", opt.seed, "random seed")->default_val(0);
  cmd->add_flag("--json", opt.json, "machine-readable JSON output");
  cmd->add_flag("--print-basis", opt.print_basis, "also print the ordered basis");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_basis_text(const contact::GradedContactAlgebra& alg) {
  std::cout << "basis of " << alg.spec().to_string() << " (index, degree, side):\n";
  for (int b = 0; b < alg.dim(); ++b) {
    std::cout << "  [" << b << "] degree " << alg.degree(b);
    if (alg.side(b)) std::cout << " side " << alg.side(b);
    std::cout << "\n";
    const auto& m = alg.basis_matrix(b);
    for (int i = 0; i < m.rows(); ++i) {
      std::cout << "    ";
      for (int j = 0; j < m.cols(); ++j)
        std::cout << contact::to_string(m(i, j)) << (j + 1 < m.cols() ? " " : "\n");
    }
  }
}

int run_verify(const Options& opt) {
  auto spec = contact::AlgebraSpec::parse(opt.alg);
  auto alg = contact::build_algebra(spec);
  auto rep = contact::verify_contact_grading(alg);
  if (opt.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j.update(contact::json_io::verification_json(spec, rep));
    if (opt.print_basis) j["basis"] = contact::json_io::basis_json(alg);
    emit(j);
  } else {
    Json axioms = contact::json_io::verification_json(spec, rep)["axioms"];
    std::cout << "algebra " << spec.to_string() << "\n";
    for (auto it = axioms.begin(); it != axioms.end(); ++it)
      std::cout << "  " << it.key() << ": " << (it.value().get<bool>() ? "pass" : "FAIL") << "\n";
    if (!rep.all_ok()) std::cout << "  first failure: " << rep.failed_check << "\n";
    if (opt.print_basis) print_basis_text(alg);
  }
  return rep.all_ok() ? 0 : 1;
}

int run_symmetries(const Options& opt) {
  auto spec = contact::AlgebraSpec::parse(opt.alg);
  auto alg = contact::build_algebra(spec);
  auto g0 = contact::find_minus_identity(alg);
  contact::Sampler smp(opt.seed);
  const auto& g1 = alg.degree_indices(1);
  int g2 = alg.degree_indices(2)[0];

  Json cands = Json::array();
  for (int t = 0; t < opt.samples; ++t) {
    contact::AlgebraElement z1 = smp.algebra_element(alg, 1);
    contact::AlgebraElement z2 =
        opt.involutive_only ? alg.zero() : smp.algebra_element(alg, 2);
    contact::SymmetryCandidate cand{g0, z1, z2};
    std::vector<contact::Rational> z1c, z2c;
    auto c1 = alg.decompose(z1.m);
    for (int b : g1) z1c.push_back(c1[b]);
    z2c.push_back(alg.decompose(z2.m)[g2]);
    Json item;
    item["z1"] = contact::json_io::coeffs_json(z1c);
    item["z2"] = contact::json_io::coeffs_json(z2c);
    item["involutive"] = contact::is_involutive(alg, cand);
    cands.push_back(std::move(item));
  }
  if (opt.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "symmetries";
    j["algebra"] = spec.to_string();
    j["g0"] = contact::json_io::matrix_json(g0.representative.m);
    j["candidates"] = std::move(cands);
    if (opt.print_basis) j["basis"] = contact::json_io::basis_json(alg);
    emit(j);
  } else {
    std::cout << "algebra " << spec.to_string() << ": " << cands.size()
              << " symmetry candidates g0 exp(Z1) exp(Z2)\n";
    for (const auto& item : cands) {
      std::cout << "  Z1=[";
      const auto& z1 = item["z1"];
      for (std::size_t k = 0; k < z1.size(); ++k)
        std::cout << z1[k].get<std::string>() << (k + 1 < z1.size() ? "," : "");
      std::cout << "] Z2=" << item["z2"][0].get<std::string>()
                << (item["involutive"].get<bool>() ? " involutive" : "") << "\n";
    }
    if (opt.print_basis) print_basis_text(alg);
  }
  return 0;
}

int run_harmonic(const Options& opt) {
  auto spec = contact::AlgebraSpec::parse(opt.alg);
  auto alg = contact::build_algebra(spec);
  auto rep = contact::harmonic_space(alg);
  if (opt.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "harmonic";
    j.update(contact::json_io::harmonic_json(spec, rep));
    if (opt.print_basis) j["basis"] = contact::json_io::basis_json(alg);
    emit(j);
  } else {
    std::cout << "algebra " << spec.to_string() << ": harmonic components\n";
    std::cout << "  homogeneity  type       dim\n";
    for (const auto& e : rep.entries)
      std::cout << "  " << e.homogeneity << "            (" << e.type[0] << "," << e.type[1]
                << "," << e.type[2] << ")    " << e.dim << "\n";
    if (opt.print_basis) print_basis_text(alg);
  }
  return 0;
}

int run_obstruction(const Options& opt) {
  auto spec = contact::AlgebraSpec::parse(opt.alg);
  auto alg = contact::build_algebra(spec);
  const auto& g1 = alg.degree_indices(1);

  std::vector<contact::Rational> coeffs;
  std::stringstream ss(opt.u1_coeffs);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      coeffs.push_back(contact::parse_rational(tok));
    } catch (const std::exception&) {
      throw contact::InvalidSpec("bad rational coefficient '" + tok + "'");
    }
  }
  if (coeffs.size() != g1.size())
    throw contact::InvalidSpec("--u1 needs " + std::to_string(g1.size()) +
                               " coefficients for " + spec.to_string());
  std::vector<contact::Rational> full(alg.dim(), contact::Rational(0));
  for (std::size_t k = 0; k < g1.size(); ++k) full[g1[k]] = coeffs[k];
  contact::AlgebraElement u1 = alg.element_from_coeffs(full);

  auto [companion, coeff] = contact::obstruction_pairing(alg, u1);
  // verdict internally cross-checks the pairing against the pseudometric
  // criterion and throws if they ever disagree
  auto verdict = contact::uniqueness_verdict(alg, u1);
  bool obstructed = verdict == contact::UniquenessVerdict::OBSTRUCTED;
  if (opt.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "obstruction";
    j["algebra"] = spec.to_string();
    j["u1"] = contact::json_io::coeffs_json(coeffs);
    j["coefficient"] = contact::json_io::rational_str(coeff);
    j["pairing_criterion"] = coeff != 0;
    j["pseudometric_criterion"] = obstructed;
    j["verdict"] = obstructed ? "OBSTRUCTED" : "UNDECIDED";
    j["companion"] = contact::json_io::matrix_json(companion.m);
    if (opt.print_basis) j["basis"] = contact::json_io::basis_json(alg);
    emit(j);
  } else {
    std::cout << "algebra " << spec.to_string() << "\n";
    std::cout << "  coefficient: " << contact::to_string(coeff) << "\n";
    std::cout << "  pairing criterion (coefficient != 0): " << (coeff != 0 ? "yes" : "no")
              << "\n";
    std::cout << "  pseudometric criterion: " << (obstructed ? "yes" : "no") << "\n";
    std::cout << "  verdict: " << (obstructed ? "OBSTRUCTED" : "UNDECIDED") << "\n";
    if (opt.print_basis) print_basis_text(alg);
  }
  return 0;
}

int run_report(const Options& opt) {
  auto results = contact::checks::run_all(opt.samples, opt.seed);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (opt.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "report";
    j["samples"] = opt.samples;
    j["seed"] = opt.seed;
    Json crit = Json::array();
    for (const auto& r : results) crit.push_back(contact::json_io::criterion_json(r));
    j["criteria"] = std::move(crit);
    j["all_passed"] = all;
    emit(j);
  } else {
    std::cout << "verification report (samples=" << opt.samples << ", seed=" << opt.seed
              << ")\n";
    for (const auto& r : results) {
      std::cout << "  [" << r.id << "] " << r.name << ": " << (r.passed ? "PASS" : "FAIL")
                << "\n";
      for (const auto& f : r.failures) std::cout << "        " << f << "\n";
    }
    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for contact-graded simple Lie algebras"};
  app.require_subcommand(1);

  Options overify, osym, oharm, oobs, orep;
  auto* verify = app.add_subcommand("verify", "check the contact-grading axioms");
  add_common(verify, overify, true);
  auto* sym = app.add_subcommand("symmetries", "enumerate symmetry candidates");
  add_common(sym, osym, true);
  sym->add_flag("--involutive-only", osym.involutive_only, "restrict to Z2 = 0 candidates");
  auto* harm = app.add_subcommand("harmonic", "harmonic component table");
  add_common(harm, oharm, true);
  auto* obs = app.add_subcommand("obstruction", "uniqueness obstruction for a frame change");
  add_common(obs, oobs, true);
  obs->add_option("--u1", oobs.u1_coeffs,
                  "comma-separated rational coefficients in the degree-1 basis order")
      ->required();
  auto* rep = app.add_subcommand("report", "run every verification suite");
  add_common(rep, orep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(overify);
    if (sym->parsed()) return run_symmetries(osym);
    if (harm->parsed()) return run_harmonic(oharm);
    if (obs->parsed()) return run_obstruction(oobs);
    return run_report(orep);
  } catch (const contact::InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const contact::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
