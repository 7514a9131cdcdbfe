// Acceptance suite: runs every verification criterion over the full algebra
// scope and prints one pass/fail line per criterion.

#include <fstream>
#include <iostream>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "contact/checks.hpp"

using namespace contact;

namespace {
constexpr int kSamples = 100;
constexpr std::uint64_t kSeed = 0;

const std::vector<checks::CriterionResult>& all_results() {
  static const std::vector<checks::CriterionResult> results = [] {
    auto r = checks::run_all(kSamples, kSeed);
    for (const auto& c : r) {
      std::cout << "criterion " << c.id << " (" << c.name << "): "
                << (c.passed ? "PASS" : "FAIL") << "\n";
      for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    }
    std::cout.flush();
    return r;
  }();
  return results;
}

const checks::CriterionResult& result(int id) {
  for (const auto& c : all_results())
    if (c.id == id) return c;
  throw std::logic_error("unknown criterion id");
}

void check_criterion(int id) {
  const auto& c = result(id);
  for (const auto& f : c.failures) UNSCOPED_INFO(f);
  CHECK(c.passed);
}
}  // namespace

TEST_CASE("criterion 1: contact grading axioms") { check_criterion(1); }
TEST_CASE("criterion 2: symmetry classification") { check_criterion(2); }
TEST_CASE("criterion 3: involutivity and closed forms") { check_criterion(3); }
TEST_CASE("criterion 4: curvature sign laws") { check_criterion(4); }
TEST_CASE("criterion 5: harmonic component table") { check_criterion(5); }
TEST_CASE("criterion 6: grading section identities") { check_criterion(6); }
TEST_CASE("criterion 7: uniqueness obstruction pairings") { check_criterion(7); }
TEST_CASE("criterion 8: frame calculus identities") { check_criterion(8); }

TEST_CASE("harmonic multiplicities match the pinned snapshot") {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/harmonic_multiplicities.json");
  REQUIRE(in.good());
  nlohmann::json snapshot = nlohmann::json::parse(in);
  checks::AlgebraRegistry reg;
  for (const auto& spec : checks::standard_scope()) {
    const std::string key = spec.to_string();
    INFO(key);
    REQUIRE(snapshot.contains(key));
    HarmonicReport rep = harmonic_space(reg.get(spec));
    const auto& expected = snapshot[key];
    REQUIRE(expected.size() == rep.entries.size());
    for (std::size_t k = 0; k < rep.entries.size(); ++k) {
      CHECK(rep.entries[k].homogeneity == expected[k]["homogeneity"].get<int>());
      CHECK(rep.entries[k].type[0] == expected[k]["type"][0].get<int>());
      CHECK(rep.entries[k].type[1] == expected[k]["type"][1].get<int>());
      CHECK(rep.entries[k].type[2] == expected[k]["type"][2].get<int>());
      CHECK(rep.entries[k].dim == expected[k]["dim"].get<int>());
    }
  }
}
