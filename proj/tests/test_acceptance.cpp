// Acceptance suite: one test per criterion, each printing a pass/fail line.

#include <catch_amalgamated.hpp>

#include <iostream>

#include "hfkit/selftest.hpp"

using namespace hfkit::selftest;

namespace {

void report(const CriterionResult& r) {
  std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": "
            << r.name << " (" << r.detail << ", " << r.elapsed_ms << " ms)"
            << std::endl;
  INFO(r.detail);
  CHECK(r.pass);
}

}  // namespace

TEST_CASE("criterion 1: codec bijection") { report(codec_bijection()); }

TEST_CASE("criterion 2: eps agreement") { report(eps_agreement()); }

TEST_CASE("criterion 3: boolean algebra agreement") {
  report(boolean_algebra_agreement());
}

TEST_CASE("criterion 4: von Neumann ladder") { report(von_neumann_ladder()); }

TEST_CASE("criterion 5: v-arithmetic") { report(v_arithmetic()); }

TEST_CASE("criterion 6: classifier calibration") {
  report(classifier_calibration(0));
}

TEST_CASE("criterion 7: round-trip identities") {
  report(roundtrip_identities());
}

TEST_CASE("criterion 8: graph-formula micro-validation") {
  report(graph_micro_validation());
}

TEST_CASE("criterion 9: stage suite") { report(stage_suite(0)); }

TEST_CASE("criterion 10: inductive-definition agreement") {
  report(inductive_agreement());
}

TEST_CASE("criterion 11: complexity preservation") {
  report(complexity_preservation());
}

TEST_CASE("criterion 12: delta0 totality") { report(delta0_totality(0)); }
