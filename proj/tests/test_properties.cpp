/* Seeded cross-oracle property suites: field axioms for the exact numbers,
 * permutation algebra, functoriality of the matrix action, the Reynolds
 * projection, and Molien counts against direct linear algebra. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "property_suites.hpp"

using trefoil_properties::PropertyReport;

namespace {

void check_report(const PropertyReport& rep, long expected_cases) {
  INFO(rep.name, ": first failure: ", rep.first_failure);
  CHECK(rep.cases == expected_cases);
  CHECK(rep.failures == 0);
}

}  // namespace

TEST_CASE("cyclotomic arithmetic satisfies the field axioms") {
  check_report(trefoil_properties::run_cyclotomic_axioms(1000), 1000);
}

TEST_CASE("permutation composition, inversion, and conjugation") {
  check_report(trefoil_properties::run_permutation_algebra(1000), 1000);
}

TEST_CASE("the matrix action is a ring homomorphism compatible with products") {
  check_report(trefoil_properties::run_action_functoriality(1000), 1000);
}

TEST_CASE("the Reynolds operator is an idempotent linear projection") {
  check_report(trefoil_properties::run_reynolds_projection(1000), 1000);
}

TEST_CASE("Molien counts match direct dimensions; tables are orthogonal") {
  check_report(trefoil_properties::run_molien_and_orthogonality(1000), 1000);
}
