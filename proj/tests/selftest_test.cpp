#include <gtest/gtest.h>

#include "flagforge/selftest.hpp"

using namespace flagforge;

TEST(Selftest, FieldAxioms) { EXPECT_TRUE(selftest::field_axioms().passed); }

TEST(Selftest, EchelonCanonical) {
  const auto r = selftest::echelon_canonical(7);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Selftest, GabidulinProperties) {
  const auto r = selftest::gabidulin_properties();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Selftest, IdentifyingVectorChecks) {
  selftest::IdVectorStats stats;
  const auto r = selftest::identifying_vector_checks(42, 1000, &stats);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(stats.pairs, 1000u);
  EXPECT_GT(stats.reduced_equal_cases, 0u);
  EXPECT_GT(stats.inverse_equal_cases, 0u);
}

TEST(Selftest, ConstructionGrid) {
  const auto r = selftest::construction_grid();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Selftest, Characterization) {
  selftest::CharacterizationStats stats;
  const auto r = selftest::characterization(42, 200, &stats);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(stats.codes, 200u);
  EXPECT_GT(stats.odfc, 0u);
  EXPECT_GT(stats.non_odfc, 0u);
}

TEST(Selftest, BoundIdentities) {
  const auto r = selftest::bound_identities();
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Selftest, SeedsAreReproducible) {
  const auto a = selftest::run_all(3);
  const auto b = selftest::run_all(3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].passed, b[i].passed);
    EXPECT_EQ(a[i].detail, b[i].detail);
  }
}
