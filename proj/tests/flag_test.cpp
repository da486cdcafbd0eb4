#include <gtest/gtest.h>

#include <set>

#include "flagforge/flag.hpp"
#include "flagforge/random.hpp"
#include "oracles.hpp"

using namespace flagforge;

namespace {

FieldPtr gf2() { return make_field(2, 1); }

// Distance between two flags computed directly from their generators.
std::size_t oracle_flag_distance(const Matrix& a, const Matrix& b, const std::vector<std::uint64_t>& ticks) {
  std::size_t total = 0;
  for (auto t : ticks) total += oracle::subspace_distance(top_rows(a, t), top_rows(b, t));
  return total;
}

}  // namespace

TEST(FlagTypeSet, Examples) {
  EXPECT_EQ(flag_type_set(5, 2).ticks(), (std::vector<std::uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(flag_type_set(4, 2).ticks(), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(flag_type_set(7, 2).ticks(), (std::vector<std::uint64_t>{1, 2, 5, 6}));
  EXPECT_EQ(flag_type_set(2, 1).ticks(), (std::vector<std::uint64_t>{1}));
}

TEST(FlagType, Validation) {
  EXPECT_THROW(FlagType(4, {}), Error);
  EXPECT_THROW(FlagType(4, {0}), Error);
  EXPECT_THROW(FlagType(4, {4}), Error);
  EXPECT_THROW(FlagType(4, {2, 1}), Error);
  EXPECT_THROW(FlagType(4, {1, 1}), Error);
  const FlagType t(5, {1, 3});
  EXPECT_EQ(t.position(3), 1u);
  try {
    t.position(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadTick);
  }
}

TEST(BuildMatrixSet, CountsMatchSizeFormula) {
  auto f = gf2();
  EXPECT_EQ(build_matrix_set(4, 2, f).size(), 5u);
  EXPECT_EQ(build_matrix_set(5, 2, f).size(), 9u);
  EXPECT_EQ(build_matrix_set(7, 2, f).size(), 41u);
  EXPECT_EQ(build_matrix_set(6, 3, f).size(), 9u);
  EXPECT_EQ(build_matrix_set(4, 1, make_field(3, 1)).size(), 40u);
  EXPECT_EQ(build_matrix_set(4, 2, make_field(2, 2)).size(), 17u);
}

TEST(BuildMatrixSet, FinalTemplatesForN4K2) {
  auto f = gf2();
  const auto set = build_matrix_set(4, 2, f);
  ASSERT_EQ(set.size(), 5u);
  const GeneratorMatrix& ma = set[3];
  const GeneratorMatrix& ma1 = set[4];
  EXPECT_EQ(ma.provenance.label(), "M(a)");
  EXPECT_EQ(ma1.provenance.label(), "M(a+1)");
  EXPECT_EQ(ma.matrix, Matrix::from_rows(f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(ma1.matrix, Matrix::identity(f, 4));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(set[i].provenance.label(), "D");
}

TEST(BuildMatrixSet, DFamilyShape) {
  auto f = gf2();
  const auto set = build_matrix_set(4, 2, f);
  // First nonzero codeword of the 2x2 Gabidulin code over GF(2) is the identity.
  EXPECT_EQ(set[0].matrix, Matrix::from_rows(f, {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  for (const auto& g : set) EXPECT_TRUE(is_invertible(g.matrix));
}

TEST(BuildMatrixSet, ProvenanceOrderForA3) {
  const auto set = build_matrix_set(8, 2, gf2());
  std::vector<std::string> labels;
  for (const auto& g : set) {
    if (labels.empty() || labels.back() != g.provenance.label()) labels.push_back(g.provenance.label());
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"D", "O0", "G0", "O1", "G1", "M(a)", "M(a+1)"}));
}

TEST(BuildMatrixSet, RejectsBadParams) {
  try {
    build_matrix_set(5, 3, gf2());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParams);
  }
  EXPECT_THROW(build_matrix_set(3, 0, gf2()), Error);
}

TEST(FlagFromMatrix, StandardFlag) {
  auto f = gf2();
  const Flag std_flag = flag_from_matrix(Matrix::identity(f, 4), FlagType::full(4));
  ASSERT_EQ(std_flag.subspaces().size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(std_flag.component(i).basis(), top_rows(Matrix::identity(f, 4), i + 1));
  }
}

TEST(FlagFromMatrix, Errors) {
  auto f = gf2();
  try {
    flag_from_matrix(Matrix::from_rows(f, {{1, 1}, {1, 1}}), FlagType::full(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
  try {
    flag_from_matrix(Matrix::identity(f, 3), FlagType::full(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(FlagDistance, HandExample) {
  auto f = gf2();
  const Matrix m = Matrix::from_rows(f, {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  const Flag a = flag_from_matrix(m, FlagType::full(4));
  const Flag b = flag_from_matrix(Matrix::identity(f, 4), FlagType::full(4));
  EXPECT_EQ(flag_distance(a, b), 8u);
  EXPECT_EQ(flag_distance(a, a), 0u);
}

TEST(FlagDistance, TypeMismatch) {
  auto f = gf2();
  const Flag a = flag_from_matrix(Matrix::identity(f, 4), FlagType(4, {1, 2}));
  const Flag b = flag_from_matrix(Matrix::identity(f, 4), FlagType(4, {1, 3}));
  try {
    flag_distance(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TypeMismatch);
  }
}

TEST(FlagDistance, MatchesOracleOnRandomGenerators) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = make_field_of_order(trial % 2 ? 2 : 3);
    const std::uint64_t n = rng.between(2, 5);
    const FlagType type = random_flag_type(rng, n);
    const Matrix x = random_invertible(rng, f, n);
    const Matrix y = random_invertible(rng, f, n);
    ASSERT_EQ(flag_distance(flag_from_matrix(x, type), flag_from_matrix(y, type)),
              oracle_flag_distance(x, y, type.ticks()));
  }
}

TEST(Flag, RestrictionKeepsComponents) {
  auto f = gf2();
  const Matrix m = Matrix::from_rows(f, {{0, 1, 1}, {1, 1, 0}, {0, 0, 1}});
  const Flag full = flag_from_matrix(m, FlagType::full(3));
  const Flag sub = full.restricted(FlagType(3, {2}));
  EXPECT_EQ(sub.subspaces().size(), 1u);
  EXPECT_EQ(sub.component(0), full.component(1));
  EXPECT_THROW(full.restricted(FlagType(4, {2})), Error);
}

TEST(Flag, RejectsNonNestedComponents) {
  auto f = gf2();
  const Subspace line(Matrix::from_rows(f, {{0, 0, 1}}));
  const Subspace plane(Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_THROW(Flag(FlagType::full(3), {line, plane}), Error);
}

TEST(ConstructOdfc, SizesAndTypes) {
  auto f = gf2();
  EXPECT_EQ(construct_odfc(5, 2, {1, 2, 3, 4}, f).size(), 9u);
  EXPECT_EQ(construct_odfc(6, 2, {1, 2, 4, 5}, f).size(), 21u);
  EXPECT_EQ(construct_odfc(6, 3, {3}, f).size(), 9u);
  const FlagCode c = construct_odfc(5, 2, {4, 1, 1}, f);
  EXPECT_EQ(c.type().ticks(), (std::vector<std::uint64_t>{1, 4}));
}

TEST(ConstructOdfc, BadTypeSet) {
  auto f = gf2();
  for (std::vector<std::uint64_t> ticks : {std::vector<std::uint64_t>{3}, std::vector<std::uint64_t>{},
                                           std::vector<std::uint64_t>{1, 7}}) {
    try {
      construct_odfc(7, 2, ticks, f);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadTypeSet);
    }
  }
}

TEST(ConstructOdfc, DeterministicAndDuplicateFree) {
  auto f = make_field(3, 1);
  const FlagCode a = construct_odfc(5, 2, {1, 2, 3, 4}, f);
  const FlagCode b = construct_odfc(5, 2, {1, 2, 3, 4}, f);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.flags()[i], b.flags()[i]);
    EXPECT_EQ(a.provenance()[i], b.provenance()[i]);
  }
}

TEST(FlagCode, RejectsDuplicates) {
  auto f = gf2();
  const FlagType t = FlagType::full(3);
  const Flag x = flag_from_matrix(Matrix::identity(f, 3), t);
  try {
    FlagCode(CodeParams::make(f, 3, 1), t, {x, x});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadParams);
  }
}

TEST(Provenance, LabelRoundTrip) {
  using F = Provenance::Family;
  for (const Provenance& p : {Provenance{F::D, 1, 3}, Provenance{F::G, 2, 5}, Provenance{F::O, 0, 0},
                              Provenance{F::Ma, 2, 0}, Provenance{F::MaPlus1, 3, 0}}) {
    const Provenance back = Provenance::parse(p.label(), p.index);
    EXPECT_EQ(back.family, p.family);
    EXPECT_EQ(back.index, p.index);
    if (p.family == F::G || p.family == F::O) {
      EXPECT_EQ(back.level, p.level);
    }
  }
  EXPECT_THROW(Provenance::parse("Q", 0), Error);
  EXPECT_THROW(Provenance::parse("Gx", 0), Error);
}
