#include <gtest/gtest.h>

#include <vector>

#include "flagforge/galois.hpp"

using namespace flagforge;

namespace {

// Monic polynomials of degree 2 or 3 are irreducible iff they have no root.
std::vector<Element> first_rootless_monic(std::uint32_t p, std::size_t deg) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    std::vector<Element> f(deg + 1, 0);
    std::uint64_t rest = low;
    for (std::size_t i = 0; i < deg; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[deg] = 1;
    bool has_root = false;
    for (std::uint64_t x = 0; x < p && !has_root; ++x) {
      std::uint64_t value = 0;
      std::uint64_t power = 1;
      for (Element c : f) {
        value = (value + c * power) % p;
        power = power * x % p;
      }
      has_root = value == 0;
    }
    if (!has_root) return f;
  }
  return {};
}

// Carry-less product reduced by a binary modulus given as a bit mask.
std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int degree) {
  std::uint32_t acc = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1u) acc ^= a << i;
  }
  for (int bit = 31; bit >= degree; --bit) {
    if ((acc >> bit) & 1u) acc ^= modulus << (bit - degree);
  }
  return acc;
}

}  // namespace

TEST(FieldMake, PrimeFieldHasModulusX) {
  auto f = make_field(2, 1);
  EXPECT_EQ(f->order(), 2u);
  EXPECT_EQ(std::vector<Element>(f->modulus().begin(), f->modulus().end()), (std::vector<Element>{0, 1}));
}

TEST(FieldMake, SmallestIrreducibleMatchesRootSearch) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 2}, {3, 2}, {2, 3}, {5, 2}, {3, 3}, {7, 2}}) {
    auto f = make_field(p, static_cast<std::uint32_t>(e));
    EXPECT_EQ(std::vector<Element>(f->modulus().begin(), f->modulus().end()), first_rootless_monic(p, e))
        << "p=" << p << " e=" << e;
  }
}

TEST(FieldMake, DocumentedModuli) {
  auto gf4 = make_field(2, 2);
  EXPECT_EQ(std::vector<Element>(gf4->modulus().begin(), gf4->modulus().end()), (std::vector<Element>{1, 1, 1}));
  auto gf9 = make_field(3, 2);
  EXPECT_EQ(std::vector<Element>(gf9->modulus().begin(), gf9->modulus().end()), (std::vector<Element>{1, 0, 1}));
}

TEST(FieldMake, ModulusIsIrreducibleForLargerDegrees) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 8}, {2, 16}, {3, 5}, {13, 2}}) {
    auto f = make_field(p, e);
    auto prime = Field::prime(p);
    EXPECT_TRUE(poly::is_irreducible(*prime, f->modulus()));
    EXPECT_EQ(f->prime_degree(), e);
  }
}

TEST(FieldMake, Errors) {
  EXPECT_THROW(make_field(4, 1), Error);
  try {
    make_field(9, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
  try {
    make_field(2, 17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  try {
    make_field(257, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(FieldArithmetic, Gf4Examples) {
  auto f = make_field(2, 2);
  for (Element a = 0; a < 4; ++a) EXPECT_EQ(f->mul(a, 1), a);
  EXPECT_EQ(f->mul(2, 2), 3u);
  EXPECT_EQ(f->inv(2), 3u);
  EXPECT_EQ(f->add(2, 3), 1u);
}

TEST(FieldArithmetic, BinaryExtensionsMatchCarrylessOracle) {
  for (std::uint32_t e : {3u, 4u, 8u}) {
    auto f = make_field(2, e);
    std::uint32_t mask = 0;
    for (std::uint32_t i = 0; i <= e; ++i) mask |= f->modulus()[i] << i;
    for (Element a = 0; a < f->order(); ++a) {
      for (Element b = 0; b < f->order(); ++b) {
        ASSERT_EQ(f->mul(a, b), clmul_mod(a, b, mask, static_cast<int>(e))) << a << "*" << b;
      }
    }
  }
}

TEST(FieldArithmetic, Gf9ByHand) {
  // x^2 = -1 = 2 in GF(9) with modulus x^2 + 1; elements c0 + 3 c1.
  auto f = make_field(3, 2);
  EXPECT_EQ(f->mul(3, 3), 2u);
  EXPECT_EQ(f->mul(4, 4), 6u);  // (1+x)^2 = 1 + 2x + x^2 = 2x
  EXPECT_EQ(f->add(5, 7), 0u);  // (2 + x) + (1 + 2x) = 0
  EXPECT_EQ(f->add(5, 5), 7u);  // 2(2 + x) = 1 + 2x
  EXPECT_EQ(f->neg(5), 7u);     // -(2 + x) = 1 + 2x
}

TEST(FieldArithmetic, InverseOfZeroThrows) {
  auto f = make_field(3, 1);
  try {
    (void)f->inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(FieldArithmetic, ExhaustiveInverseAndFermat) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 27u, 32u, 121u, 256u}) {
    auto f = make_field_of_order(q);
    for (Element a = 1; a < q; ++a) {
      ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
      ASSERT_EQ(f->pow(a, q - 1), 1u);
      ASSERT_EQ(f->pow(a, q), a);
    }
    EXPECT_EQ(f->pow(0, 0), 1u);
    EXPECT_EQ(f->pow(0, 5), 0u);
  }
}

TEST(FieldArithmetic, ExtensionOverNonPrimeBase) {
  auto gf4 = make_field(2, 2);
  auto gf16 = Field::extension(gf4, poly::smallest_irreducible(*gf4, 2));
  EXPECT_EQ(gf16->order(), 16u);
  EXPECT_EQ(gf16->prime_degree(), 4u);
  for (Element a = 1; a < 16; ++a) {
    ASSERT_EQ(gf16->mul(a, gf16->inv(a)), 1u);
    for (Element b = 0; b < 16; ++b) ASSERT_EQ(gf16->mul(a, b), gf16->mul_reference(a, b));
  }
}

TEST(FieldArithmetic, ReducibleModulusRejected) {
  auto gf2 = Field::prime(2);
  EXPECT_THROW(Field::extension(gf2, {1, 0, 1}), Error);  // (x+1)^2
}

TEST(PrimePower, Factorization) {
  EXPECT_EQ(factor_prime_power(2), (std::pair<std::uint32_t, std::uint32_t>{2, 1}));
  EXPECT_EQ(factor_prime_power(9), (std::pair<std::uint32_t, std::uint32_t>{3, 2}));
  EXPECT_EQ(factor_prime_power(64), (std::pair<std::uint32_t, std::uint32_t>{2, 6}));
  EXPECT_EQ(factor_prime_power(49), (std::pair<std::uint32_t, std::uint32_t>{7, 2}));
  EXPECT_THROW(factor_prime_power(6), Error);
  EXPECT_THROW(factor_prime_power(1), Error);
  EXPECT_THROW(factor_prime_power(12), Error);
}

TEST(FieldIdentity, StructuralEquality) {
  EXPECT_TRUE(same_field(make_field(2, 3), make_field(2, 3)));
  EXPECT_FALSE(same_field(make_field(2, 3), make_field(2, 2)));
  EXPECT_FALSE(same_field(make_field(3, 1), make_field(2, 1)));
}
