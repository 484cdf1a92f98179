#include <gtest/gtest.h>

#include <set>

#include "hopfcert/field.hpp"
#include "hopfcert/rng.hpp"
#include "oracles.hpp"

using namespace hopfcert;

namespace {

const std::vector<std::pair<int, int>> kSmallFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2},
                                                        {2, 4}, {5, 2}, {3, 3}, {7, 2}, {2, 6}};

std::uint64_t multiplicative_order(const Field& f, Elem a) {
  std::uint64_t n = 1;
  for (Elem x = a; x != 1; x = f.mul(x, a)) ++n;
  return n;
}

}  // namespace

TEST(Field, OrderNineHasCyclicUnitGroupOfOrderEight) {
  const Field f = Field::create(3, 2);
  EXPECT_EQ(f.order(), 9u);
  EXPECT_EQ(multiplicative_order(f, f.primitive_element()), 8u);
}

TEST(Field, GF16HasAUniqueSubfieldOfOrderFour) {
  const Field f = Field::create(2, 4);
  std::vector<Elem> fixed;
  for (Elem x = 0; x < f.order(); ++x)
    if (f.pow(x, 4) == x) fixed.push_back(x);
  ASSERT_EQ(fixed.size(), 4u);
  for (auto a : fixed)
    for (auto b : fixed) {
      EXPECT_EQ(f.pow(f.add(a, b), 4), f.add(a, b));
      EXPECT_EQ(f.pow(f.mul(a, b), 4), f.mul(a, b));
    }
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(Field::create(4, 1), InvalidInput);
  EXPECT_THROW(Field::create(1, 1), InvalidInput);
  EXPECT_THROW(Field::create(3, 0), InvalidInput);
}

TEST(Field, AxiomsHoldExhaustively) {
  for (auto [p, k] : kSmallFields) {
    const Field f = Field::create(p, k);
    const Elem q = f.order();
    SCOPED_TRACE(f.name());
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (Elem b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (Elem c = 0; c < q; ++c) {
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(Field, FrobeniusIsAdditive) {
  for (auto [p, k] : kSmallFields) {
    const Field f = Field::create(p, k);
    for (Elem a = 0; a < f.order(); ++a)
      for (Elem b = 0; b < f.order(); ++b)
        ASSERT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
  }
  const Field big = Field::create(3, 9);
  SeededRng rng(17);
  for (int i = 0; i < 1000; ++i) {
    const auto a = static_cast<Elem>(rng.below(big.order()));
    const auto b = static_cast<Elem>(rng.below(big.order()));
    ASSERT_EQ(big.frobenius(big.add(a, b)), big.add(big.frobenius(a), big.frobenius(b)));
  }
}

TEST(Field, ModulusIsTheFirstIrreducibleInCodeOrder) {
  for (auto [p, k] : kSmallFields) {
    if (k == 1) continue;
    const Field f = Field::create(p, k);
    // Walk monic degree-k polynomials in code order until the oracle finds an irreducible one.
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < total; ++code) {
      oracle::Row poly(static_cast<std::size_t>(k) + 1);
      std::uint64_t c = code;
      for (int i = 0; i < k; ++i) {
        poly[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(p));
        c /= static_cast<std::uint64_t>(p);
      }
      poly[static_cast<std::size_t>(k)] = 1;
      if (!oracle::irreducible(poly, p)) continue;
      std::vector<std::uint32_t> expect(poly.begin(), poly.end());
      EXPECT_EQ(f.modulus(), expect) << f.name();
      break;
    }
  }
}

TEST(Field, DigitsRoundTrip) {
  const Field f = Field::create(5, 3);
  for (Elem a = 0; a < f.order(); ++a) EXPECT_EQ(f.from_digits(f.digits(a)), a);
  EXPECT_EQ(f.from_int(-1), f.neg(1));
}

TEST(Rng, SameSeedSameStream) {
  SeededRng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
  SeededRng z(0);
  EXPECT_NE(z.next(), 0u);
}
