#include <gtest/gtest.h>

#include <cmath>

#include "hopfcert/extension.hpp"
#include "hopfcert/matrix.hpp"
#include "hopfcert/rng.hpp"
#include "hopfcert/subspace.hpp"
#include "oracles.hpp"

using namespace hopfcert;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, SeededRng& rng, unsigned zero_bias = 0) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = rng.below(zero_bias + 1) == 0 ? static_cast<Elem>(rng.below(f.order())) : 0;
  return m;
}

oracle::Mat rows_of(const Subspace& s) {
  oracle::Mat out;
  for (const auto& b : s.basis()) out.emplace_back(b.begin(), b.end());
  return out;
}

}  // namespace

TEST(Kernel, ZeroAndIdentity) {
  const Field f = Field::create(5, 1);
  EXPECT_EQ(kernel(Matrix(f, 3, 3)).size(), 3u);
  EXPECT_TRUE(kernel(Matrix::identity(f, 4)).empty());
}

TEST(Kernel, RandomMatricesAgreeWithOracle) {
  SeededRng rng(1);
  for (std::int64_t p : {2, 3, 7}) {
    const Field f = Field::create(static_cast<std::uint64_t>(p), 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
      const Matrix m = random_matrix(f, r, c, rng, trial % 3);
      const auto ker = kernel(m);
      const auto om = oracle::to_mat(m);
      EXPECT_EQ(ker.size(), c - oracle::rank(om, p));
      EXPECT_EQ(rank(m), oracle::rank(om, p));
      for (const auto& v : ker) EXPECT_TRUE(is_zero(mat_vec(m, v)));
      // Entry-wise RREF agreement.
      Matrix red = m;
      rref_in_place(red);
      const auto oref = oracle::rref(om, p);
      for (std::size_t i = 0; i < oref.size(); ++i)
        for (std::size_t j = 0; j < c; ++j) ASSERT_EQ(static_cast<std::int64_t>(red(i, j)), oref[i][j]);
    }
  }
}

TEST(Kernel, ThreeByFiveRankNullity) {
  SeededRng rng(35);
  const Field f = Field::create(3, 1);
  const Matrix m = random_matrix(f, 3, 5, rng);
  EXPECT_EQ(kernel(m).size(), 5 - oracle::rank(oracle::to_mat(m), 3));
}

TEST(Kernel, ExtensionFieldRankNullity) {
  SeededRng rng(9);
  const Field f = Field::create(2, 3);
  for (int t = 0; t < 100; ++t) {
    const Matrix m = random_matrix(f, 4, 5, rng, t % 2);
    const auto ker = kernel(m);
    EXPECT_EQ(ker.size() + rank(m), 5u);
    for (const auto& v : ker) EXPECT_TRUE(is_zero(mat_vec(m, v)));
  }
}

TEST(Inverse, ProductIsIdentity) {
  SeededRng rng(3);
  const Field f = Field::create(3, 2);
  int inverted = 0;
  for (int t = 0; t < 50; ++t) {
    const Matrix m = random_matrix(f, 4, 4, rng);
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), rank(m) == 4);
    if (inv) {
      ++inverted;
      EXPECT_EQ(m * *inv, Matrix::identity(f, 4));
      EXPECT_EQ(*inv * m, Matrix::identity(f, 4));
    }
  }
  EXPECT_GT(inverted, 0);
}

TEST(Solve, SolutionsSatisfyTheSystem) {
  SeededRng rng(4);
  const Field f = Field::create(7, 1);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = random_matrix(f, 4, 3, rng, 1);
    Vec x(3);
    for (auto& e : x) e = static_cast<Elem>(rng.below(7));
    const Vec b = mat_vec(m, x);
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(mat_vec(m, *sol), b);
  }
}

TEST(Subspace, IntersectionMatchesZassenhaus) {
  SeededRng rng(5);
  for (std::int64_t p : {2, 3, 5}) {
    const Field f = Field::create(static_cast<std::uint64_t>(p), 1);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 2 + rng.below(5);
      auto random_space = [&] {
        std::vector<Vec> vs;
        const std::size_t k = rng.below(n + 1);
        for (std::size_t i = 0; i < k; ++i) {
          Vec v(n);
          for (auto& e : v) e = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(p)));
          vs.push_back(v);
        }
        return Subspace::span(f, n, vs);
      };
      const Subspace u = random_space(), w = random_space();
      const Subspace cap = u.intersect(w), sum = u.sum(w);
      EXPECT_EQ(rows_of(cap), oracle::zassenhaus_intersection(rows_of(u), rows_of(w), p, n));
      EXPECT_EQ(rows_of(sum), oracle::sum_space(rows_of(u), rows_of(w), p));
      EXPECT_EQ(sum.dim() + cap.dim(), u.dim() + w.dim());
      EXPECT_TRUE(u.contains(cap));
      EXPECT_TRUE(sum.contains(w));
    }
  }
}

TEST(Subspace, CoordinatesAndQuotient) {
  const Field f = Field::create(5, 1);
  const Subspace s = Subspace::span(f, 4, {{1, 2, 0, 0}, {0, 0, 1, 3}});
  const Vec v = {2, 4, 3, 4};
  ASSERT_TRUE(s.contains(v));
  EXPECT_EQ(s.combine(s.coordinates(v)), v);
  const QuotientMap q(s);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_TRUE(is_zero(q.project(v)));
  const Vec w = {0, 1, 0, 0};
  EXPECT_EQ(q.project(q.lift(q.project(w))), q.project(w));
}

TEST(Extension, EmbeddingIsAFieldHomomorphism) {
  for (auto [p, k, m] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {7, 1, 2}, {2, 1, 3}}) {
    const Field src = Field::create(p, k);
    const Field dst = extension_of(src, static_cast<std::uint32_t>(m));
    EXPECT_EQ(dst.order(), static_cast<std::uint32_t>(std::pow(src.order(), m)));
    const FieldEmbedding e(src, dst);
    for (Elem a = 0; a < src.order(); ++a)
      for (Elem b = 0; b < src.order(); ++b) {
        ASSERT_EQ(e(src.add(a, b)), dst.add(e(a), e(b)));
        ASSERT_EQ(e(src.mul(a, b)), dst.mul(e(a), e(b)));
      }
  }
  EXPECT_THROW(FieldEmbedding(Field::create(2, 2), Field::create(2, 3)), InvalidInput);
}
