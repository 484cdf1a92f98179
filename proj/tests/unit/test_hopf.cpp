#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hopfcert/rng.hpp"
#include "oracles.hpp"

using namespace hopfcert;
using corpus::gf;

namespace {

HopfPtr kS3(std::uint64_t p) { return group_algebra(builtin_group("S3"), gf(p)); }

Subspace c3_span(const Field& f) {
  const GroupTable g = builtin_group("S3");
  return group_subalgebra_span(g, generated_subgroup(g, {g.index_of("231")}), f);
}

bool cocommutative(const Hopf& h) {
  const std::size_t n = h.dim();
  for (std::size_t j = 0; j < n; ++j) {
    const Vec d = tensor_dense(h.coproduct(j), n, h.field());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (d[a * n + b] != d[b * n + a]) return false;
  }
  return true;
}

// theta_chi straight from the coproduct: column j is sum chi(b_a) coeff b_b over Delta(b_j).
Matrix theta_oracle(const Character& chi) {
  const Hopf& h = chi.hopf();
  const Field& f = h.field();
  Matrix m(f, h.dim(), h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j)
    for (const auto& t : h.coproduct(j)) m(t.right, j) = f.add(m(t.right, j), f.mul(t.coeff, chi.row()[t.left]));
  return m;
}

}  // namespace

TEST(HopfAxioms, GroupAlgebraAndDualPass) {
  EXPECT_TRUE(check_hopf_axioms(group_algebra(builtin_group("C2"), gf(3))->data()).ok);
  EXPECT_TRUE(check_hopf_axioms(dual_group_algebra(builtin_group("S3"), gf(2))->data()).ok);
}

TEST(HopfAxioms, CorruptedAntipodeFails) {
  HopfData d = group_algebra(builtin_group("C2"), gf(3))->data();
  d.antipode = {{1, 0}, {0, 1}};
  EXPECT_TRUE(check_hopf_axioms(d).ok) << "S = id is the correct antipode of kC2";
  d.antipode = {{1, 0}, {0, 2}};
  const AxiomReport r = check_hopf_axioms(d);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.axiom.find("antipode"), std::string::npos) << r.axiom;
  EXPECT_THROW(Hopf::validate(d), AxiomFailure);
}

TEST(HopfAxioms, CorruptedCoproductFails) {
  HopfData d = group_algebra(builtin_group("C3"), gf(2))->data();
  d.coproduct[1][0] = 1;
  EXPECT_FALSE(check_hopf_axioms(d).ok);
  d = group_algebra(builtin_group("C3"), gf(2))->data();
  d.counit[2] = 0;
  EXPECT_FALSE(check_hopf_axioms(d).ok);
}

TEST(HopfSubalgebra, Examples) {
  const HopfPtr h = kS3(7);
  EXPECT_TRUE(is_hopf_subalgebra(h, Subspace::span(gf(7), 6, {h->algebra().unit()})).ok);
  EXPECT_TRUE(is_hopf_subalgebra(h, c3_span(gf(7))).ok);
  SeededRng rng(21);
  int rejected = 0;
  for (int t = 0; t < 50; ++t) {
    Vec a(6), b(6);
    for (auto& e : a) e = static_cast<Elem>(rng.below(7));
    for (auto& e : b) e = static_cast<Elem>(rng.below(7));
    const Subspace s = Subspace::span(gf(7), 6, {a, b});
    bool grouplike = false;
    for (std::size_t g = 0; g < 6; ++g) grouplike = grouplike || s.contains(unit_vector(6, g));
    if (grouplike || s.dim() != 2) continue;
    EXPECT_FALSE(is_hopf_subalgebra(h, s).ok);
    ++rejected;
  }
  EXPECT_GT(rejected, 40);
}

TEST(Normality, Examples) {
  const HopfPtr h = kS3(7);
  const GroupTable g = builtin_group("S3");
  EXPECT_TRUE(is_normal(hopf_subalgebra(h, Subspace::span(gf(7), 6, {h->algebra().unit()}))));
  EXPECT_TRUE(is_normal(hopf_subalgebra(h, c3_span(gf(7)))));
  const Subspace c2 = group_subalgebra_span(g, generated_subgroup(g, {g.index_of("213")}), gf(7));
  EXPECT_FALSE(is_normal(hopf_subalgebra(h, c2)));
  EXPECT_THROW(hopf_ideal_HKplus(hopf_subalgebra(h, c2)), NotNormal);
}

TEST(HopfIdeal, HKplusExamples) {
  const HopfPtr h = kS3(7);
  EXPECT_EQ(hopf_ideal_HKplus(hopf_subalgebra(h, Subspace::span(gf(7), 6, {h->algebra().unit()}))).dim(), 0u);
  EXPECT_EQ(hopf_ideal_HKplus(hopf_subalgebra(h, Subspace::whole(gf(7), 6))).dim(), 5u);
  const Ideal i = hopf_ideal_HKplus(hopf_subalgebra(h, c3_span(gf(7))));
  EXPECT_EQ(i.dim(), 4u);
  EXPECT_TRUE(check_hopf_ideal(*h, i).ok);
  EXPECT_TRUE(commutative_mod_ideal(h->algebra(), i.space()));
  EXPECT_FALSE(commutative_mod_ideal(h->algebra(), Subspace(gf(7), 6)));
}

TEST(HopfIdeal, QuotientsOfKS3) {
  const HopfPtr h = kS3(7);
  EXPECT_EQ(quotient_hopf(h, Ideal::validate(h->algebra_ptr(), Subspace(gf(7), 6))).hopf->dim(), 6u);
  const Ideal aug = hopf_ideal_HKplus(hopf_subalgebra(h, Subspace::whole(gf(7), 6)));
  EXPECT_EQ(quotient_hopf(h, aug).hopf->dim(), 1u);
  EXPECT_THROW(quotient_hopf(h, Ideal::validate(h->algebra_ptr(), Subspace::whole(gf(7), 6))), InvalidInput);

  const QuotientHopf q = quotient_hopf(h, hopf_ideal_HKplus(hopf_subalgebra(h, c3_span(gf(7)))));
  ASSERT_EQ(q.hopf->dim(), 2u);
  // Group-likes of the quotient by enumeration; they must form C2.
  std::vector<Vec> grouplikes;
  const Field f = gf(7);
  for (Elem a = 0; a < 7; ++a)
    for (Elem b = 0; b < 7; ++b) {
      const Vec x = {a, b};
      if (q.hopf->counit_of(x) != 1) continue;
      const Vec d = tensor_dense(q.hopf->coproduct_of(x), 2, f);
      bool ok = true;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ok = ok && d[i * 2 + j] == f.mul(x[i], x[j]);
      if (ok) grouplikes.push_back(x);
    }
  ASSERT_EQ(grouplikes.size(), 2u);
  const Algebra& qa = q.hopf->algebra();
  const Vec one = qa.unit();
  const Vec g = grouplikes[0] == one ? grouplikes[1] : grouplikes[0];
  EXPECT_EQ(qa.multiply(g, g), one);
  EXPECT_NE(g, one);
}

TEST(Characters, CountsMatchGroupHomomorphisms) {
  for (const auto& name : {"C2", "C3", "C4", "S3", "D4", "A4", "Q8"})
    for (std::uint64_t p : {2, 3, 5, 7, 13}) {
      const GroupTable g = builtin_group(name);
      const HopfPtr h = group_algebra(g, gf(p));
      const auto chars = characters(h, 4);
      auto homs = oracle::group_homs(g, static_cast<std::int64_t>(p));
      std::vector<Vec> rows, expect;
      for (const auto& c : chars) rows.push_back(c.row());
      for (const auto& hm : homs) expect.emplace_back(hm.begin(), hm.end());
      std::sort(rows.begin(), rows.end());
      std::sort(expect.begin(), expect.end());
      EXPECT_EQ(rows, expect) << name << " GF(" << p << ")";
    }
}

TEST(Characters, DualGroupAlgebraHasEvaluations) {
  const GroupTable g = builtin_group("S3");
  const HopfPtr h = dual_group_algebra(g, gf(2));
  const auto chars = characters(h, 1);
  ASSERT_EQ(chars.size(), 6u);
  for (std::size_t x = 0; x < 6; ++x)
    EXPECT_NE(std::find_if(chars.begin(), chars.end(), [&](const Character& c) { return c.row() == unit_vector(6, x); }),
              chars.end());
}

TEST(Characters, BaseFieldHasOnlyTheCounit) {
  const HopfPtr h = group_algebra(builtin_group("C1"), gf(5));
  const auto chars = characters(h, 1);
  ASSERT_EQ(chars.size(), 1u);
  EXPECT_EQ(chars[0], counit_character(h));
}

TEST(Characters, ConvolutionInverses) {
  const HopfPtr h = kS3(7);
  const Character eps = counit_character(h);
  EXPECT_EQ(convolution_inverse(eps), eps);
  for (const auto& chi : characters(h, 2)) {
    EXPECT_EQ(convolution_inverse(chi), chi);  // trivial and sign have order <= 2
    EXPECT_EQ(convolution(chi, convolution_inverse(chi)), eps);
  }
  EXPECT_THROW(Character::validate(h, Vec{1, 2, 3, 4, 5, 6}), InvalidInput);

  const GroupTable c3 = builtin_group("C3");
  const HopfPtr k = group_algebra(c3, gf(7));
  for (const auto& chi : characters(k, 2)) {
    const Vec inv = convolution_inverse(chi).row();
    for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(inv[x], chi.row()[c3.inverse(x)]);
  }
}

TEST(Twist, ThetaLawsOnKS3) {
  const HopfPtr h = kS3(7);
  const Character eps = counit_character(h);
  EXPECT_EQ(theta_automorphism(eps).matrix, Matrix::identity(gf(7), 6));
  const auto chars = characters(h, 3);
  for (const auto& chi : chars) {
    const Matrix t = theta_automorphism(chi).matrix;
    EXPECT_EQ(t, theta_oracle(chi));
    for (std::size_t g = 0; g < 6; ++g)
      for (std::size_t r = 0; r < 6; ++r) EXPECT_EQ(t(r, g), r == g ? chi.row()[g] : 0u);
    for (const auto& psi : chars)
      EXPECT_EQ(t * theta_automorphism(psi).matrix, theta_automorphism(convolution(psi, chi)).matrix);
  }
}

TEST(Twist, ModuleTwists) {
  const HopfPtr h = kS3(7);
  const auto series = meataxe_chop(regular_module(h->algebra_ptr()), 1);
  const Module& two = series.factors.back().module;
  EXPECT_EQ(twist_module(counit_character(h), two), two);
  std::vector<Matrix> triv(6, Matrix::identity(gf(7), 1));
  const Module trivial = Module::validate(h->algebra_ptr(), triv);
  for (const auto& chi : characters(h, 1)) {
    EXPECT_EQ(twist_module(chi, trivial), character_module(chi));
    EXPECT_TRUE(module_iso(twist_module(chi, two), two).has_value());
    const AlgebraMorphism th = theta_automorphism(chi);
    EXPECT_EQ(twist_module(chi, two), twist_by_automorphism(th, two));
  }
}

TEST(Corpus, AntipodeBijectiveAndInvolutive) {
  for (const auto& inst : corpus::hopf_corpus()) {
    const Matrix& s = inst.hopf->antipode_matrix();
    EXPECT_TRUE(inverse(s).has_value()) << inst.name;
    if (inst.hopf->algebra().is_commutative() || cocommutative(*inst.hopf)) {
      EXPECT_EQ(s * s, Matrix::identity(inst.hopf->field(), inst.hopf->dim())) << inst.name;
    }
  }
}

TEST(Corpus, NormalQuotientRankBookkeeping) {
  for (const auto& name : {"C2", "C4", "S3", "D4", "A4"})
    for (std::uint64_t p : {2, 3, 7}) {
      const GroupTable g = builtin_group(name);
      const HopfPtr kg = group_algebra(g, gf(p));
      const HopfPtr dual = dual_group_algebra(g, gf(p));
      for (const auto& s : corpus::all_subgroups(g)) {
        if (!is_normal_subgroup(g, s)) continue;
        for (const auto& [h, span] : {std::pair{kg, group_subalgebra_span(g, s, gf(p))},
                                      std::pair{dual, corpus::coset_indicator_span(g, s, gf(p))}}) {
          const HopfSubalgebra k = hopf_subalgebra(h, span);
          ASSERT_TRUE(is_normal(k));
          const Ideal i = hopf_ideal_HKplus(k);
          const QuotientHopf q = quotient_hopf(h, i);
          EXPECT_EQ(q.hopf->dim() * k.dim(), h->dim()) << name;
          EXPECT_TRUE(check_hopf_axioms(q.hopf->data()).ok);
        }
      }
    }
}
