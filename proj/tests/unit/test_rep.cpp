#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hopfcert/rng.hpp"
#include "oracles.hpp"

using namespace hopfcert;
using corpus::gf;

namespace {

Module regular(const std::string& group, std::uint64_t p) {
  return regular_module(group_algebra(builtin_group(group), gf(p))->algebra_ptr());
}

std::vector<std::size_t> chop_dims(const Module& m, std::uint64_t seed = 1) {
  auto d = meataxe_chop(m, seed).dims_with_multiplicity();
  std::sort(d.begin(), d.end());
  return d;
}

Module conjugate_by(const Module& m, const Matrix& p, const Matrix& p_inv) {
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) act.push_back(p_inv * a * p);
  return Module::validate(m.algebra_ptr(), act);
}

}  // namespace

TEST(Spin, Examples) {
  const Module reg = regular("C2", 3);
  EXPECT_TRUE(spin(reg, Vec{0, 0}).is_zero());
  EXPECT_TRUE(spin(reg, reg.algebra().unit()).is_whole());
  const auto series = meataxe_chop(regular("S3", 7), 1);
  const Module& two = series.factors.back().module;
  EXPECT_TRUE(spin(two, Vec{1, 0}).is_whole());
  EXPECT_TRUE(spin(two, Vec{3, 5}).is_whole());
}

TEST(Chop, SmallExamples) {
  const auto c2_3 = meataxe_chop(regular("C2", 3), 1);
  ASSERT_EQ(c2_3.factors.size(), 2u);
  EXPECT_EQ(c2_3.factors[0].dim(), 1u);
  EXPECT_EQ(c2_3.factors[1].dim(), 1u);
  EXPECT_FALSE(module_iso(c2_3.factors[0].module, c2_3.factors[1].module).has_value());
  EXPECT_EQ(c2_3.factors[0].label, "1a");
  EXPECT_EQ(c2_3.factors[1].label, "1b");

  const auto c2_2 = meataxe_chop(regular("C2", 2), 1);
  ASSERT_EQ(c2_2.factors.size(), 1u);
  EXPECT_EQ(c2_2.factors[0].multiplicity, 2u);
  EXPECT_EQ(oracle::lattice_factor_dims(oracle::to_mats(regular("C2", 2).actions()), 2, 2),
            (std::vector<std::size_t>{1, 1}));

  const auto s3 = meataxe_chop(regular("S3", 7), 1);
  std::vector<std::size_t> dims, mults;
  for (const auto& f : s3.factors) {
    dims.push_back(f.dim());
    mults.push_back(f.multiplicity);
  }
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(mults, (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(oracle::cover_factor_dims(oracle::to_mats(regular("S3", 7).actions()), 7, 6),
            (std::vector<std::size_t>{1, 1, 2, 2}));

  const auto simple = meataxe_chop(s3.factors[2].module, 9);
  ASSERT_EQ(simple.factors.size(), 1u);
  EXPECT_EQ(simple.factors[0].multiplicity, 1u);
}

TEST(Irreducibility, WitnessesReplay) {
  const Module reg = regular("C2", 3);
  const auto w = irreducibility_witness(reg, 4);
  ASSERT_FALSE(w.irreducible());
  ASSERT_TRUE(w.submodule.has_value());
  EXPECT_TRUE(is_submodule(reg, *w.submodule));
  EXPECT_GT(w.submodule->dim(), 0u);
  EXPECT_LT(w.submodule->dim(), 2u);
  EXPECT_TRUE(verify_witness(reg, w));

  const auto s3 = meataxe_chop(regular("S3", 7), 1);
  const Module& two = s3.factors[2].module;
  EXPECT_TRUE(is_irreducible(two, 5));
  EXPECT_TRUE(is_irreducible(s3.factors[0].module, 5));
  // Only 0 and V: none of the 8 lines is invariant.
  EXPECT_EQ(oracle::submodule_lattice(oracle::to_mats(two.actions()), 7, 2).size(), 2u);
  for (const auto& f : s3.factors) EXPECT_TRUE(verify_witness(f.module, f.witness));

  // A tampered certificate is rejected.
  auto bad = s3.factors[2].witness;
  if (bad.kind == IrreducibilityWitness::Kind::Norton) {
    bad.null_vector = Vec(2, 0);
    EXPECT_FALSE(verify_witness(two, bad));
  }
}

TEST(Hom, IsomorphismsAndEndomorphisms) {
  const HopfPtr h = group_algebra(builtin_group("S3"), gf(7));
  const auto s3 = meataxe_chop(regular_module(h->algebra_ptr()), 1);
  const Module& triv = s3.factors[0].module;
  const Module& sign = s3.factors[1].module;
  const Module& two = s3.factors[2].module;
  EXPECT_TRUE(module_iso(two, two).has_value());
  EXPECT_FALSE(module_iso(triv, sign).has_value());
  const auto chars = characters(h, 1);
  for (const auto& chi : chars) {
    const Module tw = twist_module(chi, two);
    const auto t = module_iso(tw, two);
    ASSERT_TRUE(t.has_value());
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(*t * tw.action(i), two.action(i) * *t);
    EXPECT_TRUE(inverse(*t).has_value());
  }
  EXPECT_EQ(endomorphism_dim(triv), 1u);
  EXPECT_EQ(endomorphism_dim(direct_sum(two, two)), 4u);

  const auto c3 = meataxe_chop(regular("C3", 2), 1);
  ASSERT_EQ(c3.factors.size(), 2u);
  EXPECT_EQ(c3.factors[1].dim(), 2u);
  EXPECT_EQ(endomorphism_dim(c3.factors[1].module), 2u);
}

TEST(Hom, CanonicalFormIsAnIsomorphismInvariant) {
  const auto s3 = meataxe_chop(regular("S3", 7), 1);
  const Module& two = s3.factors[2].module;
  const Field f = gf(7);
  SeededRng rng(6);
  for (int t = 0; t < 20; ++t) {
    Matrix p(f, 2, 2);
    std::optional<Matrix> p_inv;
    do {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) p(i, j) = static_cast<Elem>(rng.below(7));
      p_inv = inverse(p);
    } while (!p_inv);
    const Module other = conjugate_by(two, p, *p_inv);
    EXPECT_EQ(canonical_form(other), canonical_form(two));
  }
}

TEST(Splitting, Examples) {
  EXPECT_EQ(splitting_extend(group_algebra(builtin_group("S3"), gf(7))->algebra_ptr(), 1).degree, 1u);
  const Splitting c3 = splitting_extend(group_algebra(builtin_group("C3"), gf(2))->algebra_ptr(), 1);
  EXPECT_EQ(c3.degree, 2u);
  EXPECT_EQ(c3.field.order(), 4u);
  ASSERT_EQ(c3.regular.factors.size(), 3u);
  for (const auto& f : c3.regular.factors) EXPECT_EQ(f.dim(), 1u);
  const Splitting c4 = splitting_extend(group_algebra(builtin_group("C4"), gf(7))->algebra_ptr(), 1);
  EXPECT_EQ(c4.degree, 2u);
  EXPECT_EQ(c4.field.order(), 49u);
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(group_algebra(builtin_group("C1"), gf(3))->algebra_ptr(), 1).ideal.dim(), 0u);
  const Radical c2 = radical(group_algebra(builtin_group("C2"), gf(2))->algebra_ptr(), 1);
  EXPECT_EQ(c2.ideal.space(), Subspace::span(gf(2), 2, {{1, 1}}));
  EXPECT_EQ(c2.nilpotency_index, 2u);
  // Oracle: the nilpotent elements of kC2 over GF(2) are 0 and 1 + g.
  const AlgebraPtr a = group_algebra(builtin_group("C2"), gf(2))->algebra_ptr();
  std::vector<Vec> nilpotent;
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      if (is_zero(a->multiply({x, y}, {x, y}))) nilpotent.push_back({x, y});
  EXPECT_EQ(nilpotent.size(), 2u);
  const Radical s3 = radical(group_algebra(builtin_group("S3"), gf(3))->algebra_ptr(), 1);
  EXPECT_GT(s3.ideal.dim(), 0u);
  EXPECT_GT(s3.nilpotency_index, 1u);
}

TEST(SimpleDimensions, Examples) {
  EXPECT_EQ(simple_dimensions(group_algebra(builtin_group("C1"), gf(5))->algebra_ptr(), 1).dims,
            (std::vector<std::size_t>{1}));
  EXPECT_EQ(simple_dimensions(group_algebra(builtin_group("S3"), gf(7))->algebra_ptr(), 1).dims,
            (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(simple_dimensions(dual_group_algebra(builtin_group("S3"), gf(2))->algebra_ptr(), 1).dims,
            (std::vector<std::size_t>(6, 1)));
}

TEST(Chop, AgreesWithLatticeOracleOnSmallModules) {
  const auto modules = corpus::small_modules({"C2", "C3", "C4", "S3"}, {gf(2), gf(3)}, 4, 7);
  ASSERT_GE(modules.size(), 30u);
  for (const auto& m : modules) {
    const auto oracle_dims = oracle::lattice_factor_dims(oracle::to_mats(m.module.actions()),
                                                         m.module.field().characteristic(), m.module.dim());
    EXPECT_EQ(chop_dims(m.module), oracle_dims) << m.name;
    if (m.module.dim() <= 3) {
      EXPECT_EQ(submodule_lattice(m.module).size(),
                oracle::submodule_lattice(oracle::to_mats(m.module.actions()), m.module.field().characteristic(),
                                          m.module.dim())
                    .size())
          << m.name;
    }
  }
}

TEST(Chop, DeterministicAndDimensionConserving) {
  for (const auto& inst : corpus::hopf_corpus()) {
    const Module reg = regular_module(inst.hopf->algebra_ptr());
    const auto a = meataxe_chop(reg, 77), b = meataxe_chop(reg, 77), c = meataxe_chop(reg, 78);
    EXPECT_EQ(a.total_dim(), reg.dim());
    ASSERT_EQ(a.factors.size(), b.factors.size());
    ASSERT_EQ(a.factors.size(), c.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      EXPECT_EQ(a.factors[i].module, b.factors[i].module);
      EXPECT_EQ(a.factors[i].witness.element, b.factors[i].witness.element);
      // Canonical forms make the factor list independent of the seed.
      EXPECT_EQ(a.factors[i].module, c.factors[i].module) << inst.name;
      EXPECT_EQ(a.factors[i].multiplicity, c.factors[i].multiplicity);
      EXPECT_TRUE(verify_witness(a.factors[i].module, a.factors[i].witness));
    }
  }
}

TEST(Splitting, SemisimpleDimensionLaw) {
  for (const auto& inst : corpus::hopf_corpus()) {
    const AlgebraPtr a = inst.hopf->algebra_ptr();
    if (radical(a, 1).ideal.dim() != 0) continue;
    const SimpleDimensions sd = simple_dimensions(a, 1);
    std::size_t total = 0;
    for (std::size_t i = 0; i < sd.dims.size(); ++i) {
      EXPECT_EQ(sd.regular_multiplicities[i], sd.dims[i]) << inst.name;
      total += sd.dims[i] * sd.dims[i];
    }
    EXPECT_EQ(total, a->dim()) << inst.name;
  }
}

TEST(Twist, ChopCommutesWithTwisting) {
  for (const auto& inst : corpus::hopf_corpus()) {
    const Module reg = regular_module(inst.hopf->algebra_ptr());
    const auto base = meataxe_chop(reg, 1);
    for (const auto& chi : characters(inst.hopf, 1)) {
      const auto twisted = meataxe_chop(twist_module(chi, reg), 1);
      ASSERT_EQ(twisted.factors.size(), base.factors.size()) << inst.name;
      for (const auto& f : base.factors) {
        const Module tf = twist_module(chi, f.module);
        EXPECT_EQ(tf.dim(), f.dim());
        bool found = false;
        for (const auto& g : twisted.factors)
          found = found || (g.dim() == tf.dim() && g.multiplicity == f.multiplicity && module_iso(g.module, tf));
        EXPECT_TRUE(found) << inst.name;
      }
    }
  }
}

TEST(Radical, MaschkeOnSmallFamily) {
  for (const auto& name : {"C2", "C3", "S3"})
    for (std::uint64_t p : {2, 3, 5}) {
      const GroupTable g = builtin_group(name);
      const bool divides = g.order() % p == 0;
      EXPECT_EQ(radical(group_algebra(g, gf(p))->algebra_ptr(), 1).ideal.dim() != 0, divides) << name << p;
      EXPECT_EQ(radical(dual_group_algebra(g, gf(p))->algebra_ptr(), 1).ideal.dim(), 0u);
    }
}
