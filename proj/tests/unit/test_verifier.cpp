#include <gtest/gtest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "hopfcert/verifier.hpp"

using namespace hopfcert;
using corpus::gf;

namespace {

struct S3Setup {
  GroupTable g = builtin_group("S3");
  HopfPtr h;
  Subspace unit, c3, c2, all;
  explicit S3Setup(std::uint64_t p) {
    h = group_algebra(g, gf(p));
    unit = Subspace::span(gf(p), 6, {h->algebra().unit()});
    c3 = group_subalgebra_span(g, generated_subgroup(g, {g.index_of("231")}), gf(p));
    c2 = group_subalgebra_span(g, generated_subgroup(g, {g.index_of("213")}), gf(p));
    all = Subspace::whole(gf(p), 6);
  }
};

Status status_of(const Report& r, const std::string& check) {
  const Verdict* v = r.find(check);
  return v ? v->status : Status::Note;
}

bool has_fail(const Report& r) {
  for (const auto& v : r.verdicts)
    if (v.status == Status::Fail) return true;
  return false;
}

}  // namespace

TEST(Series, ValidAndInvalidChains) {
  const S3Setup s(7);
  const auto good = series_check(s.h, {s.unit, s.c3, s.all});
  ASSERT_TRUE(good.valid()) << good.failure;
  ASSERT_EQ(good.steps.size(), 2u);
  EXPECT_EQ(good.steps[0].rank, 3u);
  EXPECT_EQ(good.steps[1].rank, 2u);
  EXPECT_TRUE(good.steps[1].normal);
  EXPECT_TRUE(good.steps[1].commutative_quotient);

  // k inside kS3: the quotient kS3 is not commutative.
  const auto direct = series_check(s.h, {s.unit, s.all});
  EXPECT_FALSE(direct.valid());
  // kC2 is not normal in kS3.
  EXPECT_FALSE(series_check(s.h, {s.unit, s.c2, s.all}).valid());
  // Endpoints.
  EXPECT_FALSE(series_check(s.h, {s.c3, s.all}).valid());
  EXPECT_FALSE(series_check(s.h, {s.unit, s.c3}).valid());

  const HopfPtr dual = dual_group_algebra(builtin_group("S3"), gf(7));
  EXPECT_TRUE(series_check(dual, {Subspace::span(gf(7), 6, {dual->algebra().unit()}), Subspace::whole(gf(7), 6)}).valid());
}

TEST(Series, RankBookkeeping) {
  const S3Setup s(7);
  const auto cert = series_check(s.h, {s.unit, s.c3, s.all});
  std::size_t product = 1;
  for (const auto& step : cert.steps) {
    EXPECT_EQ(step.rank * step.dim_lower, step.dim_upper);
    EXPECT_EQ(step.quotient_dim, step.rank);
    product *= step.rank;
  }
  EXPECT_EQ(product, 6u);
}

TEST(Frobenius, KS3OverGF7Passes) {
  const S3Setup s(7);
  const Report r = cmd_frobenius_check(s.h, {s.unit, s.c3, s.all}, {.seed = 3, .oracle = true});
  EXPECT_EQ(r.exit_code(), 0) << r.to_text();
  EXPECT_EQ(status_of(r, "dimension divides dim H"), Status::Pass);
  EXPECT_EQ(status_of(r, "oracle"), Status::Pass);
  EXPECT_EQ(r.find("dimension divides dim H")->evidence.at("dims"), (json{1, 1, 2}));
}

TEST(Frobenius, NonSemisimpleIsRejectedWithAWitness) {
  const S3Setup s(3);
  const Report r = cmd_frobenius_check(s.h, {s.unit, s.c3, s.all}, {});
  EXPECT_EQ(r.exit_code(), 1);
  const Verdict* v = r.find("semisimplicity");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->status, Status::Fail);
  EXPECT_TRUE(v->evidence.contains("nilpotent_ideal"));
}

TEST(Frobenius, InvalidSeriesFails) {
  const S3Setup s(7);
  const Report r = cmd_frobenius_check(s.h, {s.unit, s.all}, {});
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(status_of(r, "series"), Status::Fail);
}

TEST(Frobenius, CorpusInstancesWithACertifiedSeriesPass) {
  std::size_t checked = 0;
  for (const auto& inst : corpus::hopf_corpus()) {
    const Field& f = inst.hopf->field();
    const std::size_t n = inst.hopf->dim();
    const Subspace unit = Subspace::span(f, n, {inst.hopf->algebra().unit()});
    const Subspace all = Subspace::whole(f, n);
    std::vector<std::vector<Subspace>> chains = {{unit, all}};
    const auto& md = inst.hopf->metadata();
    if (md.count("group") && md.at("construct") == "group_algebra") {
      const GroupTable g = builtin_group(md.at("group"));
      const Subgroup c = commutator_subgroup(g);
      if (c.elements.size() > 1 && c.elements.size() < g.order())
        chains.push_back({unit, group_subalgebra_span(g, c, f), all});
    }
    for (const auto& chain : chains) {
      if (!series_check(inst.hopf, chain).valid()) continue;
      if (radical(inst.hopf->algebra_ptr(), 1).ideal.dim() != 0) continue;
      const Report r = cmd_frobenius_check(inst.hopf, chain, {.seed = 5});
      EXPECT_FALSE(has_fail(r)) << inst.name << "\n" << r.to_text();
      ++checked;
    }
  }
  EXPECT_GE(checked, 8u);
}

TEST(Clifford, KC3InKS3) {
  const S3Setup s(7);
  const Report r = cmd_clifford_report(s.h, s.c3, {});
  EXPECT_EQ(r.exit_code(), 0) << r.to_text();
  EXPECT_EQ(status_of(r, "normality"), Status::Pass);
  std::size_t inductions = 0;
  for (const auto& v : r.verdicts)
    if (v.check.rfind("induction of ", 0) == 0) {
      ++inductions;
      EXPECT_EQ(v.status, Status::Pass);
    }
  EXPECT_EQ(inductions, 3u);
}

TEST(Clifford, NotNormalIsAnAssumption) {
  const S3Setup s(7);
  const Report r = cmd_clifford_report(s.h, s.c2, {});
  EXPECT_EQ(status_of(r, "normality"), Status::Assumption);
  EXPECT_EQ(r.exit_code(), 3);
}

TEST(Clifford, WholeAlgebraInducesEachSimpleToItself) {
  const S3Setup s(7);
  const Report r = cmd_clifford_report(s.h, s.all, {});
  EXPECT_EQ(r.exit_code(), 0) << r.to_text();
  for (const auto& v : r.verdicts)
    if (v.check.rfind("induction of ", 0) == 0) {
      EXPECT_EQ(v.evidence.at("factors").size(), 1u);
    }
}

TEST(Clifford, NoncommutativeQuotientIsAnAssumption) {
  // K = k: H/HK^+ = kS3 has a 2-dimensional simple.
  const S3Setup s(7);
  const Report r = cmd_clifford_report(s.h, s.unit, {});
  EXPECT_EQ(status_of(r, "quotient"), Status::Assumption);
  EXPECT_EQ(r.exit_code(), 3);
}

TEST(Clifford, NonHopfSubalgebraIsInvalidInput) {
  const S3Setup s(7);
  EXPECT_THROW(cmd_clifford_report(s.h, Subspace::span(gf(7), 6, {unit_vector(6, 1)}), {}), InvalidInput);
}

TEST(LiesOver, KC3InKS3AndTrivialCases) {
  const S3Setup s(7);
  const Report r = cmd_lies_over(s.h, s.c3, {}, {});
  EXPECT_EQ(r.exit_code(), 0) << r.to_text();
  EXPECT_EQ(status_of(r, "lying over"), Status::Pass);
  EXPECT_EQ(status_of(r, "proper sums"), Status::Pass);
  EXPECT_EQ(status_of(r, "induced annihilators"), Status::Pass);
  EXPECT_EQ(cmd_lies_over(s.h, s.all, {}, {}).exit_code(), 0);
  EXPECT_EQ(cmd_lies_over(s.h, s.c2, {}, {}).exit_code(), 0);
}

TEST(LiesOver, GivenModulesMustBeSimple) {
  const S3Setup s(7);
  const Module reg = regular_module(s.h->algebra_ptr());
  EXPECT_THROW(cmd_lies_over(s.h, s.c3, {reg}, {}), InvalidInput);
  const auto chop = meataxe_chop(reg, 1);
  EXPECT_EQ(cmd_lies_over(s.h, s.c3, {chop.factors[2].module}, {}).exit_code(), 0);
}

TEST(Report, ExitCodesAndFormats) {
  Report r;
  r.command = "demo";
  EXPECT_EQ(r.exit_code(), 0);
  r.add("a", Status::Note, "n");
  EXPECT_EQ(r.exit_code(), 0);
  r.add("b", Status::Assumption, "x");
  EXPECT_EQ(r.exit_code(), 3);
  r.add("c", Status::Fail, "y");
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.to_json().at("verdicts").size(), 3u);
  EXPECT_FALSE(r.to_json().contains("seconds"));
  EXPECT_NE(r.to_text().find("exit 1"), std::string::npos);
}

TEST(Parallel, MapKeepsOrderAndRethrowsLowestIndex) {
  for (unsigned t : {1u, 2u, 8u}) {
    const auto out = parallel_map(50, t, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(out[i], i * i);
  }
  try {
    parallel_map(20, 4, [](std::size_t i) -> int {
      if (i == 7 || i == 13) throw std::runtime_error(std::to_string(i));
      return 0;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
}

TEST(Determinism, ReportsIndependentOfThreadCount) {
  const S3Setup s(7);
  const auto chain = std::vector<Subspace>{s.unit, s.c3, s.all};
  const std::string base = cmd_frobenius_check(s.h, chain, {.seed = 9, .threads = 1}).to_json().dump();
  for (unsigned t : {2u, 4u})
    EXPECT_EQ(cmd_frobenius_check(s.h, chain, {.seed = 9, .threads = t}).to_json().dump(), base);
  const std::string cl = cmd_clifford_report(s.h, s.c3, {.seed = 9, .threads = 1}).to_json().dump();
  EXPECT_EQ(cmd_clifford_report(s.h, s.c3, {.seed = 9, .threads = 4}).to_json().dump(), cl);
}

TEST(Recipes, BuildAndLoad) {
  const json recipe = {{"construct", "group_algebra"}, {"group", "S3"}, {"field", {{"p", 7}}}};
  const Built b = build_recipe(recipe);
  ASSERT_TRUE(b.hopf);
  EXPECT_EQ(b.hopf->dim(), 6u);
  EXPECT_EQ(instance_name(*b.hopf), "group_algebra(S3)");
  EXPECT_EQ(build_recipe(recipe, gf(5)).hopf->field(), gf(5));
  EXPECT_EQ(load_hopf(b.object)->antipode_matrix(), b.hopf->antipode_matrix());
  EXPECT_THROW(build_recipe(json{{"construct", "tensor"}}), InvalidInput);
  const json dual = {{"construct", "dual"}, {"of", recipe}};
  EXPECT_EQ(build_recipe(dual).hopf->dim(), 6u);
  const json smash = {{"construct", "smash_algebra"}, {"group", "S3"}, {"subgroup", {{"generators", {"231"}}}},
                      {"field", {{"p", 7}}}};
  const Built sm = build_recipe(smash);
  EXPECT_FALSE(sm.hopf);
  EXPECT_EQ(sm.algebra->dim(), 18u);
  EXPECT_THROW(load_hopf(smash), InvalidInput);
}
