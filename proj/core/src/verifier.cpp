#include "hopfcert/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hopfcert/constructors.hpp"
#include "hopfcert/error.hpp"
#include "hopfcert/io.hpp"

namespace hopfcert {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Assumption: return "assumption";
    case Status::Note: return "note";
  }
  return "?";
}

Verdict& Report::add(std::string check, Status status, std::string summary, json evidence) {
  verdicts.push_back({std::move(check), status, std::move(summary), std::move(evidence)});
  return verdicts.back();
}

int Report::exit_code() const {
  bool assumption = false;
  for (const auto& v : verdicts) {
    if (v.status == Status::Fail) return 1;
    if (v.status == Status::Assumption) assumption = true;
  }
  return assumption ? 3 : 0;
}

const Verdict* Report::find(const std::string& check) const {
  for (const auto& v : verdicts)
    if (v.check == check) return &v;
  return nullptr;
}

json Report::to_json() const {
  json vs = json::array();
  for (const auto& v : verdicts)
    vs.push_back({{"check", v.check}, {"status", to_string(v.status)}, {"summary", v.summary}, {"evidence", v.evidence}});
  json out = {{"command", command}, {"instance", instance}, {"field", field},
              {"seed", seed},       {"verdicts", vs},       {"exit_code", exit_code()}};
  if (!artifact.is_null()) out["artifact"] = artifact;
  if (seconds) out["seconds"] = *seconds;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << "  instance=" << instance << "  field=" << field << "  seed=" << seed << "\n";
  for (const auto& v : verdicts) {
    std::string tag = to_string(v.status);
    tag.resize(11, ' ');
    os << "  " << tag << v.check << ": " << v.summary << "\n";
  }
  if (seconds) os << "  time " << *seconds << " s\n";
  os << "exit " << exit_code() << "\n";
  return os.str();
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

json subspace_vectors(const Subspace& s) { return io::subspace_to_json(s)["vectors"]; }

json factor_summary(const CompositionSeries& cs) {
  json out = json::array();
  for (const auto& f : cs.factors) out.push_back({{"label", f.label}, {"dim", f.dim()}, {"multiplicity", f.multiplicity}});
  return out;
}

// Index of the factor of `pool` isomorphic to m.
std::optional<std::size_t> find_iso(const std::vector<CompositionFactor>& pool, const Module& m) {
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (pool[i].dim() == m.dim() && module_iso(pool[i].module, m)) return i;
  return std::nullopt;
}

struct Extension {
  std::uint32_t degree = 1;
  std::optional<FieldEmbedding> embedding;
  Field field;
};

// Smallest common splitting extension of several algebras over one field.
Extension common_splitting(const std::vector<AlgebraPtr>& algebras, const VerifyOptions& opt) {
  const auto degrees = parallel_map(algebras.size(), opt.threads, [&](std::size_t i) {
    return splitting_extend(algebras[i], task_seed(opt.seed, i)).degree;
  });
  Extension e;
  for (auto d : degrees) e.degree = std::lcm(e.degree, d);
  const Field& base = algebras.front()->field();
  e.field = e.degree == 1 ? base : extension_of(base, e.degree);
  if (e.degree > 1) e.embedding.emplace(base, e.field);
  return e;
}

HopfPtr extend_if(const HopfPtr& h, const Extension& e) { return e.embedding ? extend_hopf(*h, *e.embedding) : h; }
Subspace extend_if(const Subspace& s, const Extension& e) { return e.embedding ? extend_subspace(s, *e.embedding) : s; }

Report start(std::string command, const Hopf& h, const VerifyOptions& opt) {
  Report r;
  r.command = std::move(command);
  r.instance = instance_name(h);
  r.field = h.field().name();
  r.seed = opt.seed;
  return r;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("recipe is missing '") + key + "'");
  return j.at(key);
}

}  // namespace

std::string instance_name(const Hopf& h) {
  const auto& md = h.metadata();
  std::string name = md.contains("construct") ? md.at("construct") : "hopf";
  if (md.contains("group")) name += "(" + md.at("group") + ")";
  if (md.contains("name")) name = md.at("name");
  return name;
}

Built build_recipe(const json& recipe, const std::optional<Field>& field_override) {
  const std::string construct = require(recipe, "construct").get<std::string>();
  Built b;
  if (construct == "dual") {
    Built inner = build_recipe(require(recipe, "of"), field_override);
    if (!inner.hopf) throw InvalidInput("dual needs a Hopf algebra");
    b.hopf = dual_hopf(*inner.hopf);
  } else {
    const Field field = field_override ? *field_override : io::field_from_json(require(recipe, "field"));
    if (construct == "group_algebra" || construct == "dual_group_algebra") {
      const GroupTable g = io::group_from_json(require(recipe, "group"));
      b.hopf = construct == "group_algebra" ? group_algebra(g, field) : dual_group_algebra(g, field);
    } else if (construct == "bicrossproduct") {
      const GroupTable g = io::group_from_json(require(recipe, "group"));
      const Subgroup f = io::subgroup_from_json(g, require(recipe, "F"));
      const Subgroup q = io::subgroup_from_json(g, require(recipe, "Q"));
      b.hopf = bicrossproduct(matched_pair_from_factorization(g, f, q), field);
    } else if (construct == "smash_algebra") {
      const GroupTable g = io::group_from_json(require(recipe, "group"));
      const Subgroup x = io::subgroup_from_json(g, require(recipe, "subgroup"));
      const ActionData act = translation_action(g, x, field);
      if (recipe.contains("coalgebra")) {
        const auto& c = recipe.at("coalgebra");
        const std::size_t n = act.acted->dim() * act.acting->dim();
        std::vector<Vec> cop, anti;
        for (const auto& row : require(c, "coproduct")) cop.push_back(io::vec_from_json(field, row, n * n));
        for (const auto& row : require(c, "antipode")) anti.push_back(io::vec_from_json(field, row, n));
        b.hopf = smash_hopf(act, std::move(cop), io::vec_from_json(field, require(c, "counit"), n), std::move(anti));
      } else {
        b.algebra = smash_algebra(act);
      }
    } else {
      throw InvalidInput("unknown construct '" + construct + "'");
    }
  }
  if (b.hopf) {
    b.algebra = b.hopf->algebra_ptr();
    b.object = io::hopf_to_json(b.hopf->data());
  } else {
    b.object = io::algebra_to_json(b.algebra->data());
  }
  return b;
}

HopfPtr load_hopf(const json& j, const std::optional<Field>& field_override) {
  if (j.is_object() && j.contains("construct")) {
    Built b = build_recipe(j, field_override);
    if (!b.hopf) throw InvalidInput("the recipe builds an algebra without a Hopf structure");
    return b.hopf;
  }
  if (field_override) throw InvalidInput("--field applies to recipes only");
  return Hopf::validate(io::hopf_from_json(j));
}

Report cmd_build(const json& recipe, const VerifyOptions& opt, const std::optional<Field>& field_override) {
  Report r;
  r.command = "build";
  r.seed = opt.seed;
  r.instance = recipe.value("construct", "");
  try {
    Built b = build_recipe(recipe, field_override);
    r.field = b.algebra->field().name();
    json ev = {{"dim", b.algebra->dim()}, {"hopf", static_cast<bool>(b.hopf)}};
    if (b.hopf) {
      r.instance = instance_name(*b.hopf);
      for (const auto& [k, v] : b.hopf->metadata()) ev["metadata"][k] = v;
    }
    r.add("construct", Status::Pass,
          std::string(b.hopf ? "Hopf algebra" : "algebra") + " of dimension " + std::to_string(b.algebra->dim()), ev);
    r.artifact = std::move(b.object);
  } catch (const AxiomFailure& e) {
    r.add("construct", Status::Fail, e.what());
  }
  return r;
}

Report cmd_check_hopf(const json& hopf_file, const VerifyOptions& opt) {
  const HopfData data = io::hopf_from_json(hopf_file);
  Report r;
  r.command = "check-hopf";
  r.seed = opt.seed;
  r.field = data.algebra.field.name();
  r.instance = data.metadata.contains("construct") ? data.metadata.at("construct") : "hopf";
  auto describe = [](const AxiomReport& a) {
    return json{{"axiom", a.axiom}, {"indices", a.indices}, {"detail", a.detail}};
  };
  const AxiomReport alg = check_algebra_axioms(data.algebra);
  if (!alg.ok) {
    r.add("algebra axioms", Status::Fail, alg.describe(), describe(alg));
    return r;
  }
  r.add("algebra axioms", Status::Pass, "associative and unital, dimension " + std::to_string(data.algebra.dim));
  const AxiomReport hopf = check_hopf_axioms(data);
  if (!hopf.ok) {
    r.add("hopf axioms", Status::Fail, hopf.describe(), describe(hopf));
    return r;
  }
  r.add("hopf axioms", Status::Pass,
        "coassociative, counital, multiplicative coproduct and counit, antipode identities");
  return r;
}

Report cmd_series_check(HopfPtr h, const std::vector<Subspace>& chain, const VerifyOptions& opt) {
  Report r = start("series-check", *h, opt);
  const SeriesCertificate cert = series_check(h, chain);
  std::vector<std::size_t> dims;
  for (const auto& s : chain) dims.push_back(s.dim());
  r.add("endpoints", cert.starts_at_unit && cert.ends_at_whole ? Status::Pass : Status::Fail,
        cert.starts_at_unit ? (cert.ends_at_whole ? "k1 = H_0 and H_t = H" : "the last member is not H")
                            : "H_0 is not k1",
        {{"dims", dims}});
  for (const auto& s : cert.steps) {
    json ev = {{"dim_lower", s.dim_lower},
               {"dim_upper", s.dim_upper},
               {"hopf_subalgebra", s.hopf_subalgebra},
               {"contains_lower", s.contains_lower},
               {"normal", s.normal},
               {"commutative_quotient", s.commutative_quotient},
               {"integral", s.integral},
               {"rank", s.rank},
               {"quotient_dim", s.quotient_dim}};
    r.add("step " + std::to_string(s.index), s.ok() ? Status::Pass : Status::Fail,
          s.ok() ? "H_" + std::to_string(s.index - 1) + " normal in H_" + std::to_string(s.index) +
                       ", commutative quotient of dimension " + std::to_string(s.quotient_dim) + ", m = " +
                       std::to_string(s.rank)
                 : s.failure,
          ev);
  }
  // Semisimplicity of each Hopf member, recorded for information.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < cert.members.size(); ++i)
    if (cert.members[i]) idx.push_back(i);
  const auto rads = parallel_map(idx.size(), opt.threads, [&](std::size_t t) {
    return radical(cert.members[idx[t]]->hopf->algebra_ptr(), task_seed(opt.seed, idx[t])).ideal.dim();
  });
  json ss = json::array();
  std::vector<std::size_t> rad_dims;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    ss.push_back({{"member", idx[t]}, {"dim", chain[idx[t]].dim()}, {"radical_dim", rads[t]}, {"semisimple", rads[t] == 0}});
    rad_dims.push_back(rads[t]);
  }
  r.add("semisimplicity", Status::Note, "radical dimensions " + join(rad_dims), {{"members", ss}});
  return r;
}

Report cmd_frobenius_check(HopfPtr h, const std::vector<Subspace>& chain, const VerifyOptions& opt) {
  Report r = start("frobenius-check", *h, opt);
  const SeriesCertificate cert = series_check(h, chain);
  if (!cert.valid()) {
    r.add("series", Status::Fail, cert.failure);
    return r;
  }
  std::vector<std::size_t> ranks;
  for (const auto& s : cert.steps) ranks.push_back(s.rank);
  r.add("series", Status::Pass, std::to_string(cert.steps.size()) + (cert.steps.size() == 1 ? " normal step" : " normal steps") + " with commutative quotients, m = " + join(ranks),
        {{"ranks", ranks}});

  // Semisimplicity gate: every member of the series, top first.
  const std::size_t t = chain.size();
  const auto rads = parallel_map(t, opt.threads, [&](std::size_t i) {
    return radical(cert.members[i]->hopf->algebra_ptr(), task_seed(opt.seed, i));
  });
  for (std::size_t i = t; i-- > 0;) {
    if (rads[i].ideal.dim() == 0) continue;
    Subspace amb(h->field(), h->dim());
    for (const auto& b : rads[i].ideal.space().basis()) amb.insert(cert.members[i]->to_ambient(b));
    r.add("semisimplicity", Status::Fail,
          "H_" + std::to_string(i) + " has a nonzero nilpotent ideal of dimension " + std::to_string(amb.dim()) +
              " (J^" + std::to_string(rads[i].nilpotency_index) + " = 0)",
          {{"member", i}, {"radical_dim", amb.dim()}, {"nilpotency_index", rads[i].nilpotency_index},
           {"seed", task_seed(opt.seed, i)},
           {"nilpotent_ideal", subspace_vectors(amb)}});
    return r;
  }
  r.add("semisimplicity", Status::Pass, "every H_i is semisimple", {{"seeds", "seed ^ i for member i"}});

  const std::uint32_t p = h->field().characteristic();
  if (h->dim() % p == 0)
    r.add("characteristic divides dimension", Status::Note,
          "char " + std::to_string(p) + " divides dim H = " + std::to_string(h->dim()),
          {{"characteristic", p}, {"dim", h->dim()}});

  std::vector<AlgebraPtr> algs;
  for (const auto& m : cert.members) algs.push_back(m->hopf->algebra_ptr());
  const Extension ext = common_splitting(algs, opt);
  r.add("splitting field", Status::Pass,
        ext.field.name() + " splits every H_i (degree " + std::to_string(ext.degree) + ")",
        {{"degree", ext.degree}, {"field", io::field_to_json(ext.field)}, {"seeds", "seed ^ i for member i"}});

  const HopfPtr hl = extend_if(h, ext);
  std::vector<Subspace> chain_l;
  for (const auto& s : chain) chain_l.push_back(extend_if(s, ext));
  const SeriesCertificate cert_l = series_check(hl, chain_l);
  if (!cert_l.valid()) throw AxiomFailure("series does not survive scalar extension: " + cert_l.failure);

  const CompositionSeries top = meataxe_chop(regular_module(hl->algebra_ptr()), opt.seed);
  std::vector<std::size_t> dims;
  bool all_divide = true;
  for (const auto& f : top.factors) {
    dims.push_back(f.dim());
    all_divide = all_divide && h->dim() % f.dim() == 0;
  }
  r.add("dimension divides dim H", all_divide ? Status::Pass : Status::Fail,
        "simple dimensions " + join(dims) + (all_divide ? " all divide " : " do not all divide ") +
            std::to_string(h->dim()),
        {{"dims", dims}, {"dim", h->dim()}, {"factors", factor_summary(top)}, {"seed", opt.seed}});

  // Inductive refinement, one task per step.
  struct StepOutcome {
    Status status;
    std::string summary;
    json evidence;
  };
  const auto outcomes = parallel_map(cert_l.steps.size(), opt.threads, [&](std::size_t s) -> StepOutcome {
    const std::size_t i = s + 1;
    const std::uint64_t seed = task_seed(opt.seed, 0x100 + i);
    const HopfSubalgebra& upper = *cert_l.members[i];
    const HopfSubalgebra& lower = *cert_l.inner[i];
    const std::size_t m = cert_l.steps[s].rank;
    json ev = {{"step", i}, {"rank", m}, {"seed", seed}};

    // Simples of the commutative quotient must be one-dimensional over the splitting field.
    const QuotientHopf q = quotient_hopf(upper.hopf, hopf_ideal_HKplus(lower));
    const CompositionSeries qs = meataxe_chop(regular_module(q.hopf->algebra_ptr()), seed);
    bool one_dim = true;
    for (const auto& f : qs.factors) one_dim = one_dim && f.dim() == 1;
    ev["quotient_dim"] = q.hopf->dim();
    ev["quotient_simples_one_dimensional"] = one_dim;
    // Restrictions of H_i-modules to H_{i-1} are semisimple because H_{i-1} is.
    ev["restriction_semisimple"] = true;
    if (!one_dim)
      return {Status::Assumption, "H_" + std::to_string(i) + "/H_" + std::to_string(i) + "H_" + std::to_string(i - 1) +
                                      "^+ has a simple module of dimension > 1",
              ev};

    const CompositionSeries vs = meataxe_chop(regular_module(upper.hopf->algebra_ptr()), seed);
    const CompositionSeries us = meataxe_chop(regular_module(lower.hopf->algebra_ptr()), seed);
    const Subalgebra sub = lower.as_subalgebra();
    std::vector<std::vector<std::size_t>> covers(vs.factors.size());
    json pairs = json::array();
    bool ok = true;
    for (std::size_t u = 0; u < us.factors.size(); ++u) {
      const Module induced = induced_module(sub, us.factors[u].module);
      const CompositionSeries is = meataxe_chop(induced, seed);
      for (const auto& f : is.factors) {
        const auto v = find_iso(vs.factors, f.module);
        if (!v) throw AxiomFailure("induced factor is not a simple H_i-module of the regular chop");
        covers[*v].push_back(u);
        const std::size_t dv = vs.factors[*v].dim(), du = us.factors[u].dim();
        const bool divides = (m * du) % dv == 0;
        ok = ok && divides;
        pairs.push_back({{"V", vs.factors[*v].label}, {"dim_V", dv}, {"U", us.factors[u].label}, {"dim_U", du},
                         {"divides", divides}});
      }
    }
    json uncovered = json::array();
    for (std::size_t v = 0; v < covers.size(); ++v)
      if (covers[v].empty()) uncovered.push_back(vs.factors[v].label);
    ev["pairs"] = pairs;
    ev["uncovered"] = uncovered;
    if (!uncovered.empty()) ok = false;
    return {ok ? Status::Pass : Status::Fail,
            ok ? "every simple H_" + std::to_string(i) + "-module V lies over a simple U with dim V | " +
                     std::to_string(m) + " dim U"
               : "refinement fails at step " + std::to_string(i),
            ev};
  });
  for (std::size_t s = 0; s < outcomes.size(); ++s)
    r.add("refinement step " + std::to_string(s + 1), outcomes[s].status, outcomes[s].summary, outcomes[s].evidence);

  if (opt.oracle) {
    json rows = json::array();
    bool agree = true, any = false;
    const auto q = static_cast<double>(h->field().order());
    for (std::size_t i = 0; i < t; ++i) {
      const auto& a = cert.members[i]->hopf->algebra_ptr();
      if (std::pow(q, static_cast<double>(a->dim())) > static_cast<double>(1u << 20)) {
        rows.push_back({{"member", i}, {"skipped", true}});
        continue;
      }
      const Module reg = regular_module(a);
      auto chop = meataxe_chop(reg, task_seed(opt.seed, i)).dims_with_multiplicity();
      std::sort(chop.begin(), chop.end());
      const auto brute = brute_force_factor_dims(reg, 1u << 20);
      any = true;
      agree = agree && chop == brute;
      rows.push_back({{"member", i}, {"chop", chop}, {"brute_force", brute}});
    }
    r.add("oracle", !any ? Status::Note : agree ? Status::Pass : Status::Fail,
          !any ? "every member too large for exhaustive search"
               : agree ? "chop agrees with exhaustive submodule search" : "chop disagrees with exhaustive search",
          {{"members", rows}});
  }
  return r;
}

Report cmd_clifford_report(HopfPtr h, const Subspace& k, const VerifyOptions& opt) {
  Report r = start("clifford-report", *h, opt);
  const HopfSubalgebra ks = hopf_subalgebra(h, k);
  if (h->dim() % ks.dim() != 0) {
    r.add("index", Status::Fail, "dim K does not divide dim H");
    return r;
  }
  const std::size_t m = h->dim() / ks.dim();
  const bool semisimple = radical(h->algebra_ptr(), opt.seed).ideal.dim() == 0;
  if (!semisimple) r.add("semisimplicity", Status::Note, "H is not semisimple; equal dimensions are not asserted");
  if (!is_normal(ks)) {
    r.add("normality", Status::Assumption, "K is not normal in H");
    return r;
  }
  r.add("normality", Status::Pass, "K is a normal Hopf subalgebra of dimension " + std::to_string(ks.dim()),
        {{"dim_K", ks.dim()}, {"index", m}});

  const Extension ext = common_splitting({h->algebra_ptr(), ks.hopf->algebra_ptr()}, opt);
  const HopfPtr hl = extend_if(h, ext);
  const HopfSubalgebra kl = hopf_subalgebra(hl, extend_if(k, ext));
  r.field = ext.field.name();

  const std::vector<Character> chars = characters(hl, opt.seed);
  const Character eps = counit_character(hl);
  json char_rows = json::array();
  for (std::size_t c = 0; c < chars.size(); ++c)
    char_rows.push_back({{"name", "chi" + std::to_string(c)}, {"counit", chars[c] == eps},
                         {"row", io::vec_to_json(ext.field, chars[c].row())}});
  r.add("characters", Status::Note, std::to_string(chars.size()) + " characters of H", {{"characters", char_rows}, {"seed", opt.seed}});

  const QuotientHopf quot = quotient_hopf(hl, hopf_ideal_HKplus(kl));
  const CompositionSeries qs = meataxe_chop(regular_module(quot.hopf->algebra_ptr()), opt.seed);
  std::vector<std::size_t> qdims;
  for (const auto& f : qs.factors) qdims.push_back(f.dim());
  const bool one_dim = std::all_of(qdims.begin(), qdims.end(), [](std::size_t d) { return d == 1; });
  r.add("quotient", one_dim ? Status::Pass : Status::Assumption,
        one_dim ? "H/HK^+ of dimension " + std::to_string(quot.hopf->dim()) + " has only one-dimensional simples"
                : "H/HK^+ has simples of dimensions " + join(qdims),
        {{"quotient_dim", quot.hopf->dim()}, {"simple_dims", qdims}, {"seed", opt.seed}});
  if (!one_dim) return r;

  const CompositionSeries us = meataxe_chop(regular_module(kl.hopf->algebra_ptr()), opt.seed);
  struct Outcome {
    Status status;
    std::string summary;
    json evidence;
  };
  const Subalgebra sub = kl.as_subalgebra();
  const auto outcomes = parallel_map(us.factors.size(), opt.threads, [&](std::size_t u) -> Outcome {
    const auto& U = us.factors[u];
    const CompositionSeries fs = meataxe_chop(induced_module(sub, U.module), task_seed(opt.seed, u));
    json ev = {{"U", U.label}, {"dim_U", U.dim()}, {"factors", factor_summary(fs)}, {"seed", task_seed(opt.seed, u)}};
    bool ok = true;
    std::string why;
    bool equal = true;
    for (const auto& f : fs.factors) equal = equal && f.dim() == fs.factors.front().dim();
    ev["equal_dims"] = equal;
    if (semisimple && !equal) {
      ok = false;
      why = "factors of unequal dimension";
    }
    json twists = json::array();
    for (std::size_t j = 0; j + 1 < fs.factors.size(); ++j) {
      std::optional<std::size_t> found;
      for (std::size_t c = 0; c < chars.size() && !found; ++c)
        if (module_iso(fs.factors[j].module, twist_module(chars[c], fs.factors[j + 1].module))) found = c;
      if (found) {
        twists.push_back({{"from", fs.factors[j + 1].label}, {"to", fs.factors[j].label},
                          {"character", "chi" + std::to_string(*found)}});
      } else {
        twists.push_back({{"from", fs.factors[j + 1].label}, {"to", fs.factors[j].label}, {"character", nullptr}});
        if (ok) why = "no character twists " + fs.factors[j + 1].label + " to " + fs.factors[j].label;
        ok = false;
      }
    }
    ev["twists"] = twists;
    bool divides = true;
    for (const auto& f : fs.factors) divides = divides && (m * U.dim()) % f.dim() == 0;
    ev["divides"] = divides;
    if (!divides) {
      if (ok) why = "dim V does not divide m dim U";
      ok = false;
    }
    std::vector<std::size_t> dims;
    for (const auto& f : fs.factors) dims.push_back(f.dim());
    return {ok ? Status::Pass : Status::Fail,
            ok ? "factor dims " + join(dims) + (dims.size() > 1 ? ", twist-linked" : "") + ", each dividing " +
                     std::to_string(m * U.dim())
               : why,
            ev};
  });
  for (std::size_t u = 0; u < outcomes.size(); ++u)
    r.add("induction of " + us.factors[u].label, outcomes[u].status, outcomes[u].summary, outcomes[u].evidence);
  return r;
}

Report cmd_lies_over(HopfPtr h, const Subspace& k, const std::vector<Module>& modules, const VerifyOptions& opt) {
  Report r = start("lies-over", *h, opt);
  const HopfSubalgebra ks = hopf_subalgebra(h, k);
  const Radical rk = radical(ks.hopf->algebra_ptr(), opt.seed);
  if (rk.ideal.dim() != 0) {
    r.add("K semisimple", Status::Assumption,
          "K has a radical of dimension " + std::to_string(rk.ideal.dim()), {{"radical_dim", rk.ideal.dim()}});
    return r;
  }
  r.add("K semisimple", Status::Pass, "radical of K is zero");

  const Extension ext = common_splitting({h->algebra_ptr(), ks.hopf->algebra_ptr()}, opt);
  const HopfPtr hl = extend_if(h, ext);
  const HopfSubalgebra kl = hopf_subalgebra(hl, extend_if(k, ext));
  const Subalgebra sub = kl.as_subalgebra();
  const Algebra& ha = hl->algebra();
  r.field = ext.field.name();

  std::vector<Module> simples;
  std::vector<std::string> names;
  if (modules.empty()) {
    for (const auto& f : meataxe_chop(regular_module(hl->algebra_ptr()), opt.seed).factors) {
      simples.push_back(f.module);
      names.push_back(f.label);
    }
  } else {
    for (std::size_t i = 0; i < modules.size(); ++i) {
      Module v = ext.embedding ? extend_module(modules[i], hl->algebra_ptr(), *ext.embedding) : modules[i];
      if (!is_irreducible(v, task_seed(opt.seed, i)))
        throw InvalidInput("module " + std::to_string(i) + " is not simple");
      simples.push_back(std::move(v));
      names.push_back("V" + std::to_string(i));
    }
  }

  auto ambient = [&](const Subspace& local) {
    Subspace out(ext.field, hl->dim());
    for (const auto& b : local.basis()) out.insert(kl.to_ambient(b));
    return out;
  };

  struct PairOutcome {
    bool contains = true;
    bool proper = true;
    json rows = json::array();
  };
  const auto per_v = parallel_map(simples.size(), opt.threads, [&](std::size_t vi) {
    PairOutcome out;
    const Ideal p = annihilator(simples[vi]);
    const Ideal pk = intersect_subspace(p, sub);
    const CompositionSeries us = meataxe_chop(restrict_module(simples[vi], sub), task_seed(opt.seed, vi));
    for (const auto& u : us.factors) {
      const Ideal q = annihilator(u.module);
      const Subspace qa = ambient(q.space());
      const bool contains = q.space().contains(pk.space());
      const std::size_t hq = p.space().sum(left_span(ha, qa)).dim();
      const std::size_t qh = p.space().sum(right_span(ha, qa)).dim();
      const bool proper = hq < hl->dim() && qh < hl->dim();
      out.contains = out.contains && contains;
      out.proper = out.proper && proper;
      out.rows.push_back({{"V", names[vi]}, {"U", u.label}, {"dim_P", p.dim()}, {"dim_Q", q.dim()},
                          {"dim_P_cap_K", pk.dim()}, {"Q_contains_P_cap_K", contains}, {"dim_P_plus_HQ", hq},
                          {"dim_P_plus_QH", qh}, {"seed", task_seed(opt.seed, vi)}});
    }
    return out;
  });
  bool contains = true, proper = true;
  json pairs = json::array();
  for (const auto& o : per_v) {
    contains = contains && o.contains;
    proper = proper && o.proper;
    for (const auto& row : o.rows) pairs.push_back(row);
  }
  r.add("lying over", contains ? Status::Pass : Status::Fail,
        contains ? "Q contains P cap K for every pair (P, Q)" : "some Q does not contain P cap K", {{"pairs", pairs}});
  r.add("proper sums", proper ? Status::Pass : Status::Fail,
        proper ? "P + HQ and P + QH are proper for every pair" : "some P + HQ or P + QH is all of H");

  // From K upward: annihilators of the factors of H (x)_K K/Q lie over Q.
  const CompositionSeries ku = meataxe_chop(regular_module(kl.hopf->algebra_ptr()), opt.seed);
  const auto per_u = parallel_map(ku.factors.size(), opt.threads, [&](std::size_t ui) {
    const Ideal q = annihilator(ku.factors[ui].module);
    const Module kq = quotient_module(regular_module(kl.hopf->algebra_ptr()), q.space());
    const CompositionSeries fs = meataxe_chop(induced_module(sub, kq), task_seed(opt.seed, 0x200 + ui));
    json rows = json::array();
    bool ok = true;
    for (const auto& f : fs.factors) {
      const Ideal pk = intersect_subspace(annihilator(f.module), sub);
      const bool c = q.space().contains(pk.space());
      ok = ok && c;
      rows.push_back({{"U", ku.factors[ui].label}, {"V", f.label}, {"dim_Q", q.dim()}, {"dim_P_cap_K", pk.dim()},
                      {"Q_contains_P_cap_K", c}, {"seed", task_seed(opt.seed, 0x200 + ui)}});
    }
    return std::pair{ok, rows};
  });
  bool up_ok = true;
  json up_rows = json::array();
  for (const auto& [ok, rows] : per_u) {
    up_ok = up_ok && ok;
    for (const auto& row : rows) up_rows.push_back(row);
  }
  r.add("induced annihilators", up_ok ? Status::Pass : Status::Fail,
        up_ok ? "every factor of H (x)_K K/Q has an annihilator lying over Q" : "an induced annihilator misses Q",
        {{"pairs", up_rows}});
  return r;
}

}  // namespace hopfcert
