#include "hopfcert/constructors.hpp"

#include <algorithm>

#include "hopfcert/error.hpp"

namespace hopfcert {

HopfPtr group_algebra(const GroupTable& g, const Field& field) {
  const std::size_t n = g.order();
  HopfData d;
  d.algebra.field = field;
  d.algebra.dim = n;
  d.algebra.labels = g.labels();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.algebra.structconst.push_back({a, b, g.mul(a, b), 1});
  d.algebra.unit = unit_vector(n, g.identity());
  for (std::size_t a = 0; a < n; ++a) {
    d.coproduct.push_back(unit_vector(n * n, a * n + a));
    d.antipode.push_back(unit_vector(n, g.inverse(a)));
  }
  d.counit.assign(n, 1);
  d.metadata["construct"] = "group_algebra";
  if (!g.name().empty()) d.metadata["group"] = g.name();
  return Hopf::validate(std::move(d));
}

HopfPtr dual_group_algebra(const GroupTable& g, const Field& field) {
  const std::size_t n = g.order();
  HopfData d;
  d.algebra.field = field;
  d.algebra.dim = n;
  for (const auto& l : g.labels()) d.algebra.labels.push_back("e_" + l);
  for (std::size_t a = 0; a < n; ++a) d.algebra.structconst.push_back({a, a, a, 1});
  d.algebra.unit.assign(n, 1);
  d.coproduct.assign(n, Vec(n * n, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) d.coproduct[g.mul(u, v)][u * n + v] = 1;
  d.counit = unit_vector(n, g.identity());
  for (std::size_t a = 0; a < n; ++a) d.antipode.push_back(unit_vector(n, g.inverse(a)));
  d.metadata["construct"] = "dual_group_algebra";
  if (!g.name().empty()) d.metadata["group"] = g.name();
  return Hopf::validate(std::move(d));
}

HopfPtr dual_hopf(const Hopf& h) {
  const std::size_t n = h.dim();
  const HopfData& src = h.data();
  HopfData d;
  d.algebra.field = h.field();
  d.algebra.dim = n;
  for (const auto& l : h.labels())
    d.algebra.labels.push_back(!l.empty() && l.back() == '*' ? l.substr(0, l.size() - 1) : l + "*");
  // f_a f_b = sum_c <Delta b_c, f_a (x) f_b> f_c
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& t : h.coproduct(c)) d.algebra.structconst.push_back({t.left, t.right, c, t.coeff});
  d.algebra.unit = src.counit;
  // Delta f_c = sum_{a,b} <f_c, b_a b_b> f_a (x) f_b
  d.coproduct.assign(n, Vec(n * n, 0));
  for (const auto& sc : src.algebra.structconst) d.coproduct[sc.k][sc.i * n + sc.j] = sc.coeff;
  d.counit = src.algebra.unit;
  d.antipode.assign(n, Vec(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) d.antipode[c][a] = src.antipode[a][c];
  d.metadata = src.metadata;
  d.metadata["construct"] = "dual_hopf";
  return Hopf::validate(std::move(d));
}

std::string to_string(BicrossConvention c) {
  switch (c) {
    case BicrossConvention::Standard: return "standard";
    case BicrossConvention::InverseRightAction: return "inverse-right-action";
    case BicrossConvention::InverseLeftAction: return "inverse-left-action";
    case BicrossConvention::InverseBoth: return "inverse-both";
  }
  return "unknown";
}

std::optional<HopfPtr> try_bicrossproduct(const MatchedPair& m, const Field& field, BicrossConvention c,
                                          AxiomReport* report) {
  const GroupTable& fg = m.f;
  const GroupTable& qg = m.q;
  const std::size_t nf = fg.order(), nq = qg.order(), n = nf * nq;
  const bool inv_right = c == BicrossConvention::InverseRightAction || c == BicrossConvention::InverseBoth;
  const bool inv_left = c == BicrossConvention::InverseLeftAction || c == BicrossConvention::InverseBoth;
  auto tri = [&](std::size_t q, std::size_t f) { return m.act(inv_left ? qg.inverse(q) : q, f); };
  auto tle = [&](std::size_t q, std::size_t f) { return m.back(q, inv_right ? fg.inverse(f) : f); };
  auto idx = [&](std::size_t q, std::size_t f) { return q * nf + f; };

  HopfData d;
  d.algebra.field = field;
  d.algebra.dim = n;
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t f = 0; f < nf; ++f) d.algebra.labels.push_back("e_" + qg.labels()[q] + "#" + fg.labels()[f]);
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t f = 0; f < nf; ++f)
      for (std::size_t f2 = 0; f2 < nf; ++f2)
        d.algebra.structconst.push_back({idx(q, f), idx(tle(q, f), f2), idx(q, fg.mul(f, f2)), 1});
  d.algebra.unit.assign(n, 0);
  for (std::size_t q = 0; q < nq; ++q) d.algebra.unit[idx(q, fg.identity())] = 1;
  d.coproduct.assign(n, Vec(n * n, 0));
  d.counit.assign(n, 0);
  d.antipode.assign(n, Vec(n, 0));
  for (std::size_t q = 0; q < nq; ++q)
    for (std::size_t f = 0; f < nf; ++f) {
      const std::size_t j = idx(q, f);
      for (std::size_t a = 0; a < nq; ++a) {
        const std::size_t b = qg.mul(qg.inverse(a), q);
        d.coproduct[j][idx(a, tri(b, f)) * n + idx(b, f)] = 1;
      }
      d.counit[j] = q == qg.identity() ? 1 : 0;
      d.antipode[j][idx(qg.inverse(tle(q, f)), fg.inverse(tri(q, f)))] = 1;
    }
  d.metadata["construct"] = "bicrossproduct";
  d.metadata["convention"] = to_string(c);
  const AxiomReport r = check_hopf_axioms(d);
  if (report) *report = r;
  if (!r.ok) return std::nullopt;
  return std::make_shared<const Hopf>(detail::trusted, std::move(d));
}

HopfPtr bicrossproduct(const MatchedPair& m, const Field& field) {
  if (auto r = check_matched_pair(m); !r.ok) throw InvalidInput("matched pair: " + r.describe());
  std::string failures;
  for (auto c : {BicrossConvention::Standard, BicrossConvention::InverseRightAction,
                 BicrossConvention::InverseLeftAction, BicrossConvention::InverseBoth}) {
    AxiomReport r;
    if (auto h = try_bicrossproduct(m, field, c, &r)) return *h;
    failures += "; " + to_string(c) + ": " + r.describe();
  }
  throw AxiomFailure("no bicrossproduct convention passes the Hopf axioms" + failures);
}

AxiomReport check_measuring(const ActionData& act) {
  const Hopf& b = *act.acting;
  const Hopf& a = *act.acted;
  if (b.field() != a.field()) return AxiomReport::fail("well-formed", {}, "actions over different fields");
  const std::size_t na = a.dim(), nb = b.dim();
  if (act.action.size() != nb) return AxiomReport::fail("well-formed", {}, "need one action matrix per basis of B");
  for (std::size_t j = 0; j < nb; ++j)
    if (act.action[j].rows() != na || act.action[j].cols() != na)
      return AxiomReport::fail("well-formed", {j}, "action matrix has wrong shape");
  if (auto r = check_module_axioms(b.algebra(), act.action); !r.ok) return r;
  const Field& f = a.field();
  for (std::size_t j = 0; j < nb; ++j) {
    Vec eps_unit = a.algebra().unit();
    scale_in_place(f, eps_unit, b.counit(j));
    if (mat_vec(act.action[j], a.algebra().unit()) != eps_unit)
      return AxiomReport::fail("measuring unit", {j}, "b |> 1 != epsilon(b) 1");
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < na; ++y) {
        const Vec lhs = mat_vec(act.action[j], a.algebra().basis_product(x, y));
        Vec rhs(na, 0);
        for (const auto& t : b.coproduct(j))
          axpy(f, rhs, a.algebra().multiply(act.action[t.left].column(x), act.action[t.right].column(y)), t.coeff);
        if (lhs != rhs) return AxiomReport::fail("measuring", {j, x, y}, "b |> (a a') != sum (b_1 |> a)(b_2 |> a')");
      }
  }
  return AxiomReport::pass();
}

namespace {

AlgebraData smash_data(const ActionData& act) {
  if (auto r = check_measuring(act); !r.ok) throw AxiomFailure("module-algebra action: " + r.describe());
  const Hopf& b = *act.acting;
  const Algebra& a = act.acted->algebra();
  const Field& f = a.field();
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  AlgebraData d;
  d.field = f;
  d.dim = n;
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) d.labels.push_back(la + "#" + lb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          Vec prod(n, 0);
          for (const auto& t : b.coproduct(j)) {
            const Vec left = a.multiply(basis_vector(na, i), act.action[t.left].column(k));
            for (const auto& bt : b.algebra().product_terms(t.right, l))
              for (std::size_t r = 0; r < na; ++r) {
                auto& slot = prod[r * nb + bt.index];
                slot = f.fma(slot, f.mul(t.coeff, left[r]), bt.coeff);
              }
          }
          for (std::size_t s = 0; s < n; ++s)
            if (prod[s] != 0) d.structconst.push_back({i * nb + j, k * nb + l, s, prod[s]});
        }
  d.unit.assign(n, 0);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) d.unit[i * nb + j] = f.mul(a.unit()[i], b.algebra().unit()[j]);
  return d;
}

}  // namespace

AlgebraPtr smash_algebra(const ActionData& act) {
  AlgebraData d = smash_data(act);
  if (auto r = check_algebra_axioms(d); !r.ok) throw AxiomFailure("smash product: " + r.describe());
  return std::make_shared<const Algebra>(detail::trusted, std::move(d));
}

HopfPtr smash_hopf(const ActionData& act, std::vector<Vec> coproduct, Vec counit, std::vector<Vec> antipode) {
  HopfData d;
  d.algebra = smash_data(act);
  d.coproduct = std::move(coproduct);
  d.counit = std::move(counit);
  d.antipode = std::move(antipode);
  d.metadata["construct"] = "smash_algebra";
  return Hopf::validate(std::move(d));
}

ActionData translation_action(const GroupTable& y, const Subgroup& x, const Field& field) {
  if (!is_subgroup(y, x.elements)) throw InvalidInput("X is not a subgroup of Y");
  ActionData act;
  act.acted = group_algebra(x.table, field);
  act.acting = dual_group_algebra(y, field);
  const std::size_t nx = x.elements.size();
  for (std::size_t e = 0; e < y.order(); ++e) {
    Matrix m(field, nx, nx);
    const std::size_t local = x.local_index(e);
    if (local != Subgroup::npos) m(local, local) = 1;
    act.action.push_back(std::move(m));
  }
  return act;
}

Module induced_module(const Subalgebra& k, const Module& u) {
  const Algebra& h = *k.ambient;
  const Field& f = h.field();
  const std::size_t nh = h.dim(), nk = k.span.dim(), du = u.dim();
  if (u.algebra().dim() != nk) throw InvalidInput("module is not over the given subalgebra");
  const std::size_t big = nh * du;
  Subspace relations(f, big);
  for (std::size_t i = 0; i < nh; ++i)
    for (std::size_t c = 0; c < nk; ++c) {
      const Vec hk = h.multiply(basis_vector(nh, i), k.span.basis()[c]);
      for (std::size_t j = 0; j < du; ++j) {
        Vec rel(big, 0);
        for (std::size_t p = 0; p < nh; ++p)
          if (hk[p] != 0) rel[p * du + j] = hk[p];
        for (std::size_t r = 0; r < du; ++r) {
          auto& slot = rel[i * du + r];
          slot = f.sub(slot, u.action(c)(r, j));
        }
        relations.insert(std::move(rel));
      }
    }
  const QuotientMap pi(relations);
  const std::size_t m = pi.dim();
  if (nh % nk != 0 || m * nk != nh * du)
    throw AxiomFailure("induced module has dimension " + std::to_string(m) + ", expected (dim H / dim K) dim U = " +
                       std::to_string(nh) + "/" + std::to_string(nk) + "*" + std::to_string(du));
  std::vector<Matrix> action;
  action.reserve(nh);
  for (std::size_t l = 0; l < nh; ++l) {
    Matrix a(f, m, m);
    for (std::size_t col = 0; col < m; ++col) {
      const std::size_t idx = pi.complement()[col];
      const std::size_t hp = idx / du, uj = idx % du;
      Vec img(big, 0);
      for (const auto& t : h.product_terms(l, hp)) img[t.index * du + uj] = f.add(img[t.index * du + uj], t.coeff);
      const Vec c = pi.project(img);
      for (std::size_t r = 0; r < m; ++r) a(r, col) = c[r];
    }
    action.push_back(std::move(a));
  }
  return Module(detail::trusted, k.ambient, std::move(action));
}

Module conjugate_module(const GroupTable& g, const Subgroup& n, std::size_t element, const Module& u) {
  if (element >= g.order()) throw InvalidInput("conjugating element out of range");
  if (u.algebra().dim() != n.elements.size()) throw InvalidInput("module is not over kN");
  std::vector<Matrix> action;
  action.reserve(n.elements.size());
  for (auto x : n.elements) {
    const std::size_t local = n.local_index(g.conjugate(element, x));
    if (local == Subgroup::npos) throw InvalidInput("conjugation leaves the subgroup (N is not normal)");
    action.push_back(u.action(local));
  }
  return Module(detail::trusted, u.algebra_ptr(), std::move(action));
}

Subspace group_subalgebra_span(const GroupTable& g, const Subgroup& sub, const Field& field) {
  Subspace s(field, g.order());
  for (auto e : sub.elements) s.insert(unit_vector(g.order(), e));
  return s;
}

}  // namespace hopfcert
