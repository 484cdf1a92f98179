#include <algorithm>
#include <functional>
#include <set>

#include "hopfcert/error.hpp"
#include "hopfcert/rep.hpp"
#include "hopfcert/rng.hpp"

namespace hopfcert {

Subspace spin(const Module& v, const std::vector<Vec>& seeds) {
  Subspace s(v.field(), v.dim());
  std::vector<Vec> pending;
  for (const auto& seed : seeds)
    if (s.insert(seed)) pending.push_back(seed);
  while (!pending.empty() && !s.is_whole()) {
    const Vec u = std::move(pending.back());
    pending.pop_back();
    for (const auto& a : v.actions()) {
      Vec w = mat_vec(a, u);
      if (s.insert(w)) pending.push_back(std::move(w));
    }
  }
  return s;
}

Subspace spin(const Module& v, const Vec& seed) { return spin(v, std::vector<Vec>{seed}); }

Subspace spin_dual(const Module& v, const Vec& seed) {
  Subspace s(v.field(), v.dim());
  std::vector<Vec> pending;
  if (s.insert(seed)) pending.push_back(seed);
  while (!pending.empty() && !s.is_whole()) {
    const Vec u = std::move(pending.back());
    pending.pop_back();
    for (const auto& a : v.actions()) {
      Vec w = apply_left(u, a);
      if (s.insert(w)) pending.push_back(std::move(w));
    }
  }
  return s;
}

bool is_submodule(const Module& v, const Subspace& s) {
  for (const auto& a : v.actions())
    for (const auto& b : s.basis())
      if (!s.contains(mat_vec(a, b))) return false;
  return true;
}

Module submodule(const Module& v, const Subspace& s) {
  const std::size_t m = s.dim();
  std::vector<Matrix> action;
  action.reserve(v.actions().size());
  for (const auto& a : v.actions()) {
    Matrix local(v.field(), m, m);
    for (std::size_t j = 0; j < m; ++j) {
      const Vec c = s.coordinates(mat_vec(a, s.basis()[j]));
      for (std::size_t i = 0; i < m; ++i) local(i, j) = c[i];
    }
    action.push_back(std::move(local));
  }
  return Module(detail::trusted, v.algebra_ptr(), std::move(action));
}

Module quotient_module(const Module& v, const Subspace& s) {
  const QuotientMap pi(s);
  const std::size_t m = pi.dim();
  std::vector<Matrix> action;
  action.reserve(v.actions().size());
  for (const auto& a : v.actions()) {
    Matrix local(v.field(), m, m);
    for (std::size_t j = 0; j < m; ++j) {
      const Vec c = pi.project(a.column(pi.complement()[j]));
      for (std::size_t i = 0; i < m; ++i) local(i, j) = c[i];
    }
    action.push_back(std::move(local));
  }
  return Module(detail::trusted, v.algebra_ptr(), std::move(action));
}

Module direct_sum(const Module& a, const Module& b) {
  if (a.algebra().dim() != b.algebra().dim() || a.field() != b.field())
    throw InvalidInput("direct sum of modules over different algebras");
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.actions().size(); ++i) {
    Matrix m(a.field(), da + db, da + db);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t c = 0; c < da; ++c) m(r, c) = a.action(i)(r, c);
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t c = 0; c < db; ++c) m(da + r, da + c) = b.action(i)(r, c);
    action.push_back(std::move(m));
  }
  return Module(detail::trusted, a.algebra_ptr(), std::move(action));
}

std::string to_string(IrreducibilityWitness::Kind kind) {
  switch (kind) {
    case IrreducibilityWitness::Kind::OneDimensional: return "one-dimensional";
    case IrreducibilityWitness::Kind::Norton: return "norton";
    case IrreducibilityWitness::Kind::Exhaustive: return "exhaustive";
    case IrreducibilityWitness::Kind::Submodule: return "submodule";
  }
  return "unknown";
}

namespace {

using Kind = IrreducibilityWitness::Kind;

/// Calls fn on one representative of every line of GF(q)^d (first nonzero coordinate 1),
/// stopping early when fn returns true.
bool for_each_point(const Field& f, std::size_t d, const std::function<bool(const Vec&)>& fn) {
  const Elem q = f.order();
  for (std::size_t lead = 0; lead < d; ++lead) {
    Vec v(d, 0);
    v[lead] = 1;
    while (true) {
      if (fn(v)) return true;
      bool carry = true;
      for (std::size_t pos = d; carry && pos > lead + 1;) {
        --pos;
        if (++v[pos] < q) carry = false;
        else v[pos] = 0;
      }
      if (carry) break;
    }
  }
  return false;
}

bool exceeds(const Field& f, std::size_t d, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= f.order();
    if (total > limit) return true;
  }
  return false;
}

IrreducibilityWitness submodule_witness(Subspace s, const Vec& element, std::size_t attempts) {
  IrreducibilityWitness w;
  w.kind = Kind::Submodule;
  w.element = element;
  w.submodule = std::move(s);
  w.attempts = attempts;
  return w;
}

std::optional<IrreducibilityWitness> try_element(const Module& m, const Vec& x, std::size_t attempts) {
  const std::size_t d = m.dim();
  const Matrix a = m.act(x);
  for (const auto& pf : factor_poly(char_poly(a))) {
    const Matrix fa = eval_matrix(pf.factor, a);
    const auto null = kernel(fa);
    const bool tight = null.size() == static_cast<std::size_t>(pf.factor.degree());
    for (const auto& v : null) {
      Subspace s = spin(m, v);
      if (s.dim() < d) return submodule_witness(std::move(s), x, attempts);
      if (tight) break;
    }
    if (!tight) continue;
    const Vec w = kernel(fa.transpose()).front();
    const Subspace t = spin_dual(m, w);
    if (t.dim() < d) {
      return submodule_witness(Subspace::span(m.field(), d, kernel(t.basis_matrix())), x, attempts);
    }
    IrreducibilityWitness out;
    out.kind = Kind::Norton;
    out.element = x;
    out.factor = pf.factor.coeffs();
    out.null_vector = null.front();
    out.dual_vector = w;
    out.attempts = attempts;
    return out;
  }
  return std::nullopt;
}

Vec random_element(SeededRng& rng, const Field& f, std::size_t n) {
  Vec x(n);
  for (auto& c : x) c = static_cast<Elem>(rng.below(f.order()));
  return x;
}

IrreducibilityWitness find_split(const Module& m, SeededRng& rng, const MeataxeBudget& budget) {
  const std::size_t d = m.dim();
  const Algebra& alg = m.algebra();
  const std::size_t n = alg.dim();
  const Field& f = m.field();
  if (d == 1) return {};
  std::size_t attempts = 0;
  for (; attempts < budget.random_elements; ++attempts) {
    Vec x = random_element(rng, f, n);
    if (attempts >= budget.linear_elements) {
      const std::size_t len = 2 + rng.below(std::max<std::size_t>(budget.max_word_length, 2) - 1);
      for (std::size_t i = 1; i < len; ++i) x = alg.multiply(x, random_element(rng, f, n));
    }
    if (auto w = try_element(m, x, attempts + 1)) return *w;
  }
  // Structured elements: basis elements, pairwise sums, pairwise products.
  std::vector<Vec> structured;
  for (std::size_t i = 0; i < n; ++i) structured.push_back(basis_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec x = basis_vector(n, i);
      x[j] = 1;
      structured.push_back(std::move(x));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) structured.push_back(alg.basis_product(i, j));
  for (const auto& x : structured) {
    ++attempts;
    if (auto w = try_element(m, x, attempts)) return *w;
  }
  if (d > budget.max_exhaustive_dim || exceeds(f, d, budget.exhaustive_limit))
    throw BudgetExhausted("MeatAxe could not decide irreducibility of a " + std::to_string(d) +
                          "-dimensional module within budget");
  std::optional<Subspace> proper;
  for_each_point(f, d, [&](const Vec& v) {
    Subspace s = spin(m, v);
    if (s.dim() < d) {
      proper = std::move(s);
      return true;
    }
    return false;
  });
  if (proper) return submodule_witness(std::move(*proper), {}, attempts);
  IrreducibilityWitness out;
  out.kind = Kind::Exhaustive;
  out.attempts = attempts;
  return out;
}

/// Spin basis in discovery order (breadth first, generators in basis order).
std::vector<Vec> ordered_spin_basis(const Module& m, const Vec& v) {
  Subspace s(m.field(), m.dim());
  std::vector<Vec> basis;
  if (s.insert(v)) basis.push_back(v);
  for (std::size_t idx = 0; idx < basis.size() && !s.is_whole(); ++idx)
    for (const auto& a : m.actions()) {
      Vec w = mat_vec(a, basis[idx]);
      if (s.insert(w)) basis.push_back(std::move(w));
    }
  return basis;
}

struct Rebased {
  std::vector<Matrix> action;
  Matrix basis;  // columns: new basis in old coordinates
  Matrix basis_inverse;
};

std::optional<Rebased> rebase(const Module& m, const Vec& v) {
  const auto b = ordered_spin_basis(m, v);
  if (b.size() != m.dim()) return std::nullopt;
  Rebased r;
  r.basis = Matrix::from_columns(m.field(), b, m.dim());
  r.basis_inverse = *inverse(r.basis);
  for (const auto& a : m.actions()) r.action.push_back(r.basis_inverse * a * r.basis);
  return r;
}

Rebased canonical_rebase(const Module& m, std::uint64_t point_limit) {
  const std::size_t d = m.dim();
  const Field& f = m.field();
  if (d <= 1 || exceeds(f, d, point_limit * (f.order() - 1))) {
    if (d == 0) return {m.actions(), Matrix::identity(f, 0), Matrix::identity(f, 0)};
    auto r = rebase(m, unit_vector(d, 0));
    if (!r) throw InvalidInput("canonical form requested for a module that is not cyclic from e_0");
    return std::move(*r);
  }
  std::optional<Rebased> best;
  for_each_point(f, d, [&](const Vec& v) {
    auto r = rebase(m, v);
    if (r && (!best || r->action < best->action)) best = std::move(r);
    return false;
  });
  if (!best) throw InvalidInput("canonical form requested for a non-cyclic module");
  return std::move(*best);
}

IrreducibilityWitness transport(IrreducibilityWitness w, const Rebased& r) {
  if (!w.null_vector.empty()) w.null_vector = mat_vec(r.basis_inverse, w.null_vector);
  if (!w.dual_vector.empty()) w.dual_vector = apply_left(w.dual_vector, r.basis);
  return w;
}

std::string factor_label(std::size_t dim, std::size_t index) {
  std::string s = std::to_string(dim);
  if (index < 26) return s + static_cast<char>('a' + index);
  return s + "z" + std::to_string(index - 25);
}

}  // namespace

IrreducibilityWitness irreducibility_witness(const Module& v, std::uint64_t seed, const MeataxeBudget& budget) {
  if (v.dim() == 0) throw InvalidInput("irreducibility of the zero module");
  SeededRng rng(seed);
  return find_split(v, rng, budget);
}

bool is_irreducible(const Module& v, std::uint64_t seed) { return irreducibility_witness(v, seed).irreducible(); }

bool verify_witness(const Module& v, const IrreducibilityWitness& w) {
  const std::size_t d = v.dim();
  switch (w.kind) {
    case Kind::OneDimensional: return d == 1;
    case Kind::Submodule:
      return w.submodule && w.submodule->ambient_dim() == d && w.submodule->dim() > 0 && w.submodule->dim() < d &&
             is_submodule(v, *w.submodule);
    case Kind::Exhaustive: {
      if (d == 0) return false;
      return !for_each_point(v.field(), d, [&](const Vec& p) { return spin(v, p).dim() < d; });
    }
    case Kind::Norton: {
      if (w.element.size() != v.algebra().dim() || w.null_vector.size() != d || w.dual_vector.size() != d)
        return false;
      const Poly f(v.field(), w.factor);
      if (f.degree() < 1 || !is_irreducible(f)) return false;
      const Matrix fa = eval_matrix(f, v.act(w.element));
      if (kernel(fa).size() != static_cast<std::size_t>(f.degree())) return false;
      if (is_zero(w.null_vector) || !is_zero(mat_vec(fa, w.null_vector))) return false;
      if (is_zero(w.dual_vector) || !is_zero(apply_left(w.dual_vector, fa))) return false;
      return spin(v, w.null_vector).is_whole() && spin_dual(v, w.dual_vector).is_whole();
    }
  }
  return false;
}

std::size_t CompositionSeries::total_dim() const {
  std::size_t t = 0;
  for (const auto& f : factors) t += f.dim() * f.multiplicity;
  return t;
}

std::vector<std::size_t> CompositionSeries::dims_with_multiplicity() const {
  std::vector<std::size_t> out;
  for (const auto& f : factors) out.insert(out.end(), f.multiplicity, f.dim());
  std::sort(out.begin(), out.end());
  return out;
}

Module canonical_form(const Module& simple, std::uint64_t point_limit) {
  auto r = canonical_rebase(simple, point_limit);
  return Module(detail::trusted, simple.algebra_ptr(), std::move(r.action));
}

CompositionSeries meataxe_chop(const Module& v, std::uint64_t seed, const MeataxeBudget& budget) {
  SeededRng rng(seed);
  std::vector<Module> work{v};
  std::vector<CompositionFactor> classes;
  while (!work.empty()) {
    Module m = std::move(work.back());
    work.pop_back();
    if (m.dim() == 0) continue;
    IrreducibilityWitness w = find_split(m, rng, budget);
    if (!w.irreducible()) {
      const Subspace s = *w.submodule;
      work.push_back(quotient_module(m, s));
      work.push_back(submodule(m, s));
      continue;
    }
    const Rebased r = canonical_rebase(m, 2048);
    Module c(detail::trusted, m.algebra_ptr(), r.action);
    w = transport(std::move(w), r);
    bool merged = false;
    for (auto& cls : classes) {
      if (cls.dim() != c.dim() || !module_iso(cls.module, c)) continue;
      ++cls.multiplicity;
      if (c.actions() < cls.module.actions()) {
        cls.module = std::move(c);
        cls.witness = std::move(w);
      }
      merged = true;
      break;
    }
    if (!merged) classes.push_back({std::move(c), 1, {}, std::move(w)});
  }
  std::sort(classes.begin(), classes.end(), [](const CompositionFactor& a, const CompositionFactor& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.module.actions() < b.module.actions();
  });
  std::size_t index = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0 && classes[i].dim() != classes[i - 1].dim()) index = 0;
    classes[i].label = factor_label(classes[i].dim(), index++);
  }
  CompositionSeries out{v.dim(), std::move(classes)};
  if (out.total_dim() != v.dim()) throw Error("composition factor dimensions do not add up to the module dimension");
  return out;
}

std::vector<Subspace> submodule_lattice(const Module& v, std::uint64_t limit) {
  const std::size_t d = v.dim();
  if (exceeds(v.field(), d, limit)) throw BudgetExhausted("submodule lattice too large for exhaustive enumeration");
  std::set<Subspace> found;
  found.insert(Subspace(v.field(), d));
  for_each_point(v.field(), d, [&](const Vec& p) {
    found.insert(spin(v, p));
    return false;
  });
  std::vector<Subspace> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Subspace s = all[i].sum(all[j]);
      if (found.insert(s).second) all.push_back(std::move(s));
    }
  return {found.begin(), found.end()};
}

std::vector<std::size_t> brute_force_factor_dims(const Module& v, std::uint64_t limit) {
  std::vector<std::size_t> dims;
  Module cur = v;
  while (cur.dim() > 0) {
    if (exceeds(cur.field(), cur.dim(), limit)) throw BudgetExhausted("module too large for brute-force factor search");
    std::optional<Subspace> smallest;
    for_each_point(cur.field(), cur.dim(), [&](const Vec& p) {
      Subspace s = spin(cur, p);
      if (!smallest || s.dim() < smallest->dim()) smallest = std::move(s);
      return smallest->dim() == 1;
    });
    dims.push_back(smallest->dim());
    cur = quotient_module(cur, *smallest);
  }
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace hopfcert
