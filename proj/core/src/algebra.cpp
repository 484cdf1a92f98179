#include "hopfcert/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "hopfcert/error.hpp"

namespace hopfcert {

std::string AxiomReport::describe() const {
  if (ok) return "pass";
  std::ostringstream os;
  os << axiom << " fails";
  if (!indices.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << ")";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

namespace {

AxiomReport check_well_formed(const AlgebraData& d) {
  if (d.dim == 0) return AxiomReport::fail("well-formed", {}, "dimension must be positive");
  if (d.labels.size() != d.dim) return AxiomReport::fail("well-formed", {}, "label count differs from dimension");
  if (d.unit.size() != d.dim) return AxiomReport::fail("well-formed", {}, "unit vector has wrong length");
  for (auto u : d.unit)
    if (!d.field.contains(u)) return AxiomReport::fail("well-formed", {}, "unit coefficient outside the field");
  for (const auto& sc : d.structconst) {
    if (sc.i >= d.dim || sc.j >= d.dim || sc.k >= d.dim)
      return AxiomReport::fail("well-formed", {sc.i, sc.j, sc.k}, "structure constant index out of range");
    if (!d.field.contains(sc.coeff))
      return AxiomReport::fail("well-formed", {sc.i, sc.j, sc.k}, "structure constant outside the field");
  }
  return AxiomReport::pass();
}

std::vector<std::vector<Term>> expand_products(const AlgebraData& d) {
  const std::size_t n = d.dim;
  std::vector<Vec> dense(n * n);
  for (const auto& sc : d.structconst) {
    auto& v = dense[sc.i * n + sc.j];
    if (v.empty()) v.assign(n, 0);
    v[sc.k] = d.field.add(v[sc.k], sc.coeff);
  }
  std::vector<std::vector<Term>> out(n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij)
    for (std::size_t k = 0; k < dense[ij].size(); ++k)
      if (dense[ij][k] != 0) out[ij].push_back({static_cast<std::uint32_t>(k), dense[ij][k]});
  return out;
}

/// (sum over terms of x) * b_j for sparse x, accumulated into out.
void mul_sparse_basis(const Field& f, const std::vector<std::vector<Term>>& prods, std::size_t n,
                      std::span<const Term> x, std::size_t j, Vec& out) {
  for (const auto& t : x)
    for (const auto& u : prods[t.index * n + j]) out[u.index] = f.fma(out[u.index], t.coeff, u.coeff);
}

void mul_basis_sparse(const Field& f, const std::vector<std::vector<Term>>& prods, std::size_t n, std::size_t i,
                      std::span<const Term> x, Vec& out) {
  for (const auto& t : x)
    for (const auto& u : prods[i * n + t.index]) out[u.index] = f.fma(out[u.index], t.coeff, u.coeff);
}

std::vector<Term> to_terms(const Vec& v) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) t.push_back({static_cast<std::uint32_t>(i), v[i]});
  return t;
}

AlgebraData canonicalize(AlgebraData d) {
  const auto prods = expand_products(d);
  d.structconst.clear();
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = 0; j < d.dim; ++j)
      for (const auto& t : prods[i * d.dim + j]) d.structconst.push_back({i, j, t.index, t.coeff});
  return d;
}

}  // namespace

AxiomReport check_algebra_axioms(const AlgebraData& d) {
  if (auto wf = check_well_formed(d); !wf.ok) return wf;
  const std::size_t n = d.dim;
  const Field& f = d.field;
  const auto prods = expand_products(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = prods[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs(n, 0), rhs(n, 0);
        mul_sparse_basis(f, prods, n, ij, k, lhs);
        mul_basis_sparse(f, prods, n, i, prods[j * n + k], rhs);
        if (lhs != rhs)
          return AxiomReport::fail("associativity", {i, j, k}, "(b_i b_j) b_k != b_i (b_j b_k)");
      }
    }
  }
  const auto unit_terms = to_terms(d.unit);
  for (std::size_t i = 0; i < n; ++i) {
    Vec left(n, 0), right(n, 0);
    mul_sparse_basis(f, prods, n, unit_terms, i, left);
    mul_basis_sparse(f, prods, n, i, unit_terms, right);
    const Vec bi = basis_vector(n, i);
    if (left != bi) return AxiomReport::fail("left unit", {i}, "1 b_i != b_i");
    if (right != bi) return AxiomReport::fail("right unit", {i}, "b_i 1 != b_i");
  }
  return AxiomReport::pass();
}

Algebra::Algebra(detail::Trusted, AlgebraData data)
    : data_(canonicalize(std::move(data))), products_(expand_products(data_)) {}

AlgebraPtr Algebra::validate(AlgebraData data) {
  const auto report = check_algebra_axioms(data);
  if (!report.ok) {
    if (report.axiom == "well-formed") throw InvalidInput("algebra data: " + report.describe());
    throw AxiomFailure("algebra axioms: " + report.describe());
  }
  return std::make_shared<const Algebra>(detail::trusted, std::move(data));
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vec out(dim(), 0);
  for (const auto& t : product_terms(i, j)) out[t.index] = t.coeff;
  return out;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  const Field& f = field();
  const std::size_t n = dim();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Elem c = f.mul(x[i], y[j]);
      for (const auto& t : products_[i * n + j]) out[t.index] = f.fma(out[t.index], c, t.coeff);
    }
  }
  return out;
}

Matrix Algebra::left_mult(const Vec& x) const {
  const std::size_t n = dim();
  Matrix m(field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec col = multiply(x, basis_vector(n, j));
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
  const std::size_t n = dim();
  Matrix m(field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec col = multiply(basis_vector(n, j), x);
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (basis_product(i, j) != basis_product(j, i)) return false;
  return true;
}

AxiomReport check_module_axioms(const Algebra& a, const std::vector<Matrix>& action) {
  const std::size_t n = a.dim();
  if (action.size() != n) return AxiomReport::fail("well-formed", {}, "need one action matrix per basis element");
  if (n == 0) return AxiomReport::pass();
  const std::size_t d = action[0].rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (action[i].rows() != d || action[i].cols() != d)
      return AxiomReport::fail("well-formed", {i}, "action matrices must all be d x d");
    if (action[i].field() != a.field() && d > 0)
      return AxiomReport::fail("well-formed", {i}, "action matrix over a different field");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lhs = action[i] * action[j];
      Matrix rhs(a.field(), d, d);
      for (const auto& t : a.product_terms(i, j)) add_scaled(rhs, action[t.index], t.coeff);
      if (lhs != rhs) return AxiomReport::fail("action multiplicativity", {i, j}, "rho(b_i) rho(b_j) != rho(b_i b_j)");
    }
  }
  Matrix unit(a.field(), d, d);
  for (std::size_t i = 0; i < n; ++i) add_scaled(unit, action[i], a.unit()[i]);
  if (unit != Matrix::identity(a.field(), d)) return AxiomReport::fail("action unit", {}, "rho(1) != identity");
  return AxiomReport::pass();
}

Module::Module(detail::Trusted, AlgebraPtr algebra, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(action.empty() ? 0 : action[0].rows()), action_(std::move(action)) {}

Module Module::validate(AlgebraPtr algebra, std::vector<Matrix> action) {
  const auto report = check_module_axioms(*algebra, action);
  if (!report.ok) {
    if (report.axiom == "well-formed") throw InvalidInput("module data: " + report.describe());
    throw AxiomFailure("module axioms: " + report.describe());
  }
  return Module(detail::trusted, std::move(algebra), std::move(action));
}

Matrix Module::act(const Vec& x) const {
  Matrix m(field(), dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i) add_scaled(m, action_[i], x[i]);
  return m;
}

Ideal Ideal::validate(AlgebraPtr algebra, Subspace space) {
  if (space.ambient_dim() != algebra->dim()) throw InvalidInput("ideal ambient dimension mismatch");
  if (!is_two_sided_ideal(*algebra, space)) throw InvalidInput("subspace is not a two-sided ideal");
  return Ideal(detail::trusted, std::move(algebra), std::move(space));
}

Subspace left_span(const Algebra& a, const Subspace& s) {
  Subspace out(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& v : s.basis()) {
      out.insert(a.multiply(basis_vector(a.dim(), i), v));
      if (out.is_whole()) return out;
    }
  return out;
}

Subspace right_span(const Algebra& a, const Subspace& s) {
  Subspace out(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& v : s.basis()) {
      out.insert(a.multiply(v, basis_vector(a.dim(), i)));
      if (out.is_whole()) return out;
    }
  return out;
}

bool is_left_ideal(const Algebra& a, const Subspace& s) { return s.contains(left_span(a, s)); }
bool is_right_ideal(const Algebra& a, const Subspace& s) { return s.contains(right_span(a, s)); }
bool is_two_sided_ideal(const Algebra& a, const Subspace& s) { return is_left_ideal(a, s) && is_right_ideal(a, s); }

Subspace ideal_closure(const Algebra& a, const Subspace& s) {
  // A s A contains s because the algebra is unital.
  return right_span(a, left_span(a, s));
}

std::vector<std::string> subspace_labels(const std::vector<std::string>& ambient, const Subspace& span,
                                         const std::string& fallback_prefix) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < span.dim(); ++r) {
    const Vec& v = span.basis()[r];
    const auto nonzero = std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (nonzero == 1 && v[span.pivots()[r]] == 1)
      out.push_back(ambient[span.pivots()[r]]);
    else
      out.push_back(fallback_prefix + std::to_string(r));
  }
  return out;
}

Subalgebra make_subalgebra(AlgebraPtr ambient, const Subspace& span) {
  const Algebra& a = *ambient;
  if (span.ambient_dim() != a.dim()) throw InvalidInput("subalgebra ambient dimension mismatch");
  if (!span.contains(a.unit())) throw InvalidInput("subspace does not contain the unit");
  const std::size_t m = span.dim();
  AlgebraData d;
  d.field = a.field();
  d.dim = m;
  d.labels = subspace_labels(a.labels(), span, "k");
  d.unit = span.coordinates(a.unit());
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const Vec prod = a.multiply(span.basis()[x], span.basis()[y]);
      if (!span.contains(prod)) throw InvalidInput("subspace is not closed under multiplication");
      const Vec c = span.coordinates(prod);
      for (std::size_t z = 0; z < m; ++z)
        if (c[z] != 0) d.structconst.push_back({x, y, z, c[z]});
    }
  }
  auto sub = std::make_shared<const Algebra>(detail::trusted, std::move(d));
  return Subalgebra{std::move(ambient), span, std::move(sub)};
}

Module regular_module(AlgebraPtr a) {
  std::vector<Matrix> action;
  action.reserve(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(a->left_mult(basis_vector(a->dim(), i)));
  return Module(detail::trusted, std::move(a), std::move(action));
}

Ideal annihilator(const Module& m) {
  const std::size_t n = m.algebra().dim();
  const std::size_t d = m.dim();
  // Column i is rho(b_i) flattened; the kernel is the annihilator.
  Matrix flat(m.field(), d * d, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& data = m.action(i).data();
    for (std::size_t e = 0; e < d * d; ++e) flat(e, i) = data[e];
  }
  Subspace s = Subspace::span(m.field(), n, kernel(flat));
  return Ideal(detail::trusted, m.algebra_ptr(), std::move(s));
}

Ideal intersect_subspace(const Ideal& ideal, const Subalgebra& sub) {
  const Subspace both = ideal.space().intersect(sub.span);
  Subspace local(sub.algebra->field(), sub.algebra->dim());
  for (const auto& v : both.basis()) local.insert(sub.to_local(v));
  return Ideal(detail::trusted, sub.algebra, std::move(local));
}

Ideal intersect_subspace(const Ideal& ideal, const Subspace& k_span) {
  return intersect_subspace(ideal, make_subalgebra(ideal.algebra_ptr(), k_span));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.algebra_ptr() != b.algebra_ptr() && !(a.algebra().data().structconst == b.algebra().data().structconst))
    throw InvalidInput("ideals live in different algebras");
  return Ideal(detail::trusted, a.algebra_ptr(), a.space().sum(b.space()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (a.algebra_ptr() != b.algebra_ptr() && !(a.algebra().data().structconst == b.algebra().data().structconst))
    throw InvalidInput("ideals live in different algebras");
  const Algebra& alg = a.algebra();
  Subspace s(alg.field(), alg.dim());
  for (const auto& x : a.space().basis())
    for (const auto& y : b.space().basis()) s.insert(alg.multiply(x, y));
  return Ideal(detail::trusted, a.algebra_ptr(), ideal_closure(alg, s));
}

QuotientAlgebra quotient_algebra(const Ideal& ideal) {
  const Algebra& a = ideal.algebra();
  QuotientMap map(ideal.space());
  const auto& comp = map.complement();
  AlgebraData d;
  d.field = a.field();
  d.dim = comp.size();
  for (auto c : comp) d.labels.push_back(a.labels()[c]);
  d.unit = map.project(a.unit());
  for (std::size_t x = 0; x < comp.size(); ++x)
    for (std::size_t y = 0; y < comp.size(); ++y) {
      const Vec c = map.project(a.basis_product(comp[x], comp[y]));
      for (std::size_t z = 0; z < c.size(); ++z)
        if (c[z] != 0) d.structconst.push_back({x, y, z, c[z]});
    }
  if (d.dim == 0) return {nullptr, std::move(map)};
  return {std::make_shared<const Algebra>(detail::trusted, std::move(d)), std::move(map)};
}

}  // namespace hopfcert
