#include "hopfcert/hopf.hpp"

#include <algorithm>

#include "hopfcert/error.hpp"
#include "hopfcert/rep.hpp"

namespace hopfcert {

namespace {

std::vector<TensorTerm> sparse_tensor(const Vec& dense, std::size_t n) {
  std::vector<TensorTerm> out;
  for (std::size_t idx = 0; idx < dense.size(); ++idx)
    if (dense[idx] != 0)
      out.push_back({static_cast<std::uint32_t>(idx / n), static_cast<std::uint32_t>(idx % n), dense[idx]});
  return out;
}

AxiomReport check_hopf_well_formed(const HopfData& d) {
  const std::size_t n = d.algebra.dim;
  const Field& f = d.algebra.field;
  if (d.coproduct.size() != n) return AxiomReport::fail("well-formed", {}, "coproduct needs one row per basis element");
  for (std::size_t j = 0; j < n; ++j) {
    if (d.coproduct[j].size() != n * n)
      return AxiomReport::fail("well-formed", {j}, "coproduct row must have n^2 entries");
    for (auto e : d.coproduct[j])
      if (!f.contains(e)) return AxiomReport::fail("well-formed", {j}, "coproduct coefficient outside the field");
  }
  if (d.counit.size() != n) return AxiomReport::fail("well-formed", {}, "counit must have n entries");
  for (auto e : d.counit)
    if (!f.contains(e)) return AxiomReport::fail("well-formed", {}, "counit coefficient outside the field");
  if (d.antipode.size() != n) return AxiomReport::fail("well-formed", {}, "antipode needs one row per basis element");
  for (std::size_t j = 0; j < n; ++j) {
    if (d.antipode[j].size() != n) return AxiomReport::fail("well-formed", {j}, "antipode row must have n entries");
    for (auto e : d.antipode[j])
      if (!f.contains(e)) return AxiomReport::fail("well-formed", {j}, "antipode coefficient outside the field");
  }
  return AxiomReport::pass();
}

/// Product in H (x) H of two dense tensors given sparsely.
Vec tensor_product(const Algebra& a, std::span<const TensorTerm> x, std::span<const TensorTerm> y) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  Vec out(n * n, 0);
  for (const auto& s : x)
    for (const auto& t : y) {
      const Elem c = f.mul(s.coeff, t.coeff);
      const auto left = a.product_terms(s.left, t.left);
      const auto right = a.product_terms(s.right, t.right);
      for (const auto& l : left) {
        const Elem cl = f.mul(c, l.coeff);
        for (const auto& r : right) {
          auto& slot = out[static_cast<std::size_t>(l.index) * n + r.index];
          slot = f.fma(slot, cl, r.coeff);
        }
      }
    }
  return out;
}

}  // namespace

Vec tensor_dense(std::span<const TensorTerm> terms, std::size_t n, const Field& f) {
  Vec out(n * n, 0);
  for (const auto& t : terms) {
    auto& slot = out[static_cast<std::size_t>(t.left) * n + t.right];
    slot = f.add(slot, t.coeff);
  }
  return out;
}

AxiomReport check_hopf_axioms(const HopfData& d) {
  if (auto r = check_algebra_axioms(d.algebra); !r.ok) return r;
  if (auto r = check_hopf_well_formed(d); !r.ok) return r;
  const Algebra a(detail::trusted, d.algebra);
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::vector<std::vector<TensorTerm>> delta(n);
  for (std::size_t j = 0; j < n; ++j) delta[j] = sparse_tensor(d.coproduct[j], n);

  // Coassociativity on dense n^3 vectors.
  for (std::size_t j = 0; j < n; ++j) {
    Vec lhs(n * n * n, 0), rhs(n * n * n, 0);
    for (const auto& t : delta[j]) {
      for (const auto& u : delta[t.left]) {
        auto& slot = lhs[(static_cast<std::size_t>(u.left) * n + u.right) * n + t.right];
        slot = f.fma(slot, t.coeff, u.coeff);
      }
      for (const auto& u : delta[t.right]) {
        auto& slot = rhs[(static_cast<std::size_t>(t.left) * n + u.left) * n + u.right];
        slot = f.fma(slot, t.coeff, u.coeff);
      }
    }
    if (lhs != rhs) return AxiomReport::fail("coassociativity", {j}, "(Delta (x) id) Delta != (id (x) Delta) Delta");
  }

  // Counit law.
  for (std::size_t j = 0; j < n; ++j) {
    Vec left(n, 0), right(n, 0);
    for (const auto& t : delta[j]) {
      left[t.right] = f.fma(left[t.right], t.coeff, d.counit[t.left]);
      right[t.left] = f.fma(right[t.left], t.coeff, d.counit[t.right]);
    }
    if (left != basis_vector(n, j)) return AxiomReport::fail("counit", {j}, "(epsilon (x) id) Delta != id");
    if (right != basis_vector(n, j)) return AxiomReport::fail("counit", {j}, "(id (x) epsilon) Delta != id");
  }

  // epsilon is an algebra map.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem lhs = 0;
      for (const auto& t : a.product_terms(i, j)) lhs = f.fma(lhs, t.coeff, d.counit[t.index]);
      if (lhs != f.mul(d.counit[i], d.counit[j]))
        return AxiomReport::fail("counit multiplicativity", {i, j}, "epsilon(b_i b_j) != epsilon(b_i) epsilon(b_j)");
    }
  {
    Elem eu = 0;
    for (std::size_t k = 0; k < n; ++k) eu = f.fma(eu, a.unit()[k], d.counit[k]);
    if (eu != 1) return AxiomReport::fail("counit multiplicativity", {}, "epsilon(1) != 1");
  }

  // Delta is an algebra map.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs(n * n, 0);
      for (const auto& t : a.product_terms(i, j)) axpy(f, lhs, d.coproduct[t.index], t.coeff);
      if (lhs != tensor_product(a, delta[i], delta[j]))
        return AxiomReport::fail("coproduct multiplicativity", {i, j}, "Delta(b_i b_j) != Delta(b_i) Delta(b_j)");
    }
  {
    Vec lhs(n * n, 0), rhs(n * n, 0);
    for (std::size_t k = 0; k < n; ++k) axpy(f, lhs, d.coproduct[k], a.unit()[k]);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) rhs[p * n + q] = f.mul(a.unit()[p], a.unit()[q]);
    if (lhs != rhs) return AxiomReport::fail("coproduct multiplicativity", {}, "Delta(1) != 1 (x) 1");
  }

  // Antipode law on both sides.
  for (std::size_t j = 0; j < n; ++j) {
    Vec left(n, 0), right(n, 0);
    for (const auto& t : delta[j]) {
      const Vec sl = a.multiply(d.antipode[t.left], basis_vector(n, t.right));
      const Vec sr = a.multiply(basis_vector(n, t.left), d.antipode[t.right]);
      axpy(f, left, sl, t.coeff);
      axpy(f, right, sr, t.coeff);
    }
    Vec expected = a.unit();
    scale_in_place(f, expected, d.counit[j]);
    if (left != expected) return AxiomReport::fail("antipode", {j}, "sum S(h_1) h_2 != epsilon(h) 1");
    if (right != expected) return AxiomReport::fail("antipode", {j}, "sum h_1 S(h_2) != epsilon(h) 1");
  }

  if (rank(Matrix::from_columns(f, d.antipode, n)) != n)
    return AxiomReport::fail("antipode bijectivity", {}, "S is not invertible");
  return AxiomReport::pass();
}

Hopf::Hopf(detail::Trusted, HopfData data) : data_(std::move(data)) {
  algebra_ = std::make_shared<const Algebra>(detail::trusted, data_.algebra);
  data_.algebra = algebra_->data();
  const std::size_t n = algebra_->dim();
  coproduct_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) coproduct_.push_back(sparse_tensor(data_.coproduct[j], n));
  antipode_ = Matrix::from_columns(algebra_->field(), data_.antipode, n);
}

HopfPtr Hopf::validate(HopfData data) {
  const auto report = check_hopf_axioms(data);
  if (!report.ok) {
    if (report.axiom == "well-formed") throw InvalidInput("Hopf data: " + report.describe());
    throw AxiomFailure("Hopf axioms: " + report.describe());
  }
  return std::make_shared<const Hopf>(detail::trusted, std::move(data));
}

std::vector<TensorTerm> Hopf::coproduct_of(const Vec& x) const {
  const std::size_t n = dim();
  Vec dense(n * n, 0);
  for (std::size_t j = 0; j < n; ++j)
    if (x[j] != 0) axpy(field(), dense, data_.coproduct[j], x[j]);
  return sparse_tensor(dense, n);
}

Elem Hopf::counit_of(const Vec& x) const {
  Elem e = 0;
  for (std::size_t j = 0; j < dim(); ++j) e = field().fma(e, x[j], data_.counit[j]);
  return e;
}

// ---- characters ----

bool is_multiplicative_row(const Algebra& a, const Vec& row) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  if (row.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem lhs = 0;
      for (const auto& t : a.product_terms(i, j)) lhs = f.fma(lhs, t.coeff, row[t.index]);
      if (lhs != f.mul(row[i], row[j])) return false;
    }
  Elem u = 0;
  for (std::size_t k = 0; k < n; ++k) u = f.fma(u, a.unit()[k], row[k]);
  return u == 1;
}

Character Character::validate(HopfPtr hopf, Vec row) {
  if (row.size() != hopf->dim()) throw InvalidInput("character row has wrong length");
  if (!is_multiplicative_row(hopf->algebra(), row)) throw InvalidInput("row is not an algebra homomorphism");
  return Character(detail::trusted, std::move(hopf), std::move(row));
}

Elem Character::operator()(const Vec& x) const {
  const Field& f = hopf_->field();
  Elem e = 0;
  for (std::size_t j = 0; j < row_.size(); ++j) e = f.fma(e, x[j], row_[j]);
  return e;
}

Character counit_character(HopfPtr hopf) {
  Vec row = hopf->data().counit;
  return Character(detail::trusted, std::move(hopf), std::move(row));
}

Character convolution(const Character& a, const Character& b) {
  const Hopf& h = a.hopf();
  const Field& f = h.field();
  Vec row(h.dim(), 0);
  for (std::size_t j = 0; j < h.dim(); ++j)
    for (const auto& t : h.coproduct(j)) row[j] = f.fma(row[j], t.coeff, f.mul(a.row()[t.left], b.row()[t.right]));
  return Character(detail::trusted, a.hopf_ptr(), std::move(row));
}

Character convolution_inverse(const Character& chi) {
  const Hopf& h = chi.hopf();
  Vec row = apply_left(chi.row(), h.antipode_matrix());
  Character inv(detail::trusted, chi.hopf_ptr(), std::move(row));
  const Vec& eps = h.data().counit;
  if (convolution(chi, inv).row() != eps || convolution(inv, chi).row() != eps)
    throw AxiomFailure("chi o S is not a convolution inverse of chi (corrupted Hopf data)");
  return inv;
}

std::vector<Character> characters(HopfPtr hopf, std::uint64_t seed) {
  const auto series = meataxe_chop(regular_module(hopf->algebra_ptr()), seed);
  std::vector<Character> out;
  for (const auto& factor : series.factors) {
    if (factor.module.dim() != 1) continue;
    Vec row(hopf->dim());
    for (std::size_t i = 0; i < hopf->dim(); ++i) row[i] = factor.module.action(i)(0, 0);
    out.emplace_back(detail::trusted, hopf, std::move(row));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AxiomReport check_algebra_morphism(const Algebra& src, const Algebra& dst, const Matrix& m) {
  if (m.rows() != dst.dim() || m.cols() != src.dim())
    return AxiomReport::fail("well-formed", {}, "morphism matrix has wrong shape");
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      const Vec lhs = mat_vec(m, src.basis_product(i, j));
      const Vec rhs = dst.multiply(m.column(i), m.column(j));
      if (lhs != rhs) return AxiomReport::fail("morphism multiplicativity", {i, j}, "f(b_i b_j) != f(b_i) f(b_j)");
    }
  if (mat_vec(m, src.unit()) != dst.unit()) return AxiomReport::fail("morphism unit", {}, "f(1) != 1");
  return AxiomReport::pass();
}

namespace {

Matrix theta_matrix(const Character& chi) {
  const Hopf& h = chi.hopf();
  const Field& f = h.field();
  const std::size_t n = h.dim();
  Matrix m(f, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& t : h.coproduct(j)) m(t.right, j) = f.fma(m(t.right, j), t.coeff, chi.row()[t.left]);
  return m;
}

void require_same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return;
  if (a.dim() != b.dim() || a.field() != b.field() || a.data().structconst != b.data().structconst ||
      a.unit() != b.unit())
    throw InvalidInput("module and character live over different algebras");
}

}  // namespace

AlgebraMorphism theta_automorphism(const Character& chi) {
  const Hopf& h = chi.hopf();
  Matrix m = theta_matrix(chi);
  if (auto r = check_algebra_morphism(h.algebra(), h.algebra(), m); !r.ok)
    throw AxiomFailure("theta_chi is not an algebra map: " + r.describe());
  const Matrix inv = theta_matrix(convolution_inverse(chi));
  const Matrix id = Matrix::identity(h.field(), h.dim());
  if (m * inv != id || inv * m != id) throw AxiomFailure("theta_{chi o S} does not invert theta_chi");
  return {h.algebra_ptr(), h.algebra_ptr(), std::move(m), true};
}

Module twist_by_automorphism(const AlgebraMorphism& alpha, const Module& v) {
  require_same_algebra(*alpha.source, v.algebra());
  const Field& f = v.field();
  const std::size_t n = v.algebra().dim();
  std::vector<Matrix> action;
  action.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix a(f, v.dim(), v.dim());
    for (std::size_t q = 0; q < n; ++q) add_scaled(a, v.action(q), alpha.matrix(q, j));
    action.push_back(std::move(a));
  }
  return Module(detail::trusted, v.algebra_ptr(), std::move(action));
}

Module twist_module(const Character& chi, const Module& v) {
  const Hopf& h = chi.hopf();
  require_same_algebra(h.algebra(), v.algebra());
  const Field& f = v.field();
  std::vector<Matrix> action;
  action.reserve(h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) {
    Matrix a(f, v.dim(), v.dim());
    for (const auto& t : h.coproduct(j)) add_scaled(a, v.action(t.right), f.mul(t.coeff, chi.row()[t.left]));
    action.push_back(std::move(a));
  }
  return Module(detail::trusted, v.algebra_ptr(), std::move(action));
}

// ---- Hopf subalgebras ----

HopfSubalgebraCheck is_hopf_subalgebra(HopfPtr hopf, const Subspace& span) {
  const Hopf& h = *hopf;
  const std::size_t n = h.dim();
  const Field& f = h.field();
  HopfSubalgebraCheck out;
  if (span.ambient_dim() != n) {
    out.reason = "subspace ambient dimension differs from dim H";
    return out;
  }
  if (!span.contains(h.algebra().unit())) {
    out.reason = "subspace does not contain the unit";
    return out;
  }
  for (const auto& x : span.basis())
    for (const auto& y : span.basis())
      if (!span.contains(h.algebra().multiply(x, y))) {
        out.reason = "subspace is not closed under multiplication";
        return out;
      }
  const auto& piv = span.pivots();
  const std::size_t m = span.dim();
  HopfData local;
  for (const auto& x : span.basis()) {
    const Vec delta = tensor_dense(h.coproduct_of(x), n, f);
    // Delta(x) lies in K (x) K iff every slice along either factor lies in K.
    for (std::size_t p = 0; p < n; ++p) {
      Vec row(delta.begin() + p * n, delta.begin() + (p + 1) * n);
      Vec col(n);
      for (std::size_t q = 0; q < n; ++q) col[q] = delta[q * n + p];
      if (!span.contains(row) || !span.contains(col)) {
        out.reason = "coproduct does not map K into K (x) K";
        return out;
      }
    }
    Vec local_delta(m * m);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t e = 0; e < m; ++e) local_delta[c * m + e] = delta[piv[c] * n + piv[e]];
    local.coproduct.push_back(std::move(local_delta));
    local.counit.push_back(h.counit_of(x));
    const Vec sx = h.antipode(x);
    if (!span.contains(sx)) {
      out.reason = "antipode does not preserve K";
      return out;
    }
    local.antipode.push_back(span.coordinates(sx));
  }
  local.algebra = make_subalgebra(h.algebra_ptr(), span).algebra->data();
  out.ok = true;
  out.sub = HopfSubalgebra{hopf, span, std::make_shared<const Hopf>(detail::trusted, std::move(local))};
  return out;
}

HopfSubalgebra hopf_subalgebra(HopfPtr hopf, const Subspace& span) {
  auto check = is_hopf_subalgebra(std::move(hopf), span);
  if (!check.ok) throw InvalidInput("not a Hopf subalgebra: " + check.reason);
  return std::move(*check.sub);
}

Subspace augmentation_subspace(const HopfSubalgebra& k) {
  const Hopf& local = *k.hopf;
  Matrix eps(local.field(), 1, local.dim());
  for (std::size_t j = 0; j < local.dim(); ++j) eps(0, j) = local.counit(j);
  Subspace out(k.ambient->field(), k.ambient->dim());
  for (const auto& v : kernel(eps)) out.insert(k.to_ambient(v));
  return out;
}

bool is_normal(const HopfSubalgebra& k) {
  const Hopf& h = *k.ambient;
  const Algebra& a = h.algebra();
  const Field& f = h.field();
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& x : k.span.basis()) {
      Vec left(n, 0), right(n, 0);
      for (const auto& t : h.coproduct(i)) {
        const Vec b1 = basis_vector(n, t.left);
        const Vec b2 = basis_vector(n, t.right);
        axpy(f, left, a.multiply(a.multiply(b1, x), h.antipode(b2)), t.coeff);
        axpy(f, right, a.multiply(a.multiply(h.antipode(b1), x), b2), t.coeff);
      }
      if (!k.span.contains(left) || !k.span.contains(right)) return false;
    }
  }
  return true;
}

Ideal hopf_ideal_HKplus(const HopfSubalgebra& k) {
  const Algebra& a = k.ambient->algebra();
  if (!is_normal(k)) throw NotNormal("K is not a normal Hopf subalgebra");
  const Subspace kplus = augmentation_subspace(k);
  const Subspace hk = left_span(a, kplus);
  const Subspace kh = right_span(a, kplus);
  if (hk != kh) throw NotNormal("H K^+ differs from K^+ H");
  if (!is_two_sided_ideal(a, hk)) throw NotNormal("H K^+ is not a two-sided ideal");
  return Ideal(detail::trusted, k.ambient->algebra_ptr(), hk);
}

AxiomReport check_hopf_ideal(const Hopf& h, const Ideal& ideal) {
  const Subspace& s = ideal.space();
  if (!is_two_sided_ideal(h.algebra(), s)) return AxiomReport::fail("ideal", {}, "not a two-sided ideal");
  const QuotientMap pi(s);
  const std::size_t m = pi.dim();
  const Field& f = h.field();
  const std::size_t n = h.dim();
  std::vector<Vec> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = pi.project(basis_vector(n, j));
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vec& x = s.basis()[r];
    if (h.counit_of(x) != 0) return AxiomReport::fail("counit on ideal", {r}, "epsilon(I) != 0");
    if (!s.contains(h.antipode(x))) return AxiomReport::fail("antipode on ideal", {r}, "S(I) not contained in I");
    Vec image(m * m, 0);
    for (const auto& t : h.coproduct_of(x))
      for (std::size_t u = 0; u < m; ++u) {
        const Elem cu = f.mul(t.coeff, images[t.left][u]);
        if (cu == 0) continue;
        for (std::size_t v = 0; v < m; ++v) image[u * m + v] = f.fma(image[u * m + v], cu, images[t.right][v]);
      }
    if (!is_zero(image)) return AxiomReport::fail("coideal", {r}, "Delta(I) not contained in I (x) H + H (x) I");
  }
  return AxiomReport::pass();
}

QuotientHopf quotient_hopf(HopfPtr hptr, const Ideal& ideal) {
  const Hopf& h = *hptr;
  if (ideal.space().is_whole()) throw InvalidInput("quotient by the whole algebra is zero");
  if (auto r = check_hopf_ideal(h, ideal); !r.ok) throw AxiomFailure("not a Hopf ideal: " + r.describe());
  auto qa = quotient_algebra(ideal);
  const QuotientMap& pi = qa.map;
  const auto& comp = pi.complement();
  const std::size_t m = comp.size();
  const std::size_t n = h.dim();
  const Field& f = h.field();
  std::vector<Vec> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = pi.project(basis_vector(n, j));
  HopfData d;
  d.algebra = qa.algebra->data();
  for (auto c : comp) {
    Vec delta(m * m, 0);
    for (const auto& t : h.coproduct(c))
      for (std::size_t u = 0; u < m; ++u) {
        const Elem cu = f.mul(t.coeff, images[t.left][u]);
        if (cu == 0) continue;
        for (std::size_t v = 0; v < m; ++v) delta[u * m + v] = f.fma(delta[u * m + v], cu, images[t.right][v]);
      }
    d.coproduct.push_back(std::move(delta));
    d.counit.push_back(h.counit(c));
    d.antipode.push_back(pi.project(h.antipode(basis_vector(n, c))));
  }
  d.metadata["construct"] = "quotient";
  return {std::make_shared<const Hopf>(detail::trusted, std::move(d)), qa.map};
}

bool commutative_mod_ideal(const Algebra& a, const Subspace& ideal) {
  const Field& f = a.field();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!ideal.contains(vec_sub(f, a.basis_product(i, j), a.basis_product(j, i)))) return false;
  return true;
}

}  // namespace hopfcert
