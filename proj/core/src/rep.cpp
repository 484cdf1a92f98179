#include <algorithm>
#include <numeric>

#include "hopfcert/error.hpp"
#include "hopfcert/rep.hpp"
#include "hopfcert/rng.hpp"

namespace hopfcert {

namespace {

void require_compatible(const Module& v, const Module& w) {
  if (v.algebra_ptr() == w.algebra_ptr()) return;
  const Algebra& a = v.algebra();
  const Algebra& b = w.algebra();
  if (a.dim() != b.dim() || a.field() != b.field() || a.data().structconst != b.data().structconst)
    throw InvalidInput("modules over different algebras");
}

bool invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

}  // namespace

std::vector<Matrix> hom_space(const Module& v, const Module& w) {
  require_compatible(v, w);
  const Field& f = v.field();
  const std::size_t dv = v.dim(), dw = w.dim();
  const std::size_t n = v.actions().size();
  if (dv == 0 || dw == 0) return {};

  // Multi-cyclic spin basis of V: seeds are standard vectors, every other vector is g * parent.
  constexpr std::size_t kSeed = static_cast<std::size_t>(-1);
  Subspace span(f, dv);
  std::vector<Vec> basis;
  std::vector<std::size_t> parent, gen;
  std::size_t seeds = 0;
  std::vector<std::size_t> seed_index;
  for (std::size_t i = 0; i < dv && !span.is_whole(); ++i) {
    Vec e = unit_vector(dv, i);
    if (!span.insert(e)) continue;
    const std::size_t start = basis.size();
    basis.push_back(std::move(e));
    parent.push_back(kSeed);
    gen.push_back(0);
    seed_index.push_back(seeds++);
    for (std::size_t t = start; t < basis.size(); ++t)
      for (std::size_t g = 0; g < n; ++g) {
        Vec u = mat_vec(v.action(g), basis[t]);
        if (!span.insert(u)) continue;
        basis.push_back(std::move(u));
        parent.push_back(t);
        gen.push_back(g);
        seed_index.push_back(kSeed);
      }
  }

  // T(basis[t]) = images[t] * z, where z stacks the unknown images of the seeds.
  const std::size_t unknowns = seeds * dw;
  std::vector<Matrix> images;
  images.reserve(dv);
  for (std::size_t t = 0; t < dv; ++t) {
    if (parent[t] == kSeed) {
      Matrix m(f, dw, unknowns);
      for (std::size_t r = 0; r < dw; ++r) m(r, seed_index[t] * dw + r) = 1;
      images.push_back(std::move(m));
    } else {
      images.push_back(w.action(gen[t]) * images[parent[t]]);
    }
  }
  const Matrix p = Matrix::from_columns(f, basis, dv);
  const Matrix pinv = *inverse(p);

  // Relations: rho_W(g) T(u_t) = T(rho_V(g) u_t) = sum_s c_s T(u_s).
  Subspace equations(f, unknowns);
  for (std::size_t t = 0; t < dv && !equations.is_whole(); ++t)
    for (std::size_t g = 0; g < n && !equations.is_whole(); ++g) {
      const Vec c = mat_vec(pinv, mat_vec(v.action(g), basis[t]));
      Matrix rel = w.action(g) * images[t];
      for (std::size_t s = 0; s < dv; ++s)
        if (c[s] != 0) add_scaled(rel, images[s], f.neg(c[s]));
      for (std::size_t r = 0; r < dw; ++r) equations.insert(rel.row_vec(r));
    }

  std::vector<Matrix> out;
  const Matrix eq = equations.dim() == 0 ? Matrix(f, 0, unknowns) : equations.basis_matrix();
  for (const auto& z : kernel(eq)) {
    Matrix tp(f, dw, dv);
    for (std::size_t t = 0; t < dv; ++t) {
      const Vec col = mat_vec(images[t], z);
      for (std::size_t r = 0; r < dw; ++r) tp(r, t) = col[r];
    }
    out.push_back(tp * pinv);
  }
  return out;
}

std::size_t endomorphism_dim(const Module& v) { return hom_space(v, v).size(); }

std::optional<Matrix> module_iso(const Module& v, const Module& w) {
  require_compatible(v, w);
  if (v.dim() != w.dim()) return std::nullopt;
  const Field& f = v.field();
  if (v.dim() == 0) return Matrix(f, 0, 0);
  const auto hom = hom_space(v, w);
  if (hom.empty()) return std::nullopt;
  for (const auto& t : hom)
    if (invertible(t)) return t;
  const std::size_t h = hom.size();
  std::uint64_t combos = 1;
  bool small = true;
  for (std::size_t i = 0; i < h && small; ++i) {
    combos *= f.order();
    small = combos <= 4096;
  }
  if (small) {
    Vec c(h, 0);
    for (std::uint64_t idx = 1; idx < combos; ++idx) {
      for (std::size_t i = 0; i < h; ++i) {
        if (++c[i] < f.order()) break;
        c[i] = 0;
      }
      Matrix t(f, v.dim(), v.dim());
      for (std::size_t i = 0; i < h; ++i) add_scaled(t, hom[i], c[i]);
      if (invertible(t)) return t;
    }
    return std::nullopt;
  }
  SeededRng rng(0x1507ULL);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix t(f, v.dim(), v.dim());
    for (std::size_t i = 0; i < h; ++i) add_scaled(t, hom[i], static_cast<Elem>(rng.below(f.order())));
    if (invertible(t)) return t;
  }
  return std::nullopt;
}

// ---- scalar extension ----

AlgebraPtr extend_algebra(const Algebra& a, const FieldEmbedding& e) {
  if (a.field() != e.source()) throw InvalidInput("embedding source differs from the algebra's field");
  AlgebraData d = a.data();
  d.field = e.target();
  for (auto& sc : d.structconst) sc.coeff = e(sc.coeff);
  d.unit = e.map(d.unit);
  return std::make_shared<const Algebra>(detail::trusted, std::move(d));
}

HopfPtr extend_hopf(const Hopf& h, const FieldEmbedding& e) {
  if (h.field() != e.source()) throw InvalidInput("embedding source differs from the Hopf algebra's field");
  HopfData d = h.data();
  d.algebra = extend_algebra(h.algebra(), e)->data();
  for (auto& row : d.coproduct) row = e.map(row);
  d.counit = e.map(d.counit);
  for (auto& row : d.antipode) row = e.map(row);
  return std::make_shared<const Hopf>(detail::trusted, std::move(d));
}

Module extend_module(const Module& v, AlgebraPtr target, const FieldEmbedding& e) {
  if (v.field() != e.source() || target->field() != e.target() || target->dim() != v.algebra().dim())
    throw InvalidInput("module extension target does not match");
  std::vector<Matrix> action;
  action.reserve(v.actions().size());
  for (const auto& a : v.actions()) action.push_back(e.map(a));
  return Module(detail::trusted, std::move(target), std::move(action));
}

Subspace extend_subspace(const Subspace& s, const FieldEmbedding& e) {
  Subspace out(e.target(), s.ambient_dim());
  for (const auto& v : s.basis()) out.insert(e.map(v));
  return out;
}

Splitting splitting_extend(AlgebraPtr a, std::uint64_t seed) {
  const Field base = a->field();
  std::uint32_t degree = 1;
  AlgebraPtr cur = a;
  while (true) {
    CompositionSeries series = meataxe_chop(regular_module(cur), seed);
    std::uint64_t e = 1;
    for (const auto& f : series.factors) e = std::lcm(e, static_cast<std::uint64_t>(endomorphism_dim(f.module)));
    if (e == 1) return {degree, cur->field(), cur, std::move(series)};
    const std::uint64_t next = static_cast<std::uint64_t>(degree) * e;
    if (next > std::max<std::size_t>(a->dim(), 1))
      throw BudgetExhausted("splitting extension degree exceeds the algebra dimension");
    degree = static_cast<std::uint32_t>(next);
    cur = extend_algebra(*a, FieldEmbedding(base, extension_of(base, degree)));
  }
}

SimpleDimensions simple_dimensions(AlgebraPtr a, std::uint64_t seed) {
  const Splitting s = splitting_extend(std::move(a), seed);
  SimpleDimensions out;
  out.extension_degree = s.degree;
  out.field = s.field;
  for (const auto& f : s.regular.factors) {
    out.dims.push_back(f.dim());
    out.regular_multiplicities.push_back(f.multiplicity);
  }
  return out;
}

Radical radical(AlgebraPtr a, std::uint64_t seed) {
  const CompositionSeries series = meataxe_chop(regular_module(a), seed);
  Subspace j = Subspace::whole(a->field(), a->dim());
  for (const auto& f : series.factors) j = j.intersect(annihilator(f.module).space());
  Ideal rad(detail::trusted, a, j);
  std::size_t index = 1;
  Ideal power = rad;
  while (!power.space().is_zero()) {
    power = ideal_product(power, rad);
    ++index;
    if (index > a->dim() + 1) throw AxiomFailure("annihilator intersection is not nilpotent");
  }
  return {std::move(rad), index};
}

Module character_module(const Character& chi) {
  const Hopf& h = chi.hopf();
  std::vector<Matrix> action;
  action.reserve(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix m(h.field(), 1, 1);
    m(0, 0) = chi.row()[i];
    action.push_back(std::move(m));
  }
  return Module(detail::trusted, h.algebra_ptr(), std::move(action));
}

Module restrict_module(const Module& v, const Subalgebra& k) {
  if (k.ambient->dim() != v.algebra().dim()) throw InvalidInput("subalgebra of a different algebra");
  std::vector<Matrix> action;
  action.reserve(k.span.dim());
  for (const auto& b : k.span.basis()) action.push_back(v.act(b));
  return Module(detail::trusted, k.algebra, std::move(action));
}

}  // namespace hopfcert
