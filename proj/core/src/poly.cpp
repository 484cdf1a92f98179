#include "hopfcert/poly.hpp"

#include <algorithm>

#include "hopfcert/rng.hpp"

namespace hopfcert {

Poly::Poly(Field field, Vec coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Field& f, std::size_t deg, Elem c) {
  Vec v(deg + 1, 0);
  v[deg] = c;
  return Poly(f, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Elem Poly::eval(Elem a) const {
  Elem r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = field_.fma(coeffs_[i], r, a);
  return r;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  Vec d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())), coeffs_[i]);
  return Poly(field_, std::move(d));
}

Poly Poly::scaled(Elem c) const {
  Vec v = coeffs_;
  scale_in_place(field_, v, c);
  return Poly(field_, std::move(v));
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                      b.coeffs_.rend());
}

Poly operator+(const Poly& a, const Poly& b) {
  Vec v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a[i], b[i]);
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  Vec v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.sub(a[i], b[i]);
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Field& f = a.field_;
  Vec v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = f.fma(v[i + j], a.coeffs_[i], b.coeffs_[j]);
  }
  return Poly(f, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  Vec rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  Vec quot(rem.size() - db, 0);
  const Elem inv_lead = f.inv(b.lead());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = f.mul(rem[i], inv_lead);
    if (c == 0) continue;
    quot[i - db] = c;
    const Elem nc = f.neg(c);
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.fma(rem[i - db + j], nc, b.coeffs()[j]);
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly r = Poly::constant(base.field(), 1) % mod;
  base = base % mod;
  while (e) {
    if (e & 1) r = (r * base) % mod;
    e >>= 1;
    if (e) base = (base * base) % mod;
  }
  return r;
}

Poly pow(const Poly& base, unsigned e) {
  Poly r = Poly::constant(base.field(), 1);
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

namespace {

/// x^(q^times) mod f by repeated q-th powering.
Poly frobenius_power(Poly h, std::uint64_t q, unsigned times, const Poly& f) {
  for (unsigned i = 0; i < times; ++i) h = powmod(h, q, f);
  return h;
}

/// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const std::uint32_t p = F.characteristic();
  // a^(1/p) = a^(q/p) in GF(q).
  const std::uint64_t root_exp = F.order() / p;
  Vec out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(F.pow(f.coeffs()[i], root_exp));
  return Poly(F, std::move(out));
}

void square_free(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.degree() < 1) return;
  const Field& F = f.field();
  const Poly d = f.derivative();
  if (d.is_zero()) {
    square_free(pth_root(f), scale * F.characteristic(), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = (w / y).monic();
    if (fac.degree() > 0) out.emplace_back(fac, i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) square_free(pth_root(c.monic()), scale * F.characteristic(), out);
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
  const Field& F = f.field();
  std::vector<std::pair<Poly, unsigned>> out;
  const Poly x = Poly::x(F);
  Poly h = x % f;
  unsigned i = 1;
  while (f.degree() >= 2 * static_cast<int>(i)) {
    h = powmod(h, F.order(), f);
    Poly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

Poly random_poly(const Field& F, int below_degree, SeededRng& rng) {
  Vec v(static_cast<std::size_t>(below_degree));
  for (auto& c : v) c = static_cast<Elem>(rng.below(F.order()));
  return Poly(F, std::move(v));
}

void equal_degree(const Poly& f, unsigned d, SeededRng& rng, std::vector<Poly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  const Field& F = f.field();
  const std::uint64_t q = F.order();
  for (;;) {
    Poly a = random_poly(F, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly candidate(F);
    if (F.characteristic() == 2) {
      // Absolute trace a + a^2 + ... + a^(2^(kd-1)).
      const unsigned steps = F.degree() * d;
      Poly s = a % f;
      Poly t = s;
      for (unsigned i = 1; i < steps; ++i) {
        s = (s * s) % f;
        t = t + s;
      }
      candidate = t;
    } else {
      // a^((q^d-1)/2) = (a^(1+q+...+q^(d-1)))^((q-1)/2).
      Poly term = a % f;
      Poly norm = term;
      for (unsigned i = 1; i < d; ++i) {
        term = powmod(term, q, f);
        norm = (norm * term) % f;
      }
      candidate = powmod(norm, (q - 1) / 2, f) - Poly::constant(F, 1);
    }
    Poly g = gcd(f, candidate);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly g = f.monic();
  const std::uint64_t q = f.field().order();
  const Poly x = Poly::x(f.field());
  if (frobenius_power(x, q, static_cast<unsigned>(n), g) != x % g) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    const Poly h = frobenius_power(x, q, static_cast<unsigned>(n / r), g);
    if (gcd(g, h - x).degree() != 0) return false;
  }
  return true;
}

std::vector<PolyFactor> factor_poly(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  SeededRng rng(seed);
  std::vector<std::pair<Poly, unsigned>> sqf;
  square_free(f.monic(), 1, sqf);
  std::vector<PolyFactor> out;
  for (auto& [part, mult] : sqf) {
    for (auto& [block, deg] : distinct_degree(part)) {
      std::vector<Poly> pieces;
      equal_degree(block, deg, rng, pieces);
      for (auto& piece : pieces) out.push_back({piece, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.multiplicity < b.multiplicity;
  });
  // Square-free parts of different multiplicity never share factors, but merge defensively.
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().factor == pf.factor)
      merged.back().multiplicity += pf.multiplicity;
    else
      merged.push_back(pf);
  }
  return merged;
}

std::vector<Elem> roots(const Poly& f, std::uint64_t seed) {
  std::vector<Elem> out;
  if (f.degree() < 1) return out;
  const Field& F = f.field();
  for (auto& pf : factor_poly(f, seed))
    if (pf.factor.degree() == 1) out.push_back(F.neg(pf.factor[0]));
  std::sort(out.begin(), out.end());
  return out;
}

Matrix eval_matrix(const Poly& f, const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("polynomial evaluation needs a square matrix");
  const Field& F = m.field();
  Matrix acc(F, m.rows(), m.cols());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) = F.add(acc(d, d), f.coeffs()[i]);
  }
  return acc;
}

Poly char_poly(const Matrix& input) {
  if (!input.is_square()) throw InvalidInput("characteristic polynomial of a non-square matrix");
  const Field& F = input.field();
  const std::size_t n = input.rows();
  Matrix h = input;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      h.swap_rows(piv, j + 1);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Elem inv = F.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      const Elem t = F.mul(h(r, j), inv);
      if (t == 0) continue;
      axpy(F, h.row(r), h.row(j + 1), F.neg(t));
      for (std::size_t c = 0; c < n; ++c) h(c, j + 1) = F.fma(h(c, j + 1), t, h(c, r));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}   (1-based)
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(F, 1));
  const Poly x = Poly::x(F);
  for (std::size_t m = 1; m <= n; ++m) {
    Poly next = (x - Poly::constant(F, h(m - 1, m - 1))) * p[m - 1];
    Elem prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = F.mul(prod, h(i, i - 1));  // h_{i+1,i} in 1-based terms
      if (prod == 0) break;
      const Elem coef = F.mul(h(i - 1, m - 1), prod);
      if (coef != 0) next = next - p[i - 1].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace {

/// Minimal polynomial of v relative to m.
Poly local_min_poly(const Matrix& m, const Vec& v) {
  const Field& F = m.field();
  const std::size_t n = m.rows();
  struct Row {
    Vec w;
    Vec poly;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  Vec cur = v;
  Vec cur_poly{1};
  for (std::size_t step = 0; step <= n; ++step) {
    for (const auto& r : rows) {
      const Elem c = cur[r.pivot];
      if (c == 0) continue;
      axpy(F, cur, r.w, F.neg(c));
      if (cur_poly.size() < r.poly.size()) cur_poly.resize(r.poly.size(), 0);
      axpy(F, std::span<Elem>(cur_poly.data(), r.poly.size()), r.poly, F.neg(c));
    }
    std::size_t piv = 0;
    while (piv < n && cur[piv] == 0) ++piv;
    if (piv == n) return Poly(F, cur_poly).monic();
    const Elem inv = F.inv(cur[piv]);
    scale_in_place(F, cur, inv);
    scale_in_place(F, cur_poly, inv);
    rows.push_back({cur, cur_poly, piv});
    // Next Krylov element: x * (current reduced combination).
    cur = mat_vec(m, rows.back().w);
    cur_poly.assign(rows.back().poly.size() + 1, 0);
    std::copy(rows.back().poly.begin(), rows.back().poly.end(), cur_poly.begin() + 1);
  }
  throw Error("Krylov sequence failed to terminate");  // unreachable
}

}  // namespace

Poly min_poly(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("minimal polynomial of a non-square matrix");
  const Field& F = m.field();
  const std::size_t n = m.rows();
  Poly result = Poly::constant(F, 1);
  // Vectors spanning the Krylov spaces handled so far.
  std::vector<Vec> span_rows;
  auto in_span = [&](const Vec& v) {
    if (span_rows.empty()) return is_zero(v);
    Matrix a = Matrix::from_rows(F, span_rows, n).transpose();
    return solve(a, v).has_value();
  };
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = unit_vector(n, i);
    if (in_span(e)) continue;
    Poly local = local_min_poly(m, e);
    result = lcm(result, local);
    Vec k = e;
    for (int d = 0; d < local.degree(); ++d) {
      span_rows.push_back(k);
      k = mat_vec(m, k);
    }
  }
  return result;
}

CharMinPoly char_min_poly(const Matrix& m) { return {char_poly(m), min_poly(m)}; }

Matrix companion_matrix(const Poly& f) {
  if (f.degree() < 1) throw InvalidInput("companion matrix needs a polynomial of degree >= 1");
  const Poly g = f.monic();
  const Field& F = f.field();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  Matrix c(F, n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = F.neg(g[i]);
  return c;
}

}  // namespace hopfcert
