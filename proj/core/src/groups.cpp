#include "hopfcert/groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "hopfcert/error.hpp"

namespace hopfcert {

AxiomReport check_group_table(const std::vector<std::vector<std::size_t>>& mult) {
  const std::size_t n = mult.size();
  if (n == 0) return AxiomReport::fail("well-formed", {}, "empty group");
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[a].size() != n) return AxiomReport::fail("well-formed", {a}, "table row has wrong length");
    for (std::size_t b = 0; b < n; ++b)
      if (mult[a][b] >= n) return AxiomReport::fail("well-formed", {a, b}, "entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[mult[a][b]]) return AxiomReport::fail("latin square", {a, b}, "repeated entry in row");
      row[mult[a][b]] = true;
      if (col[mult[b][a]]) return AxiomReport::fail("latin square", {b, a}, "repeated entry in column");
      col[mult[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          return AxiomReport::fail("associativity", {a, b, c}, "(ab)c != a(bc)");
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = mult[a][b] == b && mult[b][a] == b;
    if (ok) e = a;
  }
  if (e == n) return AxiomReport::fail("identity", {}, "no two-sided identity");
  return AxiomReport::pass();
}

GroupTable GroupTable::from_table(std::vector<std::vector<std::size_t>> mult, std::vector<std::string> labels,
                                  std::string name) {
  if (auto r = check_group_table(mult); !r.ok) throw InvalidInput("group table: " + r.describe());
  const std::size_t n = mult.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != n) throw InvalidInput("group labels do not match the order");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) throw InvalidInput("duplicate group labels");
  GroupTable g;
  g.order_ = n;
  g.mult_.reserve(n * n);
  for (const auto& row : mult) g.mult_.insert(g.mult_.end(), row.begin(), row.end());
  for (std::size_t a = 0; a < n; ++a)
    if (mult[a][a] == a) g.identity_ = a;
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mult[a][b] == g.identity_) g.inverse_[a] = b;
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  return g;
}

std::size_t GroupTable::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidInput("unknown group element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::vector<std::size_t>> GroupTable::table() const {
  std::vector<std::vector<std::size_t>> t(order_);
  for (std::size_t a = 0; a < order_; ++a) t[a].assign(mult_.begin() + a * order_, mult_.begin() + (a + 1) * order_);
  return t;
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

namespace {

GroupTable cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return GroupTable::from_table(std::move(t), std::move(labels), "C" + std::to_string(n));
}

// r^a s^b has index a + n b; s r s = r^-1.
GroupTable dihedral(std::size_t n) {
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, b = x / n;
    std::string l = a == 0 ? "" : a == 1 ? "r" : "r" + std::to_string(a);
    if (b == 1) l += "s";
    labels.push_back(l.empty() ? "1" : l);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y % n, d = y / n;
      const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      t[x][y] = rot + n * ((b + d) % 2);
    }
  }
  return GroupTable::from_table(std::move(t), std::move(labels), "D" + std::to_string(n));
}

// Permutations in one-line notation (1-based), sorted lexicographically; (s t)(i) = s(t(i)).
GroupTable permutations(std::size_t m, bool even_only, const std::string& name) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) inversions += p[i] > p[j];
    if (!even_only || inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string l;
    for (auto v : q) l += static_cast<char>('1' + v);
    labels.push_back(l);
  }
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> c(m);
      for (std::size_t i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return GroupTable::from_table(std::move(t), std::move(labels), name);
}

// {1, -1, i, -i, j, -j, k, -k}: index 2u + s for unit u in {1, i, j, k} and sign bit s.
GroupTable quaternion() {
  // unit products u v = sign * w
  const std::array<std::array<std::pair<int, int>, 4>, 4> prod{{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const auto [w, s] = prod[x / 2][y / 2];
      t[x][y] = 2 * static_cast<std::size_t>(w) + ((x % 2) ^ (y % 2) ^ static_cast<std::size_t>(s));
    }
  return GroupTable::from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

std::size_t parse_index(const std::string& name, std::size_t prefix) {
  const std::string digits = name.substr(prefix);
  if (digits.empty() || digits.size() > 2 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw InvalidInput("unknown builtin group '" + name + "'");
  return std::stoul(digits);
}

}  // namespace

GroupTable builtin_group(const std::string& name) {
  if (name == "S3") return permutations(3, false, "S3");
  if (name == "S4") return permutations(4, false, "S4");
  if (name == "A4") return permutations(4, true, "A4");
  if (name == "Q8") return quaternion();
  if (!name.empty() && name[0] == 'C') {
    const std::size_t n = parse_index(name, 1);
    if (n < 1 || n > 12) throw InvalidInput("cyclic groups are available for 1 <= n <= 12");
    return cyclic(n);
  }
  if (!name.empty() && name[0] == 'D') {
    const std::size_t n = parse_index(name, 1);
    if (n < 1 || n > 6) throw InvalidInput("dihedral groups are available for 1 <= n <= 6");
    return dihedral(n);
  }
  throw InvalidInput("unknown builtin group '" + name + "'");
}

std::size_t Subgroup::local_index(std::size_t ambient) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), ambient);
  if (it == elements.end() || *it != ambient) return npos;
  return static_cast<std::size_t>(it - elements.begin());
}

bool is_subgroup(const GroupTable& g, const std::vector<std::size_t>& elements) {
  if (elements.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (auto e : elements) {
    if (e >= g.order()) return false;
    in[e] = true;
  }
  for (auto a : elements) {
    if (!in[g.inverse(a)]) return false;
    for (auto b : elements)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

Subgroup make_subgroup(const GroupTable& g, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_subgroup(g, elements)) throw InvalidInput("elements do not form a subgroup");
  const std::size_t m = elements.size();
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(g.labels()[elements[a]]);
    for (std::size_t b = 0; b < m; ++b) {
      const auto prod = g.mul(elements[a], elements[b]);
      t[a][b] = static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), prod) - elements.begin());
    }
  }
  auto table = GroupTable::from_table(std::move(t), std::move(labels));
  return {std::move(elements), std::move(table)};
}

Subgroup generated_subgroup(const GroupTable& g, const std::vector<std::size_t>& generators) {
  std::set<std::size_t> found{g.identity()};
  std::vector<std::size_t> frontier{g.identity()};
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (auto s : generators) {
      if (s >= g.order()) throw InvalidInput("generator index out of range");
      const auto y = g.mul(x, s);
      if (found.insert(y).second) frontier.push_back(y);
    }
  }
  return make_subgroup(g, {found.begin(), found.end()});
}

bool is_normal_subgroup(const GroupTable& g, const Subgroup& n) {
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto h : n.elements)
      if (n.local_index(g.conjugate(x, h)) == Subgroup::npos) return false;
  return true;
}

Subgroup commutator_subgroup(const GroupTable& g) {
  std::vector<std::size_t> gens;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      gens.push_back(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated_subgroup(g, gens);
}

AxiomReport check_matched_pair(const MatchedPair& m) {
  const GroupTable& f = m.f;
  const GroupTable& q = m.q;
  const std::size_t nf = f.order(), nq = q.order();
  if (m.tri.size() != nf * nq || m.tle.size() != nf * nq)
    return AxiomReport::fail("well-formed", {}, "action tables have wrong size");
  for (std::size_t i = 0; i < nf * nq; ++i)
    if (m.tri[i] >= nf || m.tle[i] >= nq) return AxiomReport::fail("well-formed", {i}, "action entry out of range");
  for (std::size_t a = 0; a < nf; ++a)
    if (m.act(q.identity(), a) != a || m.back(q.identity(), a) != q.identity())
      return AxiomReport::fail("identity action", {a}, "the identity of Q must act trivially");
  for (std::size_t x = 0; x < nq; ++x)
    if (m.back(x, f.identity()) != x || m.act(x, f.identity()) != f.identity())
      return AxiomReport::fail("identity action", {x}, "the identity of F must act trivially");
  for (std::size_t x = 0; x < nq; ++x)
    for (std::size_t a = 0; a < nf; ++a)
      for (std::size_t b = 0; b < nf; ++b) {
        if (m.act(x, f.mul(a, b)) != f.mul(m.act(x, a), m.act(m.back(x, a), b)))
          return AxiomReport::fail("matched pair", {x, a, b}, "q |> (f f') != (q |> f)((q <| f) |> f')");
        if (m.back(m.back(x, a), b) != m.back(x, f.mul(a, b)))
          return AxiomReport::fail("matched pair", {x, a, b}, "(q <| f) <| f' != q <| (f f')");
      }
  for (std::size_t x = 0; x < nq; ++x)
    for (std::size_t y = 0; y < nq; ++y)
      for (std::size_t a = 0; a < nf; ++a) {
        if (m.act(q.mul(x, y), a) != m.act(x, m.act(y, a)))
          return AxiomReport::fail("matched pair", {x, y, a}, "(q q') |> f != q |> (q' |> f)");
        if (m.back(q.mul(x, y), a) != q.mul(m.back(x, m.act(y, a)), m.back(y, a)))
          return AxiomReport::fail("matched pair", {x, y, a}, "(q q') <| f != (q <| (q' |> f))(q' <| f)");
      }
  return AxiomReport::pass();
}

MatchedPair matched_pair_from_factorization(const GroupTable& g, const Subgroup& f, const Subgroup& q) {
  const std::size_t nf = f.elements.size(), nq = q.elements.size();
  if (nf * nq != g.order()) throw InvalidInput("|F||Q| differs from |G|: not an exact factorization");
  // Every g is uniquely f q; record the decomposition.
  std::vector<std::size_t> f_part(g.order(), nf), q_part(g.order(), nq);
  for (std::size_t a = 0; a < nf; ++a)
    for (std::size_t x = 0; x < nq; ++x) {
      const auto prod = g.mul(f.elements[a], q.elements[x]);
      if (f_part[prod] != nf) throw InvalidInput("F and Q intersect nontrivially: not an exact factorization");
      f_part[prod] = a;
      q_part[prod] = x;
    }
  MatchedPair m{f.table, q.table, std::vector<std::size_t>(nf * nq), std::vector<std::size_t>(nf * nq)};
  for (std::size_t x = 0; x < nq; ++x)
    for (std::size_t a = 0; a < nf; ++a) {
      const auto prod = g.mul(q.elements[x], f.elements[a]);
      m.tri[x * nf + a] = f_part[prod];
      m.tle[x * nf + a] = q_part[prod];
    }
  if (auto r = check_matched_pair(m); !r.ok) throw AxiomFailure("matched pair: " + r.describe());
  return m;
}

}  // namespace hopfcert
