#include "hopfcert/field.hpp"

#include <map>
#include <mutex>

#include "hopfcert/poly.hpp"

namespace hopfcert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace detail {

Elem FieldImpl::add_digits(Elem a, Elem b) const {
  Elem out = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t s = (a % p + b % p) % p;
    out += s * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

Elem FieldImpl::neg_digits(Elem a) const {
  Elem out = 0;
  Elem scale = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t d = a % p;
    out += ((p - d) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

Elem FieldImpl::mul_poly(Elem a, Elem b) const {
  std::vector<std::uint64_t> da(k), db(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  // Reduce by the monic modulus from the top down.
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      const std::uint64_t sub = c * modulus[i] % p;
      prod[d - k + i] = (prod[d - k + i] + p - sub) % p;
    }
  }
  Elem out = 0;
  for (std::uint32_t i = k; i-- > 0;) out = out * p + static_cast<Elem>(prod[i]);
  return out;
}

}  // namespace detail

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldImpl>>&
registry() {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldImpl>>
      r;
  return r;
}

Elem slow_pow(const detail::FieldImpl& f, Elem a, std::uint64_t e) {
  auto mul = [&](Elem x, Elem y) -> Elem {
    if (x == 0 || y == 0) return 0;
    if (f.k == 1) return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % f.p);
    return f.mul_poly(x, y);
  };
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> find_modulus(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {0, 1};
  const Field base = Field::create(p, 1);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Elem> coeffs(k + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      coeffs[i] = static_cast<Elem>(c % p);
      c /= p;
    }
    coeffs[k] = 1;
    if (coeffs[0] == 0) continue;  // divisible by x
    if (is_irreducible(Poly(base, coeffs))) return {coeffs.begin(), coeffs.end()};
  }
  throw Error("no irreducible polynomial found");  // unreachable: one exists for every degree
}

std::shared_ptr<const detail::FieldImpl> build_impl(std::uint32_t p, std::uint32_t k,
                                                    std::uint32_t q) {
  auto impl = std::make_shared<detail::FieldImpl>();
  impl->p = p;
  impl->k = k;
  impl->q = q;
  impl->modulus = find_modulus(p, k);

  // Smallest generator of the multiplicative group.
  const auto factors = prime_factors(q - 1);
  for (Elem g = 1; g < q; ++g) {
    bool ok = true;
    for (auto r : factors) {
      if (slow_pow(*impl, g, (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      impl->primitive = g;
      break;
    }
  }
  if (q == 2) impl->primitive = 1;

  if (k > 1 && q <= detail::FieldImpl::kAddTableLimit && p != 2) {
    impl->add_table.resize(static_cast<std::size_t>(q) * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b)
        impl->add_table[static_cast<std::size_t>(a) * q + b] =
            static_cast<std::uint16_t>(impl->add_digits(a, b));
    impl->neg_table.resize(q);
    for (Elem a = 0; a < q; ++a) impl->neg_table[a] = impl->neg_digits(a);
  }
  if (k > 1 && q <= detail::FieldImpl::kLogTableLimit) {
    impl->exp_table.resize(2 * static_cast<std::size_t>(q - 1));
    impl->log_table.assign(q, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      impl->exp_table[i] = x;
      impl->exp_table[i + q - 1] = x;
      impl->log_table[x] = i;
      x = impl->mul_poly(x, impl->primitive);
    }
  }
  return impl;
}

}  // namespace

Field::Field() : Field(create(2, 1)) {}

Field Field::create(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidInput("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    q *= p;
    if (q >= (std::uint64_t{1} << 32))
      throw InvalidInput("field order " + std::to_string(p) + "^" + std::to_string(k) +
                         " does not fit the 32-bit element encoding");
  }
  const auto key = std::make_pair(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(key);
    if (it != registry().end()) return Field(it->second);
  }
  auto impl = build_impl(key.first, key.second, static_cast<std::uint32_t>(q));
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = registry().emplace(key, std::move(impl));
  return Field(it->second);
}

std::string Field::name() const {
  if (impl_->k == 1) return "GF(" + std::to_string(impl_->p) + ")";
  return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k) + ")";
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw InvalidInput("inverse of zero in " + name());
  const auto& f = *impl_;
  if (!f.log_table.empty()) return f.exp_table[(f.q - 1 - f.log_table[a]) % (f.q - 1)];
  return pow(a, f.q - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::from_int(std::int64_t n) const {
  const std::int64_t p = impl_->p;
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> out(impl_->k);
  for (auto& d : out) {
    d = a % impl_->p;
    a /= impl_->p;
  }
  return out;
}

Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != impl_->k)
    throw InvalidInput("field element of " + name() + " needs " + std::to_string(impl_->k) +
                       " coefficients, got " + std::to_string(digits.size()));
  Elem out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= impl_->p)
      throw InvalidInput("coefficient " + std::to_string(digits[i]) + " out of range for " + name());
    out = out * impl_->p + digits[i];
  }
  return out;
}

Elem Field::primitive_element() const { return impl_->primitive; }

}  // namespace hopfcert
