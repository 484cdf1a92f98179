#pragma once

// Finite fields GF(p^k).
//
// Elements are encoded as integers in [0, p^k): the base-p digits of the code are
// the coefficients of the element in the basis 1, x, ..., x^(k-1) of GF(p)[x]/(f),
// constant term least significant. Zero is 0 and one is 1 in every field.
//
// The modulus f is the smallest monic irreducible of degree k when polynomials are
// ordered by the same base-p code of their lower coefficients, so GF(p^k) is a
// function of (p, k) alone.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hopfcert/error.hpp"

namespace hopfcert {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

namespace detail {

struct FieldImpl {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // length k + 1, monic, constant term first

  // Addition table (q <= kAddTableLimit), row-major q x q.
  std::vector<std::uint16_t> add_table;
  std::vector<Elem> neg_table;
  // Discrete log tables (k > 1 and q <= kLogTableLimit); exp has length 2(q-1).
  std::vector<Elem> exp_table;
  std::vector<std::uint32_t> log_table;
  Elem primitive = 0;

  static constexpr std::uint32_t kAddTableLimit = 1024;
  static constexpr std::uint32_t kLogTableLimit = 1u << 20;

  Elem add_digits(Elem a, Elem b) const;
  Elem neg_digits(Elem a) const;
  Elem mul_poly(Elem a, Elem b) const;
};

}  // namespace detail

class Field {
 public:
  /// GF(2); the default exists so that containers of fields are convenient.
  Field();

  /// Canonical GF(p^k). Throws InvalidInput if p is not prime, k < 1, or p^k >= 2^32.
  static Field create(std::uint64_t p, std::uint64_t k);

  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t degree() const { return impl_->k; }
  std::uint32_t order() const { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
  std::string name() const;

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  bool contains(Elem a) const { return a < impl_->q; }

  Elem add(Elem a, Elem b) const {
    const auto& f = *impl_;
    if (f.k == 1) {
      const std::uint32_t s = a + b;
      return s >= f.p ? s - f.p : s;
    }
    if (f.p == 2) return a ^ b;
    if (!f.add_table.empty()) return f.add_table[static_cast<std::size_t>(a) * f.q + b];
    return f.add_digits(a, b);
  }

  Elem neg(Elem a) const {
    const auto& f = *impl_;
    if (a == 0) return 0;
    if (f.k == 1) return f.p - a;
    if (f.p == 2) return a;
    if (!f.neg_table.empty()) return f.neg_table[a];
    return f.neg_digits(a);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const auto& f = *impl_;
    if (f.k == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % f.p);
    if (!f.log_table.empty()) return f.exp_table[f.log_table[a] + f.log_table[b]];
    return f.mul_poly(a, b);
  }

  /// a + b*c, the inner-loop primitive of every elimination.
  Elem fma(Elem a, Elem b, Elem c) const { return add(a, mul(b, c)); }

  /// Throws InvalidInput on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const;

  /// Coefficients over the prime field, constant term first; length k.
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  Elem frobenius(Elem a) const { return pow(a, impl_->p); }

  /// A generator of the multiplicative group (deterministic: smallest code).
  Elem primitive_element() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k);
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;
};

bool is_prime(std::uint64_t n);

/// Prime factors of n, ascending, without repetition.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace hopfcert
