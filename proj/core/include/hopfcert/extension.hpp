#pragma once

#include <cstdint>
#include <vector>

#include "hopfcert/field.hpp"
#include "hopfcert/matrix.hpp"

namespace hopfcert {

/// The embedding GF(p^k) -> GF(p^(km)) sending the generator x to the smallest root
/// (by code) of the source modulus in the target field.
class FieldEmbedding {
 public:
  /// Throws InvalidInput unless source is a subfield of target.
  FieldEmbedding(Field source, Field target);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Elem generator_image() const { return generator_image_; }

  Elem operator()(Elem a) const;
  Vec map(const Vec& v) const;
  Matrix map(const Matrix& m) const;

 private:
  Field source_;
  Field target_;
  Elem generator_image_ = 0;
  std::vector<Elem> table_;
};

/// GF(p^(k*m)) for f = GF(p^k).
Field extension_of(const Field& f, std::uint32_t m);

}  // namespace hopfcert
