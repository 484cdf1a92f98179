#include "hopfcert/extension.hpp"

#include "hopfcert/poly.hpp"

namespace hopfcert {

FieldEmbedding::FieldEmbedding(Field source, Field target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.characteristic() != target_.characteristic() || target_.degree() % source_.degree() != 0)
    throw InvalidInput(source_.name() + " is not a subfield of " + target_.name());
  if (source_.degree() == 1) {
    generator_image_ = 0;
  } else {
    Vec coeffs(source_.modulus().begin(), source_.modulus().end());
    const auto rs = roots(Poly(target_, coeffs));
    if (rs.empty()) throw Error("source modulus has no root in " + target_.name());
    generator_image_ = rs.front();
  }
  if (source_.order() <= (1u << 16)) {
    table_.reserve(source_.order());
    for (Elem a = 0; a < source_.order(); ++a) {
      Elem out = 0;
      Elem power = 1;
      for (auto d : source_.digits(a)) {
        out = target_.fma(out, d, power);
        power = target_.mul(power, generator_image_);
      }
      table_.push_back(out);
    }
  }
}

Elem FieldEmbedding::operator()(Elem a) const {
  if (!table_.empty()) return table_[a];
  Elem out = 0;
  Elem power = 1;
  for (auto d : source_.digits(a)) {
    out = target_.fma(out, d, power);
    power = target_.mul(power, generator_image_);
  }
  return out;
}

Vec FieldEmbedding::map(const Vec& v) const {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (*this)(v[i]);
  return out;
}

Matrix FieldEmbedding::map(const Matrix& m) const {
  Matrix out(target_, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = (*this)(m(r, c));
  return out;
}

Field extension_of(const Field& f, std::uint32_t m) {
  return Field::create(f.characteristic(), static_cast<std::uint64_t>(f.degree()) * m);
}

}  // namespace hopfcert
