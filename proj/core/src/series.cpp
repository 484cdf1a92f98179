#include "hopfcert/series.hpp"

#include "hopfcert/error.hpp"

namespace hopfcert {

Subspace local_span(const HopfSubalgebra& upper, const Subspace& lower) {
  Subspace out(upper.span.field(), upper.dim());
  for (const auto& b : lower.basis()) out.insert(upper.to_local(b));
  return out;
}

SeriesCertificate series_check(HopfPtr h, const std::vector<Subspace>& chain) {
  SeriesCertificate cert;
  cert.chain = chain;
  if (chain.empty()) {
    cert.failure = "empty chain";
    return cert;
  }
  for (const auto& s : chain)
    if (s.ambient_dim() != h->dim()) throw InvalidInput("series member has the wrong ambient dimension");

  const Subspace unit_line = Subspace::span(h->field(), h->dim(), {h->algebra().unit()});
  cert.starts_at_unit = chain.front() == unit_line;
  cert.ends_at_whole = chain.back().is_whole();

  cert.members.resize(chain.size());
  cert.inner.resize(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    auto check = is_hopf_subalgebra(h, chain[i]);
    if (check.ok) cert.members[i] = std::move(check.sub);
  }

  for (std::size_t i = 1; i < chain.size(); ++i) {
    SeriesStep step;
    step.index = i;
    step.dim_lower = chain[i - 1].dim();
    step.dim_upper = chain[i].dim();
    [&] {
      if (!cert.members[i]) {
        step.failure = "H_" + std::to_string(i) + " is not a Hopf subalgebra: " + is_hopf_subalgebra(h, chain[i]).reason;
        return;
      }
      step.hopf_subalgebra = true;
      if (!chain[i].contains(chain[i - 1])) {
        step.failure = "H_" + std::to_string(i - 1) + " is not contained in H_" + std::to_string(i);
        return;
      }
      step.contains_lower = true;
      const HopfSubalgebra& upper = *cert.members[i];
      auto lower = is_hopf_subalgebra(upper.hopf, local_span(upper, chain[i - 1]));
      if (!lower.ok) {
        step.failure = "H_" + std::to_string(i - 1) + " is not a Hopf subalgebra: " + lower.reason;
        return;
      }
      cert.inner[i] = std::move(lower.sub);
      if (!is_normal(*cert.inner[i])) {
        step.failure = "H_" + std::to_string(i - 1) + " is not normal in H_" + std::to_string(i);
        return;
      }
      step.normal = true;
      const Ideal ideal = hopf_ideal_HKplus(*cert.inner[i]);
      step.quotient_dim = step.dim_upper - ideal.dim();
      if (!commutative_mod_ideal(upper.hopf->algebra(), ideal.space())) {
        step.failure = "H_" + std::to_string(i) + " / H_" + std::to_string(i) + " H_" + std::to_string(i - 1) +
                       "^+ is not commutative";
        return;
      }
      step.commutative_quotient = true;
      if (step.dim_lower == 0 || step.dim_upper % step.dim_lower != 0) {
        step.failure = "dim H_" + std::to_string(i - 1) + " does not divide dim H_" + std::to_string(i);
        return;
      }
      step.integral = true;
      step.rank = step.dim_upper / step.dim_lower;
    }();
    cert.steps.push_back(std::move(step));
  }

  if (!cert.starts_at_unit) {
    cert.failure = "H_0 is not the line spanned by the unit";
  } else if (!cert.ends_at_whole) {
    cert.failure = "the last member is not H";
  } else {
    for (const auto& s : cert.steps)
      if (!s.ok()) {
        cert.failure = "step " + std::to_string(s.index) + ": " + s.failure;
        break;
      }
  }
  return cert;
}

}  // namespace hopfcert
