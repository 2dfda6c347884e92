#include "ocagen/euclid.h"

#include <algorithm>

#include "ocagen/error.h"

namespace ocagen {

bool QuotientSeq::is_well_formed() const {
  if (quotients.empty() || !quotients.back().is_one()) return false;
  return std::none_of(quotients.begin(), quotients.end(),
                      [](const Poly& q) { return q.is_zero(); });
}

std::size_t QuotientSeq::synthesized_degree() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i + 1 < quotients.size(); ++i) {
    total += quotients[i].degree().value();
  }
  return total;
}

EuclidTrace euclid_trace(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) {
    throw Error(Errc::undefined_gcd, "euclid_trace(0, 0) has no gcd");
  }
  EuclidTrace trace;
  trace.remainders = {f, g};
  while (!trace.remainders.back().is_zero()) {
    const std::size_t i = trace.remainders.size() - 2;
    DivMod step = divmod(trace.remainders[i], trace.remainders[i + 1]);
    trace.quotients.push_back(std::move(step.quotient));
    trace.remainders.push_back(std::move(step.remainder));
  }
  trace.gcd = trace.remainders[trace.remainders.size() - 2];
  return trace;
}

PolyPair dilcue(std::span<const Poly> quotients, const PolyPair& seed) {
  if (quotients.empty()) {
    throw Error(Errc::invalid_sequence, "dilcue needs at least one quotient");
  }
  Poly a = seed.f;
  Poly b = seed.g;
  for (const Poly& q : quotients) {
    Poly next = q * a;
    next += b;
    b = std::move(a);
    a = std::move(next);
  }
  return {std::move(a), std::move(b)};
}

QuotientSeq reversed_quotients(const EuclidTrace& trace) {
  return {std::vector<Poly>(trace.quotients.rbegin(), trace.quotients.rend())};
}

PolyPair bijection_flip(const Poly& f, const Poly& g) {
  const EuclidTrace trace = euclid_trace(f, g);
  if (trace.gcd.is_one()) {
    throw Error(Errc::precondition, "bijection_flip expects a non-coprime pair");
  }
  const QuotientSeq seq = reversed_quotients(trace);
  return dilcue(seq, PolyPair{trace.gcd, Poly::one()});
}

}  // namespace ocagen
