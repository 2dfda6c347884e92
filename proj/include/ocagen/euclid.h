#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ocagen/gf2poly.h"

namespace ocagen {

struct PolyPair {
  Poly f;
  Poly g;

  friend bool operator==(const PolyPair&, const PolyPair&) = default;
  friend auto operator<=>(const PolyPair&, const PolyPair&) = default;
};

// Quotients in dilcuE application order. Sequences built for coprime
// synthesis end with the constant polynomial 1.
struct QuotientSeq {
  std::vector<Poly> quotients;

  // Every quotient nonzero and the last one equal to 1.
  bool is_well_formed() const;
  // Sum of the degrees of all quotients except the trailing unit.
  std::size_t synthesized_degree() const;

  friend bool operator==(const QuotientSeq&, const QuotientSeq&) = default;
};

// Full run of Euclid's algorithm. remainders[0], remainders[1] are the
// inputs and remainders[i] = quotients[i] * remainders[i+1] + remainders[i+2];
// the list always ends with the zero remainder. For a coprime pair the final
// two remainders are therefore (1, 0).
struct EuclidTrace {
  std::vector<Poly> quotients;
  std::vector<Poly> remainders;
  Poly gcd;
};

EuclidTrace euclid_trace(const Poly& f, const Poly& g);

// Runs Euclid backwards: for each quotient q in order, (a, b) <- (q*a + b, a).
PolyPair dilcue(std::span<const Poly> quotients, const PolyPair& seed);
inline PolyPair dilcue(const QuotientSeq& seq, const PolyPair& seed) {
  return dilcue(seq.quotients, seed);
}

// Trace quotients reversed into dilcuE order.
QuotientSeq reversed_quotients(const EuclidTrace& trace);

// Benjamin-Bennett flip: the terminal remainder 0 becomes 1 and the quotient
// chain is replayed, which maps a non-coprime pair to a coprime one. At most
// one of the resulting polynomials can lack a constant term.
PolyPair bijection_flip(const Poly& f, const Poly& g);

}  // namespace ocagen
