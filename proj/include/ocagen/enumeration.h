#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocagen/compositions.h"
#include "ocagen/const_lang.h"
#include "ocagen/count.h"
#include "ocagen/euclid.h"

namespace ocagen {

// Free coefficients of X^1..X^{d_j - 1} over all quotients, consumed
// left to right across quotients and low powers first within one.
struct IntermediateSeq {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::string to_string() const;
  static IntermediateSeq parse(std::string_view text);

  friend auto operator<=>(const IntermediateSeq&, const IntermediateSeq&) = default;
};

// All bit strings of a fixed length in lexicographic order.
class IntermediateStream {
 public:
  explicit IntermediateStream(std::size_t length) : current_{std::vector<std::uint8_t>(length, 0)} {}

  bool next();
  const IntermediateSeq& current() const noexcept { return current_; }

 private:
  IntermediateSeq current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<IntermediateSeq> intermediate_sequences(const Composition& c);

// Quotient j (dilcuE order) is monic of degree c.parts[j] with constant term
// w.bits[j] and intermediate coefficients taken from m; the unit quotient is
// appended. Throws Error(Errc::invalid_arguments) on size mismatches, k < 2,
// or a word outside the constant-term language.
QuotientSeq assemble_quotients(const Composition& c, const IntermediateSeq& m,
                               const ConstWord& w);

struct Provenance {
  Composition composition;
  IntermediateSeq intermediate;
  ConstWord constants;
};

struct PairRecord {
  Poly f;
  Poly g;
  std::optional<Provenance> provenance;

  PolyPair pair() const { return {f, g}; }
};

struct PairStreamOptions {
  bool with_provenance = false;
};

// Streams every coprime pair of degree-n polynomials with unit constant
// terms exactly once, in constant memory. Order: k ascending, then
// compositions, intermediate sequences and constant words, each
// lexicographic.
class PairStream {
 public:
  using Options = PairStreamOptions;

  explicit PairStream(unsigned n) : PairStream(n, Options{}) {}
  PairStream(unsigned n, Options options);

  // The sub-stream of one composition (k >= 2). Concatenating the
  // sub-streams of partitions(n) in order reproduces PairStream(n).
  static PairStream for_composition(const Composition& c, Options options = {});

  bool next();
  const PairRecord& current() const noexcept { return record_; }
  // Quotient sequence that produced current().
  const QuotientSeq& current_quotients() const noexcept { return quotients_; }

 private:
  PairStream(unsigned n, Options options, std::optional<Composition> only);

  bool advance_composition();
  void load_skeleton();

  unsigned n_;
  Options options_;
  bool single_ = false;
  unsigned k_ = 1;
  std::optional<CompositionStream> compositions_;
  Composition composition_;
  IntermediateStream intermediates_{0};
  WordStream words_{0};
  QuotientSeq quotients_;
  PairRecord record_;
  bool active_ = false;
  bool done_ = false;
};

// Compositions of n with at least two parts, in enumeration order.
std::vector<Composition> partitions(unsigned n);

// Degree-n polynomials with constant term 1, ascending.
std::vector<Poly> unit_constant_polys(unsigned n);

inline constexpr unsigned kOracleMaxDegree = 16;

// Every coprime ordered pair of unit_constant_polys(n), found by gcd
// filtering; sorted ascending. Throws Error(Errc::oracle_guard) above
// kOracleMaxDegree.
std::vector<PolyPair> oracle_pairs(unsigned n);

// 2 (4^{n-1} - 1) / 3.
Count count_pairs(unsigned n);
// Sum over k of 2^{n-k} C(n-1, k-1) l_k.
Count count_pairs_sum(unsigned n);

}  // namespace ocagen
