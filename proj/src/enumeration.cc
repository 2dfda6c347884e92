#include "ocagen/enumeration.h"

#include <algorithm>

#include "ocagen/error.h"

namespace ocagen {

namespace {

void check_degree(unsigned n) {
  if (n < 1) throw Error(Errc::invalid_arguments, "degree must be at least 1");
}

}  // namespace

std::string IntermediateSeq::to_string() const {
  std::string out;
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

IntermediateSeq IntermediateSeq::parse(std::string_view text) {
  IntermediateSeq m;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw ParseError(i, "expected 0 or 1");
    m.bits.push_back(text[i] == '1');
  }
  return m;
}

bool IntermediateStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  auto& bits = current_.bits;
  for (std::size_t i = bits.size(); i-- > 0;) {
    if (bits[i] == 0) {
      bits[i] = 1;
      std::fill(bits.begin() + static_cast<std::ptrdiff_t>(i) + 1, bits.end(), 0);
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<IntermediateSeq> intermediate_sequences(const Composition& c) {
  if (!c.is_valid()) throw Error(Errc::invalid_arguments, "invalid composition");
  std::vector<IntermediateSeq> out;
  IntermediateStream stream(c.total() - c.size());
  while (stream.next()) out.push_back(stream.current());
  return out;
}

QuotientSeq assemble_quotients(const Composition& c, const IntermediateSeq& m,
                               const ConstWord& w) {
  if (!c.is_valid()) throw Error(Errc::invalid_arguments, "invalid composition");
  const std::size_t k = c.size();
  if (k < 2) {
    throw Error(Errc::invalid_arguments, "quotient sequences need at least two degree parts");
  }
  if (w.size() != k) {
    throw Error(Errc::invalid_arguments, "constant word length " + std::to_string(w.size()) +
                                             " does not match " + std::to_string(k) + " parts");
  }
  if (m.size() != c.total() - k) {
    throw Error(Errc::invalid_arguments,
                "intermediate sequence must have length " + std::to_string(c.total() - k));
  }
  if (!is_valid_word(w)) {
    throw Error(Errc::invalid_arguments, "constant word " + w.to_string() + " is not valid");
  }
  QuotientSeq seq;
  seq.quotients.reserve(k + 1);
  std::size_t cursor = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const unsigned d = c.parts[j];
    Poly q = Poly::monomial(d);
    for (unsigned t = 1; t < d; ++t) {
      if (m.bits[cursor++]) q.flip_coeff(t);
    }
    if (w.bits[j]) q.flip_coeff(0);
    seq.quotients.push_back(std::move(q));
  }
  seq.quotients.push_back(Poly::one());
  return seq;
}

PairStream::PairStream(unsigned n, Options options) : PairStream(n, options, std::nullopt) {}

PairStream PairStream::for_composition(const Composition& c, Options options) {
  if (!c.is_valid() || c.size() < 2) {
    throw Error(Errc::invalid_arguments, "partition composition needs at least two parts");
  }
  return PairStream(c.total(), options, c);
}

PairStream::PairStream(unsigned n, Options options, std::optional<Composition> only)
    : n_(n), options_(options) {
  check_degree(n);
  if (only) {
    single_ = true;
    composition_ = std::move(*only);
    k_ = static_cast<unsigned>(composition_.size());
  }
}

bool PairStream::advance_composition() {
  if (single_) {
    if (active_ || done_) return false;
  } else {
    while (!compositions_ || !compositions_->next()) {
      if (++k_ > n_) return false;
      compositions_.emplace(n_, k_);
    }
    composition_ = compositions_->current();
  }
  words_ = WordStream(k_);
  intermediates_ = IntermediateStream(n_ - k_);
  intermediates_.next();
  load_skeleton();
  return true;
}

// Quotient degrees and intermediate terms for the current composition and
// intermediate sequence; constant terms are filled in per word.
void PairStream::load_skeleton() {
  const auto& bits = intermediates_.current().bits;
  quotients_.quotients.resize(k_ + 1);
  std::size_t cursor = 0;
  for (unsigned j = 0; j < k_; ++j) {
    const unsigned d = composition_.parts[j];
    Poly q = Poly::monomial(d);
    for (unsigned t = 1; t < d; ++t) {
      if (bits[cursor++]) q.flip_coeff(t);
    }
    quotients_.quotients[j] = std::move(q);
  }
  quotients_.quotients[k_] = Poly::one();
  words_.reset();
}

bool PairStream::next() {
  while (!done_) {
    if (active_) {
      if (words_.next()) {
        const auto& w = words_.current().bits;
        for (unsigned j = 0; j < k_; ++j) quotients_.quotients[j].set_coeff(0, w[j] != 0);
        PolyPair pair = dilcue(quotients_, PolyPair{Poly::one(), Poly::zero()});
        record_.f = std::move(pair.f);
        record_.g = std::move(pair.g);
        if (options_.with_provenance) {
          record_.provenance =
              Provenance{composition_, intermediates_.current(), words_.current()};
        }
        return true;
      }
      if (intermediates_.next()) {
        load_skeleton();
        continue;
      }
    }
    if (!advance_composition()) {
      done_ = true;
      active_ = false;
      return false;
    }
    active_ = true;
  }
  return false;
}

std::vector<Composition> partitions(unsigned n) {
  check_degree(n);
  std::vector<Composition> out;
  for (unsigned k = 2; k <= n; ++k) {
    CompositionStream stream(n, k);
    while (stream.next()) out.push_back(stream.current());
  }
  return out;
}

std::vector<Poly> unit_constant_polys(unsigned n) {
  check_degree(n);
  if (n >= Poly::kWordBits) {
    throw Error(Errc::invalid_arguments, "unit_constant_polys supports degrees below 64");
  }
  const Poly::Word top = Poly::Word{1} << n;
  const Poly::Word middle_count = Poly::Word{1} << (n - 1);
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(middle_count));
  for (Poly::Word mid = 0; mid < middle_count; ++mid) out.emplace_back(top | (mid << 1) | 1U);
  return out;
}

std::vector<PolyPair> oracle_pairs(unsigned n) {
  check_degree(n);
  if (n > kOracleMaxDegree) {
    throw Error(Errc::oracle_guard, "oracle refuses degree " + std::to_string(n) +
                                        " (limit " + std::to_string(kOracleMaxDegree) +
                                        ": 4^(n-1) gcd computations)");
  }
  const std::vector<Poly> polys = unit_constant_polys(n);
  std::vector<PolyPair> out;
  for (const Poly& f : polys) {
    for (const Poly& g : polys) {
      if (gcd(f, g).is_one()) out.push_back({f, g});
    }
  }
  return out;
}

Count count_pairs(unsigned n) {
  check_degree(n);
  Count four_pow = pow2(2 * (n - 1));
  return 2 * (four_pow - 1) / 3;
}

Count count_pairs_sum(unsigned n) {
  check_degree(n);
  Count total = 0;
  for (unsigned k = 2; k <= n; ++k) {
    total += pow2(n - k) * binomial(n - 1, k - 1) * count_words(k);
  }
  return total;
}

}  // namespace ocagen
