#include "ocagen/const_lang.h"

#include "ocagen/error.h"

namespace ocagen {

namespace {

constexpr std::uint8_t mask(CtState s) noexcept {
  return static_cast<std::uint8_t>(1U << static_cast<unsigned>(s));
}

CtState from_bits(bool dividend, bool divisor) {
  if (dividend && divisor) return CtState::k11;
  if (dividend) return CtState::k10;
  if (divisor) return CtState::k01;
  throw std::logic_error("constant-term state (0,0) is unreachable");
}

}  // namespace

std::string to_string(CtState s) {
  return {'(', dividend_bit(s) ? '1' : '0', ',', divisor_bit(s) ? '1' : '0', ')'};
}

CtState delta(CtState state, bool s) noexcept {
  // Rows indexed by state then symbol.
  static constexpr CtState kTable[3][2] = {
      {CtState::k11, CtState::k10},  // (1,1)
      {CtState::k01, CtState::k01},  // (1,0)
      {CtState::k10, CtState::k11},  // (0,1)
  };
  return kTable[static_cast<unsigned>(state)][s ? 1 : 0];
}

CtState inverse_delta(CtState state, bool s) noexcept {
  // (a, b) <- (s*a + b, a) on constant terms.
  const bool a = dividend_bit(state);
  const bool b = divisor_bit(state);
  return from_bits((s && a) != b, a);
}

std::string ConstWord::to_string() const {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

ConstWord ConstWord::parse(std::string_view text) {
  ConstWord w;
  w.bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw ParseError(i, "expected 0 or 1");
    w.bits.push_back(text[i] == '1');
  }
  return w;
}

CtState run_inverse(CtState start, const ConstWord& w) noexcept {
  CtState s = start;
  for (auto bit : w.bits) s = inverse_delta(s, bit != 0);
  return s;
}

bool is_valid_word(const ConstWord& w) noexcept {
  return run_inverse(kWordStart, w) == kWordAccept;
}

Count count_words(unsigned k) {
  Count numerator = pow2(k);
  if (k % 2 == 0) {
    numerator += 2;
  } else {
    numerator -= 2;
  }
  return numerator / 3;
}

WordStream::WordStream(std::size_t length)
    : length_(length), reachable_(length + 1, 0), states_(length + 1, kWordStart) {
  reachable_[0] = mask(kWordAccept);
  for (std::size_t r = 1; r <= length; ++r) {
    for (CtState s : kAllCtStates) {
      for (bool sym : {false, true}) {
        if (reachable_[r - 1] & mask(inverse_delta(s, sym))) reachable_[r] |= mask(s);
      }
    }
  }
  word_.bits.assign(length, 0);
  done_ = !(reachable_[length] & mask(kWordStart));
}

void WordStream::reset() {
  started_ = false;
  done_ = !(reachable_[length_] & mask(kWordStart));
}

bool WordStream::feasible(CtState from, bool s, std::size_t remaining_after) const noexcept {
  return reachable_[remaining_after] & mask(inverse_delta(from, s));
}

void WordStream::fill_from(std::size_t pos) {
  for (std::size_t i = pos; i < length_; ++i) {
    const bool sym = !feasible(states_[i], false, length_ - i - 1);
    word_.bits[i] = sym;
    states_[i + 1] = inverse_delta(states_[i], sym);
  }
}

bool WordStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    states_[0] = kWordStart;
    fill_from(0);
    return true;
  }
  for (std::size_t i = length_; i-- > 0;) {
    if (word_.bits[i] == 0 && feasible(states_[i], true, length_ - i - 1)) {
      word_.bits[i] = 1;
      states_[i + 1] = inverse_delta(states_[i], true);
      fill_from(i + 1);
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<ConstWord> words_of_length(std::size_t k) {
  std::vector<ConstWord> out;
  WordStream stream(k);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

}  // namespace ocagen
