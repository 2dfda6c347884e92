#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ocagen/count.h"

namespace ocagen {

// Constant terms (dividend, divisor) of a pair of consecutive remainders.
// (0, 0) cannot occur for pairs with unit constant terms and has no
// representation here.
enum class CtState : std::uint8_t { k11, k10, k01 };

inline constexpr std::array<CtState, 3> kAllCtStates = {CtState::k11, CtState::k10,
                                                        CtState::k01};

constexpr bool dividend_bit(CtState s) noexcept { return s != CtState::k01; }
constexpr bool divisor_bit(CtState s) noexcept { return s != CtState::k10; }
std::string to_string(CtState s);

// Start and only accepting state of the inverse automaton.
inline constexpr CtState kWordStart = CtState::k10;
inline constexpr CtState kWordAccept = CtState::k10;

// Forward transition: the constant terms after one Euclid division whose
// quotient has constant term `s`.
CtState delta(CtState state, bool s) noexcept;
// Predecessor under delta; one dilcuE step.
CtState inverse_delta(CtState state, bool s) noexcept;

// Constant terms s_1..s_k of the quotients, in dilcuE order.
struct ConstWord {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::string to_string() const;
  // Throws Error(Errc::parse) on characters other than '0' and '1'.
  static ConstWord parse(std::string_view text);

  friend auto operator<=>(const ConstWord&, const ConstWord&) = default;
};

CtState run_inverse(CtState start, const ConstWord& w) noexcept;
bool is_valid_word(const ConstWord& w) noexcept;

// l_k = (2^k + 2(-1)^k) / 3.
Count count_words(unsigned k);

// All valid words of one length in lexicographic order, produced by
// backtracking that only takes a symbol when the accepting state is still
// reachable in exactly the remaining number of steps.
class WordStream {
 public:
  explicit WordStream(std::size_t length);

  // Advances to the next word. Returns false once exhausted.
  bool next();
  const ConstWord& current() const noexcept { return word_; }
  void reset();

 private:
  bool feasible(CtState from, bool s, std::size_t remaining_after) const noexcept;
  void fill_from(std::size_t pos);

  std::size_t length_;
  // reachable_[r]: bitmask of states that reach the accept state in exactly r
  // inverse steps.
  std::vector<std::uint8_t> reachable_;
  // states_[i]: state before reading symbol i.
  std::vector<CtState> states_;
  ConstWord word_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<ConstWord> words_of_length(std::size_t k);

}  // namespace ocagen
