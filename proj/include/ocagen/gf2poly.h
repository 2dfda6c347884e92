#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace ocagen {

// Degree of a polynomial. The zero polynomial has degree -infinity, which is
// a distinct value ordered below every natural number and never converts to
// an integer.
class Degree {
 public:
  constexpr explicit Degree(std::size_t value) noexcept
      : finite_(true), value_(value) {}

  static constexpr Degree neg_infinity() noexcept { return Degree(); }

  constexpr bool is_finite() const noexcept { return finite_; }

  // Throws std::logic_error for -infinity.
  std::size_t value() const;

  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;

  // -infinity absorbs.
  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    if (!a.finite_ || !b.finite_) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }

  std::string to_string() const;

 private:
  constexpr Degree() noexcept = default;

  // Member order matters for the defaulted comparison: a non-finite degree
  // compares below every finite one.
  bool finite_ = false;
  std::size_t value_ = 0;
};

// A polynomial over GF(2). Bit i of the packed representation is the
// coefficient of X^i. Words are kept trimmed, so the zero polynomial has no
// words and equality is word-wise.
class Poly {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Poly() = default;
  explicit Poly(Word low_word);

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(1); }
  static Poly monomial(std::size_t power);
  static Poly from_words(std::span<const Word> words);

  bool is_zero() const noexcept { return words_.empty(); }
  bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
  Degree degree() const noexcept;

  bool coeff(std::size_t power) const noexcept;
  void set_coeff(std::size_t power, bool value);
  void flip_coeff(std::size_t power);

  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }
  // Low 64 coefficients; the whole polynomial when degree < 64.
  Word low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  Poly& operator^=(const Poly& other);
  Poly& operator+=(const Poly& other) { return *this ^= other; }
  Poly& operator<<=(std::size_t shift);
  // *this += src * X^shift, without materializing the shifted operand.
  void add_shifted(const Poly& src, std::size_t shift);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator^(Poly a, const Poly& b) { return a ^= b; }
  friend Poly operator<<(Poly a, std::size_t shift) { return a <<= shift; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) noexcept;
  // Orders polynomials by their value as binary integers.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  void trim() noexcept;

  boost::container::small_vector<Word, 2> words_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

enum class PolyStyle { hex, symbolic };

// Accepts "0x..." (case-insensitive prefix and digits) or sums of terms such
// as "x^3+x+1"; whitespace between tokens is ignored. Repeated terms cancel.
Poly parse_poly(std::string_view text);
std::string format_poly(const Poly& p, PolyStyle style = PolyStyle::hex);

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
DivMod divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
bool constant_term(const Poly& p) noexcept;

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const Degree& d);

// True iff p has degree exactly n and constant term 1.
bool in_unit_constant_set(const Poly& p, std::size_t n) noexcept;

}  // namespace ocagen

template <>
struct std::hash<ocagen::Poly> {
  std::size_t operator()(const ocagen::Poly& p) const noexcept { return p.hash(); }
};
