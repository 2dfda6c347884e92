#include "ocagen/gf2poly.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "ocagen/error.h"

namespace ocagen {

std::size_t Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is -infinity");
  return value_;
}

std::string Degree::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("-inf");
}

Poly::Poly(Word low_word) {
  if (low_word != 0) words_.push_back(low_word);
}

Poly Poly::monomial(std::size_t power) {
  Poly p;
  p.set_coeff(power, true);
  return p;
}

Poly Poly::from_words(std::span<const Word> words) {
  Poly p;
  p.words_.assign(words.begin(), words.end());
  p.trim();
  return p;
}

Degree Poly::degree() const noexcept {
  if (words_.empty()) return Degree::neg_infinity();
  const std::size_t top = words_.size() - 1;
  return Degree(top * kWordBits + (kWordBits - 1 - std::countl_zero(words_[top])));
}

bool Poly::coeff(std::size_t power) const noexcept {
  const std::size_t w = power / kWordBits;
  if (w >= words_.size()) return false;
  return (words_[w] >> (power % kWordBits)) & 1U;
}

void Poly::set_coeff(std::size_t power, bool value) {
  if (coeff(power) != value) flip_coeff(power);
}

void Poly::flip_coeff(std::size_t power) {
  const std::size_t w = power / kWordBits;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= Word{1} << (power % kWordBits);
  trim();
}

Poly& Poly::operator^=(const Poly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

Poly& Poly::operator<<=(std::size_t shift) {
  if (words_.empty() || shift == 0) return *this;
  const std::size_t word_shift = shift / kWordBits;
  const unsigned bit_shift = shift % kWordBits;
  const std::size_t old_size = words_.size();
  words_.resize(old_size + word_shift + 1, 0);
  for (std::size_t i = old_size; i-- > 0;) {
    const Word w = words_[i];
    words_[i] = 0;
    words_[i + word_shift] |= w << bit_shift;
    if (bit_shift != 0) words_[i + word_shift + 1] |= w >> (kWordBits - bit_shift);
  }
  trim();
  return *this;
}

void Poly::add_shifted(const Poly& src, std::size_t shift) {
  if (src.words_.empty()) return;
  const std::size_t word_shift = shift / kWordBits;
  const unsigned bit_shift = shift % kWordBits;
  const std::size_t needed = src.words_.size() + word_shift + (bit_shift != 0 ? 1 : 0);
  if (words_.size() < needed) words_.resize(needed, 0);
  for (std::size_t i = 0; i < src.words_.size(); ++i) {
    const Word w = src.words_[i];
    words_[i + word_shift] ^= w << bit_shift;
    if (bit_shift != 0) words_[i + word_shift + 1] ^= w >> (kWordBits - bit_shift);
  }
  trim();
}

void Poly::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

namespace {

// Carry-less product of two words, split into (low, high) halves.
std::pair<Poly::Word, Poly::Word> clmul_word(Poly::Word a, Poly::Word b) noexcept {
  Poly::Word lo = 0;
  Poly::Word hi = 0;
  if (std::popcount(a) < std::popcount(b)) std::swap(a, b);
  while (b != 0) {
    const int t = std::countr_zero(b);
    lo ^= a << t;
    if (t != 0) hi ^= a >> (Poly::kWordBits - t);
    b &= b - 1;
  }
  return {lo, hi};
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.words_.size() == 1 && b.words_.size() == 1) {
    const auto [lo, hi] = clmul_word(a.words_[0], b.words_[0]);
    const Poly::Word parts[2] = {lo, hi};
    return Poly::from_words(parts);
  }
  Poly result;
  result.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      const auto [lo, hi] = clmul_word(a.words_[i], b.words_[j]);
      result.words_[i + j] ^= lo;
      result.words_[i + j + 1] ^= hi;
    }
  }
  result.trim();
  return result;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
  return std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Poly::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Word w : words_) {
    h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }

Poly mul(const Poly& a, const Poly& b) { return a * b; }

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  const std::size_t db = b.degree().value();
  if (a.words().size() <= 1 && b.words().size() == 1) {
    Poly::Word r = a.low_word();
    const Poly::Word d = b.low_word();
    Poly::Word q = 0;
    while (r != 0) {
      const int dr = static_cast<int>(Poly::kWordBits) - 1 - std::countl_zero(r);
      if (dr < static_cast<int>(db)) break;
      const int shift = dr - static_cast<int>(db);
      q |= Poly::Word{1} << shift;
      r ^= d << shift;
    }
    return {Poly(q), Poly(r)};
  }
  DivMod out{Poly(), a};
  while (out.remainder.degree() >= b.degree()) {
    const std::size_t shift = out.remainder.degree().value() - db;
    out.quotient.flip_coeff(shift);
    out.remainder.add_shifted(b, shift);
  }
  return out;
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(Errc::undefined_gcd, "gcd(0, 0) is undefined");
  }
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool constant_term(const Poly& p) noexcept { return p.coeff(0); }

bool in_unit_constant_set(const Poly& p, std::size_t n) noexcept {
  return p.degree() == Degree(n) && constant_term(p);
}

namespace {

class SymbolicParser {
 public:
  explicit SymbolicParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly result;
    skip_space();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty polynomial");
    for (;;) {
      const Term term = parse_term();
      if (term.nonzero) result.flip_coeff(term.power);
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') throw ParseError(pos_, "expected '+'");
      ++pos_;
      skip_space();
    }
    return result;
  }

 private:
  struct Term {
    bool nonzero;
    std::size_t power;
  };

  Term parse_term() {
    if (pos_ == text_.size()) throw ParseError(pos_, "expected a term");
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError(pos_, "coefficients must be 0 or 1");
      }
      return {c == '1', 0};
    }
    if (c != 'x' && c != 'X') throw ParseError(pos_, "unexpected character");
    ++pos_;
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != '^') return {true, 1};
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    std::size_t power = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      power = power * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (power > (std::size_t{1} << 24)) throw ParseError(start, "exponent too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected exponent");
    return {true, power};
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Poly parse_hex(std::string_view text, std::size_t begin) {
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw ParseError(begin, "expected hex digits");
  std::vector<Poly::Word> words((end - begin + 15) / 16, 0);
  for (std::size_t i = begin; i < end; ++i) {
    const int v = hex_value(text[i]);
    if (v < 0) throw ParseError(i, "invalid hex digit");
    const std::size_t nibble = end - 1 - i;
    words[nibble / 16] |= static_cast<Poly::Word>(v) << (4 * (nibble % 16));
  }
  return Poly::from_words(words);
}

}  // namespace

Poly parse_poly(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos + 1 < text.size() && text[pos] == '0' && (text[pos + 1] == 'x' || text[pos + 1] == 'X')) {
    return parse_hex(text, pos + 2);
  }
  return SymbolicParser(text).parse();
}

std::string format_poly(const Poly& p, PolyStyle style) {
  if (style == PolyStyle::hex) {
    static constexpr char kDigits[] = "0123456789abcdef";
    if (p.is_zero()) return "0x0";
    std::string out = "0x";
    const auto words = p.words();
    bool leading = true;
    for (std::size_t w = words.size(); w-- > 0;) {
      for (int nib = 15; nib >= 0; --nib) {
        const unsigned v = (words[w] >> (4 * nib)) & 0xF;
        if (leading && v == 0) continue;
        leading = false;
        out.push_back(kDigits[v]);
      }
    }
    return out;
  }
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.degree().value() + 1; i-- > 0;) {
    if (!p.coeff(i)) continue;
    if (!out.empty()) out.push_back('+');
    if (i == 0) {
      out.push_back('1');
    } else if (i == 1) {
      out.push_back('x');
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << format_poly(p); }

std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.to_string(); }

}  // namespace ocagen
