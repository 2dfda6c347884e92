#include "ocagen/compositions.h"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "ocagen/error.h"

namespace ocagen {

namespace {

void check_arguments(unsigned n, unsigned k) {
  if (k < 1 || k > n) {
    throw Error(Errc::invalid_arguments, "compositions need 1 <= k <= n, got n=" +
                                             std::to_string(n) + " k=" + std::to_string(k));
  }
}

}  // namespace

unsigned Composition::total() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), 0U);
}

bool Composition::is_valid() const noexcept {
  return !parts.empty() &&
         std::all_of(parts.begin(), parts.end(), [](unsigned p) { return p >= 1; });
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  return out;
}

Composition Composition::parse(std::string_view text) {
  Composition c;
  std::size_t pos = 0;
  for (;;) {
    unsigned value = 0;
    const char* begin = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == begin || value == 0) throw ParseError(pos, "expected a positive part");
    c.parts.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
  return c;
}

CompositionStream::CompositionStream(unsigned n, unsigned k) : n_(n), k_(k) {
  check_arguments(n, k);
  separators_.resize(k - 1);
}

void CompositionStream::rebuild_parts() {
  current_.parts.resize(k_);
  unsigned prev = 0;
  for (unsigned i = 0; i + 1 < k_; ++i) {
    current_.parts[i] = separators_[i] - prev;
    prev = separators_[i];
  }
  current_.parts[k_ - 1] = n_ - prev;
}

bool CompositionStream::next() {
  if (done_) return false;
  const unsigned m = k_ - 1;  // separators chosen from slots 1..n-1
  if (!started_) {
    started_ = true;
    std::iota(separators_.begin(), separators_.end(), 1U);
    rebuild_parts();
    return true;
  }
  for (unsigned i = m; i-- > 0;) {
    if (separators_[i] < n_ - m + i) {
      ++separators_[i];
      for (unsigned j = i + 1; j < m; ++j) separators_[j] = separators_[j - 1] + 1;
      rebuild_parts();
      return true;
    }
  }
  done_ = true;
  return false;
}

std::string CompositionStream::boxes() const {
  std::string out(n_ - 1, '0');
  for (unsigned s : separators_) out[s - 1] = '1';
  return out;
}

std::vector<Composition> compositions(unsigned n, unsigned k) {
  std::vector<Composition> out;
  CompositionStream stream(n, k);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

Count count_compositions(unsigned n, unsigned k) {
  check_arguments(n, k);
  return binomial(n - 1, k - 1);
}

}  // namespace ocagen
