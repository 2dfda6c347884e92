#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ocagen/count.h"

namespace ocagen {

// Ordered tuple of positive parts. Order is significant.
struct Composition {
  std::vector<unsigned> parts;

  unsigned total() const noexcept;
  std::size_t size() const noexcept { return parts.size(); }
  bool is_valid() const noexcept;
  // "1,2"
  std::string to_string() const;
  static Composition parse(std::string_view text);

  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// k-compositions of n in lexicographic order of parts. Internally this walks
// the (k-1)-subsets of the n-1 separator slots in lexicographic order; slot p
// set means a part boundary after the p-th unit.
class CompositionStream {
 public:
  // Throws Error(Errc::invalid_arguments) unless 1 <= k <= n.
  CompositionStream(unsigned n, unsigned k);

  bool next();
  const Composition& current() const noexcept { return current_; }
  // Box string of the current composition: n-1 characters, '1' for a comma
  // and '0' for a plus.
  std::string boxes() const;

 private:
  void rebuild_parts();

  unsigned n_;
  unsigned k_;
  std::vector<unsigned> separators_;
  Composition current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Composition> compositions(unsigned n, unsigned k);

// C(n-1, k-1).
Count count_compositions(unsigned n, unsigned k);

}  // namespace ocagen
