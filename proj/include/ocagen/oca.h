#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "ocagen/gf2poly.h"

namespace ocagen {

// Local rule f : F_2^d -> F_2 of a cellular automaton. Neighborhood cell x_0
// is the most significant bit of a truth-table index.
class LocalRule {
 public:
  enum class Kind { linear, general };

  static constexpr std::size_t kMaxTableDiameter = 20;

  // f = a_0 x_0 + ... + a_{d-1} x_{d-1}. Requires a_0 = a_{d-1} = 1.
  static LocalRule linear(std::vector<std::uint8_t> coeffs);
  // truth_table.size() must be 2^diameter.
  static LocalRule general(std::size_t diameter, std::vector<std::uint8_t> truth_table);
  // f = x_0 + g(x_1..x_{d-2}) + x_{d-1}; g has 2^(d-2) entries.
  static LocalRule bipermutive(std::size_t diameter, std::span<const std::uint8_t> center);

  std::size_t diameter() const noexcept { return diameter_; }
  Kind kind() const noexcept { return kind_; }
  const std::vector<std::uint8_t>& linear_coeffs() const noexcept { return coeffs_; }

  bool evaluate(std::span<const std::uint8_t> neighborhood) const;
  // Materialized for linear rules on demand; diameter <= kMaxTableDiameter.
  std::vector<std::uint8_t> truth_table() const;

 private:
  LocalRule(std::size_t diameter, Kind kind) : diameter_(diameter), kind_(kind) {}

  std::size_t diameter_;
  Kind kind_;
  std::vector<std::uint8_t> coeffs_;
  std::vector<std::uint8_t> table_;
};

class LatinSquare {
 public:
  LatinSquare(std::size_t order, std::vector<std::uint32_t> entries);
  static LatinSquare from_rows(const std::vector<std::vector<std::uint32_t>>& rows);

  std::size_t order() const noexcept { return order_; }
  std::uint32_t at(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  std::size_t order_;
  std::vector<std::uint32_t> entries_;
};

// Diameter n+1 linear rule with a_i the coefficient of X^i.
LocalRule rule_from_poly(const Poly& p);
Poly poly_from_rule(const LocalRule& r);

// Output cell i is f(input_i, ..., input_{i+d-1}).
std::vector<std::uint8_t> ca_global_map(const LocalRule& r, std::span<const std::uint8_t> input);

bool is_bipermutive(const LocalRule& r);

inline constexpr std::size_t kMaxSquareDiameter = 12;

// Order 2^(d-1) square: row and column indices are the left and right
// (d-1)-cell blocks of the CA input (most significant bit leftmost), and the
// entry is the (d-1)-cell output block.
LatinSquare latin_square(const LocalRule& r);

bool is_latin(const LatinSquare& square);
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

nlohmann::json to_json(const LatinSquare& square);
std::string render_grid(const LatinSquare& square);

}  // namespace ocagen
