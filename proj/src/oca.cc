#include "ocagen/oca.h"

#include <algorithm>
#include <sstream>

#include "ocagen/error.h"

namespace ocagen {

namespace {

std::size_t table_index(std::span<const std::uint8_t> cells) {
  std::size_t idx = 0;
  for (auto c : cells) idx = (idx << 1) | (c ? 1U : 0U);
  return idx;
}

void check_table_diameter(std::size_t d) {
  if (d == 0 || d > LocalRule::kMaxTableDiameter) {
    throw Error(Errc::invalid_arguments,
                "truth tables support diameters 1.." + std::to_string(LocalRule::kMaxTableDiameter));
  }
}

}  // namespace

LocalRule LocalRule::linear(std::vector<std::uint8_t> coeffs) {
  if (coeffs.empty() || !coeffs.front() || !coeffs.back()) {
    throw Error(Errc::invalid_arguments, "linear rules need a_0 = a_{d-1} = 1");
  }
  LocalRule r(coeffs.size(), Kind::linear);
  for (auto& c : coeffs) c = c ? 1 : 0;
  r.coeffs_ = std::move(coeffs);
  return r;
}

LocalRule LocalRule::general(std::size_t diameter, std::vector<std::uint8_t> truth_table) {
  check_table_diameter(diameter);
  if (truth_table.size() != (std::size_t{1} << diameter)) {
    throw Error(Errc::invalid_arguments, "truth table must have 2^d entries");
  }
  LocalRule r(diameter, Kind::general);
  for (auto& v : truth_table) v = v ? 1 : 0;
  r.table_ = std::move(truth_table);
  return r;
}

LocalRule LocalRule::bipermutive(std::size_t diameter, std::span<const std::uint8_t> center) {
  check_table_diameter(diameter);
  if (diameter < 2 || center.size() != (std::size_t{1} << (diameter - 2))) {
    throw Error(Errc::invalid_arguments, "center function must have 2^(d-2) entries, d >= 2");
  }
  std::vector<std::uint8_t> table(std::size_t{1} << diameter);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    const unsigned left = (idx >> (diameter - 1)) & 1U;
    const unsigned right = idx & 1U;
    const std::size_t middle = (idx >> 1) & ((std::size_t{1} << (diameter - 2)) - 1);
    table[idx] = static_cast<std::uint8_t>(left ^ (center[middle] ? 1U : 0U) ^ right);
  }
  return general(diameter, std::move(table));
}

bool LocalRule::evaluate(std::span<const std::uint8_t> neighborhood) const {
  if (neighborhood.size() != diameter_) {
    throw Error(Errc::invalid_length, "neighborhood size does not match the diameter");
  }
  if (kind_ == Kind::general) return table_[table_index(neighborhood)] != 0;
  unsigned acc = 0;
  for (std::size_t i = 0; i < diameter_; ++i) acc ^= coeffs_[i] & (neighborhood[i] ? 1U : 0U);
  return acc != 0;
}

std::vector<std::uint8_t> LocalRule::truth_table() const {
  if (kind_ == Kind::general) return table_;
  check_table_diameter(diameter_);
  std::vector<std::uint8_t> table(std::size_t{1} << diameter_);
  std::vector<std::uint8_t> cells(diameter_);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    for (std::size_t i = 0; i < diameter_; ++i) cells[i] = (idx >> (diameter_ - 1 - i)) & 1U;
    table[idx] = evaluate(cells) ? 1 : 0;
  }
  return table;
}

LatinSquare::LatinSquare(std::size_t order, std::vector<std::uint32_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) {
    throw Error(Errc::invalid_arguments, "square needs order^2 entries");
  }
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<std::uint32_t> entries;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(Errc::invalid_arguments, "square must be N x N");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return LatinSquare(rows.size(), std::move(entries));
}

LocalRule rule_from_poly(const Poly& p) {
  if (p.is_zero() || p.degree() < Degree(1) || !constant_term(p)) {
    throw Error(Errc::invalid_polynomial,
                "rule_from_poly needs degree >= 1 and constant term 1, got " + format_poly(p));
  }
  const std::size_t n = p.degree().value();
  std::vector<std::uint8_t> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) coeffs[i] = p.coeff(i) ? 1 : 0;
  return LocalRule::linear(std::move(coeffs));
}

Poly poly_from_rule(const LocalRule& r) {
  if (r.kind() != LocalRule::Kind::linear) {
    throw Error(Errc::unsupported_rule, "only linear rules map to polynomials");
  }
  Poly p;
  const auto& coeffs = r.linear_coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i]) p.flip_coeff(i);
  }
  return p;
}

std::vector<std::uint8_t> ca_global_map(const LocalRule& r, std::span<const std::uint8_t> input) {
  const std::size_t d = r.diameter();
  if (input.size() < d) {
    throw Error(Errc::invalid_length, "CA input length " + std::to_string(input.size()) +
                                          " is shorter than the diameter " + std::to_string(d));
  }
  std::vector<std::uint8_t> out(input.size() - d + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.evaluate(input.subspan(i, d)) ? 1 : 0;
  return out;
}

bool is_bipermutive(const LocalRule& r) {
  const std::size_t d = r.diameter();
  const auto table = r.truth_table();
  const std::size_t left = std::size_t{1} << (d - 1);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if (table[idx] == table[idx ^ left]) return false;
    if (table[idx] == table[idx ^ 1U]) return false;
  }
  return true;
}

LatinSquare latin_square(const LocalRule& r) {
  const std::size_t d = r.diameter();
  if (d < 2 || d > kMaxSquareDiameter) {
    throw Error(Errc::invalid_arguments,
                "latin squares need diameter 2.." + std::to_string(kMaxSquareDiameter));
  }
  if (!is_bipermutive(r)) {
    throw Error(Errc::not_a_latin_square, "rule is not bipermutive");
  }
  const std::size_t block = d - 1;
  const std::size_t order = std::size_t{1} << block;
  std::vector<std::uint32_t> entries(order * order);
  std::vector<std::uint8_t> input(2 * block);
  for (std::size_t row = 0; row < order; ++row) {
    for (std::size_t col = 0; col < order; ++col) {
      for (std::size_t t = 0; t < block; ++t) {
        input[t] = (row >> (block - 1 - t)) & 1U;
        input[block + t] = (col >> (block - 1 - t)) & 1U;
      }
      const auto out = ca_global_map(r, input);
      std::uint32_t value = 0;
      for (auto bit : out) value = (value << 1) | bit;
      entries[row * order + col] = value;
    }
  }
  return LatinSquare(order, std::move(entries));
}

bool is_latin(const LatinSquare& square) {
  const std::size_t n = square.order();
  std::vector<std::uint8_t> seen(n);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t v = pass == 0 ? square.at(i, j) : square.at(j, i);
        if (v >= n || seen[v]) return false;
        seen[v] = 1;
      }
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) {
    throw Error(Errc::invalid_arguments, "orthogonality needs squares of equal order");
  }
  const std::size_t n = a.order();
  std::vector<std::uint8_t> seen(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const std::uint32_t x = a.entries()[i];
    const std::uint32_t y = b.entries()[i];
    if (x >= n || y >= n) return false;
    auto& slot = seen[x * n + y];
    if (slot) return false;
    slot = 1;
  }
  return true;
}

nlohmann::json to_json(const LatinSquare& square) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < square.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < square.order(); ++j) row.push_back(square.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_grid(const LatinSquare& square) {
  const std::size_t width = std::to_string(square.order() == 0 ? 0 : square.order() - 1).size();
  std::ostringstream out;
  for (std::size_t i = 0; i < square.order(); ++i) {
    for (std::size_t j = 0; j < square.order(); ++j) {
      const std::string cell = std::to_string(square.at(i, j));
      if (j != 0) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ocagen
