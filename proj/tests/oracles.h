#pragma once

// Test-only reference implementations. None of these share code paths with
// the library routines they check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ocagen/gf2poly.h"

namespace ocagen::testing {

// Dense coefficient vector, index i = coefficient of X^i.
inline std::vector<int> dense(const Poly& p) {
  std::vector<int> c;
  if (p.is_zero()) return c;
  for (std::size_t i = 0; i <= p.degree().value(); ++i) c.push_back(p.coeff(i) ? 1 : 0);
  return c;
}

inline Poly from_dense(const std::vector<int>& c) {
  Poly p;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] % 2) p.flip_coeff(i);
  }
  return p;
}

// Schoolbook product with integer accumulation, reduced mod 2 at the end.
inline Poly schoolbook_mul(const Poly& a, const Poly& b) {
  const auto x = dense(a);
  const auto y = dense(b);
  if (x.empty() || y.empty()) return Poly();
  std::vector<int> z(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) z[i + j] += x[i] * y[j];
  }
  return from_dense(z);
}

// Membership in (0(0+1) + 10*1(0+1))*, matched directly against the regular
// expression rather than through an automaton.
inline bool regex_member(const std::string& w, std::size_t pos = 0) {
  if (pos == w.size()) return true;
  if (w[pos] == '0') return pos + 1 < w.size() && regex_member(w, pos + 2);
  std::size_t j = pos + 1;
  while (j < w.size() && w[j] == '0') ++j;
  if (j >= w.size()) return false;  // no closing 1
  return j + 1 < w.size() && regex_member(w, j + 2);
}

inline std::string bits_of(std::uint64_t value, unsigned length) {
  std::string s(length, '0');
  for (unsigned i = 0; i < length; ++i) {
    if ((value >> (length - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

// Compositions of n into k parts by recursive splitting, lexicographic.
inline void brute_compositions(unsigned n, unsigned k, std::vector<unsigned>& prefix,
                               std::vector<std::vector<unsigned>>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(prefix);
    return;
  }
  for (unsigned first = 1; first <= n; ++first) {
    prefix.push_back(first);
    brute_compositions(n - first, k - 1, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<unsigned>> brute_compositions(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  brute_compositions(n, k, prefix, out);
  return out;
}

// Uniform random polynomial of exact degree d.
inline Poly random_poly_of_degree(std::mt19937_64& rng, std::size_t d) {
  Poly p = Poly::monomial(d);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < d; ++i) {
    if (coin(rng)) p.flip_coeff(i);
  }
  return p;
}

inline Poly random_poly_up_to(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<int> pick(-1, static_cast<int>(max_degree));
  const int d = pick(rng);
  return d < 0 ? Poly() : random_poly_of_degree(rng, static_cast<std::size_t>(d));
}

}  // namespace ocagen::testing
