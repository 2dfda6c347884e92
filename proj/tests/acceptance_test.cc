// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ocagen/compositions.h"
#include "ocagen/const_lang.h"
#include "ocagen/enumeration.h"
#include "ocagen/euclid.h"
#include "ocagen/gf2poly.h"
#include "ocagen/oca.h"
#include "oracles.h"

namespace ocagen {
namespace {

// Pinned thresholds.
constexpr unsigned kA1MaxDegree = 14;
constexpr double kA1StreamSeconds = 300.0;
constexpr long kA1MaxRssGrowthKiB = 64 * 1024;
constexpr unsigned kA2MaxDegree = 10;
constexpr double kA2OracleSeconds = 10.0;
constexpr unsigned kA3MaxExhaustive = 18;
constexpr unsigned kA3MaxRecurrence = 60;
constexpr unsigned kA4MaxN = 16;
constexpr unsigned kA5MaxDegree = 30;
constexpr unsigned kA6MaxDegree = 8;
constexpr unsigned kA7MaxDegree = 8;
constexpr int kA7RandomPairs = 10000;
constexpr std::size_t kA7RandomMaxDegree = 64;
constexpr unsigned kA8MaxDegree = 6;
constexpr unsigned kA9Order = 20;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

long max_rss_kib() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

// A1: stream cardinality equals the closed form for n = 1..14.
void a1(Outcome& o) {
  for (unsigned n = 1; n <= kA1MaxDegree; ++n) {
    const long rss_before = max_rss_kib();
    const auto start = Clock::now();
    std::uint64_t emitted = 0;
    PairStream s(n);
    while (s.next()) ++emitted;
    const double elapsed = seconds_since(start);
    o.require(Count(emitted) == count_pairs(n), "count at n=" + std::to_string(n));
    if (n <= kA2MaxDegree) {
      o.require(emitted == oracle_pairs(n).size(), "oracle count at n=" + std::to_string(n));
    }
    if (n == kA1MaxDegree) {
      const long growth = max_rss_kib() - rss_before;
      o.detail << "n=14: " << emitted << " pairs in " << elapsed << " s, max RSS growth "
               << growth << " KiB; ";
      o.require(elapsed < kA1StreamSeconds, "n=14 stream time");
      o.require(growth < kA1MaxRssGrowthKiB, "n=14 memory growth");
    }
  }
  o.detail << "a_1..a_6 = ";
  for (unsigned n = 1; n <= 6; ++n) o.detail << count_pairs(n) << (n < 6 ? "," : "");
  o.require(count_pairs(6) == 682, "a_6 = 682");
}

// A2: set equality with the gcd-filter oracle for n = 1..10.
void a2(Outcome& o) {
  double oracle_time = 0;
  for (unsigned n = 1; n <= kA2MaxDegree; ++n) {
    std::vector<PolyPair> got;
    PairStream s(n);
    while (s.next()) got.push_back(s.current().pair());
    std::sort(got.begin(), got.end());
    const auto start = Clock::now();
    const auto expected = oracle_pairs(n);
    oracle_time = seconds_since(start);
    o.require(got == expected, "set equality at n=" + std::to_string(n));
    o.require(std::adjacent_find(got.begin(), got.end()) == got.end(),
              "no duplicates at n=" + std::to_string(n));
  }
  o.detail << "oracle n=10 took " << oracle_time << " s";
  o.require(oracle_time < kA2OracleSeconds, "oracle time at n=10");
}

// A3: l_k against exhaustive membership, recurrence and spot values.
void a3(Outcome& o) {
  for (unsigned k = 0; k <= kA3MaxExhaustive; ++k) {
    std::uint64_t accepted = 0;
    std::uint64_t regex_accepted = 0;
    ConstWord w;
    w.bits.assign(k, 0);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      for (unsigned i = 0; i < k; ++i) w.bits[i] = (v >> (k - 1 - i)) & 1U;
      if (is_valid_word(w)) ++accepted;
      if (testing::regex_member(w.to_string())) ++regex_accepted;
    }
    o.require(Count(accepted) == count_words(k), "exhaustive count at k=" + std::to_string(k));
    o.require(accepted == regex_accepted, "regex agreement at k=" + std::to_string(k));
  }
  o.require(count_words(0) == 1 && count_words(1) == 0, "initial values");
  for (unsigned k = 2; k <= kA3MaxRecurrence; ++k) {
    o.require(count_words(k) == count_words(k - 1) + 2 * count_words(k - 2),
              "recurrence at k=" + std::to_string(k));
  }
  o.require(count_words(2) == 2 && count_words(3) == 2 && count_words(4) == 6, "spot values");
  o.detail << "l_60 = " << count_words(60);
}

// A4: composition stream cardinality equals C(n-1, k-1).
void a4(Outcome& o) {
  std::uint64_t streams = 0;
  for (unsigned n = 1; n <= kA4MaxN; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      CompositionStream s(n, k);
      std::uint64_t emitted = 0;
      while (s.next()) {
        o.require(s.current().total() == n && s.current().size() == k && s.current().is_valid(),
                  "composition invariants");
        ++emitted;
      }
      o.require(Count(emitted) == binomial(n - 1, k - 1),
                "cardinality at n=" + std::to_string(n) + " k=" + std::to_string(k));
      ++streams;
    }
  }
  o.detail << streams << " (n,k) streams checked";
}

// A5: sum identity equals the closed form for n <= 30.
void a5(Outcome& o) {
  for (unsigned n = 1; n <= kA5MaxDegree; ++n) {
    const Count closed = 2 * (pow2(2 * (n - 1)) - 1) / 3;
    o.require(count_pairs_sum(n) == count_pairs(n), "sum = closed at n=" + std::to_string(n));
    o.require(count_pairs(n) == closed, "closed form at n=" + std::to_string(n));
  }
  o.detail << "a_30 = " << count_pairs(30);
}

// A6: bijection flip over B_n is injective, coprime, never both constants 0.
void a6(Outcome& o) {
  std::uint64_t total = 0;
  for (unsigned n = 1; n <= kA6MaxDegree; ++n) {
    const auto polys = unit_constant_polys(n);
    std::set<PolyPair> images;
    std::uint64_t sources = 0;
    for (const Poly& f : polys) {
      for (const Poly& g : polys) {
        if (gcd(f, g).is_one()) continue;
        ++sources;
        const PolyPair out = bijection_flip(f, g);
        o.require(gcd(out.f, out.g).is_one(), "coprime output");
        o.require(constant_term(out.f) || constant_term(out.g), "a nonzero constant term");
        images.insert(out);
      }
    }
    o.require(images.size() == sources, "injective at n=" + std::to_string(n));
    total += sources;
  }
  o.detail << total << " non-coprime pairs flipped";
}

// A7: euclid_trace o dilcue and dilcue o euclid_trace round trips.
void a7(Outcome& o) {
  std::uint64_t sequences = 0;
  for (unsigned n = 2; n <= kA7MaxDegree; ++n) {
    for (const Composition& c : partitions(n)) {
      for (const IntermediateSeq& m : intermediate_sequences(c)) {
        for (const ConstWord& w : words_of_length(c.size())) {
          const QuotientSeq seq = assemble_quotients(c, m, w);
          const PolyPair pair = dilcue(seq, PolyPair{Poly::one(), Poly()});
          o.require(reversed_quotients(euclid_trace(pair.f, pair.g)) == seq,
                    "trace reproduces assembled sequence");
          ++sequences;
        }
      }
    }
  }
  std::mt19937_64 rng(20240607);
  int pairs = 0;
  while (pairs < kA7RandomPairs) {
    const std::size_t d = 1 + rng() % kA7RandomMaxDegree;
    const Poly f = testing::random_poly_of_degree(rng, d);
    const Poly g = testing::random_poly_of_degree(rng, d);
    const EuclidTrace t = euclid_trace(f, g);
    if (!t.gcd.is_one()) continue;
    ++pairs;
    o.require(dilcue(reversed_quotients(t), PolyPair{Poly::one(), Poly()}) == PolyPair{f, g},
              "dilcue reproduces random pair");
  }
  o.detail << sequences << " assembled sequences, " << pairs << " random pairs";
}

// A8: orthogonality of the Latin squares iff coprimality, n <= 6.
void a8(Outcome& o) {
  std::uint64_t checked = 0;
  for (unsigned n = 1; n <= kA8MaxDegree; ++n) {
    const auto polys = unit_constant_polys(n);
    std::vector<LatinSquare> squares;
    for (const Poly& p : polys) {
      squares.push_back(latin_square(rule_from_poly(p)));
      o.require(is_latin(squares.back()), "is_latin");
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
      for (std::size_t j = 0; j < polys.size(); ++j) {
        o.require(are_orthogonal(squares[i], squares[j]) == gcd(polys[i], polys[j]).is_one(),
                  "orthogonal iff coprime at n=" + std::to_string(n));
        ++checked;
      }
    }
  }
  o.detail << checked << " ordered pairs";
}

// A9: series coefficients of (1 - X) / (1 - X - 2X^2) by long division.
void a9(Outcome& o) {
  const std::vector<Count> numerator = {1, -1};
  const std::vector<Count> denominator = {1, -1, -2};
  std::vector<Count> remainder(kA9Order + 1, 0);
  std::copy(numerator.begin(), numerator.end(), remainder.begin());
  std::vector<Count> series(kA9Order + 1, 0);
  for (unsigned k = 0; k <= kA9Order; ++k) {
    series[k] = remainder[k] / denominator[0];
    for (std::size_t j = 0; j < denominator.size() && k + j <= kA9Order; ++j) {
      remainder[k + j] -= series[k] * denominator[j];
    }
    o.require(series[k] == count_words(k), "coefficient k=" + std::to_string(k));
  }
  o.detail << "coefficients 0..20 match; l_20 = " << series[kA9Order];
}

// A10: delta is permutative and inverse_delta inverts it.
void a10(Outcome& o) {
  for (bool s : {false, true}) {
    std::set<CtState> images;
    for (CtState st : kAllCtStates) {
      images.insert(delta(st, s));
      o.require(inverse_delta(delta(st, s), s) == st, "inverse_delta o delta = id");
    }
    o.require(images.size() == kAllCtStates.size(), "delta injective");
  }
  o.detail << "6 transitions scanned";
}

}  // namespace
}  // namespace ocagen

int main() {
  using Criterion = std::pair<const char*, std::function<void(ocagen::Outcome&)>>;
  const std::vector<Criterion> criteria = {
      {"A1 counting n=1..14", ocagen::a1},
      {"A2 oracle equivalence n=1..10", ocagen::a2},
      {"A3 constant-word counts", ocagen::a3},
      {"A4 composition counts", ocagen::a4},
      {"A5 sum identity n<=30", ocagen::a5},
      {"A6 bijection flip n<=8", ocagen::a6},
      {"A7 quotient round trips", ocagen::a7},
      {"A8 coprime iff orthogonal n<=6", ocagen::a8},
      {"A9 generating function to order 20", ocagen::a9},
      {"A10 automaton permutativity", ocagen::a10},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    ocagen::Outcome outcome;
    const auto start = ocagen::Clock::now();
    try {
      check(outcome);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail << "exception: " << e.what();
    }
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << " ("
              << ocagen::seconds_since(start) << " s) " << outcome.detail.str() << std::endl;
    if (!outcome.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance failures: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
