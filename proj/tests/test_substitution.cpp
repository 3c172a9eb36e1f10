#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "quasibraid/error.hpp"
#include "quasibraid/substitution.hpp"
#include "test_support.hpp"

using namespace quasibraid;
using quasibraid::testing::fib_u64;

namespace {

// Oracle: apply each of the 2^n rule strings from scratch and deduplicate.
std::set<std::string> brute_force_tilings(const std::string& seed, unsigned n) {
  std::set<std::string> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::string w = seed;
    for (unsigned step = 0; step < n; ++step) {
      const bool rule_b = (mask >> step) & 1u;
      std::string next;
      for (char c : w) {
        if (c == 'S') {
          next += 'L';
        } else {
          next += rule_b ? "SL" : "LS";
        }
      }
      w = std::move(next);
    }
    out.insert(w);
  }
  return out;
}

std::vector<std::string> all_valid_by_filter(unsigned n) {
  std::vector<std::string> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::string s;
    for (unsigned i = 0; i < n; ++i) s += ((mask >> (n - 1 - i)) & 1u) ? '1' : '0';
    if (s.find("00") == std::string::npos) out.push_back(s);
  }
  return out;  // increasing mask is lexicographic order
}

}  // namespace

TEST_CASE("fibonacci indexing") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(8) == 21);
  CHECK(fibonacci(101).str() == "573147844013817084101");
  CHECK(fibonacci(101).str().size() == 21);
}

TEST_CASE("inflation rules") {
  const auto a = InflationRule::rule_a();
  CHECK(inflate(TilingWord("L"), a).letters() == "LS");
  CHECK(inflate(TilingWord("S"), a).letters() == "L");
  CHECK(inflate(TilingWord("LSL"), a).letters() == "LSLLS");
  const auto b = InflationRule::rule_b();
  CHECK(inflate(TilingWord("L"), b).letters() == "SL");
  CHECK(inflate(TilingWord("S"), b).letters() == "L");
}

TEST_CASE("rule A seeded by S reverses rule B") {
  for (unsigned n = 1; n <= 12; ++n) {
    auto wa = inflate_repeatedly(TilingWord("S"), InflationRule::rule_a(), n).letters();
    const auto wb = inflate_repeatedly(TilingWord("S"), InflationRule::rule_b(), n).letters();
    std::reverse(wa.begin(), wa.end());
    CHECK(wa == wb);
  }
}

TEST_CASE("rule A letter counts follow Fibonacci numbers") {
  for (unsigned n = 0; n <= 25; ++n) {
    const auto w = inflate_repeatedly(TilingWord("L"), InflationRule::rule_a(), n);
    const auto longs = static_cast<std::uint64_t>(std::count(w.letters().begin(), w.letters().end(), 'L'));
    CHECK(longs == fib_u64(n + 1));
    CHECK(w.size() - longs == fib_u64(n));
    CHECK(w.size() == fib_u64(n + 2));
  }
  CHECK(inflate_repeatedly(TilingWord("L"), InflationRule::rule_a(), 20).letters() ==
        quasibraid::testing::fibonacci_word_by_concatenation(21));
}

TEST_CASE("enumerate tilings") {
  const auto n0 = enumerate_tilings(TilingWord("L"), 0);
  REQUIRE(n0.size() == 1);
  CHECK(n0[0].letters() == "L");

  const auto n2 = enumerate_tilings(TilingWord("L"), 2);
  std::vector<std::string> letters;
  for (const auto& w : n2) letters.push_back(w.letters());
  CHECK(letters == std::vector<std::string>{"LLS", "LSL", "SLL"});

  for (unsigned n = 0; n <= 12; ++n) {
    const auto words = enumerate_tilings(TilingWord("L"), n);
    const auto oracle = brute_force_tilings("L", n);
    CHECK(words.size() == oracle.size());
    CHECK(words.size() == fib_u64(n + 2));
    std::set<std::string> got;
    for (const auto& w : words) {
      got.insert(w.letters());
      CHECK(is_fibonacci_patch(w));
    }
    CHECK(got == oracle);
  }
  CHECK(enumerate_tilings(TilingWord("L"), 6).size() == 21);

  CHECK(enumerate_tilings(TilingWord("S"), 5).size() == brute_force_tilings("S", 5).size());
  CHECK_THROWS_AS(enumerate_tilings(TilingWord("LS"), 2), Error);
  CHECK_THROWS_AS(enumerate_tilings(TilingWord("L"), kMaxTilingDepth + 1), Error);
}

TEST_CASE("validate sequence") {
  CHECK(validate_sequence("11111011"));
  CHECK(validate_sequence("10111101"));
  CHECK_FALSE(validate_sequence("100"));
  CHECK(validate_sequence(""));
  CHECK_FALSE(validate_sequence("12"));
}

TEST_CASE("enumerate sequences") {
  CHECK(enumerate_sequences(1).sequences == std::vector<std::string>{"0", "1"});
  const auto e2 = enumerate_sequences(2);
  CHECK(e2.sequences == std::vector<std::string>{"01", "10", "11"});
  CHECK(e2.ending_in_one == 2);
  CHECK(enumerate_sequences(3).sequences.size() == 5);

  for (unsigned n = 1; n <= 20; ++n) {
    const auto e = enumerate_sequences(n);
    CHECK(e.sequences.size() == fib_u64(n + 2));
    CHECK(e.ending_in_one == fib_u64(n + 1));
    CHECK(e.ending_in_zero == fib_u64(n));
    if (n <= 16) CHECK(e.sequences == all_valid_by_filter(n));
  }
  CHECK_THROWS_AS(enumerate_sequences(0), Error);
}

TEST_CASE("forget last") {
  CHECK(forget_last({"01", "11"}) == std::vector<std::string>{"0", "1"});
  CHECK(forget_last(enumerate_sequences(3).sequences) == enumerate_sequences(2).sequences);
  for (unsigned n = 2; n <= 20; ++n) {
    const auto image = forget_last(enumerate_sequences(n).sequences);
    CHECK(image.size() == fib_u64(n + 1));
    CHECK(std::all_of(image.begin(), image.end(), [](const auto& s) { return validate_sequence(s); }));
  }
  CHECK_THROWS_AS(forget_last({"1"}), Error);
}

TEST_CASE("bratteli diagram and AF ladder") {
  const auto d2 = build_bratteli(2);
  CHECK(d2.at(2).paths_long == 2);
  CHECK(d2.at(2).paths_short == 1);

  const auto d10 = build_bratteli(10);
  CHECK(d10.at(10).paths_long == 89);
  CHECK(d10.at(10).paths_short == 55);

  const auto d100 = build_bratteli(100);
  CHECK(d100.at(100).paths_long == fibonacci(101));
  CHECK(d100.at(100).paths_short == fibonacci(100));
  CHECK(d100.at(100).paths_long.str() == "573147844013817084101");

  CHECK(af_dimensions(1)[0].d_long == 1);
  CHECK(af_dimensions(1)[0].d_short == 1);
  CHECK(af_dimensions(5)[4].d_long == 8);
  CHECK(af_dimensions(5)[4].d_short == 5);

  const auto ladder = af_dimensions(30);
  const auto d30 = build_bratteli(30);
  for (unsigned n = 1; n <= 30; ++n) {
    CHECK(ladder[n - 1].d_long == d30.at(n).paths_long);
    CHECK(ladder[n - 1].d_short == d30.at(n).paths_short);
    CHECK(d30.at(n).paths_long == fib_u64(n + 1));
    CHECK(d30.at(n).paths_short == fib_u64(n));
  }
  CHECK_THROWS_AS(build_bratteli(0), Error);
}

TEST_CASE("bratteli DOT export") {
  const auto dot = bratteli_to_dot(build_bratteli(4));
  CHECK(dot.rfind("digraph bratteli {", 0) == 0);
  for (const char* label : {"L (1)", "L (2)", "L (3)", "L (5)", "S (1)", "S (2)", "S (3)"}) {
    CHECK(dot.find(label) != std::string::npos);
  }
  CHECK(dot.find("S1 -> S2") == std::string::npos);
  CHECK(dot.find("L3 -> S4") != std::string::npos);
}

TEST_CASE("ribbon counts") {
  const auto c = ribbon_counts({2, 2}, 2);
  REQUIRE(c.size() == 3);
  CHECK(c[1] == RibbonCount{4, 2});
  CHECK(c[2] == RibbonCount{6, 4});
  for (std::size_t i = 0; i < kPenroseRibbonFixture.size(); ++i) {
    CHECK(ribbon_letter_counts(kPenroseRibbonFixture[i]) == c[i]);
  }

  const auto f = ribbon_counts({1, 0}, 3);
  CHECK(f[1] == RibbonCount{1, 1});
  CHECK(f[2] == RibbonCount{2, 1});
  CHECK(f[3] == RibbonCount{3, 2});

  const auto z = ribbon_counts({0, 0}, 4);
  CHECK(std::all_of(z.begin(), z.end(), [](const auto& r) { return r == RibbonCount{0, 0}; }));
  CHECK_THROWS_AS(ribbon_counts({-1, 0}, 1), Error);
}
