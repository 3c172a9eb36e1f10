#pragma once

// Inflation rules of the Fibonacci chain, the 0/1 tiling-space sequences,
// Bratteli diagrams and the matching AF-algebra dimension ladder.
//
// Fibonacci numbers are indexed F(1) = F(2) = 1 everywhere. Bits encode
// tiles as 1 <-> L (or F), 0 <-> S (or T).

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quasibraid/cut_project.hpp"

namespace quasibraid {

using BigInt = boost::multiprecision::cpp_int;

// F(n) for n >= 0 (F(0) = 0).
BigInt fibonacci(unsigned n);

enum class RuleName { A, B };

struct InflationRule {
  RuleName name;
  std::string image_long;
  std::string image_short;

  static InflationRule rule_a();  // L -> LS, S -> L
  static InflationRule rule_b();  // L -> SL, S -> L
};

TilingWord inflate(const TilingWord& word, const InflationRule& rule);
TilingWord inflate_repeatedly(const TilingWord& word, const InflationRule& rule, unsigned times);

inline constexpr unsigned kMaxTilingDepth = 30;
// Total letters held by one enumeration level before it is refused.
inline constexpr std::size_t kTilingLetterBudget = std::size_t{1} << 30;

// Distinct words reachable from `seed` by every length-n sequence of rules
// A and B, sorted. Each level is deduplicated before the next inflation, so
// shared subtrees are expanded once.
std::vector<TilingWord> enumerate_tilings(const TilingWord& seed, unsigned n);

bool validate_sequence(std::string_view bits);

struct SequenceEnumeration {
  std::vector<std::string> sequences;  // lexicographically sorted
  std::size_t ending_in_one = 0;
  std::size_t ending_in_zero = 0;
};

SequenceEnumeration enumerate_sequences(unsigned n);

// Truncate the last bit of every sequence and deduplicate (sorted output).
std::vector<std::string> forget_last(const std::vector<std::string>& sequences);

struct BratteliLevel {
  BigInt paths_long;
  BigInt paths_short;
};

// Nodes (level, L) and (level, S) for levels 1..N. Edge multiplicities are
// the same between every pair of consecutive levels.
struct BratteliDiagram {
  unsigned levels = 0;
  // edge_multiplicity[from][to] between level n and n+1; index 0 is L, 1 is S.
  std::array<std::array<unsigned, 2>, 2> edge_multiplicity{};
  std::vector<BratteliLevel> path_counts;  // index 0 is level 1

  const BratteliLevel& at(unsigned level) const { return path_counts.at(level - 1); }
};

BratteliDiagram build_bratteli(unsigned levels);

std::string bratteli_to_dot(const BratteliDiagram& diagram);

struct AfDimension {
  BigInt d_long;
  BigInt d_short;
};

// Index 0 is level 1, seeded (1, 1).
std::vector<AfDimension> af_dimensions(unsigned levels);

struct RibbonCount {
  BigInt fat;
  BigInt thin;
  bool operator==(const RibbonCount&) const = default;
};

// F' = F + T, T' = F, applied `steps` times. The result holds steps + 1
// entries, the first being the starting counts.
std::vector<RibbonCount> ribbon_counts(const RibbonCount& level0, unsigned steps);

RibbonCount ribbon_letter_counts(std::string_view ribbon);

// Tile sequences traced by one Penrose ribbon across three inflation levels.
inline constexpr std::array<std::string_view, 3> kPenroseRibbonFixture = {
    "TFFT", "FTFFTF", "FTFTFFTFTF"};

}  // namespace quasibraid
