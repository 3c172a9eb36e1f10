#include "quasibraid/substitution.hpp"

#include <algorithm>
#include <sstream>

#include "quasibraid/error.hpp"

namespace quasibraid {

BigInt fibonacci(unsigned n) {
  BigInt a = 0;
  BigInt b = 1;
  for (unsigned i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

InflationRule InflationRule::rule_a() { return {RuleName::A, "LS", "L"}; }
InflationRule InflationRule::rule_b() { return {RuleName::B, "SL", "L"}; }

TilingWord inflate(const TilingWord& word, const InflationRule& rule) {
  std::string out;
  out.reserve(word.size() * 2);
  for (char c : word.letters()) out += (c == 'L') ? rule.image_long : rule.image_short;
  return TilingWord(std::move(out));
}

TilingWord inflate_repeatedly(const TilingWord& word, const InflationRule& rule, unsigned times) {
  TilingWord w = word;
  for (unsigned i = 0; i < times; ++i) w = inflate(w, rule);
  return w;
}

std::vector<TilingWord> enumerate_tilings(const TilingWord& seed, unsigned n) {
  if (seed.letters() != "L" && seed.letters() != "S") {
    throw Error(ErrorCode::invalid_argument, "tiling seed must be L or S");
  }
  if (n > kMaxTilingDepth) {
    throw Error(ErrorCode::budget_exceeded,
                "enumeration depth " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxTilingDepth));
  }
  const InflationRule a = InflationRule::rule_a();
  const InflationRule b = InflationRule::rule_b();

  std::vector<std::string> level{seed.letters()};
  for (unsigned step = 0; step < n; ++step) {
    // All words at one level share the same length.
    const std::size_t next_len = inflate(TilingWord(level.front()), a).size();
    if (2 * level.size() * next_len > kTilingLetterBudget) {
      throw Error(ErrorCode::budget_exceeded,
                  "tiling enumeration exceeds the letter budget at depth " +
                      std::to_string(step + 1));
    }
    std::vector<std::string> next(2 * level.size());
    const auto count = static_cast<std::ptrdiff_t>(level.size());
#pragma omp parallel for schedule(static) if (count >= 256)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const TilingWord w(level[static_cast<std::size_t>(i)]);
      next[2 * static_cast<std::size_t>(i)] = inflate(w, a).letters();
      next[2 * static_cast<std::size_t>(i) + 1] = inflate(w, b).letters();
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }

  std::vector<TilingWord> out;
  out.reserve(level.size());
  for (auto& s : level) out.emplace_back(std::move(s));
  return out;
}

bool validate_sequence(std::string_view bits) {
  if (bits.find_first_not_of("01") != std::string_view::npos) return false;
  return bits.find("00") == std::string_view::npos;
}

namespace {

void extend_sequences(std::string& prefix, unsigned n, std::vector<std::string>& out) {
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  if (prefix.empty() || prefix.back() == '1') {
    prefix.push_back('0');
    extend_sequences(prefix, n, out);
    prefix.pop_back();
  }
  prefix.push_back('1');
  extend_sequences(prefix, n, out);
  prefix.pop_back();
}

}  // namespace

SequenceEnumeration enumerate_sequences(unsigned n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "sequence length must be >= 1");
  SequenceEnumeration e;
  std::string prefix;
  prefix.reserve(n);
  extend_sequences(prefix, n, e.sequences);
  for (const auto& s : e.sequences) {
    if (s.back() == '1') {
      ++e.ending_in_one;
    } else {
      ++e.ending_in_zero;
    }
  }
  return e;
}

std::vector<std::string> forget_last(const std::vector<std::string>& sequences) {
  std::vector<std::string> out;
  out.reserve(sequences.size());
  for (const auto& s : sequences) {
    if (s.size() < 2) {
      throw Error(ErrorCode::invalid_argument, "cannot forget the last step of a length-1 sequence");
    }
    if (s.size() != sequences.front().size()) {
      throw Error(ErrorCode::invalid_argument, "sequences must share one length");
    }
    out.push_back(s.substr(0, s.size() - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BratteliDiagram build_bratteli(unsigned levels) {
  if (levels < 1) throw Error(ErrorCode::invalid_argument, "Bratteli diagram needs >= 1 level");
  BratteliDiagram d;
  d.levels = levels;
  // L -> L, L -> S, S -> L; no S -> S edge (a short tile is always followed
  // by a long one).
  d.edge_multiplicity = {{{1, 1}, {1, 0}}};
  d.path_counts.reserve(levels);
  d.path_counts.push_back({1, 1});
  for (unsigned lvl = 1; lvl < levels; ++lvl) {
    const auto& prev = d.path_counts.back();
    const std::array<const BigInt*, 2> from{&prev.paths_long, &prev.paths_short};
    std::array<BigInt, 2> to{0, 0};
    for (std::size_t src = 0; src < 2; ++src) {
      for (std::size_t dst = 0; dst < 2; ++dst) {
        to[dst] += *from[src] * d.edge_multiplicity[src][dst];
      }
    }
    d.path_counts.push_back({std::move(to[0]), std::move(to[1])});
  }
  return d;
}

std::string bratteli_to_dot(const BratteliDiagram& diagram) {
  std::ostringstream os;
  os << "digraph bratteli {\n";
  os << "  rankdir=TB;\n";
  for (unsigned lvl = 1; lvl <= diagram.levels; ++lvl) {
    const auto& c = diagram.at(lvl);
    os << "  { rank=same; L" << lvl << " [label=\"L (" << c.paths_long << ")\"]; S" << lvl
       << " [label=\"S (" << c.paths_short << ")\"]; }\n";
  }
  constexpr std::array<char, 2> names{'L', 'S'};
  for (unsigned lvl = 1; lvl < diagram.levels; ++lvl) {
    for (std::size_t src = 0; src < 2; ++src) {
      for (std::size_t dst = 0; dst < 2; ++dst) {
        for (unsigned k = 0; k < diagram.edge_multiplicity[src][dst]; ++k) {
          os << "  " << names[src] << lvl << " -> " << names[dst] << (lvl + 1) << ";\n";
        }
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::vector<AfDimension> af_dimensions(unsigned levels) {
  if (levels < 1) throw Error(ErrorCode::invalid_argument, "AF ladder needs >= 1 level");
  std::vector<AfDimension> ladder;
  ladder.reserve(levels);
  ladder.push_back({1, 1});
  while (ladder.size() < levels) {
    const auto& d = ladder.back();
    ladder.push_back({d.d_long + d.d_short, d.d_long});
  }
  return ladder;
}

std::vector<RibbonCount> ribbon_counts(const RibbonCount& level0, unsigned steps) {
  if (level0.fat < 0 || level0.thin < 0) {
    throw Error(ErrorCode::invalid_argument, "ribbon counts must be nonnegative");
  }
  std::vector<RibbonCount> out{level0};
  for (unsigned i = 0; i < steps; ++i) {
    const auto& c = out.back();
    out.push_back({c.fat + c.thin, c.fat});
  }
  return out;
}

RibbonCount ribbon_letter_counts(std::string_view ribbon) {
  if (ribbon.find_first_not_of("FT") != std::string_view::npos) {
    throw Error(ErrorCode::invalid_argument, "ribbon letters must be F or T");
  }
  const auto fat = std::count(ribbon.begin(), ribbon.end(), 'F');
  return {BigInt(fat), BigInt(static_cast<std::ptrdiff_t>(ribbon.size()) - fat)};
}

}  // namespace quasibraid
