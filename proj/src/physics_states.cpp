#include "quasibraid/physics_states.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "quasibraid/error.hpp"

namespace quasibraid {

namespace {

int bond_pair_value(char first, char second) {
  if (first == 'L' && second == 'S') return 1;
  if (first == 'S' && second == 'L') return -1;
  if (first == 'L' && second == 'L') return 0;
  throw Error(ErrorCode::invalid_argument, "height field undefined on an SS pair");
}

}  // namespace

HeightField height_field(const TilingWord& word) {
  HeightField f{word, {0}, word.size() % 2 == 1};
  const auto& s = word.letters();
  f.heights.reserve(s.size() / 2 + 1);
  for (std::size_t j = 0; 2 * j + 1 < s.size(); ++j) {
    f.heights.push_back(f.heights.back() + bond_pair_value(s[2 * j], s[2 * j + 1]));
  }
  return f;
}

ZeroEnergyState zero_energy_state(const HeightField& field) {
  ZeroEnergyState st;
  st.kappa = std::log(kGoldenRatio);
  st.amplitudes.reserve(field.heights.size());
  for (std::size_t i = 0; i < field.heights.size(); ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    st.amplitudes.push_back(sign * std::exp(st.kappa * field.heights[i]));
  }
  return st;
}

ZeroEnergyState zero_energy_state(const TilingWord& word) {
  return zero_energy_state(height_field(word));
}

TilingWord phason_flip_at(const TilingWord& word, std::size_t position) {
  const auto& s = word.letters();
  if (position + 1 >= s.size()) {
    throw Error(ErrorCode::invalid_argument, "flip position out of range");
  }
  if (s[position] == s[position + 1]) {
    throw Error(ErrorCode::flip_undefined, std::string("flip undefined on ") + s[position] +
                                               s[position + 1]);
  }
  std::string out = s;
  std::swap(out[position], out[position + 1]);
  return TilingWord(std::move(out));
}

TilingWord phason_flip(const TilingWord& word, std::size_t pair_index) {
  if (2 * pair_index + 1 >= word.size()) {
    throw Error(ErrorCode::invalid_argument, "pair index out of range");
  }
  return phason_flip_at(word, 2 * pair_index);
}

std::vector<double> flip_state_ratios(const TilingWord& word, std::size_t pair_index) {
  const auto before = zero_energy_state(word);
  const auto after = zero_energy_state(phason_flip(word, pair_index));
  std::vector<double> ratios(before.amplitudes.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    ratios[i] = after.amplitudes[i] / before.amplitudes[i];
  }
  return ratios;
}

double flip_amplitude_factor(const TilingWord& word, std::size_t pair_index) {
  return flip_state_ratios(word, pair_index).at(pair_index + 1);
}

}  // namespace quasibraid
