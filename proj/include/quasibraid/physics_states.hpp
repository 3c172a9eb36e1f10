#pragma once

// Height field and exact zero-energy states on the Fibonacci chain.
//
// Letters are bonds. Pair j consists of letters 2j and 2j+1 (0-based) and
// contributes B(LS) = +1, B(SL) = -1, B(LL) = 0 to the height at site j+1.

#include <cstddef>
#include <vector>

#include "quasibraid/cut_project.hpp"

namespace quasibraid {

struct HeightField {
  TilingWord word;
  std::vector<int> heights;  // h at even sites 0, 2, 4, ...; heights[0] = 0
  bool trailing_letter_ignored = false;
};

HeightField height_field(const TilingWord& word);

struct ZeroEnergyState {
  std::vector<double> amplitudes;  // psi(2i) = (-1)^i exp(kappa h(2i))
  double kappa = 0.0;              // ln(phi)
};

ZeroEnergyState zero_energy_state(const TilingWord& word);
ZeroEnergyState zero_energy_state(const HeightField& field);

// Swap the aligned pair j (letters 2j, 2j+1). The pair must read LS or SL.
// The result is not checked against the Fibonacci local rules.
TilingWord phason_flip(const TilingWord& word, std::size_t pair_index);

// Swap letters at positions p and p+1 regardless of pair alignment.
TilingWord phason_flip_at(const TilingWord& word, std::size_t position);

// Componentwise psi_after / psi_before across an aligned flip.
std::vector<double> flip_state_ratios(const TilingWord& word, std::size_t pair_index);

// The ratio at the first site past the flipped pair: phi^{-2} for LS -> SL,
// phi^{+2} for SL -> LS.
double flip_amplitude_factor(const TilingWord& word, std::size_t pair_index);

}  // namespace quasibraid
