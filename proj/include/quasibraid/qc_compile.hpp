#pragma once

// Qubit embeddings into tiling-space sequences, braid-word circuits and an
// exhaustive braid-word gate search.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quasibraid/braid_rep.hpp"
#include "quasibraid/linalg.hpp"

namespace quasibraid {

struct QubitEmbedding {
  int qubits = 0;
  std::size_t sequence_length = 0;  // 2N + 1
  // basis_map[k] is the sequence assigned to the qubit basis label k
  // (label bits read most significant first).
  std::vector<std::string> basis_map;
};

inline constexpr int kMaxEmbeddedQubits = 24;

// Labels in increasing order take the lexicographically first 2^N valid
// sequences of length 2N+1 that end in 1.
QubitEmbedding embed_qubits(int qubits);

struct DeflatedEmbedding {
  int qubits = 0;
  std::size_t sequence_length = 0;
  std::vector<std::string> basis_map;  // may repeat after a collision
  std::vector<std::string> image;      // distinct sequences, sorted
  std::size_t collisions = 0;          // inputs merged into an existing image
};

// Forget the last step repeatedly until sequences have length target_level.
DeflatedEmbedding fusion_deflation(const QubitEmbedding& embedding, std::size_t target_level);

// Same operation on a bare sequence set (one label per input sequence).
DeflatedEmbedding fusion_deflation(const std::vector<std::string>& sequences,
                                   std::size_t target_level);

inline constexpr int kMaxSearchLength = 16;

struct GateSearchResult {
  BraidWord word;
  double distance = 0.0;
  std::string target_name;
  std::string generator_set_id;
  int max_length = 0;
  std::size_t words_examined = 0;
};

// min over theta of || e^{i theta} u - target ||_F.
double phase_distance(const ComplexMatrix& u, const ComplexMatrix& target);

// Exhaustive search over braid words up to max_length. Words containing an
// adjacent letter pair x x^{-1} are skipped: they reduce to a shorter word
// that the search has already scored and that wins the tie-break. Ties are
// broken by (distance, length, lexicographic letters) where letters order by
// (generator, exponent).
GateSearchResult approximate_gate(const ComplexMatrix& target, const BraidRepresentation& rep,
                                  int max_length, std::string_view target_name = "target");

// Single-threaded breadth-first reference: scores every word (reduced or
// not) by multiplying from scratch. Exponential; test and benchmark use only.
GateSearchResult approximate_gate_reference(const ComplexMatrix& target,
                                            const BraidRepresentation& rep, int max_length,
                                            std::string_view target_name = "target");

StateVector simulate_circuit(const std::vector<BraidWord>& words, const BraidRepresentation& rep,
                             const StateVector& initial);

}  // namespace quasibraid
