#pragma once

// Braid-group representations: rho_A(B_n) = phi A E_n + A^{-1} I built from
// Jones-Wenzl projections, and the Fibonacci-anyon F/R/B matrices.

#include <string>
#include <utility>
#include <vector>

#include "quasibraid/linalg.hpp"
#include "quasibraid/report.hpp"
#include "quasibraid/tl_algebra.hpp"

namespace quasibraid {

class ADeformation {
 public:
  // |value| must be 1.
  explicit ADeformation(Complex value);

  // index 0..3 selects e^{3 pi i/5}, -e^{3 pi i/5}, e^{2 pi i/5}, -e^{2 pi i/5}.
  static ADeformation canonical(int index = 0);

  Complex value() const noexcept { return value_; }
  // -(A^2 + A^{-2}); real for |A| = 1.
  double derived_phi() const noexcept { return derived_phi_; }

 private:
  Complex value_;
  double derived_phi_;
};

struct BraidGenerator {
  ComplexMatrix forward;
  ComplexMatrix inverse;
};

// A braid-group representation: generator k (1-based) acts as
// generators[k-1].forward, its inverse as generators[k-1].inverse.
struct BraidRepresentation {
  std::string id;
  std::vector<BraidGenerator> generators;

  std::size_t dim() const { return generators.front().forward.dim(); }
  std::size_t size() const noexcept { return generators.size(); }
};

// Rejects E_n whose idempotency deviation exceeds 1e-12.
BraidGenerator braid_generator(const ADeformation& a, const ComplexMatrix& projection);

BraidRepresentation rho_representation(const ADeformation& a, const TlGeneratorSet& tl);

// Inverses are computed numerically; throws if a generator is singular.
BraidRepresentation representation_from_matrices(std::string id,
                                                 std::vector<ComplexMatrix> generators);

// Relations reported: "inverse", "yang_baxter" (adjacent generators in list
// order) and "distant_commute".
RelationReport verify_braid_relations(const BraidRepresentation& rep, double tol);

struct FibonacciFR {
  ComplexMatrix F;
  ComplexMatrix R;
  ComplexMatrix B;  // F R F^{-1}
};

FibonacciFR fibonacci_FR();

// sigma_1 = R, sigma_2 = B.
BraidRepresentation fr_representation();

struct BraidLetter {
  int generator = 1;  // 1-based
  int exponent = 1;   // +1 or -1
  auto operator<=>(const BraidLetter&) const = default;
};

struct BraidWord {
  int strand_count = 2;
  std::vector<BraidLetter> letters;

  BraidWord inverse() const;
  bool operator==(const BraidWord&) const = default;
};

BraidWord make_braid_word(int strand_count, std::vector<BraidLetter> letters);

BraidWord concatenate(const BraidWord& first, const BraidWord& second);

// The first letter acts first: the result is M_k ... M_2 M_1 |state>.
StateVector apply_braid_word(const BraidWord& word, const BraidRepresentation& rep,
                             const StateVector& state);

// Matrix of the whole word, M_k ... M_1.
ComplexMatrix braid_word_matrix(const BraidWord& word, const BraidRepresentation& rep);

}  // namespace quasibraid
