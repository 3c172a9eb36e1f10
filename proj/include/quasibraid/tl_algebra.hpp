#pragma once

// Jones-Wenzl projections on qubit chains.

#include <cstddef>
#include <vector>

#include "quasibraid/linalg.hpp"
#include "quasibraid/report.hpp"

namespace quasibraid {

class QParameter {
 public:
  // q = exp(i pi / r), r >= 3.
  explicit QParameter(int r = 5);

  int r() const noexcept { return r_; }
  Complex value() const noexcept { return value_; }

 private:
  int r_;
  Complex value_;
};

// [n]_q evaluated as sin(n pi / r) / sin(pi / r); real on the unit circle.
double q_number(int n, const QParameter& q);

// E(q) on C^2 (x) C^2:
//   [2]_q^{-1} (q^{-1} e11(x)e22 + q e22(x)e11 + e12(x)e21 + e21(x)e12)
// with e_ij the 2x2 matrix units, e11 = |0><0|.
ComplexMatrix build_E(const QParameter& q);

// E(q) on tensor slots i, i+1 (1-based from the left) of an N-qubit chain.
ComplexMatrix build_E_i(const QParameter& q, int qubits, int i);

struct TlGeneratorSet {
  int qubits = 0;
  QParameter q;
  std::vector<ComplexMatrix> generators;  // E_1 .. E_{N-1}
};

TlGeneratorSet build_tl_generators(const QParameter& q, int qubits);

// Relations reported: "idempotent", "adjacent" (E_n E_m E_n = [2]_q^{-2} E_n
// for |n-m| = 1) and "distant_commute" (|n-m| > 1).
RelationReport verify_tl_relations(const TlGeneratorSet& gens, double tol);

}  // namespace quasibraid
