#include "quasibraid/tl_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "quasibraid/error.hpp"

namespace quasibraid {

namespace {

constexpr int kMaxQubits = 12;

ComplexMatrix matrix_unit(std::size_t row, std::size_t col) {
  ComplexMatrix e(2);
  e(row, col) = 1.0;
  return e;
}

}  // namespace

QParameter::QParameter(int r) : r_(r), value_(std::polar(1.0, std::numbers::pi / r)) {
  if (r < 3) throw Error(ErrorCode::invalid_argument, "q parameter needs r >= 3");
}

double q_number(int n, const QParameter& q) {
  const double denom = std::sin(std::numbers::pi / q.r());
  if (denom == 0.0) throw Error(ErrorCode::invalid_argument, "q - q^{-1} vanishes");
  return std::sin(n * std::numbers::pi / q.r()) / denom;
}

ComplexMatrix build_E(const QParameter& q) {
  const double two_q = q_number(2, q);
  if (std::abs(two_q) < 1e-300) throw Error(ErrorCode::invalid_argument, "[2]_q vanishes");
  const Complex qv = q.value();
  const auto e11 = matrix_unit(0, 0);
  const auto e12 = matrix_unit(0, 1);
  const auto e21 = matrix_unit(1, 0);
  const auto e22 = matrix_unit(1, 1);

  ComplexMatrix e = scale(kron(e11, e22), 1.0 / qv);
  e = add(e, scale(kron(e22, e11), qv));
  e = add(e, kron(e12, e21));
  e = add(e, kron(e21, e12));
  return scale(e, 1.0 / two_q);
}

ComplexMatrix build_E_i(const QParameter& q, int qubits, int i) {
  if (qubits < 2 || qubits > kMaxQubits) {
    throw Error(ErrorCode::invalid_argument,
                "qubit count must be in [2, " + std::to_string(kMaxQubits) + "]");
  }
  if (i < 1 || i > qubits - 1) {
    throw Error(ErrorCode::invalid_argument, "generator index " + std::to_string(i) +
                                                 " out of range for " + std::to_string(qubits) +
                                                 " qubits");
  }
  // Slots 1..i-1 sit on the more significant qubits.
  const std::size_t left = std::size_t{1} << (i - 1);
  const std::size_t right = std::size_t{1} << (qubits - i - 1);
  return kron(kron(ComplexMatrix::identity(left), build_E(q)), ComplexMatrix::identity(right));
}

TlGeneratorSet build_tl_generators(const QParameter& q, int qubits) {
  TlGeneratorSet set{qubits, q, {}};
  set.generators.reserve(static_cast<std::size_t>(std::max(qubits - 1, 0)));
  for (int i = 1; i < qubits; ++i) set.generators.push_back(build_E_i(q, qubits, i));
  return set;
}

RelationReport verify_tl_relations(const TlGeneratorSet& gens, double tol) {
  const auto& e = gens.generators;
  const auto count = static_cast<std::ptrdiff_t>(e.size());
  const double two_q = q_number(2, gens.q);
  const Complex coeff = 1.0 / (two_q * two_q);

  double idem = 0.0;
#pragma omp parallel for reduction(max : idem) schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    idem = std::max(idem, idempotency_deviation(e[static_cast<std::size_t>(i)]));
  }

  // Ordered pairs (n, m); the adjacent relation is not symmetric in n, m.
  double adjacent = 0.0;
  double distant = 0.0;
  std::size_t adjacent_count = 0;
  std::size_t distant_count = 0;
  for (std::ptrdiff_t n = 0; n < count; ++n) {
    for (std::ptrdiff_t m = 0; m < count; ++m) {
      const auto gap = std::abs(n - m);
      if (gap == 1) ++adjacent_count;
      if (gap > 1 && n < m) ++distant_count;
    }
  }

#pragma omp parallel for reduction(max : adjacent, distant) schedule(dynamic) collapse(2)
  for (std::ptrdiff_t n = 0; n < count; ++n) {
    for (std::ptrdiff_t m = 0; m < count; ++m) {
      const auto gap = std::abs(n - m);
      const auto& en = e[static_cast<std::size_t>(n)];
      const auto& em = e[static_cast<std::size_t>(m)];
      if (gap == 1) {
        const auto enmn = matmul(matmul(en, em), en);
        adjacent = std::max(adjacent, frobenius_distance(enmn, scale(en, coeff)));
      } else if (gap > 1 && n < m) {
        distant = std::max(distant, frobenius_distance(matmul(en, em), matmul(em, en)));
      }
    }
  }

  RelationReport report;
  report.relations.push_back({"idempotent", idem, tol, e.size(), idem <= tol});
  report.relations.push_back({"adjacent", adjacent, tol, adjacent_count, adjacent <= tol});
  report.relations.push_back({"distant_commute", distant, tol, distant_count, distant <= tol});
  return report;
}

}  // namespace quasibraid
