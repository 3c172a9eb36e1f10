#pragma once

// Dense complex linear algebra used by every algebraic module.
//
// Basis convention (project wide): a basis index of an N-qubit space is the
// integer with binary digits b_{N-1} ... b_1 b_0, qubit 0 being the least
// significant bit. kron(a, b) places `a` on the more significant digits, so
// the leftmost tensor slot is the most significant qubit.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace quasibraid {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  // Zero matrix of the given dimension (dim >= 1).
  explicit ComplexMatrix(std::size_t dim);
  // Row-major entries; entries.size() must equal dim * dim and be finite.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

class StateVector {
 public:
  explicit StateVector(std::size_t dim);
  explicit StateVector(std::vector<Complex> amplitudes);

  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amps_.size(); }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

  double norm() const;

  bool operator==(const StateVector&) const = default;

 private:
  std::vector<Complex> amps_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& m, Complex factor);
// alpha * a + beta * identity
ComplexMatrix affine_identity(const ComplexMatrix& a, Complex alpha, Complex beta);
ComplexMatrix dagger(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);
StateVector apply(const ComplexMatrix& m, const StateVector& v);

// Gauss-Jordan with partial pivoting; throws when the pivot falls below
// `singular_tol` relative to the largest entry.
ComplexMatrix inverse(const ComplexMatrix& m, double singular_tol = 1e-13);

double frobenius_norm(const ComplexMatrix& m);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double distance(const StateVector& a, const StateVector& b);

// Frobenius deviation from the defining identities m m^dagger = I,
// m^2 = m and m = m^dagger.
double unitarity_deviation(const ComplexMatrix& m);
double idempotency_deviation(const ComplexMatrix& m);
double hermiticity_deviation(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& m, double tol);
bool is_idempotent(const ComplexMatrix& m, double tol);
bool is_hermitian(const ComplexMatrix& m, double tol);

// Reference kernels: plain loops, no threading. Kept as the oracle that the
// threaded kernels are tested and benchmarked against.
namespace serial {
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
}  // namespace serial

}  // namespace quasibraid
