#include "quasibraid/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "quasibraid/error.hpp"

namespace quasibraid {

namespace {

// Below this dimension the thread start-up cost dominates.
constexpr std::size_t kParallelDim = 64;

void require_same_dim(const char* op, std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::dimension_mismatch, std::string(op) + ": dimension mismatch (" +
                                                   std::to_string(a) + " vs " +
                                                   std::to_string(b) + ")");
  }
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw Error(ErrorCode::invalid_argument, "matrix dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw Error(ErrorCode::invalid_argument, "matrix dimension must be >= 1");
  if (data_.size() != dim * dim) {
    throw Error(ErrorCode::dimension_mismatch, "matrix entries do not form a square of dim " +
                                                   std::to_string(dim));
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw Error(ErrorCode::invalid_argument, "matrix entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

StateVector::StateVector(std::size_t dim) : amps_(dim) {
  if (dim == 0) throw Error(ErrorCode::invalid_argument, "state dimension must be >= 1");
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw Error(ErrorCode::invalid_argument, "state dimension must be >= 1");
  if (!std::all_of(amps_.begin(), amps_.end(), finite)) {
    throw Error(ErrorCode::invalid_argument, "state amplitudes must be finite");
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorCode::invalid_argument, "basis index out of range");
  StateVector v(dim);
  v[index] = 1.0;
  return v;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

// Row-parallel i-k-j product. Each output entry is accumulated over k in
// ascending order by exactly one thread, so the result does not depend on
// the thread count. Zero entries of `a` are skipped; the Jones-Wenzl
// embeddings have at most two nonzeros per row.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim("matmul", a.dim(), b.dim());
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  const Complex* pa = a.entries().data();
  const Complex* pb = b.entries().data();
  Complex* pc = c.entries().data();
  const auto rows = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(static) if (n >= kParallelDim)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    // Interleaved (re, im) view; avoids the out-of-line complex multiply.
    double* crow = reinterpret_cast<double*>(pc + static_cast<std::size_t>(i) * n);
    const Complex* arow = pa + static_cast<std::size_t>(i) * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = arow[k].real();
      const double ai = arow[k].imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = reinterpret_cast<const double*>(pb + k * n);
      for (std::size_t j = 0; j < 2 * n; j += 2) {
        const double br = brow[j];
        const double bi = brow[j + 1];
        crow[j] += ar * br - ai * bi;
        crow[j + 1] += ar * bi + ai * br;
      }
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  ComplexMatrix c(n);
  const auto arows = static_cast<std::ptrdiff_t>(na);

#pragma omp parallel for schedule(static) if (n >= kParallelDim)
  for (std::ptrdiff_t ia = 0; ia < arows; ++ia) {
    const auto ra = static_cast<std::size_t>(ia);
    for (std::size_t ca = 0; ca < na; ++ca) {
      const Complex f = a(ra, ca);
      if (f == Complex{}) continue;
      for (std::size_t rb = 0; rb < nb; ++rb) {
        for (std::size_t cb = 0; cb < nb; ++cb) c(ra * nb + rb, ca * nb + cb) = f * b(rb, cb);
      }
    }
  }
  return c;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim("add", a.dim(), b.dim());
  ComplexMatrix c = a;
  auto out = c.entries();
  auto in = b.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += in[i];
  return c;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim("subtract", a.dim(), b.dim());
  ComplexMatrix c = a;
  auto out = c.entries();
  auto in = b.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= in[i];
  return c;
}

ComplexMatrix scale(const ComplexMatrix& m, Complex factor) {
  ComplexMatrix c = m;
  for (auto& z : c.entries()) z *= factor;
  return c;
}

ComplexMatrix affine_identity(const ComplexMatrix& a, Complex alpha, Complex beta) {
  ComplexMatrix c = scale(a, alpha);
  for (std::size_t i = 0; i < c.dim(); ++i) c(i, i) += beta;
  return c;
}

ComplexMatrix dagger(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(j, i) = std::conj(m(i, j));
  }
  return c;
}

Complex trace(const ComplexMatrix& m) {
  Complex t{};
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

StateVector apply(const ComplexMatrix& m, const StateVector& v) {
  require_same_dim("apply", m.dim(), v.dim());
  const std::size_t n = m.dim();
  StateVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s{};
    for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

ComplexMatrix inverse(const ComplexMatrix& m, double singular_tol) {
  const std::size_t n = m.dim();
  ComplexMatrix work = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  double scale_ref = 0.0;
  for (const auto& z : m.entries()) scale_ref = std::max(scale_ref, std::abs(z));
  if (scale_ref == 0.0) throw Error(ErrorCode::invalid_argument, "matrix is singular");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    }
    if (std::abs(work(pivot, col)) <= singular_tol * scale_ref) {
      throw Error(ErrorCode::invalid_argument, "matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Complex p = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = work(r, col);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim("frobenius_distance", a.dim(), b.dim());
  auto x = a.entries();
  auto y = b.entries();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(x[i] - y[i]);
  return std::sqrt(s);
}

double distance(const StateVector& a, const StateVector& b) {
  require_same_dim("distance", a.dim(), b.dim());
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

double unitarity_deviation(const ComplexMatrix& m) {
  return frobenius_distance(matmul(m, dagger(m)), ComplexMatrix::identity(m.dim()));
}

double idempotency_deviation(const ComplexMatrix& m) {
  return frobenius_distance(matmul(m, m), m);
}

double hermiticity_deviation(const ComplexMatrix& m) { return frobenius_distance(m, dagger(m)); }

bool is_unitary(const ComplexMatrix& m, double tol) { return unitarity_deviation(m) <= tol; }
bool is_idempotent(const ComplexMatrix& m, double tol) { return idempotency_deviation(m) <= tol; }
bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_deviation(m) <= tol; }

namespace serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim("matmul", a.dim(), b.dim());
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t nb = b.dim();
  ComplexMatrix c(a.dim() * nb);
  for (std::size_t r = 0; r < c.dim(); ++r) {
    for (std::size_t col = 0; col < c.dim(); ++col) {
      c(r, col) = a(r / nb, col / nb) * b(r % nb, col % nb);
    }
  }
  return c;
}

}  // namespace serial

}  // namespace quasibraid
