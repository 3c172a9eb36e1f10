#include "quasibraid/braid_rep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "quasibraid/error.hpp"

namespace quasibraid {

namespace {

constexpr double kProjectionTol = 1e-12;
constexpr double kInvolutionTol = 1e-14;

void check_letter(const BraidLetter& l, int strand_count) {
  if (l.exponent != 1 && l.exponent != -1) {
    throw Error(ErrorCode::invalid_argument, "braid exponent must be +1 or -1");
  }
  if (l.generator < 1 || l.generator > strand_count - 1) {
    throw Error(ErrorCode::invalid_argument,
                "braid generator " + std::to_string(l.generator) + " out of range for " +
                    std::to_string(strand_count) + " strands");
  }
}

const ComplexMatrix& letter_matrix(const BraidLetter& l, const BraidRepresentation& rep) {
  if (l.generator < 1 || static_cast<std::size_t>(l.generator) > rep.size()) {
    throw Error(ErrorCode::invalid_argument,
                "braid generator " + std::to_string(l.generator) +
                    " not in representation '" + rep.id + "'");
  }
  if (l.exponent != 1 && l.exponent != -1) {
    throw Error(ErrorCode::invalid_argument, "braid exponent must be +1 or -1");
  }
  const auto& g = rep.generators[static_cast<std::size_t>(l.generator - 1)];
  return l.exponent > 0 ? g.forward : g.inverse;
}

}  // namespace

ADeformation::ADeformation(Complex value) : value_(value) {
  if (std::abs(std::abs(value) - 1.0) > 1e-12) {
    throw Error(ErrorCode::invalid_argument, "A must lie on the unit circle");
  }
  derived_phi_ = -(value * value + 1.0 / (value * value)).real();
}

ADeformation ADeformation::canonical(int index) {
  const Complex three = std::polar(1.0, 3.0 * std::numbers::pi / 5.0);
  const Complex two = std::polar(1.0, 2.0 * std::numbers::pi / 5.0);
  switch (index) {
    case 0: return ADeformation(three);
    case 1: return ADeformation(-three);
    case 2: return ADeformation(two);
    case 3: return ADeformation(-two);
    default:
      throw Error(ErrorCode::invalid_argument, "canonical A index must be in 0..3");
  }
}

BraidGenerator braid_generator(const ADeformation& a, const ComplexMatrix& projection) {
  const double dev = idempotency_deviation(projection);
  if (dev > kProjectionTol) {
    throw Error(ErrorCode::not_idempotent,
                "projection is not idempotent (deviation " + std::to_string(dev) + ")");
  }
  const Complex av = a.value();
  const double phi = a.derived_phi();
  return {affine_identity(projection, phi * av, 1.0 / av),
          affine_identity(projection, phi / av, av)};
}

BraidRepresentation rho_representation(const ADeformation& a, const TlGeneratorSet& tl) {
  BraidRepresentation rep;
  rep.id = "rho_A(r=" + std::to_string(tl.q.r()) + ",qubits=" + std::to_string(tl.qubits) + ")";
  rep.generators.reserve(tl.generators.size());
  for (const auto& e : tl.generators) rep.generators.push_back(braid_generator(a, e));
  return rep;
}

BraidRepresentation representation_from_matrices(std::string id,
                                                 std::vector<ComplexMatrix> generators) {
  if (generators.empty()) throw Error(ErrorCode::invalid_argument, "representation needs generators");
  BraidRepresentation rep;
  rep.id = std::move(id);
  for (auto& g : generators) {
    if (g.dim() != generators.front().dim()) {
      throw Error(ErrorCode::dimension_mismatch, "generators must share one dimension");
    }
    auto inv = inverse(g);
    rep.generators.push_back({std::move(g), std::move(inv)});
  }
  return rep;
}

RelationReport verify_braid_relations(const BraidRepresentation& rep, double tol) {
  const auto& g = rep.generators;
  const auto count = static_cast<std::ptrdiff_t>(g.size());
  const auto identity = ComplexMatrix::identity(rep.dim());

  double inv = 0.0;
  double yb = 0.0;
  double distant = 0.0;
#pragma omp parallel for reduction(max : inv) schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& gi = g[static_cast<std::size_t>(i)];
    inv = std::max({inv, frobenius_distance(matmul(gi.forward, gi.inverse), identity),
                    frobenius_distance(matmul(gi.inverse, gi.forward), identity)});
  }

  std::size_t yb_count = 0;
  std::size_t distant_count = 0;
  for (std::ptrdiff_t n = 0; n < count; ++n) {
    for (std::ptrdiff_t m = n + 1; m < count; ++m) {
      if (m - n == 1) {
        ++yb_count;
      } else {
        ++distant_count;
      }
    }
  }

#pragma omp parallel for reduction(max : yb, distant) schedule(dynamic) collapse(2)
  for (std::ptrdiff_t n = 0; n < count; ++n) {
    for (std::ptrdiff_t m = 0; m < count; ++m) {
      if (m <= n) continue;
      const auto& bn = g[static_cast<std::size_t>(n)].forward;
      const auto& bm = g[static_cast<std::size_t>(m)].forward;
      if (m - n == 1) {
        yb = std::max(yb, frobenius_distance(matmul(matmul(bn, bm), bn),
                                             matmul(matmul(bm, bn), bm)));
      } else {
        distant = std::max(distant, frobenius_distance(matmul(bn, bm), matmul(bm, bn)));
      }
    }
  }

  RelationReport report;
  report.relations.push_back({"inverse", inv, tol, g.size(), inv <= tol});
  report.relations.push_back({"yang_baxter", yb, tol, yb_count, yb <= tol});
  report.relations.push_back({"distant_commute", distant, tol, distant_count, distant <= tol});
  return report;
}

FibonacciFR fibonacci_FR() {
  const double phi = 2.0 * std::cos(std::numbers::pi / 5.0);
  const Complex a4 = std::polar(1.0, 4.0 * std::numbers::pi / 5.0);
  const Complex a3 = std::polar(1.0, -3.0 * std::numbers::pi / 5.0);
  const std::array<Complex, 5> r_diag{a4, a3, a3, a4, a3};
  ComplexMatrix r = ComplexMatrix::diagonal(r_diag);

  ComplexMatrix f = ComplexMatrix::identity(5);
  f(3, 3) = 1.0 / phi;
  f(3, 4) = 1.0 / std::sqrt(phi);
  f(4, 3) = 1.0 / std::sqrt(phi);
  f(4, 4) = -1.0 / phi;

  // F is an involution, so F^{-1} = F.
  const double dev = frobenius_distance(matmul(f, f), ComplexMatrix::identity(5));
  if (dev > kInvolutionTol) {
    throw Error(ErrorCode::invalid_argument, "F matrix failed the involution check");
  }
  ComplexMatrix b = matmul(matmul(f, r), f);
  return {std::move(f), std::move(r), std::move(b)};
}

BraidRepresentation fr_representation() {
  auto fr = fibonacci_FR();
  BraidRepresentation rep;
  rep.id = "fibonacci_FR";
  rep.generators.push_back({fr.R, dagger(fr.R)});
  rep.generators.push_back({fr.B, matmul(matmul(fr.F, dagger(fr.R)), fr.F)});
  return rep;
}

BraidWord BraidWord::inverse() const {
  BraidWord w{strand_count, {}};
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    w.letters.push_back({it->generator, -it->exponent});
  }
  return w;
}

BraidWord make_braid_word(int strand_count, std::vector<BraidLetter> letters) {
  if (strand_count < 2) throw Error(ErrorCode::invalid_argument, "braid needs >= 2 strands");
  for (const auto& l : letters) check_letter(l, strand_count);
  return {strand_count, std::move(letters)};
}

BraidWord concatenate(const BraidWord& first, const BraidWord& second) {
  BraidWord w{std::max(first.strand_count, second.strand_count), first.letters};
  w.letters.insert(w.letters.end(), second.letters.begin(), second.letters.end());
  return w;
}

StateVector apply_braid_word(const BraidWord& word, const BraidRepresentation& rep,
                             const StateVector& state) {
  if (state.dim() != rep.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "state dimension does not match representation");
  }
  StateVector v = state;
  for (const auto& l : word.letters) v = apply(letter_matrix(l, rep), v);
  return v;
}

ComplexMatrix braid_word_matrix(const BraidWord& word, const BraidRepresentation& rep) {
  ComplexMatrix m = ComplexMatrix::identity(rep.dim());
  for (const auto& l : word.letters) m = matmul(letter_matrix(l, rep), m);
  return m;
}

}  // namespace quasibraid
