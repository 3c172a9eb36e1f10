#include "quasibraid/qc_compile.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "quasibraid/error.hpp"
#include "quasibraid/substitution.hpp"

namespace quasibraid {

namespace {

void collect_sequences_ending_in_one(std::string& prefix, std::size_t length, std::size_t limit,
                                     std::vector<std::string>& out) {
  if (out.size() >= limit) return;
  if (prefix.size() == length) {
    if (prefix.back() == '1') out.push_back(prefix);
    return;
  }
  if (prefix.empty() || prefix.back() == '1') {
    prefix.push_back('0');
    collect_sequences_ending_in_one(prefix, length, limit, out);
    prefix.pop_back();
  }
  prefix.push_back('1');
  collect_sequences_ending_in_one(prefix, length, limit, out);
  prefix.pop_back();
}

std::vector<BraidLetter> alphabet(const BraidRepresentation& rep) {
  std::vector<BraidLetter> letters;
  for (int g = 1; g <= static_cast<int>(rep.size()); ++g) {
    letters.push_back({g, -1});
    letters.push_back({g, 1});
  }
  return letters;
}

const ComplexMatrix& matrix_of(const BraidLetter& l, const BraidRepresentation& rep) {
  const auto& g = rep.generators[static_cast<std::size_t>(l.generator - 1)];
  return l.exponent > 0 ? g.forward : g.inverse;
}

struct Candidate {
  double distance = 0.0;
  std::vector<BraidLetter> letters;
};

bool better(const Candidate& a, const Candidate& b) {
  return std::forward_as_tuple(a.distance, a.letters.size(), a.letters) <
         std::forward_as_tuple(b.distance, b.letters.size(), b.letters);
}

void check_search_args(const ComplexMatrix& target, const BraidRepresentation& rep,
                       int max_length) {
  if (max_length > kMaxSearchLength) {
    throw Error(ErrorCode::budget_exceeded, "search budget exceeded: max length " +
                                                std::to_string(max_length) + " > " +
                                                std::to_string(kMaxSearchLength));
  }
  if (max_length < 0) throw Error(ErrorCode::invalid_argument, "max length must be >= 0");
  if (rep.generators.empty()) throw Error(ErrorCode::invalid_argument, "empty representation");
  if (target.dim() != rep.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "target dimension does not match generators");
  }
}

GateSearchResult make_result(Candidate best, const BraidRepresentation& rep,
                             std::string_view target_name, int max_length,
                             std::size_t examined) {
  GateSearchResult r;
  r.word = BraidWord{static_cast<int>(rep.size()) + 1, std::move(best.letters)};
  r.distance = best.distance;
  r.target_name = std::string(target_name);
  r.generator_set_id = rep.id;
  r.max_length = max_length;
  r.words_examined = examined;
  return r;
}

class DepthFirstSearch {
 public:
  DepthFirstSearch(const ComplexMatrix& target, const BraidRepresentation& rep,
                   const std::vector<BraidLetter>& letters, int max_length)
      : target_(target), rep_(rep), letters_(letters), max_length_(max_length) {}

  void run(BraidLetter first) {
    word_.assign(1, first);
    visit(matrix_of(first, rep_));
  }

  Candidate best;
  std::size_t examined = 0;

 private:
  void visit(const ComplexMatrix& product) {
    ++examined;
    const double dist = phase_distance(product, target_);
    if (examined == 1 || std::forward_as_tuple(dist, word_.size(), word_) <
                             std::forward_as_tuple(best.distance, best.letters.size(),
                                                   best.letters)) {
      best = Candidate{dist, word_};
    }
    if (static_cast<int>(word_.size()) == max_length_) return;
    const BraidLetter last = word_.back();
    for (const auto& l : letters_) {
      if (l.generator == last.generator && l.exponent == -last.exponent) continue;
      word_.push_back(l);
      visit(matmul(matrix_of(l, rep_), product));
      word_.pop_back();
    }
  }

  const ComplexMatrix& target_;
  const BraidRepresentation& rep_;
  const std::vector<BraidLetter>& letters_;
  int max_length_;
  std::vector<BraidLetter> word_;
};

}  // namespace

QubitEmbedding embed_qubits(int qubits) {
  if (qubits < 1 || qubits > kMaxEmbeddedQubits) {
    throw Error(ErrorCode::invalid_argument,
                "qubit count must be in [1, " + std::to_string(kMaxEmbeddedQubits) + "]");
  }
  const std::size_t length = 2 * static_cast<std::size_t>(qubits) + 1;
  const std::size_t labels = std::size_t{1} << qubits;
  if (BigInt(labels) > fibonacci(static_cast<unsigned>(length) + 1)) {
    throw Error(ErrorCode::invalid_argument, "not enough tiling sequences for the embedding");
  }
  QubitEmbedding e{qubits, length, {}};
  e.basis_map.reserve(labels);
  std::string prefix;
  collect_sequences_ending_in_one(prefix, length, labels, e.basis_map);
  return e;
}

DeflatedEmbedding fusion_deflation(const std::vector<std::string>& sequences,
                                   std::size_t target_level) {
  if (sequences.empty()) throw Error(ErrorCode::invalid_argument, "no sequences to deflate");
  const std::size_t length = sequences.front().size();
  if (target_level < 1 || target_level > length) {
    throw Error(ErrorCode::invalid_argument, "deflation target level out of range");
  }
  DeflatedEmbedding d;
  d.sequence_length = target_level;
  d.basis_map.reserve(sequences.size());
  for (const auto& s : sequences) {
    if (s.size() != length || !validate_sequence(s)) {
      throw Error(ErrorCode::invalid_argument, "invalid tiling sequence '" + s + "'");
    }
    d.basis_map.push_back(s.substr(0, target_level));
  }
  d.image = d.basis_map;
  std::sort(d.image.begin(), d.image.end());
  d.image.erase(std::unique(d.image.begin(), d.image.end()), d.image.end());
  d.collisions = sequences.size() - d.image.size();
  return d;
}

DeflatedEmbedding fusion_deflation(const QubitEmbedding& embedding, std::size_t target_level) {
  auto d = fusion_deflation(embedding.basis_map, target_level);
  d.qubits = embedding.qubits;
  return d;
}

double phase_distance(const ComplexMatrix& u, const ComplexMatrix& target) {
  if (u.dim() != target.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "phase_distance: dimension mismatch");
  }
  auto x = u.entries();
  auto y = target.entries();
  Complex inner{};
  for (std::size_t i = 0; i < x.size(); ++i) inner += std::conj(x[i]) * y[i];
  const double mag = std::abs(inner);
  const Complex phase = mag > 0.0 ? inner / mag : Complex{1.0, 0.0};
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(phase * x[i] - y[i]);
  return std::sqrt(s);
}

GateSearchResult approximate_gate(const ComplexMatrix& target, const BraidRepresentation& rep,
                                  int max_length, std::string_view target_name) {
  check_search_args(target, rep, max_length);
  const auto letters = alphabet(rep);

  Candidate best{phase_distance(ComplexMatrix::identity(rep.dim()), target), {}};
  std::size_t examined = 1;
  if (max_length == 0) return make_result(std::move(best), rep, target_name, max_length, examined);

  const auto branches = static_cast<std::ptrdiff_t>(letters.size());
  std::vector<Candidate> branch_best(letters.size());
  std::vector<std::size_t> branch_examined(letters.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t b = 0; b < branches; ++b) {
    const auto idx = static_cast<std::size_t>(b);
    DepthFirstSearch dfs(target, rep, letters, max_length);
    dfs.run(letters[idx]);
    branch_best[idx] = std::move(dfs.best);
    branch_examined[idx] = dfs.examined;
  }
  // Reduction under a total order, so the winner does not depend on the
  // schedule.
  for (std::size_t b = 0; b < branch_best.size(); ++b) {
    examined += branch_examined[b];
    if (better(branch_best[b], best)) best = std::move(branch_best[b]);
  }
  return make_result(std::move(best), rep, target_name, max_length, examined);
}

GateSearchResult approximate_gate_reference(const ComplexMatrix& target,
                                            const BraidRepresentation& rep, int max_length,
                                            std::string_view target_name) {
  check_search_args(target, rep, max_length);
  const auto letters = alphabet(rep);
  const std::size_t k = letters.size();

  Candidate best{phase_distance(ComplexMatrix::identity(rep.dim()), target), {}};
  std::size_t examined = 1;
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<BraidLetter> word;
      ComplexMatrix product = ComplexMatrix::identity(rep.dim());
      for (std::size_t d : digits) {
        word.push_back(letters[d]);
        product = serial::matmul(matrix_of(letters[d], rep), product);
      }
      ++examined;
      const double dist = phase_distance(product, target);
      if (dist < best.distance) best = Candidate{dist, std::move(word)};

      std::size_t pos = digits.size();
      while (pos > 0 && digits[pos - 1] + 1 == k) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
  return make_result(std::move(best), rep, target_name, max_length, examined);
}

StateVector simulate_circuit(const std::vector<BraidWord>& words, const BraidRepresentation& rep,
                             const StateVector& initial) {
  StateVector v = initial;
  for (const auto& w : words) v = apply_braid_word(w, rep, v);
  return v;
}

}  // namespace quasibraid
