#include "quasibraid/cut_project.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "quasibraid/error.hpp"

namespace quasibraid {

namespace {

// Relative tolerance used to decide whether two gaps have the same length.
constexpr double kGapClusterTol = 1e-9;

}  // namespace

CutProjectScheme::CutProjectScheme(double slope, double window_lo, double window_hi, double shift,
                                   double scale)
    : slope_(slope),
      window_lo_(window_lo),
      window_hi_(window_hi),
      shift_(shift),
      scale_(scale),
      angle_(std::atan(slope)),
      cos_(std::cos(angle_)),
      sin_(std::sin(angle_)) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::invalid_argument, "scale must be positive");
  }
  if (!std::isfinite(slope) || !std::isfinite(shift) || !std::isfinite(window_lo) ||
      !std::isfinite(window_hi)) {
    throw Error(ErrorCode::invalid_argument, "scheme parameters must be finite");
  }
  if (window_lo > window_hi) {
    throw Error(ErrorCode::invalid_argument, "window lower bound exceeds upper bound");
  }
}

double CutProjectScheme::parallel(LatticePoint p) const noexcept {
  return static_cast<double>(p.m) * cos_ + static_cast<double>(p.n) * sin_;
}

double CutProjectScheme::perpendicular(LatticePoint p) const noexcept {
  return -static_cast<double>(p.m) * sin_ + static_cast<double>(p.n) * cos_;
}

CutProjectScheme canonical_fibonacci_scheme(double shift, double scale) {
  const double slope = 1.0 / kGoldenRatio;
  const double theta = std::atan(slope);
  return CutProjectScheme(slope, -std::sin(theta), std::cos(theta), shift, scale);
}

double star_map(const CutProjectScheme& scheme, LatticePoint p) { return scheme.perpendicular(p); }

QuasicrystalPointSet project_points(const CutProjectScheme& scheme, long search_radius) {
  if (search_radius < 1) throw Error(ErrorCode::invalid_argument, "search radius must be >= 1");
  const double lo = scheme.accept_lo();
  const double hi = scheme.accept_hi();

  std::vector<std::pair<double, LatticePoint>> accepted;
  std::size_t boundary_hits = 0;
  for (long m = -search_radius; m <= search_radius; ++m) {
    for (long n = -search_radius; n <= search_radius; ++n) {
      const LatticePoint p{m, n};
      const double star = scheme.perpendicular(p);
      if (std::abs(star - lo) <= kBoundaryTol || std::abs(star - hi) <= kBoundaryTol) {
        ++boundary_hits;
      }
      if (star >= lo && star < hi) accepted.emplace_back(scheme.parallel(p), p);
    }
  }
  std::sort(accepted.begin(), accepted.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    if (x.second.m != y.second.m) return x.second.m < y.second.m;
    return x.second.n < y.second.n;
  });

  QuasicrystalPointSet out;
  out.boundary_hits = boundary_hits;
  out.points.reserve(accepted.size());
  out.source_lattice_points.reserve(accepted.size());
  for (const auto& [x, p] : accepted) {
    out.points.push_back(x);
    out.source_lattice_points.push_back(p);
  }
  return out;
}

TilingWord::TilingWord(std::string letters) : letters_(std::move(letters)) {
  if (letters_.find_first_not_of("LS") != std::string::npos) {
    throw Error(ErrorCode::invalid_argument, "tiling word letters must be L or S: '" + letters_ + "'");
  }
}

bool is_fibonacci_patch(const TilingWord& word) {
  const auto& s = word.letters();
  return s.find("SS") == std::string::npos && s.find("LLL") == std::string::npos;
}

TilingWord extract_word(const QuasicrystalPointSet& point_set) {
  const auto& xs = point_set.points;
  if (xs.size() < 3) {
    throw Error(ErrorCode::invalid_argument, "need at least 3 points to extract a word");
  }
  std::vector<double> gaps(xs.size() - 1);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) gaps[i] = xs[i + 1] - xs[i];

  const auto [min_it, max_it] = std::minmax_element(gaps.begin(), gaps.end());
  const double short_gap = *min_it;
  const double long_gap = *max_it;
  const double tol = kGapClusterTol * long_gap;
  if (long_gap - short_gap <= tol || short_gap <= tol) {
    throw Error(ErrorCode::singular_configuration,
                "singular configuration: gaps do not form two distinct lengths");
  }

  std::string letters;
  letters.reserve(gaps.size());
  for (double g : gaps) {
    if (std::abs(g - long_gap) <= tol) {
      letters.push_back('L');
    } else if (std::abs(g - short_gap) <= tol) {
      letters.push_back('S');
    } else {
      throw Error(ErrorCode::singular_configuration,
                  "singular configuration: more than two gap lengths");
    }
  }
  return TilingWord(std::move(letters));
}

TileStatistics tile_statistics(const TilingWord& word) {
  if (word.empty()) throw Error(ErrorCode::invalid_argument, "tile statistics of an empty word");
  TileStatistics st;
  st.count_long = static_cast<std::size_t>(std::count(word.letters().begin(), word.letters().end(), 'L'));
  st.count_short = word.size() - st.count_long;
  if (st.count_short > 0) {
    st.ratio = static_cast<double>(st.count_long) / static_cast<double>(st.count_short);
  }
  return st;
}

}  // namespace quasibraid
