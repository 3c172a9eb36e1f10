#pragma once

// One-dimensional model sets cut from the square lattice Z^2.
//
// The parallel line makes angle theta with the lattice x-axis. A lattice
// point (m, n) projects to
//   parallel:       m cos(theta) + n sin(theta)
//   perpendicular: -m sin(theta) + n cos(theta)   (the star image)
// and is accepted when its star image lies in the half-open interval
// [scale * w_lo + shift, scale * w_hi + shift).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quasibraid {

inline constexpr double kGoldenRatio = 1.6180339887498948482;

struct LatticePoint {
  long m = 0;
  long n = 0;
  bool operator==(const LatticePoint&) const = default;
};

class CutProjectScheme {
 public:
  // Raw constructor: any slope, window [window_lo, window_hi).
  CutProjectScheme(double slope, double window_lo, double window_hi, double shift, double scale);

  double slope() const noexcept { return slope_; }
  double window_lo() const noexcept { return window_lo_; }
  double window_hi() const noexcept { return window_hi_; }
  double shift() const noexcept { return shift_; }
  double scale() const noexcept { return scale_; }
  double angle() const noexcept { return angle_; }

  // Acceptance interval after scaling and shifting.
  double accept_lo() const noexcept { return scale_ * window_lo_ + shift_; }
  double accept_hi() const noexcept { return scale_ * window_hi_ + shift_; }

  double parallel(LatticePoint p) const noexcept;
  double perpendicular(LatticePoint p) const noexcept;

 private:
  double slope_;
  double window_lo_;
  double window_hi_;
  double shift_;
  double scale_;
  double angle_;
  double cos_;
  double sin_;
};

// Slope 1/phi; window is the perpendicular shadow of the half-open unit
// cell [0,1)^2, i.e. [-sin(theta), cos(theta)).
CutProjectScheme canonical_fibonacci_scheme(double shift, double scale);

double star_map(const CutProjectScheme& scheme, LatticePoint p);

struct QuasicrystalPointSet {
  std::vector<double> points;
  std::vector<LatticePoint> source_lattice_points;
  // Accepted or rejected star images within kBoundaryTol of a window edge.
  std::size_t boundary_hits = 0;
};

inline constexpr double kBoundaryTol = 1e-12;

QuasicrystalPointSet project_points(const CutProjectScheme& scheme, long search_radius);

// A finite patch over {L, S}. Letters outside the alphabet are rejected;
// the Fibonacci local rules (no SS, no LLL) are checked separately by
// is_fibonacci_patch since local moves may break them.
class TilingWord {
 public:
  TilingWord() = default;
  explicit TilingWord(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  auto operator<=>(const TilingWord&) const = default;

 private:
  std::string letters_;
};

bool is_fibonacci_patch(const TilingWord& word);

// Gap lengths of the point set, classified as long or short.
TilingWord extract_word(const QuasicrystalPointSet& point_set);

struct TileStatistics {
  std::size_t count_long = 0;
  std::size_t count_short = 0;
  // Empty when count_short == 0.
  std::optional<double> ratio;
};

TileStatistics tile_statistics(const TilingWord& word);

}  // namespace quasibraid
