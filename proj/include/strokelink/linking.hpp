#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "strokelink/distance.hpp"
#include "strokelink/model.hpp"

namespace strokelink {

struct LinkConfig {
  int passes_coarse = 3;
  int passes_fine = 3;
};

/// Pairwise stroke distances, rows = strokes of the larger character,
/// columns = strokes of the smaller. Computed once per linking call.
class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  CostMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t big, std::size_t small) const { return data_[big * cols_ + small]; }
  double& operator()(std::size_t big, std::size_t small) { return data_[big * cols_ + small]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

CostMatrix cost_matrix(const Character& big, const Character& small, StrokeDistanceKind d);

/// Sum of costs over assigned entries.
double assignment_cost(const CostMatrix& cost, const StrokeMap& map);

/// Visits small strokes in order; each takes the free big stroke with the
/// lowest cost, ties going to the lowest index. Requires rows >= cols >= 1.
StrokeMap greedy_init(const CostMatrix& cost);
StrokeMap greedy_init(const Character& big, const Character& small, StrokeDistanceKind d);

/// One accepted move during iterative improvement, for tracing.
struct ImproveStep {
  int pass = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  bool swap = false;  // false: assignment moved to an unassigned slot
  StrokeMap map;
};

/// `passes` full sweeps over ordered pairs (i, j), i != j, ascending. A swap
/// (j assigned) or a move (j unassigned) is taken only on a strict cost
/// decrease, so the total cost never increases.
StrokeMap iterative_improve(const CostMatrix& cost, StrokeMap map, int passes,
                            std::vector<ImproveStep>* trace = nullptr);
StrokeMap iterative_improve(const Character& big, const Character& small, StrokeDistanceKind d, StrokeMap map,
                            int passes);

/// Greedy initialization followed by iterative improvement.
StrokeMap link(const CostMatrix& cost, int passes);

inline constexpr std::size_t kBruteForceLimit = 9;

/// Exhaustive minimum-cost injective placement. Among equal-cost placements
/// the lexicographically smallest (slot of small 0, slot of small 1, ...)
/// wins. Throws for more than kBruteForceLimit rows.
StrokeMap brute_force_link(const CostMatrix& cost);
StrokeMap brute_force_link(const Character& big, const Character& small, StrokeDistanceKind d);

/// n-m correspondence cost: for every small stroke, the distance between it
/// and the concatenation (ascending big index) of the big strokes mapped to
/// it. Unassigned entries and small strokes without a group contribute 0.
double correspondence_cost(const StrokeMap& map, const Character& big, const Character& small,
                           StrokeDistanceKind d);

/// Makes a partial injective map total and surjective: leading free entries
/// take the first assigned value, trailing ones the last, and each interior
/// gap is split at the point giving the lowest correspondence cost (gaps are
/// resolved left to right, ties to the earliest split).
StrokeMap complete_map(StrokeMap map, const Character& big, const Character& small, StrokeDistanceKind d);

/// Inverse of a bijective map (value -> index).
StrokeMap invert_permutation(const StrokeMap& map);

}  // namespace strokelink
