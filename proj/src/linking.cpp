#include "strokelink/linking.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "strokelink/error.hpp"

namespace strokelink {
namespace {

void require_shape(const CostMatrix& cost) {
  if (cost.cols() == 0 || cost.rows() < cost.cols())
    throw Error(ErrorCode::InvalidArgument, "linking needs rows >= cols >= 1");
}

Stroke group_stroke(const StrokeMap& map, const Character& big, int value) {
  Stroke out;
  for (std::size_t k = 0; k < map.size(); ++k)
    if (map[k] == value) out.points.insert(out.points.end(), big[k].points.begin(), big[k].points.end());
  return out;
}

double group_cost(const StrokeMap& map, const Character& big, const Character& small, int value,
                  StrokeDistanceKind d) {
  Stroke conc = group_stroke(map, big, value);
  if (conc.empty()) return 0.0;
  return stroke_distance(d, conc, small[static_cast<std::size_t>(value)]);
}

struct BruteForce {
  const CostMatrix& cost;
  std::vector<int> slot_of;  // small -> big
  std::vector<bool> used;
  std::vector<int> best_slots;
  double best = std::numeric_limits<double>::infinity();

  void search(std::size_t small, double acc) {
    if (small == cost.cols()) {
      if (!(acc < best)) return;
      best = acc;
      best_slots = slot_of;
      return;
    }
    for (std::size_t big = 0; big < cost.rows(); ++big) {
      if (used[big]) continue;
      used[big] = true;
      slot_of[small] = static_cast<int>(big);
      search(small + 1, acc + cost(big, small));
      used[big] = false;
    }
  }
};

}  // namespace

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged cost matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CostMatrix cost_matrix(const Character& big, const Character& small, StrokeDistanceKind d) {
  CostMatrix c(big.size(), small.size());
  for (std::size_t b = 0; b < big.size(); ++b)
    for (std::size_t s = 0; s < small.size(); ++s) c(b, s) = stroke_distance(d, big[b], small[s]);
  return c;
}

double assignment_cost(const CostMatrix& cost, const StrokeMap& map) {
  double total = 0.0;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] != kUnassigned) total += cost(i, static_cast<std::size_t>(map[i]));
  return total;
}

StrokeMap greedy_init(const CostMatrix& cost) {
  require_shape(cost);
  StrokeMap map(cost.rows(), kUnassigned);
  for (std::size_t s = 0; s < cost.cols(); ++s) {
    std::size_t best = cost.rows();
    for (std::size_t b = 0; b < cost.rows(); ++b) {
      if (map[b] != kUnassigned) continue;
      if (best == cost.rows() || cost(b, s) < cost(best, s)) best = b;
    }
    map[best] = static_cast<int>(s);
  }
  return map;
}

StrokeMap greedy_init(const Character& big, const Character& small, StrokeDistanceKind d) {
  return greedy_init(cost_matrix(big, small, d));
}

StrokeMap iterative_improve(const CostMatrix& cost, StrokeMap map, int passes, std::vector<ImproveStep>* trace) {
  if (map.size() != cost.rows()) throw Error(ErrorCode::InvalidArgument, "stroke map length mismatch");
  const std::size_t n = map.size();
  const auto c = [&](std::size_t big, int small) { return cost(big, static_cast<std::size_t>(small)); };

  for (int pass = 1; pass <= passes; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n && map[i] != kUnassigned; ++j) {
        if (j == i) continue;
        const double d_ii = c(i, map[i]);
        bool moved = false;
        bool swapped = false;
        if (map[j] != kUnassigned) {
          if (c(i, map[j]) + c(j, map[i]) < d_ii + c(j, map[j])) {
            std::swap(map[i], map[j]);
            moved = swapped = true;
          }
        } else if (c(j, map[i]) < d_ii) {
          map[j] = map[i];
          map[i] = kUnassigned;
          moved = true;
        }
        if (moved && trace) trace->push_back({pass, i, j, swapped, map});
      }
    }
  }
  return map;
}

StrokeMap iterative_improve(const Character& big, const Character& small, StrokeDistanceKind d, StrokeMap map,
                            int passes) {
  return iterative_improve(cost_matrix(big, small, d), std::move(map), passes);
}

StrokeMap link(const CostMatrix& cost, int passes) { return iterative_improve(cost, greedy_init(cost), passes); }

StrokeMap brute_force_link(const CostMatrix& cost) {
  require_shape(cost);
  if (cost.rows() > kBruteForceLimit) throw Error(ErrorCode::InvalidArgument, "instance too large for oracle");
  BruteForce bf{cost, std::vector<int>(cost.cols(), kUnassigned), std::vector<bool>(cost.rows(), false), {}};
  bf.search(0, 0.0);
  StrokeMap map(cost.rows(), kUnassigned);
  for (std::size_t s = 0; s < bf.best_slots.size(); ++s) map[static_cast<std::size_t>(bf.best_slots[s])] = int(s);
  return map;
}

StrokeMap brute_force_link(const Character& big, const Character& small, StrokeDistanceKind d) {
  return brute_force_link(cost_matrix(big, small, d));
}

double correspondence_cost(const StrokeMap& map, const Character& big, const Character& small,
                           StrokeDistanceKind d) {
  double total = 0.0;
  for (std::size_t v = 0; v < small.size(); ++v) total += group_cost(map, big, small, static_cast<int>(v), d);
  return total;
}

StrokeMap complete_map(StrokeMap map, const Character& big, const Character& small, StrokeDistanceKind d) {
  if (map.size() != big.size()) throw Error(ErrorCode::InvalidArgument, "stroke map length mismatch");
  std::vector<std::size_t> assigned;
  std::vector<bool> seen(small.size(), false);
  for (std::size_t k = 0; k < map.size(); ++k) {
    if (map[k] == kUnassigned) continue;
    if (map[k] < 0 || static_cast<std::size_t>(map[k]) >= small.size())
      throw Error(ErrorCode::InvalidArgument, "stroke map value out of range");
    seen[static_cast<std::size_t>(map[k])] = true;
    assigned.push_back(k);
  }
  if (assigned.empty()) throw Error(ErrorCode::InvalidArgument, "stroke map has no assignments");
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorCode::InvalidArgument, "stroke map does not cover every stroke");

  const std::size_t first = assigned.front();
  const std::size_t last = assigned.back();
  for (std::size_t k = 0; k < first; ++k) map[k] = map[first];
  for (std::size_t k = last + 1; k < map.size(); ++k) map[k] = map[last];

  for (std::size_t g = 0; g + 1 < assigned.size(); ++g) {
    const std::size_t a = assigned[g];
    const std::size_t b = assigned[g + 1];
    if (b - a < 2) continue;
    const int va = map[a];
    const int vb = map[b];
    std::size_t best_split = a;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t split = a; split < b; ++split) {
      for (std::size_t k = a + 1; k < b; ++k) map[k] = k <= split ? va : vb;
      double c = group_cost(map, big, small, va, d);
      if (vb != va) c += group_cost(map, big, small, vb, d);
      if (c < best) {
        best = c;
        best_split = split;
      }
    }
    for (std::size_t k = a + 1; k < b; ++k) map[k] = k <= best_split ? va : vb;
  }
  return map;
}

StrokeMap invert_permutation(const StrokeMap& map) {
  StrokeMap inv(map.size(), kUnassigned);
  for (std::size_t k = 0; k < map.size(); ++k) {
    const int v = map[k];
    if (v < 0 || static_cast<std::size_t>(v) >= map.size() || inv[static_cast<std::size_t>(v)] != kUnassigned)
      throw Error(ErrorCode::InvalidArgument, "stroke map is not a permutation");
    inv[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  return inv;
}

}  // namespace strokelink
