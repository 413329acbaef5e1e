#include "strokelink/model.hpp"

#include "strokelink/error.hpp"

namespace strokelink {

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.score != b.score) return a.score < b.score;
  return a.label < b.label;
}

Stroke concat_strokes(std::span<const Stroke> strokes) {
  if (strokes.empty()) throw Error(ErrorCode::InvalidArgument, "empty concatenation");
  std::size_t total = 0;
  for (const auto& s : strokes) total += s.size();
  Stroke out;
  out.points.reserve(total);
  for (const auto& s : strokes) out.points.insert(out.points.end(), s.points.begin(), s.points.end());
  return out;
}

}  // namespace strokelink
