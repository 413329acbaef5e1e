#include "synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace synth {
namespace {

using strokelink::Character;
using strokelink::Point;
using strokelink::Stroke;

struct Vec {
  double x, y;
};

std::string utf8(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out += char(c);
  } else if (c < 0x800) {
    out += char(0xC0 | (c >> 6));
    out += char(0x80 | (c & 0x3F));
  } else {
    out += char(0xE0 | (c >> 12));
    out += char(0x80 | ((c >> 6) & 0x3F));
    out += char(0x80 | (c & 0x3F));
  }
  return out;
}

void sample_segment(Stroke& s, Vec a, Vec b, double step) {
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  const int n = std::max(1, int(len / step));
  for (int i = s.empty() ? 0 : 1; i <= n; ++i) {
    const double t = double(i) / n;
    const Point p{int(std::lround(a.x + t * (b.x - a.x))), int(std::lround(a.y + t * (b.y - a.y)))};
    if (s.empty() || !(s.back() == p)) s.points.push_back(p);
  }
}

Stroke polyline_stroke(std::mt19937& rng, Vec start, const GlyphOptions& opt) {
  std::uniform_int_distribution<int> segments(1, 3);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> length(60.0, 180.0);
  std::uniform_real_distribution<double> turn(0.6, 2.2);
  std::bernoulli_distribution left(0.5);
  Stroke s;
  Vec at = start;
  double heading = angle(rng);
  const int n = segments(rng);
  for (int k = 0; k < n; ++k) {
    const double len = length(rng) / (k ? 1.5 : 1.0);
    const Vec next{at.x + len * std::cos(heading), at.y + len * std::sin(heading)};
    sample_segment(s, at, next, opt.sample_step);
    at = next;
    heading += left(rng) ? turn(rng) : -turn(rng);
  }
  return s;
}

Stroke arc_stroke(std::mt19937& rng, Vec start, const GlyphOptions& opt) {
  std::uniform_real_distribution<double> radius(40.0, 110.0);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> sweep(1.2, 3.4);
  std::bernoulli_distribution ccw(0.5);
  const double r = radius(rng);
  const double a0 = angle(rng);
  const double da = (ccw(rng) ? 1 : -1) * sweep(rng);
  const Vec c{start.x - r * std::cos(a0), start.y - r * std::sin(a0)};
  Stroke s;
  const int n = std::max(2, int(r * std::abs(da) / opt.sample_step));
  for (int i = 0; i <= n; ++i) {
    const double a = a0 + da * i / n;
    const Point p{int(std::lround(c.x + r * std::cos(a))), int(std::lround(c.y + r * std::sin(a)))};
    if (s.empty() || !(s.back() == p)) s.points.push_back(p);
  }
  return s;
}

bool inside(const Stroke& s, int canvas) {
  return std::all_of(s.points.begin(), s.points.end(), [&](Point p) {
    return p.x >= 10 && p.y >= 10 && p.x <= canvas - 10 && p.y <= canvas - 10;
  });
}

int manhattan(Point a, Point b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

bool separated(const Stroke& a, const Stroke& b, int min_sep) {
  const int starts = manhattan(a.front(), b.front());
  const int ends = manhattan(a.back(), b.back());
  return starts + ends >= min_sep && starts >= min_sep / 3 && ends >= min_sep / 3;
}

bool separated_from_all(const Character& k, const Stroke& s, int min_sep) {
  for (const auto& t : k.strokes)
    if (!separated(t, s, min_sep)) return false;
  return true;
}

// Sum of start and end distances over strokes, matched in order; a cheap
// guard against two glyphs that are near copies of each other.
bool similar(const Character& a, const Character& b) {
  if (a.size() != b.size()) return false;
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += manhattan(a[i].front(), b[i].front()) + manhattan(a[i].back(), b[i].back());
  return total < 40 * int(a.size());
}

}  // namespace

Glyph make_glyph(std::mt19937& rng, const GlyphOptions& opt) {
  std::uniform_int_distribution<int> count(opt.min_strokes, opt.max_strokes);
  std::uniform_real_distribution<double> coord(30.0, opt.canvas - 30.0);
  std::bernoulli_distribution arc(0.3);
  std::bernoulli_distribution adjacent(opt.adjacent_fraction);

  for (;;) {
    Glyph g;
    const int n = count(rng);
    if (n >= 2 && adjacent(rng)) g.adjacent_pair = std::uniform_int_distribution<int>(0, n - 2)(rng);
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      bool placed = false;
      for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
        Vec start{coord(rng), coord(rng)};
        if (k > 0 && k - 1 == g.adjacent_pair) {
          const Point end = g.strokes[k - 1].back();
          start = {end.x + 6.0, end.y + 6.0};
        }
        Stroke s = arc(rng) ? arc_stroke(rng, start, opt) : polyline_stroke(rng, start, opt);
        if (s.size() < 8 || !inside(s, opt.canvas)) continue;
        if (!separated_from_all(g.strokes, s, opt.min_separation)) continue;
        g.strokes.strokes.push_back(std::move(s));
        placed = true;
      }
      ok = placed;
    }
    if (ok) return g;
  }
}

std::string label_for(std::size_t index) {
  const std::size_t slot = index / 4;
  switch (index % 4) {
    case 0:
      return utf8(char32_t(0x4E00 + slot));
    case 1:
      return utf8(char32_t(0x3041 + slot % 86)) + (slot >= 86 ? std::to_string(slot / 86) : "");
    case 2:
      return utf8(char32_t(0x30A1 + slot % 90)) + (slot >= 90 ? std::to_string(slot / 90) : "");
    default:
      return "g" + std::to_string(slot);
  }
}

std::vector<strokelink::RawCharacterRecord> Corpus::records() const {
  std::vector<strokelink::RawCharacterRecord> out;
  out.reserve(glyphs.size());
  for (std::size_t i = 0; i < glyphs.size(); ++i) out.push_back({labels[i], glyphs[i].strokes});
  return out;
}

Corpus make_corpus(std::uint32_t seed, std::size_t count, const GlyphOptions& opt) {
  std::mt19937 rng(seed);
  Corpus c;
  while (c.glyphs.size() < count) {
    Glyph g = make_glyph(rng, opt);
    const bool dup = std::any_of(c.glyphs.begin(), c.glyphs.end(),
                                 [&](const Glyph& other) { return similar(other.strokes, g.strokes); });
    if (dup) continue;
    c.labels.push_back(label_for(c.glyphs.size()));
    c.glyphs.push_back(std::move(g));
  }
  return c;
}

Character jitter(const Character& k, int amplitude, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-amplitude, amplitude);
  Character out = k;
  for (auto& s : out.strokes)
    for (auto& p : s.points) p = {p.x + d(rng), p.y + d(rng)};
  return out;
}

Character merge_pair(const Character& k, std::size_t first) {
  Character out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i == first + 1) continue;
    Stroke s = k[i];
    if (i == first) s.points.insert(s.points.end(), k[first + 1].points.begin(), k[first + 1].points.end());
    out.strokes.push_back(std::move(s));
  }
  return out;
}

}  // namespace synth
