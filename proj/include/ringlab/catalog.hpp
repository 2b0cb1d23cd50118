#pragma once

// The solution catalog: period-6 strips of height 1 and 2, the twelve
// special seeds, stacking, and label-preserving isomorphism.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ringlab/configuration.hpp"
#include "ringlab/distributions.hpp"
#include "ringlab/engine.hpp"
#include "ringlab/labeling.hpp"
#include "ringlab/lattice.hpp"

namespace ringlab {

inline constexpr int kStripPeriod = 6;

// Rows are listed bottom first. Row r holds Up(k, r) and Down(k, r) for
// k = 0..5; the pattern repeats with period 6 in x.
struct StripSpec {
  int height = 1;
  int index = 1;
  int period = kStripPeriod;
  std::vector<std::array<int, 6>> ups;
  std::vector<std::array<int, 6>> downs;
  char top = 'A';
  char bottom = 'A';

  Label mark(const FaceCoord& f) const {
    if (f.y < 0 || f.y >= height) throw Error("face outside the strip");
    const int k = mod(f.x, period);
    return Label(f.orient == Orient::Up ? ups[f.y][k] : downs[f.y][k]);
  }
};

// A hexagon is the link of a vertex: six face labels starting at the face
// between 0 and 60 degrees and going counterclockwise; -1 leaves a face out.
using Hexagon = std::array<int, 6>;

inline void put_hexagon(std::map<FaceCoord, Label>& marks, VertexCoord v, const Hexagon& h) {
  const auto lf = link_faces(v);
  for (int k = 0; k < 6; ++k) {
    if (h[k] < 0) continue;
    auto [it, fresh] = marks.emplace(lf[k], Label(h[k]));
    if (!fresh && it->second != Label(h[k])) throw Error("hexagons disagree on a shared face");
  }
}

namespace detail {

struct Height1Row {
  std::array<int, 6> ups, downs;
  char top, bottom;
};

inline const std::array<Height1Row, 4>& height1_data() {
  static const std::array<Height1Row, 4> data = {{
      {{0, 2, 2, 1, 1, 0}, {1, 1, 0, 0, 2, 2}, 'A', 'B'},
      {{0, 1, 2, 0, 1, 2}, {2, 0, 1, 2, 0, 1}, 'A', 'A'},
      {{1, 1, 0, 0, 2, 2}, {0, 2, 2, 1, 1, 0}, 'A', 'B'},
      {{2, 0, 1, 2, 0, 1}, {1, 2, 0, 1, 2, 0}, 'B', 'B'},
  }};
  return data;
}

// Links of the center-line vertices (k, 0), k = 1..6. Consecutive hexagons
// share two faces, so only the first is given in full.
inline const std::array<std::array<Hexagon, 6>, 3>& height2_data() {
  static const std::array<std::array<Hexagon, 6>, 3> data = {{
      {{{2, 0, 1, 2, 0, 1},
        {2, 0, -1, -1, 2, 1},
        {2, 1, -1, -1, 0, 1},
        {1, 0, -1, -1, 0, 2},
        {1, 2, -1, -1, 0, 2},
        {1, 0, -1, -1, 1, 2}}},
      {{{0, 1, 0, 1, 2, 1},
        {0, 2, -1, -1, 0, 1},
        {1, 2, -1, -1, 2, 0},
        {1, 2, -1, -1, 1, 0},
        {1, 0, -1, -1, 2, 0},
        {0, 2, -1, -1, 2, 1}}},
      {{{0, 2, 0, 2, 1, 2},
        {2, 1, -1, -1, 1, 0},
        {2, 0, -1, -1, 1, 0},
        {2, 1, -1, -1, 2, 0},
        {0, 1, -1, -1, 1, 2},
        {0, 1, -1, -1, 0, 2}}},
  }};
  return data;
}

inline StripSpec height2_strip(int index) {
  const auto& hexes = height2_data().at(index - 1);
  std::map<FaceCoord, Label> marks;
  // Shift the center line from y = 0 to y = 1 by (1, 1), which keeps labels.
  for (int k = 1; k <= 6; ++k) put_hexagon(marks, {k + 1, 1}, hexes[k - 1]);
  StripSpec s;
  s.height = 2;
  s.index = index;
  s.top = 'A';
  s.bottom = 'B';
  s.ups.assign(2, {-1, -1, -1, -1, -1, -1});
  s.downs.assign(2, {-1, -1, -1, -1, -1, -1});
  for (const auto& [f, l] : marks) {
    int& slot = (f.orient == Orient::Up ? s.ups : s.downs)[f.y][mod(f.x, kStripPeriod)];
    if (slot >= 0 && slot != l.value()) throw Error("height-2 strip does not close up");
    slot = l.value();
  }
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 6; ++k)
      if (s.ups[r][k] < 0 || s.downs[r][k] < 0) throw Error("height-2 strip has a gap");
  return s;
}

} // namespace detail

// The 4 strips of height 1 followed by the 3 strips of height 2.
inline const std::vector<StripSpec>& strip_table() {
  static const std::vector<StripSpec> table = [] {
    std::vector<StripSpec> out;
    int i = 1;
    for (const auto& row : detail::height1_data()) {
      StripSpec s;
      s.height = 1;
      s.index = i++;
      s.ups = {row.ups};
      s.downs = {row.downs};
      s.top = row.top;
      s.bottom = row.bottom;
      out.push_back(s);
    }
    for (int k = 1; k <= 3; ++k) out.push_back(detail::height2_strip(k));
    return out;
  }();
  return table;
}

inline const StripSpec& strip(int height, int index) {
  for (const auto& s : strip_table())
    if (s.height == height && s.index == index) return s;
  throw Error("no such strip");
}

// One row of a stack: a strip, possibly turned upside down (reflected in a
// horizontal line, which keeps the edge marking), moved right by `shift`.
struct StackRow {
  int index = 1;
  bool flipped = false;
  int shift = 0;
  friend bool operator==(const StackRow&, const StackRow&) = default;
  friend auto operator<=>(const StackRow&, const StackRow&) = default;
};

struct StackingWord {
  int height = 1;
  std::vector<StackRow> rows; // bottom first
};

inline char top_letter(const StripSpec& s, bool flipped) { return flipped ? s.bottom : s.top; }
inline char bottom_letter(const StripSpec& s, bool flipped) { return flipped ? s.top : s.bottom; }

// The isometry taking the strip's own rows 0..h-1 to a row placed at base y.
inline LatticeIsometry row_placement(int height, const StackRow& row, int base_y) {
  if (mod(row.shift - base_y, 3) != 0) throw Error("shift does not preserve the edge marking at this height");
  LatticeIsometry g = LatticeIsometry::translation(row.shift, base_y);
  if (row.flipped) g = g * LatticeIsometry::translation(height, height) * LatticeIsometry(0, true, {0, 0});
  return g;
}

// Facing letters across an interface: equal for height-1 strips, A over B
// for height-2 strips. Derived from stacking_table, which asks the engine.
inline bool letters_compatible(int height, char lower_top, char upper_bottom) {
  return height == 1 ? lower_top == upper_bottom : lower_top != upper_bottom;
}

namespace detail {

inline void place_row(Configuration& c, int height, const StackRow& row, int base_y, int x0, int x1) {
  const StripSpec& s = strip(height, row.index);
  const LatticeIsometry g = row_placement(height, row, base_y);
  const LatticeIsometry inv = g.inverse();
  for (int y = base_y; y < base_y + height; ++y)
    for (int x = x0; x < x1; ++x)
      for (auto f : {up(x, y), down(x, y)}) c.set(f, s.mark(inv(f)));
}

} // namespace detail

inline bool interface_ok(int height, const StackRow& lo, const StackRow& hi, Symmetry mode = kDefaultSymmetry);

// Stacks the rows of `word` over x in [0, 6 * width_periods). With
// `periodic`, the window is a cylinder of that circumference. With
// `validate`, facing letters and every interface are checked first.
inline Configuration assemble(const StackingWord& word, int width_periods, bool periodic = false,
                              bool validate = true) {
  if (width_periods < 1) throw Error("width must be at least one period");
  if (word.height != 1 && word.height != 2) throw Error("strip height must be 1 or 2");
  const int width = kStripPeriod * width_periods;
  Configuration c({}, periodic ? std::optional<int>(width) : std::nullopt);
  for (std::size_t j = 0; j < word.rows.size(); ++j) {
    if (validate && j > 0) {
      const auto& lo = word.rows[j - 1];
      const auto& hi = word.rows[j];
      if (!letters_compatible(word.height, top_letter(strip(word.height, lo.index), lo.flipped),
                              bottom_letter(strip(word.height, hi.index), hi.flipped)))
        throw Error("interface mismatch");
      if (!interface_ok(word.height, lo, hi))
        throw Error("rows " + std::to_string(j - 1) + " and " + std::to_string(j) + " do not fit at these shifts");
    }
    detail::place_row(c, word.height, word.rows[j], static_cast<int>(j) * word.height, 0, width);
  }
  return c;
}

// All rows (strip, orientation, shift) that can sit at base height y, one per
// distinct marking: flips of the symmetric strips are dropped.
inline std::vector<StackRow> row_choices(int height, int base_y) {
  std::vector<StackRow> out;
  std::set<std::map<FaceCoord, Label>> seen;
  for (const auto& s : strip_table()) {
    if (s.height != height) continue;
    for (bool flip : {false, true})
      for (int t = 0; t < kStripPeriod; ++t) {
        if (mod(t - base_y, 3) != 0) continue;
        const StackRow r{s.index, flip, t};
        Configuration c;
        detail::place_row(c, height, r, base_y, 0, kStripPeriod);
        if (seen.insert(c.marks()).second) out.push_back(r);
      }
  }
  return out;
}

// Every pair (lower at y = 0, upper at y = height) whose interface the engine
// accepts, on a cylinder of one period.
struct StackingPair {
  StackRow lower, upper;
  bool letters_match = false;
};

inline std::vector<StackingPair> stacking_table(int height, Symmetry mode = kDefaultSymmetry) {
  std::vector<StackingPair> out;
  for (const auto& lo : row_choices(height, 0))
    for (const auto& hi : row_choices(height, height)) {
      const StackingWord w{height, {lo, hi}};
      if (check(assemble(w, 1, true, false), mode).status != Status::Contradiction) {
        const bool match = letters_compatible(height, top_letter(strip(height, lo.index), lo.flipped),
                                              bottom_letter(strip(height, hi.index), hi.flipped));
        out.push_back({lo, hi, match});
      }
    }
  return out;
}

// An interface only depends on the two strips and the relative shift: a
// label-preserving translation moves any lower row to base 0, shift 0.
inline bool interface_ok(int height, const StackRow& lo, const StackRow& hi, Symmetry mode) {
  const StackRow l{lo.index, lo.flipped, 0};
  const StackRow h{hi.index, hi.flipped, mod(hi.shift - lo.shift, kStripPeriod)};
  if (mod(h.shift - height, 3) != 0) return false;
  return check(assemble({height, {l, h}}, 1, true, false), mode).status != Status::Contradiction;
}

// All stacking words with `rows` rows whose interfaces the engine accepts.
inline std::vector<StackingWord> stacking_words(int height, int rows, Symmetry mode = kDefaultSymmetry) {
  std::map<std::tuple<int, bool, int, bool, int>, bool> ok;
  auto fits = [&](const StackRow& lo, const StackRow& hi) {
    const auto key = std::make_tuple(lo.index, lo.flipped, hi.index, hi.flipped, mod(hi.shift - lo.shift, kStripPeriod));
    auto it = ok.find(key);
    if (it == ok.end()) it = ok.emplace(key, interface_ok(height, lo, hi, mode)).first;
    return it->second;
  };
  std::vector<StackingWord> out;
  std::vector<StackRow> cur;
  auto rec = [&](auto&& self, int j) -> void {
    if (j == rows) {
      out.push_back({height, cur});
      return;
    }
    for (const auto& r : row_choices(height, j * height)) {
      if (j > 0 && !fits(cur.back(), r)) continue;
      cur.push_back(r);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Special seeds: the link of vertex (1, 0) in full, four faces of the link of
// (0, 1) and three of the link of (0, 0).
struct SpecialSeed {
  int index;
  Hexagon at_1_0, at_0_1, at_0_0;

  Configuration configuration() const {
    std::map<FaceCoord, Label> marks;
    put_hexagon(marks, {1, 0}, at_1_0);
    put_hexagon(marks, {0, 1}, at_0_1);
    put_hexagon(marks, {0, 0}, at_0_0);
    return Configuration::from_marks(marks);
  }
};

inline const std::array<SpecialSeed, 12>& special_seeds() {
  static const std::array<SpecialSeed, 12> seeds = {{
      {1, {2, 1, 0, 1, 0, 1}, {2, 0, 1, 2, -1, -1}, {-1, -1, 1, 0, 2, -1}},
      {2, {1, 2, 0, 2, 0, 2}, {0, 1, 0, 1, -1, -1}, {-1, -1, 0, 2, 0, -1}},
      {3, {0, 1, 0, 1, 2, 1}, {0, 1, 0, 2, -1, -1}, {-1, -1, 0, 2, 0, -1}},
      {4, {0, 2, 0, 2, 1, 2}, {1, 0, 2, 1, -1, -1}, {-1, -1, 2, 0, 1, -1}},
      {5, {0, 2, 1, 0, 2, 1}, {1, 2, 0, 2, -1, -1}, {-1, -1, 0, 1, 2, -1}},
      {6, {1, 0, 1, 2, 1, 0}, {1, 0, 2, 0, -1, -1}, {-1, -1, 1, 2, 1, -1}},
      {7, {1, 2, 1, 0, 1, 0}, {0, 2, 1, 2, -1, -1}, {-1, -1, 1, 2, 1, -1}},
      {8, {2, 0, 1, 2, 0, 1}, {2, 0, 1, 0, -1, -1}, {-1, -1, 2, 1, 0, -1}},
      {9, {0, 1, 2, 0, 1, 2}, {0, 2, 1, 0, -1, -1}, {-1, -1, 2, 0, 1, -1}},
      {10, {2, 0, 2, 1, 2, 0}, {2, 1, 2, 1, -1, -1}, {-1, -1, 2, 1, 0, -1}},
      {11, {2, 1, 2, 0, 2, 0}, {2, 1, 2, 0, -1, -1}, {-1, -1, 1, 0, 2, -1}},
      {12, {1, 0, 2, 1, 0, 2}, {1, 2, 0, 1, -1, -1}, {-1, -1, 0, 1, 2, -1}},
  }};
  return seeds;
}

inline const SpecialSeed& special_seed(int index) {
  if (index < 1 || index > 12) throw Error("special index must be in 1..12");
  return special_seeds()[index - 1];
}

// The special puzzle on the radius-r ball around Up(0, 0).
inline Configuration special_puzzle(int index, int radius, Symmetry mode = kDefaultSymmetry) {
  if (radius < 1) throw Error("radius must be at least 1");
  const Configuration seed = special_seed(index).configuration();
  const auto target = ball(up(0, 0), radius);
  auto p = propagate(seed.extended(target), mode);
  if (!p) throw Error("special seed contradicts");
  if (p.config->total()) return p.config->restricted(p.config->window());
  SearchOptions opt;
  opt.mode = mode;
  opt.threads = 1;
  opt.limit = 2;
  auto set = enumerate_completions(seed, target, opt);
  if (set.count != 1) throw Error("special seed does not determine its puzzle");
  return set.at(0);
}

// Label-preserving isometries carrying a's window onto b's window and a's
// marks onto b's marks. Throws when no isometry matches the windows at all.
inline std::optional<LatticeIsometry> isomorphic(const Configuration& a, const Configuration& b) {
  if (a.window().size() != b.window().size()) throw Error("incongruent windows");
  if (a.window().empty()) return LatticeIsometry::identity();
  const auto va = vertices_of(a.window());
  const auto vb = vertices_of(b.window());
  const VertexCoord bmin = vb.front();
  const std::set<FaceCoord> bwin(b.window().begin(), b.window().end());
  bool congruent = false;
  for (const auto& g0 : point_group()) {
    VertexCoord amin = g0(va.front());
    for (auto v : va) amin = std::min(amin, g0(v));
    const LatticeIsometry g = LatticeIsometry::translation(bmin.x - amin.x, bmin.y - amin.y) * g0;
    bool same = true;
    for (const auto& f : a.window())
      if (!bwin.count(g(f))) {
        same = false;
        break;
      }
    if (!same) continue;
    congruent = true;
    if (!preserves_labels(g)) continue;
    bool marks = true;
    for (const auto& f : a.window())
      if (a.mark(f) != b.mark(g(f))) {
        marks = false;
        break;
      }
    if (marks) return g;
  }
  if (!congruent) throw Error("incongruent windows");
  return std::nullopt;
}

// --- The height-1 strips read from one marked vertex ------------------------

// The six strips of the case analysis: markings of row 0 in the same
// orientation as the table, each carrying the same distribution: vertex (k, y)
// of the strip has axis A1 for even k and A2 for odd k, on both lines.
struct CaseStrip {
  char name;
  std::array<int, 6> ups, downs;
};

inline const std::array<CaseStrip, 6>& case_strips() {
  static const std::array<CaseStrip, 6> data = {{
      {'a', {0, 2, 2, 1, 1, 0}, {1, 1, 0, 0, 2, 2}},
      {'b', {0, 1, 2, 0, 1, 2}, {2, 0, 1, 2, 0, 1}},
      {'c', {1, 1, 0, 0, 2, 2}, {0, 2, 2, 1, 1, 0}},
      {'d', {1, 0, 0, 2, 2, 1}, {2, 1, 1, 0, 0, 2}},
      {'e', {2, 2, 1, 1, 0, 0}, {0, 0, 2, 2, 1, 1}},
      {'f', {2, 0, 1, 2, 0, 1}, {1, 2, 0, 1, 2, 0}},
  }};
  return data;
}

inline Axis case_strip_axis(VertexCoord v) { return mod(v.x, 2) == 0 ? Axis::A1 : Axis::A2; }

// What a strip looks like from a vertex x with s(x) = 0 on one of its
// boundary lines, after moving x to (1, 0) with the strip above: the axes at
// the corners of Up(0, 0), then the marks of Up(0, 0) and Down(0, 0).
using InitialConfiguration = std::array<int, 5>;

struct StripCaseReport {
  std::map<char, std::vector<InitialConfiguration>> readings;
  int distinct_configurations = 0;
  // Same marking up to a label-preserving translation; within a class the
  // distributions differ (a shift by 3 swaps them).
  std::vector<std::string> classes;
  // Same marking up to any label-preserving isometry keeping the row.
  std::vector<std::string> classes_with_reflections;
};

namespace detail {

inline Label case_mark(const CaseStrip& s, const FaceCoord& f) {
  const int k = mod(f.x, kStripPeriod);
  return Label(f.orient == Orient::Up ? s.ups[k] : s.downs[k]);
}

// Label-preserving isometries keeping strip row 0 in place as a set.
inline std::vector<LatticeIsometry> strip_symmetries(bool reflections) {
  std::vector<LatticeIsometry> out;
  const LatticeIsometry flip = LatticeIsometry::translation(1, 1) * LatticeIsometry(0, true, {0, 0});
  for (int t = 0; t < kStripPeriod; ++t)
    for (bool f : {false, true}) {
      if (f && !reflections) continue;
      LatticeIsometry g = LatticeIsometry::translation(t, 0);
      if (f) g = g * flip;
      if (preserves_labels(g)) out.push_back(g);
    }
  return out;
}

inline bool same_strip(const CaseStrip& a, const CaseStrip& b, bool reflections) {
  for (const auto& g : strip_symmetries(reflections)) {
    bool ok = true;
    for (int x = 0; x < kStripPeriod && ok; ++x)
      for (auto f : {up(x, 0), down(x, 0)})
        if (case_mark(a, f) != case_mark(b, g(f))) ok = false;
    if (ok) return true;
  }
  return false;
}

inline std::vector<std::string> strip_classes(bool reflections) {
  const auto& cs = case_strips();
  std::vector<std::string> out;
  std::vector<bool> used(cs.size(), false);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (used[i]) continue;
    std::string cls(1, cs[i].name);
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (!used[j] && same_strip(cs[i], cs[j], reflections)) {
        used[j] = true;
        cls += cs[j].name;
      }
    out.push_back(cls);
  }
  return out;
}

} // namespace detail

inline StripCaseReport strip_case_analysis() {
  StripCaseReport rep;
  std::set<InitialConfiguration> all;
  const LatticeIsometry flip = LatticeIsometry::translation(1, 1) * LatticeIsometry(0, true, {0, 0});
  for (const auto& s : case_strips()) {
    for (int y : {0, 1})
      for (int x = 0; x < kStripPeriod; ++x) {
        const VertexCoord v{x, y};
        if (vertex_s(v) != Label(0)) continue;
        // h takes the strip to its reading frame; x goes to (1, 0).
        LatticeIsometry h;
        if (y == 0) {
          h = LatticeIsometry::translation(1 - x, 0);
        } else {
          const VertexCoord fv = flip(v);
          h = LatticeIsometry::translation(1 - fv.x, -fv.y) * flip;
        }
        if (!preserves_labels(h)) throw Error("reading frame breaks the edge marking");
        const LatticeIsometry back = h.inverse();
        InitialConfiguration ic{};
        const auto corners = vertices(up(0, 0));
        for (int i = 0; i < 3; ++i) ic[i] = index(h(case_strip_axis(back(corners[i]))));
        ic[3] = detail::case_mark(s, back(up(0, 0))).value();
        ic[4] = detail::case_mark(s, back(down(0, 0))).value();
        rep.readings[s.name].push_back(ic);
        all.insert(ic);
      }
  }
  rep.distinct_configurations = static_cast<int>(all.size());
  rep.classes = detail::strip_classes(false);
  rep.classes_with_reflections = detail::strip_classes(true);
  return rep;
}

// --- Bounded classification ---------------------------------------------

// A patch is the marking of ball(Up(0, 0), r) listed in ball order.
using Patch = std::vector<std::int8_t>;

inline std::optional<Patch> patch_at(const Configuration& c, const FaceCoord& at, const std::vector<FaceCoord>& ball0) {
  const LatticeIsometry g = label_isometry(up(0, 0), at);
  Patch p;
  p.reserve(ball0.size());
  for (const auto& f : ball0) {
    const auto m = c.mark(g(f));
    if (!m) return std::nullopt;
    p.push_back(static_cast<std::int8_t>(m->value()));
  }
  return p;
}

// Every marking of the radius-r ball, with Up(0, 0) marked `center`, that
// occurs somewhere in a catalog puzzle: stacks of height-1 or height-2 strips
// (any orientation, any admissible shifts) and the twelve specials.
inline std::set<Patch> catalog_patches(int r, int center = 0, Symmetry mode = kDefaultSymmetry) {
  const auto ball0 = ball(up(0, 0), r);
  std::set<Patch> out;
  auto harvest = [&](const Configuration& c, const std::vector<FaceCoord>& centers) {
    for (const auto& f : centers) {
      const auto m = c.mark(f);
      if (!m || m->value() != center) continue;
      if (auto p = patch_at(c, f, ball0)) out.insert(std::move(*p));
    }
  };
  for (int height : {1, 2}) {
    const int rows = (2 * r + 2 + height - 1) / height + 1;
    const int mid_lo = r, mid_hi = rows * height - r - 1;
    for (const auto& w : stacking_words(height, rows, mode)) {
      const Configuration c = assemble(w, 3, false, false);
      std::vector<FaceCoord> centers;
      for (int y = mid_lo; y <= mid_hi; ++y)
        for (int x = kStripPeriod; x < 2 * kStripPeriod; ++x) {
          centers.push_back(up(x, y));
          centers.push_back(down(x, y));
        }
      harvest(c, centers);
    }
  }
  for (int i = 1; i <= 12; ++i) {
    const Configuration c = special_puzzle(i, 2 * r + 4, mode);
    harvest(c, c.window());
  }
  return out;
}

struct BoundedClassification {
  int radius = 0;
  int probe = 0;
  std::uint64_t completions = 0;
  std::uint64_t in_catalog = 0;
  std::uint64_t dead_ends = 0;
  std::vector<Configuration> unexplained;
};

// Every completion of ball(Up(0, 0), r) with Up(0, 0) marked 0 is either a
// catalog patch or fails to extend to the probe ball.
inline BoundedClassification bounded_classification(int r, int probe, const SearchOptions& opt = {}) {
  BoundedClassification rep;
  rep.radius = r;
  rep.probe = probe;
  const auto patches = catalog_patches(r, 0, opt.mode);
  Configuration seed;
  seed.set(up(0, 0), Label(0));
  const auto target = ball(up(0, 0), r);
  SearchOptions o = opt;
  o.count_only = false;
  o.limit = 0;
  const CompletionSet set = enumerate_completions(seed, target, o);
  rep.completions = set.count;
  const auto ball0 = ball(up(0, 0), r);
  const auto probe_ball = ball(up(0, 0), probe);
  for (std::size_t i = 0; i < set.rows.size(); ++i) {
    const Configuration c = set.at(i);
    if (patches.count(*patch_at(c, up(0, 0), ball0))) {
      ++rep.in_catalog;
    } else if (!has_completion(c, probe_ball, opt.mode)) {
      ++rep.dead_ends;
    } else {
      rep.unexplained.push_back(c);
    }
  }
  return rep;
}

} // namespace ringlab
