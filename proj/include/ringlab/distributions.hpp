#pragma once

// Root distributions: one axis per lattice vertex (the rank-3/2 direction).
//
// Given a distribution, the large triangle of a face f determines one axis at
// each vertex x of f (the side of f opposite x). The root there has rank 2
// when that axis differs from the selected one; f is odd when the number of
// rank-2 roots is odd.

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/configuration.hpp"
#include "ringlab/engine.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/rings.hpp"

namespace ringlab {

class Distribution {
public:
  Distribution() = default;
  explicit Distribution(std::vector<VertexCoord> window) : window_(std::move(window)) {
    std::sort(window_.begin(), window_.end());
    window_.erase(std::unique(window_.begin(), window_.end()), window_.end());
  }

  const std::vector<VertexCoord>& window() const { return window_; }
  const std::map<VertexCoord, Axis>& axes() const { return axis_; }

  bool contains(VertexCoord v) const { return std::binary_search(window_.begin(), window_.end(), v); }
  std::optional<Axis> axis(VertexCoord v) const {
    auto it = axis_.find(v);
    if (it == axis_.end()) return std::nullopt;
    return it->second;
  }
  void set(VertexCoord v, Axis a) {
    if (!contains(v)) window_.insert(std::upper_bound(window_.begin(), window_.end(), v), v);
    axis_[v] = a;
  }
  void erase(VertexCoord v) { axis_.erase(v); }
  bool total() const { return axis_.size() == window_.size(); }

  // Faces all of whose vertices lie in the window.
  std::vector<FaceCoord> faces() const {
    std::set<FaceCoord> out;
    for (auto v : window_)
      for (const auto& f : link_faces(v)) {
        const auto vs = vertices(f);
        if (contains(vs[0]) && contains(vs[1]) && contains(vs[2])) out.insert(f);
      }
    return {out.begin(), out.end()};
  }

  Distribution restricted(const std::vector<VertexCoord>& sub) const {
    Distribution d(sub);
    for (auto v : d.window_)
      if (auto a = axis(v)) d.axis_[v] = *a;
    return d;
  }

  friend bool operator==(const Distribution&, const Distribution&) = default;

private:
  std::vector<VertexCoord> window_;
  std::map<VertexCoord, Axis> axis_;
};

// Vertices at graph distance <= r from c.
inline std::vector<VertexCoord> hex_window(VertexCoord c, int r) {
  std::vector<VertexCoord> out;
  for (int dy = -r; dy <= r; ++dy)
    for (int dx = -r; dx <= r; ++dx) {
      const VertexCoord v{c.x + dx, c.y + dy};
      if (distance(c, v) <= r) out.push_back(v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices (x, y) with x0 <= x < x0 + w and y0 <= y < y0 + h.
inline std::vector<VertexCoord> rhombus_window(int w, int h, int x0 = 0, int y0 = 0) {
  std::vector<VertexCoord> out;
  for (int y = y0; y < y0 + h; ++y)
    for (int x = x0; x < x0 + w; ++x) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

enum class Parity { Odd, Even };

inline int rank2_count(const Distribution& d, const FaceCoord& f) {
  int n = 0;
  for (auto v : vertices(f)) {
    const auto a = d.axis(v);
    if (!a) throw Error("insufficient data");
    if (*a != opposite_axis_at_vertex(f, v)) ++n;
  }
  return n;
}

inline Parity face_parity(const Distribution& d, const FaceCoord& f) {
  return rank2_count(d, f) % 2 == 1 ? Parity::Odd : Parity::Even;
}

// True when every face with all vertices assigned is odd.
inline bool all_odd(const Distribution& d) {
  for (const auto& f : d.faces()) {
    bool assigned = true;
    for (auto v : vertices(f)) assigned = assigned && d.axis(v).has_value();
    if (assigned && face_parity(d, f) == Parity::Even) return false;
  }
  return true;
}

inline LinkWord link_word(const Configuration& c, VertexCoord v) {
  LinkWord w{vertex_s(v), {}, 0};
  const auto lf = link_faces(v);
  for (int k = 0; k < 6; ++k)
    if (auto m = c.mark(lf[k])) {
      w.faces[k] = *m;
      w.known |= std::uint8_t(1u << k);
    }
  return w;
}

// Rank-3/2 axis at every vertex whose link is fully marked.
inline Distribution induced_distribution(const Configuration& c) {
  Distribution d;
  for (auto v : vertices_of(c.window())) {
    const LinkWord w = link_word(c, v);
    if (w.complete()) d.set(v, rank_axis(w));
  }
  return d;
}

struct DistPropagateResult {
  std::optional<Distribution> dist;
  std::optional<FaceCoord> contradiction; // an even face or a face leaving no axis
  std::optional<VertexCoord> at;
  explicit operator bool() const { return dist.has_value(); }
};

namespace detail {

// Axes at v that keep every face through v, whose other two vertices are
// assigned, odd. Bit a set when axis a is admissible.
inline int admissible_axes(const Distribution& d, VertexCoord v, FaceCoord* blocking = nullptr) {
  int mask = 7;
  for (const auto& f : link_faces(v)) {
    const auto vs = vertices(f);
    int others = 0;
    bool known = true;
    for (auto u : vs) {
      if (u == v) continue;
      if (!d.contains(u)) {
        known = false;
        break;
      }
      const auto a = d.axis(u);
      if (!a) {
        known = false;
        break;
      }
      if (*a != opposite_axis_at_vertex(f, u)) ++others;
    }
    if (!known) continue;
    const int opp = index(opposite_axis_at_vertex(f, v));
    // Need total rank-2 count odd.
    const int allowed = (others % 2 == 0) ? (7 & ~(1 << opp)) : (1 << opp);
    if ((mask & allowed) == 0 && blocking) *blocking = f;
    mask &= allowed;
  }
  return mask;
}

} // namespace detail

// Assigns every vertex whose axis is forced by oddness of the faces around
// it, to a fixed point.
inline DistPropagateResult dist_propagate(const Distribution& start) {
  DistPropagateResult out;
  Distribution d = start;
  for (const auto& f : d.faces()) {
    bool assigned = true;
    for (auto v : vertices(f)) assigned = assigned && d.axis(v).has_value();
    if (assigned && face_parity(d, f) == Parity::Even) {
      out.contradiction = f;
      out.at = vertices(f)[0];
      return out;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto v : d.window()) {
      if (d.axis(v)) continue;
      FaceCoord blocking;
      const int mask = detail::admissible_axes(d, v, &blocking);
      if (mask == 0) {
        out.contradiction = blocking;
        out.at = v;
        return out;
      }
      if (std::has_single_bit(static_cast<unsigned>(mask))) {
        d.set(v, axis_from_index(std::countr_zero(static_cast<unsigned>(mask))));
        changed = true;
      }
    }
  }
  out.dist = std::move(d);
  return out;
}

// Horizontal segments s_k = [a_k .. e_k]. s_{k+1} lies below s_k, shifted
// half a step to the left; c_0 sits at the origin.
inline VertexCoord segment_vertex(char letter, int k) { return {letter - 'c', -k}; }

// b_0, c_0 horizontal, d_0 at 120 degrees and c_{-1} at 60 degrees.
struct T0Seed {
  static std::vector<std::pair<VertexCoord, Axis>> placement() {
    return {{segment_vertex('b', 0), Axis::A0},
            {segment_vertex('c', 0), Axis::A0},
            {segment_vertex('d', 0), Axis::A2},
            {segment_vertex('c', -1), Axis::A1}};
  }
};

// The segment s_0 alone: configuration (3/2, 3/2, 2) with the d_0 root at 120 degrees.
inline std::vector<std::pair<VertexCoord, Axis>> s0_placement() {
  auto p = T0Seed::placement();
  p.pop_back();
  return p;
}

inline Distribution seeded(const std::vector<VertexCoord>& window, const std::vector<std::pair<VertexCoord, Axis>>& seed) {
  Distribution d(window);
  for (auto [v, a] : seed) {
    if (!d.contains(v)) throw Error("window does not contain the seed");
    d.set(v, a);
  }
  return d;
}

inline Distribution build_D0(const std::vector<VertexCoord>& window) {
  auto r = dist_propagate(seeded(window, T0Seed::placement()));
  if (!r) throw Error("contradiction while building D0");
  if (!r.dist->total()) throw Error("window too irregular");
  return std::move(*r.dist);
}

// Rank-3/2 profile of the interior vertices of a segment along direction k.
// true means the axis at that vertex is parallel to the segment.
inline std::vector<bool> segment_profile(const Distribution& d, VertexCoord from, int k, int length) {
  std::vector<bool> out;
  for (int i = 1; i < length; ++i) {
    const auto a = d.axis(from + VertexCoord{kSteps[k].x * i, kSteps[k].y * i});
    if (!a) throw Error("insufficient data");
    out.push_back(*a == axis_of_position(k));
  }
  return out;
}

// Two adjacent vertices whose axes both run along the edge joining them.
inline bool has_rank32_segment(const Distribution& d) {
  for (const auto& [v, a] : d.axes()) {
    const int k = index(a);
    for (int dir : {k, k + 3}) {
      const auto b = d.axis(v + kSteps[dir]);
      if (b && *b == a) return true;
    }
  }
  return false;
}

// Maximal runs of consecutive window vertices along lines of direction k
// (k in 0..2), in order along the line.
inline std::vector<std::vector<VertexCoord>> lines(const Distribution& d, int k) {
  std::map<int, std::vector<VertexCoord>> by_line;
  for (auto v : d.window()) {
    const int key = k == 0 ? v.y : k == 1 ? v.x : v.x + v.y;
    by_line[key].push_back(v);
  }
  std::vector<std::vector<VertexCoord>> out;
  for (auto& [key, vs] : by_line) {
    std::sort(vs.begin(), vs.end(), [k](VertexCoord p, VertexCoord q) { return k == 0 ? p.x < q.x : p.y < q.y; });
    std::vector<VertexCoord> run;
    for (auto v : vs) {
      if (!run.empty() && run.back() + kSteps[k] != v) {
        out.push_back(run);
        run.clear();
      }
      run.push_back(v);
    }
    if (!run.empty()) out.push_back(run);
  }
  return out;
}

struct GeodesicSummary {
  int full = 0; // lines (length >= min_length) that are rank 3/2 throughout
  int half = 0; // rank-3/2 runs reaching exactly one end of their line
  int longest_half = 0;
};

inline GeodesicSummary rank32_geodesics(const Distribution& d, int min_length) {
  GeodesicSummary g;
  for (int k = 0; k < 3; ++k)
    for (const auto& line : lines(d, k)) {
      if (static_cast<int>(line.size()) < min_length) continue;
      std::vector<bool> par;
      for (auto v : line) par.push_back(d.axis(v) == axis_from_index(k));
      const int n = static_cast<int>(par.size());
      if (std::all_of(par.begin(), par.end(), [](bool b) { return b; })) {
        ++g.full;
        continue;
      }
      int lead = 0, trail = 0;
      while (lead < n && par[lead]) ++lead;
      while (trail < n && par[n - 1 - trail]) ++trail;
      for (int run : {lead, trail})
        if (run >= min_length) {
          ++g.half;
          g.longest_half = std::max(g.longest_half, run);
        }
    }
  return g;
}

enum class Family { Family1Periodic, Family2Periodic, SpecialD0, Unknown };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Family1Periodic: return "Family1Periodic";
    case Family::Family2Periodic: return "Family2Periodic";
    case Family::SpecialD0: return "SpecialD0";
    default: return "Unknown";
  }
}

struct Classification {
  Family family = Family::Unknown;
  // Distributions of the two periodic families can coincide (aligned phases);
  // every pattern that matched is reported.
  bool family1 = false;
  bool family2 = false;
  bool special = false;
  std::optional<int> direction; // line direction (0..2) of the periodic structure
};

namespace detail {

inline constexpr int kMinLine = 4;

// Every line along k is constant; some line is rank 3/2 and each such line
// is flanked by constant rank-2 lines.
inline bool matches_family1(const Distribution& d, int k) {
  const auto ls = lines(d, k);
  const Axis along = axis_from_index(k);
  bool rank32 = false;
  std::set<VertexCoord> on_rank32;
  for (const auto& line : ls) {
    if (line.size() < 2) continue;
    const Axis a0 = *d.axis(line[0]);
    for (auto v : line)
      if (*d.axis(v) != a0) return false;
    if (a0 == along && static_cast<int>(line.size()) >= kMinLine) {
      rank32 = true;
      on_rank32.insert(line.begin(), line.end());
    }
  }
  if (!rank32) return false;
  for (auto v : on_rank32)
    for (int s : {k + 1, k + 2, k + 4, k + 5}) {
      const auto a = d.axis(v + kSteps[mod(s, 6)]);
      if (a && *a == along) return false;
    }
  return true;
}

// Every line along k alternates between the two axes transverse to it.
inline bool matches_family2(const Distribution& d, int k) {
  const Axis along = axis_from_index(k);
  int long_lines = 0;
  for (const auto& line : lines(d, k)) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      const Axis a = *d.axis(line[i]);
      if (a == along) return false;
      if (i > 0 && a == *d.axis(line[i - 1])) return false;
    }
    if (static_cast<int>(line.size()) >= kMinLine) ++long_lines;
  }
  return long_lines >= 2;
}

inline bool matches_d0(const Distribution& d) {
  if (d.window().empty()) return false;
  int reach = 0;
  const VertexCoord w0 = d.window().front();
  for (auto v : d.window()) reach = std::max(reach, distance(w0, v));
  const int r = reach + 6;
  static std::map<int, Distribution> cache;
  static std::mutex mu;
  Distribution big;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, build_D0(hex_window({0, 0}, r))).first;
    big = it->second;
  }
  // The core of D0 lies near the origin; a window matching it must reach it.
  for (const auto& g0 : point_group()) {
    std::vector<std::pair<VertexCoord, Axis>> image;
    for (const auto& [v, a] : d.axes()) image.push_back({g0(v), g0(a)});
    const VertexCoord base = image.front().first;
    for (auto target : hex_window({0, 0}, reach + 1)) {
      const VertexCoord t = target - base;
      bool ok = true;
      for (const auto& [v, a] : image) {
        const auto b = big.axis(v + t);
        if (!b || *b != a) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

} // namespace detail

inline Classification classify_distribution(const Distribution& d) {
  if (!d.total()) throw Error("insufficient data");
  if (!all_odd(d)) throw Error("not an odd distribution");
  Classification c;
  for (int k = 0; k < 3; ++k) {
    if (!c.family1 && detail::matches_family1(d, k)) {
      c.family1 = true;
      if (!c.direction) c.direction = k;
    }
    if (!c.family2 && detail::matches_family2(d, k)) {
      c.family2 = true;
      if (!c.direction) c.direction = k;
    }
  }
  if (!c.family1 && !c.family2) c.special = detail::matches_d0(d);
  if (c.family1) c.family = Family::Family1Periodic;
  else if (c.family2) c.family = Family::Family2Periodic;
  else if (c.special) c.family = Family::SpecialD0;
  return c;
}

struct L3Report {
  long long assignments = 0;       // all-odd assignments of the window
  long long with_segment = 0;      // containing a rank-3/2 segment of length 3
  long long by_enlargement = 0;    // segment present in every odd extension one ring out
  std::vector<Distribution> counterexamples;
};

namespace detail {

// Depth-first enumeration of axis assignments of the unassigned vertices in
// `order`, keeping every fully assigned face odd. `visit` returns false to
// stop; `prune` returns true to skip a branch.
template <typename Visit, typename Prune>
bool enumerate_odd(Distribution& d, const std::vector<VertexCoord>& order, std::size_t i, Visit& visit, Prune& prune) {
  while (i < order.size() && d.axis(order[i])) ++i;
  if (i == order.size()) return visit(d);
  const VertexCoord v = order[i];
  const int mask = admissible_axes(d, v);
  bool go_on = true;
  for (int a = 0; a < 3 && go_on; ++a) {
    if (!(mask & (1 << a))) continue;
    d.set(v, axis_from_index(a));
    if (!prune(d, v)) go_on = enumerate_odd(d, order, i + 1, visit, prune);
  }
  d.erase(v);
  return go_on;
}

inline bool segment_at(const Distribution& d, VertexCoord v) {
  const auto a = d.axis(v);
  if (!a) return false;
  for (int dir : {index(*a), index(*a) + 3}) {
    const auto b = d.axis(v + kSteps[dir]);
    if (b && *b == *a) return true;
  }
  return false;
}

inline std::vector<VertexCoord> enlarge(const std::vector<VertexCoord>& window) {
  std::set<VertexCoord> out(window.begin(), window.end());
  for (auto v : window)
    for (auto s : kSteps) out.insert(v + s);
  return {out.begin(), out.end()};
}

} // namespace detail

// Exhaustive check on a w x h rhombus of vertices: each all-odd assignment
// either contains a rank-3/2 segment of length 3, or every odd extension to
// the one-ring enlargement does.
inline L3Report verify_lemma_L3(int w, int h) {
  L3Report rep;
  const auto window = rhombus_window(w, h);
  const auto big = detail::enlarge(window);
  Distribution d(window);
  auto no_prune = [](const Distribution&, VertexCoord) { return false; };
  auto visit = [&](Distribution& full) {
    ++rep.assignments;
    if (has_rank32_segment(full)) {
      ++rep.with_segment;
      return true;
    }
    Distribution e(big);
    for (const auto& [v, a] : full.axes()) e.set(v, a);
    // Look for an odd extension without any segment.
    bool found = false;
    auto stop = [&](Distribution&) {
      found = true;
      return false;
    };
    auto prune = [](const Distribution& x, VertexCoord v) {
      if (detail::segment_at(x, v)) return true;
      for (auto s : kSteps)
        if (detail::segment_at(x, v + s)) return true;
      return false;
    };
    detail::enumerate_odd(e, big, 0, stop, prune);
    if (found) rep.counterexamples.push_back(full);
    else ++rep.by_enlargement;
    return true;
  };
  detail::enumerate_odd(d, window, 0, visit, no_prune);
  return rep;
}

struct L4Report {
  bool forced = false;       // b..d forced on rows 0..depth-1
  bool alternates = false;   // profiles alternate (3/2,3/2,2) / (2,2,3/2)
  bool parallel = false;     // non-horizontal rank-3/2 roots all parallel to d_0
  std::vector<std::vector<bool>> profiles;
};

// Propagates s_0 downwards over rows 0..depth and reads the profiles of b..d
// above the last row (which lacks the faces below it).
inline L4Report verify_lemma_L4(int depth) {
  std::vector<VertexCoord> window;
  for (int k = 0; k <= depth; ++k)
    for (char c = 'a'; c <= 'e'; ++c) window.push_back(segment_vertex(c, k));
  L4Report rep;
  auto r = dist_propagate(seeded(window, s0_placement()));
  if (!r) return rep;
  const Distribution& d = *r.dist;
  rep.forced = true;
  for (int k = 0; k < depth; ++k)
    for (char c = 'b'; c <= 'd'; ++c) rep.forced = rep.forced && d.axis(segment_vertex(c, k)).has_value();
  if (!rep.forced) return rep;
  rep.alternates = rep.parallel = true;
  for (int k = 0; k < depth; ++k) {
    auto p = segment_profile(d, segment_vertex('a', k), 0, 4);
    const std::vector<bool> want = (k % 2 == 0) ? std::vector<bool>{true, true, false} : std::vector<bool>{false, false, true};
    rep.alternates = rep.alternates && p == want;
    for (char c = 'b'; c <= 'd'; ++c) {
      const Axis a = *d.axis(segment_vertex(c, k));
      if (a != Axis::A0 && a != Axis::A2) rep.parallel = false;
    }
    rep.profiles.push_back(std::move(p));
  }
  return rep;
}

// A copy of the t_0 pattern, in any position and orientation.
inline bool contains_t0(const Distribution& d) {
  const auto pl = T0Seed::placement();
  for (const auto& g0 : point_group())
    for (auto v : d.window()) {
      const VertexCoord t = v - g0(pl[0].first);
      bool ok = true;
      for (const auto& [p, a] : pl) {
        const auto b = d.axis(g0(p) + t);
        if (!b || *b != g0(a)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  return false;
}

struct L5Report {
  long long assignments = 0;
  long long with_t0 = 0;    // contain a copy of t_0
  long long extending = 0;  // s_{-1}, s_{-2} continue the alternation upwards
  long long other = 0;      // neither: would refute the lemma
};

// All odd assignments of rows s_{-up} .. s_{down} extending s_0.
inline L5Report verify_lemma_L5(int up = 4, int down = 2) {
  std::vector<VertexCoord> window;
  for (int k = -up; k <= down; ++k)
    for (char c = 'a'; c <= 'e'; ++c) window.push_back(segment_vertex(c, k));
  L5Report rep;
  Distribution d = seeded(window, s0_placement());
  auto no_prune = [](const Distribution&, VertexCoord) { return false; };
  auto visit = [&](Distribution& full) {
    ++rep.assignments;
    const bool t0 = contains_t0(full);
    const auto p1 = segment_profile(full, segment_vertex('a', -1), 0, 4);
    const auto p2 = segment_profile(full, segment_vertex('a', -2), 0, 4);
    const bool ext = p1 == std::vector<bool>{false, false, true} && p2 == std::vector<bool>{true, true, false};
    if (t0) ++rep.with_t0;
    if (ext) ++rep.extending;
    if (!t0 && !ext) ++rep.other;
    return true;
  };
  detail::enumerate_odd(d, window, 0, visit, no_prune);
  return rep;
}

} // namespace ringlab
