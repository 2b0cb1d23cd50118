#pragma once

// Integer coordinates on the equilateral triangular lattice.
//
// Vertex (x, y) sits at x*e1 + y*e2 with e1 = (1, 0), e2 = (1/2, sqrt(3)/2).
//   Up(x, y)   has vertices (x, y), (x+1, y), (x, y+1)
//   Down(x, y) has vertices (x+1, y), (x, y+1), (x+1, y+1)
//   H(x, y) joins (x, y)-(x+1, y); L(x, y) joins (x, y)-(x, y+1);
//   R(x, y) joins (x+1, y)-(x, y+1)
// Angular positions around a vertex are numbered 0..5 counterclockwise from
// east, in steps of 60 degrees. Sector k lies between positions k and k+1.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <set>
#include <vector>

#include "ringlab/label.hpp"

namespace ringlab {

struct VertexCoord {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const VertexCoord&, const VertexCoord&) = default;
  friend constexpr VertexCoord operator+(VertexCoord a, VertexCoord b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr VertexCoord operator-(VertexCoord a, VertexCoord b) { return {a.x - b.x, a.y - b.y}; }
};

enum class Orient : std::uint8_t { Up, Down };

struct FaceCoord {
  int x = 0;
  int y = 0;
  Orient orient = Orient::Up;
  friend constexpr auto operator<=>(const FaceCoord&, const FaceCoord&) = default;
};

constexpr FaceCoord up(int x, int y) { return {x, y, Orient::Up}; }
constexpr FaceCoord down(int x, int y) { return {x, y, Orient::Down}; }

enum class EdgeDir : std::uint8_t { H, L, R };

struct EdgeCoord {
  int x = 0;
  int y = 0;
  EdgeDir dir = EdgeDir::H;
  friend constexpr auto operator<=>(const EdgeCoord&, const EdgeCoord&) = default;
};

// Undirected simplicial direction. A0 is horizontal, A1 runs at 60 degrees,
// A2 at 120 degrees.
enum class Axis : std::uint8_t { A0 = 0, A1 = 1, A2 = 2 };

constexpr int index(Axis a) { return static_cast<int>(a); }
constexpr Axis axis_from_index(int k) { return static_cast<Axis>(((k % 3) + 3) % 3); }
// Axis through angular position k (0..5).
constexpr Axis axis_of_position(int k) { return axis_from_index(k); }
constexpr Axis axis_of(EdgeDir d) { return static_cast<Axis>(static_cast<int>(d)); }

inline std::ostream& operator<<(std::ostream& os, VertexCoord v) { return os << '(' << v.x << ',' << v.y << ')'; }
inline std::ostream& operator<<(std::ostream& os, const FaceCoord& f) {
  return os << (f.orient == Orient::Up ? "Up(" : "Down(") << f.x << ',' << f.y << ')';
}
inline std::ostream& operator<<(std::ostream& os, const EdgeCoord& e) {
  static constexpr char names[] = {'H', 'L', 'R'};
  return os << names[static_cast<int>(e.dir)] << '(' << e.x << ',' << e.y << ')';
}
inline std::ostream& operator<<(std::ostream& os, Axis a) { return os << 'A' << index(a); }

// Unit steps to the six neighbours, by angular position.
inline constexpr std::array<VertexCoord, 6> kSteps = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

constexpr int mod(int a, int m) { return ((a % m) + m) % m; }
constexpr int floor_div(int a, int b) { return (a - mod(a, b)) / b; }

inline std::array<VertexCoord, 3> vertices(const FaceCoord& f) {
  if (f.orient == Orient::Up) return {{{f.x, f.y}, {f.x + 1, f.y}, {f.x, f.y + 1}}};
  return {{{f.x + 1, f.y}, {f.x, f.y + 1}, {f.x + 1, f.y + 1}}};
}

inline std::array<VertexCoord, 2> endpoints(const EdgeCoord& e) {
  switch (e.dir) {
    case EdgeDir::H: return {{{e.x, e.y}, {e.x + 1, e.y}}};
    case EdgeDir::L: return {{{e.x, e.y}, {e.x, e.y + 1}}};
    default: return {{{e.x + 1, e.y}, {e.x, e.y + 1}}};
  }
}

inline bool adjacent(VertexCoord a, VertexCoord b) {
  const VertexCoord d = b - a;
  return std::find(kSteps.begin(), kSteps.end(), d) != kSteps.end();
}

inline bool incident(const FaceCoord& f, VertexCoord v) {
  const auto vs = vertices(f);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

// Graph distance between lattice vertices.
inline int distance(VertexCoord a, VertexCoord b) {
  const int dx = b.x - a.x, dy = b.y - a.y;
  if ((dx >= 0) == (dy >= 0)) return std::abs(dx + dy);
  return std::max(std::abs(dx), std::abs(dy));
}

// Face whose vertex set is {a, b, c}; throws if the three points are not a face.
inline FaceCoord face_from_vertices(VertexCoord a, VertexCoord b, VertexCoord c) {
  const int sx = a.x + b.x + c.x, sy = a.y + b.y + c.y;
  FaceCoord f;
  if (mod(sx, 3) == 1 && mod(sy, 3) == 1) {
    f = up(floor_div(sx, 3), floor_div(sy, 3));
  } else if (mod(sx, 3) == 2 && mod(sy, 3) == 2) {
    f = down(floor_div(sx, 3), floor_div(sy, 3));
  } else {
    throw Error("not a face");
  }
  auto want = vertices(f);
  std::array<VertexCoord, 3> got{a, b, c};
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) throw Error("not a face");
  return f;
}

inline EdgeCoord edge_from_vertices(VertexCoord a, VertexCoord b) {
  if (b < a) std::swap(a, b);
  const VertexCoord d = b - a;
  if (d == VertexCoord{1, 0}) return {a.x, a.y, EdgeDir::H};
  if (d == VertexCoord{0, 1}) return {a.x, a.y, EdgeDir::L};
  if (d == VertexCoord{1, -1}) return {a.x, b.y, EdgeDir::R};
  throw Error("not an edge");
}

// Edge leaving v at angular position k.
inline EdgeCoord edge_at(VertexCoord v, int k) { return edge_from_vertices(v, v + kSteps[mod(k, 6)]); }

// The six faces around v in counterclockwise order; index k is the face in
// sector (60k, 60k+60) degrees.
inline std::array<FaceCoord, 6> link_faces(VertexCoord v) {
  const int x = v.x, y = v.y;
  return {{up(x, y), down(x - 1, y), up(x - 1, y), down(x - 1, y - 1), up(x, y - 1), down(x, y - 1)}};
}

// Sector index of face f in the link of v, or -1.
inline int sector_of(const FaceCoord& f, VertexCoord v) {
  const auto faces = link_faces(v);
  for (int k = 0; k < 6; ++k)
    if (faces[k] == f) return k;
  return -1;
}

// Axis of the side of f opposite to v. This is also the axis of the side of
// the large triangle of f through v.
inline Axis opposite_axis_at_vertex(const FaceCoord& f, VertexCoord v) {
  const int k = sector_of(f, v);
  if (k < 0) throw Error("not incident");
  // The opposite side joins the neighbours at positions k and k+1, so it is
  // parallel to position k+2.
  return axis_of_position(k + 2);
}

inline std::array<FaceCoord, 3> edge_neighbors(const FaceCoord& f) {
  if (f.orient == Orient::Up) return {{down(f.x, f.y - 1), down(f.x, f.y), down(f.x - 1, f.y)}};
  return {{up(f.x, f.y + 1), up(f.x, f.y), up(f.x + 1, f.y)}};
}

// Faces within radius r of the vertex set of `center`: a face belongs to the
// ball when each of its vertices is at graph distance <= r from some vertex
// of `center`. Sorted.
inline std::vector<FaceCoord> ball(const FaceCoord& center, int r) {
  const auto cv = vertices(center);
  auto dist = [&](VertexCoord v) {
    int d = distance(v, cv[0]);
    d = std::min(d, distance(v, cv[1]));
    return std::min(d, distance(v, cv[2]));
  };
  std::vector<FaceCoord> out;
  for (int y = center.y - r - 2; y <= center.y + r + 2; ++y)
    for (int x = center.x - 2 * r - 3; x <= center.x + 2 * r + 3; ++x)
      for (Orient o : {Orient::Up, Orient::Down}) {
        const FaceCoord f{x, y, o};
        const auto vs = vertices(f);
        if (dist(vs[0]) <= r && dist(vs[1]) <= r && dist(vs[2]) <= r) out.push_back(f);
      }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices incident to any of the given faces, sorted.
inline std::vector<VertexCoord> vertices_of(const std::vector<FaceCoord>& faces) {
  std::set<VertexCoord> vs;
  for (const auto& f : faces)
    for (auto v : vertices(f)) vs.insert(v);
  return {vs.begin(), vs.end()};
}

// ---------------------------------------------------------------------------
// Isometries

// v -> M v + t, with M a lattice point-group element (rotation by 60*rotation
// degrees, preceded by the reflection in the horizontal axis when reflect).
class LatticeIsometry {
public:
  constexpr LatticeIsometry() = default;
  LatticeIsometry(int rotation, bool reflect, VertexCoord translation)
      : rotation_(mod(rotation, 6)), reflect_(reflect), t_(translation) {}

  static LatticeIsometry identity() { return {}; }
  static LatticeIsometry translation(int dx, int dy) { return {0, false, {dx, dy}}; }
  // Rotation by 60*k degrees about vertex c.
  static LatticeIsometry rotation_about(VertexCoord c, int k) {
    LatticeIsometry g(k, false, {0, 0});
    const VertexCoord gc = g(c);
    return {k, false, c - gc};
  }

  int rotation() const { return rotation_; }
  bool reflect() const { return reflect_; }
  VertexCoord translation_part() const { return t_; }

  VertexCoord linear(VertexCoord v) const {
    if (reflect_) v = {v.x + v.y, -v.y};
    for (int i = 0; i < rotation_; ++i) v = {-v.y, v.x + v.y};
    return v;
  }

  VertexCoord operator()(VertexCoord v) const { return linear(v) + t_; }
  FaceCoord operator()(const FaceCoord& f) const {
    const auto vs = vertices(f);
    return face_from_vertices((*this)(vs[0]), (*this)(vs[1]), (*this)(vs[2]));
  }
  EdgeCoord operator()(const EdgeCoord& e) const {
    const auto ps = endpoints(e);
    return edge_from_vertices((*this)(ps[0]), (*this)(ps[1]));
  }
  Axis operator()(Axis a) const {
    const VertexCoord d = linear(kSteps[index(a)]);
    for (int k = 0; k < 6; ++k)
      if (kSteps[k] == d) return axis_of_position(k);
    throw Error("not a lattice direction");
  }

  // (this * other)(v) == this(other(v))
  LatticeIsometry operator*(const LatticeIsometry& other) const {
    // Linear parts: R^a F^b R^c F^d. F R^c = R^{-c} F.
    const bool refl = reflect_ != other.reflect_;
    const int rot = reflect_ ? rotation_ - other.rotation_ : rotation_ + other.rotation_;
    return {rot, refl, linear(other.t_) + t_};
  }

  LatticeIsometry inverse() const {
    // M^{-1}: for R^a, R^{-a}; for R^a F, (R^a F)^{-1} = F R^{-a} = R^a F.
    LatticeIsometry inv = reflect_ ? LatticeIsometry(rotation_, true, {0, 0}) : LatticeIsometry(-rotation_, false, {0, 0});
    const VertexCoord mt = inv.linear(t_);
    return {inv.rotation_, inv.reflect_, {-mt.x, -mt.y}};
  }

  friend bool operator==(const LatticeIsometry&, const LatticeIsometry&) = default;

private:
  int rotation_ = 0;
  bool reflect_ = false;
  VertexCoord t_{};
};

template <class T>
T apply_isometry(const LatticeIsometry& g, const T& object) {
  return g(object);
}

// The twelve point-group elements fixing the origin.
inline std::array<LatticeIsometry, 12> point_group() {
  std::array<LatticeIsometry, 12> out;
  for (int k = 0; k < 6; ++k) {
    out[k] = LatticeIsometry(k, false, {0, 0});
    out[6 + k] = LatticeIsometry(k, true, {0, 0});
  }
  return out;
}

} // namespace ringlab

template <>
struct std::hash<ringlab::VertexCoord> {
  std::size_t operator()(const ringlab::VertexCoord& v) const noexcept {
    return std::hash<long long>()((static_cast<long long>(v.x) << 32) ^ static_cast<unsigned>(v.y));
  }
};

template <>
struct std::hash<ringlab::FaceCoord> {
  std::size_t operator()(const ringlab::FaceCoord& f) const noexcept {
    return std::hash<long long>()((static_cast<long long>(f.x) << 33) ^ (static_cast<long long>(f.y) << 1) ^
                                  static_cast<int>(f.orient));
  }
};
