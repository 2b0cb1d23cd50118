#pragma once

// Small hand-built configurations around the initial triangle Up(0,0) ↦ 0:
// its eight neighbourhood markings, the two extensions of the u = v = w = 1
// case, and the four ways of extending the left one of those.

#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "ringlab/configuration.hpp"
#include "ringlab/lattice.hpp"

namespace ringlab {

// Up(0,0) and its three edge neighbours, sorted.
inline std::vector<FaceCoord> initial_window() {
  std::vector<FaceCoord> w{up(0, 0), down(0, -1), down(0, 0), down(-1, 0)};
  std::sort(w.begin(), w.end());
  return w;
}

inline Configuration initial_triangle() {
  Configuration c;
  c.set(up(0, 0), Label(0));
  return c;
}

// u below the 0 side, v across the 1 side, w across the 2 side.
inline Configuration initial_configuration(int u, int v, int w) {
  Configuration c = initial_triangle();
  c.set(down(0, -1), Label(u));
  c.set(down(0, 0), Label(v));
  c.set(down(-1, 0), Label(w));
  return c;
}

inline std::vector<FaceCoord> links_of(const std::vector<VertexCoord>& vs) {
  std::set<FaceCoord> out;
  for (auto v : vs)
    for (const auto& f : link_faces(v)) out.insert(f);
  return {out.begin(), out.end()};
}

// The hexagon of faces around the vertex drawn at (cx, row) in a sheared
// picture where row r is offset by r/2. Labels follow link_faces order;
// negative entries are left alone.
inline void put_link(Configuration& c, double cx, int row, const std::array<int, 6>& labels) {
  const VertexCoord v{static_cast<int>(std::lround(cx - row / 2.0)), row};
  const auto lf = link_faces(v);
  for (int k = 0; k < 6; ++k)
    if (labels[k] >= 0) c.set(lf[k], Label(labels[k]));
}

// Links of the three vertices of Up(0,0).
inline std::vector<FaceCoord> three_hexagon_window() { return links_of({{0, 0}, {1, 0}, {0, 1}}); }

// Left of the two u = v = w = 1 extensions.
inline Configuration extension_seed() {
  Configuration c;
  put_link(c, 0, 0, {0, 1, 2, 1, 2, 1});
  put_link(c, 1, 0, {0, 1, 0, 1, 2, 1});
  put_link(c, 0.5, 1, {0, 2, 0, 1, 0, 1});
  return c;
}

// extension_seed plus the links of (1,1), (-1,1) and (1,-1).
inline std::vector<FaceCoord> extension_window() {
  return links_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, 1}, {1, -1}});
}

// The four extensions, in drawing order. The second is a dead end: it is
// valid on its window but nothing fits one ring further out.
inline std::array<Configuration, 4> extension_drawings() {
  std::array<Configuration, 4> out;
  for (int d = 0; d < 4; ++d) {
    Configuration c = extension_seed();
    put_link(c, 1.5, 1, {0, 2, 0, 1, 0, 2});
    if (d < 2) put_link(c, -0.5, 1, {0, 1, 0, 1, 2, 1});
    else put_link(c, -0.5, 1, {0, 2, 1, 0, 2, 1});
    if (d % 2 == 0) put_link(c, 0.5, -1, {2, 1, 2, 0, 2, 1});
    else put_link(c, 0.5, -1, {2, 1, 2, 1, 2, 0});
    out[d] = c;
  }
  return out;
}

} // namespace ringlab
