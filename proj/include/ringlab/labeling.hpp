#pragma once

// Canonical Z/3Z edge marking. The anchor triangle Up(0,0) has bottom edge 0,
// right edge 1 and left edge 2; everything else follows from two rules: every
// face sees all three labels, and the edges around a vertex alternate between
// two values s, s+1.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/label.hpp"
#include "ringlab/lattice.hpp"

namespace ringlab {

inline Label edge_label(const EdgeCoord& e) {
  const int d = e.x - e.y;
  switch (e.dir) {
    case EdgeDir::H: return Label(d);
    case EdgeDir::L: return Label(d - 1);
    default: return Label(d + 1);
  }
}

// The s such that the edges at v carry labels s (odd positions) and s+1 (even
// positions, starting with east).
inline Label vertex_s(VertexCoord v) { return Label(v.x - v.y - 1); }

// Label of the edge at angular position k around v.
inline Label edge_label_at(VertexCoord v, int k) { return (mod(k, 2) == 0) ? vertex_s(v) + 1 : vertex_s(v); }

struct EdgeDerivation {
  std::map<EdgeCoord, Label> labels;
  // Set when the rules disagree somewhere; describes the offending vertex or face.
  std::optional<std::string> contradiction;
};

// Fixed-point propagation of the two labelling rules from the anchor triangle
// over the edges of `window`. Independent of edge_label; used to validate it.
inline EdgeDerivation derive_edge_labels(const std::vector<FaceCoord>& window) {
  EdgeDerivation out;
  std::set<EdgeCoord> edges;
  std::map<VertexCoord, std::vector<std::pair<int, EdgeCoord>>> at_vertex;
  for (const auto& f : window) {
    const auto vs = vertices(f);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) edges.insert(edge_from_vertices(vs[i], vs[j]));
  }
  for (const auto& e : edges) {
    const auto ps = endpoints(e);
    for (int k = 0; k < 6; ++k) {
      if (ps[0] + kSteps[k] == ps[1]) at_vertex[ps[0]].push_back({k, e});
      if (ps[1] + kSteps[k] == ps[0]) at_vertex[ps[1]].push_back({k, e});
    }
  }

  auto& lab = out.labels;
  auto set = [&](const EdgeCoord& e, Label l, const std::string& where) {
    auto [it, fresh] = lab.emplace(e, l);
    if (!fresh && it->second != l && !out.contradiction) {
      std::ostringstream os;
      os << "edge " << e << " forced to both " << it->second << " and " << l << " at " << where;
      out.contradiction = os.str();
    }
    return fresh;
  };

  const FaceCoord anchor = up(0, 0);
  if (std::find(window.begin(), window.end(), anchor) == window.end()) return out;
  set({0, 0, EdgeDir::H}, Label(0), "anchor");
  set({0, 0, EdgeDir::R}, Label(1), "anchor");
  set({0, 0, EdgeDir::L}, Label(2), "anchor");

  bool changed = true;
  while (changed && !out.contradiction) {
    changed = false;
    for (const auto& f : window) {
      const auto vs = vertices(f);
      const std::array<EdgeCoord, 3> es = {edge_from_vertices(vs[0], vs[1]), edge_from_vertices(vs[1], vs[2]),
                                           edge_from_vertices(vs[0], vs[2])};
      int known = 0, sum = 0;
      std::optional<EdgeCoord> missing;
      for (const auto& e : es) {
        if (auto it = lab.find(e); it != lab.end()) {
          ++known;
          sum += it->second.value();
        } else {
          missing = e;
        }
      }
      if (known == 2) {
        // 0 + 1 + 2 = 3 = 0 mod 3.
        std::ostringstream os;
        os << "face " << f;
        changed |= set(*missing, Label(-sum), os.str());
      } else if (known == 3 && Label(sum) != Label(0)) {
        std::ostringstream os;
        os << "face " << f << " is not injective";
        out.contradiction = os.str();
      }
    }
    for (const auto& [v, list] : at_vertex) {
      std::array<std::optional<Label>, 2> parity;
      std::ostringstream where;
      where << "vertex " << v;
      for (const auto& [k, e] : list) {
        if (auto it = lab.find(e); it != lab.end()) {
          auto& p = parity[k % 2];
          if (p && *p != it->second && !out.contradiction)
            out.contradiction = where.str() + ": edges of one parity class disagree";
          p = it->second;
        }
      }
      if (parity[0] && parity[1] && *parity[0] == *parity[1] && !out.contradiction)
        out.contradiction = where.str() + ": only one label around the vertex";
      for (const auto& [k, e] : list)
        if (parity[k % 2]) changed |= set(e, *parity[k % 2], where.str());
    }
  }
  return out;
}

// The canonical marking is determined by the labels of one triangle, so an
// isometry preserves it everywhere once it preserves them on Up(0,0).
inline bool preserves_labels(const LatticeIsometry& g) {
  const auto vs = vertices(up(0, 0));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const EdgeCoord e = edge_from_vertices(vs[i], vs[j]);
      if (edge_label(g(e)) != edge_label(e)) return false;
    }
  return true;
}

// The 12 point-group elements composed with translations; those preserving
// labels, mapping face `from` onto face `to`. There is always exactly one.
inline LatticeIsometry label_isometry(const FaceCoord& from, const FaceCoord& to) {
  const auto target = vertices(to);
  for (const auto& g0 : point_group()) {
    const auto vs = vertices(g0(from));
    for (auto v : vs) {
      const LatticeIsometry g = LatticeIsometry::translation(target[0].x - v.x, target[0].y - v.y) * g0;
      if (g(from) == to && preserves_labels(g)) return g;
    }
  }
  throw Error("no label-preserving isometry");
}

// Faces Up/Down(x, y) with 0 <= x, y < n.
inline std::vector<FaceCoord> square_window(int n, int x0 = 0, int y0 = 0) {
  std::vector<FaceCoord> out;
  for (int y = y0; y < y0 + n; ++y)
    for (int x = x0; x < x0 + n; ++x) {
      out.push_back(up(x, y));
      out.push_back(down(x, y));
    }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace ringlab
