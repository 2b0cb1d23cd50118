#pragma once

// The nine marked rings and the root machinery built on them.
//
// A ring is a circle split into six arcs. Its vertices sit at angular
// positions 0..5 (0 = east) and carry edge labels (s+1, s, s+1, s, s+1, s);
// arc k lies between positions k and k+1 and carries a face label.

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ringlab/label.hpp"
#include "ringlab/labeling.hpp"
#include "ringlab/lattice.hpp"

namespace ringlab {

struct Ring {
  Label s;
  int index = 1; // 1..3
  std::array<Label, 6> faces;
  std::array<Label, 6> edges;
};

inline Ring make_ring(Label s, int index) {
  Ring r{s, index, {}, {}};
  static constexpr int offsets[3][6] = {
      {2, 0, 1, 2, 0, 1},
      {0, 1, 0, 1, 2, 1},
      {0, 2, 0, 2, 1, 2},
  };
  for (int k = 0; k < 6; ++k) {
    r.faces[k] = s + offsets[index - 1][k];
    r.edges[k] = (k % 2 == 0) ? s + 1 : s;
  }
  return r;
}

// Ordered by s, then index. Ring (s, i) is at position 3*s + i - 1.
inline const std::array<Ring, 9>& ring_table() {
  static const std::array<Ring, 9> table = [] {
    std::array<Ring, 9> t;
    for (int s = 0; s < 3; ++s)
      for (int i = 1; i <= 3; ++i) t[3 * s + i - 1] = make_ring(Label(s), i);
    return t;
  }();
  return table;
}

inline const Ring& ring_at(Label s, int index) { return ring_table()[3 * s.value() + index - 1]; }

// Which maps from a vertex link onto a ring count as label-preserving
// isomorphisms.
enum class Symmetry : std::uint8_t { Rotations, RotationsReflections };

inline const char* to_string(Symmetry m) { return m == Symmetry::Rotations ? "rot" : "rot+ref"; }

// Circle map from link positions to ring positions. Unreflected maps send
// sector k to arc k + shift (shift even, so edge labels are kept); reflected
// maps send sector k to arc shift - k (shift odd).
struct CircleMap {
  int shift = 0;
  bool reflected = false;

  int arc(int k) const { return reflected ? mod(shift - k, 6) : mod(k + shift, 6); }
  friend bool operator==(const CircleMap&, const CircleMap&) = default;
};

inline std::vector<CircleMap> circle_maps(Symmetry mode) {
  std::vector<CircleMap> out = {{0, false}, {2, false}, {4, false}};
  if (mode == Symmetry::RotationsReflections) {
    out.push_back({1, true});
    out.push_back({3, true});
    out.push_back({5, true});
  }
  return out;
}

// Face labels around a vertex, in link_faces order, with an unknown mask.
struct LinkWord {
  Label s;
  std::array<Label, 6> faces{};
  std::uint8_t known = 0x3f;

  bool is_known(int k) const { return (known >> k) & 1; }
  bool complete() const { return known == 0x3f; }

  static LinkWord full(Label s, std::array<int, 6> f) {
    LinkWord w{s, {}, 0x3f};
    for (int k = 0; k < 6; ++k) w.faces[k] = Label(f[k]);
    return w;
  }
  // Entries < 0 are unknown.
  static LinkWord partial(Label s, std::array<int, 6> f) {
    LinkWord w{s, {}, 0};
    for (int k = 0; k < 6; ++k)
      if (f[k] >= 0) {
        w.faces[k] = Label(f[k]);
        w.known |= std::uint8_t(1u << k);
      }
    return w;
  }
};

struct LinkMatch {
  int ring = 0; // position in ring_table()
  CircleMap map;
  friend bool operator==(const LinkMatch&, const LinkMatch&) = default;
};

inline std::vector<LinkMatch> match_link(const LinkWord& w, Symmetry mode = Symmetry::RotationsReflections) {
  std::vector<LinkMatch> out;
  for (int i = 1; i <= 3; ++i) {
    const int ri = 3 * w.s.value() + i - 1;
    const Ring& r = ring_table()[ri];
    for (const auto& m : circle_maps(mode)) {
      bool ok = true;
      for (int k = 0; k < 6 && ok; ++k)
        if (w.is_known(k) && w.faces[k] != r.faces[m.arc(k)]) ok = false;
      if (ok) out.push_back({ri, m});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Marked segments and roots

// A marked segment of the circle: n arcs, n+1 vertices.
struct Segment {
  std::vector<Label> edges; // n + 1 vertex labels
  std::vector<Label> faces; // n arc labels
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

// Domain of a root: a marked segment of length pi (three arcs).
struct RootDomain {
  std::array<Label, 4> edges{};
  std::array<Label, 3> faces{};
  friend auto operator<=>(const RootDomain&, const RootDomain&) = default;

  Segment segment() const { return {{edges.begin(), edges.end()}, {faces.begin(), faces.end()}}; }
};

inline std::ostream& operator<<(std::ostream& os, const RootDomain& d) {
  os << "[v" << d.edges[0];
  for (int i = 0; i < 3; ++i) os << " f" << d.faces[i] << " v" << d.edges[i + 1];
  return os << ']';
}

// A marked isometric embedding of a segment into a ring: starts at ring
// position `start` and walks counterclockwise (dir = +1) or clockwise (-1).
struct Embedding {
  int ring = 0;
  int start = 0;
  int dir = 1;
  friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

inline Segment read_segment(const Ring& r, int start, int dir, int arcs) {
  Segment seg;
  for (int i = 0; i <= arcs; ++i) seg.edges.push_back(r.edges[mod(start + dir * i, 6)]);
  for (int i = 0; i < arcs; ++i) {
    const int arc = dir > 0 ? start + i : start - 1 - i;
    seg.faces.push_back(r.faces[mod(arc, 6)]);
  }
  return seg;
}

inline RootDomain to_domain(const Segment& seg) {
  RootDomain d;
  for (int i = 0; i < 4; ++i) d.edges[i] = seg.edges[i];
  for (int i = 0; i < 3; ++i) d.faces[i] = seg.faces[i];
  return d;
}

inline RootDomain embedding_domain(const Embedding& e) {
  return to_domain(read_segment(ring_table()[e.ring], e.start, e.dir, 3));
}

// Every marked embedding of an n-arc segment into any ring, grouped by domain.
inline std::map<Segment, std::vector<Embedding>> enumerate_segment_embeddings(int arcs) {
  std::map<Segment, std::vector<Embedding>> out;
  for (int ri = 0; ri < 9; ++ri)
    for (int start = 0; start < 6; ++start)
      for (int dir : {1, -1}) out[read_segment(ring_table()[ri], start, dir, arcs)].push_back({ri, start, dir});
  return out;
}

// All 108 root embeddings, grouped by domain. The group size is the
// multiplicity N_P of the domain.
inline const std::map<RootDomain, std::vector<Embedding>>& enumerate_root_embeddings() {
  static const std::map<RootDomain, std::vector<Embedding>> table = [] {
    std::map<RootDomain, std::vector<Embedding>> t;
    for (auto& [seg, embs] : enumerate_segment_embeddings(3)) t[to_domain(seg)] = embs;
    return t;
  }();
  return table;
}

inline int multiplicity(const RootDomain& d) {
  const auto& t = enumerate_root_embeddings();
  auto it = t.find(d);
  return it == t.end() ? 0 : static_cast<int>(it->second.size());
}

struct Rational {
  int num = 0;
  int den = 1;
  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
  double value() const { return double(num) / den; }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  if (r.den == 1) return os << r.num;
  return os << r.num << '/' << r.den;
}

// Uniform q for this ring set; see README ("Rank convention").
inline constexpr int kRootOrderQ = 2;

struct RootRecord {
  RootDomain domain;
  int multiplicity = 0;
  int q = kRootOrderQ;
  Rational rank;
};

inline RootRecord root_rank(const RootDomain& d) {
  const int n = multiplicity(d);
  if (n == 0) throw Error("not a root");
  const int g = std::gcd(kRootOrderQ + n, kRootOrderQ);
  return {d, n, kRootOrderQ, {(kRootOrderQ + n) / g, kRootOrderQ / g}};
}

// Domains of the complementary half circles of every embedding of d.
inline std::vector<RootDomain> complements(const RootDomain& d) {
  const auto& t = enumerate_root_embeddings();
  auto it = t.find(d);
  if (it == t.end()) throw Error("not a root");
  std::vector<RootDomain> out;
  for (const auto& e : it->second)
    out.push_back(embedding_domain({e.ring, e.start, -e.dir}));
  return out;
}

// The two half-link domains of a complete link word along an axis: the upper
// one runs counterclockwise from position a to a+3, the lower one from a+3
// back to a.
inline std::array<RootDomain, 2> half_link_domains(const LinkWord& w, Axis axis) {
  std::array<RootDomain, 2> out;
  for (int h = 0; h < 2; ++h) {
    const int start = index(axis) + 3 * h;
    RootDomain& d = out[h];
    for (int i = 0; i < 4; ++i) d.edges[i] = (mod(start + i, 2) == 0) ? w.s + 1 : w.s;
    for (int i = 0; i < 3; ++i) d.faces[i] = w.faces[mod(start + i, 6)];
  }
  return out;
}

// The unique axis at a vertex whose two half-link roots have rank 3/2.
inline Axis rank_axis(const LinkWord& w) {
  if (!w.complete()) throw Error("rank axis needs a complete link");
  std::optional<Axis> found;
  int count = 0;
  for (int a = 0; a < 3; ++a) {
    const auto ds = half_link_domains(w, axis_from_index(a));
    if (multiplicity(ds[0]) == 1 && multiplicity(ds[1]) == 1) {
      found = axis_from_index(a);
      ++count;
    }
  }
  if (count != 1) throw Error("rank axis not unique");
  return *found;
}

struct ExtensionReport {
  // For each number of arcs 1..6: segments realized, and those with more than
  // one embedding (counted by distinct ring positions) or lying in more than
  // one ring.
  struct Row {
    int arcs = 0;
    int segments = 0;
    int multi_embedding = 0;
    int multi_ring = 0;
  };
  std::vector<Row> rows;
  int max_arcs_multi_embedding = 0; // largest n with a multiply-embedded n-arc segment
  int max_arcs_multi_ring = 0;
  bool nonpositively_curved() const { return max_arcs_multi_embedding <= 3 && max_arcs_multi_ring <= 3; }
};

inline ExtensionReport check_extension_property() {
  ExtensionReport rep;
  for (int n = 1; n <= 6; ++n) {
    ExtensionReport::Row row{n, 0, 0, 0};
    for (const auto& [seg, embs] : enumerate_segment_embeddings(n)) {
      ++row.segments;
      std::set<int> rings;
      for (const auto& e : embs) rings.insert(e.ring);
      if (embs.size() > 1) ++row.multi_embedding;
      if (rings.size() > 1) ++row.multi_ring;
    }
    if (row.multi_embedding) rep.max_arcs_multi_embedding = n;
    if (row.multi_ring) rep.max_arcs_multi_ring = n;
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Precomputed vertex constraint tables.
//
// A partial link is coded in base 4, digit k = label of sector k or 3 when
// unknown. For each s and code the table stores, per sector, the bitmask of
// labels that occur in some ring word agreeing with the known sectors. A code
// is consistent iff any mask is nonzero.

inline constexpr int kPatternCount = 4096;
inline constexpr int kUnknownDigit = 3;

class VertexRule {
public:
  explicit VertexRule(Symmetry mode) : mode_(mode) {
    for (int s = 0; s < 3; ++s) {
      std::vector<std::array<int, 6>> words;
      for (int i = 1; i <= 3; ++i) {
        const Ring& r = ring_at(Label(s), i);
        for (const auto& m : circle_maps(mode)) {
          std::array<int, 6> w;
          for (int k = 0; k < 6; ++k) w[k] = r.faces[m.arc(k)].value();
          words.push_back(w);
        }
      }
      for (int code = 0; code < kPatternCount; ++code) {
        std::array<std::uint8_t, 6> masks{};
        for (const auto& w : words) {
          bool ok = true;
          for (int k = 0; k < 6 && ok; ++k) {
            const int digit = (code >> (2 * k)) & 3;
            if (digit != kUnknownDigit && digit != w[k]) ok = false;
          }
          if (ok)
            for (int k = 0; k < 6; ++k) masks[k] |= std::uint8_t(1u << w[k]);
        }
        support_[s][code] = masks;
      }
    }
  }

  Symmetry mode() const { return mode_; }
  const std::array<std::uint8_t, 6>& support(int s, int code) const { return support_[s][code]; }
  bool consistent(int s, int code) const { return support_[s][code][0] != 0; }

  static const VertexRule& get(Symmetry mode) {
    static const VertexRule rot(Symmetry::Rotations);
    static const VertexRule both(Symmetry::RotationsReflections);
    return mode == Symmetry::Rotations ? rot : both;
  }

private:
  Symmetry mode_;
  std::array<std::array<std::array<std::uint8_t, 6>, kPatternCount>, 3> support_{};
};

inline int encode(const LinkWord& w) {
  int code = 0;
  for (int k = 0; k < 6; ++k) code |= (w.is_known(k) ? w.faces[k].value() : kUnknownDigit) << (2 * k);
  return code;
}

} // namespace ringlab
