#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ringlab/rings.hpp"

using namespace ringlab;

namespace {

// Arc labels written out from the ring pictures, as offsets from s.
const int kArcOffsets[3][6] = {{2, 0, 1, 2, 0, 1}, {0, 1, 0, 1, 2, 1}, {0, 2, 0, 2, 1, 2}};

struct Dom {
  std::array<int, 4> v;
  std::array<int, 3> f;
  auto operator<=>(const Dom&) const = default;
};

// Multiplicity of every length-pi domain, counted directly from the ring words.
std::map<Dom, int> brute_multiplicities() {
  std::map<Dom, int> out;
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < 3; ++i) {
      int arcs[6], verts[6];
      for (int k = 0; k < 6; ++k) {
        arcs[k] = (s + kArcOffsets[i][k]) % 3;
        verts[k] = k % 2 == 0 ? (s + 1) % 3 : s;
      }
      for (int start = 0; start < 6; ++start) {
        Dom ccw, cw;
        for (int j = 0; j < 4; ++j) {
          ccw.v[j] = verts[(start + j) % 6];
          cw.v[j] = verts[(start - j + 12) % 6];
        }
        for (int j = 0; j < 3; ++j) {
          ccw.f[j] = arcs[(start + j) % 6];
          cw.f[j] = arcs[(start - 1 - j + 12) % 6];
        }
        ++out[ccw];
        ++out[cw];
      }
    }
  return out;
}

Dom to_dom(const RootDomain& d) {
  Dom o;
  for (int i = 0; i < 4; ++i) o.v[i] = d.edges[i].value();
  for (int i = 0; i < 3; ++i) o.f[i] = d.faces[i].value();
  return o;
}

} // namespace

TEST(Rings, TableMatchesPictures) {
  const auto& t = ring_table();
  ASSERT_EQ(t.size(), 9u);
  for (const auto& r : t)
    for (int k = 0; k < 6; ++k) {
      EXPECT_EQ(r.faces[k], Label(r.s.value() + kArcOffsets[r.index - 1][k]));
      EXPECT_EQ(r.edges[k], k % 2 == 0 ? r.s + 1 : r.s);
    }
  EXPECT_EQ(ring_at(Label(0), 1).faces, (std::array<Label, 6>{Label(2), Label(0), Label(1), Label(2), Label(0), Label(1)}));
  EXPECT_EQ(ring_at(Label(1), 2).faces, (std::array<Label, 6>{Label(1), Label(2), Label(1), Label(2), Label(0), Label(2)}));
}

TEST(Rings, MatchLink) {
  auto m = match_link(LinkWord::full(Label(0), {2, 0, 1, 2, 0, 1}));
  ASSERT_FALSE(m.empty());
  bool identity = false;
  for (const auto& x : m) identity = identity || (x.ring == 0 && x.map.shift == 0 && !x.map.reflected);
  EXPECT_TRUE(identity);

  EXPECT_TRUE(match_link(LinkWord::full(Label(0), {0, 0, 0, 0, 0, 0})).empty());
  // Only a reflected ring fits these four faces.
  EXPECT_EQ(match_link(LinkWord::partial(Label(1), {2, 0, -1, -1, 2, 1})).size(), 1u);
  EXPECT_TRUE(match_link(LinkWord::partial(Label(1), {2, 0, -1, -1, 2, 1}), Symmetry::Rotations).empty());
}

TEST(Rings, Multiplicities) {
  const auto oracle = brute_multiplicities();
  const auto& t = enumerate_root_embeddings();
  int total = 0;
  std::set<int> values;
  for (const auto& [d, embs] : t) {
    total += static_cast<int>(embs.size());
    values.insert(static_cast<int>(embs.size()));
    EXPECT_EQ(oracle.at(to_dom(d)), static_cast<int>(embs.size()));
  }
  EXPECT_EQ(total, 108);
  EXPECT_EQ(t.size(), oracle.size());
  EXPECT_EQ(values, (std::set<int>{1, 2}));
}

TEST(Rings, HorizontalRootsHaveRankThreeHalves) {
  const RootDomain example{{Label(0), Label(1), Label(0), Label(1)}, {Label(1), Label(0), Label(2)}};
  EXPECT_EQ(multiplicity(example), 1);
  EXPECT_EQ(root_rank(example).rank, (Rational{3, 2}));

  for (int ri = 0; ri < 9; ++ri) {
    int low = 0;
    for (int start = 0; start < 6; ++start)
      for (int dir : {1, -1}) {
        const int n = multiplicity(embedding_domain({ri, start, dir}));
        const bool horizontal = start == 0 || start == 3;
        EXPECT_EQ(n == 1, horizontal) << "ring " << ri << " start " << start;
        low += n == 1;
        EXPECT_EQ(root_rank(embedding_domain({ri, start, dir})).rank, n == 1 ? (Rational{3, 2}) : (Rational{2, 1}));
      }
    EXPECT_EQ(low, 4);
  }
  EXPECT_THROW(root_rank(RootDomain{{Label(0), Label(0), Label(0), Label(0)}, {Label(0), Label(0), Label(0)}}), Error);
}

TEST(Rings, EveryLegalLinkHasOneRankAxis) {
  const auto oracle = brute_multiplicities();
  int legal = 0;
  for (int s = 0; s < 3; ++s)
    for (int code = 0; code < 729; ++code) {
      std::array<int, 6> f;
      for (int k = 0, c = code; k < 6; ++k, c /= 3) f[k] = c % 3;
      const auto w = LinkWord::full(Label(s), f);
      if (match_link(w).empty()) continue;
      ++legal;
      // Axes whose two opposite half links both have multiplicity 1.
      int count = 0, found = -1;
      for (int a = 0; a < 3; ++a) {
        bool ok = true;
        for (int h = 0; h < 2; ++h) {
          Dom d;
          for (int j = 0; j < 4; ++j) d.v[j] = (a + 3 * h + j) % 2 == 0 ? (s + 1) % 3 : s;
          for (int j = 0; j < 3; ++j) d.f[j] = f[(a + 3 * h + j) % 6];
          ok = ok && oracle.count(d) && oracle.at(d) == 1;
        }
        if (ok) {
          ++count;
          found = a;
        }
      }
      ASSERT_EQ(count, 1);
      EXPECT_EQ(rank_axis(w), axis_from_index(found));
    }
  EXPECT_GT(legal, 0);
  EXPECT_EQ(rank_axis(LinkWord::full(Label(0), {2, 0, 1, 2, 0, 1})), Axis::A0);
}

TEST(Rings, RankAxisTurnsWithTheWord) {
  // Rotating the word by two sectors rotates the axis by 120 degrees.
  const auto w = LinkWord::full(Label(0), {2, 0, 1, 2, 0, 1});
  auto rotated = w;
  for (int k = 0; k < 6; ++k) rotated.faces[(k + 2) % 6] = w.faces[k];
  EXPECT_EQ(rank_axis(rotated), axis_from_index(index(rank_axis(w)) + 2));
}

TEST(Rings, Complements) {
  for (const auto& [d, embs] : enumerate_root_embeddings()) {
    const auto c = complements(d);
    EXPECT_EQ(c.size(), embs.size());
    // Same endpoints; the domain followed by the complement read backwards
    // is a whole ring word.
    for (const auto& e : c) {
      EXPECT_EQ(e.edges[0], d.edges[0]);
      EXPECT_EQ(e.edges[3], d.edges[3]);
      std::array<int, 6> word;
      for (int j = 0; j < 3; ++j) {
        word[j] = d.faces[j].value();
        word[3 + j] = e.faces[2 - j].value();
      }
      bool in_ring = false;
      for (const auto& r : ring_table())
        for (int start = 0; start < 6 && !in_ring; ++start)
          for (int dir : {1, -1}) {
            bool ok = true;
            for (int j = 0; j < 6 && ok; ++j) {
              const int arc = dir > 0 ? start + j : start - 1 - j;
              ok = r.faces[mod(arc, 6)].value() == word[j];
            }
            in_ring = in_ring || ok;
          }
      EXPECT_TRUE(in_ring);
    }
  }
}

TEST(Rings, NonpositivelyCurved) {
  const auto rep = check_extension_property();
  EXPECT_TRUE(rep.nonpositively_curved());
  EXPECT_EQ(rep.max_arcs_multi_embedding, 3);
  for (const auto& row : rep.rows)
    if (row.arcs > 3) {
      EXPECT_EQ(row.multi_embedding, 0);
      EXPECT_EQ(row.multi_ring, 0);
    }
  // Full rings: each of the 12 readings of a ring is its own segment.
  EXPECT_EQ(rep.rows[5].segments, static_cast<int>(enumerate_segment_embeddings(6).size()));
  for (const auto& [seg, embs] : enumerate_segment_embeddings(6)) EXPECT_EQ(embs.size(), 1u);
}
