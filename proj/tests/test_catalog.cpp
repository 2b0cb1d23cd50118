#include <gtest/gtest.h>

#include <set>

#include "ringlab/catalog.hpp"

using namespace ringlab;

namespace {

SearchOptions one_thread() {
  SearchOptions o;
  o.threads = 1;
  return o;
}

} // namespace

TEST(Catalog, HeightOneStripsAsDrawn) {
  struct Row {
    std::array<int, 6> ups, downs;
    char bottom, top;
  };
  // Top and bottom letters are only known up to which side is called A.
  const Row drawn[4] = {{{0, 2, 2, 1, 1, 0}, {1, 1, 0, 0, 2, 2}, 'B', 'A'},
                        {{0, 1, 2, 0, 1, 2}, {2, 0, 1, 2, 0, 1}, 'A', 'A'},
                        {{1, 1, 0, 0, 2, 2}, {0, 2, 2, 1, 1, 0}, 'B', 'A'},
                        {{2, 0, 1, 2, 0, 1}, {1, 2, 0, 1, 2, 0}, 'B', 'B'}};
  for (int i = 0; i < 4; ++i) {
    const auto& s = strip(1, i + 1);
    EXPECT_EQ(s.period, 6);
    EXPECT_EQ(s.ups[0], drawn[i].ups);
    EXPECT_EQ(s.downs[0], drawn[i].downs);
    EXPECT_EQ(std::set<char>({s.top, s.bottom}), std::set<char>({drawn[i].top, drawn[i].bottom}));
  }
  EXPECT_EQ(strip_table().size(), 7u);
  EXPECT_THROW(strip(3, 1), Error);
}

TEST(Catalog, StripsAreValidAlone) {
  for (const auto& s : strip_table()) {
    const auto c = assemble({s.height, {{s.index, false, 0}}}, 2);
    EXPECT_NE(check(c).status, Status::Contradiction) << s.height << '/' << s.index;
    // Periodic closure: every vertex on the cylinder has a full link.
    Configuration cyl({}, 6);
    for (int y = 0; y < s.height; ++y)
      for (int x = 0; x < 6; ++x)
        for (auto f : {up(x, y), down(x, y)}) cyl.set(f, s.mark(f));
    EXPECT_NE(check(cyl).status, Status::Contradiction);
  }
}

TEST(Catalog, SecondStripIsAGlideOfItself) {
  // Reflect in the horizontal line and slide: the marking comes back.
  const auto& s = strip(1, 2);
  bool found = false;
  for (int t = 0; t < 6 && !found; ++t) {
    const auto g = LatticeIsometry::translation(t, 1) * LatticeIsometry(0, true, {0, 0});
    if (!preserves_labels(g)) continue;
    bool same = true;
    for (int x = 0; x < 6; ++x)
      for (auto f : {up(x, 0), down(x, 0)}) same = same && s.mark(f) == s.mark(g(f));
    found = same;
  }
  EXPECT_TRUE(found);
}

TEST(Catalog, StackingRules) {
  // Height 1: facing letters are equal. Height 2: they differ, and a strip
  // never sits on itself unflipped.
  for (const auto& p : stacking_table(1)) {
    EXPECT_EQ(top_letter(strip(1, p.lower.index), p.lower.flipped), bottom_letter(strip(1, p.upper.index), p.upper.flipped));
  }
  for (const auto& p : stacking_table(2)) {
    if (!p.lower.flipped && !p.upper.flipped) EXPECT_NE(p.lower.index, p.upper.index);
  }
  EXPECT_FALSE(stacking_table(1).empty());
  EXPECT_FALSE(stacking_table(2).empty());
}

TEST(Catalog, AssembledStacksAreValid) {
  for (int h : {1, 2})
    for (const auto& w : stacking_words(h, h == 1 ? 4 : 3)) {
      const auto c = assemble(w, 2);
      EXPECT_EQ(check(c).status, Status::Valid);
    }
}

TEST(Catalog, WordsBranch) {
  // Two continuations per interface once a row is fixed.
  for (int h : {1, 2}) {
    const auto n2 = stacking_words(h, 2).size();
    const auto n3 = stacking_words(h, 3).size();
    EXPECT_EQ(n3, 2 * n2) << "height " << h;
    EXPECT_EQ(row_choices(h, 0).size(), 6u);
  }
}

TEST(Catalog, MismatchedLettersThrow) {
  // Strip 2 is A/A and strip 4 is B/B.
  StackingWord w{1, {{2, false, 0}, {4, false, 1}}};
  EXPECT_THROW(assemble(w, 2), Error);
  StackingWord bad_shift{1, {{2, false, 1}}};
  EXPECT_THROW(assemble(bad_shift, 2), Error);
}

TEST(Catalog, SpecialsAreUnique) {
  std::vector<Configuration> puzzles;
  for (int i = 1; i <= 12; ++i) {
    const auto seed = special_seed(i).configuration();
    EXPECT_EQ(seed.window().size(), 13u);
    auto p = propagate(seed.extended(ball(up(0, 0), 3)));
    ASSERT_TRUE(p) << i;
    EXPECT_TRUE(p.config->total()) << i;
    SearchOptions o = one_thread();
    o.limit = 2;
    EXPECT_EQ(enumerate_completions(seed, ball(up(0, 0), 3), o).count, 1u) << i;
    puzzles.push_back(special_puzzle(i, 3));
    EXPECT_EQ(check(puzzles.back()).status, Status::Valid);
  }
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) EXPECT_EQ(isomorphic(puzzles[i], puzzles[j]).has_value(), i == j) << i + 1 << " vs " << j + 1;
  EXPECT_FALSE(isomorphic(special_puzzle(1, 2), special_puzzle(2, 2)));
  EXPECT_THROW(special_seed(13), Error);
}

TEST(Catalog, Isomorphism) {
  const auto a = special_puzzle(3, 2);
  EXPECT_EQ(isomorphic(a, a), LatticeIsometry::identity());
  // A label-preserving move of a window is found again.
  const auto g = LatticeIsometry::translation(4, 1) * LatticeIsometry::rotation_about({0, 0}, 2);
  ASSERT_TRUE(preserves_labels(g));
  std::map<FaceCoord, Label> moved;
  for (const auto& [f, l] : a.marks()) moved[g(f)] = l;
  const auto b = Configuration::from_marks(moved);
  auto iso = isomorphic(a, b);
  ASSERT_TRUE(iso);
  for (const auto& [f, l] : a.marks()) EXPECT_EQ(b.mark((*iso)(f)), l);
  EXPECT_THROW(isomorphic(a, special_puzzle(3, 3)), Error);
}

TEST(Catalog, FirstAndThirdStripRows) {
  // Strip 3 is strip 1 moved along by half a period.
  auto window = [](int x0) {
    std::vector<FaceCoord> w;
    for (int x = x0; x < x0 + 6; ++x)
      for (int y = 0; y < 2; ++y) {
        w.push_back(up(x, y));
        w.push_back(down(x, y));
      }
    return w;
  };
  const StackingWord one{1, {{1, false, 0}, {1, true, 1}}};
  const StackingWord three{1, {{3, false, 0}, {3, true, 1}}};
  const auto a = assemble(one, 2, false, false).restricted(window(3));
  const auto b = assemble(three, 2, false, false).restricted(window(0));
  auto iso = isomorphic(a, b);
  ASSERT_TRUE(iso);
  EXPECT_EQ(iso->rotation(), 0);
  EXPECT_FALSE(iso->reflect());
  for (int x = 0; x < 6; ++x) EXPECT_EQ(strip(1, 3).mark(up(x, 0)), strip(1, 1).mark(up(x + 3, 0)));
}

TEST(Catalog, CaseAnalysis) {
  const auto rep = strip_case_analysis();
  int readings = 0;
  for (const auto& [name, r] : rep.readings) readings += static_cast<int>(r.size());
  EXPECT_EQ(readings, 24);
  EXPECT_EQ(rep.distinct_configurations, 24);
  EXPECT_EQ(rep.classes.size(), 4u);
  EXPECT_EQ(rep.classes_with_reflections.size(), 3u);
  EXPECT_EQ(rep.classes, (std::vector<std::string>{"ac", "b", "de", "f"}));
}

TEST(Catalog, BoundedClassification) {
  const auto rep = bounded_classification(2, 4, one_thread());
  EXPECT_EQ(rep.completions, rep.in_catalog + rep.dead_ends + rep.unexplained.size());
  EXPECT_TRUE(rep.unexplained.empty());
  EXPECT_GT(rep.in_catalog, 0u);
}
