// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "ringlab/catalog.hpp"
#include "ringlab/distributions.hpp"
#include "ringlab/engine.hpp"
#include "ringlab/io.hpp"
#include "ringlab/labeling.hpp"
#include "ringlab/local.hpp"
#include "ringlab/rings.hpp"

using namespace ringlab;

namespace {

struct Outcome {
  bool pass = false;
  Json report;
};

using Criterion = std::function<Outcome(const SearchOptions&)>;

Outcome edge_labeling(const SearchOptions&) {
  const auto d = derive_edge_labels(square_window(12));
  int mismatches = 0, periodic_breaks = 0;
  for (const auto& [e, l] : d.labels) {
    mismatches += edge_label(e) != l;
    for (auto s : {EdgeCoord{e.x + 3, e.y, e.dir}, EdgeCoord{e.x, e.y + 3, e.dir}}) {
      auto it = d.labels.find(s);
      periodic_breaks += it != d.labels.end() && it->second != l;
    }
  }
  bool bottom = true;
  for (int x = 0; x < 11; ++x) bottom = bottom && d.labels.at({x + 1, 0, EdgeDir::H}) == d.labels.at({x, 0, EdgeDir::H}) + 1;
  Json j{{"edges", d.labels.size()}, {"mismatches", mismatches}, {"periodic_breaks", periodic_breaks}, {"bottom_row_counts_up", bottom}};
  return {!d.contradiction && mismatches == 0 && periodic_breaks == 0 && bottom, j};
}

Outcome ring_table_ranks(const SearchOptions&) {
  bool ok = ring_table().size() == 9;
  std::set<int> values;
  for (const auto& [dom, embs] : enumerate_root_embeddings()) values.insert(static_cast<int>(embs.size()));
  ok = ok && values == std::set<int>{1, 2};
  int horizontal_mismatch = 0;
  for (int ri = 0; ri < 9; ++ri)
    for (int start = 0; start < 6; ++start)
      for (int dir : {1, -1})
        horizontal_mismatch += (multiplicity(embedding_domain({ri, start, dir})) == 1) != (start == 0 || start == 3);
  int legal = 0, one_axis = 0;
  for (int s = 0; s < 3; ++s)
    for (int code = 0; code < 729; ++code) {
      std::array<int, 6> f;
      for (int k = 0, c = code; k < 6; ++k, c /= 3) f[k] = c % 3;
      const auto w = LinkWord::full(Label(s), f);
      if (match_link(w).empty()) continue;
      ++legal;
      int n = 0;
      for (int a = 0; a < 3; ++a) {
        const auto ds = half_link_domains(w, axis_from_index(a));
        n += multiplicity(ds[0]) == 1 && multiplicity(ds[1]) == 1;
      }
      one_axis += n == 1;
    }
  ok = ok && horizontal_mismatch == 0 && legal == one_axis;
  return {ok, {{"rings", ring_table().size()}, {"multiplicities", values}, {"horizontal_mismatch", horizontal_mismatch},
               {"legal_links", legal}, {"one_rank_axis", one_axis}}};
}

Outcome curvature(const SearchOptions&) {
  const auto rep = check_extension_property();
  Json rows = Json::array();
  for (const auto& r : rep.rows) rows.push_back({r.arcs, r.segments, r.multi_embedding, r.multi_ring});
  return {rep.nonpositively_curved(), {{"rows", rows}, {"max_arcs_multi_embedding", rep.max_arcs_multi_embedding}}};
}

Outcome local_counts(const SearchOptions& opt) {
  const auto a = enumerate_completions(initial_triangle(), initial_window(), opt);
  const auto b = enumerate_completions(initial_configuration(1, 1, 1), three_hexagon_window(), opt);
  const auto c = enumerate_completions(extension_seed(), extension_window(), opt);
  const auto dead = dead_end_report(extension_drawings()[1], 1, opt);
  Json j{{"initial", completions_report(a, true)},
         {"all_ones", completions_report(b, true)},
         {"extensions", completions_report(c, true)},
         {"second_drawing", dead_end_json(dead)}};
  return {a.count == 8 && b.count == 2 && c.count == 4 && dead.completions == 1 && dead.dead_ends.size() == 1, j};
}

Outcome catalog_validity(const SearchOptions& opt) {
  bool ok = true;
  Json words = Json::array();
  for (int h : {1, 2}) {
    const int rows = h == 1 ? 4 : 2; // four rows of triangles either way
    std::set<int> used;
    int n = 0;
    for (const auto& w : stacking_words(h, rows, opt.mode)) {
      const auto st = check(assemble(w, 2), opt.mode).status; // width 12
      ok = ok && st == Status::Valid;
      for (const auto& r : w.rows) used.insert(r.index);
      ++n;
    }
    // A strip counts as used when some used strip is a horizontal translate of it.
    int covered = 0;
    for (const auto& s : strip_table()) {
      if (s.height != h) continue;
      bool hit = false;
      for (int k : used)
        for (int t = 0; t < kStripPeriod && !hit; ++t) {
          bool same = true;
          for (int y = 0; y < h; ++y)
            for (int x = 0; x < kStripPeriod; ++x)
              same = same && s.mark(up(x, y)) == strip(h, k).mark(up(x + t, y)) &&
                     s.mark(down(x, y)) == strip(h, k).mark(down(x + t, y));
          hit = same;
        }
      covered += hit;
    }
    ok = ok && covered == (h == 1 ? 4 : 3);
    words.push_back({{"height", h}, {"words", n}, {"strips_covered", covered}});
  }
  const auto rep = strip_case_analysis();
  int readings = 0;
  for (const auto& [name, r] : rep.readings) readings += static_cast<int>(r.size());
  ok = ok && readings == 24 && rep.classes.size() == 4;
  return {ok, {{"stacks", words}, {"readings", readings}, {"distinct", rep.distinct_configurations}, {"classes", rep.classes},
               {"classes_with_reflections", rep.classes_with_reflections}}};
}

Outcome specials(const SearchOptions& opt) {
  bool ok = true;
  std::vector<Configuration> puzzles;
  Json per = Json::array();
  for (int i = 1; i <= 12; ++i) {
    const auto seed = special_seed(i).configuration();
    const auto target = ball(up(0, 0), 3);
    auto p = propagate(seed.extended(target), opt.mode);
    const bool forced = p && p.config->total();
    SearchOptions o = opt;
    o.count_only = true;
    const auto n = enumerate_completions(seed, target, o).count;
    puzzles.push_back(special_puzzle(i, 3, opt.mode));
    const auto fam = classify_distribution(induced_distribution(special_puzzle(i, 5, opt.mode))).family;
    ok = ok && forced && n == 1 && fam == Family::SpecialD0;
    per.push_back({{"index", i}, {"forced", forced}, {"completions", n}, {"family", to_string(fam)}});
  }
  int iso_pairs = 0;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) iso_pairs += isomorphic(puzzles[i], puzzles[j]).has_value();
  ok = ok && iso_pairs == 0;
  return {ok, {{"specials", per}, {"isomorphic_pairs", iso_pairs}}};
}

Outcome distribution_lemmas(const SearchOptions& opt) {
  // (i) over every catalog window and special puzzle built here.
  int even_faces = 0, checked = 0;
  for (int h : {1, 2})
    for (const auto& w : stacking_words(h, h == 1 ? 4 : 2, opt.mode)) {
      const auto d = induced_distribution(assemble(w, 2));
      for (const auto& f : d.faces()) {
        even_faces += face_parity(d, f) == Parity::Even;
        ++checked;
      }
    }
  for (int i = 1; i <= 12; ++i) {
    const auto d = induced_distribution(special_puzzle(i, 4, opt.mode));
    for (const auto& f : d.faces()) {
      even_faces += face_parity(d, f) == Parity::Even;
      ++checked;
    }
  }
  const auto l4 = verify_lemma_L4(8);
  const auto d6 = build_D0(hex_window({0, 0}, 6));
  const auto d8 = build_D0(hex_window({0, 0}, 8));
  const bool d0_ok = d6.total() && all_odd(d6) && d8.restricted(d6.window()) == d6;
  const auto l3 = verify_lemma_L3(4, 4);
  const bool ok = even_faces == 0 && l4.forced && l4.alternates && d0_ok && l3.counterexamples.empty();
  return {ok, {{"faces_checked", checked}, {"even_faces", even_faces},
               {"half_strip", {{"forced", l4.forced}, {"alternates", l4.alternates}}},
               {"d0", {{"total", d6.total()}, {"all_odd", all_odd(d6)}, {"stable", d8.restricted(d6.window()) == d6}}},
               {"segments", {{"assignments", l3.assignments}, {"counterexamples", l3.counterexamples.size()}}}}};
}

Outcome bounded(const SearchOptions& opt) {
  const auto rep = bounded_classification(2, 4, opt);
  return {rep.unexplained.empty() && rep.completions == rep.in_catalog + rep.dead_ends,
          {{"radius", rep.radius}, {"probe", rep.probe}, {"completions", rep.completions}, {"in_catalog", rep.in_catalog},
           {"dead_ends", rep.dead_ends}, {"unexplained", rep.unexplained.size()}}};
}

} // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  SearchOptions base;
  base.threads = 1;

  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"edge labeling", edge_labeling},
      {"ring and rank table", ring_table_ranks},
      {"nonpositive curvature", curvature},
      {"local counts 8/2/4 and dead end", local_counts},
      {"catalog validity", catalog_validity},
      {"twelve specials", specials},
      {"distribution lemmas", distribution_lemmas},
      {"bounded classification r=2 probe=4", bounded},
  };
  const double budget[] = {1, 1, 1, 10, 5, 30, 120, 600};

  int failures = 0;
  std::vector<std::string> first_reports(criteria.size());
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second(base);
    } catch (const std::exception& e) {
      o.pass = false;
      o.report = {{"error", e.what()}};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool pass = o.pass && secs < budget[i];
    first_reports[i] = o.report.dump();
    failures += !pass;
    std::printf("%s criterion %zu: %s (%.2f s) %s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.report.dump().c_str());
  }

  // Criteria 4-8 again with more threads; reports must match byte for byte.
  bool same = true;
  const auto t0 = Clock::now();
  for (int threads : {2, 4}) {
    SearchOptions o = base;
    o.threads = threads;
    for (std::size_t i = 3; i < criteria.size(); ++i) {
      std::string again;
      try {
        again = criteria[i].second(o).report.dump();
      } catch (const std::exception& e) {
        again = e.what();
      }
      if (again != first_reports[i]) {
        same = false;
        std::printf("  criterion %zu differs with %d threads\n", i + 1, threads);
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  failures += !same;
  std::printf("%s criterion 9: identical reports with 1, 2 and 4 threads (%.2f s)\n", same ? "PASS" : "FAIL", secs);
  return failures == 0 ? 0 : 1;
}
