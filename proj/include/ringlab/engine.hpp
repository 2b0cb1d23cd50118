#pragma once

// Legality checking, constraint propagation and exhaustive completion search
// for partial configurations.
//
// Every vertex touching the window carries one constraint: the known face
// labels of its link must agree with some ring of Theta_s under an admissible
// circle map (faces outside the window are wildcards). Propagation is
// generalized arc consistency over these constraints; the search branches on
// the unknown face with the fewest admissible labels.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "ringlab/configuration.hpp"
#include "ringlab/labeling.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/rings.hpp"

namespace ringlab {

inline constexpr Symmetry kDefaultSymmetry = Symmetry::RotationsReflections;

struct Witness {
  VertexCoord vertex;
  std::optional<FaceCoord> face;
  std::string reason;
};

enum class Status { Valid, Contradiction, Incomplete };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Valid: return "Valid";
    case Status::Contradiction: return "Contradiction";
    default: return "Incomplete";
  }
}

struct Verdict {
  Status status = Status::Valid;
  std::vector<Witness> witnesses;
  std::vector<FaceCoord> unmarked;
};

namespace detail {

// Window with dense face and vertex indices.
class CompiledWindow {
public:
  explicit CompiledWindow(const Configuration& c) : CompiledWindow(c.window(), c.period()) {}

  CompiledWindow(const std::vector<FaceCoord>& window, std::optional<int> period) : faces_(window), period_(period) {
    std::sort(faces_.begin(), faces_.end());
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
      auto [it, fresh] = face_index_.emplace(key(faces_[i]), i);
      if (!fresh) throw Error("periodic window holds two copies of a face");
    }
    std::unordered_map<VertexCoord, int> vindex;
    face_vertices_.resize(faces_.size());
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
      const auto vs = vertices(faces_[i]);
      for (int j = 0; j < 3; ++j) {
        const VertexCoord v = canonical(vs[j]);
        auto [it, fresh] = vindex.emplace(v, static_cast<int>(verts_.size()));
        if (fresh) {
          verts_.push_back(v);
          vert_s_.push_back(vertex_s(v).value());
          std::array<int, 6> slots;
          const auto lf = link_faces(v);
          for (int k = 0; k < 6; ++k) slots[k] = index_of(lf[k]);
          slots_.push_back(slots);
        }
        face_vertices_[i][j] = {it->second, sector_of(faces_[i], vs[j])};
      }
    }
  }

  int size() const { return static_cast<int>(faces_.size()); }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const std::vector<FaceCoord>& faces() const { return faces_; }
  const FaceCoord& face(int i) const { return faces_[i]; }
  VertexCoord vertex(int v) const { return verts_[v]; }
  int s(int v) const { return vert_s_[v]; }
  const std::array<int, 6>& slots(int v) const { return slots_[v]; }
  // (vertex index, sector of the face in that vertex's link)
  const std::array<std::pair<int, int>, 3>& face_vertices(int f) const { return face_vertices_[f]; }

  int index_of(const FaceCoord& f) const {
    auto it = face_index_.find(key(f));
    return it == face_index_.end() ? -1 : it->second;
  }

  bool complete_vertex(int v) const {
    for (int f : slots_[v])
      if (f < 0) return false;
    return true;
  }

private:
  FaceCoord key(const FaceCoord& f) const {
    if (!period_) return f;
    return {mod(f.x, *period_), f.y, f.orient};
  }
  VertexCoord canonical(VertexCoord v) const {
    if (!period_) return v;
    return {mod(v.x, *period_), v.y};
  }

  std::vector<FaceCoord> faces_;
  std::optional<int> period_;
  std::unordered_map<FaceCoord, int> face_index_;
  std::vector<VertexCoord> verts_;
  std::vector<int> vert_s_;
  std::vector<std::array<int, 6>> slots_;
  std::vector<std::array<std::pair<int, int>, 3>> face_vertices_;
};

// Mutable search state over a compiled window, with an undo trail.
class Solver {
public:
  Solver(const CompiledWindow& w, const VertexRule& rule) : w_(&w), rule_(&rule) {
    labels_.assign(w.size(), -1);
    codes_.resize(w.vertex_count());
    for (int v = 0; v < w.vertex_count(); ++v) codes_[v] = 0xfff; // all unknown
  }

  const CompiledWindow& window() const { return *w_; }
  int label(int f) const { return labels_[f]; }
  const std::vector<std::int8_t>& labels() const { return labels_; }
  std::size_t trail_size() const { return trail_.size(); }
  const std::optional<Witness>& failure() const { return failure_; }

  // Places a label without propagating. Returns false if some vertex of f
  // becomes inconsistent.
  bool place(int f, int l) {
    labels_[f] = static_cast<std::int8_t>(l);
    trail_.push_back(f);
    bool ok = true;
    for (auto [v, k] : w_->face_vertices(f)) {
      codes_[v] = (codes_[v] & ~(3 << (2 * k))) | (l << (2 * k));
      queue_.push_back(v);
      if (!rule_->consistent(w_->s(v), codes_[v])) {
        ok = false;
        fail_at_vertex(v, "link matches no ring");
      }
    }
    return ok;
  }

  // Admissible labels of an unknown face, as a 3-bit mask.
  int domain(int f) const {
    int mask = 7;
    for (auto [v, k] : w_->face_vertices(f)) mask &= rule_->support(w_->s(v), codes_[v])[k];
    return mask;
  }

  // Runs arc consistency from the queued vertices. With force == false only
  // consistency is checked and nothing is assigned.
  bool propagate(bool force = true) {
    while (!queue_.empty()) {
      const int v = queue_.back();
      queue_.pop_back();
      if (!rule_->consistent(w_->s(v), codes_[v])) {
        fail_at_vertex(v, "link matches no ring");
        queue_.clear();
        return false;
      }
      if (!force) continue;
      for (int f : w_->slots(v)) {
        if (f < 0 || labels_[f] >= 0) continue;
        const int d = domain(f);
        if (d == 0) {
          failure_ = Witness{v_of(f), w_->face(f), "no admissible label"};
          queue_.clear();
          return false;
        }
        if (std::has_single_bit(static_cast<unsigned>(d))) {
          if (!place(f, std::countr_zero(static_cast<unsigned>(d)))) {
            queue_.clear();
            return false;
          }
        }
      }
    }
    return true;
  }

  bool assign(int f, int l) { return place(f, l) && propagate(); }

  // Loads the marks of c, propagating only when `force`.
  bool load(const Configuration& c, bool force) {
    for (const auto& [face, l] : c.marks()) {
      const int f = w_->index_of(face);
      if (f < 0) throw Error("marked face outside the window");
      if (labels_[f] >= 0) {
        if (labels_[f] != l.value()) throw Error("conflicting marks");
        continue;
      }
      if (!place(f, l.value())) {
        queue_.clear();
        return false;
      }
    }
    for (int v = 0; v < w_->vertex_count(); ++v) queue_.push_back(v);
    return propagate(force);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int f = trail_.back();
      trail_.pop_back();
      for (auto [v, k] : w_->face_vertices(f)) codes_[v] |= (3 << (2 * k));
      labels_[f] = -1;
    }
    queue_.clear();
    failure_.reset();
  }

private:
  VertexCoord v_of(int f) const { return w_->vertex(w_->face_vertices(f)[0].first); }
  void fail_at_vertex(int v, const char* why) {
    if (!failure_) failure_ = Witness{w_->vertex(v), std::nullopt, why};
  }

  const CompiledWindow* w_;
  const VertexRule* rule_;
  std::vector<std::int8_t> labels_;
  std::vector<int> codes_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::optional<Witness> failure_;
};

inline Configuration to_configuration(const CompiledWindow& w, const std::vector<std::int8_t>& labels,
                                      std::optional<int> period) {
  Configuration c(w.faces(), period);
  for (int i = 0; i < w.size(); ++i)
    if (labels[i] >= 0) c.set(w.face(i), Label(labels[i]));
  return c;
}

} // namespace detail

inline Verdict check(const Configuration& config, Symmetry mode = kDefaultSymmetry) {
  const detail::CompiledWindow w(config);
  Verdict out;
  bool any_full_link = false;
  for (int v = 0; v < w.vertex_count(); ++v) {
    int code = 0;
    bool full = true;
    for (int k = 0; k < 6; ++k) {
      const int f = w.slots(v)[k];
      int digit = kUnknownDigit;
      if (f >= 0)
        if (auto m = config.mark(w.face(f))) digit = m->value();
      full = full && digit != kUnknownDigit;
      code |= digit << (2 * k);
    }
    any_full_link = any_full_link || full;
    if (!VertexRule::get(mode).consistent(w.s(v), code))
      out.witnesses.push_back({w.vertex(v), std::nullopt, "link matches no ring"});
  }
  for (const auto& f : config.window())
    if (!config.mark(f)) out.unmarked.push_back(f);
  if (!out.witnesses.empty())
    out.status = Status::Contradiction;
  else if (!out.unmarked.empty() || !any_full_link)
    out.status = Status::Incomplete; // nothing was checked in full
  return out;
}

struct PropagateResult {
  std::optional<Configuration> config; // set on success
  std::optional<Witness> contradiction;
  explicit operator bool() const { return config.has_value(); }
};

// Assigns every face whose label is forced, to a fixed point.
inline PropagateResult propagate(const Configuration& config, Symmetry mode = kDefaultSymmetry) {
  const detail::CompiledWindow w(config);
  detail::Solver solver(w, VertexRule::get(mode));
  PropagateResult out;
  if (!solver.load(config, true)) {
    out.contradiction = solver.failure();
    return out;
  }
  out.config = detail::to_configuration(w, solver.labels(), config.period());
  return out;
}

struct SearchOptions {
  Symmetry mode = kDefaultSymmetry;
  int threads = 0;         // 0: all cores
  std::uint64_t limit = 0; // stop after this many completions (0: no limit)
  bool count_only = false;
};

// Total markings of a window, stored densely against `faces` (sorted).
struct CompletionSet {
  std::vector<FaceCoord> faces;
  std::optional<int> period;
  std::vector<std::vector<std::int8_t>> rows;
  std::uint64_t count = 0;

  Configuration at(std::size_t i) const {
    Configuration c(faces, period);
    for (std::size_t k = 0; k < faces.size(); ++k) c.set(faces[k], Label(rows[i][k]));
    return c;
  }
  std::vector<Configuration> configurations() const {
    std::vector<Configuration> out;
    for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(at(i));
    return out;
  }
};

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace detail {

// Static tie-break order: distance of the face centroid from the window
// centroid, then coordinates.
inline std::vector<int> centroid_order(const CompiledWindow& w) {
  const int n = w.size();
  auto centroid3 = [](const FaceCoord& f) {
    const int o = f.orient == Orient::Up ? 1 : 2;
    return std::pair<long long, long long>{3LL * f.x + o, 3LL * f.y + o};
  };
  long long sx = 0, sy = 0;
  for (const auto& f : w.faces()) {
    auto [cx, cy] = centroid3(f);
    sx += cx;
    sy += cy;
  }
  std::vector<std::pair<long long, int>> keyed;
  for (int i = 0; i < n; ++i) {
    auto [cx, cy] = centroid3(w.face(i));
    const long long dx = n * cx - sx, dy = n * cy - sy;
    keyed.push_back({dx * dx + dx * dy + dy * dy, i});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[keyed[i].second] = i;
  return rank;
}

class Search {
public:
  Search(const CompiledWindow& w, const SearchOptions& opt) : w_(w), opt_(opt), rank_(centroid_order(w)) {}

  // Returns the unknown face to branch on, or -1 when the marking is total.
  int pick(const Solver& s) const {
    int best = -1, best_size = 4, best_rank = 0;
    for (int f = 0; f < w_.size(); ++f) {
      if (s.label(f) >= 0) continue;
      const int size = std::popcount(static_cast<unsigned>(s.domain(f)));
      if (size < best_size || (size == best_size && rank_[f] < best_rank)) {
        best = f;
        best_size = size;
        best_rank = rank_[f];
      }
    }
    return best;
  }

  // Depth-first enumeration below the current state of s.
  void dfs(Solver& s, std::vector<std::vector<std::int8_t>>& out, std::uint64_t& count) {
    if (stop_.load(std::memory_order_relaxed)) return;
    const int f = pick(s);
    if (f < 0) {
      ++count;
      if (!opt_.count_only) out.push_back(s.labels());
      if (opt_.limit && found_.fetch_add(1) + 1 >= opt_.limit) stop_ = true;
      return;
    }
    const int d = s.domain(f);
    for (int l = 0; l < 3; ++l) {
      if (!((d >> l) & 1)) continue;
      const std::size_t mark = s.trail_size();
      if (s.assign(f, l)) dfs(s, out, count);
      s.undo_to(mark);
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  // Splits the tree into independent prefixes (lists of assignments).
  std::vector<std::vector<std::pair<int, int>>> split(Solver& s, std::size_t want) {
    std::vector<std::vector<std::pair<int, int>>> frontier = {{}};
    for (int depth = 0; depth < 8 && frontier.size() < want; ++depth) {
      std::vector<std::vector<std::pair<int, int>>> next;
      bool grew = false;
      for (const auto& prefix : frontier) {
        const std::size_t mark = s.trail_size();
        bool ok = true;
        for (auto [f, l] : prefix) ok = ok && s.assign(f, l);
        const int f = ok ? pick(s) : -1;
        if (!ok) {
          s.undo_to(mark);
          grew = true;
          continue;
        }
        if (f < 0) {
          next.push_back(prefix);
        } else {
          grew = true;
          const int d = s.domain(f);
          for (int l = 0; l < 3; ++l)
            if ((d >> l) & 1) {
              auto p = prefix;
              p.push_back({f, l});
              next.push_back(std::move(p));
            }
        }
        s.undo_to(mark);
      }
      frontier = std::move(next);
      if (!grew) break;
    }
    return frontier;
  }

  std::atomic<bool> stop_{false};
  std::atomic<std::uint64_t> found_{0};

private:
  const CompiledWindow& w_;
  SearchOptions opt_;
  std::vector<int> rank_;
};

} // namespace detail

// All total markings of `target` that extend config and pass check, sorted
// lexicographically by label over the sorted face list.
inline CompletionSet enumerate_completions(const Configuration& config, const std::vector<FaceCoord>& target,
                                           const SearchOptions& opt = {}) {
  {
    const std::set<FaceCoord> t(target.begin(), target.end());
    for (const auto& f : config.window())
      if (!t.count(f)) throw Error("target window must contain the configuration window");
  }
  const detail::CompiledWindow w(target, config.period());
  CompletionSet out{w.faces(), config.period(), {}, 0};
  detail::Solver root(w, VertexRule::get(opt.mode));
  if (!root.load(config, true)) return out;

  detail::Search search(w, opt);
  const int threads = resolve_threads(opt.threads);
  if (threads <= 1) {
    search.dfs(root, out.rows, out.count);
  } else {
    auto tasks = search.split(root, static_cast<std::size_t>(threads) * 16);
    std::vector<std::vector<std::vector<std::int8_t>>> results(tasks.size());
    std::vector<std::uint64_t> counts(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      detail::Solver s = root;
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        const std::size_t mark = s.trail_size();
        bool ok = true;
        for (auto [f, l] : tasks[t]) ok = ok && s.assign(f, l);
        if (ok) search.dfs(s, results[t], counts[t]);
        s.undo_to(mark);
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      out.count += counts[t];
      for (auto& r : results[t]) out.rows.push_back(std::move(r));
    }
  }
  std::sort(out.rows.begin(), out.rows.end());
  if (opt.limit && out.rows.size() > opt.limit) out.rows.resize(opt.limit);
  if (opt.limit && out.count > opt.limit) out.count = opt.limit;
  return out;
}

inline bool has_completion(const Configuration& config, const std::vector<FaceCoord>& target,
                           Symmetry mode = kDefaultSymmetry) {
  SearchOptions opt;
  opt.mode = mode;
  opt.threads = 1;
  opt.limit = 1;
  opt.count_only = true;
  return enumerate_completions(config, target, opt).count > 0;
}

struct DeadEndReport {
  FaceCoord center;
  int radius = 0;
  std::uint64_t completions = 0;
  // (probe radius, completions at `radius` that still extend to the probe ball)
  std::vector<std::pair<int, std::uint64_t>> survivors;
  std::vector<Configuration> dead_ends; // at the largest probe radius
};

// Faces sharing a vertex with `window`: the window grown by one ring.
inline std::vector<FaceCoord> grown(const std::vector<FaceCoord>& window) {
  std::set<FaceCoord> out(window.begin(), window.end());
  for (auto v : vertices_of(window))
    for (const auto& f : link_faces(v)) out.insert(f);
  return {out.begin(), out.end()};
}

namespace detail {

// Completions of config on `base` that fail to extend to the probe windows,
// which are tried in order; each probe label goes into the survivors list.
inline void dead_end_scan(DeadEndReport& rep, const Configuration& config, const std::vector<FaceCoord>& base_window,
                          const std::vector<std::pair<int, std::vector<FaceCoord>>>& probes, const SearchOptions& opt) {
  SearchOptions enum_opt = opt;
  enum_opt.count_only = false;
  enum_opt.limit = 0;
  const auto base = enumerate_completions(config, base_window, enum_opt);
  rep.completions = base.count;

  std::vector<std::size_t> alive(base.rows.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  for (const auto& [label, target] : probes) {
    std::vector<char> ok(alive.size(), 0);
    const int threads = resolve_threads(opt.threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= alive.size()) return;
        ok[i] = has_completion(base.at(alive[i]), target, opt.mode);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (ok[i])
        keep.push_back(alive[i]);
      else
        rep.dead_ends.push_back(base.at(alive[i]));
    }
    alive = std::move(keep);
    rep.survivors.push_back({label, alive.size()});
  }
  std::sort(rep.dead_ends.begin(), rep.dead_ends.end());
}

} // namespace detail

// Completions of config on the radius-r ball around center that have no
// completion on the larger probe balls.
inline DeadEndReport dead_end_report(const Configuration& config, const FaceCoord& center, int r,
                                     std::vector<int> probes, const SearchOptions& opt = {}) {
  std::sort(probes.begin(), probes.end());
  if (probes.empty() || probes.front() <= r) throw Error("probe radius must exceed r");
  std::vector<std::pair<int, std::vector<FaceCoord>>> targets;
  for (int p : probes) targets.push_back({p, ball(center, p)});
  DeadEndReport rep{center, r, 0, {}, {}};
  detail::dead_end_scan(rep, config, ball(center, r), targets, opt);
  return rep;
}

// Same on the configuration's own window, probing `rings` successive growths.
// Survivor labels count rings; radius is 0.
inline DeadEndReport dead_end_report(const Configuration& config, int rings, const SearchOptions& opt = {}) {
  if (rings < 1) throw Error("need at least one probe ring");
  std::vector<std::pair<int, std::vector<FaceCoord>>> targets;
  auto w = config.window();
  for (int k = 1; k <= rings; ++k) targets.push_back({k, w = grown(w)});
  DeadEndReport rep{config.window().empty() ? FaceCoord{} : config.window().front(), 0, 0, {}, {}};
  detail::dead_end_scan(rep, config, config.window(), targets, opt);
  return rep;
}

} // namespace ringlab
