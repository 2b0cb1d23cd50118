#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "ringlab/label.hpp"
#include "ringlab/lattice.hpp"

namespace ringlab {

// A finite window of faces with a partial face marking. Edge labels are never
// stored; they are always the canonical ones.
//
// With a period p, face (x, y) is identified with (x + p, y): the window is a
// cylinder of circumference p and must contain exactly one representative of
// each face it covers. p must be a multiple of 3 so that the edge marking is
// periodic too.
class Configuration {
public:
  Configuration() = default;
  explicit Configuration(std::vector<FaceCoord> window, std::optional<int> period = std::nullopt)
      : window_(std::move(window)), period_(period) {
    normalize_window();
  }

  static Configuration from_marks(const std::map<FaceCoord, Label>& marks) {
    Configuration c;
    for (const auto& [f, l] : marks) c.window_.push_back(f);
    c.normalize_window();
    c.marks_ = marks;
    return c;
  }

  const std::vector<FaceCoord>& window() const { return window_; }
  const std::map<FaceCoord, Label>& marks() const { return marks_; }
  std::optional<int> period() const { return period_; }

  bool contains(const FaceCoord& f) const { return std::binary_search(window_.begin(), window_.end(), f); }

  std::optional<Label> mark(const FaceCoord& f) const {
    auto it = marks_.find(f);
    if (it == marks_.end()) return std::nullopt;
    return it->second;
  }

  void set(const FaceCoord& f, Label l) {
    if (!contains(f)) {
      window_.insert(std::upper_bound(window_.begin(), window_.end(), f), f);
    }
    marks_[f] = l;
  }

  void erase_mark(const FaceCoord& f) { marks_.erase(f); }

  bool total() const { return marks_.size() == window_.size(); }

  // Same marks on the faces of `sub` (which must be covered).
  Configuration restricted(const std::vector<FaceCoord>& sub) const {
    Configuration c(sub);
    for (const auto& f : c.window_)
      if (auto m = mark(f)) c.marks_[f] = *m;
    return c;
  }

  // Union of windows; marks of `other` must agree where both are marked.
  Configuration extended(const std::vector<FaceCoord>& more) const {
    Configuration c = *this;
    c.window_.insert(c.window_.end(), more.begin(), more.end());
    c.normalize_window();
    return c;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) {
    if (auto c = a.window_ <=> b.window_; c != 0) return c;
    return a.marks_ <=> b.marks_;
  }

private:
  void normalize_window() {
    std::sort(window_.begin(), window_.end());
    window_.erase(std::unique(window_.begin(), window_.end()), window_.end());
    if (period_ && (*period_ <= 0 || *period_ % 3 != 0)) throw Error("period must be a positive multiple of 3");
  }

  std::vector<FaceCoord> window_;
  std::map<FaceCoord, Label> marks_;
  std::optional<int> period_;
};

} // namespace ringlab
