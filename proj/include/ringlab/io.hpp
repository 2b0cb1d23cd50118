#pragma once

// Text formats, JSON reports and SVG rendering.
//
//   ringlab-config v1            ringlab-dist v1
//   # comment                    vertex <x> <y> <A0|A1|A2|_>
//   face <x> <y> <U|D> <0|1|2|_>
//
// `_` keeps a face (vertex) in the window without a mark (axis).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/catalog.hpp"
#include "ringlab/configuration.hpp"
#include "ringlab/distributions.hpp"
#include "ringlab/engine.hpp"
#include "ringlab/labeling.hpp"
#include "ringlab/rings.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
public:
  ParseError(int line, const std::string& what) : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

namespace detail {

// Splits into whitespace-separated tokens; returns false for blank and comment lines.
inline bool tokens(const std::string& line, std::vector<std::string>& out) {
  out.clear();
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (out.empty() && t[0] == '#') return false;
    out.push_back(t);
  }
  return !out.empty();
}

inline int to_int(const std::string& s, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return v;
}

inline void expect_header(std::istream& in, const std::string& header, int& line) {
  std::string text;
  std::vector<std::string> t;
  while (std::getline(in, text)) {
    ++line;
    if (!tokens(text, t)) continue;
    if (t.size() == 2 && t[0] + " " + t[1] == header) return;
    throw ParseError(line, "expected header '" + header + "'");
  }
  throw ParseError(line, "missing header '" + header + "'");
}

} // namespace detail

inline Configuration parse_configuration(std::istream& in) {
  int line = 0;
  detail::expect_header(in, "ringlab-config v1", line);
  std::vector<FaceCoord> window;
  std::map<FaceCoord, Label> marks;
  std::set<FaceCoord> seen;
  std::string text;
  std::vector<std::string> t;
  while (std::getline(in, text)) {
    ++line;
    if (!detail::tokens(text, t)) continue;
    if (t[0] != "face" || t.size() != 5) throw ParseError(line, "expected 'face <x> <y> <U|D> <label>'");
    const int x = detail::to_int(t[1], line), y = detail::to_int(t[2], line);
    if (t[3] != "U" && t[3] != "D") throw ParseError(line, "orientation must be U or D");
    const FaceCoord f{x, y, t[3] == "U" ? Orient::Up : Orient::Down};
    if (!seen.insert(f).second) throw ParseError(line, "duplicate face");
    window.push_back(f);
    if (t[4] == "_") continue;
    if (t[4] != "0" && t[4] != "1" && t[4] != "2") throw ParseError(line, "label must be 0, 1, 2 or _");
    marks[f] = Label(t[4][0] - '0');
  }
  Configuration c(window);
  for (const auto& [f, l] : marks) c.set(f, l);
  return c;
}

inline Configuration parse_configuration(const std::string& text) {
  std::istringstream is(text);
  return parse_configuration(is);
}

inline Configuration read_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_configuration(in);
}

inline std::string serialize(const Configuration& c) {
  std::ostringstream os;
  os << "ringlab-config v1\n";
  for (const auto& f : c.window()) {
    os << "face " << f.x << ' ' << f.y << ' ' << (f.orient == Orient::Up ? 'U' : 'D') << ' ';
    if (auto m = c.mark(f)) os << m->value();
    else os << '_';
    os << '\n';
  }
  return os.str();
}

inline const char* axis_name(Axis a) {
  static const char* names[] = {"A0", "A1", "A2"};
  return names[index(a)];
}

inline Distribution parse_distribution(std::istream& in) {
  int line = 0;
  detail::expect_header(in, "ringlab-dist v1", line);
  std::vector<VertexCoord> window;
  std::map<VertexCoord, Axis> axes;
  std::set<VertexCoord> seen;
  std::string text;
  std::vector<std::string> t;
  while (std::getline(in, text)) {
    ++line;
    if (!detail::tokens(text, t)) continue;
    if (t[0] != "vertex" || t.size() != 4) throw ParseError(line, "expected 'vertex <x> <y> <A0|A1|A2|_>'");
    const VertexCoord v{detail::to_int(t[1], line), detail::to_int(t[2], line)};
    if (!seen.insert(v).second) throw ParseError(line, "duplicate vertex");
    window.push_back(v);
    if (t[3] == "_") continue;
    if (t[3] != "A0" && t[3] != "A1" && t[3] != "A2") throw ParseError(line, "axis must be A0, A1, A2 or _");
    axes[v] = axis_from_index(t[3][1] - '0');
  }
  Distribution d(window);
  for (const auto& [v, a] : axes) d.set(v, a);
  return d;
}

inline Distribution parse_distribution(const std::string& text) {
  std::istringstream is(text);
  return parse_distribution(is);
}

inline Distribution read_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_distribution(in);
}

inline std::string serialize(const Distribution& d) {
  std::ostringstream os;
  os << "ringlab-dist v1\n";
  for (auto v : d.window()) {
    os << "vertex " << v.x << ' ' << v.y << ' ';
    if (auto a = d.axis(v)) os << axis_name(*a);
    else os << '_';
    os << '\n';
  }
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

// --- JSON ---------------------------------------------------------------

inline Json to_json(const FaceCoord& f) { return Json::array({f.x, f.y, f.orient == Orient::Up ? "U" : "D"}); }
inline Json to_json(VertexCoord v) { return Json::array({v.x, v.y}); }

inline std::string rank_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline Json rings_report() {
  Json out;
  out["rings"] = Json::array();
  for (const auto& r : ring_table()) {
    Json faces = Json::array(), edges = Json::array();
    for (auto l : r.faces) faces.push_back(l.value());
    for (auto l : r.edges) edges.push_back(l.value());
    out["rings"].push_back({{"s", r.s.value()}, {"index", r.index}, {"faces", faces}, {"edges", edges}});
  }
  out["domains"] = Json::array();
  for (const auto& [d, embs] : enumerate_root_embeddings()) {
    const RootRecord rec = root_rank(d);
    Json e = Json::array(), f = Json::array();
    for (auto l : d.edges) e.push_back(l.value());
    for (auto l : d.faces) f.push_back(l.value());
    out["domains"].push_back({{"edges", e}, {"faces", f}, {"multiplicity", rec.multiplicity}, {"rank", rank_string(rec.rank)}});
  }
  return out;
}

inline Json rank_axes_json(const Distribution& d) {
  Json out = Json::array();
  for (const auto& [v, a] : d.axes()) out.push_back({v.x, v.y, axis_name(a)});
  return out;
}

inline Json verdict_report(const Configuration& c, const Verdict& v) {
  Json out;
  out["status"] = to_string(v.status);
  out["witnesses"] = Json::array();
  for (const auto& w : v.witnesses) {
    Json j{{"vertex", to_json(w.vertex)}, {"reason", w.reason}};
    if (w.face) j["face"] = to_json(*w.face);
    out["witnesses"].push_back(j);
  }
  out["unmarked"] = v.unmarked.size();
  out["rank_axes"] = v.status == Status::Contradiction ? Json::array() : rank_axes_json(induced_distribution(c));
  return out;
}

inline Json completions_report(const CompletionSet& set, bool with_rows) {
  Json out;
  out["completions"] = set.count;
  if (with_rows) {
    out["faces"] = Json::array();
    for (const auto& f : set.faces) out["faces"].push_back(to_json(f));
    out["rows"] = Json::array();
    for (const auto& r : set.rows) {
      std::string s;
      for (auto l : r) s.push_back(static_cast<char>('0' + l));
      out["rows"].push_back(s);
    }
  }
  return out;
}

inline Json dead_end_json(const DeadEndReport& r) {
  Json out;
  out["center"] = to_json(r.center);
  out["radius"] = r.radius;
  out["completions"] = r.completions;
  out["survivors"] = Json::array();
  for (auto [probe, n] : r.survivors) out["survivors"].push_back({{"probe", probe}, {"count", n}});
  out["dead_ends"] = r.dead_ends.size();
  return out;
}

inline Json classification_report(const Distribution& d, const Classification& c) {
  Json out;
  out["family"] = to_string(c.family);
  out["matches"] = {{"Family1Periodic", c.family1}, {"Family2Periodic", c.family2}, {"SpecialD0", c.special}};
  if (c.direction) out["direction"] = *c.direction;
  out["rank_axes"] = rank_axes_json(d);
  return out;
}

// --- SVG ----------------------------------------------------------------

struct RenderSpec {
  bool face_labels = true;
  bool edge_labels = false;
  bool axes = false;        // ticks of the distribution
  bool annotate_d0 = false; // dashed maximal rank-3/2 half-geodesics
};

namespace detail {

inline constexpr double kUnit = 40.0;
inline constexpr double kRowHeight = 0.8660254037844386;

struct Point {
  double x, y;
};

inline Point place(VertexCoord v) { return {kUnit * (v.x + 0.5 * v.y), -kUnit * kRowHeight * v.y}; }

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

inline const char* fill(int label) {
  static const char* palette[] = {"#f2d49b", "#a9cce3", "#d7bde2"};
  return label >= 0 ? palette[label] : "#ffffff";
}

class Canvas {
public:
  void extend(Point p) {
    lo_.x = std::min(lo_.x, p.x);
    lo_.y = std::min(lo_.y, p.y);
    hi_.x = std::max(hi_.x, p.x);
    hi_.y = std::max(hi_.y, p.y);
  }
  std::ostringstream body;

  std::string finish() const {
    const double pad = kUnit * 0.5;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lo_.x - pad) << ' ' << num(lo_.y - pad) << ' '
       << num(hi_.x - lo_.x + 2 * pad) << ' ' << num(hi_.y - lo_.y + 2 * pad) << "\" font-family=\"sans-serif\">\n"
       << body.str() << "</svg>\n";
    return os.str();
  }

private:
  Point lo_{1e18, 1e18}, hi_{-1e18, -1e18};
};

inline void draw_ticks(Canvas& cv, const Distribution& d) {
  for (const auto& [v, a] : d.axes()) {
    const Point p = place(v);
    const Point q = place(v + kSteps[index(a)]);
    const double dx = (q.x - p.x) * 0.22, dy = (q.y - p.y) * 0.22;
    cv.body << "<line x1=\"" << num(p.x - dx) << "\" y1=\"" << num(p.y - dy) << "\" x2=\"" << num(p.x + dx)
            << "\" y2=\"" << num(p.y + dy) << "\" stroke=\"#000\" stroke-width=\"3\"/>\n";
    cv.extend(p);
  }
}

inline void draw_half_geodesics(Canvas& cv, const Distribution& d) {
  for (int k = 0; k < 3; ++k)
    for (const auto& line : lines(d, k)) {
      const int n = static_cast<int>(line.size());
      std::vector<bool> par;
      for (auto v : line) par.push_back(d.axis(v) == axis_from_index(k));
      if (std::all_of(par.begin(), par.end(), [](bool b) { return b; })) continue;
      int lead = 0, trail = 0;
      while (lead < n && par[lead]) ++lead;
      while (trail < n && par[n - 1 - trail]) ++trail;
      auto dash = [&](VertexCoord a, VertexCoord b) {
        const Point p = place(a), q = place(b);
        cv.body << "<line x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(q.y)
                << "\" stroke=\"#c0392b\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
      };
      if (lead >= 4) dash(line.front(), line[lead - 1]);
      if (trail >= 4) dash(line[n - trail], line.back());
    }
}

} // namespace detail

inline std::string render_svg(const Configuration& c, const RenderSpec& spec = {},
                              const std::optional<Distribution>& dist = std::nullopt) {
  detail::Canvas cv;
  for (const auto& f : c.window()) {
    const auto vs = vertices(f);
    const auto m = c.mark(f);
    detail::Point ps[3];
    for (int i = 0; i < 3; ++i) {
      ps[i] = detail::place(vs[i]);
      cv.extend(ps[i]);
    }
    cv.body << "<path d=\"M" << detail::num(ps[0].x) << ' ' << detail::num(ps[0].y) << " L" << detail::num(ps[1].x) << ' '
            << detail::num(ps[1].y) << " L" << detail::num(ps[2].x) << ' ' << detail::num(ps[2].y)
            << " Z\" fill=\"" << detail::fill(m ? m->value() : -1) << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    if (spec.face_labels && m) {
      const double cx = (ps[0].x + ps[1].x + ps[2].x) / 3, cy = (ps[0].y + ps[1].y + ps[2].y) / 3;
      cv.body << "<text x=\"" << detail::num(cx) << "\" y=\"" << detail::num(cy + 5)
              << "\" font-size=\"14\" text-anchor=\"middle\">" << m->value() << "</text>\n";
    }
  }
  if (spec.edge_labels) {
    std::set<EdgeCoord> edges;
    for (const auto& f : c.window()) {
      const auto vs = vertices(f);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) edges.insert(edge_from_vertices(vs[i], vs[j]));
    }
    for (const auto& e : edges) {
      const auto ps = endpoints(e);
      const auto p = detail::place(ps[0]), q = detail::place(ps[1]);
      cv.body << "<text x=\"" << detail::num((p.x + q.x) / 2) << "\" y=\"" << detail::num((p.y + q.y) / 2 + 3)
              << "\" font-size=\"9\" fill=\"#7b241c\" text-anchor=\"middle\">" << edge_label(e).value() << "</text>\n";
    }
  }
  if (dist && spec.axes) detail::draw_ticks(cv, *dist);
  if (dist && spec.annotate_d0) detail::draw_half_geodesics(cv, *dist);
  return cv.finish();
}

// A distribution on its own: vertices as dots with their ticks.
inline std::string render_svg(const Distribution& d, const RenderSpec& spec = {}) {
  detail::Canvas cv;
  for (auto v : d.window()) {
    const auto p = detail::place(v);
    cv.extend(p);
    cv.body << "<circle cx=\"" << detail::num(p.x) << "\" cy=\"" << detail::num(p.y) << "\" r=\"2\" fill=\"#999\"/>\n";
  }
  detail::draw_ticks(cv, d);
  if (spec.annotate_d0) detail::draw_half_geodesics(cv, d);
  return cv.finish();
}

} // namespace ringlab
