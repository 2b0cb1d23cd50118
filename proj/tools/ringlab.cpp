// ringlab: command-line front end.
//
// Exit codes: 0 success / Valid, 1 Contradiction / negative answer, 2 usage
// or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringlab/catalog.hpp"
#include "ringlab/distributions.hpp"
#include "ringlab/engine.hpp"
#include "ringlab/io.hpp"
#include "ringlab/labeling.hpp"
#include "ringlab/rings.hpp"

using namespace ringlab;

namespace {

struct Globals {
  std::string symmetry = "rot+ref";
  int threads = 0;
  bool json = false;

  SearchOptions search() const {
    SearchOptions o;
    o.mode = symmetry == "rot" ? Symmetry::Rotations : Symmetry::RotationsReflections;
    o.threads = threads;
    return o;
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string face_string(const FaceCoord& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

// "[index:]shift[f]" separated by commas, e.g. "0,1:3f,2:0".
StackingWord parse_word(int height, int index, const std::string& text) {
  StackingWord w{height, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    StackRow r{index, false, 0};
    if (!item.empty() && item.back() == 'f') {
      r.flipped = true;
      item.pop_back();
    }
    if (auto colon = item.find(':'); colon != std::string::npos) {
      r.index = std::stoi(item.substr(0, colon));
      item = item.substr(colon + 1);
    }
    std::size_t used = 0;
    r.shift = std::stoi(item, &used);
    if (used != item.size()) throw Error("bad word entry '" + item + "'");
    w.rows.push_back(r);
  }
  return w;
}

std::string word_string(const StackingWord& w) {
  std::string out;
  for (const auto& r : w.rows) {
    if (!out.empty()) out += ',';
    out += std::to_string(r.index) + ":" + std::to_string(r.shift) + (r.flipped ? "f" : "");
  }
  return out;
}

int cmd_rings(const Globals&) {
  emit(rings_report());
  return 0;
}

int cmd_edge_labels(const Globals& g, int n) {
  const auto window = square_window(n);
  const auto derived = derive_edge_labels(window);
  int mismatches = 0;
  Json edges = Json::array();
  for (const auto& [e, l] : derived.labels) {
    if (edge_label(e) != l) ++mismatches;
    static const char* dir[] = {"H", "L", "R"};
    edges.push_back({e.x, e.y, dir[static_cast<int>(e.dir)], l.value()});
  }
  const bool ok = !derived.contradiction && mismatches == 0;
  if (g.json) {
    Json j{{"window", n}, {"edges", edges}, {"mismatches", mismatches}, {"agrees", ok}};
    if (derived.contradiction) j["contradiction"] = *derived.contradiction;
    emit(j);
  } else {
    for (const auto& e : edges) std::cout << e[2].get<std::string>() << ' ' << e[0] << ' ' << e[1] << ' ' << e[3] << '\n';
    if (derived.contradiction) std::cout << "contradiction: " << *derived.contradiction << '\n';
    std::cout << (ok ? "closed form agrees" : "closed form disagrees") << " on " << edges.size() << " edges\n";
  }
  return ok ? 0 : 1;
}

int cmd_check(const Globals& g, const std::string& file) {
  const Configuration c = read_configuration(file);
  const Verdict v = check(c, g.search().mode);
  if (g.json) {
    emit(verdict_report(c, v));
  } else {
    std::cout << to_string(v.status) << '\n';
    for (const auto& w : v.witnesses) {
      std::cout << "  at " << w.vertex;
      if (w.face) std::cout << " face " << *w.face;
      std::cout << ": " << w.reason << '\n';
    }
    if (!v.unmarked.empty()) std::cout << "  " << v.unmarked.size() << " unmarked faces\n";
  }
  return v.status == Status::Contradiction ? 1 : 0;
}

int cmd_enumerate(const Globals& g, const std::string& file, int radius, bool count_only) {
  const Configuration c = read_configuration(file);
  auto target = ball(up(0, 0), radius);
  target = c.extended(target).window();
  SearchOptions o = g.search();
  o.count_only = count_only;
  const auto set = enumerate_completions(c, target, o);
  if (g.json) {
    emit(completions_report(set, !count_only));
  } else if (count_only) {
    std::cout << set.count << '\n';
  } else {
    for (std::size_t i = 0; i < set.rows.size(); ++i) std::cout << "# completion " << i + 1 << '\n' << serialize(set.at(i));
    std::cout << "# " << set.count << " completions\n";
  }
  return set.count > 0 ? 0 : 1;
}

int cmd_deadends(const Globals& g, const std::string& file, int r, std::vector<int> probes, int rings) {
  const Configuration c = read_configuration(file);
  const DeadEndReport rep = rings > 0 ? dead_end_report(c, rings, g.search()) : dead_end_report(c, up(0, 0), r, probes, g.search());
  if (g.json) {
    emit(dead_end_json(rep));
  } else {
    std::cout << "completions " << rep.completions << '\n';
    for (auto [p, n] : rep.survivors) std::cout << (rings > 0 ? "ring " : "probe ") << p << ": " << n << " extend\n";
    std::cout << "dead ends " << rep.dead_ends.size() << '\n';
  }
  return 0;
}

int cmd_strip(const Globals& g, int height, int index, int rows, int width, const std::string& word_text,
              const std::string& out) {
  strip(height, index); // validates height and index
  StackingWord word{height, {}};
  if (!word_text.empty()) {
    word = parse_word(height, index, word_text);
    if (static_cast<int>(word.rows.size()) != rows) throw Error("word length differs from --rows");
  } else {
    for (const auto& w : stacking_words(height, rows, g.search().mode))
      if (w.rows.front().index == index) {
        word = w;
        break;
      }
    if (word.rows.empty()) throw Error("no stacking word starts with this strip");
  }
  const Configuration c = assemble(word, width);
  std::string text = serialize(c);
  text.insert(text.find('\n') + 1, "# word " + word_string(word) + "\n");
  output(text, out);
  if (g.json) emit({{"height", height}, {"rows", rows}, {"width", width}, {"word", word_string(word)}, {"faces", c.window().size()}});
  return 0;
}

int cmd_special(const Globals& g, int index, int radius, const std::string& out) {
  const Configuration c = special_puzzle(index, radius, g.search().mode);
  output(serialize(c), out);
  if (g.json) {
    const auto cls = classify_distribution(induced_distribution(c));
    emit({{"index", index}, {"radius", radius}, {"faces", c.window().size()}, {"family", to_string(cls.family)}});
  }
  return 0;
}

int cmd_iso(const Globals& g, const std::string& a, const std::string& b) {
  const Configuration ca = read_configuration(a), cb = read_configuration(b);
  std::optional<LatticeIsometry> iso;
  try {
    iso = isomorphic(ca, cb);
  } catch (const Error&) {
    iso.reset(); // windows of different shape
  }
  if (g.json) {
    Json j{{"isomorphic", iso.has_value()}};
    if (iso) j["isometry"] = {{"rotation", iso->rotation()}, {"reflect", iso->reflect()}, {"translation", to_json(iso->translation_part())}};
    emit(j);
  } else if (iso) {
    std::cout << "isomorphic: rotation " << iso->rotation() * 60 << (iso->reflect() ? " after reflection" : "") << ", translation "
              << iso->translation_part() << '\n';
  } else {
    std::cout << "not isomorphic\n";
  }
  return iso ? 0 : 1;
}

int cmd_dist_check(const Globals& g, const std::string& file) {
  const Distribution d = read_distribution(file);
  Json even = Json::array();
  int odd = 0, unknown = 0;
  for (const auto& f : d.faces()) {
    const auto vs = vertices(f);
    if (!d.axis(vs[0]) || !d.axis(vs[1]) || !d.axis(vs[2])) {
      ++unknown;
      continue;
    }
    if (face_parity(d, f) == Parity::Odd) ++odd;
    else even.push_back(face_string(f));
  }
  if (g.json) {
    emit({{"odd", odd}, {"even", even}, {"undetermined", unknown}, {"all_odd", even.empty()}});
  } else {
    std::cout << odd << " odd, " << even.size() << " even, " << unknown << " undetermined\n";
    for (const auto& f : even) std::cout << "  even " << f.get<std::string>() << '\n';
  }
  return even.empty() ? 0 : 1;
}

int cmd_dist_propagate(const Globals& g, const std::string& file, const std::string& out) {
  const auto res = dist_propagate(read_distribution(file));
  if (!res) {
    if (g.json) {
      Json j{{"contradiction", true}};
      if (res.contradiction) j["face"] = to_json(*res.contradiction);
      if (res.at) j["vertex"] = to_json(*res.at);
      emit(j);
    } else {
      std::cout << "contradiction";
      if (res.contradiction) std::cout << " at " << *res.contradiction;
      std::cout << '\n';
    }
    return 1;
  }
  output(serialize(*res.dist), out);
  if (g.json) emit({{"contradiction", false}, {"total", res.dist->total()}, {"rank_axes", rank_axes_json(*res.dist)}});
  return 0;
}

int cmd_dist_classify(const Globals& g, const std::string& file) {
  const Distribution d = read_distribution(file);
  const auto c = classify_distribution(d);
  if (g.json) emit(classification_report(d, c));
  else {
    std::cout << to_string(c.family);
    if (c.direction) std::cout << " along A" << *c.direction;
    std::cout << '\n';
  }
  return c.family == Family::Unknown ? 1 : 0;
}

int cmd_dist_induced(const Globals& g, const std::string& file, const std::string& out) {
  const Distribution d = induced_distribution(read_configuration(file));
  output(serialize(d), out);
  if (g.json) emit({{"rank_axes", rank_axes_json(d)}});
  return 0;
}

int cmd_dist_d0(const Globals& g, int radius, const std::string& out) {
  const Distribution d = build_D0(hex_window({0, 0}, radius));
  output(serialize(d), out);
  if (g.json) {
    const auto geo = rank32_geodesics(d, 4);
    emit({{"radius", radius}, {"all_odd", all_odd(d)}, {"full_geodesics", geo.full}, {"half_geodesics", geo.half}});
  }
  return 0;
}

int cmd_render(const Globals& g, const std::string& file, const std::string& out, RenderSpec spec) {
  const std::string text = slurp(file);
  std::istringstream probe(text);
  std::string header;
  while (std::getline(probe, header) && (header.empty() || header[0] == '#')) {
  }
  std::string svg;
  if (header.rfind("ringlab-dist", 0) == 0) {
    svg = render_svg(parse_distribution(text), spec);
  } else {
    const Configuration c = parse_configuration(text);
    std::optional<Distribution> d;
    if (spec.axes || spec.annotate_d0) {
      if (check(c, g.search().mode).status == Status::Contradiction) throw Error("cannot draw axes of an invalid configuration");
      d = induced_distribution(c);
    }
    svg = render_svg(c, spec, d);
  }
  output(svg, out);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: odd ring puzzles on the triangular lattice"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--symmetry", g.symmetry, "link isomorphisms allowed at vertices")
      ->check(CLI::IsMember({"rot", "rot+ref"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", g.json, "machine-readable output");

  std::string file, file2, out;
  int n = 12, radius = 2, r = 2, rings = 0, height = 1, index = 1, rows = 4, width = 2;
  std::vector<int> probes;
  bool count_only = false;
  std::string word;
  RenderSpec spec;

  int code = 0;
  auto* rings_cmd = app.add_subcommand("rings", "ring table and root multiplicities as JSON");
  rings_cmd->callback([&] { code = cmd_rings(g); });

  auto* edge = app.add_subcommand("edge-labels", "derive edge labels on an n x n window and compare");
  edge->add_option("--window", n, "window side")->check(CLI::PositiveNumber);
  edge->callback([&] { code = cmd_edge_labels(g, n); });

  auto* chk = app.add_subcommand("check", "check a configuration");
  chk->add_option("file", file)->required();
  chk->callback([&] { code = cmd_check(g, file); });

  auto* en = app.add_subcommand("enumerate", "complete a configuration on a ball around Up(0,0)");
  en->add_option("file", file)->required();
  en->add_option("--target-radius", radius)->required()->check(CLI::NonNegativeNumber);
  en->add_flag("--count", count_only, "print the count only");
  en->callback([&] { code = cmd_enumerate(g, file, radius, count_only); });

  auto* de = app.add_subcommand("deadends", "completions that do not extend further");
  de->add_option("file", file)->required();
  de->add_option("--r", r, "ball radius of the completions")->check(CLI::NonNegativeNumber);
  de->add_option("--probe", probes, "probe radius (repeatable)");
  de->add_option("--rings", rings, "probe the file's own window grown by 1..K rings instead");
  de->callback([&] {
    if (rings == 0 && probes.empty()) throw CLI::ValidationError("--probe", "give --probe or --rings");
    code = cmd_deadends(g, file, r, probes, rings);
  });

  auto* st = app.add_subcommand("strip", "stack strips into a configuration");
  st->add_option("--height", height)->check(CLI::IsMember({1, 2}));
  st->add_option("--index", index, "strip used when a word entry has no index");
  st->add_option("--rows", rows)->check(CLI::PositiveNumber);
  st->add_option("--width", width, "width in periods of 6")->check(CLI::PositiveNumber);
  st->add_option("--word", word, "comma-separated [index:]shift[f] per row, bottom first");
  st->add_option("-o", out, "output file");
  st->callback([&] { code = cmd_strip(g, height, index, rows, width, word, out); });

  auto* sp = app.add_subcommand("special", "one of the twelve special puzzles on a ball");
  sp->add_option("--index", index)->required()->check(CLI::Range(1, 12));
  sp->add_option("--radius", radius)->check(CLI::PositiveNumber);
  sp->add_option("-o", out, "output file");
  sp->callback([&] { code = cmd_special(g, index, radius, out); });

  auto* iso = app.add_subcommand("iso", "label-preserving isomorphism between two configurations");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();
  iso->callback([&] { code = cmd_iso(g, file, file2); });

  auto* dist = app.add_subcommand("dist", "root distributions");
  dist->require_subcommand(1);
  dist->fallthrough();
  auto* dc = dist->add_subcommand("check", "parity of every face");
  dc->add_option("file", file)->required();
  dc->callback([&] { code = cmd_dist_check(g, file); });
  auto* dp = dist->add_subcommand("propagate", "fill forced axes");
  dp->add_option("file", file)->required();
  dp->add_option("-o", out, "output file");
  dp->callback([&] { code = cmd_dist_propagate(g, file, out); });
  auto* dcl = dist->add_subcommand("classify", "family of an odd distribution");
  dcl->add_option("file", file)->required();
  dcl->callback([&] { code = cmd_dist_classify(g, file); });
  auto* di = dist->add_subcommand("induced", "distribution of a valid configuration");
  di->add_option("file", file)->required();
  di->add_option("-o", out, "output file");
  di->callback([&] { code = cmd_dist_induced(g, file, out); });
  auto* dd = dist->add_subcommand("d0", "the exceptional distribution on a hexagonal window");
  dd->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  dd->add_option("-o", out, "output file");
  dd->callback([&] { code = cmd_dist_d0(g, radius, out); });

  auto* rd = app.add_subcommand("render", "SVG of a configuration or distribution");
  rd->add_option("file", file)->required();
  rd->add_option("-o", out, "output file");
  rd->add_flag("--edge-labels", spec.edge_labels);
  rd->add_flag("--axes", spec.axes, "rank-3/2 axis ticks");
  rd->add_flag("--annotate-d0", spec.annotate_d0, "dashed half-geodesics");
  rd->callback([&] { code = cmd_render(g, file, out, spec); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "ringlab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ringlab: " << e.what() << '\n';
    return 2;
  }
  return code;
}
