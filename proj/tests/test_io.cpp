#include <gtest/gtest.h>

#include <fstream>
#include <regex>

#include "ringlab/io.hpp"
#include "ringlab/local.hpp"

using namespace ringlab;

namespace {

Json load_schema(const std::string& name) {
  std::ifstream in(std::string(RINGLAB_SOURCE_DIR) + "/schema/" + name);
  return Json::parse(in);
}

// Enough of JSON Schema for the shipped schemas: type, enum, required,
// properties and items. Returns the first violation or "".
std::string violation(const Json& schema, const Json& v, const std::string& at = "$") {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    const bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) || (t == "string" && v.is_string()) ||
                    (t == "integer" && v.is_number_integer()) || (t == "boolean" && v.is_boolean()) ||
                    (t == "number" && v.is_number());
    if (!ok) return at + ": expected " + t;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) return at + ": not in enum";
  }
  if (schema.contains("required"))
    for (const auto& k : schema["required"])
      if (!v.contains(k.get<std::string>())) return at + ": missing " + k.get<std::string>();
  if (schema.contains("properties") && v.is_object())
    for (const auto& [k, sub] : schema["properties"].items())
      if (v.contains(k))
        if (auto e = violation(sub, v[k], at + "." + k); !e.empty()) return e;
  if (schema.contains("items") && v.is_array())
    for (std::size_t i = 0; i < v.size(); ++i)
      if (auto e = violation(schema["items"], v[i], at + "[" + std::to_string(i) + "]"); !e.empty()) return e;
  return "";
}

int count(const std::string& text, const std::string& what) {
  int n = 0;
  for (std::size_t p = text.find(what); p != std::string::npos; p = text.find(what, p + 1)) ++n;
  return n;
}

} // namespace

TEST(ConfigFormat, SingleFace) {
  const auto c = parse_configuration("ringlab-config v1\nface 0 0 U 0\n");
  EXPECT_EQ(c.window(), std::vector<FaceCoord>{up(0, 0)});
  EXPECT_EQ(c.mark(up(0, 0)), Label(0));
}

TEST(ConfigFormat, RoundTrip) {
  const std::string text = "ringlab-config v1\n# a comment\nface 2 1 D 1\n\nface 0 0 U 0\nface -1 3 U _\n";
  const auto c = parse_configuration(text);
  const std::string canonical = serialize(c);
  EXPECT_EQ(canonical, "ringlab-config v1\nface -1 3 U _\nface 0 0 U 0\nface 2 1 D 1\n");
  EXPECT_EQ(serialize(parse_configuration(canonical)), canonical);
  EXPECT_EQ(parse_configuration(canonical), c);
}

TEST(ConfigFormat, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_configuration(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("ringlab-config v1\nface 0 0 U 0\nface 0 0 U 1\n"), 3);
  EXPECT_EQ(line_of("ringlab-config v1\n# x\nface 0 0 X 0\n"), 3);
  EXPECT_EQ(line_of("ringlab-config v1\nface 0 0 U 3\n"), 2);
  EXPECT_EQ(line_of("ringlab-config v1\nface 0 0 U\n"), 2);
  EXPECT_EQ(line_of("ringlab-config v1\nface a 0 U 1\n"), 2);
  EXPECT_EQ(line_of("face 0 0 U 0\n"), 1);
  EXPECT_EQ(line_of(""), 0);
}

TEST(DistFormat, RoundTrip) {
  const auto d = build_D0(hex_window({0, 0}, 2));
  const auto text = serialize(d);
  EXPECT_EQ(text.rfind("ringlab-dist v1\n", 0), 0u);
  EXPECT_EQ(parse_distribution(text), d);
  EXPECT_THROW(parse_distribution("ringlab-dist v1\nvertex 0 0 A3\n"), ParseError);
  EXPECT_THROW(parse_distribution("ringlab-dist v1\nvertex 0 0 A0\nvertex 0 0 A1\n"), ParseError);
}

TEST(Svg, OneFace) {
  const auto svg = render_svg(parse_configuration("ringlab-config v1\nface 0 0 U 0\n"));
  EXPECT_EQ(count(svg, "<path"), 1);
  EXPECT_EQ(count(svg, "<text"), 1);
  EXPECT_NE(svg.find(">0</text>"), std::string::npos);
}

TEST(Svg, Deterministic) {
  const auto c = special_puzzle(4, 2);
  RenderSpec spec;
  spec.edge_labels = spec.axes = true;
  const auto d = induced_distribution(c);
  EXPECT_EQ(render_svg(c, spec, d), render_svg(c, spec, d));
}

TEST(Svg, HeightTwoStripTicks) {
  const auto c = assemble({2, {{1, false, 0}}}, 1);
  RenderSpec spec;
  spec.axes = true;
  const auto d = induced_distribution(c);
  const auto svg = render_svg(c, spec, d);
  EXPECT_EQ(count(svg, "<path"), 24);
  // Ticks are drawn as lines; the centre-line ones are flat.
  const std::regex line(R"re(<line x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)")re");
  int ticks = 0, flat = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line); it != std::sregex_iterator(); ++it) {
    ++ticks;
    flat += (*it)[2] == (*it)[4];
  }
  EXPECT_EQ(ticks, static_cast<int>(d.axes().size()));
  EXPECT_GT(ticks, 0);
  EXPECT_EQ(flat, ticks);
}

TEST(Svg, D0Annotation) {
  RenderSpec spec;
  spec.annotate_d0 = true;
  const auto d = build_D0(hex_window({0, 0}, 6));
  const auto svg = render_svg(d, spec);
  EXPECT_GE(count(svg, "stroke-dasharray"), rank32_geodesics(d, 4).half);
  spec.annotate_d0 = false;
  EXPECT_EQ(count(render_svg(d, spec), "stroke-dasharray"), 0);
}

TEST(Json, RingsSchema) {
  const auto j = rings_report();
  EXPECT_EQ(violation(load_schema("rings.schema.json"), j), "");
  EXPECT_EQ(j["rings"].size(), 9u);
  int total = 0;
  for (const auto& d : j["domains"]) total += d["multiplicity"].get<int>();
  EXPECT_EQ(total, 108);
}

TEST(Json, ReportsValidate) {
  SearchOptions o;
  o.threads = 1;
  const auto set = enumerate_completions(initial_triangle(), initial_window(), o);
  EXPECT_EQ(violation(load_schema("completions.schema.json"), completions_report(set, true)), "");
  const auto rep = dead_end_report(initial_triangle(), up(0, 0), 1, {2}, o);
  EXPECT_EQ(violation(load_schema("dead_ends.schema.json"), dead_end_json(rep)), "");
  const auto d = build_D0(hex_window({0, 0}, 4));
  EXPECT_EQ(violation(load_schema("classification.schema.json"), classification_report(d, classify_distribution(d))), "");
  const auto c = special_puzzle(2, 2);
  EXPECT_EQ(violation(load_schema("verdict.schema.json"), verdict_report(c, check(c))), "");
  // The validator does reject things.
  EXPECT_NE(violation(load_schema("verdict.schema.json"), Json{{"status", "Maybe"}}), "");
}
