#include "bergman/domain_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace bergman {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorKind::input, "geometry", message);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<double> numbers(const std::string& text, const std::string& what) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) fail(what + ": '" + token + "' is not a number");
    out.push_back(v);
  }
  return out;
}

double scalar(const std::string& text, const std::string& what) {
  const auto v = numbers(text, what);
  if (v.size() != 1) fail(what + " expects one number");
  return v[0];
}

Complex point(const std::string& text, const std::string& what) {
  const auto v = numbers(text, what);
  if (v.size() != 2) fail(what + " expects two numbers");
  return {v[0], v[1]};
}

// "x y; x y; ..."
std::vector<Complex> points(const std::string& text, const std::string& what) {
  std::vector<Complex> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (!trim(item).empty()) out.push_back(point(item, what));
  }
  return out;
}

struct Block {
  std::string name;
  int line = 0;
  std::multimap<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  std::string get(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) {
      fail("[" + name + "] block at line " + std::to_string(line) +
           " is missing '" + key + "'");
    }
    return it->second;
  }
  std::string get(const std::string& key, const std::string& fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }
  void allow(std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : values) {
      if (std::none_of(keys.begin(), keys.end(),
                       [&](const char* a) { return k == a; })) {
        fail("unknown key '" + k + "' in [" + name + "] block");
      }
    }
  }
};

struct Hole {
  BoundaryComponent loop;
  Complex marker;
};

Hole parse_hole(const Block& b) {
  b.allow({"vertices", "center", "radius", "interior_point"});
  if (b.has("vertices")) {
    const auto v = points(b.get("vertices"), "hole vertices");
    return {polygon_loop(v), point(b.get("interior_point"), "interior_point")};
  }
  const Complex c = point(b.get("center"), "hole center");
  const Complex marker =
      point(b.get("interior_point", std::to_string(c.real()) + " " +
                                        std::to_string(c.imag())),
            "interior_point");
  return {circle_loop(c, scalar(b.get("radius"), "hole radius")), marker};
}

Domain with_holes(const Domain& base, const std::vector<Hole>& holes) {
  if (holes.empty()) return base;
  std::vector<BoundaryComponent> loops;
  std::vector<Complex> markers;
  for (const auto& h : holes) {
    loops.push_back(h.loop);
    markers.push_back(h.marker);
  }
  return Domain(base.components()[0], loops, markers);
}

LevelSetFamily parse_family(const Block& b) {
  LevelSetFamily family;
  if (b.has("family")) {
    family = named_family(trim(b.get("family")));
  } else {
    family.name = "custom";
  }
  const auto range = b.values.equal_range("term");
  if (range.first != range.second) family.F.terms.clear();
  for (auto it = range.first; it != range.second; ++it) {
    family.F.terms.push_back(parse_term(it->second));
  }
  if (b.has("c0")) family.c0 = scalar(b.get("c0"), "c0");
  if (b.has("window")) {
    const auto w = numbers(b.get("window"), "window");
    if (w.size() != 4 || !(w[0] < w[1]) || !(w[2] < w[3])) {
      fail("window expects xmin xmax ymin ymax");
    }
    family.window = {w[0], w[1], w[2], w[3]};
  }
  if (b.has("resolution")) {
    const double r = scalar(b.get("resolution"), "resolution");
    if (r < 8 || r > 8192 || r != std::floor(r)) {
      fail("resolution must be an integer in [8, 8192]");
    }
    family.resolution = int(r);
  }
  return family;
}

}  // namespace

bool builtin_domain(const std::string& name, Domain& out) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? std::string() : name.substr(colon + 1);
  auto params = [&](std::size_t count) {
    const auto v = numbers(args, name);
    if (v.size() != count) {
      fail("built-in '" + head + "' expects " + std::to_string(count) +
           " parameters");
    }
    return v;
  };
  if (head == "disk") {
    out = args.empty() ? make_disk() : make_disk(0.0, params(1)[0]);
  } else if (head == "square") {
    out = make_rectangle(0.0, 1.0, 1.0);
  } else if (head == "annulus") {
    const auto v = params(2);
    out = make_annulus(0.0, v[0], v[1]);
  } else if (head == "ellipse") {
    const auto v = params(2);
    out = make_ellipse(0.0, v[0], v[1]);
  } else if (head == "rect") {
    const auto v = params(2);
    out = make_rectangle(0.0, v[0], v[1]);
  } else {
    return false;
  }
  return true;
}

std::vector<std::string> builtin_domain_names() {
  return {"disk", "annulus:0.5,1", "ellipse:2,1", "square", "rect:2,1"};
}

ExpansionTerm parse_term(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  std::string rest;
  std::getline(in, rest);
  const auto v = numbers(rest, "term '" + text + "'");
  ExpansionTerm t;
  if (kind == "power" && v.size() == 3 && v[0] >= 0 && v[0] == std::floor(v[0])) {
    t.kind = TermKind::power;
    t.exponent = int(v[0]);
    t.coefficient = {v[1], v[2]};
  } else if (kind == "inverse" && v.size() == 5 && v[0] >= 1 &&
             v[0] == std::floor(v[0])) {
    t.kind = TermKind::inverse_power;
    t.exponent = int(v[0]);
    t.center = {v[1], v[2]};
    t.coefficient = {v[3], v[4]};
  } else if (kind == "log" && v.size() == 4) {
    t.kind = TermKind::log;
    t.center = {v[0], v[1]};
    t.coefficient = {v[2], v[3]};
    t.cut_direction = 1;
  } else {
    fail("bad term '" + text +
         "' (power k re im | inverse k a_re a_im re im | log a_re a_im re im)");
  }
  return t;
}

Domain parse_domain_spec(std::istream& in, const std::string& source) {
  std::vector<Block> blocks(1);
  blocks[0].name = "domain";
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line != "[hole]") {
        fail(source + ":" + std::to_string(line_no) + ": unknown block " + line);
      }
      blocks.push_back({"hole", line_no, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(source + ":" + std::to_string(line_no) + ": expected key = value");
    }
    blocks.back().values.emplace(trim(line.substr(0, eq)),
                                 trim(line.substr(eq + 1)));
  }

  const Block& d = blocks[0];
  const std::string kind = d.get("kind");
  std::vector<Hole> holes;
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    if (kind == "annulus" || kind == "level_set") {
      fail(source + ": [hole] blocks are not allowed for kind " + kind);
    }
    holes.push_back(parse_hole(blocks[k]));
  }
  const Complex center = point(d.get("center", "0 0"), "center");

  if (kind == "disk") {
    d.allow({"kind", "center", "radius"});
    return with_holes(make_disk(center, scalar(d.get("radius", "1"), "radius")),
                      holes);
  }
  if (kind == "annulus") {
    d.allow({"kind", "center", "inner_radius", "outer_radius"});
    return make_annulus(center, scalar(d.get("inner_radius"), "inner_radius"),
                        scalar(d.get("outer_radius"), "outer_radius"));
  }
  if (kind == "ellipse") {
    d.allow({"kind", "center", "semi_axes", "angle"});
    const Complex ab = point(d.get("semi_axes"), "semi_axes");
    return with_holes(make_ellipse(center, ab.real(), ab.imag(),
                                   scalar(d.get("angle", "0"), "angle")),
                      holes);
  }
  if (kind == "polygon") {
    d.allow({"kind", "vertices"});
    const auto v = points(d.get("vertices"), "vertices");
    return with_holes(make_polygon(v), holes);
  }
  if (kind == "parametric") {
    d.allow({"kind", "center", "frequencies", "coefficients"});
    std::vector<int> freq;
    for (double f : numbers(d.get("frequencies"), "frequencies")) {
      if (f != std::floor(f)) fail("frequencies must be integers");
      freq.push_back(int(f));
    }
    return with_holes(make_trigonometric(center, freq,
                                         points(d.get("coefficients"),
                                                "coefficients")),
                      holes);
  }
  if (kind == "level_set") {
    d.allow({"kind", "family", "term", "c0", "window", "resolution"});
    return to_domain_outer_with_holes(trace(parse_family(d)));
  }
  fail(source + ": unknown kind '" + kind + "'");
}

Domain load_domain_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open domain spec '" + path + "'");
  return parse_domain_spec(in, path);
}

Domain resolve_domain(const std::string& name_or_path) {
  Domain d = make_disk();
  if (builtin_domain(name_or_path, d)) return d;
  return load_domain_spec(name_or_path);
}

}  // namespace bergman
