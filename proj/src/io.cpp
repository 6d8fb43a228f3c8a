#include "pcell/io.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pcell {

namespace {

using nlohmann::json;

Vec2 to_vec(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != 2)
    throw std::invalid_argument(std::string("geometry: field '") + field +
                                "' must be a [x, y] pair");
  return {j[field][0].get<double>(), j[field][1].get<double>()};
}

Orientation to_orientation(const json& j) {
  const std::string s = j.value("orientation", "ccw");
  if (s == "ccw") return Orientation::CCW;
  if (s == "cw") return Orientation::CW;
  throw std::invalid_argument("geometry: orientation must be 'ccw' or 'cw'");
}

ParametricEdge parse_edge(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  ParametricEdge e = [&] {
    if (kind == "line") return ParametricEdge::line(to_vec(j, "from"), to_vec(j, "to"));
    if (kind == "circular_arc")
      return ParametricEdge::circular_arc(to_vec(j, "center"), j.at("radius").get<double>(),
                                          j.at("angle0").get<double>(),
                                          j.at("angle1").get<double>());
    if (kind == "ellipse_arc") {
      const Vec2 ax = to_vec(j, "semi_axes");
      return ParametricEdge::ellipse_arc(to_vec(j, "center"), ax.x, ax.y,
                                         j.at("angle0").get<double>(),
                                         j.at("angle1").get<double>());
    }
    if (kind == "sine_line")
      return ParametricEdge::sine_line(to_vec(j, "from"), to_vec(j, "to"),
                                       j.at("amplitude").get<double>(),
                                       j.at("frequency").get<double>());
    if (kind == "circle")
      return ParametricEdge::circle(to_vec(j, "center"), j.at("radius").get<double>(),
                                    to_orientation(j));
    if (kind == "ellipse") {
      const Vec2 ax = to_vec(j, "semi_axes");
      return ParametricEdge::ellipse(to_vec(j, "center"), ax.x, ax.y, to_orientation(j));
    }
    throw std::invalid_argument("geometry: unknown edge kind '" + kind + "'");
  }();
  const bool cs = j.value("corner_start", false);
  const bool ce = j.value("corner_end", false);
  if (cs || ce) e = e.with_corners(cs, ce);
  return e;
}

BivariatePolynomial parse_poly(const json& j) {
  std::vector<std::tuple<int, int, double>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("polynomial term must be [alpha1, alpha2, coefficient]");
    terms.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<double>());
  }
  return BivariatePolynomial(terms);
}

AnalyticTerm parse_term(const json& j) {
  using Type = AnalyticTerm::Type;
  AnalyticTerm t;
  const std::string type = j.at("type").get<std::string>();
  t.coef = j.value("coef", 1.0);
  if (type == "poly") {
    t.type = Type::Poly;
    t.poly = parse_poly(j.at("monomials"));
  } else if (type == "log") {
    t.type = Type::Log;
    t.point = to_vec(j, "point");
  } else if (type == "rational_re") {
    t.type = Type::RationalRe;
    t.point = to_vec(j, "point");
  } else if (type == "rational_im") {
    t.type = Type::RationalIm;
    t.point = to_vec(j, "point");
  } else if (type == "exp_re") {
    t.type = Type::ExpRe;
  } else if (type == "exp_im") {
    t.type = Type::ExpIm;
  } else if (type == "corner_pow") {
    t.type = Type::CornerPow;
    t.point = to_vec(j, "point");
    t.alpha = j.at("alpha").get<double>();
    t.branch_rotation = j.value("branch_rotation", 0.0);
  } else {
    throw std::invalid_argument("functions: unknown term type '" + type + "'");
  }
  return t;
}

AnalyticFunction parse_function(const json& j) {
  AnalyticFunction f;
  for (const auto& t : j.at("terms")) f.terms.push_back(parse_term(t));
  if (j.contains("laplacian")) {
    // explicit override of the polynomial Laplacian
    const BivariatePolynomial lap = parse_poly(j["laplacian"]);
    if (lap.max_coefficient_difference(f.laplacian()) > 1e-12)
      throw std::invalid_argument(
          "functions: declared Laplacian disagrees with the polynomial terms");
  }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

PuncturedCell parse_geometry(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("geometry parse error: ") + e.what());
  }
  if (doc.value("format", "") != "pcell-geometry/1")
    throw std::invalid_argument("geometry: expected format 'pcell-geometry/1'");
  const std::string name = doc.value("name", "custom");

  std::optional<BoundaryComponent> outer;
  std::vector<BoundaryComponent> holes;
  std::vector<std::optional<Vec2>> anchors;
  for (const auto& comp : doc.at("components")) {
    std::vector<ParametricEdge> edges;
    for (const auto& e : comp.at("edges")) edges.push_back(parse_edge(e));
    const std::string role = comp.value("role", "outer");
    if (role == "outer") {
      if (outer) throw std::invalid_argument("geometry: multiple outer components");
      outer.emplace(std::move(edges));
    } else if (role == "hole") {
      holes.emplace_back(std::move(edges));
      if (comp.contains("anchor"))
        anchors.emplace_back(to_vec(comp, "anchor"));
      else
        anchors.emplace_back(std::nullopt);
    } else {
      throw std::invalid_argument("geometry: component role must be 'outer' or 'hole'");
    }
  }
  if (!outer) throw std::invalid_argument("geometry: an outer component is required");
  return PuncturedCell(name, std::move(*outer), std::move(holes), std::move(anchors));
}

PuncturedCell load_geometry_file(const std::string& path) {
  return parse_geometry(read_file(path));
}

std::pair<AnalyticFunction, AnalyticFunction> parse_function_pair(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("functions parse error: ") + e.what());
  }
  if (doc.value("format", "") != "pcell-functions/1")
    throw std::invalid_argument("functions: expected format 'pcell-functions/1'");
  return {parse_function(doc.at("v")), parse_function(doc.at("w"))};
}

std::pair<AnalyticFunction, AnalyticFunction> load_function_file(const std::string& path) {
  return parse_function_pair(read_file(path));
}

} // namespace pcell
