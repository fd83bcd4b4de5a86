#include "geom/workspace.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/sexpr.hpp"

namespace tamp::geom {

double Component::axisProjection(const Pose& p) const {
  double dx = axisEnd.x - axisStart.x;
  double dy = axisEnd.y - axisStart.y;
  double len = axisLength();
  if (len == 0.0) return 0.0;
  return ((p.x - axisStart.x) * dx + (p.y - axisStart.y) * dy) / len;
}

const Polygon& Workspace::region(const std::string& name) const {
  auto it = regions.find(name);
  if (it == regions.end())
    throw ValidationError("unknown region '" + name + "'");
  return it->second;
}

const Component& Workspace::component(const std::string& name) const {
  auto it = components.find(name);
  if (it == components.end())
    throw ValidationError("unknown component '" + name + "'");
  return it->second;
}

bool Workspace::poseFree(const Pose& p) const {
  if (!bounds.contains(p)) return false;
  for (const Polygon& obs : obstacles) {
    if (pointInPolygon(p, obs)) return false;
  }
  return true;
}

bool Workspace::segmentFree(const Pose& a, const Pose& b) const {
  if (!bounds.contains(a) || !bounds.contains(b)) return false;
  for (const Polygon& obs : obstacles) {
    if (segmentIntersectsPolygon(a, b, obs)) return false;
  }
  return true;
}

namespace {

double atomNumber(const Sexpr& node) {
  if (!node.isAtom())
    throw SyntaxError(node.line, node.col, "expected a number");
  try {
    size_t used = 0;
    double v = std::stod(node.text, &used);
    if (used != node.text.size()) throw std::invalid_argument(node.text);
    return v;
  } catch (const std::exception&) {
    throw SyntaxError(node.line, node.col,
                      "expected a number, got '" + node.text + "'");
  }
}

Polygon parseVertices(const Sexpr& form, size_t firstIdx) {
  Polygon poly;
  for (size_t i = firstIdx; i < form.items.size(); ++i) {
    const Sexpr& v = form.items[i];
    if (!v.isList() || v.items.size() != 2)
      throw SyntaxError(v.line, v.col, "expected a vertex (x y)");
    poly.push_back({atomNumber(v.items[0]), atomNumber(v.items[1])});
  }
  if (poly.size() < 3)
    throw SyntaxError(form.line, form.col, "polygon needs >= 3 vertices");
  return poly;
}

std::string formName(const Sexpr& form) {
  if (form.items.size() < 2 || !form.items[1].isAtom())
    throw SyntaxError(form.line, form.col, "expected a name");
  return form.items[1].text;
}

void validate(const Workspace& w) {
  auto inBounds = [&](const Polygon& poly) {
    for (const Pose& p : poly)
      if (!w.bounds.contains(p)) return false;
    return true;
  };
  for (const auto& [name, poly] : w.regions) {
    if (!inBounds(poly))
      throw ValidationError("region '" + name + "' leaves workspace bounds");
    for (const Polygon& obs : w.obstacles) {
      bool overlap = false;
      size_t n = poly.size();
      for (size_t i = 0; i < n && !overlap; ++i) {
        if (segmentIntersectsPolygon(poly[i], poly[(i + 1) % n], obs))
          overlap = true;
      }
      // Obstacle fully inside the region leaves no edge crossings.
      if (!overlap && pointInPolygon(obs.front(), poly)) overlap = true;
      if (overlap)
        throw ValidationError("region '" + name +
                              "' interior overlaps an obstacle");
    }
  }
  for (const auto& [name, comp] : w.components) {
    if (!w.bounds.contains(comp.axisStart) || !w.bounds.contains(comp.axisEnd))
      throw ValidationError("component '" + name +
                            "' axis leaves workspace bounds");
  }
}

}  // namespace

Workspace parseWorkspace(const std::string& text) {
  Sexpr top = parseSexpr(text);
  if (!top.headIs("workspace"))
    throw SyntaxError(top.line, top.col, "expected (workspace ...)");

  Workspace w;
  bool sawBounds = false;
  for (size_t i = 1; i < top.items.size(); ++i) {
    const Sexpr& form = top.items[i];
    if (!form.isList() || form.items.empty() || !form.items[0].isAtom())
      throw SyntaxError(form.line, form.col, "expected a (keyword ...) form");
    const std::string& head = form.items[0].text;
    if (head == "bounds") {
      if (form.items.size() != 5)
        throw SyntaxError(form.line, form.col,
                          "bounds takes XMIN YMIN XMAX YMAX");
      w.bounds = {atomNumber(form.items[1]), atomNumber(form.items[2]),
                  atomNumber(form.items[3]), atomNumber(form.items[4])};
      if (w.bounds.width() <= 0 || w.bounds.height() <= 0)
        throw ValidationError("workspace bounds must have positive area");
      sawBounds = true;
    } else if (head == "obstacle") {
      formName(form);  // named for readability; name not referenced
      w.obstacles.push_back(parseVertices(form, 2));
    } else if (head == "region") {
      std::string name = formName(form);
      if (w.regions.count(name))
        throw ValidationError("duplicate region '" + name + "'");
      w.regions[name] = parseVertices(form, 2);
    } else if (head == "component") {
      std::string name = formName(form);
      if (w.components.count(name))
        throw ValidationError("duplicate component '" + name + "'");
      if (form.items.size() != 3 || !form.items[2].headIs("axis") ||
          form.items[2].items.size() != 5)
        throw SyntaxError(form.line, form.col,
                          "component needs (axis X1 Y1 X2 Y2)");
      const auto& ax = form.items[2].items;
      w.components[name] = Component{
          name,
          {atomNumber(ax[1]), atomNumber(ax[2])},
          {atomNumber(ax[3]), atomNumber(ax[4])}};
    } else {
      throw SyntaxError(form.line, form.col,
                        "unknown workspace form '" + head + "'");
    }
  }
  if (!sawBounds)
    throw ValidationError("workspace is missing a (bounds ...) form");
  validate(w);
  return w;
}

Workspace loadWorkspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open workspace file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parseWorkspace(ss.str());
}

}  // namespace tamp::geom
