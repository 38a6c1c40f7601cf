#include "gft/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>

#include "json.hpp"

namespace gft {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ParseError(path + ": " + why);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing field");
  return *it;
}

double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path, "must be finite");
  return x;
}

double positive_at(const json& v, const std::string& path) {
  const double x = number_at(v, path);
  if (x <= 0.0) fail(path, "must be > 0");
  return x;
}

Vec point_at(const json& v, std::size_t dim, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  if (v.size() != dim)
    fail(path, "expected " + std::to_string(dim) + " coordinates, got " +
                   std::to_string(v.size()));
  std::vector<double> xs;
  xs.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i)
    xs.push_back(number_at(v[i], path + "[" + std::to_string(i) + "]"));
  return Vec(std::move(xs));
}

Target target_at(const json& v, std::size_t dim, const std::string& path) {
  const json& kind = field(v, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "singleton")
      return Target(Singleton{point_at(field(v, "point", path), dim, path + ".point")});
    if (k == "ball")
      return Target(Ball{point_at(field(v, "center", path), dim, path + ".center"),
                         positive_at(field(v, "radius", path), path + ".radius")});
    if (k == "box")
      return Target(Box{point_at(field(v, "center", path), dim, path + ".center"),
                        positive_at(field(v, "radius", path), path + ".radius")});
    if (k == "axis_box") {
      Vec radii = point_at(field(v, "radii", path), dim, path + ".radii");
      for (std::size_t i = 0; i < radii.dim(); ++i) {
        if (radii[i] <= 0.0)
          fail(path + ".radii[" + std::to_string(i) + "]", "must be > 0");
      }
      return Target(AxisBox{point_at(field(v, "center", path), dim, path + ".center"),
                            std::move(radii)});
    }
    if (k == "interval") {
      if (dim != 1) fail(path + ".kind", "interval targets need dimension 1");
      const double a = number_at(field(v, "a", path), path + ".a");
      const double b = number_at(field(v, "b", path), path + ".b");
      if (a > b) fail(path + ".a", "interval requires a <= b");
      return Target(Interval{a, b});
    }
    if (k == "abs_epigraph") {
      if (dim != 2) fail(path + ".kind", "abs_epigraph targets need dimension 2");
      return Target(AbsEpigraph{point_at(field(v, "apex", path), dim, path + ".apex")});
    }
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown target kind \"" + k + "\"");
}

}  // namespace

Problem parse_problem_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  const json& jd = field(doc, "dimension", "$");
  if (!jd.is_number_integer() || jd.get<long long>() < 1)
    fail("dimension", "expected an integer >= 1");
  const auto dim = static_cast<std::size_t>(jd.get<long long>());

  const json& dyn = field(doc, "dynamics", "$");
  const json& dyn_kind = field(dyn, "kind", "dynamics");
  if (!dyn_kind.is_string()) fail("dynamics.kind", "expected a string");
  const std::string dk = dyn_kind.get<std::string>();
  Dynamics dynamics;
  if (dk == "euclidean_ball")
    dynamics = Dynamics::euclidean_ball;
  else if (dk == "unit_box")
    dynamics = Dynamics::unit_box;
  else
    fail("dynamics.kind", "unknown dynamics kind \"" + dk + "\"");

  const json& jt = field(doc, "targets", "$");
  if (!jt.is_array() || jt.empty())
    fail("targets", "expected a non-empty array");
  std::vector<Target> targets;
  targets.reserve(jt.size());
  for (std::size_t i = 0; i < jt.size(); ++i)
    targets.push_back(target_at(jt[i], dim, "targets[" + std::to_string(i) + "]"));

  return Problem(dynamics, std::move(targets));
}

Problem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

std::string problem_to_json_text(const Problem& p, bool pretty) {
  json doc;
  doc["dimension"] = p.dim();
  doc["dynamics"] = {
      {"kind", p.dynamics() == Dynamics::euclidean_ball ? "euclidean_ball"
                                                        : "unit_box"}};
  json targets = json::array();
  for (const Target& t : p.targets()) {
    json jt;
    std::visit(
        overloaded{
            [&](const Singleton& s) {
              jt = {{"kind", "singleton"}, {"point", s.point.coords()}};
            },
            [&](const Ball& b) {
              jt = {{"kind", "ball"}, {"center", b.center.coords()},
                    {"radius", b.radius}};
            },
            [&](const Box& b) {
              jt = {{"kind", "box"}, {"center", b.center.coords()},
                    {"radius", b.radius}};
            },
            [&](const AxisBox& b) {
              jt = {{"kind", "axis_box"}, {"center", b.center.coords()},
                    {"radii", b.radii.coords()}};
            },
            [&](const Interval& iv) {
              jt = {{"kind", "interval"}, {"a", iv.lower}, {"b", iv.upper}};
            },
            [&](const AbsEpigraph& e) {
              jt = {{"kind", "abs_epigraph"}, {"apex", e.apex.coords()}};
            }},
        t.shape());
    targets.push_back(std::move(jt));
  }
  doc["targets"] = std::move(targets);
  return pretty ? doc.dump(2) : doc.dump();
}

}  // namespace gft
