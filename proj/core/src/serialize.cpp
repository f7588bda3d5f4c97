#include "gitkit/serialize.hpp"

#include <algorithm>

#include "gitkit/error.hpp"

namespace gitkit {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& pointer) {
  if (!j.is_object()) fail(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(pointer + "/" + key, "missing field");
  return *it;
}

std::size_t rank_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_number_unsigned()) fail(pointer, "expected a non-negative integer");
  auto r = j.get<std::uint64_t>();
  if (r > kMaxConeRank) throw Error(ErrorKind::Unsupported, pointer + ": rank " + std::to_string(r) + " too large");
  return static_cast<std::size_t>(r);
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rational& x) {
  if (x.get_den() == 1) return to_json(Integer(x.get_num()));
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const IntMatrix& m) { return to_json(m.row_list()); }

Json to_json(const Cone& c) {
  Json out;
  out["rank"] = c.rank();
  out["rays"] = to_json(c.rays());
  out["facets"] = to_json(c.facets());
  out["lineality"] = to_json(c.lineality());
  return out;
}

Json to_json(const TailedPolyhedron& p) {
  Json out;
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v));
  out["vertices"] = std::move(vertices);
  out["tail"] = to_json(p.tail());
  return out;
}

Json to_json(const ToricBase& b) {
  Json out;
  out["rank"] = b.rank;
  Json rays = Json::array();
  for (const auto& r : b.rays) rays.push_back(Json{{"label", r.label}, {"generator", to_json(r.generator)}});
  out["rays"] = std::move(rays);
  Json cones = Json::array();
  for (const auto& c : b.maximal_cones()) {
    Json labels = Json::array();
    for (const auto& g : c.rays())
      if (auto idx = b.ray_index(g)) labels.push_back(b.rays[*idx].label);
    cones.push_back(std::move(labels));
  }
  out["cones"] = std::move(cones);
  out["complete"] = b.complete;
  return out;
}

Json to_json(const PolyhedralDivisor& d) {
  Json out;
  out["base"] = to_json(d.base);
  out["tail"] = to_json(d.tail);
  Json coefficients = Json::object();
  for (std::size_t r = 0; r < d.base.rays.size(); ++r) coefficients[d.base.rays[r].label] = to_json(d.coefficients[r]);
  out["coefficients"] = std::move(coefficients);
  return out;
}

Integer integer_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) fail(pointer, "malformed integer string");
    return x;
  }
  fail(pointer, "expected an integer");
}

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Rational x;
    if (s.empty() || x.set_str(s, 10) != 0) fail(pointer, "malformed rational string");
    if (x.get_den() == 0) fail(pointer, "zero denominator");
    x.canonicalize();
    return x;
  }
  return Rational(integer_from_json(j, pointer));
}

IntVector int_vector_from_json(const Json& j, const std::string& pointer, std::size_t length) {
  if (!j.is_array()) fail(pointer, "expected an array of integers");
  if (j.size() != length)
    throw Error(ErrorKind::DimensionMismatch, pointer + ": expected length " + std::to_string(length) + ", got " +
                                                  std::to_string(j.size()));
  IntVector v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(integer_from_json(j[k], pointer + "/" + std::to_string(k)));
  return v;
}

RatVector rat_vector_from_json(const Json& j, const std::string& pointer, std::size_t length) {
  if (!j.is_array()) fail(pointer, "expected an array of rationals");
  if (j.size() != length)
    throw Error(ErrorKind::DimensionMismatch, pointer + ": expected length " + std::to_string(length) + ", got " +
                                                  std::to_string(j.size()));
  RatVector v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(rational_from_json(j[k], pointer + "/" + std::to_string(k)));
  return v;
}

std::vector<IntVector> int_vectors_from_json(const Json& j, const std::string& pointer, std::size_t length) {
  if (!j.is_array()) fail(pointer, "expected an array of vectors");
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(int_vector_from_json(j[k], pointer + "/" + std::to_string(k), length));
  return out;
}

Cone cone_from_json(const Json& j, const std::string& pointer) {
  const std::size_t rank = rank_from_json(member(j, "rank", pointer), pointer + "/rank");
  auto gens = int_vectors_from_json(member(j, "rays", pointer), pointer + "/rays", rank);
  if (j.contains("lineality"))
    for (const auto& l : int_vectors_from_json(j["lineality"], pointer + "/lineality", rank)) {
      gens.push_back(l);
      gens.push_back(negate(l));
    }
  Cone c = Cone::from_generators(gens, rank);
  if (j.contains("facets")) {
    auto facets = int_vectors_from_json(j["facets"], pointer + "/facets", rank);
    if (facets != c.facets()) fail(pointer + "/facets", "facets disagree with the rays");
  }
  return c;
}

TailedPolyhedron tailed_polyhedron_from_json(const Json& j, const std::string& pointer) {
  Cone tail = cone_from_json(member(j, "tail", pointer), pointer + "/tail");
  const Json& vs = member(j, "vertices", pointer);
  if (!vs.is_array() || vs.empty()) fail(pointer + "/vertices", "expected a nonempty array");
  std::vector<RatVector> points;
  for (std::size_t k = 0; k < vs.size(); ++k)
    points.push_back(rat_vector_from_json(vs[k], pointer + "/vertices/" + std::to_string(k), tail.rank()));
  return TailedPolyhedron::make(points, tail);
}

PolyhedralDivisor ppdivisor_from_json(const Json& j, const std::string& pointer) {
  PolyhedralDivisor d;
  const Json& base = member(j, "base", pointer);
  d.base.rank = rank_from_json(member(base, "rank", pointer + "/base"), pointer + "/base/rank");
  const Json& rays = member(base, "rays", pointer + "/base");
  if (!rays.is_array()) fail(pointer + "/base/rays", "expected an array");
  for (std::size_t k = 0; k < rays.size(); ++k) {
    const std::string at = pointer + "/base/rays/" + std::to_string(k);
    const Json& label = member(rays[k], "label", at);
    if (!label.is_string()) fail(at + "/label", "expected a string");
    IntVector g = int_vector_from_json(member(rays[k], "generator", at), at + "/generator", d.base.rank);
    if (!is_primitive(g)) fail(at + "/generator", "generator must be primitive");
    for (const auto& r : d.base.rays)
      if (r.label == label.get<std::string>()) fail(at + "/label", "duplicate label");
    d.base.rays.push_back({label.get<std::string>(), g});
  }
  if (base.contains("cones")) {
    const Json& cones = base["cones"];
    if (!cones.is_array()) fail(pointer + "/base/cones", "expected an array");
    std::vector<Cone> maximal;
    for (std::size_t k = 0; k < cones.size(); ++k) {
      const std::string at = pointer + "/base/cones/" + std::to_string(k);
      if (!cones[k].is_array()) fail(at, "expected an array of labels");
      std::vector<IntVector> gens;
      for (std::size_t l = 0; l < cones[k].size(); ++l) {
        const Json& label = cones[k][l];
        auto it = std::find_if(d.base.rays.begin(), d.base.rays.end(), [&](const BaseRay& r) {
          return label.is_string() && r.label == label.get<std::string>();
        });
        if (it == d.base.rays.end()) fail(at + "/" + std::to_string(l), "unknown ray label");
        gens.push_back(it->generator);
      }
      maximal.push_back(Cone::from_generators(gens, d.base.rank));
    }
    for (const auto& c : maximal)
      for (const auto& f : faces(c)) d.base.fan.push_back(f.cone);
  } else {
    d.base.fan.push_back(Cone::zero(d.base.rank));
    for (const auto& r : d.base.rays)
      d.base.fan.push_back(Cone::from_generators(std::vector<IntVector>{r.generator}, d.base.rank));
  }
  std::sort(d.base.fan.begin(), d.base.fan.end(), table_order);
  d.base.fan.erase(std::unique(d.base.fan.begin(), d.base.fan.end()), d.base.fan.end());
  if (base.contains("complete")) {
    if (!base["complete"].is_boolean()) fail(pointer + "/base/complete", "expected a boolean");
    d.base.complete = base["complete"].get<bool>();
  }
  d.tail = cone_from_json(member(j, "tail", pointer), pointer + "/tail");
  const Json& coefficients = member(j, "coefficients", pointer);
  for (const auto& r : d.base.rays) {
    const std::string at = pointer + "/coefficients/" + r.label;
    auto p = tailed_polyhedron_from_json(member(coefficients, r.label.c_str(), pointer + "/coefficients"), at);
    if (!(p.tail() == d.tail)) fail(at + "/tail", "coefficient tail differs from the divisor tail");
    d.coefficients.push_back(std::move(p));
  }
  return d;
}

}  // namespace gitkit
