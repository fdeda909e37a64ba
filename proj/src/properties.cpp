#include "clutterlab/properties.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "clutterlab/error.hpp"

namespace clutterlab {

namespace {

struct NamedProperty {
  Property p;
  const char* name;
};

constexpr NamedProperty kNames[] = {
    {Property::alpha0, "alpha0"}, {Property::beta1, "beta1"},
    {Property::konig, "konig"},  {Property::packing, "packing"},
    {Property::ideal, "ideal"},  {Property::mfmc, "mfmc"},
    {Property::normal, "normal"}, {Property::normal_bounded, "normal_bounded"},
    {Property::ntf, "ntf"},      {Property::cm, "cm"},
};

}  // namespace

std::string to_string(Property p) {
  for (const auto& n : kNames) {
    if (n.p == p) return n.name;
  }
  return "?";
}

Property parse_property(const std::string& name) {
  for (const auto& n : kNames) {
    if (name == n.name) return n.p;
  }
  if (name == "pp") return Property::packing;
  throw Error("unknown property '" + name + "'");
}

std::vector<Property> all_properties() {
  std::vector<Property> out;
  for (const auto& n : kNames) out.push_back(n.p);
  return out;
}

std::vector<Property> parse_property_list(const std::string& list) {
  std::vector<Property> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") return all_properties();
    Property p = parse_property(item);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  if (out.empty()) throw Error("empty property list");
  return out;
}

Json labels_json(const Clutter& c, std::span<const Vertex> vertices) {
  Json out = Json::array();
  for (Vertex v : vertices) out.push_back(c.label(v));
  return out;
}

namespace {

Json rationals_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Json ints_json(const ExponentVector& a) { return Json(a.entries()); }

}  // namespace

PropertyVerdict konig_verdict(const Clutter& c) {
  PropertyVerdict v;
  v.prop = "konig";
  const auto a0 = covering_number(c);
  const auto b1 = matching_number(c);
  v.value = a0 == b1;
  Json counts;
  counts["alpha0"] = a0;
  counts["beta1"] = b1;
  if (a0 == b1) {
    v.detail = counts;
  } else {
    v.witness = counts;
  }
  return v;
}

PropertyVerdict packing_verdict(const Clutter& c, const PackingVerdict& pv) {
  PropertyVerdict v;
  v.prop = "packing";
  v.value = pv.holds;
  if (pv.witness) {
    const auto& w = *pv.witness;
    v.witness["deleted"] = labels_json(c, w.deleted);
    v.witness["contracted"] = labels_json(c, w.contracted);
    v.witness["minor"] = edge_list_string(w.minor);
    v.witness["alpha0"] = w.alpha0;
    v.witness["beta1"] = w.beta1;
  }
  return v;
}

PropertyVerdict ideal_verdict(const Clutter&, const IdealVerdict& iv) {
  PropertyVerdict v;
  v.prop = "ideal";
  v.value = iv.ideal;
  if (iv.fractional_vertex) v.witness["fractional_vertex"] = rationals_json(*iv.fractional_vertex);
  Json vertices = Json::array();
  for (const auto& x : iv.vertices.vertices) vertices.push_back(rationals_json(x));
  v.detail["vertices"] = std::move(vertices);
  return v;
}

PropertyVerdict mfmc_verdict(const Clutter&, const MfmcResult& r) {
  PropertyVerdict v;
  v.prop = "mfmc";
  v.value = r.certified();
  v.bound["W"] = r.bound;
  if (r.counterexample) {
    v.witness["w"] = ints_json(r.counterexample->w);
    v.witness["cover"] = r.counterexample->cover_value;
    v.witness["packing"] = r.counterexample->packing_value;
  }
  return v;
}

PropertyVerdict normal_verdict(const Clutter& c, const NormalityVerdict& nv) {
  PropertyVerdict v;
  v.prop = "normal";
  v.value = nv.normal;
  if (nv.witness) {
    const auto& w = *nv.witness;
    const std::span<const long long> a(w.data(), c.num_vertices());
    v.witness["monomial"] = monomial_string(c, a, w.back());
    v.witness["a"] = std::vector<long long>(a.begin(), a.end());
    v.witness["b"] = w.back();
  }
  v.detail["hilbert_basis_size"] = nv.basis.elements.size();
  return v;
}

PropertyVerdict power_verdict(const Clutter& c, const std::string& prop, const PowerCheck& r) {
  PropertyVerdict v;
  v.prop = prop;
  v.value = r.certified();
  v.bound["k"] = r.bound;
  if (r.counterexample) {
    v.witness["monomial"] = monomial_string(c, r.counterexample->a, r.counterexample->power);
    v.witness["a"] = ints_json(r.counterexample->a);
    v.witness["power"] = r.counterexample->power;
  }
  return v;
}

PropertyVerdict cm_verdict(const Clutter& c, const CmVerdict& cv) {
  PropertyVerdict v;
  v.prop = "cm";
  v.value = cv.cohen_macaulay;
  v.bound["field"] = to_string(cv.field);
  if (cv.unmixed_witness) {
    v.witness["unmixed"] = Json::array({labels_json(c, cv.unmixed_witness->first),
                                        labels_json(c, cv.unmixed_witness->second)});
  }
  if (cv.link_failure) {
    v.witness["face"] = labels_json(c, cv.link_failure->face);
    v.witness["dim"] = cv.link_failure->dimension;
    v.witness["betti"] = cv.link_failure->betti;
  }
  return v;
}

PropertyReport check_clutter(const Clutter& c, const CheckOptions& options) {
  PropertyReport report;
  report.clutter = serialize_clutter(c);
  report.dropped_vertices = c.dropped_vertices();
  for (Property p : options.props) {
    const auto start = std::chrono::steady_clock::now();
    PropertyVerdict v;
    switch (p) {
      case Property::alpha0:
        v.prop = "alpha0";
        v.value = covering_number(c);
        break;
      case Property::beta1:
        v.prop = "beta1";
        v.value = matching_number(c);
        break;
      case Property::konig:
        v = konig_verdict(c);
        break;
      case Property::packing:
        v = packing_verdict(c, has_packing_property(c, options.packing_vertex_limit));
        break;
      case Property::ideal:
        v = ideal_verdict(c, is_ideal_clutter(c, options.q_vertex_limit));
        break;
      case Property::mfmc:
        v = mfmc_verdict(c, mfmc_bounded(c, options.max_weight));
        break;
      case Property::normal:
        v = normal_verdict(c, is_normal(c, options.hilbert));
        break;
      case Property::normal_bounded:
        v = power_verdict(c, "normal_bounded", is_normal_bounded(c, options.max_power));
        break;
      case Property::ntf:
        v = power_verdict(c, "ntf", is_ntf_bounded(c, options.max_power));
        break;
      case Property::cm:
        v = cm_verdict(c, is_cohen_macaulay(c, options.field, options.cm_vertex_limit));
        break;
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.timings_ms.emplace_back(v.prop, ms);
    report.properties.push_back(std::move(v));
  }
  return report;
}

}  // namespace clutterlab
