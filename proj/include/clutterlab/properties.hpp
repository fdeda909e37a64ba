#pragma once

// One-stop property evaluation producing a PropertyReport.

#include <cstddef>
#include <string>
#include <vector>

#include "clutterlab/clutter.hpp"
#include "clutterlab/cm.hpp"
#include "clutterlab/covering.hpp"
#include "clutterlab/polyhedra.hpp"
#include "clutterlab/rees.hpp"
#include "clutterlab/report.hpp"
#include "clutterlab/simplicial.hpp"

namespace clutterlab {

enum class Property { alpha0, beta1, konig, packing, ideal, mfmc, normal, normal_bounded, ntf, cm };

std::string to_string(Property p);
Property parse_property(const std::string& name);
/// Comma-separated list; "all" expands to every property.
std::vector<Property> parse_property_list(const std::string& list);
std::vector<Property> all_properties();

struct CheckOptions {
  std::vector<Property> props = all_properties();
  int max_weight = kDefaultMfmcBound;
  int max_power = kDefaultPowerBound;
  Field field = Field::rationals();
  std::size_t packing_vertex_limit = kDefaultPackingVertexLimit;
  std::size_t q_vertex_limit = kDefaultQVertexLimit;
  std::size_t cm_vertex_limit = kDefaultCmVertexLimit;
  HilbertBasisLimits hilbert{};
};

PropertyReport check_clutter(const Clutter& c, const CheckOptions& options = {});

// Per-property verdict builders, shared with the theorem suite.
PropertyVerdict konig_verdict(const Clutter& c);
PropertyVerdict packing_verdict(const Clutter& c, const PackingVerdict& v);
PropertyVerdict ideal_verdict(const Clutter& c, const IdealVerdict& v);
PropertyVerdict mfmc_verdict(const Clutter& c, const MfmcResult& r);
PropertyVerdict normal_verdict(const Clutter& c, const NormalityVerdict& v);
PropertyVerdict power_verdict(const Clutter& c, const std::string& prop, const PowerCheck& r);
PropertyVerdict cm_verdict(const Clutter& c, const CmVerdict& v);

Json labels_json(const Clutter& c, std::span<const Vertex> vertices);

}  // namespace clutterlab
