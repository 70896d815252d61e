#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "hausconv/cones.hpp"
#include "hausconv/metric.hpp"
#include "hausconv/polyhedron.hpp"
#include "hausconv/witness.hpp"

namespace hausconv {

// Key order is fixed so identical invocations emit byte-identical output.
using Json = nlohmann::ordered_json;

Json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j, std::size_t expect_dim, const std::string& file);

// {"dim": n, "hrep": {"A": [[p/q]], "b": [p/q]}, "vrep": {"vertices": ...,
//  "rays": ..., "lineality": ...}}; either representation may be omitted.
Json polyhedron_to_json(const Polyhedron& p, bool with_hrep, bool with_vrep);
Polyhedron polyhedron_from_json(const Json& j, const std::string& file);

// Parses a polyhedron file, validating dimensions and, when both
// representations are present, their mutual consistency.
Polyhedron load_polyhedron(const std::string& path);

// {"basis": [[p/q]]}
std::vector<RatVec> load_subspace_basis(const std::string& path, std::size_t expect_dim);

Json hausdorff_to_json(const HausdorffResult& r);
Json component_to_json(const ComponentClass& c);
Json cone_to_json(const PolyCone& c);
Json op_metric_report_to_json(const OpMetricReport& r);
Json witness_family_to_json(const WitnessFamily& w);
Json witness_report_to_json(const WitnessReport& r);

}  // namespace hausconv
