#pragma once

#include "qf2/batyrev.hpp"
#include "qf2/fan.hpp"
#include "qf2/invariants.hpp"
#include "qf2/localization.hpp"
#include "qf2/quantum_module.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace qf2 {

using Json = nlohmann::ordered_json;

/// Malformed user input; the CLI maps it to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json to_json(const Series& s);
/// Throws InputError.
Series series_from_json(const Json& j);

Json to_json(const Fan& fan);
/// Parses {"rays": [[x,y],...], "max_cones": [[i,j],...]}; syntax errors carry line and column.
Fan parse_fan_json(const std::string& text);
Fan load_fan(const std::string& path);

Json to_json(const ClassMatrix& cm);
Json to_json(const PrimitiveCollection& p);
Json to_json(const Contribution& c);
Json to_json(const InvariantKey& k);
Json to_json(const Report& r);
Json to_json(const SeriesMatrix& m);

/// Validation, primitive collections with relations and beta, class matrix, Batyrev generators.
Json fan_summary_json(const Fan& fan);

/// The eight entries sigma_k * T_j: text, symbolic terms and expanded coordinates.
Json module_table_json(int order);

}  // namespace qf2
