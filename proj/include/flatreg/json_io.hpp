#pragma once

#include <json.hpp>

#include "flatreg/bijection.hpp"
#include "flatreg/enumerate.hpp"
#include "flatreg/render.hpp"
#include "flatreg/verify.hpp"

// JSON shapes for the CLI. Partitions serialize as arrays of parts in
// nonincreasing order, type vectors as arrays of length m-1; sigma is kept in
// reduced form with the modulus alongside. parse(print(x)) == x holds for
// partitions, type vectors, traces, and reports.

namespace flatreg {

nlohmann::json to_json(const partition& p);
partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const type_vector& t);
type_vector type_vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const sigma_record& s);
sigma_record sigma_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const bijection_trace& t);
bijection_trace trace_from_json(const nlohmann::json& j);

nlohmann::json to_json(const verification_report& r);
verification_report report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const count_table& t);
nlohmann::json to_json(const rendered_diagram& d);

}  // namespace flatreg
