#ifndef SGA_INSTANCE_IO_HPP
#define SGA_INSTANCE_IO_HPP

// JSON instance files.  Every file carries a "kind" discriminator
// ("groupoid" | "action" | "ultragraph") and a format version.  Output is
// canonical: keys sorted, arrays in canonical order, no volatile fields, so
// identical inputs produce byte-identical output.

#include "sga/partial_action.hpp"
#include "sga/report.hpp"
#include "sga/ultragraph.hpp"

#include "json.hpp"

#include <variant>

namespace sga {

using Instance = std::variant<Groupoid, PartialAction, Ultragraph>;

nlohmann::json to_json(const RawGroupoid& g);
nlohmann::json to_json(const Groupoid& g);
nlohmann::json to_json(const PartialAction& a);
nlohmann::json to_json(const Ultragraph& u);

RawGroupoid raw_groupoid_from_json(const nlohmann::json& j);
RawPartialAction raw_action_from_json(const nlohmann::json& j);
RawUltragraph raw_ultragraph_from_json(const nlohmann::json& j);

/// Parses and validates by the "kind" field; throws ValidationError on
/// schema or axiom violations.
Instance parse_instance(const nlohmann::json& j);

std::string instance_kind(const Instance& inst);

std::string dump_canonical(const nlohmann::json& j);

} // namespace sga

#endif
