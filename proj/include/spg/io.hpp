#pragma once

#include <string>

#include <json.hpp>

#include "spg/equilibria.hpp"
#include "spg/factory.hpp"
#include "spg/metrics.hpp"
#include "spg/model.hpp"

namespace spg {

using Json = nlohmann::ordered_json;

/// Player ids in documents are "1".."n".
std::string player_id(std::size_t index);

Json instance_to_json(const Instance& instance, const Json& meta = Json::object());
Instance instance_from_json(const Json& doc);

/// Maps every player id to the ids of the items it holds.
Json profile_to_json(const Instance& instance, const Profile& profile);
/// Players missing from the document hold nothing.
Profile profile_from_json(const Instance& instance, const Json& doc);

Json item_ids(const Instance& instance, const ItemSet& set);
ItemSet items_from_json(const Instance& instance, const Json& ids);

Json report_to_json(const Instance& instance, const EquilibriumReport& report);
Json poa_to_json(const Instance& instance, const PoAResult& result);
Json spec_to_json(const GeneratorSpec& spec);

/// Parse errors surface as InputError.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);
/// Two-space indentation, newline terminated.
std::string dump(const Json& doc);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace spg
