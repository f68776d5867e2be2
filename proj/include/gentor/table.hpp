#ifndef GENTOR_TABLE_HPP
#define GENTOR_TABLE_HPP

#include "gentor/permrep.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gentor {

using Json = nlohmann::ordered_json;

/// One row of the shipped witness table: either a filled row carrying a
/// degree and the two generator images, or a parameter pair whose status is
/// still unknown.
struct TableRow {
  long long p = 0;
  long long q = 0;
  bool unknown = false;
  int degree = 0;              // filled rows only; points = degree + 1
  std::vector<int> x_images;
  std::vector<int> y_images;
};

std::vector<TableRow> parse_table(const Json& doc);
std::vector<TableRow> load_table(const std::filesystem::path& path);
Json table_to_json(const std::vector<TableRow>& rows);

Json witness_to_json(const WitnessRecord& rec);
WitnessRecord witness_from_json(const Json& doc);

/// JSON-lines export (one witness per line).
std::string witnesses_to_jsonl(const std::vector<WitnessRecord>& recs);

}  // namespace gentor

#endif  // GENTOR_TABLE_HPP
