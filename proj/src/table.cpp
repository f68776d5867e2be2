#include "gentor/table.hpp"

#include <fstream>
#include <stdexcept>

namespace gentor {

std::vector<TableRow> parse_table(const Json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("table: expected a JSON array");
  std::vector<TableRow> rows;
  for (const auto& item : doc) {
    TableRow row;
    row.p = item.at("p").get<long long>();
    row.q = item.at("q").get<long long>();
    if (item.contains("status")) {
      if (item.at("status").get<std::string>() != "unknown")
        throw std::invalid_argument("table: unsupported status value");
      row.unknown = true;
    } else {
      row.degree = item.at("n").get<int>();
      row.x_images = item.at("x").get<std::vector<int>>();
      row.y_images = item.at("y").get<std::vector<int>>();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path.string());
  Json doc = Json::parse(in);
  return parse_table(doc);
}

Json table_to_json(const std::vector<TableRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json item;
    item["p"] = row.p;
    item["q"] = row.q;
    if (row.unknown) {
      item["status"] = "unknown";
    } else {
      item["n"] = row.degree;
      item["x"] = row.x_images;
      item["y"] = row.y_images;
    }
    arr.push_back(std::move(item));
  }
  return arr;
}

Json witness_to_json(const WitnessRecord& rec) {
  Json doc;
  doc["p"] = rec.params.p;
  doc["q"] = rec.params.q;
  doc["n"] = rec.degree;
  doc["x"] = rec.x_image.images();
  doc["y"] = rec.y_image.images();
  doc["candidate"] = rec.candidate_label;
  doc["candidate_image"] = rec.candidate_image.images();
  return doc;
}

WitnessRecord witness_from_json(const Json& doc) {
  WitnessRecord rec{
      make_params(doc.at("p").get<long long>(), doc.at("q").get<long long>()),
      doc.at("n").get<int>(),
      Permutation(doc.at("x").get<std::vector<int>>()),
      Permutation(doc.at("y").get<std::vector<int>>()),
      doc.at("candidate").get<std::string>(),
      Permutation(doc.at("candidate_image").get<std::vector<int>>())};
  if (!verify_witness(rec))
    throw std::invalid_argument("witness record fails verification");
  return rec;
}

std::string witnesses_to_jsonl(const std::vector<WitnessRecord>& recs) {
  std::string out;
  for (const auto& rec : recs) {
    out += witness_to_json(rec).dump();
    out += '\n';
  }
  return out;
}

}  // namespace gentor
