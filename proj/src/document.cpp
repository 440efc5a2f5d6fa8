#include "conetoric/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace conetoric {

namespace {

using nlohmann::ordered_json;

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

[[noreturn]] void fail(const std::string& source, const std::string& where,
                       const std::string& msg) {
  throw Error(ErrorCode::MalformedDocument, source + ":" + where + ": " + msg);
}

std::vector<LatticeVector> parse_vectors(const ordered_json& j,
                                         std::size_t rank,
                                         const std::string& source,
                                         const std::string& where,
                                         const char* field) {
  if (!j.is_array()) fail(source, where, std::string(field) + " must be an array");
  std::vector<LatticeVector> out;
  for (const auto& row : j) {
    if (!row.is_array())
      fail(source, where, std::string(field) + " entries must be arrays");
    LatticeVector v;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        fail(source, where, std::string(field) + " entries must be integers");
      v.push_back(Int(x.get<long long>()));
    }
    if (v.size() != rank)
      fail(source, where,
           std::string(field) + " vector length " + std::to_string(v.size()) +
               " does not match rank " + std::to_string(rank));
    out.push_back(std::move(v));
  }
  return out;
}

ConeDocument parse_one(const ordered_json& j, const std::string& source,
                       const std::string& where) {
  if (!j.is_object()) fail(source, where, "document must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "name" && key != "rank" && key != "normals" && key != "rays" &&
        key != "winding")
      fail(source, where, "unknown field '" + key + "'");
  }
  ConeDocument doc;
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    fail(source, where, "missing integer field 'rank'");
  long long rank = j["rank"].get<long long>();
  if (rank < 1) fail(source, where, "rank must be >= 1");
  doc.rank = static_cast<std::size_t>(rank);
  const bool has_normals = j.contains("normals");
  const bool has_rays = j.contains("rays");
  if (has_normals == has_rays)
    fail(source, where, "exactly one of 'normals' or 'rays' is required");
  if (has_normals)
    doc.normals = parse_vectors(j["normals"], doc.rank, source, where, "normals");
  else
    doc.rays = parse_vectors(j["rays"], doc.rank, source, where, "rays");
  if (j.contains("winding")) {
    if (!j["winding"].is_number_integer())
      fail(source, where, "winding must be an integer");
    doc.winding = j["winding"].get<long long>();
    if (*doc.winding < 1) fail(source, where, "winding must be >= 1");
    if (!has_normals || !doc.normals->empty() || doc.rank != 2)
      fail(source, where,
           "winding is only meaningful for the rank-2 full plane "
           "(empty normal list)");
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(source, where, "name must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

}  // namespace

std::vector<ConeDocument> parse_cone_documents(const std::string& text,
                                               const std::string& source) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(source, std::to_string(line_of_byte(text, e.byte)),
         std::string("JSON parse error: ") + e.what());
  }
  std::vector<ConeDocument> docs;
  if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& item : j)
      docs.push_back(parse_one(item, source, "document " + std::to_string(i++)));
  } else {
    docs.push_back(parse_one(j, source, "document 0"));
  }
  return docs;
}

namespace {

ordered_json vectors_json(const std::vector<LatticeVector>& vs) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : vs) {
    ordered_json row = ordered_json::array();
    for (const Int& x : v) row.push_back(x.convert_to<long long>());
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

std::string serialize_cone_document(const ConeDocument& doc) {
  ordered_json j;
  if (doc.name) j["name"] = *doc.name;
  j["rank"] = doc.rank;
  if (doc.normals) j["normals"] = vectors_json(*doc.normals);
  if (doc.rays) j["rays"] = vectors_json(*doc.rays);
  if (doc.winding) j["winding"] = *doc.winding;
  return j.dump(2) + "\n";
}

Cone cone_of(const ConeDocument& doc) {
  if (doc.normals) return cone_from_normals(doc.rank, *doc.normals);
  return cone_from_rays(doc.rank, *doc.rays);
}

MomentInput moment_input_of(const ConeDocument& doc) {
  MomentInput in;
  in.rank = doc.rank;
  in.cone = cone_of(doc);
  in.winding = doc.winding;
  return in;
}

}  // namespace conetoric
