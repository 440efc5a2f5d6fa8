#pragma once

#include "conetoric/classify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conetoric {

// One cone description as read from disk: rank plus exactly one of a normal
// list or a ray list, an optional winding number (rank-2 full plane only)
// and an optional name.
struct ConeDocument {
  std::size_t rank = 0;
  std::optional<std::vector<LatticeVector>> normals;
  std::optional<std::vector<LatticeVector>> rays;
  std::optional<long long> winding;
  std::optional<std::string> name;

  bool operator==(const ConeDocument&) const = default;
};

// Parses one document or an array of documents from JSON text. Throws
// Error(MalformedDocument) with a line-anchored diagnostic; `source` names
// the input in messages (file path, "<stdin>", ...).
std::vector<ConeDocument> parse_cone_documents(const std::string& text,
                                               const std::string& source);

// Deterministic single-document JSON (insertion-ordered keys).
std::string serialize_cone_document(const ConeDocument& doc);

Cone cone_of(const ConeDocument& doc);
MomentInput moment_input_of(const ConeDocument& doc);

}  // namespace conetoric
