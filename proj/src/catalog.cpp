#include "conetoric/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace conetoric {

namespace {

std::vector<LatticeVector> standard_basis(std::size_t n) {
  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return basis;
}

LatticeVector vec(std::initializer_list<long long> xs) {
  LatticeVector v;
  for (long long x : xs) v.push_back(x);
  return v;
}

std::vector<std::pair<std::string, ConeDocument>> builtin_entries() {
  std::vector<std::pair<std::string, ConeDocument>> entries;
  auto add = [&](std::string name, ConeDocument doc) {
    doc.name = name;
    entries.emplace_back(std::move(name), std::move(doc));
  };
  for (std::size_t n = 2; n <= 6; ++n) {
    ConeDocument d;
    d.rank = n;
    d.normals = standard_basis(n);
    add("orthant" + std::to_string(n), std::move(d));
  }
  {
    ConeDocument d;
    d.rank = 2;
    d.rays = std::vector<LatticeVector>{vec({0, 1}), vec({2, -1})};
    add("wedge-rp3", std::move(d));
  }
  {
    ConeDocument d;
    d.rank = 2;
    d.rays = std::vector<LatticeVector>{vec({0, 1}), vec({0, -1})};
    add("s2xs1-degenerate", std::move(d));
  }
  {
    ConeDocument d;
    d.rank = 3;
    d.normals = std::vector<LatticeVector>{vec({1, 0, 0}), vec({-1, 0, 2})};
    add("nongood-rank3", std::move(d));
  }
  {
    ConeDocument d;
    d.rank = 3;
    d.normals = std::vector<LatticeVector>{vec({-1, -1, 1}), vec({-1, 1, 1}),
                                           vec({1, -1, 1}), vec({1, 1, 1})};
    add("cone-over-square", std::move(d));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    ConeDocument d;
    d.rank = n;
    d.normals = std::vector<LatticeVector>{};
    add("fullspace" + std::to_string(n), std::move(d));
  }
  return entries;
}

std::optional<std::string> override_dir() {
  const char* env = std::getenv("CONETORIC_CATALOG");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::string(env);
}

}  // namespace

std::vector<std::string> catalog_names() {
  if (auto dir = override_dir()) {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(*dir, ec)) {
      if (!entry.is_regular_file()) continue;
      const auto& path = entry.path();
      if (path.extension() == ".json") names.push_back(path.stem().string());
    }
    std::sort(names.begin(), names.end());
    return names;
  }
  std::vector<std::string> names;
  for (const auto& [name, doc] : builtin_entries()) names.push_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

std::optional<ConeDocument> catalog_lookup(const std::string& name) {
  if (auto dir = override_dir()) {
    std::filesystem::path path = std::filesystem::path(*dir) / (name + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    auto docs = parse_cone_documents(buf.str(), path.string());
    if (docs.size() != 1)
      throw Error(ErrorCode::MalformedDocument,
                  path.string() + ": catalog entries hold exactly one document");
    return docs.front();
  }
  for (auto& [entry_name, doc] : builtin_entries())
    if (entry_name == name) return doc;
  return std::nullopt;
}

}  // namespace conetoric
