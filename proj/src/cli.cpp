#include "conetoric/cli.hpp"

#include "conetoric/catalog.hpp"
#include "conetoric/reduction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace conetoric {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json };

struct LoadedDocument {
  std::string label;
  ConeDocument doc;
};

std::vector<LoadedDocument> load_documents(const std::string& input) {
  std::string text;
  std::string source;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
    source = "<stdin>";
  } else if (std::ifstream in(input); in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    source = input;
  } else if (auto doc = catalog_lookup(input)) {
    return {{doc->name.value_or(input), *doc}};
  } else {
    throw Error(ErrorCode::MalformedDocument,
                input + ": no such file or catalog entry");
  }
  std::vector<LoadedDocument> out;
  std::size_t i = 0;
  for (auto& doc : parse_cone_documents(text, source)) {
    std::string label =
        doc.name ? *doc.name : source + "#" + std::to_string(i);
    out.push_back({std::move(label), std::move(doc)});
    ++i;
  }
  return out;
}

std::vector<LoadedDocument> load_all(const std::vector<std::string>& inputs) {
  std::vector<LoadedDocument> out;
  for (const auto& s : inputs) {
    auto batch = load_documents(s);
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

// ---- JSON report pieces (schema mirrors the record types) ----

ordered_json json_int(const Int& x) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return x.convert_to<long long>();
  return x.str();
}

ordered_json json_vector(const LatticeVector& v) {
  ordered_json a = ordered_json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

ordered_json json_vectors(const std::vector<LatticeVector>& vs) {
  ordered_json a = ordered_json::array();
  for (const auto& v : vs) a.push_back(json_vector(v));
  return a;
}

ordered_json json_rational_vector(const RationalVector& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json json_matrix(const IntegerMatrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(json_vector(m.row(i)));
  return a;
}

ordered_json json_group(const FiniteAbelianGroup& g) {
  ordered_json j;
  j["free_rank"] = g.free_rank;
  ordered_json f = ordered_json::array();
  for (const Int& d : g.invariant_factors) f.push_back(json_int(d));
  j["invariant_factors"] = std::move(f);
  j["display"] = g.to_string();
  return j;
}

ordered_json json_face(const Face& f) {
  ordered_json j;
  j["active_normal_indices"] = f.active_normal_indices;
  j["codim"] = f.codim;
  j["span_basis"] = json_vectors(f.span_basis);
  return j;
}

ordered_json json_goodness(const GoodnessReport& rep) {
  ordered_json j;
  j["is_good"] = rep.is_good;
  j["checked_faces"] = rep.checked_faces;
  ordered_json fails = ordered_json::array();
  for (const auto& f : rep.failures) {
    ordered_json jf;
    jf["face"] = json_face(f.face);
    jf["reason"] = f.reason;
    jf["obstruction"] = json_group(f.obstruction);
    fails.push_back(std::move(jf));
  }
  j["failures"] = std::move(fails);
  return j;
}

// ---- text report pieces ----

std::string face_kind(const Face& f, std::size_t rank) {
  if (f.codim == 1) return "facet";
  if (rank - f.codim == 1) return "edge";
  return "codim-" + std::to_string(f.codim) + " face";
}

std::string goodness_summary(const GoodnessReport& rep, std::size_t rank) {
  // counts per (face kind, obstruction), in first-seen (face) order
  std::vector<std::pair<std::string, std::string>> keys;
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  for (const auto& f : rep.failures) {
    auto key = std::make_pair(face_kind(f.face, rank), f.obstruction.to_string());
    if (counts.find(key) == counts.end()) keys.push_back(key);
    ++counts[key];
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& key : keys) {
    if (!first) os << ", ";
    std::size_t n = counts[key];
    os << n << ' ' << key.first << " obstruction" << (n == 1 ? "" : "s") << ' '
       << key.second;
    first = false;
  }
  return os.str();
}

std::string vectors_text(const std::vector<LatticeVector>& vs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ',';
    os << to_string(vs[i]);
  }
  os << ']';
  return os.str();
}

class Reporter {
 public:
  Reporter(Format format, bool batch, std::ostream& out)
      : format_(format), batch_(batch), out_(out) {}

  void text(const std::string& label, const std::string& line) {
    if (format_ != Format::Text) return;
    if (batch_) out_ << label << ": ";
    out_ << line << '\n';
  }

  void json(ordered_json j) {
    if (format_ != Format::Json) return;
    items_.push_back(std::move(j));
  }

  void flush() {
    if (format_ != Format::Json) return;
    if (batch_) {
      out_ << ordered_json(items_).dump(2) << '\n';
    } else if (!items_.empty()) {
      out_ << items_.front().dump(2) << '\n';
    }
  }

 private:
  Format format_;
  bool batch_;
  std::ostream& out_;
  std::vector<ordered_json> items_;
};

int worse(int a, int b) { return std::max(a, b); }

int cmd_check_good(const std::vector<LoadedDocument>& docs, Format format,
                   std::ostream& out, std::ostream& err) {
  Reporter rep(format, docs.size() > 1, out);
  int code = 0;
  for (const auto& item : docs) {
    ordered_json j;
    j["name"] = item.label;
    try {
      Cone c = cone_of(item.doc);
      GoodnessReport report = is_good_facewise(c);
      j["report"] = json_goodness(report);
      rep.json(std::move(j));
      if (report.is_good) {
        rep.text(item.label, "GOOD (" + std::to_string(report.checked_faces) +
                                 (report.checked_faces == 1 ? " face checked)"
                                                            : " faces checked)"));
      } else {
        rep.text(item.label,
                 "NOT GOOD: " + goodness_summary(report, c.rank()));
        code = worse(code, 1);
      }
    } catch (const Error& e) {
      err << item.label << ": " << e.what() << '\n';
      code = worse(code, 2);
    }
  }
  rep.flush();
  return code;
}

int cmd_classify(const std::vector<LoadedDocument>& docs, Format format,
                 std::ostream& out, std::ostream& err) {
  Reporter rep(format, docs.size() > 1, out);
  int code = 0;
  for (const auto& item : docs) {
    ordered_json j;
    j["name"] = item.label;
    try {
      MomentInput input = moment_input_of(item.doc);
      ClassificationRecord record = classify(input);
      j["case"] = record.case_name();
      switch (record.which()) {
        case ClassificationRecord::Case::Free3D: {
          const auto& f = record.as<Free3DCase>();
          j["winding"] = f.winding;
          j["winding_defaulted"] = f.winding_defaulted;
          rep.text(item.label,
                   "Free3D n=" + std::to_string(f.winding) +
                       (f.winding_defaulted ? " (winding defaulted)" : ""));
          break;
        }
        case ClassificationRecord::Case::Lens3D: {
          const auto& l = record.as<Lens3DCase>();
          j["q"] = json_int(l.lens.q);
          j["p"] = json_int(l.lens.p);
          j["mu1"] = json_vector(l.mu1);
          j["mu2"] = json_vector(l.mu2);
          j["h1"] = json_group(l.homology.h1);
          j["h2"] = json_group(l.homology.h2);
          rep.text(item.label, "Lens3D q=" + l.lens.q.str() +
                                   " p=" + l.lens.p.str() +
                                   " H2=" + l.homology.h2.to_string());
          break;
        }
        case ClassificationRecord::Case::FreeBundle: {
          const auto& f = record.as<FreeBundleCase>();
          j["base_sphere_dim"] = f.base_sphere_dim;
          j["bundle_class_group"] = json_group(f.bundle_class_group);
          rep.text(item.label,
                   "FreeBundle base=S^" + std::to_string(f.base_sphere_dim) +
                       " classgroup=" + f.bundle_class_group.to_string());
          break;
        }
        case ClassificationRecord::Case::GoodCone: {
          const auto& g = record.as<GoodConeCase>();
          j["rank"] = g.cone.rank();
          j["normals"] = json_vectors(g.cone.normals());
          rep.text(item.label,
                   "GoodCone normals=" + vectors_text(g.cone.normals()));
          break;
        }
        case ClassificationRecord::Case::SplitProduct: {
          const auto& s = record.as<SplitProductCase>();
          j["torus_rank"] = s.torus_rank;
          j["sphere_dim"] = s.sphere_dim;
          rep.text(item.label,
                   "SplitProduct k=" + std::to_string(s.torus_rank) +
                       " model=T^" + std::to_string(s.torus_rank) + "xS^" +
                       std::to_string(s.sphere_dim));
          break;
        }
        case ClassificationRecord::Case::NotRealizable: {
          const auto& nr = record.as<NotRealizableCase>();
          j["report"] = json_goodness(nr.report);
          rep.text(item.label,
                   "NOT REALIZABLE: " +
                       goodness_summary(nr.report, input.cone.rank()));
          code = worse(code, 1);
          break;
        }
      }
      rep.json(std::move(j));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateWedge) {
        j["case"] = "DegenerateWedge";
        j["detail"] = e.what();
        rep.json(std::move(j));
        rep.text(item.label, "DEGENERATE WEDGE (not classifiable)");
        code = worse(code, 1);
      } else {
        err << item.label << ": " << e.what() << '\n';
        code = worse(code, 2);
      }
    }
  }
  rep.flush();
  return code;
}

int cmd_construct(const std::vector<LoadedDocument>& docs, Format format,
                  std::ostream& out, std::ostream& err) {
  Reporter rep(format, docs.size() > 1, out);
  int code = 0;
  for (const auto& item : docs) {
    ordered_json j;
    j["name"] = item.label;
    try {
      Cone c = cone_of(item.doc);
      ReductionData r = build_reduction(c);
      j["N"] = r.num_normals;
      j["W"] = json_matrix(r.weight_map);
      ordered_json kb = ordered_json::array();
      for (const auto& k : r.kernel_basis) kb.push_back(json_rational_vector(k));
      j["kernel_basis"] = std::move(kb);
      j["component_group"] = json_group(r.component_group);
      ordered_json fi = ordered_json::array();
      for (const auto& [face, group] : r.face_isotropies) {
        ordered_json e;
        e["face"] = json_face(face);
        e["group"] = json_group(group);
        fi.push_back(std::move(e));
      }
      j["face_isotropies"] = std::move(fi);
      j["free"] = r.is_free();
      rep.json(std::move(j));

      rep.text(item.label, "N=" + std::to_string(r.num_normals));
      rep.text(item.label, "W=" + r.weight_map.to_string());
      std::string kb_text = "[";
      for (std::size_t i = 0; i < r.kernel_basis.size(); ++i) {
        if (i) kb_text += ',';
        kb_text += to_string(r.kernel_basis[i]);
      }
      kb_text += ']';
      rep.text(item.label, "kernel_basis=" + kb_text);
      rep.text(item.label,
               "component_group=" + r.component_group.to_string());
      for (const auto& [face, group] : r.face_isotropies) {
        std::string active = "{";
        for (std::size_t i = 0; i < face.active_normal_indices.size(); ++i) {
          if (i) active += ',';
          active += std::to_string(face.active_normal_indices[i]);
        }
        active += '}';
        rep.text(item.label,
                 "face " + active + " isotropy=" + group.to_string());
      }
      rep.text(item.label,
               std::string("free=") + (r.is_free() ? "yes" : "no"));
      if (!r.is_free()) code = worse(code, 1);
    } catch (const Error& e) {
      err << item.label << ": " << e.what() << '\n';
      code = worse(code, 2);
    }
  }
  rep.flush();
  return code;
}

int cmd_homology(const std::vector<LoadedDocument>& docs, Format format,
                 std::ostream& out, std::ostream& err) {
  Reporter rep(format, docs.size() > 1, out);
  int code = 0;
  for (const auto& item : docs) {
    try {
      if (item.doc.rank != 2)
        throw Error(ErrorCode::InvalidInput,
                    "homology expects rank-2 documents");
      LatticeVector mu1, mu2;
      if (item.doc.rays && item.doc.rays->size() == 2) {
        // raw ray pair; covers the degenerate mu1 = -mu2 case, which no
        // convex cone can carry
        mu1 = primitivize((*item.doc.rays)[0]);
        mu2 = primitivize((*item.doc.rays)[1]);
      } else {
        Cone c = cone_of(item.doc);
        if (c.rays().size() != 2)
          throw Error(ErrorCode::InvalidInput,
                      "homology expects a wedge (two rays) or a raw ray pair");
        mu1 = c.rays()[0];
        mu2 = c.rays()[1];
      }
      Homology3 h = homology_3d(mu1, mu2);
      ordered_json j;
      j["name"] = item.label;
      j["h1"] = json_group(h.h1);
      j["h2"] = json_group(h.h2);
      rep.json(std::move(j));
      rep.text(item.label,
               "H1=" + h.h1.to_string() + " H2=" + h.h2.to_string());
    } catch (const Error& e) {
      err << item.label << ": " << e.what() << '\n';
      code = worse(code, 2);
    }
  }
  rep.flush();
  return code;
}

int cmd_equiv(const LoadedDocument& a, const LoadedDocument& b, Format format,
              std::ostream& out, std::ostream& err) {
  try {
    EquivalenceResult res = cones_equivalent(cone_of(a.doc), cone_of(b.doc));
    ordered_json j;
    j["first"] = a.label;
    j["second"] = b.label;
    switch (res.status) {
      case EquivalenceResult::Status::Equivalent:
        j["status"] = "equivalent";
        j["witness"] = json_matrix(*res.witness);
        if (format == Format::Json)
          out << j.dump(2) << '\n';
        else
          out << "EQUIVALENT A=" << res.witness->to_string() << '\n';
        return 0;
      case EquivalenceResult::Status::Inequivalent:
        j["status"] = "inequivalent";
        if (format == Format::Json)
          out << j.dump(2) << '\n';
        else
          out << "NOT EQUIVALENT\n";
        return 1;
      case EquivalenceResult::Status::CapExceeded:
        j["status"] = "cap_exceeded";
        if (format == Format::Json)
          out << j.dump(2) << '\n';
        else
          out << "UNDECIDED: ray cap exceeded\n";
        return 2;
    }
    return 2;
  } catch (const Error& e) {
    err << "equiv: " << e.what() << '\n';
    return 2;
  }
}

int cmd_catalog(const std::optional<std::string>& name, Format format,
                std::ostream& out, std::ostream& err) {
  if (!name) {
    auto names = catalog_names();
    if (format == Format::Json) {
      out << ordered_json(names).dump(2) << '\n';
    } else {
      for (const auto& n : names) out << n << '\n';
    }
    return 0;
  }
  auto doc = catalog_lookup(*name);
  if (!doc) {
    err << "catalog: no entry named '" << *name << "'\n";
    return 2;
  }
  out << serialize_cone_document(*doc);
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact classification toolkit for rational polyhedral moment cones"};
  app.name("conetoric");
  app.require_subcommand(1);

  std::string format_name = "text";
  std::vector<std::string> files;
  std::vector<std::string> equiv_files;
  std::string catalog_name;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* check = app.add_subcommand(
      "check-good", "decide whether cones satisfy the face lattice-basis condition");
  check->add_option("inputs", files, "files, catalog names, or -")->required();
  add_format(check);

  CLI::App* cls = app.add_subcommand(
      "classify", "run the classification dispatcher on moment cones");
  cls->add_option("inputs", files, "files, catalog names, or -")->required();
  add_format(cls);

  CLI::App* construct = app.add_subcommand(
      "construct", "emit the reduction data realizing a cone");
  construct->add_option("inputs", files, "files, catalog names, or -")->required();
  add_format(construct);

  CLI::App* equiv = app.add_subcommand(
      "equiv", "search for a unimodular map between two cones");
  equiv->add_option("inputs", equiv_files, "exactly two inputs")
      ->expected(2)
      ->required();
  add_format(equiv);

  CLI::App* homology = app.add_subcommand(
      "homology", "first and second integral cohomology of the 3-dimensional case");
  homology->add_option("inputs", files, "files, catalog names, or -")->required();
  add_format(homology);

  CLI::App* catalog = app.add_subcommand(
      "catalog", "list the example catalog or print one entry");
  catalog->add_option("name", catalog_name, "entry name");
  add_format(catalog);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Format format = format_name == "json" ? Format::Json : Format::Text;
  try {
    if (app.got_subcommand(check))
      return cmd_check_good(load_all(files), format, out, err);
    if (app.got_subcommand(cls))
      return cmd_classify(load_all(files), format, out, err);
    if (app.got_subcommand(construct))
      return cmd_construct(load_all(files), format, out, err);
    if (app.got_subcommand(homology))
      return cmd_homology(load_all(files), format, out, err);
    if (app.got_subcommand(equiv)) {
      auto first = load_documents(equiv_files[0]);
      auto second = load_documents(equiv_files[1]);
      if (first.size() != 1 || second.size() != 1) {
        err << "equiv: each input must hold exactly one document\n";
        return 2;
      }
      return cmd_equiv(first[0], second[0], format, out, err);
    }
    if (app.got_subcommand(catalog))
      return cmd_catalog(catalog->count("name") ? std::optional(catalog_name)
                                                : std::nullopt,
                         format, out, err);
  } catch (const Error& e) {
    err << "conetoric: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace conetoric
