#include "sedfkit/io.hpp"

#include <ostream>

namespace sedfkit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

Int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<Int>();
}

std::vector<Int> int_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<Int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must hold integers");
    out.push_back(x.get<Int>());
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string sequence_text(const std::optional<BlowupSequence>& seq) {
  return seq ? format_table_sequence(*seq) : "none";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + "  " : s + std::string(width - s.size(), ' ');
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Valuation& v) {
  return Json{{"a", v.a}, {"b", v.b}, {"small", v.small}, {"large", v.large}};
}

Valuation valuation_from_json(const Json& j) {
  Valuation v;
  v.a = int_field(j, "a");
  v.b = int_field(j, "b");
  v.small = int_list(j, "small");
  v.large = int_list(j, "large");
  return v;
}

Json to_json(const Sedf& s) {
  return Json{{"n", s.modulus()}, {"A", s.set_a().elements()}, {"B", s.set_b().elements()}};
}

Sedf sedf_from_json(const Json& j) {
  Int n = int_field(j, "n");
  return Sedf(ResidueSet(n, int_list(j, "A")), ResidueSet(n, int_list(j, "B")));
}

Json to_json(const EquivalenceWitness& w) {
  return Json{{"alpha", w.map.mult()}, {"beta", w.map.shift()}, {"swapped", w.swapped}};
}

EquivalenceWitness witness_from_json(const Json& j, Int modulus) {
  const Json& swapped = field(j, "swapped");
  if (!swapped.is_boolean()) throw InputError("field \"swapped\" must be a boolean");
  return {AffineMap(int_field(j, "alpha"), int_field(j, "beta"), modulus), swapped.get<bool>()};
}

Json to_json(DihedralElement g) { return Json{{"flip", g.flip}, {"rot", g.rot}}; }

Json to_json(const DihedralSubsetPair& p) {
  Json s = Json::array();
  Json t = Json::array();
  for (const auto& g : p.s) s.push_back(to_json(g));
  for (const auto& g : p.t) t.push_back(to_json(g));
  return Json{{"n", p.n}, {"S", s}, {"T", t}};
}

DihedralSubsetPair dihedral_pair_from_json(const Json& j) {
  DihedralSubsetPair p;
  p.n = int_field(j, "n");
  if (p.n < 1) throw InputError("n must be positive");
  auto side = [&](const char* key) {
    const Json& arr = field(j, key);
    if (!arr.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
    std::vector<DihedralElement> out;
    for (const auto& e : arr) {
      Int flip = int_field(e, "flip");
      if (flip != 0 && flip != 1) throw InputError("flip must be 0 or 1");
      out.push_back({static_cast<int>(flip), mod(int_field(e, "rot"), p.n)});
    }
    return make_set(std::move(out));
  };
  p.s = side("S");
  p.t = side("T");
  return p;
}

std::string pair_notation(const ResidueSet& symmetric_set) {
  std::string out = "{";
  bool first = true;
  for (Int x : pair_indices(symmetric_set)) {
    if (!first) out += ',';
    first = false;
    out += "P_" + std::to_string(x);
  }
  return out + "}";
}

std::vector<TableRow> table_rows(const EnumerationReport& report, const std::vector<CoverageMatch>& coverage) {
  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    TableRow row;
    row.number = std::to_string(report.a) + "." + std::to_string(i + 1);
    row.cls = &report.classes[i];
    for (const auto& m : coverage) {
      if (m.canonical == report.classes[i].canonical) row.sequence = m.sequence;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json report_to_json(const EnumerationReport& report, const std::vector<CoverageMatch>& coverage, bool timing) {
  Json classes = Json::array();
  for (const auto& row : table_rows(report, coverage)) {
    Json c{{"canonical", to_json(row.cls->canonical)},
           {"symmetric", to_json(row.cls->symmetric)},
           {"map", to_json(row.cls->map)}};
    if (!coverage.empty()) {
      c["blowup_sequence"] = row.sequence ? Json(format_table_sequence(*row.sequence)) : Json(nullptr);
    }
    classes.push_back(std::move(c));
  }
  Json j{{"a", report.a},
         {"count", report.classes.size()},
         {"classes", std::move(classes)},
         {"candidates_scanned", report.candidate_count}};
  if (timing) j["elapsed_ms"] = report.elapsed.count();
  return j;
}

void write_report_text(std::ostream& out, const EnumerationReport& report,
                       const std::vector<CoverageMatch>& coverage, bool timing) {
  out << "a = " << report.a << ": " << report.classes.size() << " class"
      << (report.classes.size() == 1 ? "" : "es") << ", " << report.candidate_count << " candidates scanned";
  if (timing) out << ", " << report.elapsed.count() << " ms";
  out << "\n";
  for (const auto& row : table_rows(report, coverage)) {
    const SedfClass& c = *row.cls;
    out << pad(row.number, 6) << to_string(c.canonical) << "\n";
    out << "      symmetric " << pair_notation(c.symmetric.set_a()) << ", " << pair_notation(c.symmetric.set_b())
        << "  map " << to_string(c.map) << "\n";
    if (!coverage.empty()) out << "      sequence " << sequence_text(row.sequence) << "\n";
  }
}

void write_report_csv(std::ostream& out, const EnumerationReport& report) {
  out << "number,symmetric_A,symmetric_B,canonical_A,canonical_B,mapping\n";
  for (const auto& row : table_rows(report, {})) {
    const SedfClass& c = *row.cls;
    out << row.number << ',' << csv_field(pair_notation(c.symmetric.set_a())) << ','
        << csv_field(pair_notation(c.symmetric.set_b())) << ',' << csv_field(to_string(c.canonical.set_a())) << ','
        << csv_field(to_string(c.canonical.set_b())) << ',' << csv_field(to_string(c.map)) << "\n";
  }
}

void write_table(std::ostream& out, TableKind kind, OutputFormat format, const std::vector<TableInput>& inputs) {
  if (format == OutputFormat::Json) {
    Json rows = Json::array();
    for (const auto& in : inputs) {
      for (const auto& row : table_rows(in.report, in.coverage)) {
        const SedfClass& c = *row.cls;
        if (kind == TableKind::Table1) {
          rows.push_back(Json{{"number", row.number},
                              {"symmetric", {pair_notation(c.symmetric.set_a()), pair_notation(c.symmetric.set_b())}},
                              {"canonical", to_json(c.canonical)},
                              {"mapping", to_string(c.map)}});
        } else {
          rows.push_back(Json{{"number", row.number},
                              {"blowup_sequence", row.sequence ? Json(format_table_sequence(*row.sequence))
                                                               : Json(nullptr)}});
        }
      }
    }
    out << rows.dump(2) << "\n";
    return;
  }
  if (format == OutputFormat::Csv) {
    out << (kind == TableKind::Table1 ? "number,symmetric_A,symmetric_B,canonical_A,canonical_B,mapping\n"
                                      : "number,canonical_A,canonical_B,blowup_sequence\n");
  } else {
    out << (kind == TableKind::Table1 ? pad("number", 8) + pad("symmetric form", 36) + pad("canonical form", 60) +
                                            "mapping\n"
                                      : pad("number", 8) + "blowup sequence\n");
  }
  for (const auto& in : inputs) {
    for (const auto& row : table_rows(in.report, in.coverage)) {
      const SedfClass& c = *row.cls;
      std::string sym = pair_notation(c.symmetric.set_a()) + ", " + pair_notation(c.symmetric.set_b());
      std::string canon = "(" + to_string(c.canonical.set_a()) + ", " + to_string(c.canonical.set_b()) + ")";
      if (format == OutputFormat::Csv) {
        out << row.number << ',';
        if (kind == TableKind::Table1) {
          out << csv_field(pair_notation(c.symmetric.set_a())) << ','
              << csv_field(pair_notation(c.symmetric.set_b())) << ','
              << csv_field(to_string(c.canonical.set_a())) << ',' << csv_field(to_string(c.canonical.set_b()))
              << ',' << csv_field(to_string(c.map)) << "\n";
        } else {
          out << csv_field(to_string(c.canonical.set_a())) << ',' << csv_field(to_string(c.canonical.set_b()))
              << ',' << csv_field(sequence_text(row.sequence)) << "\n";
        }
      } else if (kind == TableKind::Table1) {
        out << pad(row.number, 8) << pad(sym, 36) << pad(canon, 60) << to_string(c.map) << "\n";
      } else {
        out << pad(row.number, 8) << sequence_text(row.sequence) << "\n";
      }
    }
  }
}

}  // namespace sedfkit
