#include "sedfkit/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sedfkit/io.hpp"

namespace sedfkit {

namespace {

struct Options {
  std::string format = "text";
  std::string output;
  Int a = 0;
  Int a_min = 1;
  Int a_max = 0;
  Int k = 0;
  Int n = 0;
  int workers = 1;
  std::string sequence;
  std::string kind;
  std::string table = "table1";
  bool no_timing = false;
  bool no_unit_filter = false;
  bool preselect_half_pair = false;
  bool check_equivalence = false;
  bool from_stdin = false;
};

Json read_json(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_json(text);
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> allowed) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--output", o.output, "Write the result to a file instead of stdout");
}

OutputFormat output_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return OutputFormat::Text;
}

EnumerationOptions enumeration_options(const Options& o) {
  EnumerationOptions e;
  e.workers = o.workers;
  e.unit_filter = !o.no_unit_filter;
  e.preselect_half_pair = o.preselect_half_pair;
  return e;
}

void warn_runtime(Int a, std::ostream& err) {
  if (a > 14) err << "warning: a = " << a << " is beyond the tested range and may run for a very long time\n";
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  warn_runtime(o.a, err);
  EnumerationReport report = enumerate_sedfs(o.a, enumeration_options(o));
  if (o.format == "csv") {
    write_report_csv(out, report);
    return 0;
  }
  auto coverage = alpha_coverage(report);
  if (o.format == "json") {
    out << report_to_json(report, coverage, !o.no_timing).dump(2) << "\n";
  } else {
    write_report_text(out, report, coverage, !o.no_timing);
  }
  return 0;
}

void print_valuation(const Options& o, const Valuation& v, std::ostream& out) {
  if (o.format == "json") {
    out << to_json(v).dump() << "\n";
  } else {
    out << to_string(v) << "\n";
  }
}

Valuation read_valid_valuation(std::istream& in) {
  Valuation v = valuation_from_json(read_json(in));
  if (auto r = verify_valuation(v); !r) throw InputError("invalid valuation: " + r.reason);
  return v;
}

Sedf read_valid_sedf(const Json& j) {
  Sedf s = sedf_from_json(j);
  if (auto r = verify_sedf(s); !r) throw InputError("invalid SEDF: " + r.reason);
  return s;
}

int cmd_blowup(const Options& o, std::istream& in, std::ostream& out) {
  BlowupSequence steps;
  try {
    steps = parse_sequence(o.sequence);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  Valuation v = Valuation::trivial();
  if (o.from_stdin) v = read_valid_valuation(in);
  for (const auto& s : steps) v = blowup(v, s);
  print_valuation(o, v, out);
  return 0;
}

int cmd_project(const Options& o, std::istream& in, std::ostream& out) {
  Valuation v = read_valid_valuation(in);
  Projection p = project(v, o.kind == "I" ? BlowupKind::I : BlowupKind::II);
  if (o.format == "json") {
    out << Json{{"ell", p.ell}, {"valuation", to_json(p.valuation)}}.dump() << "\n";
  } else {
    out << "ell = " << p.ell << "\n" << to_string(p.valuation) << "\n";
  }
  return 0;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  Valuation v = read_valid_valuation(in);
  StructureReport s = detect_structure(v);
  BlowupSequence seq = decompose(v);
  const char* kind = s.kind == StructureReport::Kind::TypeI    ? "TypeI"
                     : s.kind == StructureReport::Kind::TypeII ? "TypeII"
                                                               : "Trivial";
  std::optional<CanonicalForm> canon;
  if (v.a == v.b) canon = canonical_form(to_sedf(v));
  if (o.format == "json") {
    Json j{{"kind", kind},
           {"ell", s.ell ? Json(*s.ell) : Json(nullptr)},
           {"sequence", format_steps(seq)},
           {"table_sequence", format_table_sequence(seq)}};
    j["canonical"] = canon ? to_json(canon->sedf) : Json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << "kind " << kind;
    if (s.ell) out << ", ell = " << *s.ell;
    out << "\nsequence " << format_steps(seq) << "  " << format_table_sequence(seq) << "\n";
    if (canon) out << "canonical " << to_string(canon->sedf) << "\n";
  }
  return 0;
}

int cmd_canonical(const Options& o, std::istream& in, std::ostream& out) {
  Sedf s = read_valid_sedf(read_json(in));
  CanonicalForm c = canonical_form(s);
  Symmetrized sym = symmetrize(s);
  if (o.format == "json") {
    out << Json{{"canonical", to_json(c.sedf)},
                {"witness", to_json(c.witness)},
                {"symmetric", to_json(sym.sedf)},
                {"shift", sym.shift}}
               .dump()
        << "\n";
  } else {
    out << "canonical " << to_string(c.sedf) << "\nwitness " << to_string(c.witness) << "\nsymmetric "
        << to_string(sym.sedf) << " (shift " << sym.shift << ")\n";
  }
  return 0;
}

int cmd_equivalent(const Options& o, std::istream& in, std::ostream& out) {
  Json j = read_json(in);
  Json first, second;
  if (j.is_array() && j.size() == 2) {
    first = j[0];
    second = j[1];
  } else if (j.is_object() && j.contains("first") && j.contains("second")) {
    first = j["first"];
    second = j["second"];
  } else {
    throw InputError("expected [sedf, sedf] or {\"first\": sedf, \"second\": sedf}");
  }
  Sedf s1 = read_valid_sedf(first);
  Sedf s2 = read_valid_sedf(second);
  auto w = equivalent(s1, s2);
  if (o.format == "json") {
    out << Json{{"equivalent", w.has_value()}, {"witness", w ? to_json(*w) : Json(nullptr)}}.dump() << "\n";
  } else if (w) {
    out << "equivalent: " << to_string(*w) << "\n";
  } else {
    out << "not equivalent\n";
  }
  return 0;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  Json j = read_json(in);
  if (!j.is_object()) throw InputError("expected a JSON object");
  std::string kind;
  ValidityReport r;
  if (j.contains("small")) {
    kind = "valuation";
    r = verify_valuation(valuation_from_json(j));
  } else if (j.contains("S")) {
    kind = "near-factorization";
    r = verify_near_factorization(dihedral_pair_from_json(j));
  } else if (j.contains("A")) {
    kind = "sedf";
    r = verify_sedf(sedf_from_json(j));
  } else {
    throw InputError("cannot tell what kind of object this is");
  }
  if (o.format == "json") {
    Json res{{"kind", kind}, {"valid", r.valid}};
    if (!r.valid) res["reason"] = r.reason;
    out << res.dump() << "\n";
  } else {
    out << kind << ": " << (r.valid ? "valid" : "invalid: " + r.reason) << "\n";
  }
  return r.valid ? 0 : 1;
}

int cmd_dihedral(const Options& o, std::ostream& out) {
  const bool json = o.format == "json";
  if (o.n > 0) {
    DihedralSubsetPair p = cghk_construction(o.n, o.k);
    ValidityReport r = verify_near_factorization(p);
    if (json) {
      out << Json{{"near_factorization", to_json(p)}, {"valid", r.valid}}.dump() << "\n";
    } else {
      out << "D_" << p.n << " tile construction, k = " << o.k << "\nA = " << to_string(p.s)
          << "\nB = " << to_string(p.t) << "\n" << (r.valid ? "valid" : "invalid: " + r.reason) << "\n";
    }
    return r.valid ? 0 : 1;
  }
  DihedralSedf sedf = hjn_construction(o.k);
  DihedralSubsetPair nf = sedf.near_factorization();
  ValidityReport r = verify_near_factorization(nf);
  std::optional<EquivalenceTranscript> tr;
  if (o.check_equivalence) tr = equivalence_witness(o.k);
  if (json) {
    Json j{{"k", o.k},
           {"n", sedf.n},
           {"sedf", to_json(DihedralSubsetPair{sedf.n, sedf.first, sedf.second})},
           {"near_factorization", to_json(nf)},
           {"valid", r.valid}};
    if (tr) {
      j["equivalence"] = {{"h", to_string(tr->h)},
                          {"first_times_h", to_string(tr->first_times_h)},
                          {"h_times_second_inv", to_string(tr->h_times_second_inv)},
                          {"tile", to_json(DihedralSubsetPair{tr->n, tr->tile_a, tr->tile_b})},
                          {"equivalent", true}};
    }
    out << j.dump() << "\n";
  } else {
    out << "D_" << sedf.n << " SEDF, k = " << o.k << "\nA1 = " << to_string(sedf.first)
        << "\nA2 = " << to_string(sedf.second) << "\nA2^-1 = " << to_string(nf.t) << "\n"
        << (r.valid ? "valid" : "invalid: " + r.reason) << "\n";
    if (tr) {
      out << "h = " << to_string(tr->h) << "\nA1 h = " << to_string(tr->first_times_h)
          << "\nh A2^-1 = " << to_string(tr->h_times_second_inv) << "\nequivalent\n";
    }
  }
  return r.valid ? 0 : 1;
}

int cmd_tables(const Options& o, std::ostream& out, std::ostream& err) {
  warn_runtime(o.a_max, err);
  TableKind kind = o.table == "table2" ? TableKind::Table2 : TableKind::Table1;
  std::vector<TableInput> inputs;
  for (Int a = o.a_min; a <= o.a_max; ++a) {
    TableInput t;
    t.report = enumerate_sedfs(a, enumeration_options(o));
    if (kind == TableKind::Table2) t.coverage = alpha_coverage(t.report);
    inputs.push_back(std::move(t));
  }
  write_table(out, kind, output_format(o.format), inputs);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Alpha-valuations of complete bipartite graphs and the SEDFs they induce"};
  app.name("sedfkit");
  app.require_subcommand(1, 1);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate SEDF classes in Z_{a^2+1}");
  enumerate->add_option("--a", o.a, "Set size a")->required()->check(CLI::Range(Int{1}, Int{1000}));
  enumerate->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 1024));
  enumerate->add_flag("--no-timing", o.no_timing, "Omit elapsed time");
  enumerate->add_flag("--no-unit-filter", o.no_unit_filter, "Disable the unit-orbit candidate filter");
  enumerate->add_flag("--preselect-half-pair", o.preselect_half_pair, "Odd a: force P_{v/2} into B up front");
  add_format(enumerate, o, {"text", "json", "csv"});
  add_output(enumerate, o);

  auto* blowup_cmd = app.add_subcommand("blowup", "Compose a blowup sequence");
  blowup_cmd->add_option("--sequence", o.sequence, "Steps such as \"II:4,I:4\" or \"(4,4)\"")->required();
  blowup_cmd->add_flag("--from-stdin", o.from_stdin, "Start from a valuation read from stdin");
  add_format(blowup_cmd, o, {"text", "json"});
  add_output(blowup_cmd, o);

  auto* project_cmd = app.add_subcommand("project", "Project a valuation read from stdin");
  project_cmd->add_option("--kind", o.kind, "Projection kind")->required()->check(CLI::IsMember({"I", "II"}));
  add_format(project_cmd, o, {"text", "json"});
  add_output(project_cmd, o);

  auto* classify = app.add_subcommand("classify", "Detect structure and decompose a valuation read from stdin");
  add_format(classify, o, {"text", "json"});
  add_output(classify, o);

  auto* canonical = app.add_subcommand("canonical", "Canonical form of an SEDF read from stdin");
  add_format(canonical, o, {"text", "json"});
  add_output(canonical, o);

  auto* equiv = app.add_subcommand("equivalent", "Affine equivalence of two SEDFs read from stdin");
  add_format(equiv, o, {"text", "json"});
  add_output(equiv, o);

  auto* verify = app.add_subcommand("verify", "Verify a valuation, SEDF or dihedral pair read from stdin");
  add_format(verify, o, {"text", "json"});
  add_output(verify, o);

  auto* dihedral = app.add_subcommand("dihedral", "Dihedral constructions");
  dihedral->add_option("--k", o.k, "Parameter k")->required()->check(CLI::Range(Int{1}, Int{100000}));
  dihedral->add_option("--n", o.n, "Build the tile construction in D_n instead")->check(CLI::Range(Int{1}, Int{100000}));
  dihedral->add_flag("--check-equivalence", o.check_equivalence, "Show the equivalence with the tile construction");
  add_format(dihedral, o, {"text", "json"});
  add_output(dihedral, o);

  auto* tables = app.add_subcommand("tables", "Reproduce the class and blowup-sequence tables");
  tables->add_option("--table", o.table, "Which table")->check(CLI::IsMember({"table1", "table2"}));
  tables->add_option("--a-max", o.a_max, "Largest a")->required()->check(CLI::Range(Int{1}, Int{1000}));
  tables->add_option("--a-min", o.a_min, "Smallest a")->check(CLI::Range(Int{1}, Int{1000}));
  tables->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 1024));
  tables->add_flag("--no-unit-filter", o.no_unit_filter, "Disable the unit-orbit candidate filter");
  add_format(tables, o, {"text", "json", "csv"});
  add_output(tables, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (o.n > 0 && o.check_equivalence) {
    err << "--check-equivalence cannot be combined with --n\n";
    return 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (*enumerate) status = cmd_enumerate(o, buffer, err);
    else if (*blowup_cmd) status = cmd_blowup(o, in, buffer);
    else if (*project_cmd) status = cmd_project(o, in, buffer);
    else if (*classify) status = cmd_classify(o, in, buffer);
    else if (*canonical) status = cmd_canonical(o, in, buffer);
    else if (*equiv) status = cmd_equivalent(o, in, buffer);
    else if (*verify) status = cmd_verify(o, in, buffer);
    else if (*dihedral) status = cmd_dihedral(o, buffer);
    else if (*tables) status = cmd_tables(o, buffer, err);
  } catch (const std::exception& e) {
    out << buffer.str();
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write " << o.output << "\n";
      return 1;
    }
  }
  return status;
}

}  // namespace sedfkit
