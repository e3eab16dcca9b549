#pragma once

// JSON, CSV and text emitters for the library types.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sedfkit/dihedral.hpp"
#include "sedfkit/enumeration.hpp"
#include "sedfkit/sedf.hpp"
#include "sedfkit/valuation.hpp"

namespace sedfkit {

using Json = nlohmann::ordered_json;

/// Raised for JSON that is malformed or has the wrong shape.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parses text into JSON, throwing InputError on syntax errors.
Json parse_json(const std::string& text);

Json to_json(const Valuation& v);
Valuation valuation_from_json(const Json& j);

Json to_json(const Sedf& s);
Sedf sedf_from_json(const Json& j);

Json to_json(const EquivalenceWitness& w);
/// Needs the modulus, which the JSON form does not carry.
EquivalenceWitness witness_from_json(const Json& j, Int modulus);

Json to_json(DihedralElement g);
Json to_json(const DihedralSubsetPair& p);
DihedralSubsetPair dihedral_pair_from_json(const Json& j);

/// "{P_0,P_1}" for a negation-closed set.
std::string pair_notation(const ResidueSet& symmetric_set);

/// One class per row in ascending canonical order, labelled "a.i".
struct TableRow {
  std::string number;
  const SedfClass* cls = nullptr;
  std::optional<BlowupSequence> sequence;
};

std::vector<TableRow> table_rows(const EnumerationReport& report, const std::vector<CoverageMatch>& coverage);

/// Coverage may be empty, in which case blowup_sequence is omitted.
Json report_to_json(const EnumerationReport& report, const std::vector<CoverageMatch>& coverage, bool timing);
void write_report_text(std::ostream& out, const EnumerationReport& report,
                       const std::vector<CoverageMatch>& coverage, bool timing);
void write_report_csv(std::ostream& out, const EnumerationReport& report);

enum class TableKind { Table1, Table2 };
enum class OutputFormat { Text, Json, Csv };

struct TableInput {
  EnumerationReport report;
  std::vector<CoverageMatch> coverage;
};

void write_table(std::ostream& out, TableKind kind, OutputFormat format, const std::vector<TableInput>& inputs);

}  // namespace sedfkit
