#pragma once

// Exhaustive enumeration of (a^2+1, 2, a, 1)-SEDFs in Z_{a^2+1} up to affine
// equivalence. Symmetric candidates A = T u (v - T) (plus 0 for odd a) are
// filtered by the unit action, their mates B are found as exact covers of the
// pair-indexed matrix M_A, and the resulting SEDFs are reduced to canonical form.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sedfkit/group.hpp"
#include "sedfkit/sedf.hpp"
#include "sedfkit/valuation.hpp"

namespace sedfkit {

/// P_x = {x, -x} in Z_v, identified by x in [0, v/2].
struct SymmetricPair {
  Int index;
  Int modulus;

  Int size() const { return (index == 0 || 2 * index == modulus) ? 1 : 2; }
  ResidueSet elements() const;
  bool operator==(const SymmetricPair&) const = default;
};

/// min(x, -x) reduced into [0, v/2].
constexpr Int pair_index(Int x, Int v) {
  Int r = mod(x, v);
  return r <= v - r ? r : v - r;
}

/// Sorted pair indices of a negation-closed set.
std::vector<Int> pair_indices(const ResidueSet& symmetric_set);

/// Union of the given pairs in Z_v.
ResidueSet union_of_pairs(const std::vector<Int>& indices, Int v);

/// Rows of M_A: P_1..P_{a^2/2} for even a, P_1..P_{(a^2+1)/2} for odd a.
std::vector<SymmetricPair> pair_universe(Int a);

struct CandidateOptions {
  bool unit_filter = true;
};

/// Reference form of the unit filter: true iff no unit m has mA < A in lex order.
bool passes_unit_filter(const ResidueSet& a_set);

/// Visits A = T u (v - T) (plus {0} for odd a) for every floor(a/2)-subset T of
/// {1, ..., (v-1)/2} in lex order of T, skipping those the unit filter rejects.
/// Returning false from `visit` stops the stream.
void for_each_candidate(Int a, const CandidateOptions& options,
                        const std::function<bool(const ResidueSet&)>& visit);

std::vector<ResidueSet> candidate_sets(Int a, const CandidateOptions& options = {});

/// entry(d, y) = |{P_x in A : P_x = P_{d+y} or P_x = P_{d-y}}| for rows d in
/// the pair universe and columns y outside A.
struct KmMatrix {
  Int a = 0;
  std::vector<Int> rows;
  std::vector<Int> cols;
  std::vector<std::uint8_t> entries;  // row-major, rows.size() x cols.size()

  int at(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }
  /// Entry by pair labels; throws Error for labels not in the matrix.
  int entry(Int row_pair, Int col_pair) const;
};

/// `a_pairs` are the pair indices making up A (0 included for odd a).
KmMatrix build_matrix(const std::vector<Int>& a_pairs, Int a);

/// Every set of columns whose sum is the all-ones vector, as column labels.
/// Columns containing a 2 are never selected.
std::vector<std::vector<Int>> solve_exact_cover(const KmMatrix& m);

/// Symmetric mates B of a symmetric A; each (A, B) is checked with verify_sedf.
std::vector<ResidueSet> mates(const ResidueSet& a_set, Int a);

struct EnumerationOptions {
  int workers = 1;
  bool unit_filter = true;
  /// Odd a only: put P_{v/2} into B up front instead of leaving it to the solver.
  bool preselect_half_pair = false;
};

struct SedfClass {
  Sedf canonical;
  Sedf symmetric;               // lex-least symmetric representative found
  EquivalenceWitness map;       // carries `symmetric` to `canonical`
};

struct EnumerationReport {
  Int a = 0;
  std::vector<SedfClass> classes;  // sorted by canonical form
  std::uint64_t candidate_count = 0;  // candidates that reached the solver
  std::uint64_t solution_count = 0;   // symmetric SEDFs found before dedupe
  std::chrono::milliseconds elapsed{0};
};

EnumerationReport enumerate_sedfs(Int a, const EnumerationOptions& options = {});

/// Ordered factorizations of n into parts >= 2; {{}} for n = 1.
std::vector<std::vector<Int>> ordered_factorizations(Int n);

/// All alternating sequences with II-product and I-product both equal to a.
/// Sequences starting with Blowup II come first, then by length, then by the
/// list of ell values.
std::vector<BlowupSequence> alternating_sequences(Int a);

struct CoverageMatch {
  Sedf canonical;
  std::optional<BlowupSequence> sequence;  // nullopt: no alpha-valuation in the class
};

/// For each class, the first sequence (in alternating_sequences order) whose
/// composed SEDF equals the canonical form, or failing that the first one
/// whose composed SEDF is equivalent to it.
std::vector<CoverageMatch> alpha_coverage(const EnumerationReport& report);

}  // namespace sedfkit
