#pragma once

// Alpha-valuations of complete bipartite graphs K_{a,b}, the blowup and
// projection operations between them, and their decomposition into
// alternating blowup sequences.

#include <optional>
#include <string>
#include <vector>

#include "sedfkit/group.hpp"

namespace sedfkit {

class Sedf;

/// Raised when a valuation does not have the run structure that every valid
/// alpha-valuation of K_{a,b} is known to have.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Outcome of a verifier: valid, or the first violated condition.
struct ValidityReport {
  bool valid = true;
  std::string reason;

  static ValidityReport ok() { return {}; }
  static ValidityReport fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return valid; }
};

/// Labels of K_{a,b} in {0, ..., ab}: `small` holds the a labels at or below
/// the threshold, `large` the b labels above it. Both sides sorted ascending.
struct Valuation {
  Int a = 0;
  Int b = 0;
  std::vector<Int> small;
  std::vector<Int> large;

  /// Sorts both sides and takes a, b from their sizes.
  static Valuation from_sides(std::vector<Int> small, std::vector<Int> large);

  /// The trivial valuation ({0}, {1}) of K_{1,1}.
  static Valuation trivial() { return {1, 1, {0}, {1}}; }

  Int edges() const { return a * b; }
  bool operator==(const Valuation&) const = default;
};

enum class BlowupKind { I, II };

struct BlowupStep {
  BlowupKind kind;
  Int ell;

  bool operator==(const BlowupStep&) const = default;
};

using BlowupSequence = std::vector<BlowupStep>;

struct StructureReport {
  enum class Kind { TypeI, TypeII, Trivial };
  Kind kind = Kind::Trivial;
  std::optional<Int> ell;

  bool operator==(const StructureReport&) const = default;
};

struct Projection {
  Valuation valuation;
  Int ell;
};

/// Checks sizes, label range, the threshold, and that the ab cross
/// differences are exactly 1..ab. Reports the first repeated or missing difference.
ValidityReport verify_valuation(const Valuation& v);

/// Relabels x -> ab - x; the sides swap, giving a valuation of K_{b,a}.
Valuation phi(const Valuation& v);

/// True iff v2 == v1 or v2 == phi(v1). Throws Error on a dimension mismatch.
bool valuations_equivalent(const Valuation& v1, const Valuation& v2);

/// Blowup I expands every small label into a run of ell labels starting at
/// it (after scaling by ell); Blowup II expands every large label into a run
/// ending at it. Throws Error for ell < 2.
Valuation blowup(const Valuation& v, BlowupStep step);

/// Inverse of blowup. Throws StructureError when v is not of the requested type.
Projection project(const Valuation& v, BlowupKind kind);

/// Type I: small is a union of ell-runs starting at multiples of ell and all
/// large labels are multiples of ell (ell = length of the run ending at
/// max(small)). Type II is the mirror image. Throws StructureError if neither holds.
StructureReport detect_structure(const Valuation& v);

/// Blowup-order steps rebuilding v from K_{1,1}; kinds strictly alternate.
BlowupSequence decompose(const Valuation& v);

/// Folds blowup over the steps, starting from K_{1,1}.
Valuation compose(const BlowupSequence& steps);

/// (A, B) = (small, large) in Z_{a^2+1}. Throws Error when a != b.
Sedf to_sedf(const Valuation& v);

/// "II:4,I:4"
std::string format_steps(const BlowupSequence& steps);

/// "(4,4)" when the sequence alternates and starts with Blowup II (or is
/// empty); otherwise falls back to format_steps.
std::string format_table_sequence(const BlowupSequence& steps);

/// Accepts "II:4,I:4" or the table shorthand "(4,4)", which is read as
/// alternating kinds starting with II. Throws Error on malformed text.
BlowupSequence parse_sequence(const std::string& text);

std::string to_string(BlowupKind kind);
std::string to_string(const Valuation& v);

}  // namespace sedfkit
