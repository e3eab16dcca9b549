#pragma once

// (k^2+1, 2, k, 1) strong external difference families in Z_n: verification,
// symmetric normal form, affine canonical forms and equivalence.

#include <optional>
#include <utility>

#include "sedfkit/group.hpp"
#include "sedfkit/valuation.hpp"

namespace sedfkit {

/// Two subsets of Z_n. The pair is not required to be a valid SEDF; use
/// verify_sedf for that.
class Sedf {
 public:
  /// Throws ModulusMismatch if the sets live in different groups.
  Sedf(ResidueSet a, ResidueSet b);
  Sedf(Int n, std::vector<Int> a, std::vector<Int> b)
      : Sedf(ResidueSet(n, std::move(a)), ResidueSet(n, std::move(b))) {}

  Int modulus() const { return set_a_.modulus(); }
  const ResidueSet& set_a() const { return set_a_; }
  const ResidueSet& set_b() const { return set_b_; }

  Sedf swapped() const { return {set_b_, set_a_}; }

  bool operator==(const Sedf&) const = default;

 private:
  ResidueSet set_a_;
  ResidueSet set_b_;
};

/// Compares set_a first, then set_b.
std::strong_ordering lex_compare(const Sedf& lhs, const Sedf& rhs);

/// Affine map plus an optional exchange of the two sets. Applying it maps
/// (A, B) to (f(A), f(B)), or to (f(B), f(A)) when swapped.
struct EquivalenceWitness {
  AffineMap map;
  bool swapped = false;

  bool operator==(const EquivalenceWitness&) const = default;
};

Sedf apply(const EquivalenceWitness& w, const Sedf& s);

/// Valid iff the sets are disjoint, |A| = |B| = k, n = k^2 + 1 and the
/// external differences y - x (y in B, x in A) hit every non-zero residue once.
ValidityReport verify_sedf(const Sedf& s);

struct Symmetrized {
  Sedf sedf;
  Int shift;
};

/// Smallest g with g + A and g + B both closed under negation. Throws Error
/// if there is none, which cannot happen for a valid SEDF.
Symmetrized symmetrize(const Sedf& s);

bool is_symmetric(const ResidueSet& s);

struct CanonicalForm {
  Sedf sedf;
  EquivalenceWitness witness;  // carries the input to `sedf`
};

/// Lexicographically least image of (A, B) or (B, A) under Aff(n), ordering
/// pairs by their first set and then by their second. Among equal images the
/// first map found (multiplier ascending) wins and the unswapped pair is
/// preferred.
CanonicalForm canonical_form(const Sedf& s);

/// A witness carrying s1 to s2, or nullopt if they are not affine equivalent.
/// Throws ModulusMismatch.
std::optional<EquivalenceWitness> equivalent(const Sedf& s1, const Sedf& s2);

/// (A, -B); throws Error unless A + (-B) covers every non-zero residue once.
std::pair<ResidueSet, ResidueSet> to_near_factorization(const Sedf& s);

std::string to_string(const Sedf& s);
std::string to_string(const EquivalenceWitness& w);

}  // namespace sedfkit
