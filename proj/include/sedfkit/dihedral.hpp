#pragma once

// Dihedral groups D_n = <a, b | a^2 = b^n = e, aba = b^-1>, near-factorizations
// in them and the two known SEDF constructions.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sedfkit/group.hpp"
#include "sedfkit/valuation.hpp"

namespace sedfkit {

/// a^flip b^rot, the normal form of every element of D_n.
struct DihedralElement {
  int flip = 0;
  Int rot = 0;

  static DihedralElement identity() { return {0, 0}; }
  static DihedralElement rotation(Int i, Int n) { return {0, mod(i, n)}; }
  static DihedralElement reflection(Int i, Int n) { return {1, mod(i, n)}; }

  // rotations first (ascending), then reflections
  auto operator<=>(const DihedralElement&) const = default;
};

/// Sorted, duplicate-free list of elements.
using DihedralSet = std::vector<DihedralElement>;

DihedralSet make_set(std::vector<DihedralElement> elements);

/// (f1, i1)(f2, i2) = (f1 xor f2, i2 + (-1)^f2 i1)
DihedralElement dihedral_mul(DihedralElement g, DihedralElement h, Int n);
DihedralElement dihedral_inv(DihedralElement g, Int n);

/// All 2n elements in normal order.
std::vector<DihedralElement> dihedral_elements(Int n);

DihedralSet left_mul(DihedralElement g, const DihedralSet& s, Int n);
DihedralSet right_mul(const DihedralSet& s, DihedralElement h, Int n);
DihedralSet inverse_set(const DihedralSet& s, Int n);

/// (S, T) in D_n; a near-factorization when ST = D_n \ {e} with every product distinct.
struct DihedralSubsetPair {
  Int n = 0;
  DihedralSet s;
  DihedralSet t;

  bool operator==(const DihedralSubsetPair&) const = default;
};

ValidityReport verify_near_factorization(const DihedralSubsetPair& p);

/// Tile construction: A = {b^i : 1 <= i <= (k-1)/2} u {ab^i : 0 <= i <= (k-1)/2},
/// B = {b^(ik) : 0 <= ik < n} u {ab^(ik) : 0 < ik < n}. Throws Error unless k | 2n-1.
DihedralSubsetPair cghk_construction(Int n, Int k);

/// An SEDF (A1, A2) in D_n; (A1, A2^-1) is the associated near-factorization.
struct DihedralSedf {
  Int n = 0;
  DihedralSet first;
  DihedralSet second;

  DihedralSubsetPair near_factorization() const;
};

/// The published (k^2+1, 2, k, 1)-SEDF in D_{(k^2+1)/2}. Throws Error unless k is odd and >= 3.
DihedralSedf hjn_construction(Int k);

struct EquivalenceTranscript {
  Int k = 0;
  Int n = 0;
  DihedralElement h;
  DihedralSet first_times_h;        // A1 h
  DihedralSet tile_a;               // A of the tile construction
  DihedralSet h_times_second_inv;   // h A2^-1
  DihedralSet tile_b;               // B of the tile construction
};

/// h = ab^((k-1)/2) with A1 h = A and h A2^-1 = B. Throws Error if either
/// equality fails.
EquivalenceTranscript equivalence_witness(Int k);

/// p2 = (g S' h, h^-1 T' g^-1) where (S', T') = p1, or (T^-1, S^-1) of p1 when inverted.
struct NearFactorizationWitness {
  DihedralElement g;
  DihedralElement h;
  bool inverted = false;
};

/// Brute-force scan: inverted = false first, then g, then h in normal order.
std::optional<NearFactorizationWitness> near_factorizations_equivalent(const DihedralSubsetPair& p1,
                                                                       const DihedralSubsetPair& p2);

/// "e", "b^i", "a", "ab^i"
std::string to_string(DihedralElement g);
/// "{e,b^5,ab^5}"
std::string to_string(const DihedralSet& s);

/// Accepts the forms above plus "b", "ab", "1"; throws Error otherwise.
DihedralElement parse_dihedral_element(const std::string& text, Int n);

}  // namespace sedfkit
