#pragma once

// Arithmetic in the cyclic group Z_n: residue sets, affine maps, units.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sedfkit {

using Int = std::int64_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch(Int lhs, Int rhs);
};

/// Least non-negative residue of x modulo n (n > 0).
constexpr Int mod(Int x, Int n) {
  Int r = x % n;
  return r < 0 ? r + n : r;
}

/// Multiplicative inverse of x modulo n, or nullopt when gcd(x, n) != 1.
std::optional<Int> mod_inverse(Int x, Int n);

/// All m in [1, v) with gcd(m, v) = 1, ascending.
std::vector<Int> units(Int v);

/// A subset of Z_n kept sorted ascending and free of duplicates.
class ResidueSet {
 public:
  ResidueSet() = default;

  /// Throws Error if the modulus is not positive or an element is outside [0, modulus).
  ResidueSet(Int modulus, std::vector<Int> elements);
  ResidueSet(Int modulus, std::initializer_list<Int> elements)
      : ResidueSet(modulus, std::vector<Int>(elements)) {}

  Int modulus() const { return modulus_; }
  const std::vector<Int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Int x) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// {-x : x in S}
  ResidueSet negated() const;
  /// {x + g : x in S}
  ResidueSet translated(Int g) const;
  bool disjoint_from(const ResidueSet& other) const;

  bool operator==(const ResidueSet&) const = default;

 private:
  Int modulus_ = 1;
  std::vector<Int> elements_;
};

/// x -> mult * x + shift over Z_modulus with mult a unit.
class AffineMap {
 public:
  /// Reduces both coefficients; throws Error when gcd(mult, modulus) != 1.
  AffineMap(Int mult, Int shift, Int modulus);

  static AffineMap identity(Int modulus) { return {1, 0, modulus}; }

  Int mult() const { return mult_; }
  Int shift() const { return shift_; }
  Int modulus() const { return modulus_; }

  Int operator()(Int x) const { return mod(mult_ * x + shift_, modulus_); }

  /// (*this after inner)(x) = mult * (inner(x)) + shift.
  AffineMap after(const AffineMap& inner) const;
  AffineMap inverse() const;

  /// "6X+11", "X+1", "9X".
  std::string to_string() const;

  bool operator==(const AffineMap&) const = default;

 private:
  Int mult_;
  Int shift_;
  Int modulus_;
};

ResidueSet apply_affine(const AffineMap& f, const ResidueSet& s);

/// Position-by-position comparison of the sorted element lists; a proper
/// prefix orders first. Throws ModulusMismatch.
std::strong_ordering lex_compare(const ResidueSet& lhs, const ResidueSet& rhs);

/// "{0,1,4,5}"
std::string to_string(const ResidueSet& s);
std::string to_string(const AffineMap& f);

}  // namespace sedfkit
