#include "sedfkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

namespace sedfkit {

ModulusMismatch::ModulusMismatch(Int lhs, Int rhs)
    : Error("modulus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

std::optional<Int> mod_inverse(Int x, Int n) {
  if (n <= 0) return std::nullopt;
  if (n == 1) return 0;
  // extended Euclid on (x mod n, n)
  Int old_r = mod(x, n), r = n;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, n);
}

std::vector<Int> units(Int v) {
  std::vector<Int> out;
  for (Int m = 1; m < v; ++m) {
    if (std::gcd(m, v) == 1) out.push_back(m);
  }
  return out;
}

ResidueSet::ResidueSet(Int modulus, std::vector<Int> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus_ <= 0) {
    throw Error("residue set modulus must be positive, got " + std::to_string(modulus_));
  }
  for (Int x : elements_) {
    if (x < 0 || x >= modulus_) {
      throw Error("residue " + std::to_string(x) + " outside [0, " + std::to_string(modulus_) + ")");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool ResidueSet::contains(Int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

ResidueSet ResidueSet::negated() const {
  std::vector<Int> out;
  out.reserve(elements_.size());
  for (Int x : elements_) out.push_back(mod(-x, modulus_));
  return {modulus_, std::move(out)};
}

ResidueSet ResidueSet::translated(Int g) const {
  std::vector<Int> out;
  out.reserve(elements_.size());
  for (Int x : elements_) out.push_back(mod(x + g, modulus_));
  return {modulus_, std::move(out)};
}

bool ResidueSet::disjoint_from(const ResidueSet& other) const {
  auto i = elements_.begin();
  auto j = other.elements_.begin();
  while (i != elements_.end() && j != other.elements_.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

AffineMap::AffineMap(Int mult, Int shift, Int modulus) : modulus_(modulus) {
  if (modulus <= 0) throw Error("affine map modulus must be positive");
  mult_ = mod(mult, modulus);
  shift_ = mod(shift, modulus);
  if (std::gcd(mult_, modulus_) != 1 && modulus_ != 1) {
    throw Error("affine multiplier " + std::to_string(mult) + " is not a unit modulo " +
                std::to_string(modulus));
  }
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  if (inner.modulus_ != modulus_) throw ModulusMismatch(modulus_, inner.modulus_);
  return {mult_ * inner.mult_, mult_ * inner.shift_ + shift_, modulus_};
}

AffineMap AffineMap::inverse() const {
  Int inv = *mod_inverse(mult_, modulus_);
  return {inv, -inv * shift_, modulus_};
}

std::string AffineMap::to_string() const {
  std::string s = mult_ == 1 ? "X" : std::to_string(mult_) + "X";
  if (shift_ != 0) s += "+" + std::to_string(shift_);
  return s;
}

ResidueSet apply_affine(const AffineMap& f, const ResidueSet& s) {
  if (f.modulus() != s.modulus()) throw ModulusMismatch(f.modulus(), s.modulus());
  std::vector<Int> out;
  out.reserve(s.size());
  for (Int x : s) out.push_back(f(x));
  return {s.modulus(), std::move(out)};
}

std::strong_ordering lex_compare(const ResidueSet& lhs, const ResidueSet& rhs) {
  if (lhs.modulus() != rhs.modulus()) throw ModulusMismatch(lhs.modulus(), rhs.modulus());
  return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::string to_string(const ResidueSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s.elements()[i];
  }
  os << '}';
  return os.str();
}

std::string to_string(const AffineMap& f) { return f.to_string(); }

}  // namespace sedfkit
