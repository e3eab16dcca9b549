#include "sedfkit/sedf.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace sedfkit {

namespace {

std::vector<Int> image(const std::vector<Int>& xs, Int mult, Int shift, Int n) {
  std::vector<Int> out;
  out.reserve(xs.size());
  for (Int x : xs) out.push_back(mod(mult * x + shift, n));
  std::sort(out.begin(), out.end());
  return out;
}

struct BestImage {
  std::vector<Int> first;
  std::vector<Int> second;
  Int mult = 1;
  Int shift = 0;
};

// Least (f(first), f(second)) over f in Aff(n). A least image of `first`
// contains 0, so only shifts sending some element of `first` to 0 are tried.
BestImage best_image(const ResidueSet& first, const ResidueSet& second) {
  const Int n = first.modulus();
  std::vector<Int> mults = units(n);
  if (mults.empty()) mults.push_back(1);
  std::vector<Int> zero_shift{0};

  BestImage best;
  bool have = false;
  for (Int m : mults) {
    std::vector<Int> shifts;
    if (first.empty()) {
      shifts = zero_shift;
    } else {
      for (Int x : first) shifts.push_back(mod(-m * x, n));
    }
    for (Int s : shifts) {
      std::vector<Int> f = image(first.elements(), m, s, n);
      auto c1 = have ? std::lexicographical_compare_three_way(f.begin(), f.end(), best.first.begin(),
                                                              best.first.end())
                     : std::strong_ordering::less;
      if (c1 == std::strong_ordering::greater) continue;
      std::vector<Int> g = image(second.elements(), m, s, n);
      if (c1 == std::strong_ordering::equal &&
          !std::lexicographical_compare(g.begin(), g.end(), best.second.begin(), best.second.end())) {
        continue;
      }
      best = {std::move(f), std::move(g), m, s};
      have = true;
    }
  }
  return best;
}

}  // namespace

Sedf::Sedf(ResidueSet a, ResidueSet b) : set_a_(std::move(a)), set_b_(std::move(b)) {
  if (set_a_.modulus() != set_b_.modulus()) {
    throw ModulusMismatch(set_a_.modulus(), set_b_.modulus());
  }
}

std::strong_ordering lex_compare(const Sedf& lhs, const Sedf& rhs) {
  if (auto c = lex_compare(lhs.set_a(), rhs.set_a()); c != 0) return c;
  return lex_compare(lhs.set_b(), rhs.set_b());
}

Sedf apply(const EquivalenceWitness& w, const Sedf& s) {
  Sedf image_of{apply_affine(w.map, s.set_a()), apply_affine(w.map, s.set_b())};
  return w.swapped ? image_of.swapped() : image_of;
}

ValidityReport verify_sedf(const Sedf& s) {
  const Int n = s.modulus();
  const auto& a = s.set_a();
  const auto& b = s.set_b();
  if (a.size() != b.size()) {
    return ValidityReport::fail("set sizes differ: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  const Int k = static_cast<Int>(a.size());
  if (k < 1) return ValidityReport::fail("sets must be non-empty");
  if (n != k * k + 1) {
    return ValidityReport::fail("modulus " + std::to_string(n) + " is not k^2+1 for k = " +
                                std::to_string(k));
  }
  if (!a.disjoint_from(b)) return ValidityReport::fail("sets are not disjoint");

  std::vector<char> seen(n, 0);
  for (Int y : b) {
    for (Int x : a) {
      Int d = mod(y - x, n);
      if (seen[d]) {
        return ValidityReport::fail("difference " + std::to_string(d) + " repeats (" +
                                    std::to_string(y) + " - " + std::to_string(x) + ")");
      }
      seen[d] = 1;
    }
  }
  for (Int d = 1; d < n; ++d) {
    if (!seen[d]) return ValidityReport::fail("difference " + std::to_string(d) + " missing");
  }
#ifndef NDEBUG
  // D(A, B) = -D(B, A), so the other direction must cover Z_n \ {0} as well.
  std::vector<char> back(n, 0);
  for (Int x : a) {
    for (Int y : b) back[mod(x - y, n)] += 1;
  }
  for (Int d = 1; d < n; ++d) assert(back[d] == 1);
#endif
  return ValidityReport::ok();
}

bool is_symmetric(const ResidueSet& s) {
  return std::all_of(s.begin(), s.end(),
                     [&](Int x) { return s.contains(mod(-x, s.modulus())); });
}

Symmetrized symmetrize(const Sedf& s) {
  const Int n = s.modulus();
  for (Int g = 0; g < n; ++g) {
    ResidueSet a = s.set_a().translated(g);
    if (!is_symmetric(a)) continue;
    ResidueSet b = s.set_b().translated(g);
    if (is_symmetric(b)) return {Sedf(std::move(a), std::move(b)), g};
  }
  throw Error("no translate of " + to_string(s) + " is symmetric; input is not a valid SEDF");
}

CanonicalForm canonical_form(const Sedf& s) {
  const Int n = s.modulus();
  BestImage direct = best_image(s.set_a(), s.set_b());
  BestImage crossed = best_image(s.set_b(), s.set_a());

  auto c = std::lexicographical_compare_three_way(crossed.first.begin(), crossed.first.end(),
                                                  direct.first.begin(), direct.first.end());
  if (c == 0) {
    c = std::lexicographical_compare_three_way(crossed.second.begin(), crossed.second.end(),
                                               direct.second.begin(), direct.second.end());
  }
  if (c < 0) {
    return {Sedf(ResidueSet(n, std::move(crossed.first)), ResidueSet(n, std::move(crossed.second))),
            {AffineMap(crossed.mult, crossed.shift, n), true}};
  }
  return {Sedf(ResidueSet(n, std::move(direct.first)), ResidueSet(n, std::move(direct.second))),
          {AffineMap(direct.mult, direct.shift, n), false}};
}

std::optional<EquivalenceWitness> equivalent(const Sedf& s1, const Sedf& s2) {
  if (s1.modulus() != s2.modulus()) throw ModulusMismatch(s1.modulus(), s2.modulus());
  CanonicalForm c1 = canonical_form(s1);
  CanonicalForm c2 = canonical_form(s2);
  if (c1.sedf != c2.sedf) return std::nullopt;
  // f2(swap^t2 s2) = f1(swap^t1 s1)  =>  s2 = f2^-1 f1 (swap^(t1 xor t2) s1)
  return EquivalenceWitness{c2.witness.map.inverse().after(c1.witness.map),
                            c1.witness.swapped != c2.witness.swapped};
}

std::pair<ResidueSet, ResidueSet> to_near_factorization(const Sedf& s) {
  const Int n = s.modulus();
  ResidueSet neg_b = s.set_b().negated();
  std::vector<int> hits(n, 0);
  for (Int x : s.set_a()) {
    for (Int y : neg_b) hits[mod(x + y, n)] += 1;
  }
  if (hits[0] != 0) throw Error("A + (-B) contains 0; " + to_string(s) + " is not an SEDF");
  for (Int g = 1; g < n; ++g) {
    if (hits[g] != 1) {
      throw Error("A + (-B) hits " + std::to_string(g) + " " + std::to_string(hits[g]) +
                  " times; " + to_string(s) + " is not an SEDF");
    }
  }
  return {s.set_a(), std::move(neg_b)};
}

std::string to_string(const Sedf& s) {
  return "Z_" + std::to_string(s.modulus()) + ": " + to_string(s.set_a()) + ", " +
         to_string(s.set_b());
}

std::string to_string(const EquivalenceWitness& w) {
  return w.map.to_string() + (w.swapped ? " (swap)" : "");
}

}  // namespace sedfkit
