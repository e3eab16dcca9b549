#include "sedfkit/dihedral.hpp"

#include <algorithm>
#include <cctype>

namespace sedfkit {

DihedralSet make_set(std::vector<DihedralElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

// b^i a = a b^-i
DihedralElement dihedral_mul(DihedralElement g, DihedralElement h, Int n) {
  return {g.flip ^ h.flip, mod(h.rot + (h.flip ? -g.rot : g.rot), n)};
}

DihedralElement dihedral_inv(DihedralElement g, Int n) {
  if (g.flip) return g;
  return {0, mod(-g.rot, n)};
}

std::vector<DihedralElement> dihedral_elements(Int n) {
  std::vector<DihedralElement> out;
  for (int f = 0; f < 2; ++f) {
    for (Int i = 0; i < n; ++i) out.push_back({f, i});
  }
  return out;
}

DihedralSet left_mul(DihedralElement g, const DihedralSet& s, Int n) {
  std::vector<DihedralElement> out;
  for (const auto& x : s) out.push_back(dihedral_mul(g, x, n));
  return make_set(std::move(out));
}

DihedralSet right_mul(const DihedralSet& s, DihedralElement h, Int n) {
  std::vector<DihedralElement> out;
  for (const auto& x : s) out.push_back(dihedral_mul(x, h, n));
  return make_set(std::move(out));
}

DihedralSet inverse_set(const DihedralSet& s, Int n) {
  std::vector<DihedralElement> out;
  for (const auto& x : s) out.push_back(dihedral_inv(x, n));
  return make_set(std::move(out));
}

ValidityReport verify_near_factorization(const DihedralSubsetPair& p) {
  const Int n = p.n;
  if (n < 1) return ValidityReport::fail("n must be positive");
  auto index = [n](DihedralElement g) { return static_cast<std::size_t>(g.flip * n + g.rot); };
  for (const auto* side : {&p.s, &p.t}) {
    for (const auto& g : *side) {
      if ((g.flip != 0 && g.flip != 1) || g.rot < 0 || g.rot >= n) {
        return ValidityReport::fail("element " + to_string(g) + " is not in D_" + std::to_string(n));
      }
    }
  }
  std::vector<char> seen(2 * n, 0);
  for (const auto& s : p.s) {
    for (const auto& t : p.t) {
      DihedralElement st = dihedral_mul(s, t, n);
      if (st == DihedralElement::identity()) {
        return ValidityReport::fail(to_string(s) + " * " + to_string(t) + " = e");
      }
      if (seen[index(st)]) {
        return ValidityReport::fail("product " + to_string(st) + " repeats (" + to_string(s) + " * " +
                                    to_string(t) + ")");
      }
      seen[index(st)] = 1;
    }
  }
  for (const auto& g : dihedral_elements(n)) {
    if (g != DihedralElement::identity() && !seen[index(g)]) {
      return ValidityReport::fail("element " + to_string(g) + " is not a product");
    }
  }
  return ValidityReport::ok();
}

DihedralSubsetPair cghk_construction(Int n, Int k) {
  if (n < 1 || k < 1 || (2 * n - 1) % k != 0) {
    throw Error("k = " + std::to_string(k) + " does not divide 2n-1 = " + std::to_string(2 * n - 1));
  }
  const Int half = (k - 1) / 2;
  std::vector<DihedralElement> a, b;
  for (Int i = 1; i <= half; ++i) a.push_back(DihedralElement::rotation(i, n));
  for (Int i = 0; i <= half; ++i) a.push_back(DihedralElement::reflection(i, n));
  for (Int ik = 0; ik < n; ik += k) {
    b.push_back(DihedralElement::rotation(ik, n));
    if (ik > 0) b.push_back(DihedralElement::reflection(ik, n));
  }
  return {n, make_set(std::move(a)), make_set(std::move(b))};
}

DihedralSubsetPair DihedralSedf::near_factorization() const {
  return {n, first, inverse_set(second, n)};
}

DihedralSedf hjn_construction(Int k) {
  if (k < 3 || k % 2 == 0) throw Error("k must be odd and at least 3, got " + std::to_string(k));
  const Int n = (k * k + 1) / 2;
  const Int half = (k - 1) / 2;
  std::vector<DihedralElement> first, second;
  for (Int i = 0; i <= half; ++i) first.push_back(DihedralElement::rotation(i, n));
  for (Int i = 0; i <= (k - 3) / 2; ++i) first.push_back(DihedralElement::reflection(i, n));
  for (Int i = 1; i <= half; ++i) second.push_back(DihedralElement::rotation(i * k, n));
  for (Int i = 0; i <= half; ++i) second.push_back(DihedralElement::reflection(i * k + half, n));
  return {n, make_set(std::move(first)), make_set(std::move(second))};
}

EquivalenceTranscript equivalence_witness(Int k) {
  DihedralSedf sedf = hjn_construction(k);
  const Int n = sedf.n;
  DihedralSubsetPair tile = cghk_construction(n, k);
  EquivalenceTranscript tr;
  tr.k = k;
  tr.n = n;
  tr.h = DihedralElement::reflection((k - 1) / 2, n);
  tr.first_times_h = right_mul(sedf.first, tr.h, n);
  tr.tile_a = tile.s;
  tr.h_times_second_inv = left_mul(tr.h, inverse_set(sedf.second, n), n);
  tr.tile_b = tile.t;
  if (tr.first_times_h != tr.tile_a) {
    throw Error("A1 h = " + to_string(tr.first_times_h) + " differs from A = " + to_string(tr.tile_a));
  }
  if (tr.h_times_second_inv != tr.tile_b) {
    throw Error("h A2^-1 = " + to_string(tr.h_times_second_inv) + " differs from B = " +
                to_string(tr.tile_b));
  }
  return tr;
}

std::optional<NearFactorizationWitness> near_factorizations_equivalent(const DihedralSubsetPair& p1,
                                                                       const DihedralSubsetPair& p2) {
  if (p1.n != p2.n) return std::nullopt;
  if (p1.s.size() + p1.t.size() != p2.s.size() + p2.t.size()) return std::nullopt;
  if (verify_near_factorization(p1).valid != verify_near_factorization(p2).valid) return std::nullopt;
  const Int n = p1.n;
  const auto elements = dihedral_elements(n);
  for (bool inverted : {false, true}) {
    const DihedralSet s = inverted ? inverse_set(p1.t, n) : p1.s;
    const DihedralSet t = inverted ? inverse_set(p1.s, n) : p1.t;
    if (s.size() != p2.s.size() || t.size() != p2.t.size()) continue;
    for (const auto& g : elements) {
      const DihedralSet gs = left_mul(g, s, n);
      const DihedralElement g_inv = dihedral_inv(g, n);
      for (const auto& h : elements) {
        if (right_mul(gs, h, n) != p2.s) continue;
        if (right_mul(left_mul(dihedral_inv(h, n), t, n), g_inv, n) == p2.t) {
          return NearFactorizationWitness{g, h, inverted};
        }
      }
    }
  }
  return std::nullopt;
}

std::string to_string(DihedralElement g) {
  if (g.flip == 0) return g.rot == 0 ? "e" : "b^" + std::to_string(g.rot);
  return g.rot == 0 ? "a" : "ab^" + std::to_string(g.rot);
}

std::string to_string(const DihedralSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += to_string(s[i]);
  }
  return out + "}";
}

DihedralElement parse_dihedral_element(const std::string& text, Int n) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "e" || s == "1") return DihedralElement::identity();
  int flip = 0;
  std::size_t pos = 0;
  if (!s.empty() && s[0] == 'a') {
    flip = 1;
    pos = 1;
  }
  if (pos == s.size()) return {flip, 0};
  if (s[pos] != 'b') throw Error("cannot parse dihedral element '" + text + "'");
  ++pos;
  if (pos == s.size()) return {flip, mod(1, n)};
  if (s[pos] == '^') ++pos;
  std::string digits = s.substr(pos);
  bool negative = !digits.empty() && digits[0] == '-';
  if (negative) digits.erase(0, 1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw Error("cannot parse dihedral element '" + text + "'");
  }
  Int i = std::stoll(digits);
  return {flip, mod(negative ? -i : i, n)};
}

}  // namespace sedfkit
