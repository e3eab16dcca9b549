#include <doctest.h>

#include "sedfkit/dihedral.hpp"

using namespace sedfkit;

namespace {

DihedralElement el(const char* s, Int n) { return parse_dihedral_element(s, n); }

DihedralSet set_of(std::initializer_list<const char*> xs, Int n) {
  std::vector<DihedralElement> out;
  for (const char* x : xs) out.push_back(el(x, n));
  return make_set(out);
}

// a^f b^i as a signed permutation of Z_n: x -> (-1)^f x + i ... composed by hand
// to check the multiplication rule independently.
std::vector<Int> as_permutation(DihedralElement g, Int n) {
  std::vector<Int> p(n);
  for (Int x = 0; x < n; ++x) p[x] = mod((g.flip ? -x : x) + g.rot, n);
  return p;
}

}  // namespace

TEST_CASE("dihedral multiplication") {
  CHECK(dihedral_mul(el("b", 13), el("ab^5", 13), 13) == el("ab^4", 13));
  CHECK(dihedral_mul(el("a", 13), el("a", 13), 13) == DihedralElement::identity());
  // aba = b^-1
  CHECK(dihedral_mul(dihedral_mul(el("a", 7), el("b", 7), 7), el("a", 7), 7) == el("b^6", 7));
  for (Int n = 1; n <= 9; ++n) {
    for (auto g : dihedral_elements(n)) {
      CHECK(dihedral_mul(g, dihedral_inv(g, n), n) == DihedralElement::identity());
      for (auto h : dihedral_elements(n)) {
        // (gh) acts as "apply h's permutation first, then g's" in this model
        auto pg = as_permutation(g, n), ph = as_permutation(h, n), pgh = as_permutation(dihedral_mul(g, h, n), n);
        for (Int x = 0; x < n; ++x) CHECK(pgh[x] == ph[pg[x]]);
      }
    }
  }
}

TEST_CASE("near-factorization verification") {
  CHECK(verify_near_factorization({13, set_of({"b", "b^2", "ab^2", "ab", "a"}, 13),
                                   set_of({"e", "ab^5", "b^5", "ab^10", "b^10"}, 13)}));
  CHECK(verify_near_factorization({13, set_of({"e", "a", "b", "ab", "b^2"}, 13),
                                   set_of({"ab^2", "b^8", "ab^7", "b^3", "ab^12"}, 13)}));
  CHECK_FALSE(verify_near_factorization({2, set_of({"b"}, 2), set_of({"e"}, 2)}));
}

TEST_CASE("tile construction") {
  DihedralSubsetPair p = cghk_construction(13, 5);
  CHECK(p.s == set_of({"b", "b^2", "ab^2", "ab", "a"}, 13));
  CHECK(p.t == set_of({"e", "b^5", "ab^5", "b^10", "ab^10"}, 13));
  DihedralSubsetPair q = cghk_construction(5, 3);
  CHECK(q.s == set_of({"b", "a", "ab"}, 5));
  CHECK(q.t == set_of({"e", "b^3", "ab^3"}, 5));
  CHECK(verify_near_factorization(q));
  CHECK(verify_near_factorization(cghk_construction(13, 25)));
  CHECK_THROWS_AS(cghk_construction(13, 7), Error);
  for (Int n = 1; n <= 61; ++n) {
    for (Int k = 1; k <= 2 * n - 1; k += 2) {
      if ((2 * n - 1) % k) continue;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(verify_near_factorization(cghk_construction(n, k)));
    }
  }
}

TEST_CASE("published dihedral SEDF") {
  DihedralSedf s5 = hjn_construction(5);
  CHECK(s5.n == 13);
  CHECK(s5.first == set_of({"e", "a", "b", "ab", "b^2"}, 13));
  CHECK(s5.second == set_of({"ab^2", "b^5", "ab^7", "b^10", "ab^12"}, 13));
  DihedralSedf s3 = hjn_construction(3);
  CHECK(s3.n == 5);
  CHECK(s3.first == set_of({"e", "b", "a"}, 5));
  CHECK(s3.second == set_of({"b^3", "ab", "ab^4"}, 5));
  CHECK(verify_near_factorization(s3.near_factorization()));
  CHECK_THROWS_AS(hjn_construction(4), Error);
  CHECK_THROWS_AS(hjn_construction(1), Error);
}

TEST_CASE("equivalence witness") {
  EquivalenceTranscript t5 = equivalence_witness(5);
  CHECK(t5.h == el("ab^2", 13));
  CHECK(t5.first_times_h == set_of({"ab^2", "b^2", "ab", "b", "a"}, 13));
  CHECK(t5.h_times_second_inv == set_of({"e", "ab^10", "b^5", "ab^5", "b^10"}, 13));
  CHECK(equivalence_witness(3).h == el("ab", 5));
  EquivalenceTranscript t7 = equivalence_witness(7);
  CHECK(t7.n == 25);
  CHECK(t7.h == el("ab^3", 25));
  for (Int k = 3; k <= 13; k += 2) CHECK_NOTHROW(equivalence_witness(k));
}

TEST_CASE("near-factorization equivalence search") {
  DihedralSubsetPair tile = cghk_construction(13, 5);
  DihedralSubsetPair pub = hjn_construction(5).near_factorization();
  auto w = near_factorizations_equivalent(pub, tile);
  REQUIRE(w);
  // check the returned witness directly
  const DihedralSet& s = w->inverted ? inverse_set(pub.t, 13) : pub.s;
  const DihedralSet& t = w->inverted ? inverse_set(pub.s, 13) : pub.t;
  CHECK(right_mul(left_mul(w->g, s, 13), w->h, 13) == tile.s);
  CHECK(right_mul(left_mul(dihedral_inv(w->h, 13), t, 13), dihedral_inv(w->g, 13), 13) == tile.t);

  auto id = near_factorizations_equivalent(tile, tile);
  REQUIRE(id);
  CHECK(id->g == DihedralElement::identity());
  CHECK(id->h == DihedralElement::identity());
  CHECK_FALSE(id->inverted);

  DihedralSubsetPair broken = tile;
  std::erase(broken.t, el("b^5", 13));
  broken.t = make_set([&] {
    auto v = broken.t;
    v.push_back(el("b^6", 13));
    return v;
  }());
  CHECK_FALSE(near_factorizations_equivalent(tile, broken));
}

TEST_CASE("dihedral text forms") {
  CHECK(to_string(el("e", 13)) == "e");
  CHECK(to_string(el("b^5", 13)) == "b^5");
  CHECK(to_string(el("a", 13)) == "a");
  CHECK(to_string(el("ab^10", 13)) == "ab^10");
  CHECK(el("b", 13) == DihedralElement{0, 1});
  CHECK(el("ab", 13) == DihedralElement{1, 1});
  CHECK(el("b^-1", 13) == DihedralElement{0, 12});
  CHECK(el("1", 13) == DihedralElement::identity());
  CHECK(to_string(set_of({"ab^5", "e", "b^5"}, 13)) == "{e,b^5,ab^5}");
  CHECK_THROWS_AS(el("c", 13), Error);
  CHECK_THROWS_AS(el("b^x", 13), Error);
}
