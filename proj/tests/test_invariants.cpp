#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tkt/invariants.hpp"
#include "tkt/braid.hpp"

using namespace tkt;

namespace {

// Test-only oracle: Alexander polynomial from a Seifert matrix,
// det(V - t V^T), normalized like the toolkit does.
LaurentPoly alexander_from_seifert(const std::vector<std::vector<int>>& V) {
  const int g = (int)V.size();
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  std::vector<std::vector<LaurentPoly>> M(g, std::vector<LaurentPoly>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) M[i][j] = LaurentPoly(V[i][j]) - t * LaurentPoly(V[j][i]);
  // determinant by cofactor expansion (g <= 2 here)
  LaurentPoly det;
  if (g == 1)
    det = M[0][0];
  else if (g == 2)
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  else
    REQUIRE(false);
  const int lo = det.min_exp(), hi = det.max_exp();
  REQUIRE((lo + hi) % 2 == 0);
  LaurentPoly f = det.shifted(-(lo + hi) / 2);
  REQUIRE(f == f.mirrored());
  if (f.eval_at_one() < 0) f = -f;
  return f;
}

BraidWord random_knot_word(std::mt19937& rng, int maxn, int maxlen) {
  std::uniform_int_distribution<int> ns(2, maxn), lens(1, maxlen), coin(0, 1);
  for (;;) {
    int n = ns(rng), len = lens(rng);
    std::uniform_int_distribution<int> gen(1, n - 1);
    std::vector<int> ls;
    for (int i = 0; i < len; ++i) ls.push_back(gen(rng) * (coin(rng) ? 1 : -1));
    BraidWord w(n, ls);
    if (closure_is_knot(w)) return w;
  }
}

}  // namespace

TEST_CASE("transversality check") {
  // unit circle at z = 0, theta increasing
  std::vector<CylPoint> circle;
  for (int i = 0; i < 8; ++i) circle.push_back({1.0, i * 0.7853981633974483, 0.0});
  auto r = transversality_check(circle);
  CHECK(r.transverse);
  CHECK(r.witness_segment == -1);

  // one steep drop: rho=1, dtheta=1, dz=-2 fails at that segment
  std::vector<CylPoint> bad{{1, 0, 0}, {1, 1, -2}, {1, 2, 0}, {1, 4, 2}};
  auto rb = transversality_check(bad);
  CHECK_FALSE(rb.transverse);
  CHECK(rb.witness_segment == 0);

  // vertical climb is fine
  std::vector<CylPoint> vert{{1, 0, 0}, {1, 0, 1}, {2, 3, 1}, {2, 6, 0}};
  CHECK(transversality_check(vert).transverse);

  CHECK_THROWS_AS(transversality_check({{1, 0, 0}, {1, 1, 0}}), DomainError);
  CHECK_THROWS_AS(transversality_check({{1, 0, 0}, {1, 0, 0}, {1, 1, 0}}), DomainError);
}

TEST_CASE("transversality invariance under rotation and vertical shift") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ur(0.2, 2.0), uz(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CylPoint> c;
    double th = 0;
    for (int i = 0; i < 6; ++i) {
      th += ur(rng);
      c.push_back({ur(rng), th, uz(rng)});
    }
    auto base = transversality_check(c);
    std::vector<CylPoint> moved = c;
    for (auto& p : moved) {
      p.theta += 2.5;
      p.z += 7.0;
    }
    auto shifted = transversality_check(moved);
    CHECK(base.transverse == shifted.transverse);
    CHECK(base.witness_segment == shifted.witness_segment);
  }
}

TEST_CASE("alexander of the unknot, trefoil and figure-8") {
  CHECK(alexander(parse_braid("n=1;")) == LaurentPoly(1));
  CHECK(alexander(parse_braid("n=2; 1")) == LaurentPoly(1));

  // trefoil, frozen from the Seifert-matrix oracle
  LaurentPoly tre = alexander_from_seifert({{-1, 1}, {0, -1}});
  CHECK(tre.to_string() == "t - 1 + t^-1");
  CHECK(alexander(parse_braid("n=2; 1 1 1")) == tre);

  // figure-8, cross-checked against the standard genus-1 Seifert matrix
  LaurentPoly f8 = alexander_from_seifert({{1, 1}, {0, -1}});
  CHECK(f8.to_string() == "-t + 3 - t^-1");
  CHECK(alexander(parse_braid("n=3; 1 -2 1 -2")) == f8);

  CHECK_THROWS_AS(alexander(parse_braid("n=2;")), DomainError);
  CHECK_THROWS_AS(alexander(parse_braid("n=3; 1")), DomainError);
}

TEST_CASE("alexander at t=1 is +-1 and normalization picks +1") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord w = random_knot_word(rng, 5, 12);
    LaurentPoly a = alexander(w);
    CHECK(a.eval_at_one() == 1);
    CHECK(a == a.mirrored());
  }
}

TEST_CASE("alexander is a conjugation and markov invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord w = random_knot_word(rng, 5, 10);
    LaurentPoly a = alexander(w);
    CHECK(alexander(cyclic_permute(w, 1 + trial % 3)) == a);
    CHECK(alexander(stabilize(w, +1)) == a);
    CHECK(alexander(stabilize(w, -1)) == a);
    BraidWord c = apply_step(w, MoveStep(MoveKind::Conjugate, {1 + (int)trial % (w.strands - 1)}));
    CHECK(alexander(c) == a);
  }
}

TEST_CASE("exchange pairs have equal alexander polynomials") {
  BraidWord w = parse_braid("n=3; 2 1 -2 1");
  BraidWord e = exchange_move(w, 3);
  CHECK(e == parse_braid("n=3; -2 1 2 1"));
  CHECK(alexander(e) == alexander(w));
}

TEST_CASE("alexander is multiplicative under connected sum") {
  BraidWord tre = parse_braid("n=2; 1 1 1");
  BraidWord f8 = parse_braid("n=3; 1 -2 1 -2");
  CHECK(alexander(connected_sum(tre, f8)) == alexander(tre) * alexander(f8));
  CHECK(alexander(connected_sum(tre, tre)) == alexander(tre) * alexander(tre));
}

TEST_CASE("words_equal agrees with burau on B_3") {
  // the reduced Burau representation is faithful for n = 3
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> gen(1, 2), coin(0, 1), lens(0, 7);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<int> l1, l2;
    for (int i = lens(rng); i > 0; --i) l1.push_back(gen(rng) * (coin(rng) ? 1 : -1));
    for (int i = lens(rng); i > 0; --i) l2.push_back(gen(rng) * (coin(rng) ? 1 : -1));
    BraidWord a(3, l1), b(3, l2);
    bool eq = words_equal(a, b);
    bool burau_eq = reduced_burau(a) == reduced_burau(b);
    CHECK(eq == burau_eq);
  }
}
