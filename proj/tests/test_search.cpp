#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tkt/invariants.hpp"
#include "tkt/search.hpp"

using namespace tkt;

namespace {
const ArcPresentation kFig8{6, {1, 5, 3, 6, 2, 4}, {6, 3, 5, 1, 4, 2}};
}

TEST_CASE("transverse certificates for trivial loops") {
  auto t = certify_transverse_equiv(parse_braid("n=2; 1"), parse_braid("n=1;"), {});
  REQUIRE(t.has_value());
  CHECK(t->replays());
  CHECK(t->all_transverse_safe());
  int destabs = 0;
  for (auto& s : t->steps)
    if (s.kind == MoveKind::PositiveDestabilize) ++destabs;
  CHECK(destabs == 1);
  CHECK(t->end == parse_braid("n=1;"));

  auto t2 = certify_transverse_equiv(parse_braid("n=3; 1 2"), parse_braid("n=1;"), {});
  REQUIRE(t2.has_value());
  CHECK(t2->all_transverse_safe());
  int d2 = 0;
  for (auto& s : t2->steps)
    if (s.kind == MoveKind::PositiveDestabilize) ++d2;
  CHECK(d2 == 2);
}

TEST_CASE("self-linking precheck rejects immediately") {
  auto t = certify_transverse_equiv(parse_braid("n=2; -1"), parse_braid("n=1;"), {});
  CHECK_FALSE(t.has_value());
  CHECK(last_search_nodes() == 0);
}

TEST_CASE("topological certificates may use negative moves") {
  auto t = certify_topological_equiv(parse_braid("n=2; -1"), parse_braid("n=1;"), {});
  REQUIRE(t.has_value());
  CHECK(t->replays());
  CHECK_FALSE(t->all_transverse_safe());
  int neg = 0;
  for (auto& s : t->steps)
    if (s.kind == MoveKind::NegativeDestabilize) ++neg;
  CHECK(neg == 1);

  // trefoil vs unknot: polynomial precheck
  auto nf = certify_topological_equiv(parse_braid("n=2; 1 1 1"), parse_braid("n=1;"), {});
  CHECK_FALSE(nf.has_value());
  CHECK(last_search_nodes() == 0);

  // reflexivity: empty trace
  BraidWord w = parse_braid("n=3; 1 -2");
  auto self = certify_topological_equiv(w, w, {});
  REQUIRE(self.has_value());
  CHECK(self->steps.empty());
}

TEST_CASE("certificates match braid-equal but literally different words") {
  auto t = certify_transverse_equiv(parse_braid("n=3; 1 2 1"), parse_braid("n=3; 2 1 2"), {});
  REQUIRE(t.has_value());
  CHECK(t->replays());
  CHECK(words_equal(t->end, parse_braid("n=3; 2 1 2")));
}

TEST_CASE("transverse certificate for an exchange-related pair") {
  BraidWord a = parse_braid("n=3; 2 1 -2 1");
  BraidWord b = exchange_move(a, 3);
  SearchBounds bounds;
  bounds.max_nodes = 200000;
  bounds.max_length = 10;
  auto t = certify_transverse_equiv(a, b, bounds);
  REQUIRE(t.has_value());
  CHECK(t->all_transverse_safe());
  CHECK(self_linking(a) == self_linking(b));
}

TEST_CASE("arc certificates") {
  ArcPresentation u2 = two_arc_unknot();
  ArcPresentation u3 = cromwell_I_stabilize(u2, 0, ArcEndpoint::Tail, 'a');
  auto t = certify_arc_equiv(u2, u3, {});
  REQUIRE(t.has_value());
  CHECK(t->replays());
  CHECK(t->steps.size() == 1);

  auto t2 = certify_arc_equiv(u3, u2, {});
  REQUIRE(t2.has_value());
  CHECK(t2->steps.size() == 1);
  CHECK(t2->steps[0].kind == "I-destab");

  // the minimal figure-8 presentation is Cromwell-rigid: no legal II or III
  for (int i = 1; i < kFig8.arcs; ++i) {
    CHECK_FALSE(cromwell_II_legal(kFig8, i));
    CHECK_FALSE(cromwell_III_legal(kFig8, i));
  }
  // a presentation whose first two pages carry disjoint arcs admits a
  // type-III move; certify finds the one step
  ArcPresentation fat{4, {1, 2, 3, 4}, {1, 3, 2, 4}};
  REQUIRE(cromwell_III_legal(fat, 1));
  ArcPresentation nb = cromwell_III(fat, 1);
  auto t3 = certify_arc_equiv(fat, nb, {});
  REQUIRE(t3.has_value());
  CHECK(t3->steps.size() == 1);

  // figure-8 vs the unknot: oracle precheck
  auto nf = certify_arc_equiv(kFig8, u2, {});
  CHECK_FALSE(nf.has_value());
  CHECK(last_search_nodes() == 0);
}

TEST_CASE("sorting pushes a negative destabilization past an exchange") {
  // start: 4-strand word ending in a negative trivial loop, whose
  // destabilized word carries the top-exchange pattern
  BraidWord start = parse_braid("n=4; 2 1 -2 1 -3");
  MoveTrace t;
  t.start = start;
  t.steps.emplace_back(MoveKind::NegativeDestabilize, std::vector<int>{});
  t.steps.emplace_back(MoveKind::ExchangeMove, std::vector<int>{3});
  t.end = exchange_move(parse_braid("n=3; 2 1 -2 1"), 3);
  REQUIRE(t.replays());

  MoveTrace sorted = sort_destabilizations(t);
  CHECK(sorted.replays());
  CHECK(sorted.start == t.start);
  CHECK(sorted.end == t.end);
  // the negative destabilization now comes after every transverse-safe step
  bool seen_neg = false;
  for (auto& s : sorted.steps) {
    if (s.kind == MoveKind::NegativeDestabilize) seen_neg = true;
    if (seen_neg) CHECK_FALSE(s.transverse_safe);
  }
}

TEST_CASE("sorting commutes conjugation and relations below the loop") {
  BraidWord start = parse_braid("n=4; 1 2 1 -3");
  MoveTrace t;
  t.start = start;
  t.steps.emplace_back(MoveKind::NegativeDestabilize, std::vector<int>{});
  t.steps.emplace_back(MoveKind::Conjugate, std::vector<int>{1});
  t.steps.emplace_back(MoveKind::BraidRelation, std::vector<int>{3, 1});
  BraidWord cur = parse_braid("n=3; 1 2 1");
  cur = apply_step(cur, MoveStep(MoveKind::Conjugate, {1}));
  cur = apply_step(cur, MoveStep(MoveKind::BraidRelation, {3, 1}));
  t.end = cur;
  REQUIRE(t.replays());
  MoveTrace sorted = sort_destabilizations(t);
  CHECK(sorted.replays());
  CHECK(sorted.end == t.end);
  for (size_t i = 0; i + 1 < sorted.steps.size(); ++i)
    if (sorted.steps[i].kind == MoveKind::NegativeDestabilize)
      CHECK_FALSE(sorted.steps[i + 1].transverse_safe);
}

TEST_CASE("sorting reports unsupported interleavings") {
  // conjugation by the generator just under the removed loop blocks the slide
  BraidWord start = parse_braid("n=4; 1 2 1 -3");
  MoveTrace t;
  t.start = start;
  t.steps.emplace_back(MoveKind::NegativeDestabilize, std::vector<int>{});
  t.steps.emplace_back(MoveKind::Conjugate, std::vector<int>{2});
  t.end = apply_step(parse_braid("n=3; 1 2 1"), MoveStep(MoveKind::Conjugate, {2}));
  REQUIRE(t.replays());
  CHECK_THROWS_AS(sort_destabilizations(t), DomainError);
}

TEST_CASE("all-positive traces are already sorted") {
  BraidWord w = parse_braid("n=2; 1 1");
  MoveTrace t;
  t.start = w;
  t.steps.emplace_back(MoveKind::PositiveStabilize, std::vector<int>{});
  t.steps.emplace_back(MoveKind::CyclicPermute, std::vector<int>{1});
  t.end = cyclic_permute(stabilize(w, +1), 1);
  REQUIRE(t.replays());
  MoveTrace sorted = sort_destabilizations(t);
  CHECK(sorted.steps.size() == t.steps.size());
  CHECK(sorted.end == t.end);
}

TEST_CASE("balanced self-linking forces zero negative destabilizations") {
  // beta bookkeeping: each negative destabilization raises beta by 2 and
  // nothing else moves it, so balanced traces contain none
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord w(2 + trial % 3, {});
    std::uniform_int_distribution<int> gen(1, w.strands - 1);
    for (int i = 0; i < trial % 6; ++i) w.letters.push_back(gen(rng));
    auto t = certify_transverse_equiv(w, w, {});
    REQUIRE(t.has_value());
    int negs = 0;
    for (auto& s : t->steps)
      if (s.kind == MoveKind::NegativeDestabilize) ++negs;
    CHECK(self_linking(t->end) - self_linking(t->start) == 2 * negs);
    CHECK(negs == 0);
  }
}

TEST_CASE("search is deterministic for fixed bounds") {
  BraidWord a = parse_braid("n=3; 1 2 1 -2");
  BraidWord b = parse_braid("n=2; 1");
  SearchBounds bounds;
  bounds.max_nodes = 50000;
  auto t1 = certify_transverse_equiv(a, b, bounds);
  long long n1 = last_search_nodes();
  auto t2 = certify_transverse_equiv(a, b, bounds);
  long long n2 = last_search_nodes();
  CHECK(t1.has_value() == t2.has_value());
  CHECK(n1 == n2);
  if (t1 && t2) {
    CHECK(t1->end == t2->end);
    CHECK(t1->steps.size() == t2->steps.size());
  }
}
