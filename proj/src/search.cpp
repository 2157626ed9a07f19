#include "tkt/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "tkt/invariants.hpp"

namespace tkt {

namespace {
thread_local long long g_nodes_used = 0;
}

long long last_search_nodes() { return g_nodes_used; }

namespace {

struct Node {
  BraidWord word;
  int parent;
  std::vector<MoveStep> steps;  // from parent's word to this word, literal replay
};

// Append free-reduction steps until the word is reduced.
void reduce_with_steps(BraidWord& w, std::vector<MoveStep>& steps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < (int)w.letters.size(); ++i) {
      if (w.letters[i] == -w.letters[i + 1]) {
        steps.emplace_back(MoveKind::BraidRelation, std::vector<int>{0, i});
        w.letters.erase(w.letters.begin() + i, w.letters.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
}

struct Successor {
  BraidWord word;
  std::vector<MoveStep> steps;
};

void push_succ(std::vector<Successor>& out, BraidWord w, std::vector<MoveStep> steps,
               const SearchBounds& b) {
  reduce_with_steps(w, steps);
  if ((int)w.letters.size() > b.max_length) return;
  out.push_back({std::move(w), std::move(steps)});
}

std::vector<Successor> expand(const BraidWord& w, const SearchBounds& b, bool allow_negative) {
  std::vector<Successor> out;
  const int n = w.strands;
  const int L = (int)w.letters.size();

  // conjugations (cyclic permutation is the special case of conjugating by a
  // prefix letter; both are explored explicitly for literal traces)
  for (int r = 1; r < L; ++r)
    push_succ(out, cyclic_permute(w, r), {MoveStep(MoveKind::CyclicPermute, {r})}, b);
  for (int i = 1; i <= n - 1; ++i)
    for (int sgn : {+1, -1}) {
      int g = sgn * i;
      BraidWord c = w;
      c.letters.insert(c.letters.begin(), -g);
      c.letters.push_back(g);
      push_succ(out, std::move(c), {MoveStep(MoveKind::Conjugate, {g})}, b);
    }

  // braid relations at every site of every rotation
  for (int r = 0; r < std::max(1, L); ++r) {
    BraidWord rot = cyclic_permute(w, r);
    std::vector<MoveStep> pre;
    if (r != 0) pre.emplace_back(MoveKind::CyclicPermute, std::vector<int>{r});
    for (int p = 0; p + 1 < L; ++p) {
      int a = rot.letters[p], c = rot.letters[p + 1];
      if (std::abs(std::abs(a) - std::abs(c)) >= 2) {
        BraidWord nw = rot;
        std::swap(nw.letters[p], nw.letters[p + 1]);
        auto steps = pre;
        steps.emplace_back(MoveKind::BraidRelation, std::vector<int>{2, p});
        push_succ(out, std::move(nw), std::move(steps), b);
      }
    }
    for (int p = 0; p + 2 < L; ++p) {
      int a = rot.letters[p], m = rot.letters[p + 1], c = rot.letters[p + 2];
      bool same = (a > 0 && m > 0 && c > 0) || (a < 0 && m < 0 && c < 0);
      if (same && a == c && std::abs(std::abs(a) - std::abs(m)) == 1) {
        BraidWord nw = rot;
        nw.letters[p] = m, nw.letters[p + 1] = a, nw.letters[p + 2] = m;
        auto steps = pre;
        steps.emplace_back(MoveKind::BraidRelation, std::vector<int>{3, p});
        push_succ(out, std::move(nw), std::move(steps), b);
      }
    }
    // exchange moves
    if (n >= 3 && L >= 2 && std::abs(rot.letters[0]) == n - 1) {
      for (int split = 2; split <= L; ++split) {
        try {
          BraidWord ex = exchange_move(rot, split);
          auto steps = pre;
          steps.emplace_back(MoveKind::ExchangeMove, std::vector<int>{split});
          push_succ(out, std::move(ex), std::move(steps), b);
        } catch (const DomainError&) {
        }
      }
    }
    // destabilization at a literal trailing top loop
    if (n >= 2 && L >= 1 && std::abs(rot.letters.back()) == n - 1) {
      bool sole = true;
      for (int i = 0; i + 1 < L; ++i)
        if (std::abs(rot.letters[i]) == n - 1) sole = false;
      if (sole) {
        int sgn = rot.letters.back() > 0 ? 1 : -1;
        if (sgn > 0 || allow_negative) {
          BraidWord d(n - 1, std::vector<int>(rot.letters.begin(), rot.letters.end() - 1));
          auto steps = pre;
          steps.emplace_back(sgn > 0 ? MoveKind::PositiveDestabilize : MoveKind::NegativeDestabilize,
                             std::vector<int>{});
          push_succ(out, std::move(d), std::move(steps), b);
        }
      }
    }
  }

  // stabilizations
  if (n + 1 <= b.max_strands) {
    push_succ(out, stabilize(w, +1), {MoveStep(MoveKind::PositiveStabilize, {})}, b);
    if (allow_negative)
      push_succ(out, stabilize(w, -1), {MoveStep(MoveKind::NegativeStabilize, {})}, b);
  }
  return out;
}

std::optional<MoveTrace> bfs_certify(const BraidWord& w1, const BraidWord& w2, SearchBounds b,
                                     bool allow_negative) {
  b.max_strands = std::max({b.max_strands, w1.strands, w2.strands});
  b.max_length = std::max({b.max_length, (int)w1.letters.size(), (int)w2.letters.size()});
  g_nodes_used = 0;

  auto matches = [&](const BraidWord& w) {
    return w.strands == w2.strands && words_equal(w, w2);
  };

  std::vector<Node> nodes;
  {
    // nodes hold freely reduced literals; the reduction steps open the trace
    BraidWord w0 = w1;
    std::vector<MoveStep> init;
    reduce_with_steps(w0, init);
    nodes.push_back({std::move(w0), -1, std::move(init)});
  }
  std::set<std::vector<int>> visited{cyclic_canonical_key(w1)};
  std::deque<int> frontier{0};
  g_nodes_used = 1;

  int found = -1;
  if (matches(nodes[0].word)) found = 0;
  while (found == -1 && !frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    BraidWord cw = nodes[cur].word;
    for (auto& sc : expand(cw, b, allow_negative)) {
      auto key = cyclic_canonical_key(sc.word);
      if (visited.count(key)) continue;
      if (g_nodes_used >= b.max_nodes) break;
      visited.insert(key);
      ++g_nodes_used;
      nodes.push_back({sc.word, cur, sc.steps});
      if (matches(sc.word)) {
        found = (int)nodes.size() - 1;
        break;
      }
      frontier.push_back((int)nodes.size() - 1);
    }
    if (g_nodes_used >= b.max_nodes) break;
  }
  if (found == -1) return std::nullopt;

  MoveTrace t;
  t.start = w1;
  std::vector<int> chain;
  for (int at = found; at != -1; at = nodes[at].parent) chain.push_back(at);
  std::reverse(chain.begin(), chain.end());
  for (int at : chain)
    for (auto& s : nodes[at].steps) t.steps.push_back(s);
  t.end = nodes[found].word;
  if (!t.replays()) fail("BadParameters", "internal: certificate does not replay");
  return t;
}

}  // namespace

std::optional<MoveTrace> certify_transverse_equiv(const BraidWord& w1, const BraidWord& w2,
                                                  SearchBounds b) {
  g_nodes_used = 0;
  if (self_linking(w1) != self_linking(w2)) return std::nullopt;
  if (closure_is_knot(w1) && closure_is_knot(w2) && !(alexander(w1) == alexander(w2)))
    return std::nullopt;
  auto t = bfs_certify(w1, w2, b, false);
  if (t && !t->all_transverse_safe()) fail("BadParameters", "internal: unsafe step in certificate");
  return t;
}

std::optional<MoveTrace> certify_topological_equiv(const BraidWord& w1, const BraidWord& w2,
                                                   SearchBounds b) {
  g_nodes_used = 0;
  if (closure_is_knot(w1) && closure_is_knot(w2) && !(alexander(w1) == alexander(w2)))
    return std::nullopt;
  return bfs_certify(w1, w2, b, true);
}

// --- arc-presentation certificates ---------------------------------------------------

ArcPresentation apply_arc_step(const ArcPresentation& ap, const ArcMoveStep& s) {
  if (s.kind == "I-stab")
    return cromwell_I_stabilize(ap, s.params.at(0),
                                s.params.at(1) == 0 ? ArcEndpoint::Tail : ArcEndpoint::Head,
                                s.params.at(2) == 0 ? 'a' : 'b');
  if (s.kind == "I-destab") return cromwell_I_destabilize(ap, s.params.at(0));
  if (s.kind == "II") return cromwell_II(ap, s.params.at(0));
  if (s.kind == "III") return cromwell_III(ap, s.params.at(0));
  fail("BadParameters", "unknown arc move " + s.kind);
}

bool ArcMoveTrace::replays() const {
  ArcPresentation cur = start;
  try {
    for (auto& s : steps) cur = apply_arc_step(cur, s);
  } catch (const DomainError&) {
    return false;
  }
  return canonical_rotation(cur) == canonical_rotation(end);
}

std::optional<ArcMoveTrace> certify_arc_equiv(const ArcPresentation& a1, const ArcPresentation& a2,
                                              SearchBounds b) {
  validate(a1);
  validate(a2);
  b.max_strands = std::max({b.max_strands, a1.arcs, a2.arcs});
  g_nodes_used = 0;
  {
    BraidWord b1 = associated_braid(a1), b2 = associated_braid(a2);
    if (closure_is_knot(b1) && closure_is_knot(b2) && !(alexander(b1) == alexander(b2)))
      return std::nullopt;
  }

  struct ANode {
    ArcPresentation ap;
    int parent;
    ArcMoveStep step;
  };
  auto key_of = [](const ArcPresentation& ap) {
    ArcPresentation c = canonical_rotation(ap);
    std::vector<int> key{c.arcs};
    key.insert(key.end(), c.heights.begin(), c.heights.end());
    key.insert(key.end(), c.pages.begin(), c.pages.end());
    return key;
  };
  const auto target = key_of(a2);

  std::vector<ANode> nodes;
  nodes.push_back({a1, -1, {}});
  std::set<std::vector<int>> visited{key_of(a1)};
  std::deque<int> frontier{0};
  g_nodes_used = 1;
  int found = key_of(a1) == target ? 0 : -1;

  auto try_push = [&](const ArcPresentation& ap, int parent, ArcMoveStep st) {
    auto key = key_of(ap);
    if (visited.count(key) || g_nodes_used >= b.max_nodes) return;
    visited.insert(key);
    ++g_nodes_used;
    nodes.push_back({ap, parent, std::move(st)});
    if (key == target)
      found = (int)nodes.size() - 1;
    else
      frontier.push_back((int)nodes.size() - 1);
  };

  while (found == -1 && !frontier.empty() && g_nodes_used < b.max_nodes) {
    int cur = frontier.front();
    frontier.pop_front();
    const ArcPresentation ap = nodes[cur].ap;
    const int n = ap.arcs;
    for (int j = 1; j < n && found == -1; ++j)
      if (cromwell_II_legal(ap, j)) try_push(cromwell_II(ap, j), cur, {"II", {j}});
    for (int k = 1; k < n && found == -1; ++k)
      if (cromwell_III_legal(ap, k)) try_push(cromwell_III(ap, k), cur, {"III", {k}});
    for (int h = 1; h <= n && found == -1; ++h)
      if (cromwell_I_destab_legal(ap, h)) try_push(cromwell_I_destabilize(ap, h), cur, {"I-destab", {h}});
    if (n + 1 <= b.max_strands) {
      for (int t = 0; t < n && found == -1; ++t)
        for (int ep = 0; ep < 2 && found == -1; ++ep)
          for (int va = 0; va < 2 && found == -1; ++va)
            try_push(cromwell_I_stabilize(ap, t, ep == 0 ? ArcEndpoint::Tail : ArcEndpoint::Head,
                                          va == 0 ? 'a' : 'b'),
                     cur, {"I-stab", {t, ep, va}});
    }
  }
  if (found == -1) return std::nullopt;
  ArcMoveTrace t;
  t.start = a1;
  std::vector<int> chain;
  for (int at = found; at != 0; at = nodes[at].parent) chain.push_back(at);
  std::reverse(chain.begin(), chain.end());
  for (int at : chain) t.steps.push_back(nodes[at].step);
  t.end = nodes[found].ap;
  if (!t.replays()) fail("BadParameters", "internal: arc certificate does not replay");
  return t;
}

// --- trace sorting --------------------------------------------------------------------

MoveTrace sort_destabilizations(const MoveTrace& t) {
  if (!t.replays()) fail("NotSortable", "input trace does not replay");
  MoveTrace out = t;
  bool changed = true;
  while (changed) {
    changed = false;
    // words at each step boundary
    std::vector<BraidWord> at{out.start};
    for (auto& s : out.steps) at.push_back(apply_step(at.back(), s));

    for (size_t i = 0; i + 1 < out.steps.size(); ++i) {
      if (out.steps[i].kind != MoveKind::NegativeDestabilize) continue;
      const MoveStep& nxt = out.steps[i + 1];
      if (!nxt.transverse_safe) continue;

      const BraidWord& big = at[i];  // u . sigma_{n-1}^{-1}
      const int topgen = big.strands - 1;
      const int ulen = (int)big.letters.size() - 1;
      std::vector<MoveStep> repl;

      if (nxt.kind == MoveKind::Conjugate) {
        int g = nxt.params.at(0);
        if (std::abs(g) > topgen - 2) fail("NotSortable", "conjugator blocks the trivial loop");
        repl.emplace_back(MoveKind::Conjugate, std::vector<int>{g});
        // g^-1 . u . sigma^- . g  ->  g^-1 . u . g . sigma^-
        repl.emplace_back(MoveKind::BraidRelation, std::vector<int>{2, ulen + 1});
        repl.emplace_back(MoveKind::NegativeDestabilize, std::vector<int>{});
      } else if (nxt.kind == MoveKind::CyclicPermute) {
        int r = nxt.params.at(0);
        for (int p = 0; p < r; ++p)
          if (std::abs(big.letters[p]) > topgen - 2)
            fail("NotSortable", "rotated prefix blocks the trivial loop");
        repl.emplace_back(MoveKind::CyclicPermute, std::vector<int>{r});
        // u[r..] sigma^- u[..r]  ->  u[r..] u[..r] sigma^-
        for (int p = 0; p < r; ++p)
          repl.emplace_back(MoveKind::BraidRelation, std::vector<int>{2, ulen - r + p});
        repl.emplace_back(MoveKind::NegativeDestabilize, std::vector<int>{});
      } else if (nxt.kind == MoveKind::BraidRelation) {
        int op = nxt.params.at(0), pos = nxt.params.at(1);
        int span = op == 3 ? 3 : op == 1 ? 0 : 2;
        if (pos + span > ulen) fail("NotSortable", "relation touches the trivial loop");
        repl.push_back(nxt);
        repl.emplace_back(MoveKind::NegativeDestabilize, std::vector<int>{});
      } else if (nxt.kind == MoveKind::ExchangeMove) {
        // the exchange acts below the removed loop: replay it at its own level
        int split = nxt.params.at(0);
        int level = nxt.params.size() > 1 ? nxt.params.at(1) : big.strands - 2;
        if (split > ulen) fail("NotSortable", "exchange split overlaps the trivial loop");
        repl.emplace_back(MoveKind::ExchangeMove, std::vector<int>{split, level});
        repl.emplace_back(MoveKind::NegativeDestabilize, std::vector<int>{});
      } else {
        fail("NotSortable",
             std::string("no commutation rule for NegativeDestabilize before ") +
                 move_kind_name(nxt.kind));
      }

      out.steps.erase(out.steps.begin() + i, out.steps.begin() + i + 2);
      out.steps.insert(out.steps.begin() + i, repl.begin(), repl.end());
      changed = true;
      break;
    }
  }
  if (!out.replays() || !(out.end == t.end))
    fail("NotSortable", "internal: sorted trace does not replay to the same end");
  return out;
}

}  // namespace tkt
