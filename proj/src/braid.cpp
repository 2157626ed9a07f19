#include "tkt/braid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tkt {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  if (n < 1) fail("BadParameters", "strand count must be >= 1");
  for (int g : letters) {
    int i = g > 0 ? g : -g;
    if (g == 0 || i > strands - 1)
      fail("BadParameters", "letter index out of range for " + std::to_string(n) + " strands");
  }
}

int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int g : w.letters) e += g > 0 ? 1 : -1;
  return e;
}

int self_linking(const BraidWord& w) { return exponent_sum(w) - w.strands; }

std::vector<int> strand_permutation(const BraidWord& w) {
  std::vector<int> p(w.strands);
  std::iota(p.begin(), p.end(), 0);
  // p[i] = current position of the strand that entered at i
  for (int g : w.letters) {
    int i = (g > 0 ? g : -g) - 1;  // 0-based position pair (i, i+1)
    for (auto& x : p)
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
  }
  return p;
}

bool closure_is_knot(const BraidWord& w) {
  auto p = strand_permutation(w);
  int seen = 1, at = p[0];
  while (at != 0) {
    at = p[at];
    ++seen;
  }
  return seen == w.strands;
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) fail("BadParameters", "sign must be +1 or -1");
  BraidWord r;
  r.strands = w.strands + 1;
  r.letters = w.letters;
  r.letters.push_back(sign * (r.strands - 1));
  return r;
}

BraidWord cyclic_permute(const BraidWord& w, int r) {
  if (w.letters.empty()) return w;
  r = ((r % (int)w.letters.size()) + (int)w.letters.size()) % (int)w.letters.size();
  BraidWord out = w;
  std::rotate(out.letters.begin(), out.letters.begin() + r, out.letters.end());
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  for (int g : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -g)
      out.letters.pop_back();
    else
      out.letters.push_back(g);
  }
  return out;
}

std::vector<int> cyclic_canonical_key(const BraidWord& w) {
  BraidWord f = free_reduce(w);
  if (f.letters.empty()) return {f.strands};
  std::vector<int> best;
  for (size_t r = 0; r < f.letters.size(); ++r) {
    std::vector<int> cand(f.letters.begin() + r, f.letters.end());
    cand.insert(cand.end(), f.letters.begin(), f.letters.begin() + r);
    if (best.empty() || cand < best) best = cand;
  }
  best.push_back(f.strands);
  return best;
}

namespace {

// Bounded rewrite closure: free reductions plus up to `depth` braid-relation
// applications (commutations and Yang-Baxter shifts, both directions).
void rewrite_closure(const std::vector<int>& word, int depth, std::set<std::vector<int>>& seen) {
  if (!seen.insert(word).second) return;
  if (depth == 0) return;
  const int L = (int)word.size();
  for (int p = 0; p + 1 < L; ++p) {
    int a = word[p], b = word[p + 1];
    int ia = std::abs(a), ib = std::abs(b);
    if (std::abs(ia - ib) >= 2) {
      auto w2 = word;
      std::swap(w2[p], w2[p + 1]);
      rewrite_closure(w2, depth - 1, seen);
    }
  }
  for (int p = 0; p + 2 < L; ++p) {
    int a = word[p], b = word[p + 1], c = word[p + 2];
    // sigma_i sigma_j sigma_i = sigma_j sigma_i sigma_j for |i-j| = 1,
    // and the mixed-sign variants obtained from it.
    if (a > 0 && b > 0 && c > 0 && a == c && std::abs(a - b) == 1) {
      auto w2 = word;
      w2[p] = b, w2[p + 1] = a, w2[p + 2] = b;
      rewrite_closure(w2, depth - 1, seen);
    }
    if (a < 0 && b < 0 && c < 0 && a == c && std::abs(a - b) == 1) {
      auto w2 = word;
      w2[p] = b, w2[p + 1] = a, w2[p + 2] = b;
      rewrite_closure(w2, depth - 1, seen);
    }
    // sigma_i sigma_j sigma_i^-1 = sigma_j^-1 sigma_i sigma_j  (|i-j|=1)
    if (a > 0 && c == -a && b > 0 && std::abs(a - b) == 1) {
      auto w2 = word;
      w2[p] = -b, w2[p + 1] = a, w2[p + 2] = b;
      rewrite_closure(w2, depth - 1, seen);
    }
    // sigma_i^-1 sigma_j sigma_i = sigma_j sigma_i sigma_j^-1  (|i-j|=1)
    if (a < 0 && c == -a && b > 0 && std::abs(-a - b) == 1) {
      auto w2 = word;
      w2[p] = b, w2[p + 1] = -a, w2[p + 2] = -b;
      rewrite_closure(w2, depth - 1, seen);
    }
  }
}

std::vector<int> freely_reduced(std::vector<int> v) {
  std::vector<int> out;
  for (int g : v) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

}  // namespace

Destabilization destabilize(const BraidWord& w, int rewrite_depth) {
  if (w.strands < 2) fail("NotDestabilizable", "need at least 2 strands");
  const int top = w.strands - 1;
  const int L = (int)w.letters.size();
  const int rots = std::max(1, L);
  for (int r = 0; r < rots; ++r) {
    BraidWord rot = cyclic_permute(w, r);
    std::set<std::vector<int>> seen;
    rewrite_closure(freely_reduced(rot.letters), rewrite_depth, seen);
    for (const auto& cand : seen) {
      auto red = freely_reduced(cand);
      int count = 0, pos = -1;
      for (int i = 0; i < (int)red.size(); ++i)
        if (std::abs(red[i]) == top) ++count, pos = i;
      if (count != 1) continue;
      // cycle the sole top letter to the end
      std::vector<int> u(red.begin() + pos + 1, red.end());
      u.insert(u.end(), red.begin(), red.begin() + pos);
      Destabilization d;
      d.sign = red[pos] > 0 ? 1 : -1;
      d.rotation = r;
      d.rewritten = red;
      d.word = BraidWord(w.strands - 1, u);
      return d;
    }
  }
  fail("NotDestabilizable", "no single top-generator form found within the rewrite budget");
}

namespace {

// Exchange rewrite at a given generator level; the public move uses the top
// strand, trace replay also accepts lower levels with the pattern interior
// below the level (sound for the closure since the letters above the level
// are confined to v).
BraidWord exchange_at_level(const BraidWord& w, int split, int level) {
  const int L = (int)w.letters.size();
  if (level < 2 || level > w.strands - 1) fail("PatternMismatch", "bad exchange level");
  if (split < 2 || split > L) fail("PatternMismatch", "split out of range");
  int first = w.letters[0], second = w.letters[split - 1];
  if (std::abs(first) != level || std::abs(second) != level || first != -second)
    fail("PatternMismatch", "word is not sigma.u.sigma^-1.v at this split");
  for (int i = 1; i < split - 1; ++i)
    if (std::abs(w.letters[i]) >= level) fail("PatternMismatch", "u reaches the exchange level");
  for (int i = split; i < L; ++i)
    if (std::abs(w.letters[i]) == level) fail("PatternMismatch", "v touches the exchange level");
  BraidWord out = w;
  out.letters[0] = -first;
  out.letters[split - 1] = -second;
  return out;
}

}  // namespace

BraidWord exchange_move(const BraidWord& w, int split) {
  if (w.strands < 3) fail("PatternMismatch", "need at least 3 strands");
  return exchange_at_level(w, split, w.strands - 1);
}

BraidWord connected_sum(const BraidWord& w1, const BraidWord& w2) {
  BraidWord r;
  r.strands = w1.strands + w2.strands - 1;
  r.letters = w1.letters;
  const int shift = w1.strands - 1;
  for (int g : w2.letters) r.letters.push_back(g > 0 ? g + shift : g - shift);
  return r;
}

// --- moves and traces ---------------------------------------------------------

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::CyclicPermute: return "CyclicPermute";
    case MoveKind::Conjugate: return "Conjugate";
    case MoveKind::BraidRelation: return "BraidRelation";
    case MoveKind::PositiveStabilize: return "PositiveStabilize";
    case MoveKind::PositiveDestabilize: return "PositiveDestabilize";
    case MoveKind::NegativeStabilize: return "NegativeStabilize";
    case MoveKind::NegativeDestabilize: return "NegativeDestabilize";
    case MoveKind::ExchangeMove: return "ExchangeMove";
  }
  return "?";
}

bool move_is_transverse_safe(MoveKind k) {
  return k != MoveKind::NegativeStabilize && k != MoveKind::NegativeDestabilize;
}

BraidWord apply_step(const BraidWord& w, const MoveStep& s) {
  switch (s.kind) {
    case MoveKind::CyclicPermute:
      return cyclic_permute(w, s.params.at(0));
    case MoveKind::Conjugate: {
      int g = s.params.at(0);
      BraidWord out = w;
      out.letters.insert(out.letters.begin(), -g);
      out.letters.push_back(g);
      return out;
    }
    case MoveKind::BraidRelation: {
      int op = s.params.at(0), pos = s.params.at(1);
      BraidWord out = w;
      auto& v = out.letters;
      if (op == 0) {
        if (pos + 1 >= (int)v.size() || v[pos] != -v[pos + 1])
          fail("BadParameters", "replay: no cancelling pair at position");
        v.erase(v.begin() + pos, v.begin() + pos + 2);
      } else if (op == 1) {
        int g = s.params.at(2);
        if (pos < 0 || pos > (int)v.size()) fail("BadParameters", "replay: bad insert position");
        v.insert(v.begin() + pos, {g, -g});
      } else if (op == 2) {
        if (pos + 1 >= (int)v.size() ||
            std::abs(std::abs(v[pos]) - std::abs(v[pos + 1])) < 2)
          fail("BadParameters", "replay: letters do not commute");
        std::swap(v[pos], v[pos + 1]);
      } else if (op == 3) {
        if (pos + 2 >= (int)v.size()) fail("BadParameters", "replay: bad relation site");
        int a = v[pos], b = v[pos + 1], c = v[pos + 2];
        bool ok = a == c && std::abs(std::abs(a) - std::abs(b)) == 1 &&
                  ((a > 0 && b > 0) || (a < 0 && b < 0));
        if (!ok) fail("BadParameters", "replay: not a braid-relation site");
        v[pos] = b, v[pos + 1] = a, v[pos + 2] = b;
      } else {
        fail("BadParameters", "replay: unknown relation op");
      }
      return out;
    }
    case MoveKind::PositiveStabilize:
      return stabilize(w, +1);
    case MoveKind::NegativeStabilize:
      return stabilize(w, -1);
    case MoveKind::PositiveDestabilize:
    case MoveKind::NegativeDestabilize: {
      const int want = s.kind == MoveKind::PositiveDestabilize ? 1 : -1;
      const int top = w.strands - 1;
      if (w.strands < 2 || w.letters.empty() || w.letters.back() != want * top)
        fail("BadParameters", "replay: word does not end with the top loop");
      for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (std::abs(w.letters[i]) == top)
          fail("BadParameters", "replay: top generator occurs elsewhere");
      BraidWord out;
      out.strands = w.strands - 1;
      out.letters.assign(w.letters.begin(), w.letters.end() - 1);
      return out;
    }
    case MoveKind::ExchangeMove: {
      int level = s.params.size() > 1 ? s.params.at(1) : w.strands - 1;
      return exchange_at_level(w, s.params.at(0), level);
    }
  }
  fail("BadParameters", "replay: unknown step kind");
}

bool MoveTrace::all_transverse_safe() const {
  for (const auto& s : steps)
    if (!s.transverse_safe) return false;
  return true;
}

bool MoveTrace::replays() const {
  BraidWord cur = start;
  try {
    for (const auto& s : steps) cur = apply_step(cur, s);
  } catch (const DomainError&) {
    return false;
  }
  return cur == end;
}

std::string trace_to_text(const MoveTrace& t) {
  std::ostringstream out;
  out << "start: " << braid_to_text(t.start) << "\n";
  for (size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    out << "step " << i << ": " << move_kind_name(s.kind);
    for (int p : s.params) out << " " << p;
    out << " transverse=" << (s.transverse_safe ? "true" : "false") << "\n";
  }
  out << "end: " << braid_to_text(t.end) << "\n";
  return out.str();
}

// --- text format --------------------------------------------------------------

BraidWord parse_braid(const std::string& text) {
  auto semi = text.find(';');
  auto npos = text.find("n=");
  if (npos == std::string::npos || semi == std::string::npos || npos > semi)
    fail("BadParameters", "braid text must start with 'n=<k>;'");
  int n = 0;
  try {
    n = std::stoi(text.substr(npos + 2, semi - npos - 2));
  } catch (...) {
    fail("BadParameters", "bad strand count");
  }
  std::vector<int> letters;
  std::istringstream in(text.substr(semi + 1));
  std::string tok;
  while (in >> tok) {
    int g = 0;
    if (tok[0] == 's' || tok[0] == 'S') {
      try {
        g = std::stoi(tok.substr(1));
      } catch (...) {
        fail("BadParameters", "bad letter '" + tok + "'");
      }
      if (tok[0] == 'S') g = -g;
    } else {
      try {
        g = std::stoi(tok);
      } catch (...) {
        fail("BadParameters", "bad letter '" + tok + "'");
      }
    }
    letters.push_back(g);
  }
  return BraidWord(n, letters);
}

std::string braid_to_text(const BraidWord& w) {
  std::ostringstream out;
  out << "n=" << w.strands << ";";
  for (int g : w.letters) out << " " << g;
  return out.str();
}

}  // namespace tkt
