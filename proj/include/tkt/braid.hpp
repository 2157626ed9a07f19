#ifndef TKT_BRAID_HPP
#define TKT_BRAID_HPP

#include <optional>
#include <string>
#include <vector>

#include "tkt/errors.hpp"

namespace tkt {

/// A word in the Artin generators of the braid group B_n.
/// Letters are signed generator indices: +i for sigma_i, -i for sigma_i^-1,
/// with 1 <= i <= strands-1. The empty word is valid on any strand count.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls);

  bool operator==(const BraidWord& o) const {
    return strands == o.strands && letters == o.letters;
  }
  size_t length() const { return letters.size(); }
};

int exponent_sum(const BraidWord& w);
int self_linking(const BraidWord& w);

/// Permutation induced on strand positions, 0-based: perm[i] is where the
/// strand entering at position i exits.
std::vector<int> strand_permutation(const BraidWord& w);
bool closure_is_knot(const BraidWord& w);

BraidWord stabilize(const BraidWord& w, int sign);

struct Destabilization {
  BraidWord word;   // on strands-1 strands
  int sign;         // sign of the removed trivial loop
  int rotation;     // cyclic rotation applied before removal
  std::vector<int> rewritten;  // the rotated+rewritten word the loop was removed from
};

/// Remove a trivial top loop: succeeds when some cyclic rotation of w, after
/// free reduction and a bounded number of braid-relation rewrites, has exactly
/// one occurrence of sigma_{n-1}^{+-1} and it can be cycled to the end.
/// Sound, not complete. Throws NotDestabilizable.
Destabilization destabilize(const BraidWord& w, int rewrite_depth = 2);

/// Top-strand exchange move. The word must match
///   sigma_{n-1}^e . u . sigma_{n-1}^{-e} . v
/// with w[0] and w[split-1] the two top letters and u, v free of sigma_{n-1}.
/// Returns sigma_{n-1}^{-e} . u . sigma_{n-1}^{e} . v. Throws PatternMismatch.
BraidWord exchange_move(const BraidWord& w, int split);

/// Word problem for B_n via the Garside left-greedy normal form.
/// Throws StrandMismatch when strand counts differ.
bool words_equal(const BraidWord& a, const BraidWord& b);

/// Canonical-form fingerprint usable as an exact equality key.
std::string garside_key(const BraidWord& w);

/// Side-by-side closure sharing one strand: w1 . shift(w2, n1-1).
BraidWord connected_sum(const BraidWord& w1, const BraidWord& w2);

BraidWord cyclic_permute(const BraidWord& w, int r);
BraidWord free_reduce(const BraidWord& w);
/// Free reduction followed by the lexicographically minimal rotation; cheap
/// dedup key for search frontiers.
std::vector<int> cyclic_canonical_key(const BraidWord& w);

// --- move steps and traces ---------------------------------------------------

enum class MoveKind {
  CyclicPermute,
  Conjugate,
  BraidRelation,
  PositiveStabilize,
  PositiveDestabilize,
  NegativeStabilize,
  NegativeDestabilize,
  ExchangeMove,
};

const char* move_kind_name(MoveKind k);
bool move_is_transverse_safe(MoveKind k);

/// One rewriting step on a braid word, replayable from its parameters.
///
/// Parameter conventions:
///   CyclicPermute: {r}                left-rotate by r
///   Conjugate:     {g}                w -> s_g^-1 . w . s_g (g signed letter)
///   BraidRelation: {0, pos}           delete cancelling pair at pos,pos+1
///                  {1, pos, g}        insert pair g,g^-1 at pos
///                  {2, pos}           commute letters at pos,pos+1 (|i-j|>=2)
///                  {3, pos}           s_i s_j s_i -> s_j s_i s_j at pos (|i-j|=1)
///   PositiveStabilize / NegativeStabilize: {}   append sigma_n^{+-1}
///   PositiveDestabilize / NegativeDestabilize: {}  remove literal trailing
///       sigma_{n-1}^{+-1}; the rest of the word must not use sigma_{n-1}
///   ExchangeMove:  {split}
struct MoveStep {
  MoveKind kind;
  std::vector<int> params;
  bool transverse_safe;

  MoveStep(MoveKind k, std::vector<int> p)
      : kind(k), params(std::move(p)), transverse_safe(move_is_transverse_safe(k)) {}
};

BraidWord apply_step(const BraidWord& w, const MoveStep& s);

struct MoveTrace {
  BraidWord start;
  std::vector<MoveStep> steps;
  BraidWord end;

  bool all_transverse_safe() const;
  /// Replays steps from start; true iff the literal result equals end.
  bool replays() const;
};

std::string trace_to_text(const MoveTrace& t);

// --- text format --------------------------------------------------------------

/// Accepts "n=3; 1 -2 1 1" and "n=3; s1 S2 s1 s1".
BraidWord parse_braid(const std::string& text);
std::string braid_to_text(const BraidWord& w);

}  // namespace tkt

#endif
