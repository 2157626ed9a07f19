#ifndef TKT_SEARCH_HPP
#define TKT_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "tkt/arcpres.hpp"
#include "tkt/braid.hpp"

namespace tkt {

struct SearchBounds {
  int max_strands = 6;
  int max_length = 16;
  long long max_nodes = 10000;
};

/// Breadth-first search over transverse-safe moves (braid isotopy, exchange
/// moves, positive stabilization/destabilization). Prechecks self-linking.
/// Sound, not complete; nullopt = NotFound. Every returned trace replays and
/// contains only transverse-safe steps.
std::optional<MoveTrace> certify_transverse_equiv(const BraidWord& w1, const BraidWord& w2,
                                                  SearchBounds b);

/// As above with negative stabilization/destabilization permitted; prechecks
/// the Alexander oracle when both closures are knots.
std::optional<MoveTrace> certify_topological_equiv(const BraidWord& w1, const BraidWord& w2,
                                                   SearchBounds b);

/// Nodes consumed by the last certify call on this thread (bound diagnostics).
long long last_search_nodes();

// --- arc-presentation certificates -------------------------------------------------

struct ArcMoveStep {
  std::string kind;  // "I-stab", "I-destab", "II", "III"
  std::vector<int> params;
};

struct ArcMoveTrace {
  ArcPresentation start;
  std::vector<ArcMoveStep> steps;
  ArcPresentation end;
  bool replays() const;
};

ArcPresentation apply_arc_step(const ArcPresentation& ap, const ArcMoveStep& s);

/// BFS over Cromwell moves with arc count bounded by b.max_strands.
/// Prechecks the oracle polynomial of the associated braids.
std::optional<ArcMoveTrace> certify_arc_equiv(const ArcPresentation& a1, const ArcPresentation& a2,
                                              SearchBounds b);

/// Push every NegativeDestabilize step past later transverse-safe steps when a
/// commutation rule exists; throws NotSortable on unimplemented interleavings.
MoveTrace sort_destabilizations(const MoveTrace& t);

}  // namespace tkt

#endif
