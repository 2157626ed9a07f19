#ifndef TKT_ARCPRES_HPP
#define TKT_ARCPRES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tkt/braid.hpp"

namespace tkt {

/// Arc presentation of a knot: arc t lies in the page of theta-rank pages[t]
/// and joins binding height heights[t] to heights[t+1 mod n]. Both sequences
/// are permutations of 1..n (stored 1-based).
struct ArcPresentation {
  int arcs = 0;
  std::vector<int> heights;
  std::vector<int> pages;

  bool operator==(const ArcPresentation& o) const {
    return arcs == o.arcs && heights == o.heights && pages == o.pages;
  }
};

/// Throws NotPermutation / DegenerateArc.
void validate(const ArcPresentation& ap);

enum class BraidSide { Braid, AntiBraid };

/// Braid word of the pushoff read from the cylindrical diagram, sweeping pages
/// in theta order and cutting at the seam between page ranks n and 1. The
/// anti-braid side is reported as the braid word of its orientation-reversed
/// mirror (equivalently, the sweep of the page-reversed presentation).
BraidWord associated_braid(const ArcPresentation& ap, BraidSide side = BraidSide::Braid);

/// Per-letter rectangular gadgets composed left to right, then closed.
/// Result has at most strands + letters + 1 arcs. Throws NotAKnot for
/// multi-component closures.
ArcPresentation braid_to_arcpres(const BraidWord& w);

// --- Cromwell moves -----------------------------------------------------------

enum class ArcEndpoint { Tail, Head };

/// Type i stabilization at (arc, endpoint). Variant a places the new binding
/// point just below the chosen endpoint, variant b just above; both act on the
/// braid side of the diagram, with opposite loop signs. Arc count +1.
ArcPresentation cromwell_I_stabilize(const ArcPresentation& ap, int arc, ArcEndpoint ep,
                                     char variant);

/// Type i destabilization at a binding height: the two arcs meeting the height
/// must lie in theta-adjacent pages (non-seam) and one of them must span
/// height-adjacent binding points. Arc count -1. Throws IllegalSite.
ArcPresentation cromwell_I_destabilize(const ArcPresentation& ap, int height);

/// Type ii: swap binding heights j and j+1 (1 <= j <= n-1); legal when the
/// page pairs incident to the two heights do not interleave in the cyclic
/// theta order. Throws Interleaved.
ArcPresentation cromwell_II(const ArcPresentation& ap, int j);

/// Type iii: swap page ranks k and k+1 (1 <= k <= n-1); legal when the height
/// pairs of the two arcs do not interleave. Throws Interleaved.
ArcPresentation cromwell_III(const ArcPresentation& ap, int k);

bool cromwell_II_legal(const ArcPresentation& ap, int j);
bool cromwell_III_legal(const ArcPresentation& ap, int k);
bool cromwell_I_destab_legal(const ArcPresentation& ap, int height);

/// True when chords {a1,a2} and {b1,b2} cross in the cyclic order on 1..n;
/// pairs sharing a point do not interleave.
bool pairs_interleave(int a1, int a2, int b1, int b2);

/// Pages incident to a binding height (the pages of the two arcs meeting it).
std::pair<int, int> incident_pages(const ArcPresentation& ap, int height);

/// The 2-arc unknot.
ArcPresentation two_arc_unknot();

/// Canonical rotation (the arc numbering is a gauge; the minimal rotation of
/// the paired sequences is the representative).
ArcPresentation canonical_rotation(const ArcPresentation& ap);

// --- files and rendering --------------------------------------------------------

/// Grid file: "heights: a1,a2,...,an" / "pages: b1,...,bn", '#' comments.
ArcPresentation parse_grid(std::istream& in);
ArcPresentation parse_grid_text(const std::string& text);
std::string grid_to_text(const ArcPresentation& ap);

/// n x n character grid, verticals drawn over horizontals (braid side).
std::string render_grid_ascii(const ArcPresentation& ap);

}  // namespace tkt

#endif
