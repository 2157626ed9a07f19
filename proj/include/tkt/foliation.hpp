#ifndef TKT_FOLIATION_HPP
#define TKT_FOLIATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tkt/arcpres.hpp"
#include "tkt/errors.hpp"

namespace tkt {

enum class Boundary { K, Kp };
enum class TileType { AA, AB, BB };
enum class SurfaceKind { Disk, Annulus, Other };

const char* boundary_name(Boundary b);
const char* tile_type_name(TileType t);

struct FolVertex {
  int id;
  int sign;            // +1 / -1
  long long axis_pos;  // cyclic order on the axis
  int tab = 0;         // 0 core, 1 tab on K, 2 tab on K'
};

struct FolSing {
  int id;
  int sign;
  long long theta_pos;  // cyclic order of the singular fibers
};

struct BArcEdge {
  int id;
  int v1, v2;
};

struct AArcEdge {
  int id;
  int vertex;
  Boundary boundary;
};

/// One foliated 2-cell. Vertex/edge slots by type:
///   AA: vertices {v1, v2}, aarcs {a1, a2}, boundary label
///   AB: vertices {u, w, apex}, aarcs {a_u, a_w}, barcs {(u,apex), (w,apex)}, label
///   BB: vertices {c1..c4} in cyclic order, barcs {c1c2, c2c3, c3c4, c4c1}
struct Tile {
  int id;
  TileType type;
  int sing;
  Boundary boundary = Boundary::K;
  std::vector<int> vertices;
  std::vector<int> aarcs;
  std::vector<int> barcs;
};

struct MoveDelta {
  int dV, dS;
  int recorded_loop_sign = 0;  // for (de)stabilizations
};

struct FoliationMoveRecord {
  std::string rule;
  std::vector<int> ids;
  int dV, dS;
};

struct FoliationTrace {
  std::vector<FoliationMoveRecord> steps;
  std::string stopped_reason;  // empty = clean fixpoint
};

struct FoliationGraph {
  int eps, delta;
  std::vector<int> vertices;
  struct Edge {
    int a, b, sing;
  };
  std::vector<Edge> edges;
  std::vector<int> endpoints;  // vertices where a delta-leaf terminates alone

  bool is_closed_cycle_cover() const;  // every vertex has degree exactly 2
  int component_count() const;
  bool single_cycle() const;
};

class FoliatedSurface {
public:
  SurfaceKind declared = SurfaceKind::Other;
  std::map<int, FolVertex> vertices;
  std::map<int, FolSing> sings;
  std::map<int, BArcEdge> barcs;
  std::map<int, AArcEdge> aarcs;
  std::map<int, Tile> tiles;

  int vertex_count() const { return (int)vertices.size(); }
  int sing_count() const { return (int)sings.size(); }
  int euler_characteristic() const { return vertex_count() - sing_count(); }

  /// Structural validation; strict additionally requires every b-arc to border
  /// at least one tile. Throws DomainError on violation.
  void validate(bool strict = true) const;

  std::vector<int> tiles_at_vertex(int v) const;
  std::vector<int> tiles_at_barc(int b) const;
  int valence(int v) const;                  // throws NoSuchVertex
  std::vector<int> star_signs(int v) const;  // singularity signs in theta order

  bool is_essential_b_arc(int b) const;  // throws NotABArc
  /// Vertices in cyclic axis order.
  std::vector<int> axis_order() const;

  int fresh_vertex_id() const;
  int fresh_sing_id() const;
  int fresh_barc_id() const;
  int fresh_aarc_id() const;
  int fresh_tile_id() const;
};

// --- moves -----------------------------------------------------------------------

/// Stabilize the boundary braid along an ab-tile: deletes the tile, its
/// singularity and the apex vertex; retypes the apex's other tiles (ab->aa,
/// bb->ab). Loop sign = -sign(singularity). Throws WrongTileType / WrongSign.
MoveDelta ab_stabilize(FoliatedSurface& s, int tile);

/// Destabilize along an aa-tile with a valence-1 vertex. When transverse_only,
/// requires positive tiles on K and negative on K'. Loop sign = sing sign.
/// Throws WrongTileType / ValenceNotOne / WrongSign.
MoveDelta aa_destabilize(FoliatedSurface& s, int tile, bool transverse_only = false);

enum class ExchangeVariant { AA, AB, BB };

/// Exchange move at a valence-2 vertex with oppositely signed tiles.
/// aa/ab variants remove the vertex, its partner, and both tiles (-2, -2);
/// bb repositions the vertex on the axis, creating an inessential b-arc (0, 0).
/// Throws BadValence / SameSigns / WrongTileType.
MoveDelta exchange(FoliatedSurface& s, int vertex, ExchangeVariant variant);

/// Remove an inessential b-arc whose endpoints have valence 2: deletes both
/// endpoints and the two flanking tiles (-2, -2). Throws Essential /
/// UnsupportedConfiguration.
MoveDelta remove_inessential_b_arc(FoliatedSurface& s, int barc);

/// Change of foliation across a shared b-arc between two same-signed bb-tiles;
/// counts unchanged, the shared arc's endpoint valences each drop by one.
/// Throws NotAdjacent / OppositeSigns / WrongTileType.
MoveDelta change_foliation(FoliatedSurface& s, int tile1, int tile2);

FoliationGraph extract_graph(const FoliatedSurface& s, int eps, int delta);

/// #positive - #negative vertices, excluding the other boundary's tab.
int braid_index_from_counts(const FoliatedSurface& s, Boundary boundary);

// --- generators --------------------------------------------------------------------

/// Checkerboard annulus: k positive ab-tiles along K, k negative along K',
/// m bb-tiles between consecutive ab-tiles, and tabs of p (resp. q) aa-tiles
/// along K (resp. K'). Output passes the structural predicate suite.
/// Throws BadParameters.
FoliatedSurface build_checkerboard_annulus(int k, int m, int p, int q);

/// Checkerboard annulus (no bb-tiles) whose graph G++ is the given arc
/// presentation; used to realize Lemma-9 fixtures.
FoliatedSurface build_annulus_from_arcpres(const ArcPresentation& ap);

/// Cyclic ladder annulus with all b-arcs inessential (the embedded annulus of
/// the inessential-square figure); panels alternate sign, needs even n >= 4.
FoliatedSurface build_inessential_ladder(int n);

/// Subdivide b-arc `barc` with a two-panel bubble whose rung is inessential;
/// (V, S) += (2, 2). Test generator for remove_inessential fixtures.
void insert_inessential_bubble(FoliatedSurface& s, int barc);

/// Standalone oppositely-signed ab-pillow (disk, V=3, S=2): exchange fixture.
FoliatedSurface build_ab_pillow();
/// Standalone oppositely-signed aa-pair (V=2, S=2): aa-exchange fixture.
FoliatedSurface build_aa_pair();

// --- simplification -----------------------------------------------------------------

std::pair<FoliatedSurface, FoliationTrace> simplify_annulus(const FoliatedSurface& s);

/// Lemma predicates for simplified annuli.
bool interior_vertex(const FoliatedSurface& s, int v);
bool stars_alternate(const FoliatedSurface& s);        // interior vertices only
bool interior_valence_four(const FoliatedSurface& s);  // interior vertices only
bool star_has_both_signs(const FoliatedSurface& s, int v);

ArcPresentation graph_to_arcpres(const FoliatedSurface& s, const FoliationGraph& g);

// --- text format --------------------------------------------------------------------

std::string surface_to_text(const FoliatedSurface& s);
FoliatedSurface parse_surface_text(const std::string& text);
std::string render_surface_ascii(const FoliatedSurface& s);

}  // namespace tkt

#endif
