#include "tkt/foliation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace tkt {

const char* boundary_name(Boundary b) { return b == Boundary::K ? "K" : "K'"; }
const char* tile_type_name(TileType t) {
  switch (t) {
    case TileType::AA: return "aa";
    case TileType::AB: return "ab";
    case TileType::BB: return "bb";
  }
  return "?";
}

// --- queries -------------------------------------------------------------------

std::vector<int> FoliatedSurface::tiles_at_vertex(int v) const {
  std::vector<int> out;
  for (auto& [id, t] : tiles)
    if (std::find(t.vertices.begin(), t.vertices.end(), v) != t.vertices.end())
      out.push_back(id);
  return out;
}

std::vector<int> FoliatedSurface::tiles_at_barc(int b) const {
  std::vector<int> out;
  for (auto& [id, t] : tiles)
    if (std::find(t.barcs.begin(), t.barcs.end(), b) != t.barcs.end()) out.push_back(id);
  return out;
}

int FoliatedSurface::valence(int v) const {
  if (!vertices.count(v)) fail("NoSuchVertex", std::to_string(v));
  return (int)tiles_at_vertex(v).size();
}

std::vector<int> FoliatedSurface::star_signs(int v) const {
  if (!vertices.count(v)) fail("NoSuchVertex", std::to_string(v));
  auto ts = tiles_at_vertex(v);
  std::sort(ts.begin(), ts.end(), [&](int a, int b) {
    return sings.at(tiles.at(a).sing).theta_pos < sings.at(tiles.at(b).sing).theta_pos;
  });
  std::vector<int> out;
  for (int t : ts) out.push_back(sings.at(tiles.at(t).sing).sign);
  return out;
}

std::vector<int> FoliatedSurface::axis_order() const {
  std::vector<int> ids;
  for (auto& [id, v] : vertices) ids.push_back(id);
  std::sort(ids.begin(), ids.end(),
            [&](int a, int b) { return vertices.at(a).axis_pos < vertices.at(b).axis_pos; });
  return ids;
}

bool FoliatedSurface::is_essential_b_arc(int b) const {
  auto it = barcs.find(b);
  if (it == barcs.end()) fail("NotABArc", std::to_string(b));
  auto order = axis_order();
  const int n = (int)order.size();
  if (n <= 2) return false;  // two vertices are mutually adjacent on the circle
  int i1 = -1, i2 = -1;
  for (int i = 0; i < n; ++i) {
    if (order[i] == it->second.v1) i1 = i;
    if (order[i] == it->second.v2) i2 = i;
  }
  int d = std::abs(i1 - i2);
  return !(d == 1 || d == n - 1);
}

namespace {
template <typename M>
int fresh_id(const M& m) {
  return m.empty() ? 1 : m.rbegin()->first + 1;
}
}  // namespace

int FoliatedSurface::fresh_vertex_id() const { return fresh_id(vertices); }
int FoliatedSurface::fresh_sing_id() const { return fresh_id(sings); }
int FoliatedSurface::fresh_barc_id() const { return fresh_id(barcs); }
int FoliatedSurface::fresh_aarc_id() const { return fresh_id(aarcs); }
int FoliatedSurface::fresh_tile_id() const { return fresh_id(tiles); }

void FoliatedSurface::validate(bool strict) const {
  std::set<long long> axis_seen, theta_seen;
  for (auto& [id, v] : vertices) {
    if (v.sign != 1 && v.sign != -1) fail("BadParameters", "vertex sign");
    if (!axis_seen.insert(v.axis_pos).second) fail("BadParameters", "duplicate axis position");
  }
  for (auto& [id, s] : sings) {
    if (s.sign != 1 && s.sign != -1) fail("BadParameters", "singularity sign");
    if (!theta_seen.insert(s.theta_pos).second) fail("BadParameters", "duplicate theta position");
  }
  // tile <-> singularity bijection
  std::set<int> sings_used;
  for (auto& [id, t] : tiles) {
    if (!sings.count(t.sing)) fail("BadParameters", "tile references missing singularity");
    if (!sings_used.insert(t.sing).second) fail("BadParameters", "singularity in two tiles");
    for (int v : t.vertices)
      if (!vertices.count(v)) fail("BadParameters", "tile references missing vertex");
    for (int a : t.aarcs)
      if (!aarcs.count(a)) fail("BadParameters", "tile references missing a-arc");
    for (int b : t.barcs)
      if (!barcs.count(b)) fail("BadParameters", "tile references missing b-arc");
    switch (t.type) {
      case TileType::AA:
        if (t.vertices.size() != 2 || t.aarcs.size() != 2 || !t.barcs.empty())
          fail("BadParameters", "aa tile shape");
        break;
      case TileType::AB: {
        if (t.vertices.size() != 3 || t.aarcs.size() != 2 || t.barcs.size() != 2)
          fail("BadParameters", "ab tile shape");
        int u = t.vertices[0], w = t.vertices[1], x = t.vertices[2];
        auto& bu = barcs.at(t.barcs[0]);
        auto& bw = barcs.at(t.barcs[1]);
        auto joins = [](const BArcEdge& e, int a, int b) {
          return (e.v1 == a && e.v2 == b) || (e.v1 == b && e.v2 == a);
        };
        if (!joins(bu, u, x) || !joins(bw, w, x)) fail("BadParameters", "ab b-arcs");
        break;
      }
      case TileType::BB: {
        if (t.vertices.size() != 4 || t.barcs.size() != 4 || !t.aarcs.empty())
          fail("BadParameters", "bb tile shape");
        for (int i = 0; i < 4; ++i) {
          auto& e = barcs.at(t.barcs[i]);
          int a = t.vertices[i], b = t.vertices[(i + 1) % 4];
          if (!((e.v1 == a && e.v2 == b) || (e.v1 == b && e.v2 == a)))
            fail("BadParameters", "bb side does not join consecutive corners");
        }
        break;
      }
    }
  }
  if (sings_used.size() != sings.size()) fail("BadParameters", "singularity without tile");
  // edge incidence arities
  for (auto& [id, b] : barcs) {
    if (!vertices.count(b.v1) || !vertices.count(b.v2)) fail("BadParameters", "b-arc endpoint");
    int n = (int)tiles_at_barc(id).size();
    if (n > 2) fail("BadParameters", "b-arc borders more than two tiles");
    if (strict && n < 1) fail("BadParameters", "dangling b-arc");
  }
  for (auto& [id, a] : aarcs) {
    if (!vertices.count(a.vertex)) fail("BadParameters", "a-arc vertex");
    int n = 0;
    for (auto& [tid, t] : tiles)
      n += (int)std::count(t.aarcs.begin(), t.aarcs.end(), id);
    if (n > 2) fail("BadParameters", "a-arc borders more than two tiles");
    if (strict && n < 1) fail("BadParameters", "dangling a-arc");
  }
  // Euler characteristic of the cell structure
  int chi = euler_characteristic();
  if (declared == SurfaceKind::Disk && chi != 1) fail("BadParameters", "disk with chi != 1");
  if (declared == SurfaceKind::Annulus && chi != 0) fail("BadParameters", "annulus with chi != 0");
}

// --- moves ----------------------------------------------------------------------

namespace {

void erase_barc_if_unused(FoliatedSurface& s, int b) {
  if (s.barcs.count(b) && s.tiles_at_barc(b).empty()) s.barcs.erase(b);
}

void erase_aarc_if_unused(FoliatedSurface& s, int a) {
  if (!s.aarcs.count(a)) return;
  for (auto& [tid, t] : s.tiles)
    if (std::count(t.aarcs.begin(), t.aarcs.end(), a)) return;
  s.aarcs.erase(a);
}

}  // namespace

MoveDelta ab_stabilize(FoliatedSurface& s, int tile) {
  auto it = s.tiles.find(tile);
  if (it == s.tiles.end()) fail("WrongTileType", "no such tile");
  Tile t = it->second;
  if (t.type != TileType::AB) fail("WrongTileType", "not an ab-tile");
  const int apex = t.vertices[2];
  const int want = t.boundary == Boundary::K ? -1 : +1;
  if (s.vertices.at(apex).sign != want)
    fail("WrongSign", std::string("apex must be ") + (want > 0 ? "positive" : "negative") +
                          " for boundary " + boundary_name(t.boundary));
  // the apex must be interior to the stabilization: apex of every other ab-tile
  auto apex_tiles = s.tiles_at_vertex(apex);
  for (int tid : apex_tiles) {
    if (tid == tile) continue;
    const Tile& o = s.tiles.at(tid);
    if (o.type == TileType::AA) fail("WrongSign", "apex carries an aa-tile");
    if (o.type == TileType::AB && o.vertices[2] != apex)
      fail("WrongSign", "apex is a boundary carrier elsewhere");
  }
  const int loop_sign = -s.sings.at(t.sing).sign;

  // delete the tile, its singularity and the apex; retype the apex's others
  s.tiles.erase(tile);
  s.sings.erase(t.sing);
  for (int tid : apex_tiles) {
    if (tid == tile) continue;
    Tile& o = s.tiles.at(tid);
    if (o.type == TileType::AB) {
      // ab -> aa: carriers keep their a-arcs, b-arcs vanish
      Tile na;
      na.id = o.id;
      na.type = TileType::AA;
      na.sing = o.sing;
      na.boundary = o.boundary;
      na.vertices = {o.vertices[0], o.vertices[1]};
      na.aarcs = o.aarcs;
      o = na;
    } else {
      // bb -> ab: the apex's two sides become a-arcs on this boundary
      int k = -1;
      for (int i = 0; i < 4; ++i)
        if (o.vertices[i] == apex) k = i;
      int y = o.vertices[(k + 1) % 4], z = o.vertices[(k + 2) % 4], w = o.vertices[(k + 3) % 4];
      int by = o.barcs[(k + 1) % 4];  // (y, z)
      int bw = o.barcs[(k + 2) % 4];  // (z, w)
      Tile na;
      na.id = o.id;
      na.type = TileType::AB;
      na.sing = o.sing;
      na.boundary = t.boundary;
      na.vertices = {y, w, z};
      int ay = s.fresh_aarc_id();
      s.aarcs[ay] = {ay, y, t.boundary};
      int aw = s.fresh_aarc_id();
      s.aarcs[aw] = {aw, w, t.boundary};
      na.aarcs = {ay, aw};
      na.barcs = {by, bw};
      o = na;
    }
  }
  for (int b : t.barcs) erase_barc_if_unused(s, b);
  // drop any b-arc that still references the apex (sides of retyped bb-tiles)
  std::vector<int> dead;
  for (auto& [bid, b] : s.barcs)
    if (b.v1 == apex || b.v2 == apex) dead.push_back(bid);
  for (int bid : dead) s.barcs.erase(bid);
  for (int a : t.aarcs) erase_aarc_if_unused(s, a);
  s.vertices.erase(apex);
  return {-1, -1, loop_sign};
}

MoveDelta aa_destabilize(FoliatedSurface& s, int tile, bool transverse_only) {
  auto it = s.tiles.find(tile);
  if (it == s.tiles.end()) fail("WrongTileType", "no such tile");
  Tile t = it->second;
  if (t.type != TileType::AA) fail("WrongTileType", "not an aa-tile");
  int v = -1;
  for (int cand : t.vertices)
    if (s.valence(cand) == 1) v = cand;
  if (v == -1) fail("ValenceNotOne", "no valence-1 vertex on this tile");
  const int sign = s.sings.at(t.sing).sign;
  if (transverse_only) {
    const int want = t.boundary == Boundary::K ? +1 : -1;
    if (sign != want)
      fail("WrongSign", "destabilization along this tile is not transverse");
  }
  s.tiles.erase(tile);
  s.sings.erase(t.sing);
  for (int a : t.aarcs) erase_aarc_if_unused(s, a);
  s.vertices.erase(v);
  return {-1, -1, sign};
}

MoveDelta exchange(FoliatedSurface& s, int vertex, ExchangeVariant variant) {
  if (!s.vertices.count(vertex)) fail("NoSuchVertex", std::to_string(vertex));
  auto ts = s.tiles_at_vertex(vertex);
  if (ts.size() != 2) fail("BadValence", "vertex valence is not 2");
  Tile t1 = s.tiles.at(ts[0]), t2 = s.tiles.at(ts[1]);
  int s1 = s.sings.at(t1.sing).sign, s2 = s.sings.at(t2.sing).sign;
  if (s1 == s2) fail("SameSigns", "adjacent singularities have equal signs");

  auto expect = variant == ExchangeVariant::AA   ? TileType::AA
                : variant == ExchangeVariant::AB ? TileType::AB
                                                 : TileType::BB;
  if (t1.type != expect || t2.type != expect) fail("WrongTileType", "tiles do not match variant");

  if (variant == ExchangeVariant::AA) {
    // annihilating pair sharing both vertices
    std::set<int> va(t1.vertices.begin(), t1.vertices.end());
    std::set<int> vb(t2.vertices.begin(), t2.vertices.end());
    if (va != vb) fail("BadValence", "aa-tiles do not share both vertices");
    int other = t1.vertices[0] == vertex ? t1.vertices[1] : t1.vertices[0];
    if (s.valence(other) != 2) fail("BadValence", "partner vertex valence is not 2");
    s.tiles.erase(t1.id);
    s.tiles.erase(t2.id);
    s.sings.erase(t1.sing);
    s.sings.erase(t2.sing);
    for (int a : t1.aarcs) erase_aarc_if_unused(s, a);
    for (int a : t2.aarcs) erase_aarc_if_unused(s, a);
    s.vertices.erase(vertex);
    s.vertices.erase(other);
    return {-2, -2, 0};
  }

  if (variant == ExchangeVariant::AB) {
    // pillow: same carriers, same apex, one shared a-arc, both b-arcs shared
    if (t1.vertices[2] != t2.vertices[2]) fail("BadValence", "ab-tiles do not share their apex");
    std::set<int> c1{t1.vertices[0], t1.vertices[1]}, c2{t2.vertices[0], t2.vertices[1]};
    if (c1 != c2) fail("BadValence", "ab-tiles do not share carriers");
    int shared_a = -1;
    for (int a : t1.aarcs)
      if (std::count(t2.aarcs.begin(), t2.aarcs.end(), a)) shared_a = a;
    if (shared_a == -1) fail("BadValence", "no shared a-arc");
    int sv = s.aarcs.at(shared_a).vertex;  // the carrier swallowed by the move
    int apex = t1.vertices[2];
    if (vertex != sv && vertex != apex)
      fail("BadValence", "exchange vertex is not the shared carrier or apex");
    if (s.valence(sv) != 2 || s.valence(apex) != 2)
      fail("BadValence", "pillow vertices are not both valence 2");
    s.tiles.erase(t1.id);
    s.tiles.erase(t2.id);
    s.sings.erase(t1.sing);
    s.sings.erase(t2.sing);
    for (int a : t1.aarcs) erase_aarc_if_unused(s, a);
    for (int a : t2.aarcs) erase_aarc_if_unused(s, a);
    for (int b : t1.barcs) erase_barc_if_unused(s, b);
    for (int b : t2.barcs) erase_barc_if_unused(s, b);
    s.vertices.erase(sv);
    s.vertices.erase(apex);
    return {-2, -2, 0};
  }

  // bb: slide the vertex along the axis next to a b-arc partner; the moved
  // b-arc becomes inessential, counts unchanged.
  int partner = -1;
  for (int b : t1.barcs) {
    auto& e = s.barcs.at(b);
    if (e.v1 == vertex) partner = e.v2;
    if (e.v2 == vertex) partner = e.v1;
    if (partner != -1) break;
  }
  if (partner == -1) fail("BadValence", "vertex has no b-arc in its tiles");
  auto order = s.axis_order();
  order.erase(std::remove(order.begin(), order.end(), vertex), order.end());
  auto at = std::find(order.begin(), order.end(), partner);
  order.insert(at + 1, vertex);
  for (int i = 0; i < (int)order.size(); ++i) s.vertices.at(order[i]).axis_pos = i + 1;
  return {0, 0, 0};
}

MoveDelta remove_inessential_b_arc(FoliatedSurface& s, int barc) {
  if (!s.barcs.count(barc)) fail("NotABArc", std::to_string(barc));
  if (s.is_essential_b_arc(barc)) fail("Essential", "endpoints are not adjacent on the axis");
  const BArcEdge arc = s.barcs.at(barc);
  const int B = arc.v1, C = arc.v2;
  auto flank = s.tiles_at_barc(barc);
  auto tb = s.tiles_at_vertex(B), tc = s.tiles_at_vertex(C);
  std::sort(flank.begin(), flank.end());
  std::sort(tb.begin(), tb.end());
  std::sort(tc.begin(), tc.end());
  if (flank.empty() && tb.empty() && tc.empty()) {
    // leftover arc in an already nonsingular band: only the axis intersections go
    std::vector<int> dead;
    for (auto& [bid, e] : s.barcs)
      if (e.v1 == B || e.v2 == B || e.v1 == C || e.v2 == C) dead.push_back(bid);
    for (int bid : dead) s.barcs.erase(bid);
    s.vertices.erase(B);
    s.vertices.erase(C);
    return {-2, 0, 0};
  }
  if (flank.size() != 2 || tb != flank || tc != flank)
    fail("UnsupportedConfiguration", "endpoints carry tiles beyond the two flanking ones");

  Tile t1 = s.tiles.at(flank[0]), t2 = s.tiles.at(flank[1]);
  s.tiles.erase(t1.id);
  s.tiles.erase(t2.id);
  s.sings.erase(t1.sing);
  s.sings.erase(t2.sing);
  s.barcs.erase(barc);

  // merge the remaining edges at each dead endpoint
  for (int dead : {B, C}) {
    std::vector<int> touching;
    for (auto& [bid, e] : s.barcs)
      if (e.v1 == dead || e.v2 == dead) touching.push_back(bid);
    if (touching.size() == 2) {
      auto &e1 = s.barcs.at(touching[0]), &e2 = s.barcs.at(touching[1]);
      int far1 = e1.v1 == dead ? e1.v2 : e1.v1;
      int far2 = e2.v1 == dead ? e2.v2 : e2.v1;
      e1.v1 = far1;
      e1.v2 = far2;
      for (auto& [tid, t] : s.tiles)
        std::replace(t.barcs.begin(), t.barcs.end(), touching[1], touching[0]);
      s.barcs.erase(touching[1]);
      erase_barc_if_unused(s, touching[0]);
    } else {
      for (int bid : touching) s.barcs.erase(bid);
    }
    std::vector<int> dead_a;
    for (auto& [aid, a] : s.aarcs)
      if (a.vertex == dead) dead_a.push_back(aid);
    for (int aid : dead_a) s.aarcs.erase(aid);
    s.vertices.erase(dead);
  }

  // bigon collapse: outer edges of the dead band with equal endpoints identify
  std::vector<int> loose;
  for (auto& [bid, e] : s.barcs)
    if (s.tiles_at_barc(bid).size() == 1) loose.push_back(bid);
  for (size_t i = 0; i < loose.size(); ++i)
    for (size_t j = i + 1; j < loose.size(); ++j) {
      if (!s.barcs.count(loose[i]) || !s.barcs.count(loose[j])) continue;
      auto &e1 = s.barcs.at(loose[i]), &e2 = s.barcs.at(loose[j]);
      bool same = (e1.v1 == e2.v1 && e1.v2 == e2.v2) || (e1.v1 == e2.v2 && e1.v2 == e2.v1);
      if (same) {
        for (auto& [tid, t] : s.tiles)
          std::replace(t.barcs.begin(), t.barcs.end(), loose[j], loose[i]);
        s.barcs.erase(loose[j]);
      }
    }
  return {-2, -2, 0};
}

MoveDelta change_foliation(FoliatedSurface& s, int tile1, int tile2) {
  if (!s.tiles.count(tile1) || !s.tiles.count(tile2)) fail("NotAdjacent", "no such tile");
  Tile t1 = s.tiles.at(tile1), t2 = s.tiles.at(tile2);
  if (t1.type != TileType::BB || t2.type != TileType::BB)
    fail("WrongTileType", "change of foliation implemented for bb-bb pairs");
  int shared = -1;
  for (int b : t1.barcs)
    if (std::count(t2.barcs.begin(), t2.barcs.end(), b)) shared = b;
  if (shared == -1) fail("NotAdjacent", "tiles do not share a b-arc");
  if (s.sings.at(t1.sing).sign != s.sings.at(t2.sing).sign)
    fail("OppositeSigns", "singularities have different signs");

  // rotate corner cycles so each starts with the shared side, t1 as (v, w, ...)
  auto rotate_to = [&](Tile& t, int side) {
    int k = (int)(std::find(t.barcs.begin(), t.barcs.end(), side) - t.barcs.begin());
    std::rotate(t.vertices.begin(), t.vertices.begin() + k, t.vertices.end());
    std::rotate(t.barcs.begin(), t.barcs.begin() + k, t.barcs.end());
  };
  rotate_to(t1, shared);
  rotate_to(t2, shared);
  int v = t1.vertices[0], w = t1.vertices[1];
  int a = t1.vertices[2], b = t1.vertices[3];
  // orient t2's remaining path from v to w
  int e, f, u1, u2, u3;
  if (t2.vertices[0] == v) {
    e = t2.vertices[3], f = t2.vertices[2];
    // t2 cycle (v, w, f, e): sides (v,w)=shared, (w,f), (f,e), (e,v)
    u1 = t2.barcs[3];  // (e, v)
    u2 = t2.barcs[2];  // (f, e)
    u3 = t2.barcs[1];  // (w, f)
  } else {
    // t2 cycle (w, v, e, f): sides (w,v)=shared, (v,e), (e,f), (f,w)
    e = t2.vertices[2], f = t2.vertices[3];
    u1 = t2.barcs[1];
    u2 = t2.barcs[2];
    u3 = t2.barcs[3];
  }
  int s1 = t1.barcs[1], s2 = t1.barcs[2], s3 = t1.barcs[3];

  int X = s.fresh_barc_id();
  s.barcs[X] = {X, b, f};
  s.barcs.erase(shared);

  Tile q1;
  q1.id = t1.id;
  q1.type = TileType::BB;
  q1.sing = t1.sing;
  q1.vertices = {w, a, b, f};
  q1.barcs = {s1, s2, X, u3};
  Tile q2;
  q2.id = t2.id;
  q2.type = TileType::BB;
  q2.sing = t2.sing;
  q2.vertices = {v, e, f, b};
  q2.barcs = {u1, u2, X, s3};
  s.tiles.at(tile1) = q1;
  s.tiles.at(tile2) = q2;
  std::swap(s.sings.at(t1.sing).theta_pos, s.sings.at(t2.sing).theta_pos);
  return {0, 0, 0};
}

// --- graphs --------------------------------------------------------------------

bool FoliationGraph::is_closed_cycle_cover() const {
  std::map<int, int> deg;
  for (int v : vertices) deg[v] = 0;
  for (auto& e : edges) {
    deg[e.a] += 1;
    deg[e.b] += 1;
  }
  if (!endpoints.empty()) return false;
  for (auto& [v, d] : deg)
    if (d != 2) return false;
  return true;
}

int FoliationGraph::component_count() const {
  std::map<int, int> comp;
  for (int v : vertices) comp[v] = v;
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (auto& e : edges) comp[find(e.a)] = find(e.b);
  std::set<int> roots;
  for (int v : vertices) roots.insert(find(v));
  return (int)roots.size();
}

bool FoliationGraph::single_cycle() const {
  return is_closed_cycle_cover() && !vertices.empty() && component_count() == 1;
}

FoliationGraph extract_graph(const FoliatedSurface& s, int eps, int delta) {
  FoliationGraph g;
  g.eps = eps;
  g.delta = delta;
  for (auto& [id, v] : s.vertices)
    if (v.sign == eps) g.vertices.push_back(id);
  for (auto& [id, t] : s.tiles) {
    if (s.sings.at(t.sing).sign != delta) continue;
    std::vector<int> eps_corners;
    for (int v : t.vertices)
      if (s.vertices.at(v).sign == eps) eps_corners.push_back(v);
    if (t.type == TileType::AA && eps_corners.size() == 2) {
      g.edges.push_back({eps_corners[0], eps_corners[1], t.sing});
    } else if (eps_corners.size() == 2) {
      g.edges.push_back({eps_corners[0], eps_corners[1], t.sing});
    } else if (eps_corners.size() == 1) {
      g.endpoints.push_back(eps_corners[0]);
    }
  }
  return g;
}

int braid_index_from_counts(const FoliatedSurface& s, Boundary boundary) {
  int acc = 0;
  const int skip_tab = boundary == Boundary::K ? 2 : 1;  // ignore the other side's tab
  for (auto& [id, v] : s.vertices) {
    if (v.tab == skip_tab) continue;
    acc += v.sign;
  }
  return acc;
}

ArcPresentation graph_to_arcpres(const FoliatedSurface& s, const FoliationGraph& g) {
  if (g.vertices.empty() || !g.single_cycle()) fail("NotACycle", "graph is not a single closed cycle");
  const int n = (int)g.vertices.size();
  if ((int)g.edges.size() != n) fail("NotACycle", "edge count does not match a cycle");
  // walk the cycle (multigraph-safe: mark edges used)
  std::vector<bool> used(g.edges.size(), false);
  int start = *std::min_element(g.vertices.begin(), g.vertices.end());
  std::vector<int> vseq{start};
  std::vector<int> eseq;
  int cur = start;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < (int)g.edges.size(); ++i) {
      if (used[i]) continue;
      if (g.edges[i].a == cur || g.edges[i].b == cur) {
        pick = i;
        break;
      }
    }
    if (pick == -1) fail("NotACycle", "walk stuck");
    used[pick] = true;
    eseq.push_back(pick);
    cur = g.edges[pick].a == cur ? g.edges[pick].b : g.edges[pick].a;
    if (step + 1 < n) vseq.push_back(cur);
  }
  if (cur != start) fail("NotACycle", "walk does not close");

  // dense ranks
  auto axis = s.axis_order();
  std::map<int, int> axis_rank;
  int r = 0;
  for (int id : axis)
    if (std::count(g.vertices.begin(), g.vertices.end(), id)) axis_rank[id] = ++r;
  std::vector<std::pair<long long, int>> th;
  for (int i = 0; i < (int)g.edges.size(); ++i)
    th.push_back({s.sings.at(g.edges[i].sing).theta_pos, i});
  std::sort(th.begin(), th.end());
  std::map<int, int> theta_rank;
  for (int i = 0; i < (int)th.size(); ++i) theta_rank[th[i].second] = i + 1;

  ArcPresentation ap;
  ap.arcs = n;
  for (int i = 0; i < n; ++i) {
    ap.heights.push_back(axis_rank.at(vseq[i]));
    ap.pages.push_back(theta_rank.at(eseq[i]));
  }
  validate(ap);
  return ap;
}

// --- predicates ------------------------------------------------------------------

bool interior_vertex(const FoliatedSurface& s, int v) {
  for (auto& [id, a] : s.aarcs)
    if (a.vertex == v) return false;
  return true;
}

bool interior_valence_four(const FoliatedSurface& s) {
  for (auto& [id, v] : s.vertices)
    if (interior_vertex(s, id) && s.valence(id) != 4) return false;
  return true;
}

bool stars_alternate(const FoliatedSurface& s) {
  for (auto& [id, v] : s.vertices) {
    if (!interior_vertex(s, id)) continue;
    auto signs = s.star_signs(id);
    const int n = (int)signs.size();
    if (n % 2 != 0) return false;
    for (int i = 0; i < n; ++i)
      if (signs[i] == signs[(i + 1) % n]) return false;
  }
  return true;
}

bool star_has_both_signs(const FoliatedSurface& s, int v) {
  auto signs = s.star_signs(v);
  bool pos = false, neg = false;
  for (int x : signs) (x > 0 ? pos : neg) = true;
  return pos && neg;
}

}  // namespace tkt
