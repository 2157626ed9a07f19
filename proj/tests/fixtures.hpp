#ifndef TKT_TEST_FIXTURES_HPP
#define TKT_TEST_FIXTURES_HPP

#include "tkt/foliation.hpp"

namespace tkt_fixtures {

using namespace tkt;

// Collar piece mid-simplification: an ab-tile on K whose apex is interior to
// the push, with a second ab-tile and a bb-tile hanging on the same apex.
// Exercises both retyping rules of the stabilization.
inline FoliatedSurface ab_fan() {
  FoliatedSurface s;
  s.declared = SurfaceKind::Other;
  // carriers u1,u2 and u3,u4 on K, apex x, bb corners y,z,w
  for (int i = 1; i <= 7; ++i) s.vertices[i] = {i, +1, 10LL * i, 0};
  s.vertices[5].sign = -1;  // x, the apex, negative for boundary K
  s.vertices[7].sign = -1;  // z keeps the bb tile two-and-two
  s.sings[1] = {1, +1, 10};
  s.sings[2] = {2, -1, 20};
  s.sings[3] = {3, +1, 30};
  s.barcs[1] = {1, 1, 5};  // u1-x
  s.barcs[2] = {2, 2, 5};  // u2-x
  s.barcs[3] = {3, 3, 5};  // u3-x
  s.barcs[4] = {4, 4, 5};  // u4-x
  s.barcs[5] = {5, 5, 6};  // x-y
  s.barcs[6] = {6, 6, 7};  // y-z
  s.barcs[7] = {7, 7, 3};  // z-u3
  s.aarcs[1] = {1, 1, Boundary::K};
  s.aarcs[2] = {2, 2, Boundary::K};
  s.aarcs[3] = {3, 3, Boundary::K};
  s.aarcs[4] = {4, 4, Boundary::K};
  s.tiles[1] = Tile{1, TileType::AB, 1, Boundary::K, {1, 2, 5}, {1, 2}, {1, 2}};
  s.tiles[2] = Tile{2, TileType::AB, 2, Boundary::K, {3, 4, 5}, {3, 4}, {3, 4}};
  // bb tile with corners (x, y, z, u3): sides x-y, y-z, z-u3, u3-x
  s.tiles[3] = Tile{3, TileType::BB, 3, Boundary::K, {5, 6, 7, 3}, {}, {5, 6, 7, 3}};
  s.validate(true);
  return s;
}

// Pillow with spectator vertices so its b-arcs are essential; simplify must
// reach it through the exchange rule rather than inessential removal.
inline FoliatedSurface spectated_pillow() {
  FoliatedSurface s = build_ab_pillow();
  s.declared = SurfaceKind::Other;
  int id1 = s.fresh_vertex_id();
  s.vertices[id1] = {id1, +1, 15, 0};
  int id2 = s.fresh_vertex_id();
  s.vertices[id2] = {id2, -1, 25, 0};
  int id3 = s.fresh_vertex_id();
  s.vertices[id3] = {id3, +1, 35, 0};
  s.validate(true);
  return s;
}

// Cyclic ladder with one same-signed adjacent panel pair (change-of-foliation
// site); the rest alternate.
inline FoliatedSurface same_sign_ladder(int n) {
  FoliatedSurface s = build_inessential_ladder(n);
  // panels alternate +,-,+,-,...; flip one to create a same-sign pair
  int first = s.tiles.begin()->first;
  int sing = s.tiles.at(first).sing;
  s.sings.at(sing).sign = -s.sings.at(sing).sign;
  return s;
}

}  // namespace tkt_fixtures

#endif
