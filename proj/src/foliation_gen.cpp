#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tkt/foliation.hpp"

// Generators, the simplification pipeline, and the surface text format.

namespace tkt {

namespace {

int modn(int x, int n) { return ((x % n) + n) % n; }

using Perm = std::vector<int>;

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (int i = 0; i < (int)p.size(); ++i) q[p[i]] = i;
  return q;
}

std::vector<std::vector<int>> cycles_of(const Perm& p) {
  const int n = (int)p.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(cyc);
  }
  return out;
}

// Permutations rho with rho(c) = c+1 exactly on the marked set.
void successor_perms(const std::vector<bool>& marked, int limit, std::vector<Perm>& out) {
  const int n = (int)marked.size();
  Perm rho(n, -1);
  std::vector<bool> used(n, false);
  for (int c = 0; c < n; ++c)
    if (marked[c]) {
      rho[c] = modn(c + 1, n);
      used[rho[c]] = true;
    }
  std::function<void(int)> rec = [&](int c) {
    if ((int)out.size() >= limit) return;
    while (c < n && rho[c] != -1) ++c;
    if (c == n) {
      out.push_back(rho);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || v == modn(c + 1, n)) continue;
      rho[c] = v;
      used[v] = true;
      rec(c + 1);
      rho[c] = -1;
      used[v] = false;
      if ((int)out.size() >= limit) return;
    }
  };
  rec(0);
}

// Conjugators pi with pi . a . pi^-1 = b (same cycle type); bounded enumeration.
void conjugators(const Perm& a, const Perm& b, int limit, std::vector<Perm>& out) {
  auto ca = cycles_of(a), cb = cycles_of(b);
  if (ca.size() != cb.size()) return;
  std::sort(ca.begin(), ca.end(), [](auto& x, auto& y) { return x.size() < y.size(); });
  std::sort(cb.begin(), cb.end(), [](auto& x, auto& y) { return x.size() < y.size(); });
  for (size_t i = 0; i < ca.size(); ++i)
    if (ca[i].size() != cb[i].size()) return;
  // group cb cycles by length for assignment
  const int n = (int)a.size();
  std::vector<int> assign(ca.size(), -1);
  std::vector<bool> taken(cb.size(), false);
  Perm pi(n, -1);
  std::function<void(size_t)> rec = [&](size_t i) {
    if ((int)out.size() >= limit) return;
    if (i == ca.size()) {
      out.push_back(pi);
      return;
    }
    for (size_t j = 0; j < cb.size(); ++j) {
      if (taken[j] || cb[j].size() != ca[i].size()) continue;
      taken[j] = true;
      const auto& A = ca[i];
      const auto& B = cb[j];
      for (size_t rot = 0; rot < B.size(); ++rot) {
        for (size_t t = 0; t < A.size(); ++t) pi[A[t]] = B[(t + rot) % B.size()];
        rec(i + 1);
        if ((int)out.size() >= limit) break;
      }
      for (int x : A) pi[x] = -1;
      taken[j] = false;
      if ((int)out.size() >= limit) return;
    }
  };
  rec(0);
}

struct SpiralParams {
  int N, k, m;
  Perm pi, tau;             // mixed b-arc wiring; rho = tau^-1 pi
  std::vector<bool> pentP;  // + family ab edges
  std::vector<bool> pentQ;
  int theta_s = 0;          // theta shift of - singularities
};

// Core spiral: P_c on one G++ cycle, Q_d on one G--, one tile per edge and
// family. ab-tiles are pentagons at the marked edges; the bb band consists of
// ladder quads whose mixed sides are (P_c, Q_pi(c)) and (P_{c+1}, Q_tau(c+1)),
// so the + and - families contribute identical mixed-side multisets and pair
// off exactly.
bool build_spiral_core(const SpiralParams& sp, FoliatedSurface& s,
                       std::vector<int>& pid, std::vector<int>& qid) {
  const int N = sp.N;
  s = FoliatedSurface{};
  s.declared = SurfaceKind::Annulus;
  pid.resize(N);
  qid.resize(N);
  // provisional interleaved axis order; re-seated for essentiality later
  for (int c = 0; c < N; ++c) {
    int v = s.fresh_vertex_id();
    s.vertices[v] = {v, +1, 1000LL * (2 * c), 0};
    pid[c] = v;
  }
  for (int d = 0; d < N; ++d) {
    int v = s.fresh_vertex_id();
    s.vertices[v] = {v, -1, 1000LL * (2 * d + 1), 0};
    qid[d] = v;
  }

  std::map<std::pair<int, int>, int> aarc_of;
  auto aarc_for = [&](int v, Boundary bd) {
    auto key = std::make_pair(v, (int)bd);
    auto it = aarc_of.find(key);
    if (it != aarc_of.end()) return it->second;
    int id = s.fresh_aarc_id();
    s.aarcs[id] = {id, v, bd};
    aarc_of[key] = id;
    return id;
  };

  struct Staged {
    TileType type;
    int sign;
    Boundary bd;
    std::vector<int> corners;
    std::vector<std::pair<int, int>> side;
  };
  std::vector<Staged> staged;
  for (int c = 0; c < N; ++c) {
    const int cn = modn(c + 1, N);
    const int a = sp.pi[c], b = sp.tau[cn];
    Staged t;
    t.sign = +1;
    t.bd = Boundary::K;
    if (sp.pentP[c]) {
      if (a != b) return false;
      t.type = TileType::AB;
      t.corners = {pid[c], pid[cn], qid[a]};
      t.side = {{pid[c], qid[a]}, {qid[a], pid[cn]}};
    } else {
      if (a == b) return false;
      t.type = TileType::BB;
      t.corners = {pid[c], pid[cn], qid[b], qid[a]};
      t.side = {{pid[c], pid[cn]}, {pid[cn], qid[b]}, {qid[b], qid[a]}, {qid[a], pid[c]}};
    }
    staged.push_back(t);
  }
  const Perm pinv = inverse_perm(sp.pi), tinv = inverse_perm(sp.tau);
  for (int d = 0; d < N; ++d) {
    const int dn = modn(d + 1, N);
    const int e = pinv[d], f = tinv[dn];
    Staged t;
    t.sign = -1;
    t.bd = Boundary::Kp;
    if (sp.pentQ[d]) {
      if (e != f) return false;
      t.type = TileType::AB;
      t.corners = {qid[d], qid[dn], pid[e]};
      t.side = {{qid[d], pid[e]}, {pid[e], qid[dn]}};
    } else {
      if (e == f) return false;
      t.type = TileType::BB;
      t.corners = {qid[d], qid[dn], pid[f], pid[e]};
      t.side = {{qid[d], qid[dn]}, {qid[dn], pid[f]}, {pid[f], pid[e]}, {pid[e], qid[d]}};
    }
    staged.push_back(t);
  }

  // pair equal-endpoint sides into b-arcs; unpaired sides become arcs bordered
  // by one tile (the nonsingular collar lies on their other side)
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> groups;
  for (int i = 0; i < (int)staged.size(); ++i)
    for (int sl = 0; sl < (int)staged[i].side.size(); ++sl) {
      auto pr = staged[i].side[sl];
      if (pr.first > pr.second) std::swap(pr.first, pr.second);
      groups[pr].push_back({i, sl});
    }
  std::map<std::pair<int, int>, int> barc_of_side;
  for (auto& [pr, refs] : groups) {
    // mixed P-Q sides must pair exactly; same-sign rails may be left single
    bool mixed = s.vertices.at(pr.first).sign != s.vertices.at(pr.second).sign;
    if (mixed && refs.size() % 2 != 0) return false;
    std::vector<bool> used(refs.size(), false);
    for (size_t i = 0; i < refs.size(); ++i) {
      if (used[i]) continue;
      int pick = -1;
      for (size_t j = i + 1; j < refs.size(); ++j)
        if (!used[j] && (staged[refs[j].first].sign != staged[refs[i].first].sign)) {
          pick = (int)j;
          break;
        }
      if (pick == -1 && mixed)
        for (size_t j = i + 1; j < refs.size(); ++j)
          if (!used[j]) {
            pick = (int)j;
            break;
          }
      used[i] = true;
      int id = s.fresh_barc_id();
      s.barcs[id] = {id, pr.first, pr.second};
      barc_of_side[refs[i]] = id;
      if (pick != -1) {
        used[pick] = true;
        barc_of_side[refs[pick]] = id;
      }
    }
  }

  for (int i = 0; i < (int)staged.size(); ++i) {
    const Staged& st = staged[i];
    Tile t;
    t.id = s.fresh_tile_id();
    t.type = st.type;
    t.boundary = st.bd;
    int sg = s.fresh_sing_id();
    long long theta;
    if (st.sign > 0)
      theta = 1000LL * (2 * i);
    else
      theta = 1000LL * (2 * modn(sp.theta_s - (i - sp.N), sp.N) + 1);
    s.sings[sg] = {sg, st.sign, theta};
    t.sing = sg;
    t.vertices = st.corners;
    for (int sl = 0; sl < (int)st.side.size(); ++sl)
      t.barcs.push_back(barc_of_side.at({i, sl}));
    if (st.type == TileType::AB)
      t.aarcs = {aarc_for(st.corners[0], st.bd), aarc_for(st.corners[1], st.bd)};
    s.tiles[t.id] = t;
  }
  return true;
}

void attach_tab(FoliatedSurface& s, int anchor, Boundary bd, int count) {
  if (count <= 0) return;
  const int tab_mark = bd == Boundary::K ? 1 : 2;
  const int sing_sign = bd == Boundary::K ? -1 : +1;
  long long base_axis = s.vertices.at(anchor).axis_pos;
  long long base_theta = 0;
  for (auto& [id, sg] : s.sings) base_theta = std::max(base_theta, sg.theta_pos);
  int prev = anchor;
  for (int i = 1; i <= count; ++i) {
    int v = s.fresh_vertex_id();
    s.vertices[v] = {v, sing_sign, base_axis + i, tab_mark};
    int sg = s.fresh_sing_id();
    s.sings[sg] = {sg, sing_sign, base_theta + (bd == Boundary::K ? i : count + i) * 7};
    int a1 = s.fresh_aarc_id();
    s.aarcs[a1] = {a1, prev, bd};
    int a2 = s.fresh_aarc_id();
    s.aarcs[a2] = {a2, v, bd};
    Tile t;
    t.id = s.fresh_tile_id();
    t.type = TileType::AA;
    t.sing = sg;
    t.boundary = bd;
    t.vertices = {prev, v};
    t.aarcs = {a1, a2};
    s.tiles[t.id] = t;
    prev = v;
  }
}

bool all_barcs_essential(const FoliatedSurface& s) {
  for (auto& [id, b] : s.barcs)
    if (!s.is_essential_b_arc(id)) return false;
  return true;
}

// Re-seat the vertices on the axis so that no b-arc joins neighbours: a
// Hamiltonian cycle of the complement of the b-arc adjacency graph.
bool spread_axis_for_essentiality(FoliatedSurface& s) {
  std::vector<int> verts;
  for (auto& [id, v] : s.vertices) verts.push_back(id);
  const int n = (int)verts.size();
  if (n < 3) return false;
  std::map<int, int> idx;
  for (int i = 0; i < n; ++i) idx[verts[i]] = i;
  std::vector<std::vector<bool>> allowed(n, std::vector<bool>(n, true));
  for (int i = 0; i < n; ++i) allowed[i][i] = false;
  for (auto& [id, b] : s.barcs) {
    allowed[idx[b.v1]][idx[b.v2]] = false;
    allowed[idx[b.v2]][idx[b.v1]] = false;
  }
  std::vector<int> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  long long budget = 2000000;
  std::function<bool()> rec = [&]() -> bool {
    if (--budget < 0) return false;
    if ((int)path.size() == n) return allowed[path.back()][path[0]];
    for (int v = 1; v < n; ++v) {
      if (used[v] || !allowed[path.back()][v]) continue;
      used[v] = true;
      path.push_back(v);
      if (rec()) return true;
      path.pop_back();
      used[v] = false;
    }
    return false;
  };
  if (!rec()) return false;
  for (int i = 0; i < n; ++i) s.vertices.at(verts[path[i]]).axis_pos = 1000LL * (i + 1);
  return true;
}

bool checkerboard_predicates(const FoliatedSurface& s, bool want_essential, int* why = nullptr) {
  auto reason = [&](int code) {
    if (why) *why = code;
    return false;
  };
  if (!interior_valence_four(s)) return reason(1);
  if (!stars_alternate(s)) return reason(2);
  auto gpp = extract_graph(s, +1, +1);
  auto gmm = extract_graph(s, -1, -1);
  // ignore tab vertices for the graph cycle checks: restrict to core
  auto core_graph = [&](FoliationGraph g) {
    std::vector<int> vs;
    for (int v : g.vertices)
      if (s.vertices.at(v).tab == 0) vs.push_back(v);
    g.vertices = vs;
    std::vector<FoliationGraph::Edge> es;
    for (auto& e : g.edges)
      if (s.vertices.at(e.a).tab == 0 && s.vertices.at(e.b).tab == 0) es.push_back(e);
    g.edges = es;
    return g;
  };
  if (!core_graph(gpp).single_cycle()) return reason(3);
  if (!core_graph(gmm).single_cycle()) return reason(4);
  if (want_essential && !all_barcs_essential(s)) return reason(5);
  return true;
}

}  // namespace

FoliatedSurface build_checkerboard_annulus(int k, int m, int p, int q) {
  if (k < 1 || m < 0 || p < 0 || q < 0) fail("BadParameters", "need k >= 1, m,p,q >= 0");
  const int N = k * (m + 1);
  const bool want_essential = N >= 3;
  const char* dbg = std::getenv("TKT_CHECKERBOARD_DEBUG");
  long long cores = 0, valid = 0;
  std::map<int, long long> why_counts;

  std::vector<bool> pentP(N, false);
  for (int c = 0; c < N; c += m + 1) pentP[c] = true;

  // rho = tau^-1 pi has successor points exactly at the + ab edges; lambda =
  // tau pi^-1 has them exactly at the - ab edges. Enumerate small solution
  // sets and the conjugators tying them together.
  std::vector<Perm> rhos;
  successor_perms(pentP, 12, rhos);
  for (const Perm& rho : rhos) {
    const Perm rho_inv = inverse_perm(rho);
    for (int r = 0; r < std::max(1, m + 1); ++r) {
      std::vector<bool> pentQ(N, false);
      for (int d = 0; d < N; d += m + 1) pentQ[modn(d + r, N)] = true;
      std::vector<Perm> lambdas;
      successor_perms(pentQ, 12, lambdas);
      for (const Perm& lambda : lambdas) {
        std::vector<Perm> pis;
        conjugators(rho_inv, lambda, 512, pis);
        for (const Perm& pi : pis) {
          // tau = pi . rho^-1
          Perm tau(N);
          for (int i = 0; i < N; ++i) tau[i] = pi[rho_inv[i]];
          // valence prefilter: ab apexes must land on the other family's
          // carriers, else an interior vertex has valence three
          {
            bool ok = true;
            for (int c = 0; c < N && ok; ++c)
              if (pentP[c]) {
                int apex = pi[c];
                if (!(pentQ[apex] || pentQ[modn(apex - 1, N)])) ok = false;
              }
            for (int d = 0; d < N && ok; ++d)
              if (pentQ[d]) {
                int apex = inverse_perm(pi)[d];
                if (!(pentP[apex] || pentP[modn(apex - 1, N)])) ok = false;
              }
            if (!ok) continue;
          }
          for (int theta_s = 0; theta_s < N; ++theta_s) {
            SpiralParams params;
            params.N = N, params.k = k, params.m = m;
            params.pi = pi, params.tau = tau;
            params.pentP = pentP, params.pentQ = pentQ;
            params.theta_s = theta_s;
            FoliatedSurface s;
            std::vector<int> pid, qid;
            ++cores;
            if (!build_spiral_core(params, s, pid, qid)) break;
            try {
              s.validate(true);
            } catch (const DomainError&) {
              break;
            }
            ++valid;
            int why = 0;
            if (!checkerboard_predicates(s, false, &why)) {
              ++why_counts[why];
              continue;
            }
            if (want_essential) {
              if (!spread_axis_for_essentiality(s)) {
                ++why_counts[5];
                continue;
              }
              s.validate(true);
              if (!checkerboard_predicates(s, true, &why)) {
                ++why_counts[why];
                continue;
              }
            }
            attach_tab(s, pid[0], Boundary::K, p);
            attach_tab(s, qid[modn(r, N)], Boundary::Kp, q);
            s.validate(true);
            return s;
          }
        }
      }
    }
  }
  if (dbg) {
    std::fprintf(stderr, "checkerboard k=%d m=%d: cores=%lld valid=%lld reasons:", k, m, cores, valid);
    for (auto& [w, c] : why_counts) std::fprintf(stderr, " %d:%lld", w, c);
    std::fprintf(stderr, "\n");
  }
  fail("BadParameters", "no conforming checkerboard for these parameters");
}

FoliatedSurface build_annulus_from_arcpres(const ArcPresentation& ap) {
  validate(ap);
  const int N = ap.arcs;
  for (int alpha = 0; alpha < N; ++alpha) {
    FoliatedSurface s;
    s.declared = SurfaceKind::Annulus;
    std::vector<int> pid(N), qid(N);
    for (int t = 0; t < N; ++t) {
      int v = s.fresh_vertex_id();
      s.vertices[v] = {v, +1, 1000LL * (2 * ap.heights[t]), 0};
      pid[t] = v;
    }
    for (int d = 0; d < N; ++d) {
      int v = s.fresh_vertex_id();
      s.vertices[v] = {v, -1, 1000LL * (2 * ap.heights[d] + 1), 0};
      qid[d] = v;
    }
    // all-pentagon spiral: + tile t has apex Q_{alpha - t}; - tile d apex P_{alpha - d}
    std::map<std::pair<int, int>, int> barc_of;
    auto barc_for = [&](int v1, int v2) {
      auto key = std::minmax(v1, v2);
      auto it = barc_of.find(std::make_pair(key.first, key.second));
      if (it != barc_of.end()) return it->second;
      int id = s.fresh_barc_id();
      s.barcs[id] = {id, key.first, key.second};
      barc_of[{key.first, key.second}] = id;
      return id;
    };
    std::map<std::pair<int, int>, int> aarc_of;
    auto aarc_for = [&](int v, Boundary bd) {
      auto key = std::make_pair(v, (int)bd);
      auto it = aarc_of.find(key);
      if (it != aarc_of.end()) return it->second;
      int id = s.fresh_aarc_id();
      s.aarcs[id] = {id, v, bd};
      aarc_of[key] = id;
      return id;
    };
    for (int t = 0; t < N; ++t) {
      int apex = qid[modn(alpha - t, N)];
      Tile tl;
      tl.id = s.fresh_tile_id();
      tl.type = TileType::AB;
      tl.boundary = Boundary::K;
      int sg = s.fresh_sing_id();
      s.sings[sg] = {sg, +1, 1000LL * (2 * ap.pages[t])};
      tl.sing = sg;
      tl.vertices = {pid[t], pid[modn(t + 1, N)], apex};
      tl.aarcs = {aarc_for(pid[t], Boundary::K), aarc_for(pid[modn(t + 1, N)], Boundary::K)};
      tl.barcs = {barc_for(pid[t], apex), barc_for(pid[modn(t + 1, N)], apex)};
      s.tiles[tl.id] = tl;
    }
    for (int d = 0; d < N; ++d) {
      int apex = pid[modn(alpha - d, N)];
      Tile tl;
      tl.id = s.fresh_tile_id();
      tl.type = TileType::AB;
      tl.boundary = Boundary::Kp;
      int sg = s.fresh_sing_id();
      s.sings[sg] = {sg, -1, 1000LL * (2 * ap.pages[d] + 1)};
      tl.sing = sg;
      tl.vertices = {qid[d], qid[modn(d + 1, N)], apex};
      tl.aarcs = {aarc_for(qid[d], Boundary::Kp), aarc_for(qid[modn(d + 1, N)], Boundary::Kp)};
      tl.barcs = {barc_for(qid[d], apex), barc_for(qid[modn(d + 1, N)], apex)};
      s.tiles[tl.id] = tl;
    }
    try {
      s.validate(true);
    } catch (const DomainError&) {
      continue;
    }
    auto gpp = extract_graph(s, +1, +1);
    auto gmm = extract_graph(s, -1, -1);
    if (!gpp.single_cycle() || !gmm.single_cycle()) continue;
    return s;
  }
  fail("BadParameters", "no conforming annulus realizes this presentation");
}

FoliatedSurface build_inessential_ladder(int n) {
  if (n < 4 || n % 2 != 0) fail("BadParameters", "need even n >= 4");
  FoliatedSurface s;
  s.declared = SurfaceKind::Other;
  std::vector<int> B(n), C(n);
  for (int i = 0; i < n; ++i) {
    B[i] = s.fresh_vertex_id();
    s.vertices[B[i]] = {B[i], +1, 10LL * i, 0};
    C[i] = s.fresh_vertex_id();
    s.vertices[C[i]] = {C[i], -1, 10LL * i + 1, 0};
  }
  std::vector<int> rung(n), railB(n), railC(n);
  for (int i = 0; i < n; ++i) {
    rung[i] = s.fresh_barc_id();
    s.barcs[rung[i]] = {rung[i], B[i], C[i]};
  }
  for (int i = 0; i < n; ++i) {
    railB[i] = s.fresh_barc_id();
    s.barcs[railB[i]] = {railB[i], B[(i + 1) % n], B[i]};
    railC[i] = s.fresh_barc_id();
    s.barcs[railC[i]] = {railC[i], C[i], C[(i + 1) % n]};
  }
  for (int i = 0; i < n; ++i) {
    Tile t;
    t.id = s.fresh_tile_id();
    t.type = TileType::BB;
    int sg = s.fresh_sing_id();
    s.sings[sg] = {sg, i % 2 == 0 ? +1 : -1, 10LL * i};
    t.sing = sg;
    int j = (i + 1) % n;
    t.vertices = {B[i], C[i], C[j], B[j]};
    t.barcs = {rung[i], railC[i], rung[j], railB[i]};
    s.tiles[t.id] = t;
  }
  s.validate(true);
  return s;
}

void insert_inessential_bubble(FoliatedSurface& s, int barc) {
  if (!s.barcs.count(barc)) fail("NotABArc", std::to_string(barc));
  auto flank = s.tiles_at_barc(barc);
  if (flank.size() != 2) fail("UnsupportedConfiguration", "b-arc must border two tiles");
  const int V1 = s.barcs.at(barc).v1, V2 = s.barcs.at(barc).v2;
  long long maxa = 0, maxt = 0;
  for (auto& [id, v] : s.vertices) maxa = std::max(maxa, v.axis_pos);
  for (auto& [id, g] : s.sings) maxt = std::max(maxt, g.theta_pos);
  int Bv = s.fresh_vertex_id();
  s.vertices[Bv] = {Bv, +1, maxa + 1, 0};
  int Cv = s.fresh_vertex_id();
  s.vertices[Cv] = {Cv, -1, maxa + 2, 0};

  int beta2 = s.fresh_barc_id();
  s.barcs[beta2] = {beta2, V1, V2};
  int rung = s.fresh_barc_id();
  s.barcs[rung] = {rung, Bv, Cv};
  int railB = s.fresh_barc_id();
  s.barcs[railB] = {railB, V1, Bv};
  int railC = s.fresh_barc_id();
  s.barcs[railC] = {railC, V2, Cv};

  // second flanking tile moves to the duplicate arc
  Tile& far = s.tiles.at(flank[1]);
  std::replace(far.barcs.begin(), far.barcs.end(), barc, beta2);

  int sg1 = s.fresh_sing_id();
  s.sings[sg1] = {sg1, +1, maxt + 1};
  int sg2 = s.fresh_sing_id();
  s.sings[sg2] = {sg2, -1, maxt + 2};
  Tile p1;
  p1.id = s.fresh_tile_id();
  p1.type = TileType::BB;
  p1.sing = sg1;
  p1.vertices = {V1, V2, Cv, Bv};
  p1.barcs = {barc, railC, rung, railB};
  s.tiles[p1.id] = p1;
  Tile p2;
  p2.id = s.fresh_tile_id();
  p2.type = TileType::BB;
  p2.sing = sg2;
  p2.vertices = {V1, V2, Cv, Bv};
  p2.barcs = {beta2, railC, rung, railB};
  s.tiles[p2.id] = p2;
}

FoliatedSurface build_ab_pillow() {
  FoliatedSurface s;
  s.declared = SurfaceKind::Disk;
  int u = 1, v = 2, x = 3;
  s.vertices[u] = {u, +1, 10, 0};
  s.vertices[v] = {v, +1, 20, 0};
  s.vertices[x] = {x, -1, 30, 0};
  s.sings[1] = {1, +1, 10};
  s.sings[2] = {2, -1, 20};
  s.barcs[1] = {1, u, x};
  s.barcs[2] = {2, v, x};
  s.aarcs[1] = {1, u, Boundary::K};   // tile 1 only
  s.aarcs[2] = {2, u, Boundary::K};   // tile 2 only
  s.aarcs[3] = {3, v, Boundary::K};   // shared
  Tile t1{1, TileType::AB, 1, Boundary::K, {u, v, x}, {1, 3}, {1, 2}};
  Tile t2{2, TileType::AB, 2, Boundary::K, {u, v, x}, {2, 3}, {1, 2}};
  s.tiles[1] = t1;
  s.tiles[2] = t2;
  s.validate(true);
  return s;
}

FoliatedSurface build_aa_pair() {
  FoliatedSurface s;
  s.declared = SurfaceKind::Annulus;
  s.vertices[1] = {1, +1, 10, 0};
  s.vertices[2] = {2, -1, 20, 0};
  s.sings[1] = {1, +1, 10};
  s.sings[2] = {2, -1, 20};
  s.aarcs[1] = {1, 1, Boundary::K};
  s.aarcs[2] = {2, 2, Boundary::K};
  s.aarcs[3] = {3, 1, Boundary::K};
  s.aarcs[4] = {4, 2, Boundary::K};
  s.tiles[1] = Tile{1, TileType::AA, 1, Boundary::K, {1, 2}, {1, 2}, {}};
  s.tiles[2] = Tile{2, TileType::AA, 2, Boundary::K, {1, 2}, {3, 4}, {}};
  s.validate(true);
  return s;
}

// --- simplification -----------------------------------------------------------------

std::pair<FoliatedSurface, FoliationTrace> simplify_annulus(const FoliatedSurface& input) {
  FoliatedSurface s = input;
  FoliationTrace trace;
  bool progress = true;
  while (progress) {
    progress = false;

    // inessential b-arcs first
    for (auto it = s.barcs.begin(); it != s.barcs.end() && !progress; ++it) {
      if (s.is_essential_b_arc(it->first)) continue;
      int id = it->first;
      try {
        FoliatedSurface copy = s;
        auto d = remove_inessential_b_arc(copy, id);
        s = std::move(copy);
        trace.steps.push_back({"remove_inessential", {id}, d.dV, d.dS});
        progress = true;
      } catch (const DomainError&) {
      }
    }
    if (progress) continue;

    // transverse destabilizations along aa-tiles
    for (auto it = s.tiles.begin(); it != s.tiles.end() && !progress; ++it) {
      if (it->second.type != TileType::AA) continue;
      int id = it->first;
      try {
        FoliatedSurface copy = s;
        auto d = aa_destabilize(copy, id, /*transverse_only=*/true);
        s = std::move(copy);
        trace.steps.push_back({"aa_destabilize", {id}, d.dV, d.dS});
        progress = true;
      } catch (const DomainError&) {
      }
    }
    if (progress) continue;

    // oppositely signed ab-pairs and aa-pairs
    std::vector<int> vids;
    for (auto& [id, v] : s.vertices) vids.push_back(id);
    for (int vid : vids) {
      for (auto variant : {ExchangeVariant::AB, ExchangeVariant::AA}) {
        try {
          FoliatedSurface copy = s;
          auto d = exchange(copy, vid, variant);
          s = std::move(copy);
          trace.steps.push_back(
              {variant == ExchangeVariant::AB ? "ab_exchange" : "aa_exchange", {vid}, d.dV, d.dS});
          progress = true;
          break;
        } catch (const DomainError&) {
        }
      }
      if (progress) break;
    }
    if (progress) continue;

    // same-signed ab-tiles sharing a b-arc would need a change of foliation on
    // ab-tiles; report instead of guessing a re-gluing.
    for (auto& [bid, b] : s.barcs) {
      auto ts = s.tiles_at_barc(bid);
      if (ts.size() != 2) continue;
      const Tile &t1 = s.tiles.at(ts[0]), &t2 = s.tiles.at(ts[1]);
      if (t1.type == TileType::AB && t2.type == TileType::AB &&
          s.sings.at(t1.sing).sign == s.sings.at(t2.sing).sign && t1.boundary == t2.boundary) {
        trace.stopped_reason = "same-signed ab-tiles share b-arc " + std::to_string(bid) +
                               "; ab-ab change of foliation unsupported";
        return {s, trace};
      }
    }
  }
  return {s, trace};
}

// --- text format --------------------------------------------------------------------

std::string surface_to_text(const FoliatedSurface& s) {
  std::ostringstream o;
  o << "surface: "
    << (s.declared == SurfaceKind::Disk      ? "disk"
        : s.declared == SurfaceKind::Annulus ? "annulus"
                                             : "other")
    << "\nvertices:\n";
  for (auto& [id, v] : s.vertices) {
    o << id << " " << (v.sign > 0 ? "+" : "-") << " " << v.axis_pos;
    if (v.tab == 1) o << " tab=K";
    if (v.tab == 2) o << " tab=K'";
    o << "\n";
  }
  o << "singularities:\n";
  for (auto& [id, g] : s.sings) o << id << " " << (g.sign > 0 ? "+" : "-") << " " << g.theta_pos << "\n";
  o << "barcs:\n";
  for (auto& [id, b] : s.barcs) o << id << " " << b.v1 << " " << b.v2 << "\n";
  o << "aarcs:\n";
  for (auto& [id, a] : s.aarcs) o << id << " " << a.vertex << " " << boundary_name(a.boundary) << "\n";
  o << "tiles:\n";
  for (auto& [id, t] : s.tiles) {
    o << id << " " << tile_type_name(t.type) << " " << t.sing << " " << boundary_name(t.boundary);
    o << " v=";
    for (size_t i = 0; i < t.vertices.size(); ++i) o << (i ? "," : "") << t.vertices[i];
    o << " a=";
    for (size_t i = 0; i < t.aarcs.size(); ++i) o << (i ? "," : "") << t.aarcs[i];
    o << " b=";
    for (size_t i = 0; i < t.barcs.size(); ++i) o << (i ? "," : "") << t.barcs[i];
    o << "\n";
  }
  return o.str();
}

namespace {
std::vector<int> parse_int_list(const std::string& str) {
  std::vector<int> out;
  std::string cur;
  for (char ch : str + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}
}  // namespace

FoliatedSurface parse_surface_text(const std::string& text) {
  FoliatedSurface s;
  std::istringstream in(text);
  std::string line, section;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("surface:", 0) == 0) {
      std::string kind = line.substr(8);
      kind.erase(std::remove_if(kind.begin(), kind.end(), ::isspace), kind.end());
      s.declared = kind == "disk"      ? SurfaceKind::Disk
                   : kind == "annulus" ? SurfaceKind::Annulus
                                       : SurfaceKind::Other;
      continue;
    }
    if (line == "vertices:" || line == "singularities:" || line == "barcs:" ||
        line == "aarcs:" || line == "tiles:") {
      section = line;
      continue;
    }
    std::istringstream ls(line);
    if (section == "vertices:") {
      int id;
      std::string sign;
      long long pos;
      ls >> id >> sign >> pos;
      FolVertex v{id, sign == "+" ? +1 : -1, pos, 0};
      std::string rest;
      while (ls >> rest) {
        if (rest == "tab=K") v.tab = 1;
        if (rest == "tab=K'") v.tab = 2;
      }
      s.vertices[id] = v;
    } else if (section == "singularities:") {
      int id;
      std::string sign;
      long long pos;
      ls >> id >> sign >> pos;
      s.sings[id] = {id, sign == "+" ? +1 : -1, pos};
    } else if (section == "barcs:") {
      int id, v1, v2;
      ls >> id >> v1 >> v2;
      s.barcs[id] = {id, v1, v2};
    } else if (section == "aarcs:") {
      int id, v;
      std::string bd;
      ls >> id >> v >> bd;
      s.aarcs[id] = {id, v, bd == "K" ? Boundary::K : Boundary::Kp};
    } else if (section == "tiles:") {
      int id, sing;
      std::string type, bd;
      ls >> id >> type >> sing >> bd;
      Tile t;
      t.id = id;
      t.sing = sing;
      t.type = type == "aa" ? TileType::AA : type == "ab" ? TileType::AB : TileType::BB;
      t.boundary = bd == "K" ? Boundary::K : Boundary::Kp;
      std::string fld;
      while (ls >> fld) {
        if (fld.rfind("v=", 0) == 0) t.vertices = parse_int_list(fld.substr(2));
        if (fld.rfind("a=", 0) == 0) t.aarcs = parse_int_list(fld.substr(2));
        if (fld.rfind("b=", 0) == 0) t.barcs = parse_int_list(fld.substr(2));
      }
      s.tiles[id] = t;
    }
  }
  s.validate(false);
  return s;
}

std::string render_surface_ascii(const FoliatedSurface& s) {
  std::ostringstream o;
  o << "tiles (theta order), shared b-arcs:\n";
  std::vector<int> ts;
  for (auto& [id, t] : s.tiles) ts.push_back(id);
  std::sort(ts.begin(), ts.end(), [&](int a, int b) {
    return s.sings.at(s.tiles.at(a).sing).theta_pos < s.sings.at(s.tiles.at(b).sing).theta_pos;
  });
  for (int id : ts) {
    const Tile& t = s.tiles.at(id);
    o << "  [" << id << "] " << tile_type_name(t.type)
      << (s.sings.at(t.sing).sign > 0 ? "+" : "-");
    if (t.type != TileType::BB) o << " on " << boundary_name(t.boundary);
    o << "  --";
    for (int b : t.barcs) {
      for (int other : s.tiles_at_barc(b))
        if (other != id) o << " b" << b << "->[" << other << "]";
    }
    o << "\n";
  }
  return o.str();
}

}  // namespace tkt
