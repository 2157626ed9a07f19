#include "tkt/arcpres.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace tkt {

void validate(const ArcPresentation& ap) {
  const int n = ap.arcs;
  if (n < 1) fail("NotPermutation", "empty presentation");
  if ((int)ap.heights.size() != n || (int)ap.pages.size() != n)
    fail("NotPermutation", "sequence length mismatch");
  auto is_perm = [n](const std::vector<int>& v) {
    std::vector<bool> seen(n + 1, false);
    for (int x : v) {
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (!is_perm(ap.heights)) fail("NotPermutation", "heights");
  if (!is_perm(ap.pages)) fail("NotPermutation", "pages");
  if (n >= 2)
    for (int t = 0; t < n; ++t)
      if (ap.heights[t] == ap.heights[(t + 1) % n]) fail("DegenerateArc", "arc " + std::to_string(t));
}

ArcPresentation two_arc_unknot() { return ArcPresentation{2, {1, 2}, {1, 2}}; }

ArcPresentation canonical_rotation(const ArcPresentation& ap) {
  const int n = ap.arcs;
  ArcPresentation best = ap;
  for (int r = 1; r < n; ++r) {
    ArcPresentation cand;
    cand.arcs = n;
    for (int t = 0; t < n; ++t) {
      cand.heights.push_back(ap.heights[(t + r) % n]);
      cand.pages.push_back(ap.pages[(t + r) % n]);
    }
    if (std::make_pair(cand.heights, cand.pages) < std::make_pair(best.heights, best.pages))
      best = cand;
  }
  return best;
}

namespace {

// Positive theta interval (from, to) covers the seam (between ranks n and 1)
// exactly when from > to.
bool covers_seam(int from, int to) { return from > to; }

ArcPresentation mirror_pages(const ArcPresentation& ap) {
  ArcPresentation m = ap;
  for (auto& p : m.pages) p = ap.arcs + 1 - p;
  return m;
}

}  // namespace

BraidWord associated_braid(const ArcPresentation& ap, BraidSide side) {
  validate(ap);
  if (side == BraidSide::AntiBraid) return associated_braid(mirror_pages(ap), BraidSide::Braid);
  const int n = ap.arcs;
  if (n == 1) return BraidWord(1, {});

  // arc at each page rank
  std::vector<int> arc_at_page(n + 1, -1);
  for (int t = 0; t < n; ++t) arc_at_page[ap.pages[t]] = t;

  // active horizontals at the seam: height of the horizontal after arc t is
  // heights[t+1]; it runs from pages[t] to pages[t+1].
  std::vector<bool> active(n + 1, false);
  for (int t = 0; t < n; ++t) {
    int tn = (t + 1) % n;
    if (covers_seam(ap.pages[t], ap.pages[tn])) active[ap.heights[tn]] = true;
  }
  const int strands = (int)std::count(active.begin(), active.end(), true);
  if (strands == 0) fail("DegenerateArc", "no strand crosses the seam");

  std::vector<int> letters;
  for (int r = 1; r <= n; ++r) {
    const int t = arc_at_page[r];
    const int a = ap.heights[t];
    const int b = ap.heights[(t + 1) % n];
    if (!active[a]) fail("DegenerateArc", "sweep invariant broken");
    active[a] = false;  // mover; remaining actives are the crossed candidates
    int pos = 1;
    for (int h = 1; h < a; ++h)
      if (active[h]) ++pos;
    if (b > a) {
      for (int h = a + 1; h < b; ++h)
        if (active[h]) letters.push_back(pos++);
    } else {
      for (int h = a - 1; h > b; --h)
        if (active[h]) letters.push_back(-(--pos));
    }
    active[b] = true;
  }
  return BraidWord(strands, letters);
}

// --- braid -> arc presentation --------------------------------------------------

ArcPresentation braid_to_arcpres(const BraidWord& w) {
  if (w.strands == 1) return two_arc_unknot();
  if (!closure_is_knot(w)) fail("NotAKnot", "closure has more than one component");

  const int n = w.strands;
  // slot ids in bottom-to-top order; active[j] = slot of strand at position j+1
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> active = order;
  int next_slot = n;
  auto order_index = [&](int slot) {
    return (int)(std::find(order.begin(), order.end(), slot) - order.begin());
  };
  struct Column {
    int from, to;
  };
  std::vector<Column> cols;

  for (int g : w.letters) {
    const int i = std::abs(g);
    if (g > 0) {
      // strand at position i climbs just over position i+1
      int mover = active[i - 1], over = active[i];
      int fresh = next_slot++;
      order.insert(order.begin() + order_index(over) + 1, fresh);
      cols.push_back({mover, fresh});
      active.erase(active.begin() + i - 1);
      active.insert(active.begin() + i, fresh);
    } else {
      // strand at position i+1 dives just under position i
      int mover = active[i], under = active[i - 1];
      int fresh = next_slot++;
      order.insert(order.begin() + order_index(under), fresh);
      cols.push_back({mover, fresh});
      active.erase(active.begin() + i);
      active.insert(active.begin() + i - 1, fresh);
    }
  }

  // return tail: strand at final sorted rank j must cross the seam at initial
  // slot j; movers go home without crossings (downs ascending, ups descending)
  std::vector<std::pair<int, int>> moves;  // (current slot, target slot)
  for (int j = 0; j < n; ++j)
    if (active[j] != j) moves.push_back({active[j], j});
  auto pos_of = [&](int slot) { return order_index(slot); };
  std::vector<std::pair<int, int>> downs, ups;
  for (auto& mv : moves)
    (pos_of(mv.second) < pos_of(mv.first) ? downs : ups).push_back(mv);
  std::sort(downs.begin(), downs.end(),
            [&](auto& x, auto& y) { return pos_of(x.second) < pos_of(y.second); });
  std::sort(ups.begin(), ups.end(),
            [&](auto& x, auto& y) { return pos_of(x.second) > pos_of(y.second); });
  for (auto& mv : downs) cols.push_back({mv.first, mv.second});
  for (auto& mv : ups) cols.push_back({mv.first, mv.second});

  // knot traversal: horizontal at height h joins the column ending at h to the
  // column starting at h
  const int total = (int)cols.size();
  std::vector<int> starts_at(next_slot, -1);
  for (int c = 0; c < total; ++c) {
    if (starts_at[cols[c].from] != -1) fail("NotAKnot", "slot reused");
    starts_at[cols[c].from] = c;
  }
  std::vector<int> orderv(total), pagev(total);
  int cur = 0;
  for (int step = 0; step < total; ++step) {
    orderv[step] = cur;
    int nxt = starts_at[cols[cur].to];
    if (nxt == -1) fail("NotAKnot", "open traversal");
    cur = nxt;
  }
  if (cur != 0) fail("NotAKnot", "traversal does not close");

  // dense height ranks by final slot order
  std::vector<int> rank(next_slot, 0);
  for (int i = 0; i < (int)order.size(); ++i) rank[order[i]] = i + 1;

  ArcPresentation ap;
  ap.arcs = total;
  for (int step = 0; step < total; ++step) {
    int c = orderv[step];
    ap.heights.push_back(rank[cols[c].from]);
    ap.pages.push_back(c + 1);
  }
  validate(ap);
  return ap;
}

// --- Cromwell moves -------------------------------------------------------------

bool pairs_interleave(int a1, int a2, int b1, int b2) {
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  int lo = std::min(a1, a2), hi = std::max(a1, a2);
  bool in1 = lo < b1 && b1 < hi;
  bool in2 = lo < b2 && b2 < hi;
  return in1 != in2;
}

std::pair<int, int> incident_pages(const ArcPresentation& ap, int height) {
  const int n = ap.arcs;
  for (int t = 0; t < n; ++t)
    if (ap.heights[t] == height) return {ap.pages[(t - 1 + n) % n], ap.pages[t]};
  fail("BadParameters", "no such height");
}

bool cromwell_II_legal(const ArcPresentation& ap, int j) {
  if (j < 1 || j >= ap.arcs) return false;
  auto [a1, a2] = incident_pages(ap, j);
  auto [b1, b2] = incident_pages(ap, j + 1);
  // identical page pairs commute (the 2-arc unknot's symmetry); a shared page
  // means one arc joins the two heights directly, and swapping them would
  // rotate that arc around the binding rather than exchange the strands
  if (std::minmax(a1, a2) == std::minmax(b1, b2)) return true;
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  return !pairs_interleave(a1, a2, b1, b2);
}

ArcPresentation cromwell_II(const ArcPresentation& ap, int j) {
  validate(ap);
  if (j < 1 || j >= ap.arcs) fail("Interleaved", "height index out of range");
  if (!cromwell_II_legal(ap, j)) fail("Interleaved", "incident page pairs interleave");
  ArcPresentation out = ap;
  for (auto& h : out.heights) {
    if (h == j)
      h = j + 1;
    else if (h == j + 1)
      h = j;
  }
  validate(out);
  return out;
}

namespace {

std::pair<int, int> arc_height_pair(const ArcPresentation& ap, int t) {
  return {ap.heights[t], ap.heights[(t + 1) % ap.arcs]};
}

int arc_at_page_rank(const ArcPresentation& ap, int rank) {
  for (int t = 0; t < ap.arcs; ++t)
    if (ap.pages[t] == rank) return t;
  fail("BadParameters", "no such page rank");
}

}  // namespace

bool cromwell_III_legal(const ArcPresentation& ap, int k) {
  if (k < 1 || k >= ap.arcs) return false;
  auto [a1, a2] = arc_height_pair(ap, arc_at_page_rank(ap, k));
  auto [b1, b2] = arc_height_pair(ap, arc_at_page_rank(ap, k + 1));
  // identical spans commute (the 2-arc unknot's rotational symmetry); arcs
  // sharing one binding point are consecutive along the knot, and swapping
  // them would drag the connecting strand around the axis
  if (std::minmax(a1, a2) == std::minmax(b1, b2)) return true;
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  return !pairs_interleave(a1, a2, b1, b2);
}

ArcPresentation cromwell_III(const ArcPresentation& ap, int k) {
  validate(ap);
  if (k < 1 || k >= ap.arcs) fail("Interleaved", "page rank out of range");
  if (!cromwell_III_legal(ap, k)) fail("Interleaved", "arc height pairs interleave");
  ArcPresentation out = ap;
  for (auto& p : out.pages) {
    if (p == k)
      p = k + 1;
    else if (p == k + 1)
      p = k;
  }
  validate(out);
  return out;
}

ArcPresentation cromwell_I_stabilize(const ArcPresentation& ap, int arc, ArcEndpoint ep,
                                     char variant) {
  validate(ap);
  const int n = ap.arcs;
  if (arc < 0 || arc >= n) fail("IllegalSite", "arc index out of range");
  if (variant != 'a' && variant != 'b') fail("IllegalSite", "variant must be a or b");

  const int vt = ap.heights[arc];
  const int vh = ap.heights[(arc + 1) % n];
  const int anchor = ep == ArcEndpoint::Tail ? vt : vh;  // endpoint being split
  // new binding point: 'a' just below the endpoint, 'b' just above
  const int c = variant == 'a' ? anchor : anchor + 1;

  ArcPresentation out;
  out.arcs = n + 1;
  auto shift_h = [&](int h) { return h >= c ? h + 1 : h; };

  const int pt = ap.pages[arc];
  // tail split: tiny arc gets the later page slot; head split: the earlier one
  const int q = ep == ArcEndpoint::Tail ? pt + 1 : pt;
  const int pmain = ep == ArcEndpoint::Tail ? pt : pt + 1;
  auto shift_p = [&](int p) { return p >= q ? p + 1 : p; };

  for (int t = 0; t < n; ++t) {
    if (t == arc) {
      if (ep == ArcEndpoint::Tail) {
        // ... v_t, c, v_{t+1} ... with pages q, p_t
        out.heights.push_back(shift_h(vt));
        out.pages.push_back(q);
        out.heights.push_back(c);
        out.pages.push_back(pmain);
      } else {
        // ... v_t, c, v_{t+1} ... with pages p_t, q
        out.heights.push_back(shift_h(vt));
        out.pages.push_back(pmain);
        out.heights.push_back(c);
        out.pages.push_back(q);
      }
    } else {
      out.heights.push_back(shift_h(ap.heights[t]));
      out.pages.push_back(shift_p(ap.pages[t]));
    }
  }
  validate(out);
  return out;
}

bool cromwell_I_destab_legal(const ArcPresentation& ap, int height) {
  const int n = ap.arcs;
  if (n <= 2 || height < 1 || height > n) return false;
  int t = -1;
  for (int i = 0; i < n; ++i)
    if (ap.heights[i] == height) t = i;
  const int prev = (t - 1 + n) % n;
  if (std::abs(ap.pages[prev] - ap.pages[t]) != 1) return false;  // non-seam theta-adjacency
  const int vin = ap.heights[prev];
  const int vout = ap.heights[(t + 1) % n];
  return std::abs(height - vin) == 1 || std::abs(height - vout) == 1;
}

ArcPresentation cromwell_I_destabilize(const ArcPresentation& ap, int height) {
  validate(ap);
  const int n = ap.arcs;
  if (!cromwell_I_destab_legal(ap, height))
    fail("IllegalSite", "height " + std::to_string(height) + " is not a collapsible corner");
  int t = -1;
  for (int i = 0; i < n; ++i)
    if (ap.heights[i] == height) t = i;
  const int prev = (t - 1 + n) % n;
  const bool incoming_tiny = std::abs(height - ap.heights[prev]) == 1;
  // the tiny arc's page disappears; the merged arc keeps the other page
  const int drop_page = incoming_tiny ? ap.pages[prev] : ap.pages[t];
  const int keep_page = incoming_tiny ? ap.pages[t] : ap.pages[prev];

  ArcPresentation out;
  out.arcs = n - 1;
  for (int i = 0; i < n; ++i) {
    if (i == t) continue;  // the binding point's sequence slot goes away
    int hv = ap.heights[i];
    int pv = i == prev ? keep_page : ap.pages[i];
    out.heights.push_back(hv > height ? hv - 1 : hv);
    out.pages.push_back(pv > drop_page ? pv - 1 : pv);
  }
  validate(out);
  return out;
}

// --- files and rendering ---------------------------------------------------------

ArcPresentation parse_grid_text(const std::string& text) {
  std::istringstream in(text);
  return parse_grid(in);
}

ArcPresentation parse_grid(std::istream& in) {
  std::vector<int> hs, ps;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    std::vector<int>* dst = nullptr;
    if (key == "heights")
      dst = &hs;
    else if (key == "pages")
      dst = &ps;
    else
      continue;
    std::string rest = line.substr(colon + 1);
    for (auto& ch : rest)
      if (ch == ',') ch = ' ';
    std::istringstream nums(rest);
    int x;
    while (nums >> x) dst->push_back(x);
  }
  if (hs.empty() || hs.size() != ps.size()) fail("NotPermutation", "bad grid file");
  ArcPresentation ap{(int)hs.size(), hs, ps};
  validate(ap);
  return ap;
}

std::string grid_to_text(const ArcPresentation& ap) {
  std::ostringstream out;
  out << "heights: ";
  for (int i = 0; i < ap.arcs; ++i) out << ap.heights[i] << (i + 1 < ap.arcs ? "," : "");
  out << "\npages: ";
  for (int i = 0; i < ap.arcs; ++i) out << ap.pages[i] << (i + 1 < ap.arcs ? "," : "");
  out << "\n";
  return out.str();
}

std::string render_grid_ascii(const ArcPresentation& ap) {
  validate(ap);
  const int n = ap.arcs;
  std::vector<std::string> rows(n, std::string(n, ' '));
  auto cell = [&](int height, int page) -> char& { return rows[n - height][page - 1]; };
  // horizontals first; verticals overwrite them (braid side: verticals on top)
  for (int t = 0; t < n; ++t) {
    int b = ap.heights[(t + 1) % n];
    int from = ap.pages[t], to = ap.pages[(t + 1) % n];
    for (int p = from % n + 1; p != to; p = p % n + 1) cell(b, p) = '-';
  }
  for (int t = 0; t < n; ++t) {
    int a = ap.heights[t], b = ap.heights[(t + 1) % n];
    int lo = std::min(a, b), hi = std::max(a, b);
    cell(lo, ap.pages[t]) = '+';
    cell(hi, ap.pages[t]) = '+';
    for (int h = lo + 1; h < hi; ++h) cell(h, ap.pages[t]) = '|';
  }
  std::string out;
  for (auto& r : rows) out += r + "\n";
  return out;
}

}  // namespace tkt
