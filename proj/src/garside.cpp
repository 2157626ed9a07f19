#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "tkt/braid.hpp"

// Left-greedy (Garside) normal form over the permutation-braid lattice.
// A permutation braid is stored as the permutation taking bottom positions to
// top positions; Delta is the half twist i -> n-1-i (0-based).

namespace tkt {
namespace {

using Perm = std::vector<int>;

Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm half_twist(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

bool is_identity(const Perm& p) {
  for (int i = 0; i < (int)p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (int i = 0; i < (int)p.size(); ++i) q[p[i]] = i;
  return q;
}

// compose(f, g): apply f first, then g.
Perm compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (int i = 0; i < (int)f.size(); ++i) r[i] = g[f[i]];
  return r;
}

// sigma_i left-divides the permutation braid P  <=>  P(i) > P(i+1)   (0-based i)
bool left_divisible(const Perm& p, int i) { return p[i] > p[i + 1]; }

// Post-multiply by sigma_i (valid when strands ending at i, i+1 have not crossed).
void mul_right_sigma(Perm& p, int i) {
  // p' (x) = s_i(p(x))
  for (auto& x : p) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
}

// Pre-multiply quotient: replace Q by sigma_i^-1 Q, i.e. swap inputs i, i+1.
void strip_left_sigma(Perm& p, int i) { std::swap(p[i], p[i + 1]); }

// Greatest common left-divisor of permutation braids a, b (greedy extension).
Perm meet(Perm a, Perm b) {
  const int n = (int)a.size();
  Perm c = identity(n);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (left_divisible(a, i) && left_divisible(b, i)) {
        mul_right_sigma(c, i);
        strip_left_sigma(a, i);
        strip_left_sigma(b, i);
        progress = true;
      }
    }
  }
  return c;
}

// Conjugation by Delta: tau(P) = Delta P Delta^-1, on permutations w p w.
Perm tau(const Perm& p, const Perm& w) { return compose(w, compose(p, w)); }

struct GarsideForm {
  int n;
  long long delta = 0;
  std::vector<Perm> factors;

  bool operator==(const GarsideForm& o) const {
    return n == o.n && delta == o.delta && factors == o.factors;
  }
};

GarsideForm canonical_form(const BraidWord& w) {
  const int n = w.strands;
  const Perm omega = half_twist(n);
  GarsideForm f;
  f.n = n;

  // Convert to Delta^k . P_1 ... P_m with permutation-braid factors.
  for (int g : w.letters) {
    int i = std::abs(g) - 1;
    if (g > 0) {
      Perm s = identity(n);
      mul_right_sigma(s, i);
      f.factors.push_back(s);
    } else {
      // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1), the parenthesis a perm braid
      f.delta -= 1;
      for (auto& p : f.factors) p = tau(p, omega);
      Perm r = omega;  // r = Delta sigma_i^-1: apply Delta then s_i^-1
      // strand ending at position i now ends at i+1 and vice versa
      for (auto& x : r) {
        if (x == i)
          x = i + 1;
        else if (x == i + 1)
          x = i;
      }
      f.factors.push_back(r);
    }
  }

  // Left-weight the factor sequence.
  bool changed = true;
  while (changed) {
    changed = false;
    // drop identities
    f.factors.erase(std::remove_if(f.factors.begin(), f.factors.end(),
                                   [](const Perm& p) { return is_identity(p); }),
                    f.factors.end());
    // absorb Delta factors to the left
    for (size_t j = 0; j < f.factors.size(); ++j) {
      if (f.factors[j] == omega) {
        for (size_t t = 0; t < j; ++t) f.factors[t] = tau(f.factors[t], omega);
        f.factors.erase(f.factors.begin() + j);
        f.delta += 1;
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (size_t j = 0; j + 1 < f.factors.size(); ++j) {
      // C = meet(dA, B) with dA = A^-1 Delta
      Perm dA = compose(inverse(f.factors[j]), omega);
      Perm c = meet(dA, f.factors[j + 1]);
      if (!is_identity(c)) {
        f.factors[j] = compose(f.factors[j], c);
        Perm q = f.factors[j + 1];
        // q <- c^-1 q
        Perm cinv = inverse(c);
        f.factors[j + 1] = compose(cinv, q);
        changed = true;
      }
    }
  }
  return f;
}

}  // namespace

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) fail("StrandMismatch", "words live on different strand counts");
  return canonical_form(a) == canonical_form(b);
}

std::string garside_key(const BraidWord& w) {
  GarsideForm f = canonical_form(w);
  std::ostringstream out;
  out << f.n << "|" << f.delta;
  for (const auto& p : f.factors) {
    out << "|";
    for (int x : p) out << x << ",";
  }
  return out.str();
}

}  // namespace tkt
