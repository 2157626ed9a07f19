#include "tkt/invariants.hpp"

#include <cmath>

namespace tkt {

TransversalityResult transversality_check(const std::vector<CylPoint>& curve, double eps) {
  if (curve.size() < 3) fail("DegenerateSegment", "need at least 3 points");
  const int N = (int)curve.size();
  const double two_pi = 8.0 * std::atan(1.0);
  for (int i = 0; i < N; ++i) {
    const CylPoint& a = curve[i];
    const CylPoint& b = curve[(i + 1) % N];
    if (a.rho < 0 || b.rho < 0) fail("DegenerateSegment", "negative radius");
    if (a.rho == b.rho && a.theta == b.theta && a.z == b.z)
      fail("DegenerateSegment", "consecutive points coincide at index " + std::to_string(i));
    double dtheta = b.theta - a.theta;
    if (i == N - 1) {
      // the closing segment continues in increasing theta to the start point
      dtheta = std::fmod(dtheta, two_pi);
      if (dtheta < 0) dtheta += two_pi;
    }
    const double mean_rho = 0.5 * (a.rho + b.rho);
    const double v = mean_rho * mean_rho * dtheta + (b.z - a.z);
    if (!(v > eps)) return {false, i};
  }
  return {true, -1};
}

namespace {

using Mat = std::vector<std::vector<LaurentPoly>>;

Mat identity_mat(int m) {
  Mat r(m, std::vector<LaurentPoly>(m));
  for (int i = 0; i < m; ++i) r[i][i] = LaurentPoly(1);
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const int m = (int)a.size();
  Mat r(m, std::vector<LaurentPoly>(m));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

// Reduced Burau matrix of a single generator sigma_i^sign on n strands.
Mat burau_letter(int n, int i, int sign) {
  const int m = n - 1;
  Mat r = identity_mat(m);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  // basis rows/cols are 0-based: e_1..e_{n-1} -> 0..m-1; generator index i in 1..n-1
  const int k = i - 1;
  if (sign > 0) {
    r[k][k] = -t;
    if (k - 1 >= 0) r[k - 1][k] = t;
    if (k + 1 < m) r[k + 1][k] = LaurentPoly(1);
  } else {
    r[k][k] = -tinv;
    if (k - 1 >= 0) r[k - 1][k] = LaurentPoly(1);
    if (k + 1 < m) r[k + 1][k] = tinv;
  }
  return r;
}

// Determinant by fraction-free expansion over column subsets (m <= 8 here).
LaurentPoly det(const Mat& a) {
  const int m = (int)a.size();
  if (m == 0) return LaurentPoly(1);
  // Laplace expansion along rows with memo over column bitmasks.
  std::vector<std::optional<LaurentPoly>> memo(1u << m);
  // minor over rows [m-popcount(mask) .. m-1] and columns in mask
  auto rec = [&](auto&& self, unsigned mask) -> LaurentPoly {
    if (mask == 0) return LaurentPoly(1);
    if (memo[mask]) return *memo[mask];
    const int row = m - __builtin_popcount(mask);
    LaurentPoly acc;
    int parity = 0;
    for (int c = 0; c < m; ++c) {
      if (!(mask & (1u << c))) continue;
      if (!a[row][c].is_zero()) {
        LaurentPoly sub = self(self, mask & ~(1u << c));
        LaurentPoly term = a[row][c] * sub;
        acc = (parity % 2 == 0) ? acc + term : acc - term;
      }
      ++parity;
    }
    memo[mask] = acc;
    return acc;
  };
  return rec(rec, (1u << m) - 1);
}

}  // namespace

std::vector<std::vector<LaurentPoly>> reduced_burau(const BraidWord& w) {
  Mat acc = identity_mat(w.strands - 1);
  for (int g : w.letters) acc = mat_mul(acc, burau_letter(w.strands, std::abs(g), g > 0 ? 1 : -1));
  return acc;
}

LaurentPoly alexander(const BraidWord& w) {
  if (!closure_is_knot(w)) fail("NotAKnot", "closure has more than one component");
  const int n = w.strands;
  Mat b = reduced_burau(w);
  for (int i = 0; i < n - 1; ++i) b[i][i] = b[i][i] - LaurentPoly(1);
  LaurentPoly d = det(b);

  // alexander = d * (1 - t) / (1 - t^n), up to units
  LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::monomial(1, 1);
  LaurentPoly one_minus_tn = LaurentPoly(1) - LaurentPoly::monomial(1, n);
  auto q = (d * one_minus_t).divided_by(one_minus_tn);
  if (!q) fail("NotAKnot", "Burau determinant not divisible by 1 - t^n");
  LaurentPoly f = *q;

  if (f.is_zero()) return f;
  // normalize: multiply by +-t^k so f(t) = f(1/t) and f(1) = 1
  const int lo = f.min_exp(), hi = f.max_exp();
  if ((lo + hi) % 2 != 0)
    fail("NotAKnot", "Alexander polynomial cannot be symmetrized");
  f = f.shifted(-(lo + hi) / 2);
  if (!(f == f.mirrored()))
    fail("NotAKnot", "Alexander polynomial not symmetric after shift");
  if (f.eval_at_one() < 0) f = -f;
  return f;
}

}  // namespace tkt
