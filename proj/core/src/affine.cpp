#include "pcsp/affine.hpp"

#include <algorithm>

namespace pcsp {

F2AffineHull affine_hull_f2(const Relation& r) {
  require(!r.empty(), Errc::EmptyRelation, "affine hull of the empty relation");
  const auto members = r.members();
  F2AffineHull h;
  h.offset = members[0];
  // Row-reduced F2 basis of the differences, leading bit per vector.
  std::vector<std::uint32_t> basis;
  for (auto m : members) {
    std::uint32_t d = m ^ h.offset;
    for (auto b : basis) d = std::min(d, d ^ b);
    if (d) {
      basis.push_back(d);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  h.basis = std::move(basis);
  return h;
}

Relation f2_hull_points(int arity, const F2AffineHull& h) {
  Relation out(arity);
  const std::size_t n = h.basis.size();
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << n); ++sub) {
    std::uint32_t x = h.offset;
    for (std::size_t i = 0; i < n; ++i)
      if ((sub >> i) & 1) x ^= h.basis[i];
    out.insert(x);
  }
  return out;
}

namespace {

// Echelon basis over Q with recorded pivot columns.
struct RationalEchelon {
  std::vector<std::vector<Rational>> rows;
  std::vector<int> pivots;

  // Reduces v against the basis; inserts the remainder if nonzero.
  bool insert(std::vector<Rational> v) {
    const int k = static_cast<int>(v.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& c = v[pivots[i]];
      if (c != 0) {
        const Rational f = c;
        for (int j = 0; j < k; ++j) v[j] -= f * rows[i][j];
      }
    }
    int piv = -1;
    for (int j = 0; j < k; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    const Rational lead = v[piv];
    for (int j = 0; j < k; ++j) v[j] /= lead;
    // Back-reduce earlier rows for a clean reduced echelon form.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational f = rows[i][piv];
      if (f != 0)
        for (int j = 0; j < k; ++j) rows[i][j] -= f * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
};

std::vector<Integer> to_primitive_integer(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& c : v) lcm = lcm * c.get_den() / gcd(lcm, Integer(c.get_den()));
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[j] = Integer(v[j].get_num()) * (lcm / v[j].get_den());
    g = gcd(g, out[j]);
  }
  if (g > 1)
    for (auto& c : out) c /= g;
  // Sign convention: first nonzero coefficient positive.
  for (const auto& c : out) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& d : out) d = -d;
    break;
  }
  return out;
}

} // namespace

std::vector<IntAffineEquation> affine_hull_z(const Relation& r) {
  require(!r.empty(), Errc::EmptyRelation, "affine hull of the empty relation");
  const int k = r.arity();
  const auto members = r.members();
  const std::uint32_t x0 = members[0];

  RationalEchelon span;
  for (auto m : members) {
    if (static_cast<int>(span.rows.size()) == k) break;
    std::vector<Rational> d(k);
    for (int j = 0; j < k; ++j)
      d[j] = Rational(int((m >> j) & 1) - int((x0 >> j) & 1));
    span.insert(std::move(d));
  }

  // Kernel of the span: for every free column one equation.
  std::vector<bool> is_pivot(k, false);
  for (int p : span.pivots) is_pivot[p] = true;

  std::vector<IntAffineEquation> out;
  for (int f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> a(k);
    a[f] = 1;
    // a . row = 0 for each basis row determines the pivot coordinates.
    for (std::size_t i = 0; i < span.rows.size(); ++i) a[span.pivots[i]] = -span.rows[i][f];
    IntAffineEquation eq;
    eq.coeffs = to_primitive_integer(a);
    eq.rhs = 0;
    for (int j = 0; j < k; ++j)
      if ((x0 >> j) & 1) eq.rhs += eq.coeffs[j];
    out.push_back(std::move(eq));
  }
  return out;
}

std::optional<std::vector<Integer>> solve_integer_linear(std::vector<std::vector<Integer>> a,
                                                         std::vector<Integer> b) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  require(static_cast<int>(b.size()) == m, Errc::LengthMismatch, "rhs length mismatch");

  // Column operations are accumulated in tr: x = tr * y.
  std::vector<std::vector<Integer>> tr(n, std::vector<Integer>(n, 0));
  for (int j = 0; j < n; ++j) tr[j][j] = 1;

  auto swap_rows = [&](int i1, int i2) {
    std::swap(a[i1], a[i2]);
    std::swap(b[i1], b[i2]);
  };
  auto swap_cols = [&](int j1, int j2) {
    for (int i = 0; i < m; ++i) std::swap(a[i][j1], a[i][j2]);
    for (int r = 0; r < n; ++r) std::swap(tr[r][j1], tr[r][j2]);
  };

  const int rank_cap = std::min(m, n);
  int d = 0;
  for (; d < rank_cap; ++d) {
    while (true) {
      // Smallest nonzero entry of the trailing submatrix into (d, d).
      int pi = -1, pj = -1;
      for (int i = d; i < m; ++i)
        for (int j = d; j < n; ++j)
          if (a[i][j] != 0 &&
              (pi < 0 || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      if (pi != d) swap_rows(pi, d);
      if (pj != d) swap_cols(pj, d);

      bool clean = true;
      for (int i = d + 1; i < m; ++i) {
        if (a[i][d] == 0) continue;
        const Integer q = a[i][d] / a[d][d]; // truncated division
        if (q != 0) {
          for (int j = d; j < n; ++j) a[i][j] -= q * a[d][j];
          b[i] -= q * b[d];
        }
        if (a[i][d] != 0) clean = false;
      }
      for (int j = d + 1; j < n; ++j) {
        if (a[d][j] == 0) continue;
        const Integer q = a[d][j] / a[d][d];
        if (q != 0) {
          for (int i = d; i < m; ++i) a[i][j] -= q * a[i][d];
          for (int r = 0; r < n; ++r) tr[r][j] -= q * tr[r][d];
        }
        if (a[d][j] != 0) clean = false;
      }
      if (clean && a[d][d] != 0) break;
    }
    if (a[d][d] == 0) break; // trailing submatrix is zero
  }

  std::vector<Integer> y(n, 0);
  for (int i = 0; i < d; ++i) {
    if (b[i] % a[i][i] != 0) return std::nullopt;
    y[i] = b[i] / a[i][i];
  }
  for (int i = d; i < m; ++i)
    if (b[i] != 0) return std::nullopt;

  std::vector<Integer> x(n, 0);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < d; ++j) x[r] += tr[r][j] * y[j];
  return x;
}

} // namespace pcsp
