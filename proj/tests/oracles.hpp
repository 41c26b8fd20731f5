#pragma once

// Reference computations for the tests.  These deliberately avoid the library's
// algorithms: determinants by cofactor expansion, Smith forms by remainder-only
// elementary operations and by determinantal divisors, lens spaces by linking forms.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Mat = std::vector<std::vector<Z>>;

inline Z cofactor_det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Z total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Z> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Z term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Z(-term);
  }
  return total;
}

// Determinant by Gaussian elimination over the rationals, for matrices too large
// for cofactor expansion.
inline Z rational_det(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det.get_num();
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Invariant factors (nonzero ones, with 1s kept) from gcds of k x k minors.
inline std::vector<Z> determinantal_invariant_factors(const Mat& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Z> out;
  Z prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Z g = 0;
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        Mat sub;
        for (auto r : rs) {
          std::vector<Z> row;
          for (auto c : cs) row.push_back(m[r][c]);
          sub.push_back(std::move(row));
        }
        Z d = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Textbook reduction using only swaps, negations and subtracting integer multiples:
// move the smallest entry to the corner, take remainders along its row and column,
// and repeat until the corner divides everything.  Returns the full diagonal.
inline std::vector<Z> naive_smith_diagonal(Mat m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Z> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
      if (pr == rows) {
        for (std::size_t k = t; k < std::min(rows, cols); ++k) diag.push_back(0);
        return diag;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

inline Mat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Mat m(rows, std::vector<Z>(cols));
  for (auto& row : m)
    for (auto& x : row) x = dist(rng);
  return m;
}

// |q1 q2 l^2 - 1|: order of H1 for 1/q1, 1/q2 surgery on a two-component link.
inline Z pair_order_formula(long l, long q1, long q2) { return abs(Z(q1) * q2 * l * l - 1); }

// A negative continued fraction of p/q built with floor + 1 steps, which differs from
// the library's ceiling rule on integers; any such expansion presents the same manifold.
inline std::vector<Z> floor_expansion(Z p, Z q) {
  if (q < 0) p = -p, q = -q;
  std::vector<Z> out;
  while (q != 0) {
    Z a;
    mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (a * q == p) {
      out.push_back(a);
      break;
    }
    a += 1;
    out.push_back(a);
    // p/q = a - 1/x  =>  x = q / (a q - p)
    Z np = q, nq = a * q - p;
    p = np;
    q = nq;
  }
  return out;
}

// Plumbing matrix of a linear chain with rational coefficients: each rational vertex
// becomes its integral expansion hanging off the chain as a tail.
inline Mat plumbing_matrix(const std::vector<std::pair<Z, Z>>& chain) {
  std::vector<Z> framing;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> head;
  for (const auto& [p, q] : chain) {
    auto e = floor_expansion(p, q);
    head.push_back(framing.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) edges.emplace_back(framing.size() - 1, framing.size());
      framing.push_back(e[k]);
    }
  }
  for (std::size_t i = 0; i + 1 < head.size(); ++i) edges.emplace_back(head[i], head[i + 1]);
  Mat b(framing.size(), std::vector<Z>(framing.size()));
  for (std::size_t i = 0; i < framing.size(); ++i) b[i][i] = framing[i];
  for (auto [x, y] : edges) b[x][y] = b[y][x] = 1;
  return b;
}

// Rational inverse by Gauss-Jordan over mpq.
inline std::optional<std::vector<std::vector<mpq_class>>> rational_inverse(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<mpq_class>> out(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

// Self-linking numerator x of a generator of H1 (cyclic of order p) under the form
// B^-1, i.e. lk(g,g) = x/p mod 1.  Tries single meridians, then sums and differences of two.
inline std::optional<Z> generator_self_linking(const Mat& b, const Z& p) {
  auto inv = rational_inverse(b);
  if (!inv) return std::nullopt;
  const std::size_t n = b.size();
  auto try_vector = [&](const std::vector<int>& c) -> std::optional<Z> {
    mpq_class v = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c[i] && c[j]) v += c[i] * c[j] * (*inv)[i][j];
    v.canonicalize();
    if (v.get_den() != p) return std::nullopt;
    Z x = v.get_num() % p;
    if (x < 0) x += p;
    return x;
  };
  std::vector<int> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = 1;
    if (auto x = try_vector(c)) return x;
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        c[j] = s;
        if (auto x = try_vector(c)) return x;
        c[j] = 0;
      }
    c[i] = 0;
  }
  return std::nullopt;
}

// L(p,q) and the form x/p agree when x = eps * u^2 * q mod p for a unit u.
inline bool form_matches_lens(const Z& x, const Z& p, const Z& q, int eps) {
  for (Z u = 1; u < p; ++u) {
    Z g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    if (g != 1) continue;
    Z lhs = (Z(eps) * u * u * q - x) % p;
    if (lhs == 0) return true;
  }
  return p == 1;
}

}  // namespace oracle
