#include "dehn/homology.hpp"

#include <algorithm>

namespace dehn {

AbelianGroup AbelianGroup::from_invariant_factors(const std::vector<Integer>& diagonal, std::size_t extra_rank) {
  AbelianGroup g;
  g.rank_ = extra_rank;
  for (const auto& d : diagonal) {
    Integer a = abs_value(d);
    if (a == 0) ++g.rank_;
    else if (a != 1) g.torsion_.push_back(a);
  }
  std::sort(g.torsion_.begin(), g.torsion_.end());
  for (std::size_t i = 1; i < g.torsion_.size(); ++i)
    if (!mpz_divisible_p(g.torsion_[i].get_mpz_t(), g.torsion_[i - 1].get_mpz_t()))
      throw Error("invariant factors do not form a divisibility chain");
  return g;
}

std::optional<Integer> AbelianGroup::order() const {
  if (rank_ > 0) return std::nullopt;
  Integer prod = 1;
  for (const auto& d : torsion_) prod *= d;
  return prod;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (rank_ == 1) out = "Z";
  else if (rank_ > 1) out = "Z^" + std::to_string(rank_);
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

nlohmann::json AbelianGroup::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& d : torsion_) t.push_back(d.get_str());
  auto ord = order();
  return {{"rank", rank_},
          {"torsion", t},
          {"order", ord ? nlohmann::json(ord->get_str()) : nlohmann::json("infinite")},
          {"text", to_string()}};
}

IntMatrix presentation_matrix(const FramedLink& link) {
  const std::size_t n = link.size();
  for (std::size_t i = 0; i < n; ++i)
    if (link.slope(i).is_infinite())
      throw Error("unsurgered component '" + link.labels()[i] + "': restrict to the surgered sublink first");
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = (i == j) ? link.slope(i).num() : Integer(link.slope(j).den() * link.linking(i, j));
  return a;
}

namespace {

struct Gcdext {
  Integer g, s, t;
};

Gcdext gcdext(const Integer& a, const Integer& b) {
  // Plain subtraction when a | b; the general coefficients can swap rows and cycle.
  if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return {a, 1, 0};
  Gcdext r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Replace rows (x, y) of m by (s*x + t*y, -(b/g)*x + (a/g)*y).
void combine_rows(IntMatrix& m, std::size_t x, std::size_t y, const Integer& s, const Integer& t, const Integer& bg,
                  const Integer& ag) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer nx = s * m(x, c) + t * m(y, c);
    Integer ny = ag * m(y, c) - bg * m(x, c);
    m(x, c) = std::move(nx);
    m(y, c) = std::move(ny);
  }
}

void combine_cols(IntMatrix& m, std::size_t x, std::size_t y, const Integer& s, const Integer& t, const Integer& bg,
                  const Integer& ag) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer nx = s * m(r, x) + t * m(r, y);
    Integer ny = ag * m(r, y) - bg * m(r, x);
    m(r, x) = std::move(nx);
    m(r, y) = std::move(ny);
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm f{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix& d = f.d;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pr == m || mpz_cmpabs(d(i, j).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0)) {
            pr = i;
            pc = j;
          }
      if (pr == m) return f;
      d.swap_rows(t, pr);
      f.u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      f.v.swap_cols(t, pc);

      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Gcdext e = gcdext(d(t, t), d(i, t));
        Integer bg = d(i, t) / e.g, ag = d(t, t) / e.g;
        combine_rows(d, t, i, e.s, e.t, bg, ag);
        combine_rows(f.u, t, i, e.s, e.t, bg, ag);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Gcdext e = gcdext(d(t, t), d(t, j));
        Integer bg = d(t, j) / e.g, ag = d(t, t) / e.g;
        combine_cols(d, t, j, e.s, e.t, bg, ag);
        combine_cols(f.v, t, j, e.s, e.t, bg, ag);
      }

      bool column_clear = true;
      for (std::size_t i = t + 1; i < m; ++i) column_clear = column_clear && d(i, t) == 0;
      if (!column_clear) continue;

      // The pivot must divide the whole trailing block; otherwise fold in an offending row.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t c = 0; c < n; ++c) d(t, c) += d(bad, c);
      for (std::size_t c = 0; c < m; ++c) f.u(t, c) += f.u(bad, c);
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < m; ++c) f.u(t, c) = -f.u(t, c);
    }
  }
  return f;
}

AbelianGroup cokernel(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  std::vector<Integer> diag;
  const std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < k; ++i) diag.push_back(f.d(i, i));
  return AbelianGroup::from_invariant_factors(diag, a.rows() - k);
}

AbelianGroup h1(const FramedLink& link) { return cokernel(presentation_matrix(link)); }

std::optional<Integer> h1_order(const FramedLink& link) {
  Integer det = determinant(presentation_matrix(link));
  if (det == 0) return std::nullopt;
  return abs_value(det);
}

std::string format_order(const std::optional<Integer>& order) { return order ? order->get_str() : "infinite"; }

}  // namespace dehn
