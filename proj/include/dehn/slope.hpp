#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dehn/integer.hpp"

namespace dehn {

/// A surgery slope p/q on a torus boundary, written in a fixed meridian/longitude
/// basis as p*mu + q*lambda.  Values are kept reduced with q >= 0; the meridian
/// (trivial filling) is the canonical infinity 1/0.
class Slope {
 public:
  /// Reduces to canonical form.  Throws Error("undefined slope") for 0/0.
  Slope(Integer p, Integer q = 1);

  static Slope infinity() { return Slope(1, 0); }

  /// Accepts "p/q", "p" and "inf".
  static Slope parse(std::string_view text);

  const Integer& num() const { return p_; }
  const Integer& den() const { return q_; }

  bool is_infinite() const { return q_ == 0; }
  bool is_integral() const { return q_ == 1; }
  /// True for slopes 1/k with k a nonzero integer (the homology-sphere fillings of an unknot).
  bool is_reciprocal_integer() const { return q_ != 0 && abs_value(p_) == 1; }

  /// "p/q", "p" when q = 1, "inf" for the meridian.
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Numeric order on finite slopes; infinity sorts last.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  Integer p_;
  Integer q_;
};

/// Geometric intersection number |p_a q_b - p_b q_a|.
Integer slope_distance(const Slope& a, const Slope& b);

/// a - 1/b in extended rationals.  Throws Error("indeterminate chain") for inf - inf.
Slope subtract_reciprocal(const Slope& a, const Slope& b);

Slope add_integer(const Slope& a, const Integer& t);

/// Negative continued fraction r = c1 - 1/(c2 - 1/(... - 1/cm)).  Each step takes
/// c = ceil(r) (or r itself when integral), so every entry after the first is >= 2.
std::vector<Integer> cf_negative_expand(const Slope& r);

/// Nested evaluation r1 - 1/(r2 - 1/(... rn)), exact; infinity is a legal result.
Slope cf_chain_evaluate(std::span<const Slope> coeffs);

std::vector<Slope> parse_slope_list(std::string_view text);
std::string format_slope_list(std::span<const Slope> slopes);

}  // namespace dehn
