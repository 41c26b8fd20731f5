#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dehn/framed_link.hpp"
#include "dehn/matrix.hpp"
#include "json.hpp"

namespace dehn {

/// Finitely generated abelian group Z^rank + Z/d1 + ... with d1 | d2 | ... and every d >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Takes arbitrary diagonal entries (e.g. of a Smith form): zeros add rank,
  /// units vanish, the rest must already form a divisibility chain up to sign.
  static AbelianGroup from_invariant_factors(const std::vector<Integer>& diagonal, std::size_t extra_rank = 0);

  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t rank() const { return rank_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  /// Product of the torsion factors, or nullopt when the rank is positive.
  std::optional<Integer> order() const;

  /// "0", "Z", "Z^2 + Z/3", ...
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<Integer> torsion_;
  std::size_t rank_ = 0;
};

/// Relation matrix of H1 of the surgered manifold: A_ii = p_i, A_ij = q_j * l_ij.
/// Throws Error when a component carries the infinite slope.
IntMatrix presentation_matrix(const FramedLink& link);

struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative, d_i | d_{i+1}.
SmithForm smith_normal_form(const IntMatrix& a);

/// Cokernel Z^rows / A Z^cols.
AbelianGroup cokernel(const IntMatrix& a);

AbelianGroup h1(const FramedLink& link);

/// |det| of the presentation matrix, or nullopt ("infinite") when it vanishes.
std::optional<Integer> h1_order(const FramedLink& link);

std::string format_order(const std::optional<Integer>& order);

}  // namespace dehn
