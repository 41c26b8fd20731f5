#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dehn/matrix.hpp"
#include "dehn/slope.hpp"

namespace dehn {

/// Which oriented lens space a slope p/q on the unknot names.
enum class LensConvention {
  kSlopeNamesLens,    // p/q surgery on the unknot is L(p,q)
  kSlopeNamesMirror,  // p/q surgery on the unknot is -L(p,q) = L(p,-q)
};

/// Pinned so that (1/2, 1, 1/2) on the three-component Hopf chain is -L(3,1) = L(3,2).
inline constexpr LensConvention kLensConvention = LensConvention::kSlopeNamesLens;

/// Oriented lens space L(p,q).  p = 1 encodes S^3 (q = 0), p = 0 encodes S^1 x S^2
/// (q = 1); otherwise 0 < q < p with gcd(p,q) = 1.
class LensSpace {
 public:
  /// Reduces q mod |p| and moves the sign of p onto q.  Throws if gcd(p,q) != 1.
  LensSpace(Integer p, Integer q);

  /// Result of slope surgery on the unknot under the given convention.
  static LensSpace from_slope(const Slope& s, LensConvention convention = kLensConvention);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_sphere() const { return p_ == 1; }

  /// Representative with the smaller of q and q^-1 mod p, so == is oriented homeomorphism.
  LensSpace canonical() const;
  /// -L(p,q) = L(p,-q), canonicalized.
  LensSpace mirror() const;

  /// "S3", "S1xS2" or "L(p,q)".
  std::string to_string() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  Integer p_;
  Integer q_;
};

/// Oriented: equal p and q' = q or q q' = 1 mod p.  Unoriented also allows q' = -q and q q' = -1.
bool lens_equivalent(const LensSpace& a, const LensSpace& b, bool oriented);

/// Surgery coefficients on a linear chain of unknots, consecutive components forming
/// Hopf clasps.  An optional meridian decoration per component records that
/// component's original meridian in its current (mu, lambda) basis.
class ChainPresentation {
 public:
  explicit ChainPresentation(std::vector<Slope> coeffs, std::vector<std::optional<Slope>> meridians = {});

  /// Every component gets a fresh meridian decoration (the slope inf).
  static ChainPresentation with_meridians(std::vector<Slope> coeffs);
  /// Comma-separated slopes, e.g. "1/2,1,1/2".
  static ChainPresentation parse(std::string_view text);

  const std::vector<Slope>& coeffs() const { return coeffs_; }
  const std::vector<std::optional<Slope>>& meridians() const { return meridians_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  bool is_integral() const;

  std::string to_string() const;

  friend bool operator==(const ChainPresentation&, const ChainPresentation&) = default;

 private:
  friend ChainPresentation blow_down_chain(const ChainPresentation&, std::size_t);
  friend ChainPresentation rolfsen_twist(const ChainPresentation&, std::size_t, const Integer&);
  friend ChainPresentation slam_dunk(const ChainPresentation&);
  friend ChainPresentation drop_trivial_end(const ChainPresentation&, std::size_t);

  std::vector<Slope> coeffs_;
  std::vector<std::optional<Slope>> meridians_;
};

/// Reduces the chain by slam-dunks and Rolfsen untwists of 1/k ends to a single
/// unknot and names the result.  Infinite coefficients split the chain into a
/// connected sum.  Throws Error when the chain is not a lens space presentation
/// (a stuck chain has three or more exceptional fibres) or is a nontrivial connected sum.
LensSpace chain_to_lens(const ChainPresentation& chain, LensConvention convention = kLensConvention);

/// Replaces a non-integral terminal coefficient by its negative continued-fraction
/// expansion.  Integral or infinite terminal coefficients leave the chain unchanged.
ChainPresentation slam_dunk(const ChainPresentation& chain);
bool slam_dunk_applies(const ChainPresentation& chain);

/// Blows down the +-1 component at `index` (0-based): neighbours shift by -sign and
/// become adjacent.  Throws Error("not blow-downable") otherwise.
ChainPresentation blow_down_chain(const ChainPresentation& chain, std::size_t index);

/// t full twists along the component at `index`: p/q -> p/(q + t p) there, +t on
/// the neighbour.  Only end components (or a lone component) may be twisted: a twist
/// along an interior component would link its two neighbours, leaving the family of
/// linear chains.
ChainPresentation rolfsen_twist(const ChainPresentation& chain, std::size_t index, const Integer& t);

/// Deletes an unsurgered (infinite) end component.
ChainPresentation drop_trivial_end(const ChainPresentation& chain, std::size_t index);

struct ChainMove {
  enum class Kind { kSlamDunk, kBlowDown, kTwist, kDrop };
  Kind kind = Kind::kSlamDunk;
  std::size_t index = 0;  // 0-based
  Integer twist = 0;

  /// "slam", "blowdown 2", "twist 1 -2", "drop 3" (1-based indices).
  std::string to_string() const;
  friend bool operator==(const ChainMove&, const ChainMove&) = default;
};

/// One move per line or separated by ';'.
std::vector<ChainMove> parse_move_script(std::string_view text);
std::string format_move_script(const std::vector<ChainMove>& moves);
ChainPresentation apply_move(const ChainPresentation& chain, const ChainMove& move);
ChainPresentation apply_moves(ChainPresentation chain, const std::vector<ChainMove>& moves);

/// Greedy simplification by blow-downs and removal of 1/k and trivial ends.
struct Reduction {
  ChainPresentation result;
  std::vector<ChainMove> moves;
};
Reduction reduce_chain(const ChainPresentation& chain);

/// Tridiagonal linking matrix of an integral chain (framings on the diagonal).
IntMatrix chain_linking_matrix(const ChainPresentation& chain);

/// Data of the core link after an integral surgery on a link in S^3 that returns S^3.
struct DualPresentation {
  IntMatrix linking;          // signed, zero diagonal
  std::vector<Slope> slopes;  // slope on each core that undoes the surgery
};

/// Matrix route: the dual framing matrix is -B^-1.  Throws
/// Error("not a surgery presentation of S^3") unless B is symmetric with |det B| = 1.
DualPresentation dual_slopes_integral(const IntMatrix& b);

/// A twist along one original component, used by the blow-down oracle.
struct TwistStep {
  std::size_t component = 0;
  Integer twist = 0;
  friend bool operator==(const TwistStep&, const TwistStep&) = default;
};

struct OracleResult {
  DualPresentation dual;
  std::vector<TwistStep> steps;
};

/// Move route: puts a meridian on every component and runs explicit blow-downs and
/// end twists (bounded search) until no surgered component remains; the surviving
/// meridian slopes, in the Seifert framings of the cores, are the dual slopes.
/// Throws Error("out of oracle scope") when no reduction to the empty chain is found.
OracleResult blow_down_sequence_oracle(const ChainPresentation& chain);

/// Replays a recorded step list; throws Error if a step is illegal or the chain is not emptied.
OracleResult replay_twist_steps(const ChainPresentation& chain, const std::vector<TwistStep>& steps);

}  // namespace dehn
