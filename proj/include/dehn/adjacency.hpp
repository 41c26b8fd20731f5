#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dehn/framed_link.hpp"
#include "json.hpp"

namespace dehn {

/// kInconclusive is the "inconclusive-pass" outcome: every algebraic condition holds
/// but the geometric hypotheses (unknotted, split, Brunnian) are not decidable here.
enum class Verdict { kPass, kFail, kInconclusive };

std::string to_string(Verdict v);
/// CLI contract: 0 pass, 1 fail, 2 inconclusive.
int exit_code(Verdict v);

struct Violation {
  std::vector<std::size_t> components;  // 0-based
  std::string condition;
  std::string detail;
};

struct AdjacencyReport {
  Verdict verdict = Verdict::kPass;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Disjoint pairs declared as Hopf links; every other component is a split unknot.
class SplitHopfStructure {
 public:
  /// Throws Error on out-of-range or overlapping pairs.
  SplitHopfStructure(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs);

  std::size_t size() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  const std::vector<std::size_t>& singletons() const { return singletons_; }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> singletons_;
};

/// Two-component self-adjacency of S^3: pass iff lk = 0 with both slopes 1/k, or
/// |lk| = 1 with slopes (1,1/2), (1/2,1), (-1,-1/2) or (-1/2,-1).
AdjacencyReport check_pair_classification(const Integer& linking, const Slope& s1, const Slope& s2);

struct NecessaryOptions {
  /// Assume the full surgery is an integer homology sphere even where that is not forced.
  bool target_homology_sphere = false;
};

/// Algebraic necessary conditions for the link J (with its slopes) to be the dual of
/// an n-adjacency to S^3:
///   * every proper pair passes check_pair_classification;
///   * every nonempty proper sublink surgers to a homology sphere;
///   * the full surgery is a homology sphere when n >= 4, when n >= 3 with integral
///     slopes, or when requested;
///   * when n >= 4, or n = 3 and the full surgery is a homology sphere, each member of
///     a |lk| = 1 pair has linking zero with every other component.
/// Passing yields kInconclusive.
AdjacencyReport necessary_conditions(const FramedLink& link, const NecessaryOptions& options = {});

/// Self-adjacency certificate for a declared split union of Hopf links and unknots.
/// Throws Error("inconsistent declaration ...") when the declaration disagrees with
/// the linking matrix.
AdjacencyReport certify_split_hopf_form(const FramedLink& link, const SplitHopfStructure& structure);

/// Integral case: every slope is +1 or -1 (signs independent) and all pairwise
/// linking numbers vanish.  Throws Error("not an integral multi-slope").
AdjacencyReport integral_adjacency_check(const FramedLink& link);

bool is_integer_homology_sphere(const FramedLink& link);

}  // namespace dehn
