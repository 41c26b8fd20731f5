#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehn/adjacency.hpp"
#include "dehn/framed_link.hpp"
#include "json.hpp"

namespace dehn {

/// Two unknots with slopes 1/q1, 1/q2 and linking number l whose surgery has trivial H1.
struct PairSolution {
  Integer linking;
  Integer q1;
  Integer q2;

  friend bool operator==(const PairSolution&, const PairSolution&) = default;
  friend auto operator<=>(const PairSolution& a, const PairSolution& b) {
    return std::tie(a.linking, a.q1, a.q2) <=> std::tie(b.linking, b.q1, b.q2);
  }
};

struct PairSolutionSet {
  std::vector<PairSolution> unlinked;     // l = 0
  std::vector<PairSolution> exceptional;  // l != 0
};

/// All (l, q1, q2) with |l| <= bound_l and 1 <= |q_i| <= bound_q whose 2-component
/// surgery has H1 of order 1.  Work is split by l across threads; each family is sorted.
PairSolutionSet enumerate_pair_solutions(long bound_l, long bound_q);

struct TripleObstruction {
  std::array<Integer, 3> linking;  // l12, l13, l23
  std::array<Slope, 3> slopes;
  std::optional<Integer> order;    // nullopt when H1 is infinite
};

/// Three unknots with slopes 1/q (1 <= |q| <= bound_q) and linking numbers in {-1,0,1},
/// not all zero, where every pair passes check_pair_classification yet the full
/// surgery has H1 of order != 1.  Sorted by (linking, q1, q2, q3).
std::vector<TripleObstruction> enumerate_triple_obstructions(long bound_q);

/// Linking matrix of a split union of Hopf links (lk = +1) and unknots.
IntMatrix split_hopf_linking(const SplitHopfStructure& structure);

/// Every multi-slope accepted by certify_split_hopf_form on a split Hopf structure:
/// each pair takes one of (1,1/2), (1/2,1), (-1,-1/2), (-1/2,-1) and each singleton
/// 1/k with 1 <= |k| <= bound_k.  Units are ordered by their first component and the
/// last unit varies fastest.
class HopfBrunnianStream {
 public:
  HopfBrunnianStream(SplitHopfStructure structure, long bound_k);

  /// Next multi-slope, or nullopt when exhausted.
  std::optional<std::vector<Slope>> next();
  /// Total number of multi-slopes the stream yields.
  std::size_t count() const;
  const SplitHopfStructure& structure() const { return structure_; }

 private:
  struct Unit {
    std::vector<std::size_t> components;
    std::vector<std::vector<Slope>> options;
  };
  SplitHopfStructure structure_;
  std::vector<Unit> units_;
  std::vector<std::size_t> cursor_;
  bool done_ = false;
};

HopfBrunnianStream enumerate_hopf_brunnian_slopes(std::size_t n,
                                                  std::vector<std::pair<std::size_t, std::size_t>> pairs,
                                                  long bound_k);

std::string pair_solutions_csv(const PairSolutionSet& set);
std::string pair_solutions_jsonl(const PairSolutionSet& set);
std::string triple_obstructions_csv(const std::vector<TripleObstruction>& rows);
std::string triple_obstructions_jsonl(const std::vector<TripleObstruction>& rows);
std::string multi_slope_csv_header(std::size_t n);
std::string multi_slope_csv_row(const std::vector<Slope>& slopes);
std::string multi_slope_jsonl_row(const std::vector<Slope>& slopes);

}  // namespace dehn
