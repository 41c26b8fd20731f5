#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dehn/matrix.hpp"
#include "dehn/slope.hpp"

namespace dehn {

/// Algebraic shadow of a surgery presentation: pairwise linking numbers and one
/// slope per component.  An infinite slope marks a component that is not surgered.
class FramedLink {
 public:
  /// Validates symmetry, zero diagonal and sizes.  Empty labels become "1".."n".
  FramedLink(IntMatrix linking, std::vector<Slope> slopes, std::vector<std::string> labels = {});

  std::size_t size() const { return slopes_.size(); }
  const IntMatrix& linking() const { return linking_; }
  const Integer& linking(std::size_t i, std::size_t j) const { return linking_(i, j); }
  const std::vector<Slope>& slopes() const { return slopes_; }
  const Slope& slope(std::size_t i) const { return slopes_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  FramedLink with_slopes(std::vector<Slope> slopes) const;
  bool all_slopes_finite() const;
  bool all_slopes_integral() const;

  friend bool operator==(const FramedLink&, const FramedLink&) = default;

 private:
  IntMatrix linking_;
  std::vector<Slope> slopes_;
  std::vector<std::string> labels_;
};

/// Nonempty set of 0-based component indices, kept sorted and unique.
class SublinkSelector {
 public:
  explicit SublinkSelector(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

  /// 1-based display form, e.g. "{1,3}".
  std::string to_string() const;

  friend bool operator==(const SublinkSelector&, const SublinkSelector&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Restriction of the linking matrix, slopes and labels.  Throws Error("selector out of range").
FramedLink sublink(const FramedLink& link, const SublinkSelector& sel);

/// Component i of the result is component perm[i] of the input.
FramedLink permute(const FramedLink& link, const std::vector<std::size_t>& perm);

/// Nonempty sublinks of an n-component link ordered by size, then lexicographically.
std::vector<SublinkSelector> nonempty_sublinks(std::size_t n, bool proper_only);

}  // namespace dehn
