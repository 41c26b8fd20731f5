#include "dehn/framed_link.hpp"

#include <algorithm>

namespace dehn {

FramedLink::FramedLink(IntMatrix linking, std::vector<Slope> slopes, std::vector<std::string> labels)
    : linking_(std::move(linking)), slopes_(std::move(slopes)), labels_(std::move(labels)) {
  const std::size_t n = slopes_.size();
  if (n == 0) throw Error("a framed link needs at least one component");
  if (linking_.rows() != n || linking_.cols() != n)
    throw Error("linking matrix is " + std::to_string(linking_.rows()) + "x" + std::to_string(linking_.cols()) +
                " but there are " + std::to_string(n) + " slopes");
  for (std::size_t i = 0; i < n; ++i) {
    if (linking_(i, i) != 0) throw Error("linking matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j)
      if (linking_(i, j) != linking_(j, i)) throw Error("linking matrix must be symmetric");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i + 1));
  } else if (labels_.size() != n) {
    throw Error("label count does not match component count");
  }
}

FramedLink FramedLink::with_slopes(std::vector<Slope> slopes) const {
  return FramedLink(linking_, std::move(slopes), labels_);
}

bool FramedLink::all_slopes_finite() const {
  return std::none_of(slopes_.begin(), slopes_.end(), [](const Slope& s) { return s.is_infinite(); });
}

bool FramedLink::all_slopes_integral() const {
  return std::all_of(slopes_.begin(), slopes_.end(), [](const Slope& s) { return s.is_integral(); });
}

SublinkSelector::SublinkSelector(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.empty()) throw Error("sublink selector must be nonempty");
}

std::string SublinkSelector::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(indices_[k] + 1);
  }
  return out + "}";
}

FramedLink sublink(const FramedLink& link, const SublinkSelector& sel) {
  const auto& idx = sel.indices();
  if (idx.back() >= link.size()) throw Error("selector out of range");
  IntMatrix lk(idx.size(), idx.size());
  std::vector<Slope> slopes;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) lk(a, b) = link.linking(idx[a], idx[b]);
    slopes.push_back(link.slope(idx[a]));
    labels.push_back(link.labels()[idx[a]]);
  }
  return FramedLink(std::move(lk), std::move(slopes), std::move(labels));
}

FramedLink permute(const FramedLink& link, const std::vector<std::size_t>& perm) {
  const std::size_t n = link.size();
  if (perm.size() != n) throw Error("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw Error("not a permutation");
    seen[p] = true;
  }
  IntMatrix lk(n, n);
  std::vector<Slope> slopes;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) lk(a, b) = link.linking(perm[a], perm[b]);
    slopes.push_back(link.slope(perm[a]));
    labels.push_back(link.labels()[perm[a]]);
  }
  return FramedLink(std::move(lk), std::move(slopes), std::move(labels));
}

std::vector<SublinkSelector> nonempty_sublinks(std::size_t n, bool proper_only) {
  std::vector<SublinkSelector> out;
  const std::size_t max_size = proper_only ? n - 1 : n;
  for (std::size_t k = 1; k <= max_size; ++k) {
    // Lexicographic k-subsets of {0..n-1}.
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
      out.emplace_back(c);
      std::size_t i = k;
      while (i > 0 && c[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace dehn
