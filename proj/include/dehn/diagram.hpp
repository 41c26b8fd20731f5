#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dehn/matrix.hpp"

namespace dehn {

/// One crossing of a signed planar-diagram code: X[a,b,c,d] with a -> c the
/// under-strand and b, d the over-strand, plus its sign and the two components.
struct Crossing {
  std::array<std::string, 4> strands;
  int sign = 0;
  std::size_t under = 0;
  std::size_t over = 0;
  std::size_t line = 0;
};

struct Diagram {
  std::vector<std::string> components;
  std::vector<Crossing> crossings;
};

/// Text format, one item per line ('#' starts a comment):
///
///   components: A B C
///   X[1,9,2,12] sign=+ comps=(A,C)
///
/// The components line is optional (it fixes component order and admits
/// crossing-free components); without it components appear in first-use order.
/// comps=(under,over).  Every edge label must occur exactly twice and always on
/// the same component.  Errors are ParseError with a 1-based line and column.
Diagram parse_pd(std::string_view text);

/// l_ij = half the signed count of crossings between components i and j.
/// Throws Error if a half-sum is not an integer.
IntMatrix linking_matrix(const Diagram& d);

}  // namespace dehn
