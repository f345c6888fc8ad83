#include "oddgirth/enumerate.hpp"

#include <string>
#include <vector>

#include "oddgirth/error.hpp"

namespace oddgirth {

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n), pairs_(n * (n > 0 ? n - 1 : 0) / 2) {
  if (n > kMaxEnumerationOrder) {
    throw SizeLimitError("labeled enumeration limited to n <= 8, got n = " + std::to_string(n));
  }
}

Graph LabeledGraphs::at(std::uint64_t mask) const {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n_; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(n_, edges);
}

}  // namespace oddgirth
