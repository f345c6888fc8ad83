#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>

#include "oddgirth/graph.hpp"

namespace oddgirth {

inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Every labeled simple graph on n vertices, once each, in increasing order
/// of the edge bitmask. Bit i of the mask is the i-th vertex pair in graph6
/// order: (0,1), (0,2), (1,2), (0,3), ...
///
/// The range is indexable by mask so callers can partition it.
class LabeledGraphs {
 public:
  /// Throws SizeLimitError for n > kMaxEnumerationOrder.
  explicit LabeledGraphs(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << pairs_; }
  Graph at(std::uint64_t mask) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const LabeledGraphs* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}

    Graph operator*() const { return owner_->at(mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++mask_;
      return copy;
    }
    std::uint64_t mask() const noexcept { return mask_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const LabeledGraphs* owner_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

 private:
  std::size_t n_;
  std::size_t pairs_;
};

inline LabeledGraphs enumerate_labeled_graphs(std::size_t n) { return LabeledGraphs(n); }

}  // namespace oddgirth
