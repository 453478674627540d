#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entwine::la {

/// Flattening of multi-indices over V1 ⊗ ... ⊗ Vr. The leftmost factor varies
/// slowest: (i1, ..., ir) -> i1·(d2⋯dr) + ... + ir. Every tensor-product
/// matrix in the library uses this convention.
class TensorIndex {
 public:
  TensorIndex(std::initializer_list<std::size_t> dims);
  explicit TensorIndex(std::vector<std::size_t> dims);

  std::size_t rank() const { return dims_.size(); }
  std::size_t size() const { return size_; }
  std::span<const std::size_t> dims() const { return dims_; }

  /// Throws std::out_of_range for an invalid multi-index.
  std::size_t flatten(std::span<const std::size_t> multi) const;
  std::size_t flatten(std::initializer_list<std::size_t> multi) const {
    return flatten(std::span<const std::size_t>(multi.begin(), multi.size()));
  }
  std::vector<std::size_t> unflatten(std::size_t flat) const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t size_ = 1;
};

}  // namespace entwine::la
