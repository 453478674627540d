#include "entwine/tensor_index.hpp"

#include <stdexcept>

namespace entwine::la {

TensorIndex::TensorIndex(std::initializer_list<std::size_t> dims)
    : TensorIndex(std::vector<std::size_t>(dims)) {}

TensorIndex::TensorIndex(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  for (auto d : dims_) size_ *= d;
}

std::size_t TensorIndex::flatten(std::span<const std::size_t> multi) const {
  if (multi.size() != dims_.size()) throw std::out_of_range("multi-index has wrong rank");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (multi[k] >= dims_[k]) throw std::out_of_range("multi-index component out of range");
    flat = flat * dims_[k] + multi[k];
  }
  return flat;
}

std::vector<std::size_t> TensorIndex::unflatten(std::size_t flat) const {
  if (flat >= size_) throw std::out_of_range("flat index out of range");
  std::vector<std::size_t> multi(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    multi[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return multi;
}

}  // namespace entwine::la
