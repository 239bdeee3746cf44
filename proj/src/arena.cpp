#include "lyapcomp/arena.hpp"

#include "lyapcomp/errors.hpp"

#include <string>

namespace lyap {

VectorArena::VectorArena(std::size_t dim, long capacity)
    : dim_(dim), cap_(capacity > 0 ? capacity : -1) {
  if (dim_ == 0) throw UsageError("VectorArena: dim must be positive");
}

double* VectorArena::acquire() {
  if (cap_ > 0 && live_ == cap_)
    throw CapExceeded("vector budget exhausted: " + std::to_string(cap_) +
                      " slots live");
  double* slot;
  if (!free_.empty()) {
    slot = free_.back();
    free_.pop_back();
  } else {
    blocks_.push_back(std::make_unique<double[]>(dim_));
    slot = blocks_.back().get();
  }
  outstanding_.insert(slot);
  ++live_;
  if (live_ > peak_) peak_ = live_;
  return slot;
}

void VectorArena::release(double* slot) {
  auto it = outstanding_.find(slot);
  if (it == outstanding_.end())
    throw UsageError("VectorArena: releasing a pointer that is not a live slot");
  outstanding_.erase(it);
  free_.push_back(slot);
  --live_;
}

}  // namespace lyap
