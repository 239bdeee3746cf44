#pragma once

#include <cstddef>
#include <memory>
#include <unordered_set>
#include <vector>

namespace lyap {

/** Pool of length-N work vectors with a hard budget and peak tracking.
 *  The solvers charge every stored basis vector, recurrence vector and
 *  accumulator against one arena, so peak() is the memory figure a run
 *  reports. Slots are raw pointers with stable addresses; releasing returns
 *  a slot to the free list without freeing memory. The arena does not track
 *  which slots are still referenced at destruction, callers drop their
 *  pointers when the arena goes away. */
class VectorArena {
 public:
  /** capacity <= 0 means unbounded (testing configurations). */
  VectorArena(std::size_t dim, long capacity);

  VectorArena(const VectorArena&) = delete;
  VectorArena& operator=(const VectorArena&) = delete;

  /** Returns an uninitialized slot. Throws CapExceeded when live() == capacity(). */
  double* acquire();

  /** Throws UsageError when the pointer is not a live slot of this arena. */
  void release(double* slot);

  std::size_t dim() const { return dim_; }
  long capacity() const { return cap_; }
  long live() const { return live_; }
  long peak() const { return peak_; }

 private:
  std::size_t dim_;
  long cap_;
  long live_ = 0;
  long peak_ = 0;
  std::vector<std::unique_ptr<double[]>> blocks_;
  std::vector<double*> free_;
  std::unordered_set<double*> outstanding_;
};

}  // namespace lyap
