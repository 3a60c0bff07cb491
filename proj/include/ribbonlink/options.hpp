/*
 * options.hpp
 * -----------
 * Knobs for the state-sum kernels. Both the subgraph expansion and the
 * bracket walk all 2^e states, so e is capped before enumeration starts.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace ribbonlink {

struct EnumOptions {
  int max_edges = 30;  // refuse instances with more edges (or crossings)
  int threads = 0;     // OpenMP thread count; 0 = runtime default
};

class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(int size, int limit)
      : std::runtime_error("instance size " + std::to_string(size) +
                           " exceeds the enumeration limit of " + std::to_string(limit) +
                           " (raise --max-edges to override)"),
        size_(size), limit_(limit) {}
  int size() const { return size_; }
  int limit() const { return limit_; }

 private:
  int size_;
  int limit_;
};

}  // namespace ribbonlink
