#include "asymlink/kernels.hpp"

namespace asymlink::kernels {

namespace scalar {

std::size_t intersect_count(IdSpan a, IdSpan b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::size_t intersect_positions(IdSpan a, IdSpan b, std::uint32_t* pos_a,
                                std::uint32_t* pos_b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      pos_a[n] = static_cast<std::uint32_t>(i);
      pos_b[n] = static_cast<std::uint32_t>(j);
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace scalar

namespace gallop {

namespace {

// First index in [from, size) with large[idx] >= key.
std::size_t lower_bound_from(IdSpan large, std::size_t from, std::uint32_t key) {
  std::size_t step = 1;
  std::size_t lo = from;
  std::size_t hi = from;
  while (hi < large.size() && large[hi] < key) {
    lo = hi + 1;
    hi += step;
    step <<= 1;
  }
  if (hi > large.size()) hi = large.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (large[mid] < key) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

std::size_t intersect_count(IdSpan small, IdSpan large) {
  std::size_t n = 0;
  std::size_t j = 0;
  for (std::uint32_t key : small) {
    j = lower_bound_from(large, j, key);
    if (j == large.size()) break;
    if (large[j] == key) {
      ++n;
      ++j;
    }
  }
  return n;
}

std::size_t intersect_positions(IdSpan small, IdSpan large,
                                std::uint32_t* pos_small,
                                std::uint32_t* pos_large) {
  std::size_t n = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    j = lower_bound_from(large, j, small[i]);
    if (j == large.size()) break;
    if (large[j] == small[i]) {
      pos_small[n] = static_cast<std::uint32_t>(i);
      pos_large[n] = static_cast<std::uint32_t>(j);
      ++n;
      ++j;
    }
  }
  return n;
}

}  // namespace gallop

}  // namespace asymlink::kernels
