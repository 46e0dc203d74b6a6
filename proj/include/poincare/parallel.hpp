#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace poincare::parallel {

enum class ExecMode { serial, openmp };

// Number of threads actually used for `requested` (0 = all available).
int resolve_threads(int requested);

// Applies f(i) for i in [0, n). Iterations must be independent: each one
// writes only to its own slot of a pre-sized buffer. With ExecMode::openmp
// the loop runs under a static schedule; because every slot value is
// computed by the same serial code regardless of which thread runs it,
// results are identical for any thread count.
template <typename F>
void for_each_index(std::size_t n, ExecMode mode, int threads, F&& f);

// Fixed-shape pairwise (tree) summation. The reduction tree depends only on
// v.size(), never on thread count or data, so sums are bit-reproducible.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v.data(), v.size()));
}

}  // namespace poincare::parallel

#include <omp.h>

namespace poincare::parallel {

template <typename F>
void for_each_index(std::size_t n, ExecMode mode, int threads, F&& f) {
  if (mode == ExecMode::serial) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const int nt = resolve_threads(threads);
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) num_threads(nt)
  for (long long i = 0; i < nn; ++i) f(static_cast<std::size_t>(i));
}

}  // namespace poincare::parallel
