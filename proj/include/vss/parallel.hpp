#pragma once

#include <algorithm>
#include <type_traits>
#include <vector>

namespace vss::par {

// Number of threads the kernels may use: min(VSS_THREADS, OpenMP max), at
// least 1. Without OpenMP this is always 1. Cached after the first call.
int thread_budget();

// True when parallel_for would actually fan out.
bool enabled();

// body(i) for i in [0, n). Writes must be disjoint per index; under that
// contract results are bitwise identical for any thread count. Small loops
// (n < 2*grain) stay serial to avoid fork overhead.
void parallel_for_impl(int n, const void* ctx, void (*fn)(const void*, int));

template <class Body>
void parallel_for(int n, Body&& body, int grain = 32) {
  if (n <= 0) return;
  if (!enabled() || n < 2 * grain) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  using B = std::remove_reference_t<Body>;
  parallel_for_impl(n, &body, [](const void* c, int i) {
    (*static_cast<const B*>(c))(i);
  });
}

// Chunked sum: partials of fixed-size chunks are computed (possibly in
// parallel) and combined in chunk order, so the value does not depend on the
// thread count.
template <class Term>
double ordered_sum(int n, Term&& term, int chunk = 256) {
  if (n <= 0) return 0.0;
  const int nchunks = (n + chunk - 1) / chunk;
  std::vector<double> partial(static_cast<size_t>(nchunks), 0.0);
  parallel_for(
      nchunks,
      [&](int c) {
        double s = 0.0;
        const int hi = std::min(n, (c + 1) * chunk);
        for (int i = c * chunk; i < hi; ++i) s += term(i);
        partial[static_cast<size_t>(c)] = s;
      },
      1);
  double s = 0.0;
  for (double v : partial) s += v;
  return s;
}

}  // namespace vss::par
