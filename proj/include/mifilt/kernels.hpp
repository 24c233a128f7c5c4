#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mifilt/monomial.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mifilt::kernels {

/// Lattice box iteration order: row-major over prod [0, box[i]).  Both kernel
/// variants of every routine produce identical results; the serial ones are
/// the reference implementations the tests compare against.

inline std::int64_t box_size(const std::vector<Exp>& box) {
  std::int64_t n = 1;
  for (Exp b : box) {
    if (b <= 0) return 0;
    n = checked_mul(n, b);
  }
  return n;
}

inline ExponentVector unflatten(std::int64_t idx, const std::vector<Exp>& box) {
  ExponentVector v(std::vector<Exp>(box.size(), 0));
  for (size_t i = box.size(); i-- > 0;) {
    v.e[i] = idx % box[i];
    idx /= box[i];
  }
  return v;
}

template <class Pred>
std::int64_t count_box_serial(const std::vector<Exp>& box, Pred&& pred) {
  const std::int64_t n = box_size(box);
  std::int64_t count = 0;
  for (std::int64_t idx = 0; idx < n; ++idx)
    if (pred(unflatten(idx, box))) ++count;
  return count;
}

template <class Pred>
std::int64_t count_box(const std::vector<Exp>& box, Pred&& pred) {
  const std::int64_t n = box_size(box);
  std::int64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t idx = 0; idx < n; ++idx)
    if (pred(unflatten(idx, box))) ++count;
  return count;
}

/// Minimal elements of the up-set {v in box : member(v)}.  member must be
/// monotone (v <= w and member(v) implies member(w)); minimality is decided
/// by the d neighbor tests v - e_i.
template <class Member>
std::vector<ExponentVector> collect_minimal_serial(const std::vector<Exp>& box,
                                                   Member&& member) {
  const std::int64_t n = box_size(box);
  std::vector<ExponentVector> out;
  for (std::int64_t idx = 0; idx < n; ++idx) {
    ExponentVector v = unflatten(idx, box);
    if (!member(v)) continue;
    bool minimal = true;
    for (size_t i = 0; i < box.size() && minimal; ++i) {
      if (v.e[i] == 0) continue;
      --v.e[i];
      if (member(v)) minimal = false;
      ++v.e[i];
    }
    if (minimal) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Member>
std::vector<ExponentVector> collect_minimal(const std::vector<Exp>& box, Member&& member) {
  const std::int64_t n = box_size(box);
#ifdef _OPENMP
  const int nthreads = omp_get_max_threads();
#else
  const int nthreads = 1;
#endif
  std::vector<std::vector<ExponentVector>> parts(static_cast<size_t>(nthreads));
#pragma omp parallel
  {
#ifdef _OPENMP
    const int tid = omp_get_thread_num();
#else
    const int tid = 0;
#endif
    auto& local = parts[static_cast<size_t>(tid)];
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      ExponentVector v = unflatten(idx, box);
      if (!member(v)) continue;
      bool minimal = true;
      for (size_t i = 0; i < box.size() && minimal; ++i) {
        if (v.e[i] == 0) continue;
        --v.e[i];
        if (member(v)) minimal = false;
        ++v.e[i];
      }
      if (minimal) local.push_back(std::move(v));
    }
  }
  std::vector<ExponentVector> out;
  for (auto& part : parts)
    out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mifilt::kernels
