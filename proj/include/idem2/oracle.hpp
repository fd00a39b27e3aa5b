#pragma once

#include "idem2/mat2.hpp"

namespace idem2 {

/// Size accounting for an exhaustive search, checked against the budget
/// before any enumeration starts. Counts saturate at UINT64_MAX.
struct SearchSpace {
  TruncationContext context;
  std::uint64_t total_series;    // n^window
  std::uint64_t total_matrices;  // n^(4*window)

  static SearchSpace plan(const TruncationContext& ctx);
};

/// Every matrix of the full n^(4*window) space with A*A = A, in dense-key
/// (odometer) order. Pure brute force over mat2 arithmetic; knows nothing
/// about the classification.
std::vector<Mat2> brute_force_idempotents(const TruncationContext& ctx,
                                          std::uint64_t budget = 100'000'000,
                                          unsigned jobs = 1);

/// Every series of the full n^window space with f*f = f, in dense-key order.
std::vector<Series> brute_force_series_idempotents(const TruncationContext& ctx,
                                                   std::uint64_t budget = 100'000'000);

struct CompareReport {
  bool passed = false;
  std::size_t count_constructed = 0;
  std::size_t count_brute = 0;
  std::vector<Mat2> missing;  // in brute, not in constructed
  std::vector<Mat2> extra;    // in constructed, not in brute
};

CompareReport compare_sets(const std::vector<Mat2>& constructed,
                           const std::vector<Mat2>& brute);

}  // namespace idem2
