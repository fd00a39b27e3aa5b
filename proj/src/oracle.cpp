#include "idem2/oracle.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace idem2 {

namespace {

// Decode a candidate index into base-n digits, last digit fastest, so that
// ascending indices enumerate dense keys in lexicographic order.
void decode_digits(std::uint64_t index, std::uint64_t base,
                   std::vector<std::uint64_t>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = index % base;
    index /= base;
  }
}

bool advance_digits(std::vector<std::uint64_t>& digits, std::uint64_t base) {
  std::size_t pos = digits.size();
  while (pos > 0 && digits[pos - 1] + 1 == base) digits[--pos] = 0;
  if (pos == 0) return false;
  ++digits[pos - 1];
  return true;
}

void require_budget(std::uint64_t total, std::uint64_t budget, const char* what) {
  if (total > budget) {
    raise("BudgetExceeded", std::string(what) + " search space has " +
                                std::to_string(total) + " candidates, budget is " +
                                std::to_string(budget));
  }
}

std::vector<Mat2> scan_matrices(const TruncationContext& ctx, std::uint64_t lo,
                                std::uint64_t hi) {
  const std::uint64_t n = ctx.modulus().value();
  const std::size_t window = ctx.window_size();
  std::vector<std::uint64_t> digits(4 * window, 0);
  decode_digits(lo, n, digits);
  std::vector<Mat2> found;
  for (std::uint64_t index = lo; index < hi; ++index) {
    std::span<const std::uint64_t> all(digits);
    Mat2 candidate(Series::from_window_coeffs(ctx, all.subspan(0, window)),
                   Series::from_window_coeffs(ctx, all.subspan(window, window)),
                   Series::from_window_coeffs(ctx, all.subspan(2 * window, window)),
                   Series::from_window_coeffs(ctx, all.subspan(3 * window, window)));
    if (is_idempotent(candidate)) found.push_back(std::move(candidate));
    advance_digits(digits, n);
  }
  return found;
}

}  // namespace

SearchSpace SearchSpace::plan(const TruncationContext& ctx) {
  const std::uint64_t n = ctx.modulus().value();
  const std::size_t window = ctx.window_size();
  return SearchSpace{ctx, saturating_pow(n, window), saturating_pow(n, 4 * window)};
}

std::vector<Mat2> brute_force_idempotents(const TruncationContext& ctx,
                                          std::uint64_t budget, unsigned jobs) {
  SearchSpace space = SearchSpace::plan(ctx);
  require_budget(space.total_matrices, budget, "matrix");
  const std::uint64_t total = space.total_matrices;

  if (jobs <= 1 || total < 2 * jobs) return scan_matrices(ctx, 0, total);

  // Contiguous index ranges keep the merged output identical to a serial scan.
  std::vector<std::vector<Mat2>> chunks(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    std::uint64_t lo = total / jobs * j + std::min<std::uint64_t>(j, total % jobs);
    std::uint64_t hi = lo + total / jobs + (j < total % jobs ? 1 : 0);
    workers.emplace_back(
        [&ctx, &chunks, j, lo, hi] { chunks[j] = scan_matrices(ctx, lo, hi); });
  }
  for (auto& w : workers) w.join();

  std::vector<Mat2> found;
  for (auto& chunk : chunks) {
    found.insert(found.end(), std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
  }
  return found;
}

std::vector<Series> brute_force_series_idempotents(const TruncationContext& ctx,
                                                   std::uint64_t budget) {
  SearchSpace space = SearchSpace::plan(ctx);
  require_budget(space.total_series, budget, "series");
  const std::uint64_t n = ctx.modulus().value();
  std::vector<std::uint64_t> digits(ctx.window_size(), 0);
  std::vector<Series> found;
  for (std::uint64_t index = 0; index < space.total_series; ++index) {
    Series candidate = Series::from_window_coeffs(ctx, digits);
    if (is_idempotent(candidate)) found.push_back(std::move(candidate));
    advance_digits(digits, n);
  }
  return found;
}

CompareReport compare_sets(const std::vector<Mat2>& constructed,
                           const std::vector<Mat2>& brute) {
  auto key_less = [](const Mat2& a, const Mat2& b) {
    return window_coeffs(a) < window_coeffs(b);
  };
  std::vector<Mat2> lhs = constructed, rhs = brute;
  std::sort(lhs.begin(), lhs.end(), key_less);
  std::sort(rhs.begin(), rhs.end(), key_less);

  CompareReport report;
  report.count_constructed = lhs.size();
  report.count_brute = rhs.size();
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                      std::back_inserter(report.missing), key_less);
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(report.extra), key_less);
  report.passed = report.missing.empty() && report.extra.empty() &&
                  report.count_constructed == report.count_brute;
  return report;
}

}  // namespace idem2
