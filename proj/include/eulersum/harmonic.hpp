#pragma once

#include <span>
#include <vector>

namespace eulersum {

/// Generalized harmonic number H_n^{(p)} = sum_{k=1}^n k^{-p}, with H_0^{(p)} = 0.
double harmonic(long n, int p);

/*!
  Immutable table of H_n^{(p)} for 0 <= n <= max_n and a fixed set of orders.
  Each row is one compensated running sum, so consecutive entries differ by
  n^{-p} up to a rounding of the stored value.
*/
class HarmonicCache {
 public:
  HarmonicCache(long max_n, std::vector<int> orders);

  [[nodiscard]] long max_n() const { return max_n_; }
  [[nodiscard]] std::span<const int> orders() const { return orders_; }
  [[nodiscard]] bool has_order(int p) const;

  /// H_n^{(p)}; throws DomainError when n or p is outside the table.
  [[nodiscard]] double operator()(long n, int p) const;
  [[nodiscard]] std::span<const double> row(int p) const;

 private:
  long max_n_;
  std::vector<int> orders_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace eulersum
