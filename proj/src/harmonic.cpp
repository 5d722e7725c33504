#include "eulersum/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulersum/errors.hpp"
#include "eulersum/kahan.hpp"

namespace eulersum {

double harmonic(long n, int p) {
  if (p < 1) {
    throw DomainError("harmonic: order must be >= 1");
  }
  if (n < 0) {
    throw DomainError("harmonic: index must be >= 0");
  }
  // smallest terms first
  KahanSum sum;
  for (long k = n; k >= 1; --k) {
    sum += std::pow(static_cast<double>(k), -p);
  }
  return sum.value();
}

HarmonicCache::HarmonicCache(long max_n, std::vector<int> orders)
    : max_n_(max_n), orders_(std::move(orders)) {
  if (max_n_ < 0) {
    throw DomainError("HarmonicCache: max_n must be >= 0");
  }
  std::sort(orders_.begin(), orders_.end());
  orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());
  rows_.reserve(orders_.size());
  for (int p : orders_) {
    if (p < 1) {
      throw DomainError("HarmonicCache: orders must be >= 1");
    }
    std::vector<double> row(static_cast<std::size_t>(max_n_) + 1);
    KahanSum sum;
    row[0] = 0.0;
    for (long n = 1; n <= max_n_; ++n) {
      sum += std::pow(static_cast<double>(n), -p);
      row[static_cast<std::size_t>(n)] = sum.value();
    }
    rows_.push_back(std::move(row));
  }
}

bool HarmonicCache::has_order(int p) const {
  return std::binary_search(orders_.begin(), orders_.end(), p);
}

std::span<const double> HarmonicCache::row(int p) const {
  const auto it = std::lower_bound(orders_.begin(), orders_.end(), p);
  if (it == orders_.end() || *it != p) {
    throw DomainError("HarmonicCache: order " + std::to_string(p) + " not tabulated");
  }
  return rows_[static_cast<std::size_t>(it - orders_.begin())];
}

double HarmonicCache::operator()(long n, int p) const {
  if (n < 0 || n > max_n_) {
    throw DomainError("HarmonicCache: index " + std::to_string(n) + " outside table");
  }
  return row(p)[static_cast<std::size_t>(n)];
}

}  // namespace eulersum
