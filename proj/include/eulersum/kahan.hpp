#pragma once

#include <cmath>

namespace eulersum {

/*!
  Compensated (Kahan-Babuska/Neumaier) accumulator.

  Tracks the rounding error of every addition and adds it back on read, so a
  long run of small terms onto a large partial sum keeps full precision.
*/
struct KahanSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  KahanSum& operator+=(double value) {
    add(value);
    return *this;
  }

  KahanSum& operator-=(double value) {
    add(-value);
    return *this;
  }

  [[nodiscard]] double value() const { return sum + compensation; }
};

}  // namespace eulersum
