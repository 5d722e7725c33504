#include "eulersum/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulersum/errors.hpp"
#include "eulersum/harmonic.hpp"
#include "eulersum/kahan.hpp"

namespace eulersum {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0.0;
  }
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

void require_same_center(const FormalLaurentSeries& lhs, const FormalLaurentSeries& rhs) {
  if (lhs.center() != rhs.center()) {
    throw DomainError("Laurent series expanded at different centers cannot be combined");
  }
}

// Polynomial in c stored lowest degree first.
using Poly = std::vector<double>;

Poly derivative(const Poly& poly) {
  if (poly.size() <= 1) {
    return {0.0};
  }
  Poly out(poly.size() - 1);
  for (std::size_t i = 1; i < poly.size(); ++i) {
    out[i - 1] = static_cast<double>(i) * poly[i];
  }
  return out;
}

Poly multiply(const Poly& lhs, const Poly& rhs) {
  Poly out(lhs.size() + rhs.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      out[i + j] += lhs[i] * rhs[j];
    }
  }
  return out;
}

Poly add(Poly lhs, const Poly& rhs) {
  if (lhs.size() < rhs.size()) {
    lhs.resize(rhs.size(), 0.0);
  }
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    lhs[i] += rhs[i];
  }
  return lhs;
}

double horner(const Poly& poly, double c) {
  double acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = acc * c + *it;
  }
  return acc;
}

// d^j/dz^j cot(pi z) = pi^j P_j(cot), P_{j+1} = -(1 + c^2) P_j'.
// d^j/dz^j csc(pi z) = pi^j csc Q_j(cot), Q_{j+1} = -c Q_j - (1 + c^2) Q_j'.
std::vector<double> trig_taylor(bool cosecant, double beta, int K) {
  const double c = pi_cot(beta) / pi;
  const double s = pi_csc(beta) / pi;
  const Poly one_plus_c2 = {1.0, 0.0, 1.0};
  const Poly minus_c = {0.0, -1.0};
  Poly poly = cosecant ? Poly{1.0} : Poly{0.0, 1.0};
  std::vector<double> coeffs(static_cast<std::size_t>(K) + 1);
  double scale = pi;  // pi^{j+1} / j!
  for (int j = 0; j <= K; ++j) {
    const double value = horner(poly, c) * (cosecant ? s : 1.0);
    coeffs[static_cast<std::size_t>(j)] = scale * value;
    Poly next = multiply(one_plus_c2, derivative(poly));
    for (double& x : next) {
      x = -x;
    }
    if (cosecant) {
      next = add(next, multiply(minus_c, poly));
    }
    poly = std::move(next);
    scale *= pi / (j + 1);
  }
  return coeffs;
}

}  // namespace

FormalLaurentSeries::FormalLaurentSeries(double center, int min_order, std::vector<double> coeffs)
    : center_(center), min_order_(min_order), coeffs_(std::move(coeffs)) {}

FormalLaurentSeries FormalLaurentSeries::taylor(double center, std::vector<double> coeffs) {
  return {center, 0, std::move(coeffs)};
}

double FormalLaurentSeries::coefficient(int order) const {
  if (order < min_order_) {
    return 0.0;
  }
  if (order > valid_order()) {
    throw PrecisionError("Laurent coefficient of order " + std::to_string(order) +
                         " requested but expansion is only valid through order " +
                         std::to_string(valid_order()));
  }
  return coeffs_[static_cast<std::size_t>(order - min_order_)];
}

double FormalLaurentSeries::evaluate(double z) const {
  const double w = z - center_;
  KahanSum sum;
  double power = std::pow(w, min_order_);
  for (double c : coeffs_) {
    sum += c * power;
    power *= w;
  }
  return sum.value();
}

FormalLaurentSeries FormalLaurentSeries::truncated(int order) const {
  if (order >= valid_order()) {
    return *this;
  }
  const int count = std::max(0, order - min_order_ + 1);
  return {center_, min_order_,
          std::vector<double>(coeffs_.begin(), coeffs_.begin() + count)};
}

FormalLaurentSeries& FormalLaurentSeries::operator*=(double scalar) {
  for (double& c : coeffs_) {
    c *= scalar;
  }
  return *this;
}

FormalLaurentSeries operator+(const FormalLaurentSeries& lhs, const FormalLaurentSeries& rhs) {
  require_same_center(lhs, rhs);
  const int low = std::min(lhs.min_order(), rhs.min_order());
  const int high = std::min(lhs.valid_order(), rhs.valid_order());
  std::vector<double> coeffs(static_cast<std::size_t>(std::max(0, high - low + 1)), 0.0);
  for (int k = low; k <= high; ++k) {
    coeffs[static_cast<std::size_t>(k - low)] = lhs.coefficient(k) + rhs.coefficient(k);
  }
  return {lhs.center(), low, std::move(coeffs)};
}

FormalLaurentSeries operator*(const FormalLaurentSeries& lhs, const FormalLaurentSeries& rhs) {
  require_same_center(lhs, rhs);
  const int low = lhs.min_order() + rhs.min_order();
  const int high =
      std::min(lhs.valid_order() + rhs.min_order(), rhs.valid_order() + lhs.min_order());
  std::vector<double> coeffs(static_cast<std::size_t>(std::max(0, high - low + 1)), 0.0);
  const auto lc = lhs.coefficients();
  const auto rc = rhs.coefficients();
  for (std::size_t i = 0; i < lc.size(); ++i) {
    for (std::size_t j = 0; j < rc.size(); ++j) {
      const std::size_t k = i + j;
      if (k < coeffs.size()) {
        coeffs[k] += lc[i] * rc[j];
      }
    }
  }
  return {lhs.center(), low, std::move(coeffs)};
}

KernelKind KernelKind::psi(int p) {
  if (p < 1) {
    throw DomainError("psi kernel requires p >= 1");
  }
  return {Type::psi, p};
}

std::string KernelKind::name() const {
  switch (type) {
    case Type::cot:
      return "cot";
    case Type::csc:
      return "csc";
    case Type::psi:
      return "psi" + std::to_string(p);
  }
  return "unknown";
}

FormalLaurentSeries expand_at_integer(KernelKind kind, long n, int K) {
  const double center = static_cast<double>(n);
  switch (kind.type) {
    case KernelKind::Type::cot:
    case KernelKind::Type::csc: {
      if (K < 1) {
        throw DomainError("expand_at_integer: truncation order below pole order 1");
      }
      const bool cosecant = kind.type == KernelKind::Type::csc;
      std::vector<double> coeffs(static_cast<std::size_t>(K) + 2, 0.0);  // orders -1..K
      coeffs[0] = 1.0;
      for (int k = 1; 2 * k - 1 <= K; ++k) {
        const double z = cosecant ? 2.0 * alt_zeta(2 * k) : -2.0 * riemann_zeta(2 * k);
        coeffs[static_cast<std::size_t>(2 * k)] = z;
      }
      FormalLaurentSeries series(center, -1, std::move(coeffs));
      if (cosecant && (n % 2 != 0)) {
        series *= -1.0;
      }
      return series;
    }
    case KernelKind::Type::psi: {
      const int p = kind.p;
      const double sign_p = (p % 2 == 0) ? 1.0 : -1.0;
      if (n >= 0) {
        if (K < p) {
          throw DomainError("expand_at_integer: truncation order below pole order " +
                            std::to_string(p));
        }
        // orders -p .. K
        std::vector<double> coeffs(static_cast<std::size_t>(K + p) + 1, 0.0);
        coeffs[0] = 1.0;
        for (int k = 1; k - 1 <= K; ++k) {
          const int q = k + p - 1;
          const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
          const double value =
              binomial(k + p - 2, p - 1) * (sign_p * zeta_conventional(q) - sign_k * harmonic(n, q));
          coeffs[static_cast<std::size_t>(k - 1 + p)] = value;
        }
        return {center, -p, std::move(coeffs)};
      }
      if (K < 0) {
        throw DomainError("expand_at_integer: negative truncation order");
      }
      // analytic at -m, m >= 1: (-1)^p C(p+k-2, p-1) [zeta(p+k-1) - H_{m-1}^{(p+k-1)}]
      const long m = -n;
      std::vector<double> coeffs(static_cast<std::size_t>(K) + 1, 0.0);
      for (int k = 1; k - 1 <= K; ++k) {
        const int q = p + k - 1;
        const double tail =
            (q == 1) ? -harmonic(m - 1, 1) : hurwitz_zeta(q, static_cast<double>(m));
        coeffs[static_cast<std::size_t>(k - 1)] = sign_p * binomial(p + k - 2, p - 1) * tail;
      }
      return FormalLaurentSeries::taylor(center, std::move(coeffs));
    }
  }
  throw DomainError("expand_at_integer: unknown kernel");
}

FormalLaurentSeries expand_at_point(KernelKind kind, double beta, int K, double guard) {
  if (integer_distance(beta) < guard) {
    throw PoleError("expand_at_point: " + std::to_string(beta) +
                    " is within the integer guard of a kernel pole");
  }
  if (K < 0) {
    throw DomainError("expand_at_point: negative truncation order");
  }
  switch (kind.type) {
    case KernelKind::Type::cot:
      return FormalLaurentSeries::taylor(beta, trig_taylor(false, beta, K));
    case KernelKind::Type::csc:
      return FormalLaurentSeries::taylor(beta, trig_taylor(true, beta, K));
    case KernelKind::Type::psi: {
      // j-th coefficient: (-1)^p C(p-1+j, j) zeta(p+j; -beta), zeta(1; x) := -(psi(x)+gamma)
      const int p = kind.p;
      const double sign_p = (p % 2 == 0) ? 1.0 : -1.0;
      std::vector<double> coeffs(static_cast<std::size_t>(K) + 1);
      for (int j = 0; j <= K; ++j) {
        coeffs[static_cast<std::size_t>(j)] =
            sign_p * binomial(p - 1 + j, j) * hurwitz_zeta_conventional(p + j, -beta);
      }
      return FormalLaurentSeries::taylor(beta, std::move(coeffs));
    }
  }
  throw DomainError("expand_at_point: unknown kernel");
}

double residue_of_product(std::span<const FormalLaurentSeries> factors,
                          const FormalLaurentSeries& rational_part) {
  FormalLaurentSeries product = rational_part;
  for (const auto& factor : factors) {
    product = product * factor;
  }
  return product.residue();
}

}  // namespace eulersum
