#include "psq/fourier.hpp"

#include <cmath>

#include "psq/errors.hpp"

namespace psq {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double psi(double x) { return x - std::floor(x) - 0.5; }

double vaaler_weight(double t) {
  const double a = std::abs(t);
  if (a >= 1.0) throw DomainError("vaaler_weight requires |t| < 1");
  if (a < 1e-4) {
    // pi t cot(pi t) = 1 - (pi t)^2/3 - (pi t)^4/45 - ...
    const double u = kPi * a;
    const double u2 = u * u;
    const double cot_series = 1.0 - u2 / 3.0 - u2 * u2 / 45.0;
    return cot_series * (1.0 - a) + a;
  }
  return kPi * a * (1.0 - a) * (std::cos(kPi * a) / std::sin(kPi * a)) + a;
}

VaalerApprox::VaalerApprox(int H) : H_(H) {
  if (H < 1) throw DomainError("VaalerApprox requires H >= 1");
  sin_coeff_.resize(H);
  fejer_weight_.resize(H + 1);
  fejer_weight_[0] = 1.0;
  for (int h = 1; h <= H; ++h) {
    const double t = static_cast<double>(h) / (H + 1);
    sin_coeff_[h - 1] = vaaler_weight(t) / (kPi * h);
    fejer_weight_[h] = 1.0 - t;
  }
}

double VaalerApprox::psi_star(double x) const {
  // The conjugate-symmetric sum -sum_{1<=|h|<=H} (2 pi i h)^-1 W e(hx)
  // collapses to a sine series; the leading minus matches the Fourier
  // expansion psi(x) = -sum_h sin(2 pi h x)/(pi h), without which the
  // majorant inequality |psi*-psi| <= delta fails by O(1).
  double sum = 0.0;
  for (int h = H_; h >= 1; --h) {
    sum += sin_coeff_[h - 1] * std::sin(2.0 * kPi * h * x);
  }
  return -sum;
}

double VaalerApprox::delta(double x) const {
  double sum = 0.5 * fejer_weight_[0];
  for (int h = H_; h >= 1; --h) {
    sum += fejer_weight_[h] * std::cos(2.0 * kPi * h * x);
  }
  return sum / (H_ + 1);
}

std::complex<double> VaalerApprox::psi_star_complex(double x) const {
  std::complex<double> sum(0.0, 0.0);
  for (int h = -H_; h <= H_; ++h) {
    if (h == 0) continue;
    const double t = static_cast<double>(h) / (H_ + 1);
    const std::complex<double> coeff =
        -1.0 / std::complex<double>(0.0, 2.0 * kPi * h);
    sum += coeff * vaaler_weight(t) *
           std::exp(std::complex<double>(0.0, 2.0 * kPi * h * x));
  }
  return sum;
}

double psi_star(double x, int H) { return VaalerApprox(H).psi_star(x); }

double fejer_delta(double x, int H) { return VaalerApprox(H).delta(x); }

VaalerCheck verify_vaaler(int H, int grid_size) {
  if (grid_size < 10) throw DomainError("verify_vaaler requires grid_size >= 10");
  const VaalerApprox approx(H);
  VaalerCheck out{-1.0, 1e300, 0.0};
  auto probe = [&](double x) {
    const double d = approx.delta(x);
    const double v = std::abs(approx.psi_star(x) - psi(x)) - d;
    if (v > out.max_violation) {
      out.max_violation = v;
      out.worst_x = x;
    }
    if (d < out.min_delta) out.min_delta = d;
  };
  for (int i = 0; i < grid_size; ++i) {
    probe(static_cast<double>(i) / grid_size);
  }
  // Adversarial: approach the jump of psi from both sides.
  for (int j = 1; j <= 50; ++j) {
    const double eps = std::ldexp(1.0, -j);
    probe(eps);
    probe(1.0 - eps);
  }
  return out;
}

}  // namespace psq
