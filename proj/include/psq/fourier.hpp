#pragma once

#include <complex>
#include <vector>

namespace psq {

// Sawtooth psi(x) = x - floor(x) - 1/2; 1-periodic, range [-1/2, 1/2).
double psi(double x);

// W(t) = pi t (1-|t|) cot(pi t) + |t| for 0 < |t| < 1; the removable
// limit W(0) = 1 is used at t = 0. Near zero the cot factor is expanded
// in series to avoid cancellation.
double vaaler_weight(double t);

// Trigonometric approximation of psi of degree H and its Fejer-type
// majorant delta with |psi* - psi| <= delta pointwise. Coefficients are
// precomputed once per H.
class VaalerApprox {
 public:
  explicit VaalerApprox(int H);

  int degree() const { return H_; }

  // sum_{h=1..H} W(h/(H+1)) sin(2 pi h x) / (pi h)
  double psi_star(double x) const;

  // (1/(2H+2)) sum_{|h|<=H} (1 - |h|/(H+1)) e(hx), evaluated as the
  // real cosine sum; non-negative up to rounding.
  double delta(double x) const;

  // The two-sided complex form of psi*; its imaginary part must vanish
  // (the h and -h terms are conjugate), kept as a cross-check.
  std::complex<double> psi_star_complex(double x) const;

 private:
  int H_;
  std::vector<double> sin_coeff_;    // W(h/(H+1)) / (pi h), h = 1..H
  std::vector<double> fejer_weight_; // 1 - h/(H+1), h = 0..H
};

double psi_star(double x, int H);
double fejer_delta(double x, int H);

struct VaalerCheck {
  double max_violation;  // max over the grid of |psi* - psi| - delta
  double min_delta;
  double worst_x;
};

// Checks |psi*(x) - psi(x)| <= delta(x) on a uniform grid of grid_size
// points in [0,1) plus adversarial points accumulating at the jump of
// psi (x -> 0+ and x -> 1-).
VaalerCheck verify_vaaler(int H, int grid_size);

}  // namespace psq
