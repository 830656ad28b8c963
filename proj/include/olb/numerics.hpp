#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace olb::num {

/// Value and (optional) derivative of a scalar function. A NaN derivative
/// makes the solver fall back to secant/bisection steps.
struct Jet {
  double value = 0.0;
  double deriv = std::numeric_limits<double>::quiet_NaN();
};

struct RootOptions {
  double ftol = 1e-12;
  int max_iter = 80;
};

struct Root {
  double x = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Hybrid Newton/bisection on a sign-changing bracket [lo, hi].
/// Throws Error(NoRoot) if f(lo) and f(hi) have the same strict sign.
Root solve_bracketed(const std::function<Jet(double)>& f, double lo, double hi,
                     const RootOptions& opts = {});

/// Derivative-free overload; uses guarded secant steps.
Root solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                     const RootOptions& opts = {});

/// Sign-change brackets of f sampled at `samples` uniform points on [lo, hi].
std::vector<std::pair<double, double>> scan_brackets(const std::function<double(double)>& f,
                                                     double lo, double hi, int samples);

/// Brent maximization of f on [lo, hi]; returns {argmax, max}.
std::pair<double, double> maximize(const std::function<double(double)>& f, double lo, double hi);

/// Adaptive Gauss-Kronrod quadrature.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-13);

/// Least-squares slope and intercept of y against x.
std::pair<double, double> linear_fit(std::span<const double> x, std::span<const double> y);

/// Worker count honoured by parallel sweeps (env OLB_THREADS, default 1).
unsigned worker_count();

/// Evaluates fn(i) for i in [0, n) on up to worker_count() threads and returns
/// the results in index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn);

}  // namespace olb::num

#include "olb/numerics_impl.hpp"
