#include "olb/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <cstdlib>
#include <string>

#include "olb/error.hpp"

namespace olb::num {

namespace {

bool opposite(double a, double b) { return (a < 0 && b > 0) || (a > 0 && b < 0); }

// Shared driver: `step` proposes an interior point given the current iterate
// and bracket; the driver validates it and falls back to bisection.
template <typename Eval, typename Propose>
Root drive(Eval eval, Propose propose, double lo, double hi, const RootOptions& opts) {
  Jet flo = eval(lo);
  Jet fhi = eval(hi);
  if (flo.value == 0.0) return {lo, 0.0, 0};
  if (fhi.value == 0.0) return {hi, 0.0, 0};
  if (!opposite(flo.value, fhi.value)) {
    throw Error(ErrorCode::NoRoot, "bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                       "] has no sign change");
  }
  if (flo.value > 0) {
    std::swap(lo, hi);
    std::swap(flo, fhi);
  }
  // Invariant: f(lo) < 0 < f(hi); lo may exceed hi.
  double x = 0.5 * (lo + hi);
  Jet fx = eval(x);
  double width_prev = std::abs(hi - lo);
  for (int it = 1; it <= opts.max_iter; ++it) {
    if (std::abs(fx.value) <= opts.ftol) return {x, std::abs(fx.value), it};
    if (fx.value < 0) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    const double width = std::abs(hi - lo);
    const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
    if (width <= 4.0 * std::numeric_limits<double>::epsilon() * scale) {
      const Jet& best = std::abs(flo.value) < std::abs(fhi.value) ? flo : fhi;
      return {std::abs(flo.value) < std::abs(fhi.value) ? lo : hi, std::abs(best.value), it};
    }
    double cand = propose(x, fx, lo, flo, hi, fhi);
    const double a = std::min(lo, hi), b = std::max(lo, hi);
    const bool inside = std::isfinite(cand) && cand > a && cand < b;
    // Require the bracket to at least halve every other step.
    if (!inside || width > 0.5 * width_prev) {
      if (!inside || it % 2 == 0) cand = 0.5 * (lo + hi);
    }
    width_prev = width;
    x = cand;
    fx = eval(x);
  }
  return {x, std::abs(fx.value), opts.max_iter};
}

}  // namespace

Root solve_bracketed(const std::function<Jet(double)>& f, double lo, double hi,
                     const RootOptions& opts) {
  auto propose = [](double x, const Jet& fx, double lo, const Jet& flo, double hi,
                    const Jet& fhi) {
    if (std::isfinite(fx.deriv) && fx.deriv != 0.0) return x - fx.value / fx.deriv;
    return lo - flo.value * (hi - lo) / (fhi.value - flo.value);
  };
  return drive(f, propose, lo, hi, opts);
}

Root solve_bracketed(const std::function<double(double)>& f, double lo, double hi,
                     const RootOptions& opts) {
  auto eval = [&f](double x) { return Jet{f(x)}; };
  auto propose = [](double, const Jet&, double lo, const Jet& flo, double hi, const Jet& fhi) {
    return lo - flo.value * (hi - lo) / (fhi.value - flo.value);
  };
  return drive(eval, propose, lo, hi, opts);
}

std::vector<std::pair<double, double>> scan_brackets(const std::function<double(double)>& f,
                                                     double lo, double hi, int samples) {
  std::vector<std::pair<double, double>> out;
  double xp = lo;
  double fp = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    const double fx = f(x);
    if (fp == 0.0 || opposite(fp, fx)) out.emplace_back(xp, x);
    xp = x;
    fp = fx;
  }
  return out;
}

std::pair<double, double> maximize(const std::function<double(double)>& f, double lo, double hi) {
  auto neg = [&f](double x) { return -f(x); };
  auto [x, v] = boost::math::tools::brent_find_minima(neg, lo, hi, std::numeric_limits<double>::digits);
  return {x, -v};
}

namespace {

// Boost's adaptive driver never accepts a panel whose rounding floor
// (~eps * |f|) exceeds tol * L1, which on short intervals means bisecting to
// full depth. This driver also accepts panels at that floor.
double gk_adaptive(const std::function<double(double)>& f, double a, double b, double tol, int depth) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double err = 0.0, l1 = 0.0;
  const double v = GK::integrate(f, a, b, 0, 0.0, &err, &l1);
  const double floor = 16.0 * std::numeric_limits<double>::epsilon() * l1 / std::abs(b - a);
  if (err <= tol * l1 || err <= floor || depth == 0) return v;
  const double m = 0.5 * (a + b);
  return gk_adaptive(f, a, m, tol, depth - 1) + gk_adaptive(f, m, b, tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  return gk_adaptive(f, a, b, tol, 15);
}

std::pair<double, double> linear_fit(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

unsigned worker_count() {
  if (const char* env = std::getenv("OLB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace olb::num
