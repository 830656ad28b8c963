#include "olb/geometry.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "olb/error.hpp"
#include "olb/numerics.hpp"

namespace olb {

namespace {

constexpr int kConvexityGrid = 1024;
constexpr int kDiameterGrid = 2048;
constexpr int kFanSamples = 256;

SupportJet lp_jet(const LpBall& lp, double a) {
  // Dual norm exponent; q >= 2 for 1 < p <= 2.
  const double q = lp.p / (lp.p - 1.0);
  const double c = std::cos(a), s = std::sin(a);
  const double ac = std::abs(c), as = std::abs(s);
  const double u = std::pow(ac, q) + std::pow(as, q);
  const double du = q * c * s * (std::pow(as, q - 2.0) - std::pow(ac, q - 2.0));
  const double ddu = q * ((q - 1.0) * (std::pow(as, q - 2.0) * c * c + std::pow(ac, q - 2.0) * s * s) -
                          std::pow(as, q) - std::pow(ac, q));
  const double h = std::pow(u, 1.0 / q);
  const double dh = h / (q * u) * du;
  const double ddh = (1.0 / q) * (1.0 / q - 1.0) * std::pow(u, 1.0 / q - 2.0) * du * du +
                     (1.0 / q) * std::pow(u, 1.0 / q - 1.0) * ddu;
  return {lp.scale * h, lp.scale * dh, lp.scale * ddh};
}

SupportJet fourier_jet(const Fourier& f, double a) {
  SupportJet j{f.c0, 0.0, 0.0};
  const std::size_t n = std::max(f.cos_terms.size(), f.sin_terms.size());
  for (std::size_t k = 1; k < n; ++k) {
    const double ak = k < f.cos_terms.size() ? f.cos_terms[k] : 0.0;
    const double bk = k < f.sin_terms.size() ? f.sin_terms[k] : 0.0;
    if (ak == 0.0 && bk == 0.0) continue;
    const double kk = static_cast<double>(k);
    const double c = std::cos(kk * a), s = std::sin(kk * a);
    j.p += ak * c + bk * s;
    j.dp += kk * (-ak * s + bk * c);
    j.ddp += -kk * kk * (ak * c + bk * s);
  }
  return j;
}

SupportJet jet_of(const OvalKind& kind, double a) {
  return std::visit(
      [a](const auto& k) -> SupportJet {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return {k.r, 0.0, 0.0};
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          const double c = std::cos(a), s = std::sin(a);
          const double u = k.a * k.a * c * c + k.b * k.b * s * s;
          const double h = std::sqrt(u);
          const double du = 2.0 * (k.b * k.b - k.a * k.a) * s * c;
          const double ddu = 2.0 * (k.b * k.b - k.a * k.a) * (c * c - s * s);
          return {h, du / (2.0 * h), ddu / (2.0 * h) - du * du / (4.0 * h * u)};
        } else if constexpr (std::is_same_v<T, LpBall>) {
          return lp_jet(k, a);
        } else {
          return fourier_jet(k, a);
        }
      },
      kind);
}

Vec2 centroid_of(const OvalKind& kind) {
  Vec2 sum{};
  for (int i = 0; i < kConvexityGrid; ++i) {
    const double a = kTwoPi * i / kConvexityGrid;
    const auto j = jet_of(kind, a);
    sum += Vec2{j.p * std::cos(a) - j.dp * std::sin(a), j.p * std::sin(a) + j.dp * std::cos(a)};
  }
  return sum / kConvexityGrid;
}

double width_of(const OvalKind& kind, double a) {
  return jet_of(kind, a + 0.5 * kPi).p + jet_of(kind, a - 0.5 * kPi).p;
}

double diameter_of(const OvalKind& kind) {
  double best = -1.0;
  int best_i = 0;
  for (int i = 0; i < kDiameterGrid; ++i) {
    const double w = width_of(kind, kPi * i / kDiameterGrid);
    if (w > best) {
      best = w;
      best_i = i;
    }
  }
  const double h = kPi / kDiameterGrid;
  const double a0 = kPi * best_i / kDiameterGrid;
  auto [arg, val] = num::maximize([&](double a) { return width_of(kind, a); }, a0 - h, a0 + h);
  return std::max(best, val);
}

double parse_double(std::string_view text, std::string_view spec) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError, fmt::format("bad number '{}' in table spec '{}'", text, spec));
  }
  return v;
}

}  // namespace

Oval::Oval(OvalKind kind) : kind_(std::move(kind)) {
  origin_ = centroid_of(kind_);
  validate();
  diameter_ = diameter_of(kind_);
}

Oval::Oval(OvalKind kind, Vec2 origin) : kind_(std::move(kind)), origin_(origin) {
  validate();
  diameter_ = diameter_of(kind_);
}

SupportJet Oval::jet(double alpha) const { return jet_of(kind_, alpha); }

void Oval::validate() const {
  std::visit(
      [](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Circle>) {
          if (!(k.r > 0)) throw Error(ErrorCode::InvalidOval, "circle radius must be positive");
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          if (!(k.a > 0 && k.b > 0)) throw Error(ErrorCode::InvalidOval, "ellipse semi-axes must be positive");
        } else if constexpr (std::is_same_v<T, LpBall>) {
          if (!(k.p > 1.0 && k.p <= 2.0)) {
            throw Error(ErrorCode::InvalidOval, "lp exponent must lie in (1, 2]");
          }
          if (!(k.scale > 0)) throw Error(ErrorCode::InvalidOval, "lp scale must be positive");
        }
      },
      kind_);
  // The lp ball's radius of curvature vanishes at its axis normals, so it only
  // has to stay non-negative up to round-off there.
  const double floor = is_lp() ? -1e-8 : 0.0;
  for (int i = 0; i < kConvexityGrid; ++i) {
    const double a = kTwoPi * i / kConvexityGrid;
    const auto j = jet(a);
    if (!(j.p + j.ddp > floor)) {
      throw Error(ErrorCode::InvalidOval,
                  fmt::format("radius of curvature {} at normal angle {} is not positive", j.p + j.ddp, a));
    }
    if (!(support_from(a, origin_) > 0)) {
      throw Error(ErrorCode::OriginOutside, fmt::format("origin is not interior (normal angle {})", a));
    }
  }
}

std::string Oval::spec() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return fmt::format("circle:r={}", k.r);
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          return fmt::format("ellipse:a={},b={}", k.a, k.b);
        } else if constexpr (std::is_same_v<T, LpBall>) {
          return fmt::format("lp:p={},scale={}", k.p, k.scale);
        } else {
          std::string s = fmt::format("fourier:c0={}", k.c0);
          const std::size_t n = std::max(k.cos_terms.size(), k.sin_terms.size());
          for (std::size_t i = 1; i < n; ++i) {
            if (i < k.cos_terms.size() && k.cos_terms[i] != 0.0) s += fmt::format(",a{}={}", i, k.cos_terms[i]);
            if (i < k.sin_terms.size() && k.sin_terms[i] != 0.0) s += fmt::format(",b{}={}", i, k.sin_terms[i]);
          }
          return s;
        }
      },
      kind_);
}

Oval parse_table(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, fmt::format("table spec '{}' lacks 'kind:'", spec));
  }
  const std::string_view kind = spec.substr(0, colon);
  std::map<std::string, double, std::less<>> params;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw Error(ErrorCode::ParseError, fmt::format("expected key=value, got '{}'", item));
    }
    const std::string key(item.substr(0, eq));
    if (params.contains(key)) throw Error(ErrorCode::ParseError, fmt::format("duplicate key '{}'", key));
    params[key] = parse_double(item.substr(eq + 1), spec);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }

  auto take = [&](const std::string& key, std::optional<double> fallback = std::nullopt) {
    auto it = params.find(key);
    if (it == params.end()) {
      if (fallback) return *fallback;
      throw Error(ErrorCode::ParseError, fmt::format("table '{}' needs key '{}'", kind, key));
    }
    const double v = it->second;
    params.erase(it);
    return v;
  };
  auto reject_leftovers = [&] {
    if (!params.empty()) {
      throw Error(ErrorCode::ParseError, fmt::format("unknown key '{}' for table '{}'", params.begin()->first, kind));
    }
  };

  if (kind == "circle") {
    Circle c{take("r")};
    reject_leftovers();
    return Oval(c);
  }
  if (kind == "ellipse") {
    Ellipse e{take("a"), take("b")};
    reject_leftovers();
    return Oval(e);
  }
  if (kind == "lp") {
    LpBall l{take("p"), take("scale", 1.0)};
    reject_leftovers();
    return Oval(l);
  }
  if (kind == "fourier") {
    Fourier f;
    f.c0 = take("c0");
    for (const auto& [key, value] : params) {
      if (key.size() < 2 || (key[0] != 'a' && key[0] != 'b')) {
        throw Error(ErrorCode::ParseError, fmt::format("unknown fourier key '{}'", key));
      }
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(key.data() + 1, key.data() + key.size(), k);
      if (ec != std::errc() || ptr != key.data() + key.size() || k == 0) {
        throw Error(ErrorCode::ParseError, fmt::format("bad harmonic index in '{}'", key));
      }
      auto& terms = key[0] == 'a' ? f.cos_terms : f.sin_terms;
      if (terms.size() <= k) terms.resize(k + 1, 0.0);
      terms[k] = value;
    }
    return Oval(f);
  }
  throw Error(ErrorCode::ParseError, fmt::format("unknown table kind '{}'", kind));
}

CurvePoint point_at(const Oval& oval, double alpha) {
  const auto j = oval.jet(alpha);
  const double c = std::cos(alpha), s = std::sin(alpha);
  const double roc = j.p + j.ddp;
  return {alpha,
          {j.p * c - j.dp * s, j.p * s + j.dp * c},
          {-s, c},
          roc > 0 ? 1.0 / roc : std::numeric_limits<double>::infinity()};
}

double width(const Oval& oval, double alpha) {
  return oval.support(alpha + 0.5 * kPi) + oval.support(alpha - 0.5 * kPi);
}

double diameter(const Oval& oval) { return oval.diameter(); }

Vec2 support_intersection(const Oval& oval, double a, double b) {
  const double pa = oval.support(a), pb = oval.support(b);
  const double s = std::sin(b - a);
  return {(pa * std::sin(b) - pb * std::sin(a)) / s, (pb * std::cos(a) - pa * std::cos(b)) / s};
}

namespace {

// Signed distance of the support line at `a` below `point`; its maximum over
// `a` is the distance from an exterior point to the curve.
struct Gap {
  const Oval& oval;
  Vec2 point;
  double operator()(double a) const { return dot(point, direction(a)) - oval.support(a); }
  num::Jet jet(double a) const {
    const auto j = oval.jet(a);
    return {dot(point, direction(a)) - j.p, dot(point, tangent_dir(a)) - j.dp};
  }
};

std::pair<double, double> max_gap(const Gap& gap) {
  constexpr int n = kFanSamples;
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = gap(kTwoPi * i / n);
  // Refine every sampled local maximum; the global one is the nearest point.
  double best_a = 0.0, best_v = -std::numeric_limits<double>::infinity();
  const double h = kTwoPi / n;
  for (int i = 0; i < n; ++i) {
    const double prev = vals[(i + n - 1) % n], next = vals[(i + 1) % n];
    if (vals[i] < prev || vals[i] < next) continue;
    const double a0 = kTwoPi * i / n;
    auto [a, v] = num::maximize(gap, a0 - h, a0 + h);
    if (v > best_v) {
      best_v = v;
      best_a = a;
    }
  }
  return {best_a, best_v};
}

}  // namespace

double clearance(const Oval& oval, Vec2 point) { return max_gap(Gap{oval, point}).second; }

TangentFan tangent_fan(const Oval& oval, Vec2 apex, double min_clearance) {
  const Gap gap{oval, apex};
  const auto [a_star, g_star] = max_gap(gap);
  if (!(g_star > min_clearance)) {
    throw Error(ErrorCode::PointInsideCurve,
                fmt::format("point ({}, {}) is inside or within {} of the curve", apex.x, apex.y, min_clearance));
  }
  // gap(a*) > 0 and gap(a*) + gap(a* + pi) = -w < 0, so each half-turn holds
  // exactly one root.
  auto fjet = [&gap](double a) { return gap.jet(a); };
  const double pos = num::solve_bracketed(fjet, a_star, a_star + kPi).x;
  const double neg = num::solve_bracketed(fjet, a_star - kPi, a_star).x;

  TangentFan fan;
  fan.apex = apex;
  fan.neg = point_at(oval, neg);
  fan.pos = point_at(oval, pos);
  fan.phi = kPi - (pos - neg);
  fan.len_neg = distance(apex, fan.neg.position);
  fan.len_pos = distance(apex, fan.pos.position);
  fan.clearance = g_star;
  return fan;
}

Oval central_symmetrization(const Oval& oval) {
  const Vec2 o = oval.origin();
  return std::visit(
      [&](const auto& k) -> Oval {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Circle>) {
          return Oval(Circle{2.0 * k.r}, 2.0 * o);
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          return Oval(Ellipse{2.0 * k.a, 2.0 * k.b}, 2.0 * o);
        } else if constexpr (std::is_same_v<T, LpBall>) {
          return Oval(LpBall{k.p, 2.0 * k.scale}, 2.0 * o);
        } else {
          // Odd harmonics cancel in p(a) + p(a + pi); even ones double.
          Fourier f;
          f.c0 = 2.0 * k.c0;
          f.cos_terms = k.cos_terms;
          f.sin_terms = k.sin_terms;
          for (std::size_t i = 1; i < f.cos_terms.size(); ++i) f.cos_terms[i] *= (i % 2 == 0) ? 2.0 : 0.0;
          for (std::size_t i = 1; i < f.sin_terms.size(); ++i) f.sin_terms[i] *= (i % 2 == 0) ? 2.0 : 0.0;
          return Oval(f, Vec2{0.0, 0.0});
        }
      },
      oval.kind());
}

RadialCurve polar_dual(const Oval& oval, DualMode mode) {
  const Vec2 o = oval.origin();
  for (int i = 0; i < kConvexityGrid; ++i) {
    const double a = kTwoPi * i / kConvexityGrid;
    if (!(oval.support_from(a, o) > 0)) {
      throw Error(ErrorCode::OriginOutside, "polar dual needs an interior origin");
    }
  }
  const double shift = mode == DualMode::Symplectic ? 0.5 * kPi : 0.0;
  return {[oval, o, shift](double a) { return 1.0 / oval.support_from(a - shift, o); }, o};
}

RadialCurve dual_symmetrized(const Oval& oval) {
  return {[oval](double a) { return 1.0 / width(oval, a); }, oval.origin()};
}

}  // namespace olb
