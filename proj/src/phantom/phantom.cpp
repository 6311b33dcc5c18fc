#include "phantom/phantom.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace lapis {

namespace {

double frac(double x) { return x - std::floor(x); }

struct Ellipse {
  double row, col;    // center, pixels
  double a, b;        // semi-axes (row, col), pixels
  double intensity;
};

// Soft-edged coverage of an ellipse at a pixel; edge width ~1.2 px.
double coverage(const Ellipse& e, double r, double c) {
  double qr = (r - e.row) / e.a;
  double qc = (c - e.col) / e.b;
  double q = std::sqrt(qr * qr + qc * qc);
  double d = (q - 1.0) * std::min(e.a, e.b);  // approx signed distance, px
  const double s = 1.2;
  double u = (s - d) / (2.0 * s);
  if (u <= 0) return 0.0;
  if (u >= 1) return 1.0;
  return u * u * (3.0 - 2.0 * u);
}

void paint(Vec& img, int n, const Ellipse& e) {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      double cov = coverage(e, r, c);
      if (cov > 0) {
        double& px = img(r * n + c);
        px = px + cov * (e.intensity - px);
      }
    }
}

}  // namespace

void default_phases(PhantomSpec& spec) {
  spec.theta_c.resize(spec.frames);
  spec.theta_r.resize(spec.frames);
  for (int t = 0; t < spec.frames; ++t) {
    double uc = frac(spec.cardiac_rate * t / 1000.0);
    double ur = frac(spec.resp_rate * t / 1000.0);
    spec.theta_c[t] = M_PI * uc;
    double s = std::sin(M_PI * ur);
    spec.theta_r[t] = std::asin(std::pow(s, 6.0));
  }
}

Phantom make_phantom(const PhantomSpec& spec_in) {
  PhantomSpec spec = spec_in;
  if (spec.grid < 16) throw InvalidArgument("phantom grid must be at least 16");
  if (spec.frames < 10) throw InvalidArgument("phantom needs at least 10 frames");
  if (spec.theta_c.empty() && spec.theta_r.empty()) default_phases(spec);
  if (static_cast<int>(spec.theta_c.size()) != spec.frames ||
      static_cast<int>(spec.theta_r.size()) != spec.frames)
    throw InvalidArgument("phase series length must equal the frame count");
  for (int t = 0; t < spec.frames; ++t)
    if (!std::isfinite(spec.theta_c[t]) || !std::isfinite(spec.theta_r[t]))
      throw InvalidArgument("phase series must be finite");

  const int n = spec.grid;
  const int k = spec.frames;
  const double N = n;

  Vec mult = Vec::Ones(k);
  for (const auto& ep : spec.episodes)
    for (int t = std::max(0, ep.begin); t < std::min(k, ep.end); ++t)
      mult(t) = ep.multiplier;

  // Static scene: body, two lung-like hollows, and three seeded ellipses.
  std::vector<Ellipse> statics;
  statics.push_back({0.50 * N, 0.50 * N, 0.46 * N, 0.42 * N, 0.45});
  statics.push_back({0.42 * N, 0.26 * N, 0.22 * N, 0.13 * N, 0.18});
  statics.push_back({0.42 * N, 0.74 * N, 0.22 * N, 0.13 * N, 0.18});
  uint64_t s = rng::derive(spec.seed, "phantom-statics");
  for (int i = 0; i < 3; ++i) {
    double row = N * (0.62 + 0.24 * rng::uniform(s, 6 * i + 0));
    double col = N * (0.20 + 0.60 * rng::uniform(s, 6 * i + 1));
    double a = N * (0.03 + 0.05 * rng::uniform(s, 6 * i + 2));
    double b = N * (0.03 + 0.05 * rng::uniform(s, 6 * i + 3));
    double inten = 0.55 + 0.35 * rng::uniform(s, 6 * i + 4);
    statics.push_back({row, col, a, b, inten});
  }

  Vec background = Vec::Zero(n * n);
  for (const auto& e : statics) paint(background, n, e);

  Phantom out;
  out.grid = n;
  out.truth.resize(n * n, k);
  out.theta_c = Eigen::Map<const Vec>(spec.theta_c.data(), k);
  out.theta_r = Eigen::Map<const Vec>(spec.theta_r.data(), k);
  out.displacement.resize(k);

  const double heart_row = 0.46 * N, heart_col = 0.52 * N;
  const double outer_a = 0.165 * N, outer_b = 0.145 * N;
  const double pool_base = 0.085 * N;

  Vec img(n * n);
  for (int t = 0; t < k; ++t) {
    double disp = spec.resp_amp * mult(t) * std::sin(spec.theta_r[t]);
    out.displacement(t) = disp;
    double pool_r = pool_base * (1.0 + 0.3 * std::cos(spec.theta_c[t]));

    img = background;
    paint(img, n, {heart_row + disp, heart_col, outer_a, outer_b, 0.95});
    paint(img, n, {heart_row + disp, heart_col, pool_r, pool_r, 0.25});
    out.truth.col(t) = img.cast<cd>();
  }

  double peak = out.truth.cwiseAbs().maxCoeff();
  if (peak > 0) out.truth /= peak;
  return out;
}

}  // namespace lapis
