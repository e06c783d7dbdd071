#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "atommirror/angular_emission.hpp"
#include "atommirror/core_spectral.hpp"

using namespace atommirror;

namespace {

constexpr double pi = std::numbers::pi;
constexpr BoundaryCondition D = BoundaryCondition::Dirichlet;
constexpr BoundaryCondition N = BoundaryCondition::Neumann;
constexpr MotionAxis PAR = MotionAxis::Parallel;
constexpr MotionAxis PERP = MotionAxis::Perpendicular;

const BoundaryCondition kBcs[] = {D, N};
const MotionAxis kAxes[] = {PAR, PERP};

} // namespace

TEST(Pattern, Examples) {
  for (double ka : {0.0, 0.3, 5.0, 77.0})
    for (double phi : {0.0, 1.0, 4.0})
      EXPECT_NEAR(pattern(D, PAR, ka, {pi / 2, phi}), 0.0, 1e-25);
  EXPECT_NEAR(pattern(N, PAR, 1e-9, {pi / 2, 0.0}), 1.0, 1e-15);
  EXPECT_EQ(pattern(D, PERP, 0.0, {0.0, 0.0}), 1.0);
}

TEST(Pattern, NeumannPerpSmallKaIsCos4) {
  const double ka = 1e-3;
  for (double th = 0.0; th <= pi; th += pi / 37) {
    const double c = std::cos(th);
    const double expected = ka * ka * c * c * c * c;
    EXPECT_NEAR(pattern(N, PERP, ka, {th, 0.0}), expected, 1e-6 * ka * ka);
  }
}

TEST(Pattern, DirichletParallelQuadrupoleLobes) {
  const double ka = 1e-3;
  double best = -1.0;
  double best_theta = 0.0;
  for (int i = 0; i <= 1800; ++i) {
    const double th = pi / 2 * i / 1800.0;
    const double v = pattern(D, PAR, ka, {th, 0.0});
    if (v > best) {
      best = v;
      best_theta = th;
    }
  }
  EXPECT_NEAR(best_theta, pi / 4, 2e-3);
  for (double th : {0.0, pi / 2, pi})
    EXPECT_NEAR(pattern(D, PAR, ka, {th, 0.0}), 0.0, 1e-30);
}

TEST(Pattern, MirrorSymmetryPositivityAzimuth) {
  for (auto bc : kBcs)
    for (auto axis : kAxes)
      for (double ka : {0.01, 1.0, 2.5, 5.0, 40.0})
        for (double th = 0.0; th <= pi / 2; th += 0.093) {
          const double a = pattern(bc, axis, ka, {th, 0.7});
          EXPECT_NEAR(a, pattern(bc, axis, ka, {pi - th, 0.7}), 1e-14);
          EXPECT_GE(a, 0.0);
          if (axis == PERP) {
            EXPECT_EQ(a, pattern(bc, axis, ka, {th, 0.0}));
            EXPECT_EQ(a, pattern(bc, axis, ka, {th, 5.9}));
          } else {
            const double ref = pattern(bc, axis, ka, {th, 0.0});
            for (double phi : {0.4, 2.0, 3.5, 6.0})
              EXPECT_NEAR(pattern(bc, axis, ka, {th, phi}) / std::pow(std::cos(phi), 2), ref,
                          1e-13);
          }
        }
}

TEST(Pattern, DualitySumIndependentOfKa) {
  for (auto axis : kAxes)
    for (double th = 0.0; th <= pi; th += 0.11) {
      const SphericalDirection dir{th, 0.3};
      const double base = pattern(D, axis, 0.0, dir) + pattern(N, axis, 0.0, dir);
      for (double ka : {0.5, 3.0, 17.0})
        EXPECT_NEAR(pattern(D, axis, ka, dir) + pattern(N, axis, ka, dir), base, 1e-14);
    }
}

TEST(Pattern, LargeKaAverageIsHalfDipole) {
  // Average over a window Delta = pi / cos(theta) of ka around ka = 100.
  for (double th : {0.3, 0.8, 1.2}) {
    const double c = std::cos(th);
    const double width = pi / c;
    auto avg = [&](BoundaryCondition bc) {
      auto f = [&](double ka) { return pattern(bc, PAR, ka, {th, 0.0}); };
      return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 100.0,
                                                                           100.0 + width, 10) /
             width;
    };
    const double dip = std::sin(th) * std::sin(th);
    EXPECT_NEAR(avg(D), avg(N), 1e-3);
    EXPECT_NEAR(avg(D), dip / 2, 1e-6);
  }
}

TEST(Pattern, Errors) {
  EXPECT_THROW(pattern(D, PAR, -0.1, {0.1, 0.1}), DomainError);
  EXPECT_THROW(pattern(D, PAR, 1.0, {-0.1, 0.1}), DomainError);
  EXPECT_THROW(pattern(D, PAR, 1.0, {pi + 1e-9, 0.1}), DomainError);
  EXPECT_THROW(pattern(D, PAR, 1.0, {0.1, 2 * pi}), DomainError);
  EXPECT_THROW(pattern(D, PAR, 1.0, {0.1, -1e-3}), DomainError);
}

TEST(ReducedDensity, Examples) {
  const AtomParams p;
  const MirrorConfig mc{D, 1.0};
  for (auto bc : kBcs)
    for (auto axis : kAxes)
      EXPECT_EQ(reduced_density(axis, 1.0, {0.0, 0.0}, p, MirrorConfig{bc, 1.0}), 0.0);
  const double r2 = std::sqrt(2.0) / 2.0;
  const double expected = 1.0 / (8.0 * pi * pi) * r2 * 0.5 * std::pow(std::cos(r2), 2);
  EXPECT_NEAR(reduced_density(PERP, 1.0, {pi / 4, 0.0}, p, mc), expected, 1e-16);
  EXPECT_NEAR(reduced_density(PERP, 1.0, {pi / 4, 0.0}, p, mc, true), expected / (2 * pi), 1e-17);
  EXPECT_THROW(reduced_density(PAR, 0.0, {0.1, 0.0}, p, mc), DomainError);
  EXPECT_THROW(reduced_density(PAR, -1.0, {0.1, 0.0}, p, mc), DomainError);
}

TEST(ReducedDensity, CubicInKAndQuadraticInG) {
  for (auto axis : kAxes) {
    const SphericalDirection dir{1.1, 0.4};
    // Keep ka fixed so only the k^3 measure changes.
    const double a1 = reduced_density(axis, 1.0, dir, AtomParams{}, MirrorConfig{N, 2.0});
    const double a2 = reduced_density(axis, 2.0, dir, AtomParams{}, MirrorConfig{N, 1.0});
    EXPECT_NEAR(a2 / a1, 8.0, 1e-13);
    const double g3 = reduced_density(axis, 1.0, dir, AtomParams{3.0, 1.0, 1.0}, MirrorConfig{N, 2.0});
    EXPECT_NEAR(g3 / a1, 9.0, 1e-13);
  }
}

TEST(ExcitationSpectrumDensity, Values) {
  const AtomParams p;
  const MirrorConfig mc{D, 1.0};
  EXPECT_EQ(excitation_spectrum_density(PAR, 1.0, {0.0, 0.0}, p, mc), 0.0);
  const std::complex<double> amp{0.3, -0.4};
  EXPECT_NEAR(excitation_spectrum_density(PAR, 1.0, amp, p, mc),
              kernel(PAR, 2.0, p, mc) / (2 * pi) * 0.25, 1e-17);
  EXPECT_THROW(excitation_spectrum_density(PAR, 0.0, amp, p, mc), DomainError);
}
