#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "atommirror/core_spectral.hpp"
#include "oracles.hpp"

using namespace atommirror;
using oracle::Ch;

namespace {

constexpr BoundaryCondition D = BoundaryCondition::Dirichlet;
constexpr BoundaryCondition N = BoundaryCondition::Neumann;
constexpr MotionAxis PAR = MotionAxis::Parallel;
constexpr MotionAxis PERP = MotionAxis::Perpendicular;

struct Case {
  BoundaryCondition bc;
  MotionAxis axis;
  Ch ch;
  double near; // ratio_to_free at x -> 0
};

const Case kCases[] = {
    {D, PAR, Ch::Dpar, 0.0},
    {D, PERP, Ch::Dperp, 2.0},
    {N, PAR, Ch::Npar, 2.0},
    {N, PERP, Ch::Nperp, 0.0},
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

TEST(ShapeFunction, ReferenceValueDirichletParallelAtOne) {
  const double expected = 2.0 / 3.0 + std::cos(2.0) / 2.0 - std::sin(2.0) / 4.0;
  EXPECT_NEAR(shape_function(D, PAR, 1.0), expected, 1e-15);
  EXPECT_NEAR(shape_function(D, PAR, 1.0), 0.2312689, 5e-8);
  EXPECT_NEAR(ratio_to_free(D, PAR, 1.0), 1.5 * expected, 1e-15);
  // The quoted 0.3469034 is a rounding of 0.346903338 in the last digit.
  EXPECT_NEAR(ratio_to_free(D, PAR, 1.0), 0.3469034, 1e-7);
}

TEST(ShapeFunction, MatchesExtendedPrecisionAcrossRange) {
  for (const auto& c : kCases)
    for (double x = 1e-6; x < 2e3; x *= 1.37) {
      const double ref = oracle::brace_d(c.ch, x);
      EXPECT_LT(rel(shape_function(c.bc, c.axis, x), ref), 1e-10)
          << to_string(c.bc) << to_string(c.axis) << " x=" << x;
    }
}

TEST(ShapeFunction, SeriesLeadingCoefficients) {
  // B ~ (4/15) x^2, 2/3 - (2/5) x^2, 2/3 - (2/15) x^2, (2/5) x^2.
  const double x = 1e-3;
  EXPECT_NEAR(shape_function(D, PAR, x) / (x * x), 4.0 / 15.0, 1e-7);
  EXPECT_NEAR((2.0 / 3.0 - shape_function(D, PERP, x)) / (x * x), 2.0 / 5.0, 1e-7);
  EXPECT_NEAR((2.0 / 3.0 - shape_function(N, PAR, x)) / (x * x), 2.0 / 15.0, 1e-7);
  EXPECT_NEAR(shape_function(N, PERP, x) / (x * x), 2.0 / 5.0, 1e-7);
  EXPECT_EQ(shape_function(D, PAR, 0.0), 0.0);
  EXPECT_EQ(shape_function(D, PERP, 0.0), 2.0 / 3.0);
}

TEST(ShapeFunction, BranchContinuity) {
  for (const auto& c : kCases) {
    const double at = kSeriesSwitch;
    EXPECT_LT(rel(shape_function_series(c.bc, c.axis, at), shape_function_direct(c.bc, c.axis, at)),
              1e-12);
    for (double x = kSeriesSwitch / 2; x <= 2 * kSeriesSwitch; x += kSeriesSwitch / 50)
      EXPECT_LT(rel(shape_function_series(c.bc, c.axis, x), shape_function_direct(c.bc, c.axis, x)),
                1e-10)
          << x;
  }
}

TEST(ShapeFunction, NonNegative) {
  for (const auto& c : kCases)
    for (double x = 0.0; x < 60.0; x += 0.0137)
      EXPECT_GE(shape_function(c.bc, c.axis, x), 0.0) << x;
}

TEST(ShapeFunction, FarLimit) {
  EXPECT_NEAR(shape_function(D, PAR, 1e6), 2.0 / 3.0, 1e-11);
  for (const auto& c : kCases) {
    if (c.ch != Ch::Dpar) {
      EXPECT_NEAR(shape_function(c.bc, c.axis, 1e6), 1.0 / 3.0, 1e-6);
    }
  }
}

TEST(ShapeFunction, Errors) {
  EXPECT_THROW(shape_function(D, PAR, -1e-9), DomainError);
  EXPECT_THROW(shape_function(N, PERP, std::nan("")), DomainError);
  EXPECT_THROW(ratio_to_free(D, PAR, -1.0), DomainError);
}

TEST(RatioToFree, NearAndFarLimits) {
  for (const auto& c : kCases) {
    EXPECT_NEAR(ratio_to_free(c.bc, c.axis, 1e-4), c.near, 1e-6);
    EXPECT_NEAR(ratio_to_free(c.bc, c.axis, 1e3), 1.0, 1e-2);
    // Approach to 1 is O(1/x): the perpendicular channels carry sin(2x)/(2x).
    for (double x : {50.0, 1e3, 1e4})
      EXPECT_LE(std::abs(ratio_to_free(c.bc, c.axis, x) - 1.0), 1.5 / x + 1e-6) << x;
  }
  // The parallel channels converge as 1/x^2.
  EXPECT_NEAR(ratio_to_free(D, PAR, 1e3), 1.0, 1e-6);
  EXPECT_NEAR(ratio_to_free(N, PAR, 1e3), 1.0, 1e-6);
}

TEST(RatioToFree, IndependentOfDimensionfulParameters) {
  const double x = 0.7;
  for (const auto& c : kCases)
    for (double g : {0.3, 2.0})
      for (double Om : {0.5, 3.0})
        for (double nu : {-4.0, 5.0}) {
          const AtomParams p{g, 1.7, Om};
          const MirrorConfig mc{c.bc, x / (std::abs(nu) - Om)};
          EXPECT_LT(rel(kernel(c.axis, nu, p, mc), m0(nu, p) * ratio_to_free(c.bc, c.axis, x)),
                    1e-14);
        }
}

TEST(M0, Values) {
  const AtomParams p;
  EXPECT_EQ(m0(0.5, p), 0.0);
  EXPECT_EQ(m0(1.0, p), 0.0);
  EXPECT_NEAR(m0(2.0, p), 1.0 / (12.0 * std::numbers::pi), 1e-17);
  EXPECT_NEAR(m0(2.0, p), 0.0265258, 1e-7);
  EXPECT_EQ(m0(2.3, p), m0(-2.3, p));
}

TEST(Kernel, ReferenceValue) {
  const AtomParams p;
  const MirrorConfig mc{D, 1.0};
  const double brace = 2.0 / 3.0 + std::cos(2.0) / 2.0 - std::sin(2.0) / 4.0;
  EXPECT_NEAR(kernel(PAR, 2.0, p, mc), brace / (8.0 * std::numbers::pi), 1e-17);
  // 0.2312689 / (8 pi) = 0.00920190; the quoted 0.0092017 is low by 2e-5 relative.
  EXPECT_NEAR(kernel(PAR, 2.0, p, mc), 0.0092019, 1e-7);
  EXPECT_NEAR(kernel(PAR, 2.0, p, mc) / 0.0092017, 1.0, 3e-5);
  EXPECT_EQ(kernel(PAR, 1.0, p, mc), 0.0);
}

TEST(Kernel, ThresholdEvennessAndOracle) {
  const AtomParams p{1.3, 0.8, 1.1};
  for (const auto& c : kCases) {
    const MirrorConfig mc{c.bc, 0.9};
    for (double nu : {0.0, 0.5, 1.1, -1.1})
      EXPECT_EQ(kernel(c.axis, nu, p, mc), 0.0);
    for (double nu = 1.2; nu < 30.0; nu *= 1.3) {
      EXPECT_EQ(kernel(c.axis, nu, p, mc), kernel(c.axis, -nu, p, mc));
      const double q = oracle::kernel_by_quadrature(c.ch, nu, p.coupling, p.mass, p.omega, 0.9);
      EXPECT_LT(rel(kernel(c.axis, nu, p, mc), q), 1e-9) << nu;
    }
  }
}

TEST(Kernel, NeumannPerpFarFromMirror) {
  const AtomParams p;
  const MirrorConfig mc{N, 1e3};
  const double r = kernel(PERP, 2.0, p, mc) / m0(2.0, p);
  // sin(2x)/(2x) sets the deviation; see README on the 1e-6 far limit.
  EXPECT_LE(std::abs(r - 1.0), 1.5e-3);
  EXPECT_NEAR(r - 1.0, 3.0 * (-std::sin(2e3) / 2e3 - std::cos(2e3) / 2e6), 1e-9);
}

TEST(Kernel, Errors) {
  const AtomParams p;
  EXPECT_THROW(kernel(PAR, 2.0, p, MirrorConfig{D, 0.0}), DomainError);
  EXPECT_THROW(kernel(PAR, 2.0, p, MirrorConfig{D, -1.0}), DomainError);
  EXPECT_THROW(kernel(PAR, 2.0, AtomParams{1.0, 0.0, 1.0}, MirrorConfig{}), DomainError);
  EXPECT_THROW(kernel(PAR, 2.0, AtomParams{1.0, 1.0, -1.0}, MirrorConfig{}), DomainError);
}

TEST(SidebandKernel, Values) {
  const AtomParams p;
  for (const auto& c : kCases)
    EXPECT_EQ(sideband_kernel(c.axis, 0.0, p, MirrorConfig{c.bc, 1.0}), 0.0);
  EXPECT_EQ(sideband_kernel(PAR, 1.0, p, MirrorConfig{D, 1.0}), kernel(PAR, 2.0, p, MirrorConfig{D, 1.0}));
  EXPECT_NEAR(sideband_kernel(PAR, 1.0, p, MirrorConfig{D, 1.0}), 0.0092019, 1e-7);
  const double w = 1e-4;
  EXPECT_LT(rel(sideband_kernel(PERP, w, p, MirrorConfig{D, 1.0}),
                kernel_prefactor(D, PERP, p) * w * w * w * 2.0 / 3.0),
            1e-7);
  EXPECT_THROW(sideband_kernel(PAR, -0.1, p, MirrorConfig{D, 1.0}), DomainError);
}

TEST(DissipationMatrix, Assembly) {
  const AtomParams p;
  const MirrorConfig mc{D, 1.0};
  const auto below = dissipation_matrix(0.9, p, mc);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(below(i, j), 0.0);
  const auto m = dissipation_matrix(2.5, p, mc);
  EXPECT_EQ(m(0, 0), kernel(PAR, 2.5, p, mc));
  EXPECT_EQ(m(1, 1), kernel(PAR, 2.5, p, mc));
  EXPECT_EQ(m(2, 2), kernel(PERP, 2.5, p, mc));
  EXPECT_EQ(m(0, 2), 0.0);
  EXPECT_EQ(m(1, 0), 0.0);
}

TEST(DissipationMatrix, DirichletNearPlateAnisotropy) {
  const AtomParams p;
  double last = 0.0;
  for (double x : {1e-1, 1e-2, 1e-3}) {
    const auto m = dissipation_matrix(2.0, p, MirrorConfig{D, x});
    const double ratio = m.m_perp / m.m_par;
    // series ratio (2 - (6/5) x^2) / ((2/5) x^2)
    EXPECT_LT(rel(ratio, (2.0 - 1.2 * x * x) / (0.4 * x * x)), x * x) << x;
    EXPECT_GT(ratio, last);
    last = ratio;
  }
}

TEST(DissipationMatrix, FarLimitEntries) {
  const AtomParams p;
  const auto m = dissipation_matrix(2.0, p, MirrorConfig{D, 1e3});
  const double free = m0(2.0, p);
  EXPECT_NEAR(m.m_par / free, 1.0, 1e-6);
  EXPECT_NEAR(m.m_perp / free, 1.0, 1.5e-3);
}

TEST(OscillatorPropagator, Limits) {
  const AtomParams p{1.0, 2.0, 1.5};
  const auto at0 = oscillator_propagator(0.0, p, 1e-12);
  EXPECT_NEAR(at0.real(), 0.0, 1e-12);
  EXPECT_NEAR(at0.imag(), -1.0 / (2.0 * 1.5 * 1.5), 1e-12);
  EXPECT_LT(std::abs(oscillator_propagator(1e8, p, 1e-6)), 1e-16);
  const auto pole = oscillator_propagator(1.5, AtomParams{1.0, 1.0, 1.5}, 1e-6);
  EXPECT_NEAR(pole.real(), 1e6, 1e-6);
  EXPECT_THROW(oscillator_propagator(1.0, p, 0.0), DomainError);
  EXPECT_THROW(oscillator_propagator(1.0, p, -1.0), DomainError);
}
