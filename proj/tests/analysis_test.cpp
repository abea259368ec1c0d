// Copyright 2026 The lcq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lcq/lcq.hpp"
#include "oracles.hpp"

namespace {

using oracle::rel_err;

// Coefficient of t^2 in log(1+t) (1+t)^(-beta), by multiplying the two
// power series term by term.
double second_taylor_coefficient(double beta) {
  const double log_series[3] = {0.0, 1.0, -0.5};
  double binom[3] = {1.0, 0.0, 0.0};
  for (int n = 1; n < 3; ++n) binom[n] = binom[n - 1] * (-beta - (n - 1)) / n;
  double c2 = 0.0;
  for (int i = 0; i <= 2; ++i) c2 += log_series[i] * binom[2 - i];
  return c2;
}

TEST(HTransform, ClosedFormForCanonical) {
  // log f(exp(exp tau)) = tau - e^tau / (k - 1)
  for (int k = 2; k <= 6; ++k) {
    const auto h = lcq::h_transform(lcq::canonical_generator(1.0, k));
    for (double tau : {-5.0, -1.0, 0.0, 2.0, 5.0, 6.5}) {
      EXPECT_NEAR(h(tau), tau - std::exp(tau) / (k - 1), 1e-12 * std::max(1.0, std::exp(tau)));
    }
  }
}

TEST(HTransform, RequiresPositiveGeneratorAboveOne) {
  EXPECT_THROW(lcq::h_transform(lcq::canonical_generator(-1.0, 2, lcq::Domain::UnitInterval)),
               lcq::ParameterError);
  const lcq::Generator neg("neg", lcq::Domain::AboveOne, lcq::Sign::Negative,
                           [](double x) { return -x; });
  EXPECT_THROW(lcq::h_transform(neg), lcq::ParameterError);
  const lcq::Generator liar("liar", lcq::Domain::AboveOne, lcq::Sign::Positive,
                            [](double x) { return 2.0 - x; });
  const auto h = lcq::h_transform(liar);
  EXPECT_THROW(h(1.0), lcq::EvaluationError);
}

TEST(Krull, CanonicalSolvesTheEquation) {
  for (int k = 2; k <= 6; ++k) {
    const auto h = lcq::h_transform(lcq::canonical_generator(2.0, k));
    for (std::uint64_t i = 0; i < 100; ++i) {
      lcq::SampleStream rng(91, i);
      const double tau = rng.uniform(-5.0, 5.0);
      EXPECT_LT(std::abs(lcq::krull_residual(h, tau, k)), 1e-12) << tau;
    }
  }
}

TEST(Krull, WrongExponentLeavesAResidual) {
  // h = tau - alpha e^tau; residual = e^tau (1 - alpha (k - 1))
  const auto h = lcq::h_transform(lcq::power_log_generator(1.0, 1.0));
  EXPECT_NEAR(lcq::krull_residual(h, 0.0, 3), -1.0, 1e-12);
  EXPECT_NEAR(lcq::krull_residual(h, 1.0, 3), -std::exp(1.0), 1e-12);
}

TEST(Krull, ZeroTogetherWithReflexivityResidual) {
  const lcq::Generator generators[] = {
      lcq::canonical_generator(1.0, 3),
      lcq::power_log_generator(1.0, 0.3),
      lcq::power_log_generator(1.0, 0.5),
      lcq::affine_generator(1.0, 0.0),
  };
  for (const auto& f : generators) {
    const auto h = lcq::h_transform(f);
    double krull = 0.0, refl = 0.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      lcq::SampleStream rng(7, i);
      const double tau = rng.uniform(-5.0, 3.0);
      krull = std::max(krull, std::abs(lcq::krull_residual(h, tau, 3)));
      const double x = std::exp(std::exp(tau));
      refl = std::max(refl, std::abs(lcq::reflexivity_residual(f, x, 3)) / f(x));
    }
    EXPECT_EQ(krull < 1e-12, refl < 1e-12) << f.label();
  }
}

TEST(Concavity, CanonicalSecondDifferencesMatchTheSecondDerivative) {
  const double delta = 1e-3;
  for (int k = 2; k <= 6; ++k) {
    const auto h = lcq::h_transform(lcq::canonical_generator(1.0, k));
    const auto r = lcq::concavity_probe(h, -3.0, 3.0, 121, delta);
    EXPECT_EQ(r.verdict, lcq::Curvature::Concave);
    ASSERT_EQ(r.differences.size(), 121u);
    for (const auto& [tau, d2] : r.differences) {
      const double derivative = -delta * delta * std::exp(tau) / (k - 1);
      EXPECT_LT(rel_err(d2, derivative), 0.05) << tau;
      // exact central difference of tau - e^tau/(k-1)
      const double exact = -std::exp(tau) * (2.0 * std::cosh(delta) - 2.0) / (k - 1);
      EXPECT_LT(rel_err(d2, exact), 1e-5) << tau;
    }
  }
}

TEST(Concavity, IdentityGeneratorIsConvex) {
  const lcq::Generator id("x", lcq::Domain::AboveOne, lcq::Sign::Positive,
                          [](double x) { return x; },
                          [](double s) { return std::exp(s); },
                          [](double s) { return s; });
  const auto r = lcq::concavity_probe(lcq::h_transform(id), -3.0, 3.0, 61, 1e-3);
  EXPECT_EQ(r.verdict, lcq::Curvature::Convex);
  EXPECT_STREQ(lcq::name(r.verdict), "convex");
}

TEST(Concavity, LinearAndMixedVerdicts) {
  // log x has h(tau) = tau
  const lcq::Generator logf("log", lcq::Domain::AboveOne, lcq::Sign::Positive,
                            [](double x) { return std::log(x); });
  EXPECT_EQ(lcq::concavity_probe(lcq::h_transform(logf), -2.0, 2.0, 41, 1e-2).verdict,
            lcq::Curvature::Linear);
  // h(tau) = tau + sin(tau): curvature changes sign on [-3, 3]
  const lcq::Generator wavy("wavy", lcq::Domain::AboveOne, lcq::Sign::Positive,
                            [](double x) {
                              const double s = std::log(x);
                              return s * std::exp(std::sin(std::log(s)));
                            });
  EXPECT_EQ(lcq::concavity_probe(lcq::h_transform(wavy), -3.0, 3.0, 61, 1e-2).verdict,
            lcq::Curvature::Neither);
}

TEST(Concavity, RejectsBadArguments) {
  const auto h = lcq::h_transform(lcq::canonical_generator(1.0, 2));
  EXPECT_THROW(lcq::concavity_probe(h, -1, 1, 10, 0.0), lcq::ParameterError);
  EXPECT_THROW(lcq::concavity_probe(h, 1, -1, 10, 1e-3), lcq::ParameterError);
  EXPECT_THROW(lcq::concavity_probe(h, -1, 1, 0, 1e-3), lcq::ParameterError);
}

TEST(Phi, SeriesOracleForTheTail) {
  EXPECT_DOUBLE_EQ(second_taylor_coefficient(1.0), -1.5);
  EXPECT_DOUBLE_EQ(second_taylor_coefficient(0.5), -1.0);
  for (int k = 2; k <= 6; ++k) {
    const double want = second_taylor_coefficient(1.0 / (k - 1));
    const auto r = lcq::phi_probe(lcq::canonical_generator(1.0, k), 1.0, 0.5, 61);
    EXPECT_TRUE(r.bounded) << k;
    EXPECT_NEAR(r.tail_value, want, 1e-5) << k;
    EXPECT_EQ(r.probe.samples.size(), 61u);
  }
}

TEST(Phi, SquareRootIsUnbounded) {
  const lcq::Generator root("sqrt", lcq::Domain::AboveOne, lcq::Sign::Positive,
                            [](double x) { return std::sqrt(x - 1.0); });
  for (double c : {0.5, 1.0, 3.0}) {
    EXPECT_FALSE(lcq::phi_probe(root, c, 0.5, 61).bounded) << c;
  }
}

TEST(Phi, MismatchedSlopeIsUnbounded) {
  const auto r = lcq::phi_probe(lcq::canonical_generator(1.0, 2), 2.0, 0.5, 61);
  EXPECT_FALSE(r.bounded);
  EXPECT_LT(r.tail_value, -1e5);
}

TEST(Phi, RejectsBadArguments) {
  const auto f = lcq::canonical_generator(1.0, 2);
  EXPECT_THROW(lcq::phi_probe(f, 0.0, 0.5, 61), lcq::ParameterError);
  EXPECT_THROW(lcq::phi_probe(f, 1.0, 0.0, 61), lcq::ParameterError);
  EXPECT_THROW(lcq::phi_probe(f, 1.0, 0.5, 2), lcq::ParameterError);
}

TEST(Contraction, KnownValuesAndLimit) {
  EXPECT_LT(rel_err(lcq::contraction_factor(4.0, 2), 1.0 / 9.0), 1e-15);
  for (int k = 2; k <= 6; ++k) {
    EXPECT_LT(std::abs(lcq::contraction_factor(1.0 + 1e-6, k) - 1.0 / k), 1e-5);
    // direct formula away from 1
    const double x = 5.0, a = std::pow(x, 1.0 / k);
    const double direct = k / a * std::pow((a - 1.0) / (x - 1.0), 2);
    EXPECT_LT(rel_err(lcq::contraction_factor(x, k), direct), 1e-14);
  }
  EXPECT_THROW(lcq::contraction_factor(1.0, 2), lcq::DomainError);
}

TEST(Contraction, StrictlyDecreasingBelowOneOverK) {
  for (int k = 2; k <= 6; ++k) {
    double prev = 1.0 / k;
    for (int i = 1; i <= 4000; ++i) {
      const double x = std::exp(std::log(1e6) * std::pow(10.0, -8.0 * (1.0 - i / 4000.0)));
      const double kappa = lcq::contraction_factor(x, k);
      ASSERT_LT(kappa, prev) << "k=" << k << " x=" << x;
      ASSERT_LE(kappa, 0.5);
      prev = kappa;
    }
  }
}

TEST(Psi, IdenticalGeneratorsGiveZero) {
  const auto f = lcq::canonical_generator(1.0, 3);
  const auto r = lcq::psi_contraction_check(f, f, 1.0, 3, 0.5);
  EXPECT_EQ(r.max_identity_residual, 0.0);
  EXPECT_EQ(r.max_psi, 0.0);
  EXPECT_TRUE(r.psi_vanishes);
  EXPECT_TRUE(r.reflexive);
  EXPECT_LE(r.sup_kappa, 0.5);
  EXPECT_GT(r.contraction_radius, 0.0);
}

TEST(Psi, IdentityHoldsForTwoSolutions) {
  // Two reflexive solutions with the same slope at 1: psi(x) = kappa psi(x^(1/k)).
  const auto f1 = lcq::canonical_generator(1.0, 2);
  const lcq::TiledExtension ext(
      2.0, 2,
      [](double y) {
        const double base = std::log(y) / y;
        return base * (1.0 + 0.05 * std::sin(2.0 * M_PI * std::log2(std::log2(y))));
      },
      lcq::Sign::Positive);
  const auto f2 = lcq::as_generator(ext);
  const auto r = lcq::psi_contraction_check(f1, f2, 1.0, 2, 0.5, 31);
  EXPECT_TRUE(r.reflexive);
  EXPECT_LT(r.max_identity_residual, 1e-6);
  EXPECT_FALSE(r.psi_vanishes);
}

TEST(Jensen, Residuals) {
  const auto affine = [](double s) { return 3 * s + 1; };
  const std::vector<double> a{0, 1, 2};
  EXPECT_EQ(lcq::jensen_residual(affine, a), 0.0);
  const std::vector<double> b{0, 2};
  EXPECT_DOUBLE_EQ(lcq::jensen_residual([](double s) { return s * s; }, b), -1.0);
  const std::vector<double> one{1};
  EXPECT_THROW(lcq::jensen_residual(affine, one), lcq::ArityError);
}

TEST(Jensen, AffineVanishesConvexDoesNot) {
  for (std::uint64_t i = 0; i < 2000; ++i) {
    lcq::SampleStream rng(101, i);
    const std::size_t k = 2 + rng.below(5);
    std::vector<double> pts(k);
    for (auto& s : pts) s = rng.uniform(-5, 5);
    const double a = rng.uniform(-10, 10), b = rng.uniform(-10, 10);
    EXPECT_LT(std::abs(lcq::jensen_residual([a, b](double s) { return a * s + b; }, pts)), 1e-12);
    bool constant = true;
    for (double s : pts) constant &= s == pts[0];
    if (!constant) {
      EXPECT_LT(lcq::jensen_residual([](double s) { return std::exp(s); }, pts), 0.0);
    }
  }
}

}  // namespace
