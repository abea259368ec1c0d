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

lcq::Generator identity_generator() {
  return lcq::Generator("x", lcq::Domain::AboveOne, lcq::Sign::Positive,
                        [](double x) { return x; });
}

double q(const lcq::Generator& f, int k, std::vector<double> v,
         lcq::Domain d = lcq::Domain::AboveOne) {
  return lcq::quotient_eval(lcq::QuotientSpec(f, k), lcq::MeanPoint(std::move(v), d));
}

TEST(GeneratorTest, CanonicalValuesAndSign) {
  const auto f = lcq::canonical_generator(1.0, 3);
  EXPECT_LT(rel_err(f(1e5), oracle::kCanonicalK3At1e5), 1e-15);
  EXPECT_EQ(f.sign(), lcq::Sign::Positive);
  EXPECT_EQ(f.domain(), lcq::Domain::AboveOne);
  EXPECT_TRUE(f.has_log_entry());
  EXPECT_TRUE(f.has_log_abs_entry());
  // log-argument entry agrees with direct evaluation
  for (double x : {1.001, 2.0, 50.0, 1e10}) {
    EXPECT_LT(rel_err(f.at_log(std::log(x)), f(x)), 1e-14) << x;
    EXPECT_LT(std::abs(f.log_abs_at_log(std::log(x)) - std::log(f(x))), 1e-14) << x;
  }
  // beyond double range only the log entries work
  EXPECT_TRUE(std::isfinite(f.log_abs_at_log(1e6)));
  const auto g = lcq::canonical_generator(-2.0, 2, lcq::Domain::UnitInterval);
  EXPECT_EQ(g.sign(), lcq::Sign::Positive);
  EXPECT_LT(rel_err(g(0.5), -2.0 * std::log(0.5) / 0.5), 1e-15);
  EXPECT_GT(g(0.5), 0.0);
}

TEST(GeneratorTest, CanonicalRejectsBadParameters) {
  EXPECT_THROW(lcq::canonical_generator(0.0, 2), lcq::ParameterError);
  EXPECT_THROW(lcq::canonical_generator(1.0, 1), lcq::ParameterError);
  EXPECT_THROW(lcq::canonical_generator(-1.0, 2, lcq::Domain::AboveOne), lcq::ParameterError);
  EXPECT_THROW(lcq::canonical_generator(1.0, 2, lcq::Domain::UnitInterval), lcq::ParameterError);
  EXPECT_THROW(lcq::canonical_generator(1.0, 2, lcq::Domain::Positive), lcq::ParameterError);
}

TEST(GeneratorTest, DomainChecked) {
  const auto f = lcq::canonical_generator(1.0, 2);
  EXPECT_THROW(f(0.5), lcq::DomainError);
  EXPECT_THROW(f(1.0), lcq::DomainError);
  EXPECT_THROW(f.at_log(-1.0), lcq::DomainError);
}

TEST(GeneratorTest, AtLogWithoutEntryPoint) {
  const auto f = identity_generator();
  EXPECT_FALSE(f.has_log_entry());
  EXPECT_DOUBLE_EQ(f.at_log(std::log(5.0)), 5.0);
  EXPECT_THROW(f.at_log(1000.0), lcq::RangeError);
  EXPECT_THROW(f.at_log(1e-17), lcq::RangeError);
}

TEST(GeneratorTest, PowerLogAffineScaled) {
  const auto p = lcq::power_log_generator(2.0, 0.25);
  EXPECT_LT(rel_err(p(3.0), 2.0 * std::log(3.0) * std::pow(3.0, -0.25)), 1e-15);
  const auto a = lcq::affine_generator(2.0, -1.0, lcq::Domain::AboveOne);
  EXPECT_EQ(a.sign(), lcq::Sign::Positive);
  EXPECT_DOUBLE_EQ(a(3.0), 5.0);
  EXPECT_THROW(lcq::affine_generator(1.0, -2.0, lcq::Domain::AboveOne), lcq::ParameterError);
  EXPECT_THROW(lcq::affine_generator(1.0, -0.5, lcq::Domain::UnitInterval), lcq::ParameterError);
  EXPECT_EQ(lcq::affine_generator(-1.0, 0.0, lcq::Domain::Positive).sign(), lcq::Sign::Negative);
  const auto s = lcq::scaled(p, -3.0);
  EXPECT_EQ(s.sign(), lcq::Sign::Negative);
  EXPECT_LT(rel_err(s(3.0), -3.0 * p(3.0)), 1e-15);
  EXPECT_THROW(lcq::scaled(p, 0.0), lcq::ParameterError);
}

TEST(GeneratorTest, DeclaredSignsHold) {
  EXPECT_EQ(lcq::count_sign_violations(lcq::canonical_generator(1.5, 4), 2000, 8), 0u);
  EXPECT_EQ(lcq::count_sign_violations(
                lcq::canonical_generator(-1.0, 3, lcq::Domain::UnitInterval), 2000, 8),
            0u);
  const lcq::Generator liar("liar", lcq::Domain::AboveOne, lcq::Sign::Negative,
                            [](double x) { return x; });
  EXPECT_GT(lcq::count_sign_violations(liar, 100, 8), 0u);
}

TEST(Quotient, PlumbingGenerator) {
  EXPECT_LT(rel_err(q(identity_generator(), 2, {2, 3}), 5.0 / 6.0), 1e-15);
}

TEST(Quotient, CanonicalEqualsLogCauchyMean) {
  EXPECT_LT(rel_err(q(lcq::canonical_generator(1, 2), 2, {2, 3}), oracle::kL2_2_3), 1e-14);
  EXPECT_LT(rel_err(q(lcq::canonical_generator(1, 3), 3, {2, 3, 4}), oracle::kL3_2_3_4), 1e-14);
  for (int k = 2; k <= 6; ++k) {
    const auto f = lcq::canonical_generator(0.7, k);
    for (std::uint64_t i = 0; i < 2000; ++i) {
      lcq::SampleStream rng(31, i);
      const auto v = lcq::sample_tuple(lcq::Domain::AboveOne, static_cast<std::size_t>(k), rng,
                                       lcq::shape_for(i));
      const double want = lcq::log_cauchy_mean(v);
      EXPECT_LT(rel_err(q(f, k, v), want), 1e-12);
    }
  }
}

TEST(Quotient, MirrorOnTheUnitInterval) {
  for (int k = 2; k <= 5; ++k) {
    const auto f = lcq::canonical_generator(-1.0, k, lcq::Domain::UnitInterval);
    for (std::uint64_t i = 0; i < 1000; ++i) {
      lcq::SampleStream rng(41, i);
      const auto v = lcq::sample_tuple(lcq::Domain::UnitInterval, static_cast<std::size_t>(k), rng,
                                       lcq::shape_for(i));
      const lcq::MeanPoint p(v, lcq::Domain::UnitInterval);
      const double m = lcq::quotient_eval(lcq::QuotientSpec(f, k), p);
      EXPECT_LT(rel_err(m, lcq::log_cauchy_mean(v)), 1e-12);
      if (p.min() != p.max()) {
        EXPECT_LT(p.min(), m);
        EXPECT_LT(m, p.max());
      }
    }
  }
}

TEST(Quotient, ReflexiveForLargeArgumentsThroughLogEntry) {
  for (int k = 2; k <= 6; ++k) {
    const auto f = lcq::canonical_generator(1.0, k);
    for (double x : {1.0 + 1e-6, 1.5, 10.0, 999.0}) {
      const std::vector<double> v(static_cast<std::size_t>(k), x);
      EXPECT_LT(rel_err(q(f, k, v), x), 1e-12) << "k=" << k << " x=" << x;
    }
  }
  // x^k far beyond double range
  const auto f = lcq::canonical_generator(1.0, 6);
  EXPECT_LT(rel_err(q(f, 6, std::vector<double>(6, 1e300)), 1e300), 1e-12);
}

TEST(Quotient, ScaleInvariant) {
  const auto f = lcq::power_log_generator(1.0, 0.3);
  for (double c : {2.5, 1e-3, 1e6}) {
    const auto g = lcq::scaled(f, c);
    for (std::uint64_t i = 0; i < 500; ++i) {
      lcq::SampleStream rng(51, i);
      const auto v = lcq::sample_tuple(lcq::Domain::AboveOne, 3, rng, lcq::shape_for(i));
      EXPECT_LT(rel_err(q(g, 3, v), q(f, 3, v)), 1e-13);
    }
  }
}

TEST(Quotient, Errors) {
  const auto f = lcq::canonical_generator(1.0, 2);
  EXPECT_THROW(lcq::QuotientSpec(f, 1), lcq::ArityError);
  EXPECT_THROW(q(f, 3, {2, 3}), lcq::ArityError);
  EXPECT_THROW(q(f, 2, {0.5, 0.25}, lcq::Domain::UnitInterval), lcq::DomainError);
  const lcq::Generator vanishing("v", lcq::Domain::AboveOne, lcq::Sign::Positive,
                                 [](double x) { return x > 5.0 ? 0.0 : 1.0; });
  EXPECT_THROW(q(vanishing, 2, {2, 3}), lcq::EvaluationError);
}

TEST(Proportionality, ConstantRatio) {
  const auto f = lcq::canonical_generator(1.0, 3);
  const auto c = lcq::proportionality_constant(f, lcq::scaled(f, 2.5));
  ASSERT_TRUE(c.has_value());
  EXPECT_LT(rel_err(*c, 2.5), 1e-10);
}

TEST(Proportionality, RatioWithALimit) {
  const auto f = lcq::canonical_generator(1.0, 2);
  const lcq::Generator g("log", lcq::Domain::AboveOne, lcq::Sign::Positive,
                         [](double x) { return std::log(x); });
  const auto c = lcq::proportionality_constant(f, g);
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(*c, 1.0, 1e-8);
}

TEST(Proportionality, OscillatingRatioHasNoConstant) {
  const auto f = lcq::canonical_generator(1.0, 2);
  const lcq::Generator g("osc", lcq::Domain::AboveOne, lcq::Sign::Positive,
                         [f](double x) { return f(x) * (1.0 + std::sin(1.0 / (x - 1.0))); });
  EXPECT_FALSE(lcq::proportionality_constant(f, g).has_value());
}

TEST(Proportionality, VanishingFIsAnError) {
  const lcq::Generator zero("zero", lcq::Domain::AboveOne, lcq::Sign::Positive,
                            [](double) { return 0.0; });
  EXPECT_THROW(lcq::proportionality_constant(zero, lcq::canonical_generator(1, 2)),
               lcq::EvaluationError);
}

TEST(Proportionality, ProbePointsMirrorOnUnitInterval) {
  const auto above = lcq::default_probe_points(lcq::Domain::AboveOne);
  const auto below = lcq::default_probe_points(lcq::Domain::UnitInterval);
  ASSERT_EQ(above.size(), 31u);
  ASSERT_EQ(below.size(), 31u);
  EXPECT_EQ(above.front(), 1.0 + std::ldexp(1.0, -10));
  EXPECT_EQ(above.back(), 1.0 + std::ldexp(1.0, -40));
  EXPECT_EQ(below.front(), 1.0 - std::ldexp(1.0, -10));
}

TEST(Equality, ScaledGeneratorIsEqual) {
  const auto f = lcq::canonical_generator(1.0, 2);
  const auto r = lcq::quotient_equal(f, lcq::scaled(f, 2.5), 2, 2000, 4, 1e-9);
  EXPECT_TRUE(r.equal);
  EXPECT_LT(r.max_residual, 1e-13);
  ASSERT_TRUE(r.constant.has_value());
  EXPECT_LT(rel_err(*r.constant, 2.5), 1e-10);
  EXPECT_TRUE(r.proportional);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.failed_evaluations, 0u);
}

TEST(Equality, IdenticalGeneratorHasZeroResidual) {
  const auto f = lcq::canonical_generator(1.0, 4);
  const auto r = lcq::quotient_equal(f, f, 4, 1000, 4, 1e-9);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.max_residual, 0.0);
}

TEST(Equality, PerturbedGeneratorIsUnequalWithRealWitness) {
  const auto f = lcq::canonical_generator(1.0, 2);
  const lcq::Generator g("f+0.1", lcq::Domain::AboveOne, lcq::Sign::Positive,
                         [f](double x) { return f(x) + 0.1; });
  const double tol = 1e-9;
  const auto r = lcq::quotient_equal(f, g, 2, 2000, 4, tol);
  EXPECT_FALSE(r.equal);
  EXPECT_FALSE(r.proportional);
  EXPECT_TRUE(r.consistent);
  ASSERT_EQ(r.witness.size(), 2u);
  // Re-evaluate the witness directly.
  const double a = q(f, 2, r.witness), b = q(g, 2, r.witness);
  EXPECT_GT(std::abs(a - b) / std::abs(a), tol);
}

TEST(Equality, SameSeedSameReport) {
  const auto f = lcq::canonical_generator(1.0, 3);
  const auto g = lcq::power_log_generator(1.0, 0.4);
  const auto a = lcq::quotient_equal(f, g, 3, 700, 123, 1e-9);
  const auto b = lcq::quotient_equal(f, g, 3, 700, 123, 1e-9);
  EXPECT_EQ(a.max_residual, b.max_residual);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(Equality, DomainMismatchIsAnError) {
  EXPECT_THROW(lcq::quotient_equal(lcq::canonical_generator(1, 2),
                                   lcq::canonical_generator(-1, 2, lcq::Domain::UnitInterval), 2,
                                   10, 0, 1e-9),
               lcq::DomainError);
}

}  // namespace
