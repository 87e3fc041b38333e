// Copyright 2026 The qtele Authors
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

#include "qtele/haar.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "qtele/errors.hpp"

using namespace qtele;

namespace {

TeleportSetup setup_of(BipartiteState shared, OperatorBasis basis) {
  return build_setup(std::move(shared), std::move(basis));
}

}  // namespace

TEST(HaarState, UnitNormAndErrors) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    EXPECT_NEAR(haar_state(1 + i % 9, rng).amplitudes().norm(), 1.0, 1e-12);
  }
  EXPECT_THROW(haar_state(0, rng), DimensionError);
}

TEST(HaarState, SecondMomentsMatchSymmetry) {
  const int d = 4;
  const int n = 100'000;
  Rng rng(2);
  std::vector<RunningStats> diag(d);
  RunningStats off_re;
  RunningStats off_im;
  for (int i = 0; i < n; ++i) {
    const StateVector psi = haar_state(d, rng);
    for (int j = 0; j < d; ++j) diag[j].push(std::norm(psi[j]));
    const Complex c = psi[0] * std::conj(psi[1]);
    off_re.push(c.real());
    off_im.push(c.imag());
  }
  for (const auto& s : diag) EXPECT_TRUE(s.estimate().agrees_with(1.0 / d, 3.0));
  EXPECT_TRUE(off_re.estimate().agrees_with(0.0, 3.0));
  EXPECT_TRUE(off_im.estimate().agrees_with(0.0, 3.0));
}

TEST(HaarUnitary, IsUnitary) {
  Rng rng(3);
  for (int d : {1, 2, 5, 8}) EXPECT_TRUE(is_unitary(haar_unitary(d, rng)));
}

TEST(RunningStats, MergeMatchesSequential) {
  Rng rng(4);
  RunningStats all;
  RunningStats a;
  RunningStats b;
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.normal() * 3.0 + 1.0;
    all.push(x);
    (i < 377 ? a : b).push(x);
  }
  a.merge(b);
  EXPECT_EQ(a.count(), all.count());
  EXPECT_NEAR(a.mean(), all.mean(), 1e-12);
  EXPECT_NEAR(a.sample_variance(), all.sample_variance(), 1e-10);
}

TEST(HaarAverage, DeterministicPerSeedAndWorkers) {
  const Rng rng(5);
  auto f = [](const StateVector& psi) { return std::norm(psi[0]); };
  const McEstimate one = haar_average(3, 5000, rng, 1, f);
  const McEstimate one_again = haar_average(3, 5000, rng, 1, f);
  const McEstimate four = haar_average(3, 5000, rng, 4, f);
  const McEstimate four_again = haar_average(3, 5000, rng, 4, f);
  EXPECT_EQ(one.mean, one_again.mean);
  EXPECT_EQ(one.std_error, one_again.std_error);
  EXPECT_EQ(four.mean, four_again.mean);
  EXPECT_EQ(four.samples, 5000);
  EXPECT_TRUE(four.agrees_with(1.0 / 3.0));
}

TEST(PairAverage, IdentityIsExactlyOne) {
  for (int d : {1, 2, 3, 7}) {
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    EXPECT_EQ(pair_average_analytic(id, id), Complex(1.0));
  }
}

TEST(PairAverage, ProjectorFourthMoment) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  EXPECT_NEAR(std::abs(pair_average_analytic(p, p) - 1.0 / 3.0), 0.0, 1e-15);
  const McEstimate mc = pair_average_monte_carlo(p, p, 1'000'000, Rng(6));
  EXPECT_TRUE(mc.agrees_with(1.0 / 3.0, 3.0)) << mc.mean << " +- " << mc.std_error;
}

TEST(PairAverage, RandomHermitianMonteCarlo) {
  Rng rng(7);
  const ComplexMatrix c = random_hermitian(3, rng);
  const ComplexMatrix e = random_hermitian(3, rng);
  const Complex exact = pair_average_analytic(c, e);
  EXPECT_NEAR(exact.imag(), 0.0, 1e-12);
  const McEstimate mc = pair_average_monte_carlo(c, e, 200'000, rng.split(1));
  EXPECT_TRUE(mc.agrees_with(exact.real(), 3.0)) << mc.mean << " vs " << exact.real();
}

TEST(PairAverage, DimensionMismatch) {
  EXPECT_THROW(pair_average_analytic(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)),
               DimensionError);
}

TEST(AverageFidelity, IdealIsOne) {
  for (int d : {2, 3, 4, 8}) {
    const auto r = average_fidelity_analytic(
        setup_of(BipartiteState::maximally_entangled(d), bell_basis(d)));
    EXPECT_NEAR(r.analytic, 1.0, 1e-12);
    EXPECT_EQ(r.special_case_label, SpecialCase::IdealBell);
  }
}

TEST(AverageFidelity, BellBasisProductSharedIsClassical) {
  const auto r = average_fidelity_analytic(
      setup_of(BipartiteState::product(2, 0, 0), bell_basis(2)));
  EXPECT_NEAR(r.analytic, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(r.special_case_label, SpecialCase::ProductShared);
}

TEST(AverageFidelity, BellBasisGeneralShared) {
  Rng rng(8);
  for (int d : {2, 3, 4}) {
    for (int i = 0; i < 10; ++i) {
      const TeleportSetup s = setup_of(haar_bipartite_state(d, rng), bell_basis(d));
      const double tr_abs_c = svd(s.shared().operator_form()).singular_values.sum();
      const double closed = (1.0 + tr_abs_c * tr_abs_c) / (d + 1.0);
      const auto r = average_fidelity_analytic(s);
      EXPECT_NEAR(r.analytic, closed, 1e-12);
      EXPECT_NEAR(r.analytic, average_fidelity_general(s), 1e-12);
      EXPECT_EQ(r.special_case_label, SpecialCase::BellBasisGeneralC);
      // Bracket between the classical value and perfect teleportation.
      EXPECT_GE(r.analytic, 2.0 / (d + 1.0) - 1e-12);
      EXPECT_LE(r.analytic, 1.0 + 1e-12);
    }
  }
}

TEST(AverageFidelity, AbsTransferTraceSumIsDimension) {
  // sum_xi Tr|T_xi|^2 = sum_xi Tr T^dag T = d Tr(C^dag C).
  Rng rng(9);
  for (int d : {2, 3, 5}) {
    for (const OperatorBasis& b :
         {bell_basis(d), product_basis(d),
          bell_basis(d).rotated(haar_unitary(d, rng), haar_unitary(d, rng))}) {
      const TeleportSetup s = setup_of(haar_bipartite_state(d, rng), b);
      double sum = 0.0;
      for (const auto& a : s.abs_transfer_ops()) sum += (a * a).trace().real();
      EXPECT_NEAR(sum, static_cast<double>(d), 1e-10);
    }
  }
}

TEST(SpecialCase, ProductSharedAnyBasis) {
  Rng rng(10);
  const int d = 5;
  for (const OperatorBasis& b :
       {bell_basis(d), product_basis(d),
        bell_basis(d).rotated(haar_unitary(d, rng), haar_unitary(d, rng))}) {
    const TeleportSetup s = setup_of(BipartiteState::product(d, 0, 0), b);
    const SpecialCaseValue v = special_case_fidelity(s);
    EXPECT_EQ(v.label, SpecialCase::ProductShared);
    EXPECT_NEAR(v.value, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(average_fidelity_analytic(s).analytic, v.value, 1e-12);
  }
}

TEST(SpecialCase, ProductBasisMaximallyEntangledShared) {
  const TeleportSetup s = setup_of(BipartiteState::maximally_entangled(2), product_basis(2));
  const SpecialCaseValue v = special_case_fidelity(s);
  EXPECT_EQ(v.label, SpecialCase::ProductBasis);
  EXPECT_NEAR(v.value, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(average_fidelity_analytic(s).analytic, 2.0 / 3.0, 1e-12);
}

TEST(SpecialCase, RankOneSumRule) {
  Rng rng(11);
  for (int d = 2; d <= 6; ++d) {
    const TeleportSetup s = setup_of(
        BipartiteState::product(d, 0, 0),
        bell_basis(d).rotated(haar_unitary(d, rng), haar_unitary(d, rng)));
    double sum_sq_tr = 0.0;
    double sum_tr_sq = 0.0;
    for (const auto& a : s.abs_transfer_ops()) {
      sum_sq_tr += std::pow(a.trace().real(), 2);
      sum_tr_sq += (a * a).trace().real();
    }
    EXPECT_NEAR(sum_sq_tr, static_cast<double>(d), 1e-10);
    EXPECT_NEAR(sum_tr_sq, static_cast<double>(d), 1e-10);
  }
}

TEST(SpecialCase, AgreesWithGeneralFormula) {
  Rng rng(12);
  for (int d : {2, 3, 4, 6}) {
    const std::vector<TeleportSetup> setups{
        setup_of(BipartiteState::maximally_entangled(d), bell_basis(d)),
        setup_of(BipartiteState::product(d, 1, 0), bell_basis(d)),
        setup_of(haar_bipartite_state(d, rng), product_basis(d)),
        setup_of(haar_bipartite_state(d, rng), bell_basis(d)),
        setup_of(haar_bipartite_state(d, rng),
                 product_basis(d).rotated(haar_unitary(d, rng), haar_unitary(d, rng))),
    };
    for (const auto& s : setups) {
      const SpecialCaseValue v = special_case_fidelity(s);
      EXPECT_NEAR(v.value, average_fidelity_analytic(s).analytic, 1e-12) << to_string(v.label);
    }
    EXPECT_EQ(special_case_fidelity(setups.back()).label, SpecialCase::General);
  }
}

TEST(MonteCarloFidelity, IdealEverySampleIsOne) {
  const TeleportSetup s = setup_of(BipartiteState::maximally_entangled(2), bell_basis(2));
  const auto r = monte_carlo_fidelity(s, 10'000, Rng(13));
  EXPECT_NEAR(*r.monte_carlo_mean, 1.0, 1e-10);
  EXPECT_LE(*r.monte_carlo_stderr, 1e-12);
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.samples, 10'000);
}

TEST(MonteCarloFidelity, ProductSharedBellBasis) {
  const TeleportSetup s = setup_of(BipartiteState::product(2, 0, 0), bell_basis(2));
  const auto r = monte_carlo_fidelity(s, 100'000, Rng(14));
  EXPECT_LE(std::abs(*r.monte_carlo_mean - 2.0 / 3.0), 3.0 * *r.monte_carlo_stderr);
}

TEST(MonteCarloFidelity, AgreesWithAnalyticAcrossSeeds) {
  Rng rng(15);
  const TeleportSetup s = setup_of(haar_bipartite_state(3, rng), bell_basis(3));
  int agree = 0;
  const int runs = 20;
  for (int seed = 0; seed < runs; ++seed) {
    agree += monte_carlo_fidelity(s, 2000, Rng(1000 + seed)).consistent();
  }
  EXPECT_EQ(agree, runs);
}

TEST(MonteCarloFidelity, RejectsTooFewSamples) {
  const TeleportSetup s = setup_of(BipartiteState::maximally_entangled(2), bell_basis(2));
  EXPECT_THROW(monte_carlo_fidelity(s, 99, Rng(1)), ConfigError);
}

TEST(MonteCarloFidelity, UnitaryInvarianceOfEstimator) {
  Rng rng(16);
  const int d = 3;
  const TeleportSetup s = setup_of(haar_bipartite_state(d, rng), product_basis(d));
  const ComplexMatrix u = haar_unitary(d, rng);
  const Rng mc(17);
  const McEstimate plain = haar_average(d, 50'000, mc, 1, [&](const StateVector& psi) {
    return state_fidelity(psi, s);
  });
  const McEstimate rotated = haar_average(d, 50'000, mc.split(9), 1, [&](const StateVector& psi) {
    return state_fidelity(StateVector::normalize(u * psi.amplitudes()), s);
  });
  const double band = 3.0 * std::hypot(plain.std_error, rotated.std_error);
  EXPECT_LE(std::abs(plain.mean - rotated.mean), band);
}

TEST(ClassicalBaseline, MatchesTwoOverDPlusOne) {
  for (int d : {2, 9}) {
    const McEstimate e = classical_baseline(d, 100'000, Rng(18 + d));
    EXPECT_LE(std::abs(e.mean - 2.0 / (d + 1.0)), 3.0 * e.std_error) << "d=" << d;
  }
  EXPECT_THROW(classical_baseline(1, 100, Rng(1)), DimensionError);
}

TEST(ClassicalBaseline, BasisStateIsPerfect) {
  EXPECT_EQ(classical_fidelity(StateVector::basis(4, 2)), 1.0);
}
