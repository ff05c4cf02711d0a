#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pcg_paradox/recipe.hpp"
#include "pcg_paradox/state.hpp"

using namespace pcg_paradox;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::ParseError;
}

void expect_amp(const StateVector& s, std::vector<int> digits, complex_t want, double tol = 1e-15) {
  const auto got = amplitude_at(s, digits);
  EXPECT_NEAR(got.real(), want.real(), tol);
  EXPECT_NEAR(got.imag(), want.imag(), tol);
}

}  // namespace

TEST(StateVector, RejectsBadShapes) {
  EXPECT_EQ(code_of([] { StateVector(2, 1, {1.0}); }), ErrorCode::BadDim);
  EXPECT_EQ(code_of([] { StateVector(2, 2, {1.0, 0.0, 0.0}); }), ErrorCode::WrongShape);
  EXPECT_EQ(code_of([] { StateVector(1, 2, {1.0, 1.0}); }), ErrorCode::NotNormalized);
  EXPECT_EQ(code_of([] { StateVector::normalized(1, 2, {0.0, 0.0}); }), ErrorCode::ZeroProbability);
  EXPECT_EQ(code_of([] { StateVector(30, 2, {}); }), ErrorCode::TooLarge);
}

TEST(StateVector, DigitsRoundTrip) {
  const auto s = StateVector::basis(3, 3, 0);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.index_of(s.digits_of(i)), i);
  EXPECT_EQ(s.index_of(std::vector<int>{1, 0, 2}), 11u);  // site 1 most significant
  EXPECT_EQ(code_of([&] { s.index_of(std::vector<int>{0, 3, 0}); }), ErrorCode::BadDigits);
  EXPECT_EQ(code_of([&] { s.index_of(std::vector<int>{0, 0}); }), ErrorCode::BadDigits);
}

TEST(NamedStates, S) {
  const auto gen = build_named(NamedState::S);
  const auto& s = gen.state;
  expect_amp(s, {0, 0, 0}, 0.5);
  expect_amp(s, {0, 1, 1}, -0.5);
  expect_amp(s, {1, 0, 1}, -0.5);
  expect_amp(s, {1, 1, 0}, -0.5);
  EXPECT_EQ(format_kets(s), "+0.5|000> -0.5|011> -0.5|101> -0.5|110>");
}

TEST(NamedStates, SPrime) {
  const auto s = build_named(NamedState::SPrime).state;
  EXPECT_EQ(format_kets(s), "+0.5|000> +0.5|011> +0.5|101> -0.5|110>");
}

TEST(PcgState, GreenSingleEdge) {
  const auto s = build_pcg_state(validate_pcg(3, {{{1, 2}, Weight::G}}));
  const double r = 1.0 / std::sqrt(2.0);
  expect_amp(s, {0, 0, 0}, r);
  expect_amp(s, {1, 1, 0}, r);
  EXPECT_NEAR(squared_norm(s.amps()), 1.0, 1e-15);
}

TEST(PcgState, RelaxedBellPairAndEmptyGraph) {
  const auto bell = build_pcg_state(Pcg::relaxed(2, {{{1, 2}, Weight::G}}));
  EXPECT_EQ(format_kets(bell), "+0.707106781187|00> +0.707106781187|11>");
  const auto empty = build_pcg_state(validate_pcg(3, {}));
  EXPECT_EQ(format_kets(empty), "+1|000>");
}

TEST(PcgState, SupportMatchesEdgesOnRandomGraphs) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 6;
    const auto pcg = oracle::random_pcg(rng, n, 8);
    const auto s = build_pcg_state(pcg);
    const double scale = 1.0 / std::sqrt(double(pcg.p() + 1));
    EXPECT_NEAR(squared_norm(s.amps()), 1.0, 1e-12);
    EXPECT_NEAR(s[0].real(), scale, 1e-15);
    std::size_t nonzero = 0;
    for (auto a : s.amps()) nonzero += std::abs(a) > 0 ? 1 : 0;
    EXPECT_EQ(nonzero, pcg.p() + 1);
    for (const auto& e : pcg.edges()) {
      std::vector<int> digits(static_cast<std::size_t>(n), 0);
      for (int v : e.vertices) digits[static_cast<std::size_t>(v - 1)] = 1;
      expect_amp(s, digits, -theta(e.weight) * scale);
    }
  }
}

TEST(FamilyS1, FiveQubitSigns) {
  const auto gen = build_s1(5);
  ASSERT_TRUE(gen.pcg);
  EXPECT_EQ(gen.pcg->p(), 5u);
  const double r = 1.0 / std::sqrt(6.0);
  expect_amp(gen.state, {0, 0, 0, 0, 0}, r);
  expect_amp(gen.state, {0, 1, 1, 1, 1}, -r);
  expect_amp(gen.state, {1, 1, 1, 1, 0}, -r);
  expect_amp(gen.state, {1, 1, 1, 1, 1}, 0.0);
}

TEST(FamilyS1, DomainErrors) {
  EXPECT_EQ(code_of([] { build_s1(4); }), ErrorCode::EvenN);
  EXPECT_EQ(code_of([] { build_s1(1); }), ErrorCode::BadDim);
}

TEST(FamilyS2, FourQubits) {
  const auto gen = build_s2(4);
  EXPECT_EQ(gen.pcg->p(), 6u);
  EXPECT_NEAR(gen.state[0].real(), 1.0 / std::sqrt(7.0), 1e-15);
  expect_amp(gen.state, {0, 1, 0, 1}, -1.0 / std::sqrt(7.0));
  EXPECT_EQ(code_of([] { build_s2(2); }), ErrorCode::BadDim);
}

TEST(FamilyS3, QutritAmplitudes) {
  const auto gen = build_s3(3);
  EXPECT_EQ(gen.state.num_sites(), 4);
  EXPECT_EQ(gen.state.site_dim(), 3);
  EXPECT_FALSE(gen.pcg);
  const double pi = std::acos(-1.0);
  expect_amp(gen.state, {0, 0, 0, 0}, 1.0 / 3.0);
  expect_amp(gen.state, {1, 1, 0, 1}, std::polar(1.0 / 3.0, 2 * pi / 3));
  expect_amp(gen.state, {0, 2, 2, 2}, std::polar(1.0 / 3.0, 4 * pi / 3), 1e-15);
  expect_amp(gen.state, {1, 1, 1, 1}, 0.0);
}

TEST(FamilyS3, QubitCaseIsS) {
  const auto a = build_s3(2).state;
  const auto b = build_named(NamedState::S).state;
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-15);
}

TEST(Recipe, RealizesEachFamily) {
  StateRecipe r;
  r.family = StateFamily::S1;
  r.n = 3;
  EXPECT_EQ(realize(r).state.num_sites(), 3);
  r.family = StateFamily::S3;
  r.d = 4;
  EXPECT_EQ(realize(r).state.site_dim(), 4);
  r.family = StateFamily::NamedSPrime;
  EXPECT_EQ(realize(r).pcg->edge(2).weight, Weight::R);
  r.family = StateFamily::PcgState;
  EXPECT_EQ(code_of([&] { realize(r); }), ErrorCode::WrongShape);
}
