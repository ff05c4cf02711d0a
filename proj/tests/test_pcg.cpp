#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pcg_paradox/pcg.hpp"

using namespace pcg_paradox;

namespace {

Pcg triangle(Weight w23, Weight w13, Weight w12) {
  return validate_pcg(3, {{{2, 3}, w23}, {{1, 3}, w13}, {{1, 2}, w12}});
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(ValidatePcg, AcceptsTheRedTriangle) {
  const auto pcg = triangle(Weight::R, Weight::R, Weight::R);
  EXPECT_EQ(pcg.n(), 3);
  EXPECT_EQ(pcg.p(), 3u);
  EXPECT_EQ(pcg.edge(0).vertices, (std::vector<int>{2, 3}));
}

TEST(ValidatePcg, SortsVerticesWithinEdges) {
  const auto pcg = validate_pcg(4, {{{3, 1}, Weight::G}});
  EXPECT_EQ(pcg.edge(0).vertices, (std::vector<int>{1, 3}));
}

TEST(ValidatePcg, RejectsEachInvariantViolation) {
  EXPECT_EQ(code_of([] { validate_pcg(3, {{{1}, Weight::R}}); }), ErrorCode::EdgeTooSmall);
  EXPECT_EQ(code_of([] { validate_pcg(3, {{{1, 2, 3}, Weight::R}}); }), ErrorCode::EdgeTooLarge);
  // |{1,2} u {1,2,3}| = 3 = max
  EXPECT_EQ(code_of([] { validate_pcg(4, {{{1, 2}, Weight::R}, {{1, 2, 3}, Weight::G}}); }),
            ErrorCode::ContainmentViolation);
  EXPECT_EQ(code_of([] { validate_pcg(4, {{{1, 2}, Weight::R}, {{2, 1}, Weight::G}}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { validate_pcg(3, {{{1, 4}, Weight::R}}); }), ErrorCode::BadVertexLabel);
  EXPECT_EQ(code_of([] { validate_pcg(3, {{{0, 1}, Weight::R}}); }), ErrorCode::BadVertexLabel);
  EXPECT_EQ(code_of([] { validate_pcg(4, {{{1, 1, 2}, Weight::R}}); }), ErrorCode::BadVertexLabel);
  EXPECT_EQ(code_of([] { validate_pcg(1, {}); }), ErrorCode::BadVertexCount);
}

TEST(ValidatePcg, RelaxedAllowsFullEdgesButNotDuplicates) {
  const auto bell = Pcg::relaxed(2, {{{1, 2}, Weight::G}});
  EXPECT_EQ(bell.p(), 1u);
  EXPECT_EQ(code_of([] { validate_pcg(Pcg::relaxed(2, {{{1, 2}, Weight::G}})); }), ErrorCode::EdgeTooLarge);
  EXPECT_EQ(code_of([] { Pcg::relaxed(3, {{{1, 2}, Weight::G}, {{1, 2}, Weight::R}}); }), ErrorCode::DuplicateEdge);
}

TEST(EvaluateColoring, AllGreenSatisfiesGreenTriangle) {
  const auto pcg = triangle(Weight::G, Weight::G, Weight::G);
  const auto report = evaluate_coloring(pcg, Coloring::from_red_mask(3, 0));
  EXPECT_TRUE(report.all);
  EXPECT_EQ(report.satisfied, (std::vector<bool>{true, true, true}));
}

TEST(EvaluateColoring, RedTriangleWithOneRedVertex) {
  const auto pcg = triangle(Weight::R, Weight::R, Weight::R);
  // vertex 1 red, 2 and 3 green: edge {2,3} has product +1, needs -1
  const auto report = evaluate_coloring(pcg, Coloring::from_red_mask(3, 0b001));
  EXPECT_FALSE(report.satisfied[0]);
  EXPECT_TRUE(report.satisfied[1]);
  EXPECT_TRUE(report.satisfied[2]);
  EXPECT_FALSE(report.all);
}

TEST(EvaluateColoring, RedTriangleFailsForEveryColoring) {
  const auto pcg = triangle(Weight::R, Weight::R, Weight::R);
  for (std::uint64_t m = 0; m < 8; ++m) EXPECT_FALSE(evaluate_coloring(pcg, Coloring::from_red_mask(3, m)).all);
}

TEST(EvaluateColoring, MissingVertexIsAnError) {
  const auto pcg = triangle(Weight::R, Weight::R, Weight::R);
  Coloring partial;
  partial.values[1] = Color::Red;
  EXPECT_EQ(code_of([&] { evaluate_coloring(pcg, partial); }), ErrorCode::MissingVertexColor);
}

TEST(EvaluateColoring, GlobalFlipPreservesEvenEdges) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    const auto pcg = oracle::random_pcg(rng, n, 6);
    const std::uint64_t m = rng() & ((std::uint64_t{1} << n) - 1);
    const auto a = evaluate_coloring(pcg, Coloring::from_red_mask(n, m));
    const auto b = evaluate_coloring(pcg, Coloring::from_red_mask(n, ~m & ((std::uint64_t{1} << n) - 1)));
    for (std::size_t i = 0; i < pcg.p(); ++i) {
      if (pcg.edge(i).vertices.size() % 2 == 0) {
        EXPECT_EQ(a.satisfied[i], b.satisfied[i]);
      }
    }
  }
}

TEST(BruteForce, TriangleCounts) {
  EXPECT_FALSE(brute_force_color(triangle(Weight::R, Weight::R, Weight::R)).first);
  EXPECT_EQ(brute_force_color(triangle(Weight::R, Weight::R, Weight::R)).count, 0u);

  const auto green = brute_force_color(triangle(Weight::G, Weight::G, Weight::G));
  EXPECT_EQ(green.count, 2u);
  ASSERT_TRUE(green.first);
  EXPECT_EQ(green.first->red_mask(), 0u);  // all green comes first
}

TEST(BruteForce, FreeVertexDoublesCount) {
  const auto r = brute_force_color(validate_pcg(3, {{{1, 2}, Weight::R}}));
  EXPECT_EQ(r.count, 4u);
  ASSERT_TRUE(r.first);
  // smallest: vertex 1 green, 2 red, 3 green
  EXPECT_EQ(r.first->red_mask(), 0b010u);
}

TEST(BruteForce, RespectsBound) {
  EXPECT_THROW(brute_force_color(validate_pcg(6, {}), {5, 1}), Error);
}

TEST(BruteForce, ResultIndependentOfPartitioning) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pcg = oracle::random_pcg(rng, 14, 5);
    const auto one = brute_force_color(pcg, {24, 1});
    const auto many = brute_force_color(pcg, {24, 3});
    EXPECT_EQ(one.count, many.count);
    EXPECT_EQ(one.first, many.first);
    if (one.first) {
      EXPECT_TRUE(evaluate_coloring(pcg, *one.first).all);
    }
  }
}

TEST(CanonicalForm, RelabelingExamples) {
  EXPECT_EQ(canonical_form(validate_pcg(3, {{{1, 2}, Weight::R}, {{1, 3}, Weight::G}, {{2, 3}, Weight::G}})),
            canonical_form(validate_pcg(3, {{{1, 2}, Weight::G}, {{1, 3}, Weight::G}, {{2, 3}, Weight::R}})));
  EXPECT_NE(canonical_form(triangle(Weight::R, Weight::R, Weight::R)),
            canonical_form(triangle(Weight::R, Weight::R, Weight::G)));
  EXPECT_EQ(canonical_form(validate_pcg(3, {{{1, 2}, Weight::R}, {{2, 3}, Weight::R}})),
            canonical_form(validate_pcg(3, {{{1, 3}, Weight::R}, {{2, 3}, Weight::R}})));
}

TEST(CanonicalForm, InvariantUnderRandomPermutations) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 5;
    const auto pcg = oracle::random_pcg(rng, n, 5);
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 1);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    const auto moved = permute_vertices(pcg, relabel);
    EXPECT_EQ(canonical_form(pcg), canonical_form(moved));
    EXPECT_EQ(canonical_representative(pcg), canonical_representative(moved));
  }
}

TEST(CanonicalForm, TooLarge) { EXPECT_THROW(canonical_form(validate_pcg(9, {})), Error); }
