#pragma once

#include <optional>

#include "pcg_paradox/magic_square.hpp"
#include "pcg_paradox/state.hpp"

namespace pcg_paradox {

/// Names one constructible state and its parameters.
struct StateRecipe {
  StateFamily family = StateFamily::NamedS;
  int n = 0;                           // S1, S2
  int d = 0;                           // S3
  std::optional<MagicSquareConfig> magic;
  std::optional<Pcg> pcg;              // PcgState
};

inline GeneratedState realize(const StateRecipe& recipe) {
  switch (recipe.family) {
    case StateFamily::PcgState:
      if (!recipe.pcg) throw Error(ErrorCode::WrongShape, "PCG recipe needs a graph");
      return {StateFamily::PcgState, build_pcg_state(*recipe.pcg), recipe.pcg};
    case StateFamily::S1: return build_s1(recipe.n);
    case StateFamily::S2: return build_s2(recipe.n);
    case StateFamily::S3: return build_s3(recipe.d);
    case StateFamily::NamedS: return build_named(NamedState::S);
    case StateFamily::NamedSPrime: return build_named(NamedState::SPrime);
    case StateFamily::MagicSquare: {
      auto square = magic_square_pcg(recipe.magic.value_or(MagicSquareConfig{}));
      return {StateFamily::MagicSquare, std::move(square.state), std::move(square.pcg)};
    }
  }
  throw Error(ErrorCode::WrongShape, "unknown state family");
}

}  // namespace pcg_paradox
