#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcg_paradox/gf2.hpp"
#include "pcg_paradox/magic_square.hpp"
#include "pcg_paradox/pcg.hpp"
#include "pcg_paradox/simulate.hpp"
#include "pcg_paradox/state.hpp"

namespace pcg_paradox {

enum class Verdict { Paradox, NoParadox };

constexpr std::string_view to_string(Verdict v) noexcept { return v == Verdict::Paradox ? "Paradox" : "NoParadox"; }

/// Classical impossibility paired with the quantum predictions that defeat it.
struct ParadoxCertificate {
  std::optional<Pcg> pcg;
  std::optional<int> s3_dim;  // set for the qudit family instead of a graph
  bool uncolorable = false;
  std::optional<HardyFamily> family;       // rank route; absent for the qudit family
  std::vector<std::string> hardy_matrix;   // A|Theta rows, graphs only
  std::uint64_t classical_satisfying_count = 0;
  std::vector<ConditionalCheck> conditions;
  double success_probability = 0.0;
  double tolerance = 1e-9;
  Verdict verdict = Verdict::NoParadox;
};

struct VerifyOptions {
  double tolerance = 1e-9;  // |P - 1| allowed for a "probability one" condition
  BruteForceOptions brute_force{};
};

inline Verdict decide_verdict(bool uncolorable, const std::vector<ConditionalCheck>& conditions, double success,
                              double tolerance) {
  bool all_one = true;
  for (const auto& c : conditions) all_one = all_one && std::abs(c.probability - 1.0) <= tolerance;
  return uncolorable && all_one && success > 0.0 ? Verdict::Paradox : Verdict::NoParadox;
}

inline ParadoxCertificate verify_paradox(const Pcg& pcg, VerifyOptions opts = {}) {
  ParadoxCertificate cert;
  cert.pcg = pcg;
  cert.tolerance = opts.tolerance;

  const auto sys = build_hardy_system(pcg);
  cert.uncolorable = sys.rank_a != sys.rank_b;
  cert.family = cert.uncolorable ? HardyFamily::RankDiffer : HardyFamily::RankEqual;
  cert.hardy_matrix = sys.dump();

  const auto exhaust = brute_force_color(pcg, opts.brute_force);
  cert.classical_satisfying_count = exhaust.count;
  if (cert.uncolorable != (exhaust.count == 0)) {
    throw std::logic_error("rank test and exhaustive colouring disagree");
  }

  const auto state = build_pcg_state(pcg);
  for (std::size_t i = 0; i < pcg.p(); ++i) cert.conditions.push_back(conditional_edge_check(state, pcg, i));
  cert.success_probability = all_zero_probability(state);
  cert.verdict = decide_verdict(cert.uncolorable, cert.conditions, cert.success_probability, cert.tolerance);
  return cert;
}

/// Number of m in Z_d^{d+1} with sum_{j != k} m_j = -1 (mod d) for every k,
/// i.e. classical value assignments x_j = w^{m_j} meeting every conditional.
inline std::uint64_t count_cyclic_assignments(int d) {
  const int n = d + 1;
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  while (true) {
    int total = 0;
    for (int v : m) total += v;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) ok = ((total - m[static_cast<std::size_t>(k)]) % d) == d - 1;
    if (ok) ++count;
    int pos = n - 1;
    while (pos >= 0 && ++m[static_cast<std::size_t>(pos)] == d) m[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return count;
}

/// Qudit family S3(d): classical side by exhausting all d^{d+1} mod-d
/// assignments, quantum side by simulation.
inline ParadoxCertificate verify_s3_paradox(int d, double tolerance = 1e-9) {
  if (d < 2 || d > 5) throw Error(ErrorCode::BadDim, "S3 certificates cover 2 <= d <= 5");
  ParadoxCertificate cert;
  cert.s3_dim = d;
  cert.tolerance = tolerance;
  cert.classical_satisfying_count = count_cyclic_assignments(d);
  cert.uncolorable = cert.classical_satisfying_count == 0;
  const auto gen = build_s3(d);
  for (int k = 1; k <= d + 1; ++k) cert.conditions.push_back(cyclic_conditional_check(gen.state, k));
  cert.success_probability = all_zero_probability(gen.state);
  cert.verdict = decide_verdict(cert.uncolorable, cert.conditions, cert.success_probability, tolerance);
  return cert;
}

/// Every valid PCG on n <= 4 vertices, optionally only those whose edges
/// cover all vertices. Edges are listed in canonical (size, vertices) order.
inline std::vector<Pcg> enumerate_pcgs(int n, bool require_cover) {
  if (n < 2) throw Error(ErrorCode::BadVertexCount, "a PCG needs at least 2 vertices");
  if (n > 4) throw Error(ErrorCode::TooLarge, "exhaustive enumeration limited to n <= 4");
  std::vector<Edge> candidates;
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    const int size = std::popcount(subset);
    if (size < 2 || size >= n) continue;
    Edge e;
    for (int v = 1; v <= n; ++v) {
      if (subset >> (v - 1) & 1) e.vertices.push_back(v);
    }
    candidates.push_back(std::move(e));
  }
  std::sort(candidates.begin(), candidates.end(), edge_order);
  const std::size_t k = candidates.size();
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < k; ++i) combos *= 3;

  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Pcg> out;
  for (std::uint64_t code = 0; code < combos; ++code) {
    // digit 0 = absent, 1 = red, 2 = green
    std::uint64_t c = code;
    std::vector<Edge> edges;
    std::vector<std::uint64_t> masks;
    bool antichain = true;
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < k && antichain; ++i, c /= 3) {
      const auto digit = c % 3;
      if (digit == 0) continue;
      const std::uint64_t m = candidates[i].mask();
      for (auto other : masks) antichain = antichain && (m & other) != m && (m & other) != other;
      masks.push_back(m);
      covered |= m;
      edges.push_back({candidates[i].vertices, digit == 1 ? Weight::R : Weight::G});
    }
    if (!antichain) continue;
    if (require_cover && covered != full) continue;
    out.push_back(validate_pcg(n, std::move(edges)));
  }
  return out;
}

struct PcgClass {
  std::string canonical_form;
  Pcg representative;
  bool colorable;
  std::size_t class_size;
};

struct ClassCatalog {
  int n;
  bool require_cover;
  std::vector<PcgClass> classes;  // ordered by canonical form
};

/// Groups enumerate_pcgs() output by vertex relabeling.
inline ClassCatalog enumerate_classes(int n, bool require_cover) {
  std::map<std::string, PcgClass> groups;
  for (const auto& pcg : enumerate_pcgs(n, require_cover)) {
    const bool colorable = !is_uncolorable(pcg).uncolorable;
    auto form = canonical_form(pcg);
    auto it = groups.find(form);
    if (it == groups.end()) {
      groups.emplace(form, PcgClass{form, canonical_representative(pcg), colorable, 1});
    } else {
      if (it->second.colorable != colorable) throw std::logic_error("colorability varies within a class");
      ++it->second.class_size;
    }
  }
  ClassCatalog catalog{n, require_cover, {}};
  for (auto& [form, cls] : groups) catalog.classes.push_back(std::move(cls));
  return catalog;
}

struct SuccessComparison {
  int n;
  double pigeonhole;         // 1/(n+1)
  double generalized_hardy;  // 1/2^(n-1)
  double simulated;          // P(all zero) of S1(n)
};

inline SuccessComparison success_comparison(int n) {
  if (n < 3) throw Error(ErrorCode::BadDim, "comparison needs n >= 3");
  if (n % 2 == 0) throw Error(ErrorCode::EvenN, "comparison defined for odd n");
  const auto gen = build_s1(n);
  return {n, 1.0 / (n + 1), std::ldexp(1.0, -(n - 1)), all_zero_probability(gen.state)};
}

struct MagicVerdict {
  MagicSquareConfig config;
  bool strict_pcg;  // passes validate_pcg
  ParadoxCertificate certificate;
};

inline std::vector<MagicVerdict> magic_square_verdicts(VerifyOptions opts = {}) {
  std::vector<MagicVerdict> out;
  for (const auto cfg : all_magic_configs()) {
    const auto square = magic_square_pcg(cfg);
    bool strict = true;
    try {
      validate_pcg(square.pcg);
    } catch (const Error&) {
      strict = false;
    }
    out.push_back({cfg, strict, verify_paradox(square.pcg, opts)});
  }
  return out;
}

}  // namespace pcg_paradox
