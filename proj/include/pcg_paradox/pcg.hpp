#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pcg_paradox/error.hpp"

namespace pcg_paradox {

/// Edge weight. Red carries coefficient theta = +1, green theta = -1.
enum class Weight : std::uint8_t { R, G };

constexpr int theta(Weight w) noexcept { return w == Weight::R ? +1 : -1; }

/// Colouring value C(S) of an edge: -1 for red, +1 for green.
constexpr int edge_color_value(Weight w) noexcept { return w == Weight::R ? -1 : +1; }

constexpr char weight_char(Weight w) noexcept { return w == Weight::R ? 'R' : 'G'; }

enum class Color : std::uint8_t { Red, Green };

/// C(v): -1 for red, +1 for green.
constexpr int color_value(Color c) noexcept { return c == Color::Red ? -1 : +1; }

/// Vertices are 1-based labels, kept sorted ascending without repeats.
struct Edge {
  std::vector<int> vertices;
  Weight weight = Weight::R;

  /// Bit v-1 set for every vertex v.
  std::uint64_t mask() const noexcept {
    std::uint64_t m = 0;
    for (int v : vertices) m |= std::uint64_t{1} << (v - 1);
    return m;
  }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Orders edges by (size, vertices), the canonical serialization order.
inline bool edge_order(const Edge& a, const Edge& b) {
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  return a.weight < b.weight;
}

inline constexpr int max_pcg_vertices = 64;

/// A projected-coloring graph: n vertices and weighted multi-vertex edges.
///
/// Obtain one through validate_pcg(), which enforces every PCG invariant, or
/// through Pcg::relaxed(), which only checks labels and duplicates. The
/// relaxed form exists for registers that the state constructor and the
/// simulator handle fine but that fall outside the strict edge bounds (a
/// two-qubit Bell pair, or a magic-square constraint that swallows others).
class Pcg {
 public:
  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t p() const noexcept { return edges_.size(); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Sorted complement of edge i.
  std::vector<int> complement(std::size_t i) const {
    std::vector<int> out;
    const std::uint64_t m = edges_.at(i).mask();
    for (int v = 1; v <= n_; ++v) {
      if (!(m >> (v - 1) & 1)) out.push_back(v);
    }
    return out;
  }

  /// Labels in 1..n, no repeated vertex inside an edge, no duplicate edge,
  /// every edge non-empty. Vertex lists are sorted.
  static Pcg relaxed(int n, std::vector<Edge> edges);

  friend bool operator==(const Pcg&, const Pcg&) = default;

 private:
  Pcg(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  int n_ = 0;
  std::vector<Edge> edges_;
};

namespace detail {

inline void normalize_edge(int n, Edge& e) {
  std::sort(e.vertices.begin(), e.vertices.end());
  for (std::size_t k = 0; k < e.vertices.size(); ++k) {
    const int v = e.vertices[k];
    if (v < 1 || v > n) {
      throw Error(ErrorCode::BadVertexLabel, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (k > 0 && e.vertices[k - 1] == v) {
      throw Error(ErrorCode::BadVertexLabel, "vertex " + std::to_string(v) + " repeated within an edge");
    }
  }
}

inline std::string edge_label(const Edge& e) {
  std::string s = "{";
  for (std::size_t k = 0; k < e.vertices.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(e.vertices[k]);
  }
  s += '}';
  s += weight_char(e.weight);
  return s;
}

}  // namespace detail

inline Pcg Pcg::relaxed(int n, std::vector<Edge> edges) {
  if (n < 1) throw Error(ErrorCode::BadVertexCount, "vertex count must be positive");
  if (n > max_pcg_vertices) {
    throw Error(ErrorCode::TooLarge, "at most " + std::to_string(max_pcg_vertices) + " vertices supported");
  }
  for (auto& e : edges) {
    detail::normalize_edge(n, e);
    if (e.vertices.empty()) throw Error(ErrorCode::EdgeTooSmall, "empty edge");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (edges[i].vertices == edges[j].vertices) {
        throw Error(ErrorCode::DuplicateEdge, "edge " + detail::edge_label(edges[i]) + " appears twice");
      }
    }
  }
  return Pcg(n, std::move(edges));
}

/// Builds a Pcg, enforcing 2 <= |S_i| < n and |S_i u S_j| > max(|S_i|, |S_j|).
inline Pcg validate_pcg(int n, std::vector<Edge> edges) {
  if (n < 2) throw Error(ErrorCode::BadVertexCount, "a PCG needs at least 2 vertices");
  if (n > max_pcg_vertices) {
    throw Error(ErrorCode::TooLarge, "at most " + std::to_string(max_pcg_vertices) + " vertices supported");
  }
  for (auto& e : edges) {
    detail::normalize_edge(n, e);
    if (e.vertices.size() < 2) {
      throw Error(ErrorCode::EdgeTooSmall, "edge " + detail::edge_label(e) + " has fewer than 2 vertices");
    }
    if (static_cast<int>(e.vertices.size()) >= n) {
      throw Error(ErrorCode::EdgeTooLarge, "edge " + detail::edge_label(e) + " must have fewer than n vertices");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::uint64_t mi = edges[i].mask();
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t mj = edges[j].mask();
      if (mi == mj) {
        throw Error(ErrorCode::DuplicateEdge, "edge " + detail::edge_label(edges[i]) + " appears twice");
      }
      const int uni = std::popcount(mi | mj);
      if (uni <= std::max(std::popcount(mi), std::popcount(mj))) {
        throw Error(ErrorCode::ContainmentViolation,
                    "edge " + detail::edge_label(edges[i]) + " and edge " + detail::edge_label(edges[j]) +
                        " are nested");
      }
    }
  }
  return Pcg::relaxed(n, std::move(edges));
}

inline Pcg validate_pcg(const Pcg& pcg) { return validate_pcg(pcg.n(), pcg.edges()); }

/// Total assignment of a colour to every vertex 1..n.
struct Coloring {
  std::map<int, Color> values;

  /// Bit v-1 set for every red vertex.
  std::uint64_t red_mask() const noexcept {
    std::uint64_t m = 0;
    for (auto [v, c] : values) {
      if (c == Color::Red) m |= std::uint64_t{1} << (v - 1);
    }
    return m;
  }

  static Coloring from_red_mask(int n, std::uint64_t red) {
    Coloring c;
    for (int v = 1; v <= n; ++v) c.values[v] = (red >> (v - 1) & 1) ? Color::Red : Color::Green;
    return c;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ColoringReport {
  std::vector<bool> satisfied;  // one entry per edge, in edge order
  bool all = true;
};

/// Edge i is satisfied iff the product of C(v) over the edge equals C(S_i).
inline ColoringReport evaluate_coloring(const Pcg& pcg, const Coloring& c) {
  for (int v = 1; v <= pcg.n(); ++v) {
    if (!c.values.contains(v)) {
      throw Error(ErrorCode::MissingVertexColor, "vertex " + std::to_string(v) + " has no colour");
    }
  }
  ColoringReport report;
  for (const auto& e : pcg.edges()) {
    int product = 1;
    for (int v : e.vertices) product *= color_value(c.values.at(v));
    const bool ok = product == edge_color_value(e.weight);
    report.satisfied.push_back(ok);
    report.all = report.all && ok;
  }
  return report;
}

struct BruteForceOptions {
  int max_vertices = 24;
  unsigned threads = 1;
};

struct BruteForceResult {
  /// Lexicographically smallest satisfying colouring (vertex 1 first, green before red).
  std::optional<Coloring> first;
  std::uint64_t count = 0;
};

/// Exhausts all 2^n colourings.
inline BruteForceResult brute_force_color(const Pcg& pcg, BruteForceOptions opts = {}) {
  const int n = pcg.n();
  if (n > opts.max_vertices || n > 62) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(n) + " vertices exceed the exhaustion bound " + std::to_string(opts.max_vertices));
  }
  // Assignment index a: vertex v is red iff bit (n - v) of a is set, so
  // ascending a is lexicographic order over (C(1), ..., C(n)) with green first.
  struct Row {
    std::uint64_t mask;
    unsigned parity;
  };
  std::vector<Row> rows;
  for (const auto& e : pcg.edges()) {
    std::uint64_t m = 0;
    for (int v : e.vertices) m |= std::uint64_t{1} << (n - v);
    rows.push_back({m, e.weight == Weight::R ? 1u : 0u});
  }
  const std::uint64_t total = std::uint64_t{1} << n;

  auto scan = [&rows](std::uint64_t lo, std::uint64_t hi) {
    std::pair<std::optional<std::uint64_t>, std::uint64_t> out{std::nullopt, 0};
    for (std::uint64_t a = lo; a < hi; ++a) {
      bool ok = true;
      for (const auto& r : rows) {
        if ((static_cast<unsigned>(std::popcount(a & r.mask)) & 1u) != r.parity) {
          ok = false;
          break;
        }
      }
      if (ok) {
        if (!out.first) out.first = a;
        ++out.second;
      }
    }
    return out;
  };

  const std::uint64_t workers = std::clamp<std::uint64_t>(opts.threads, 1, std::max<std::uint64_t>(1, total / 4096));
  std::vector<std::pair<std::optional<std::uint64_t>, std::uint64_t>> parts;
  if (workers == 1) {
    parts.push_back(scan(0, total));
  } else {
    std::vector<std::future<std::pair<std::optional<std::uint64_t>, std::uint64_t>>> futures;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      futures.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& f : futures) parts.push_back(f.get());
  }

  BruteForceResult result;
  std::optional<std::uint64_t> best;
  for (const auto& [first, count] : parts) {
    result.count += count;
    if (first && (!best || *first < *best)) best = first;
  }
  if (best) {
    Coloring c;
    for (int v = 1; v <= n; ++v) c.values[v] = (*best >> (n - v) & 1) ? Color::Red : Color::Green;
    result.first = std::move(c);
  }
  return result;
}

namespace detail {

inline std::string encode_edges(int n, std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string s = "n=" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s;
}

struct CanonicalResult {
  std::string form;
  std::vector<int> relabel;  // relabel[v-1] = new label of vertex v
};

inline CanonicalResult canonicalize(const Pcg& pcg) {
  const int n = pcg.n();
  if (n > 8) throw Error(ErrorCode::TooLarge, "canonical form limited to 8 vertices");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  CanonicalResult best;
  do {
    std::vector<std::string> parts;
    parts.reserve(pcg.p());
    for (const auto& e : pcg.edges()) {
      std::vector<int> mapped;
      for (int v : e.vertices) mapped.push_back(perm[static_cast<std::size_t>(v - 1)]);
      std::sort(mapped.begin(), mapped.end());
      // Single-digit labels (n <= 8) keep string order equal to (size, vertices) order.
      std::string token(1, static_cast<char>('0' + mapped.size()));
      for (int v : mapped) token += static_cast<char>('0' + v);
      token += weight_char(e.weight);
      parts.push_back(std::move(token));
    }
    std::string form = encode_edges(n, std::move(parts));
    if (best.form.empty() || form < best.form) {
      best.form = std::move(form);
      best.relabel = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// Lexicographically minimal edge-list encoding over all vertex relabelings.
inline std::string canonical_form(const Pcg& pcg) { return detail::canonicalize(pcg).form; }

/// The relabeled graph whose plain encoding is the canonical form, with
/// edges in canonical order.
inline Pcg canonical_representative(const Pcg& pcg) {
  const auto best = detail::canonicalize(pcg);
  std::vector<Edge> edges;
  for (const auto& e : pcg.edges()) {
    Edge m{{}, e.weight};
    for (int v : e.vertices) m.vertices.push_back(best.relabel[static_cast<std::size_t>(v - 1)]);
    std::sort(m.vertices.begin(), m.vertices.end());
    edges.push_back(std::move(m));
  }
  std::sort(edges.begin(), edges.end(), edge_order);
  return Pcg::relaxed(pcg.n(), std::move(edges));
}

/// Applies relabel[v-1] to every vertex; edge order is preserved.
inline Pcg permute_vertices(const Pcg& pcg, const std::vector<int>& relabel) {
  std::vector<Edge> edges;
  for (const auto& e : pcg.edges()) {
    Edge m{{}, e.weight};
    for (int v : e.vertices) m.vertices.push_back(relabel.at(static_cast<std::size_t>(v - 1)));
    edges.push_back(std::move(m));
  }
  return Pcg::relaxed(pcg.n(), std::move(edges));
}

}  // namespace pcg_paradox
