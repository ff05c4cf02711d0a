#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pcg_paradox/density.hpp"
#include "pcg_paradox/paradox.hpp"
#include "pcg_paradox/pcg.hpp"
#include "pcg_paradox/sampling.hpp"
#include "pcg_paradox/simulate.hpp"
#include "pcg_paradox/state.hpp"

namespace pcg_paradox {

using json = nlohmann::json;

namespace detail {

inline std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

inline void write_canonical(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map keeps keys sorted
        if (!first) out += ",\n";
        first = false;
        out += inner + json(it.key()).dump() + ": ";
        write_canonical(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && !v.is_structured();
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write_canonical(j[i], out, indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        write_canonical(j[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Sorted keys, two-space indent, floats with 15 significant digits.
inline std::string canonical_dump(const json& j) {
  std::string out;
  detail::write_canonical(j, out, 0);
  out += '\n';
  return out;
}

inline json complex_json(complex_t z) { return json::array({z.real(), z.imag()}); }

// ---- PCG -------------------------------------------------------------------

/// {"n": int, "edges": [{"vertices": [...], "weight": "R"|"G"}]} with edges
/// sorted by (size, vertices).
inline json to_json(const Pcg& pcg) {
  auto edges = pcg.edges();
  std::sort(edges.begin(), edges.end(), edge_order);
  json arr = json::array();
  for (const auto& e : edges) {
    arr.push_back({{"vertices", e.vertices}, {"weight", std::string(1, weight_char(e.weight))}});
  }
  return {{"n", pcg.n()}, {"edges", arr}};
}

namespace detail {

inline std::pair<int, std::vector<Edge>> parse_pcg_fields(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      const auto w = e.at("weight").get<std::string>();
      if (w != "R" && w != "G") throw Error(ErrorCode::ParseError, "edge weight must be \"R\" or \"G\"");
      edges.push_back({e.at("vertices").get<std::vector<int>>(), w == "R" ? Weight::R : Weight::G});
    }
    return {n, std::move(edges)};
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

}  // namespace detail

/// Parses and validates a PCG document; edge order is kept as written.
inline Pcg pcg_from_json(const json& j) {
  auto [n, edges] = detail::parse_pcg_fields(j);
  return validate_pcg(n, std::move(edges));
}

inline Pcg pcg_from_json_relaxed(const json& j) {
  auto [n, edges] = detail::parse_pcg_fields(j);
  return Pcg::relaxed(n, std::move(edges));
}

// ---- states ----------------------------------------------------------------

/// {"sites": n, "dim": d, "amps": [[re, im], ...]} in basis-index order.
inline json to_json(const StateVector& state) {
  json amps = json::array();
  for (auto a : state.amps()) amps.push_back(complex_json(a));
  return {{"sites", state.num_sites()}, {"dim", state.site_dim()}, {"amps", amps}};
}

inline StateVector state_from_json(const json& j) {
  try {
    std::vector<complex_t> amps;
    for (const auto& a : j.at("amps")) amps.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
    return StateVector(j.at("sites").get<int>(), j.at("dim").get<int>(), std::move(amps));
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

// ---- measurement results ---------------------------------------------------

/// {"<eigenvalue index>": probability}
inline json to_json(const EigenvalueDistribution& dist) {
  json j = json::object();
  for (std::size_t s = 0; s < dist.probs.size(); ++s) j[std::to_string(s)] = dist.probs[s];
  return j;
}

/// {"<outcome digits>": count}
inline json to_json(const ShotCounts& counts) {
  json j = json::object();
  for (auto [idx, c] : counts.counts) j[counts.digits(idx)] = c;
  return j;
}

inline json to_json(const ConditionalCheck& c) {
  return {{"edge", c.edge},
          {"conditioned_zero", c.conditioned},
          {"required_eigenvalue", complex_json(c.required_eigenvalue)},
          {"required_eigenvalue_index", c.required_index},
          {"conditioning_probability", c.conditioning_probability},
          {"probability", c.probability}};
}

// ---- certificates ----------------------------------------------------------

inline json to_json(const ParadoxCertificate& cert) {
  json j;
  if (cert.pcg) {
    // Conditions follow the input edge order, so keep it here too.
    json edges = json::array();
    for (const auto& e : cert.pcg->edges()) {
      edges.push_back({{"vertices", e.vertices}, {"weight", std::string(1, weight_char(e.weight))}});
    }
    j["pcg"] = {{"n", cert.pcg->n()}, {"edges", edges}};
    j["hardy_matrix"] = cert.hardy_matrix;
  }
  if (cert.s3_dim) j["s3_dim"] = *cert.s3_dim;
  j["uncolorable"] = cert.uncolorable;
  j["family"] = cert.family ? json(std::string(to_string(*cert.family))) : json("ModDExhaustion");
  j["classical_satisfying_count"] = cert.classical_satisfying_count;
  json conds = json::array();
  for (const auto& c : cert.conditions) conds.push_back(to_json(c));
  j["conditions"] = conds;
  j["success_probability"] = cert.success_probability;
  j["tolerance"] = cert.tolerance;
  j["verdict"] = std::string(to_string(cert.verdict));
  return j;
}

/// canonical_form,colorable,class_size
inline std::string catalog_csv(const ClassCatalog& catalog) {
  std::ostringstream os;
  os << "canonical_form,colorable,class_size\n";
  for (const auto& c : catalog.classes) {
    os << '"' << c.canonical_form << '"' << ',' << (c.colorable ? "true" : "false") << ',' << c.class_size << '\n';
  }
  return os.str();
}

}  // namespace pcg_paradox
