#include "xxchain/chain_model.hpp"

#include <cmath>
#include <stdexcept>

#include "xxchain/rng.hpp"

namespace xxchain {

std::string chain_kind_name(ChainKind kind) {
  return kind == ChainKind::branched ? "branched" : "standard";
}

ChainKind chain_kind_from_name(const std::string& name) {
  if (name == "branched") return ChainKind::branched;
  if (name == "standard") return ChainKind::standard;
  throw std::invalid_argument("unknown chain kind '" + name +
                              "' (expected 'standard' or 'branched')");
}

namespace {

void check_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string("coupling ") + name +
                                " must be finite");
  }
}

}  // namespace

ChainSpec make_chain(ChainKind kind, int n_chain, const CouplingSet& couplings) {
  if (n_chain < 4) {
    throw std::invalid_argument("n_chain must be at least 4, got " +
                                std::to_string(n_chain));
  }
  check_finite(couplings.j_a, "j_a");
  check_finite(couplings.j_a_tilde, "j_a_tilde");
  check_finite(couplings.j_m, "j_m");
  check_finite(couplings.j_b, "j_b");
  check_finite(couplings.j_b_tilde, "j_b_tilde");
  if (kind == ChainKind::standard &&
      (couplings.j_a_tilde != 0.0 || couplings.j_b_tilde != 0.0)) {
    throw std::invalid_argument(
        "standard chains require j_a_tilde = j_b_tilde = 0");
  }
  return ChainSpec{kind, n_chain, couplings, {}};
}

ChainSpec with_jm(const ChainSpec& spec, double jm) {
  CouplingSet c = spec.couplings;
  c.j_m = jm;
  ChainSpec out = make_chain(spec.kind, spec.n_chain, c);
  out.edge_multipliers = spec.edge_multipliers;
  return out;
}

ChainSpec sample_disorder(const ChainSpec& clean, const DisorderSpec& spec,
                          int index) {
  if (!clean.clean()) {
    throw std::invalid_argument("sample_disorder expects a clean ChainSpec");
  }
  if (spec.p < 0.0 || spec.p >= 1.0) {
    throw std::invalid_argument("disorder width p must lie in [0, 1), got " +
                                std::to_string(spec.p));
  }
  if (index < 0 || index >= spec.n_realizations) {
    throw std::invalid_argument("realization index " + std::to_string(index) +
                                " out of range [0, " +
                                std::to_string(spec.n_realizations) + ")");
  }

  ChainSpec out = clean;
  out.edge_multipliers.resize(clean.edge_count());
  for (int e = 0; e < clean.edge_count(); ++e) {
    RngStream stream{spec.base_seed, static_cast<std::uint64_t>(index),
                     static_cast<std::uint64_t>(e)};
    out.edge_multipliers[e] = 1.0 + stream.next_symmetric(spec.p);
  }
  return out;
}

std::vector<Edge> edge_list(const ChainSpec& spec) {
  const CouplingSet& c = spec.couplings;
  const int n = spec.n_chain;
  std::vector<Edge> edges;
  edges.reserve(spec.edge_count());

  if (spec.kind == ChainKind::branched) {
    // Sites (A, 1, ..., N, B) -> indices (0, 1, ..., N, N+1).
    edges.push_back({0, 2, c.j_a_tilde});  // (A,2)
    edges.push_back({1, 2, c.j_a});        // (1,2)
    for (int j = 2; j <= n - 2; ++j) edges.push_back({j, j + 1, c.j_m});
    edges.push_back({n - 1, n, c.j_b});        // (N-1,N)
    edges.push_back({n - 1, n + 1, c.j_b_tilde});  // (N-1,B)
  } else {
    // Sites (1, ..., N) -> indices (0, ..., N-1).
    edges.push_back({0, 1, c.j_a});  // (1,2)
    for (int j = 2; j <= n - 2; ++j) edges.push_back({j - 1, j, c.j_m});
    edges.push_back({n - 2, n - 1, c.j_b});  // (N-1,N)
  }

  if (!spec.edge_multipliers.empty()) {
    if (spec.edge_multipliers.size() != edges.size()) {
      throw std::invalid_argument("edge multiplier count does not match edge count");
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      edges[e].strength *= spec.edge_multipliers[e];
    }
  }
  return edges;
}

std::pair<int, int> sender_sites(const ChainSpec& spec) {
  // (A, 1) branched, (1, 2) standard; both map to the first two indices.
  (void)spec;
  return {0, 1};
}

std::pair<int, int> receiver_sites(const ChainSpec& spec) {
  if (spec.kind == ChainKind::branched) {
    return {spec.n_chain, spec.n_chain + 1};  // (N, B)
  }
  return {spec.n_chain - 2, spec.n_chain - 1};  // (N-1, N)
}

std::string site_name(const ChainSpec& spec, int site) {
  if (site < 0 || site >= spec.site_count()) {
    throw std::invalid_argument("site index out of range");
  }
  if (spec.kind == ChainKind::branched) {
    if (site == 0) return "A";
    if (site == spec.n_chain + 1) return "B";
    return std::to_string(site);
  }
  return std::to_string(site + 1);
}

}  // namespace xxchain
