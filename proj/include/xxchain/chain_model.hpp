#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace xxchain {

enum class ChainKind { standard, branched };

std::string chain_kind_name(ChainKind kind);
ChainKind chain_kind_from_name(const std::string& name);

// The five exchange couplings in units of J. A standard (strictly linear)
// chain must keep both branch couplings at exactly zero.
struct CouplingSet {
  double j_a = 1.0;        // (1,2)
  double j_a_tilde = 0.0;  // (A,2), branched only
  double j_m = 1.0;        // backbone bulk (j, j+1)
  double j_b = 1.0;        // (N-1,N)
  double j_b_tilde = 0.0;  // (N-1,B), branched only
};

// Undirected coupling between two sites (canonical indices) with its
// effective strength in units of J.
struct Edge {
  int a = 0;
  int b = 0;
  double strength = 0.0;
};

// Chain topology plus couplings. Canonical site indices:
//   branched: (A, 1, ..., N, B) -> (0, 1, ..., N, N+1)
//   standard: (1, ..., N)       -> (0, ..., N-1)
// All vectors and matrices downstream index sites in this order.
// edge_multipliers, when nonempty, holds one (1 + delta) disorder factor per
// canonical edge ordinal; empty means the clean system.
struct ChainSpec {
  ChainKind kind = ChainKind::branched;
  int n_chain = 0;
  CouplingSet couplings;
  std::vector<double> edge_multipliers;

  bool clean() const { return edge_multipliers.empty(); }
  int site_count() const {
    return kind == ChainKind::branched ? n_chain + 2 : n_chain;
  }
  int edge_count() const {
    return kind == ChainKind::branched ? n_chain + 1 : n_chain - 1;
  }
};

// Static-disorder ensemble: every coupling scaled by 1 + delta with delta
// drawn uniformly from [-p, p], independently per edge and per realization.
struct DisorderSpec {
  double p = 0.0;
  std::uint64_t base_seed = 0;
  int n_realizations = 1;
};

// Validates and assembles a clean chain. Requires n_chain >= 4, finite
// couplings, and zero branch couplings for the standard kind.
ChainSpec make_chain(ChainKind kind, int n_chain, const CouplingSet& couplings);

// Copy of `spec` with j_m replaced (other couplings and kind unchanged).
ChainSpec with_jm(const ChainSpec& spec, double jm);

// Disordered copy of `clean` for one realization. Each edge multiplier is a
// pure function of (base_seed, index, edge ordinal): identical arguments give
// bit-identical multipliers regardless of evaluation order.
ChainSpec sample_disorder(const ChainSpec& clean, const DisorderSpec& spec,
                          int index);

// Edges in canonical order: Alice-side branch edge, backbone edges in site
// order, Bob-side branch edge. Strengths include disorder multipliers.
std::vector<Edge> edge_list(const ChainSpec& spec);

// (first, second) sender / receiver pairs in canonical indices:
//   branched: senders (A, 1), receivers (N, B)
//   standard: senders (1, 2), receivers (N-1, N)
std::pair<int, int> sender_sites(const ChainSpec& spec);
std::pair<int, int> receiver_sites(const ChainSpec& spec);

std::string site_name(const ChainSpec& spec, int site);

}  // namespace xxchain
