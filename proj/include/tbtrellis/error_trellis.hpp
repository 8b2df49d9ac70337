#pragma once

// Tailbiting error-trellises over syndrome-former states, built from the
// syndrome sequence of a received word, plus the maps from code-subtrellis
// anchors to error-subtrellis anchors.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tbtrellis/gf2.hpp"
#include "tbtrellis/state_machines.hpp"
#include "tbtrellis/trellis.hpp"

namespace tbt {

enum class SyndromeKind { forward, backward };

struct SyndromeSequence {
  Sequence symbols;
  SyndromeKind kind = SyndromeKind::forward;

  std::string to_string() const { return render_sequence(symbols); }
  friend bool operator==(const SyndromeSequence&, const SyndromeSequence&) = default;
};

namespace detail {

inline void require_sections(const SyndromeFormer& sf, std::size_t big_n) {
  if (big_n == 0) throw Error("received word is empty");
  if (big_n < sf.memory())
    throw Error("N = " + std::to_string(big_n) + " is smaller than the parity-check memory M = " +
                std::to_string(sf.memory()));
}

}  // namespace detail

/// Final syndrome-former state for input z from the all-zero state. Only
/// the last M symbols of z matter.
inline SfState sigma_fin(const PolyMatrix& h, std::span<const BitVector> z) {
  const SyndromeFormer sf(h);
  detail::require_sections(sf, z.size());
  return sf.run(sf.zero_state(), z).final_state;
}

/// Syndromes of z with the syndrome former started (and, necessarily,
/// ended) in sigma_fin.
inline SyndromeSequence tailbiting_syndromes(const PolyMatrix& h, std::span<const BitVector> z,
                                             SyndromeKind kind = SyndromeKind::forward) {
  const SyndromeFormer sf(h);
  detail::require_sections(sf, z.size());
  const SfState start = sf.run(sf.zero_state(), z).final_state;
  auto run = sf.run(start, z);
  if (run.final_state != start) throw Error("syndrome former did not return to sigma_fin");
  return {std::move(run.syndromes), kind};
}

/// All edges (sigma, e, sigma') with sf_step(sigma, e) = (sigma', zeta),
/// sigma ranging over the reachable states. Exhaustive over e in GF(2)^n.
inline std::vector<Edge> error_trellis_module(const SyndromeFormer& sf, const std::vector<SfState>& states,
                                              const BitVector& zeta) {
  if (zeta.size() != sf.r()) throw Error("syndrome symbol has wrong width");
  if (sf.n() > 16) throw Error("code length n too large for exhaustive module enumeration");
  std::vector<Edge> edges;
  for (const auto& sigma : states) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << sf.n()); ++v) {
      BitVector e = BitVector::from_uint(v, sf.n());
      auto s = sf.step(sigma, e);
      if (s.syndrome == zeta) edges.push_back({sigma.id(), std::move(e), s.next.id()});
    }
  }
  return edges;
}

inline std::vector<Edge> error_trellis_module(const PolyMatrix& h, const BitVector& zeta) {
  const SyndromeFormer sf(h);
  return error_trellis_module(sf, sf.reachable_states(), zeta);
}

/// An error-trellis together with the quantities it was built from.
struct ErrorTrellis {
  Trellis trellis;
  SfState sigma_fin;
  SyndromeSequence syndromes;
  Sequence received;  // time-reversed for a backward trellis
};

namespace detail {

inline ErrorTrellis assemble(const PolyMatrix& h, Sequence z, SyndromeKind kind) {
  const SyndromeFormer sf(h);
  detail::require_sections(sf, z.size());
  SfState fin = sf.run(sf.zero_state(), z).final_state;
  SyndromeSequence syn = tailbiting_syndromes(h, z, kind);
  const auto states = sf.reachable_states();
  std::vector<StateId> ids;
  for (const auto& s : states) ids.push_back(s.id());

  std::map<BitVector, std::vector<Edge>> modules;
  std::vector<std::vector<Edge>> sections;
  for (const auto& zeta : syn.symbols) {
    auto it = modules.find(zeta);
    if (it == modules.end()) it = modules.emplace(zeta, error_trellis_module(sf, states, zeta)).first;
    sections.push_back(it->second);
  }
  Trellis t(kind == SyndromeKind::forward ? TrellisKind::error : TrellisKind::backward_error, sf.state_bits(), sf.n(),
            std::vector<std::vector<StateId>>(z.size() + 1, ids), std::move(sections));
  return {std::move(t), std::move(fin), std::move(syn), std::move(z)};
}

}  // namespace detail

/// Concatenates the error-trellis modules for zeta_1 ... zeta_N. Its
/// tailbiting paths are exactly the e with z + e a tailbiting codeword.
inline ErrorTrellis build_tailbiting_error_trellis(const PolyMatrix& h, std::span<const BitVector> z) {
  return detail::assemble(h, Sequence(z.begin(), z.end()), SyndromeKind::forward);
}

/// Backward construction: the forward procedure applied to the reciprocal
/// parity-check matrix and the time-reversed received word.
inline ErrorTrellis build_backward_error_trellis(const PolyMatrix& h, std::span<const BitVector> z) {
  return detail::assemble(h.reciprocal(), reversed(z), SyndromeKind::backward);
}

/// Same, with a caller-supplied reciprocal parity-check matrix.
inline ErrorTrellis build_backward_error_trellis_with(const PolyMatrix& h_tilde, std::span<const BitVector> z) {
  return detail::assemble(h_tilde, reversed(z), SyndromeKind::backward);
}

/// eta_i = zeta_{M-i+1} for i <= M, zeta_{N+M-i+1} otherwise (1-based).
inline SyndromeSequence eta_from_zeta(const SyndromeSequence& zeta, std::size_t memory) {
  const std::size_t big_n = zeta.symbols.size();
  if (big_n < memory || big_n == 0) throw Error("eta_from_zeta needs N >= M and N >= 1");
  SyndromeSequence eta{{}, SyndromeKind::backward};
  for (std::size_t i = 1; i <= big_n; ++i) {
    const std::size_t src = i <= memory ? memory - i + 1 : big_n + memory - i + 1;
    eta.symbols.push_back(zeta.symbols[src - 1]);
  }
  return eta;
}

/// sigma_fin + beta*.
inline SfState error_anchor(const EncState& beta, const SfState& sigma_final, const PolyMatrix& g,
                            const PolyMatrix& h) {
  return sigma_final + dual_state_of(g, h, beta);
}

/// sigma~_fin + (backward state of beta)*, the dual taken with respect to the
/// reciprocal encoder pair. The reciprocal generator is taken row by row so
/// that it matches the register-reversal backward state.
inline SfState backward_error_anchor(const EncState& beta, const SfState& sigma_fin_tilde, const PolyMatrix& g,
                                     const PolyMatrix& h) {
  const EncState beta_tilde = backward_state(g, beta);
  return sigma_fin_tilde + dual_state_of(g.row_reciprocal(), h.reciprocal(), beta_tilde);
}

struct AnchorPair {
  EncState beta;
  SfState sigma;
};

/// Error-subtrellis anchor for every encoder state. Throws if two encoder
/// states land on the same anchor (H is then not a canonical dual of G).
inline std::vector<AnchorPair> anchor_map(const PolyMatrix& g, const PolyMatrix& h, const SfState& sigma_final,
                                          bool backward = false) {
  const FeedforwardEncoder enc(g);
  std::vector<AnchorPair> out;
  std::map<SfState, EncState> seen;
  for (const auto& beta : enc.all_states()) {
    SfState a = backward ? backward_error_anchor(beta, sigma_final, g, h) : error_anchor(beta, sigma_final, g, h);
    auto [it, fresh] = seen.emplace(a, beta);
    if (!fresh)
      throw Error("encoder states " + it->second.to_string() + " and " + beta.to_string() + " share anchor " +
                  a.to_string());
    out.push_back({beta, std::move(a)});
  }
  return out;
}

}  // namespace tbt
