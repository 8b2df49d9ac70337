#pragma once

// Hard-decision ML decoding of tailbiting codes on the error-trellis: one
// Viterbi pass per error subtrellis, best result over all anchors.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "tbtrellis/error_trellis.hpp"
#include "tbtrellis/gf2.hpp"
#include "tbtrellis/state_machines.hpp"
#include "tbtrellis/trellis.hpp"

namespace tbt {

struct WeightedPath {
  Sequence labels;
  std::size_t weight = 0;
};

/// Minimum-weight path with state(0) = state(N) = anchor. Among equal
/// weights the lexicographically smallest label sequence wins.
///
/// Runs the recursion from cut N back to cut 0 so that, at every cut, each
/// state knows its best suffix. Suffixes are compared by (weight, first
/// label, rank of the successor's suffix), where the rank orders the
/// successors' suffixes lexicographically.
inline std::optional<WeightedPath> try_min_weight_path(const Trellis& t, SubtrellisId sub) {
  detail::check_anchor(t, sub.anchor);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  struct Best {
    std::size_t weight;
    std::size_t rank;
    const Edge* edge;
  };
  const std::size_t big_n = t.n_sections();

  std::map<StateId, Best> next{{sub.anchor, {0, 0, nullptr}}};
  std::vector<std::map<StateId, Best>> table(big_n + 1);
  table[big_n] = next;
  for (std::size_t c = big_n; c-- > 0;) {
    std::map<StateId, Best> cur;
    for (StateId s : t.cuts()[c]) {
      Best best{kNone, 0, nullptr};
      for (const Edge& e : t.outgoing(c, s)) {
        auto it = next.find(e.to);
        if (it == next.end()) continue;
        const std::size_t w = e.label.weight() + it->second.weight;
        if (best.edge == nullptr ||
            std::tie(w, e.label, it->second.rank) < std::tie(best.weight, best.edge->label, next.at(best.edge->to).rank))
          best = {w, 0, &e};
      }
      if (best.edge != nullptr) cur.emplace(s, best);
    }
    // Lexicographic rank of each state's best suffix.
    std::vector<std::pair<std::tuple<const BitVector*, std::size_t>, StateId>> order;
    for (const auto& [s, b] : cur) order.push_back({{&b.edge->label, next.at(b.edge->to).rank}, s});
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      const auto& [la, ra] = a.first;
      const auto& [lb, rb] = b.first;
      return std::tie(*la, ra) < std::tie(*lb, rb);
    });
    std::size_t rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) {
        const auto& [la, ra] = order[i - 1].first;
        const auto& [lb, rb] = order[i].first;
        if (std::tie(*la, ra) != std::tie(*lb, rb)) ++rank;
      }
      cur.at(order[i].second).rank = rank;
    }
    table[c] = cur;
    next = std::move(cur);
  }

  auto start = table[0].find(sub.anchor);
  if (start == table[0].end()) return std::nullopt;
  WeightedPath out;
  out.weight = start->second.weight;
  StateId s = sub.anchor;
  for (std::size_t c = 0; c < big_n; ++c) {
    const Edge* e = table[c].at(s).edge;
    out.labels.push_back(e->label);
    s = e->to;
  }
  return out;
}

/// As try_min_weight_path, but an empty subtrellis is an error.
inline WeightedPath min_weight_path(const Trellis& t, SubtrellisId sub) {
  auto p = try_min_weight_path(t, sub);
  if (!p) throw Error("no path in subtrellis " + t.state_label(sub.anchor));
  return std::move(*p);
}

struct DecodeResult {
  Sequence codeword;
  Sequence error;
  std::size_t weight = 0;
  EncState anchor_beta;
  SfState anchor_sigma;
  bool tie = false;
};

/// Exact tailbiting ML decoding: builds the error-trellis once and searches
/// every error subtrellis sigma_fin + beta*. Ties between anchors are broken
/// toward the smaller error sequence, then the smaller anchor; `tie` reports
/// that more than one anchor reached the minimum weight.
inline DecodeResult decode_tailbiting(const PolyMatrix& g, const PolyMatrix& h, std::span<const BitVector> z) {
  if (!is_dual_pair(g, h)) throw Error("G(D) H(D)^T is not zero");
  const ErrorTrellis et = build_tailbiting_error_trellis(h, z);
  const auto anchors = anchor_map(g, h, et.sigma_fin);

  std::optional<DecodeResult> best;
  std::size_t at_minimum = 0;
  for (const auto& [beta, sigma] : anchors) {
    // Subtrellises can be empty when N is shorter than an encoder register.
    auto found = try_min_weight_path(et.trellis, {sigma.id()});
    if (!found) continue;
    WeightedPath& p = *found;
    if (best && p.weight > best->weight) continue;
    if (!best || p.weight < best->weight) {
      at_minimum = 0;
    }
    ++at_minimum;
    const bool better = !best || p.weight < best->weight ||
                        std::tie(p.labels, sigma) < std::tie(best->error, best->anchor_sigma);
    if (better) best = DecodeResult{{}, std::move(p.labels), p.weight, beta, sigma, false};
  }
  if (!best) throw Error("error-trellis has no tailbiting path");
  best->tie = at_minimum > 1;
  best->codeword = add(z, best->error);
  return *best;
}

}  // namespace tbt
