#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tbtrellis/gf2.hpp"
#include "tbtrellis/state_machines.hpp"

namespace tbt {

/// Dense state encoding: the state's bit tuple read as an integer, first bit
/// most significant. Encoder states are row-major, syndrome-former states in
/// block order.
using StateId = std::uint64_t;

enum class TrellisKind { code, error, backward_error };

inline const char* to_string(TrellisKind k) {
  switch (k) {
    case TrellisKind::code: return "code";
    case TrellisKind::error: return "error";
    case TrellisKind::backward_error: return "backward-error";
  }
  return "?";
}

struct Edge {
  StateId from = 0;
  BitVector label;
  StateId to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A subtrellis is identified by the state it starts and ends in.
struct SubtrellisId {
  StateId anchor = 0;
};

struct TrellisPath {
  Sequence labels;
  std::vector<StateId> states;  // N+1 entries
};

class Trellis {
 public:
  Trellis(TrellisKind kind, std::size_t state_width, std::size_t label_width,
          std::vector<std::vector<StateId>> cuts, std::vector<std::vector<Edge>> sections)
      : kind_(kind), state_width_(state_width), label_width_(label_width), cuts_(std::move(cuts)),
        sections_(std::move(sections)) {
    if (sections_.empty()) throw Error("trellis needs at least one section");
    if (cuts_.size() != sections_.size() + 1) throw Error("trellis needs N+1 cuts for N sections");
    if (state_width_ > 64) throw Error("state width exceeds 64 bits");
    for (auto& c : cuts_) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    for (std::size_t t = 0; t < sections_.size(); ++t) {
      auto& sec = sections_[t];
      std::sort(sec.begin(), sec.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
      });
      for (const auto& e : sec) {
        if (!has_state(t, e.from) || !has_state(t + 1, e.to))
          throw Error("edge endpoint missing from its cut in section " + std::to_string(t));
        if (e.label.size() != label_width_) throw Error("edge label has wrong width");
      }
    }
  }

  TrellisKind kind() const noexcept { return kind_; }
  std::size_t state_width() const noexcept { return state_width_; }
  std::size_t label_width() const noexcept { return label_width_; }
  std::size_t n_sections() const noexcept { return sections_.size(); }
  const std::vector<std::vector<StateId>>& cuts() const noexcept { return cuts_; }
  const std::vector<std::vector<Edge>>& sections() const noexcept { return sections_; }

  bool has_state(std::size_t cut, StateId s) const {
    const auto& c = cuts_.at(cut);
    return std::binary_search(c.begin(), c.end(), s);
  }

  /// Outgoing edges of `s` in section t, ordered by (label, to).
  std::span<const Edge> outgoing(std::size_t t, StateId s) const {
    const auto& sec = sections_.at(t);
    auto lo = std::lower_bound(sec.begin(), sec.end(), s, [](const Edge& e, StateId v) { return e.from < v; });
    auto hi = std::upper_bound(lo, sec.end(), s, [](StateId v, const Edge& e) { return v < e.from; });
    return {lo, hi};
  }

  /// States present at both cut 0 and cut N.
  std::vector<StateId> anchors() const {
    std::vector<StateId> out;
    std::set_intersection(cuts_.front().begin(), cuts_.front().end(), cuts_.back().begin(), cuts_.back().end(),
                          std::back_inserter(out));
    return out;
  }

  std::string state_label(StateId s) const { return BitVector::from_uint(s, state_width_).to_tuple(); }

 private:
  TrellisKind kind_;
  std::size_t state_width_;
  std::size_t label_width_;
  std::vector<std::vector<StateId>> cuts_;
  std::vector<std::vector<Edge>> sections_;
};

inline Trellis build_tailbiting_code_trellis(const PolyMatrix& g, std::size_t big_n) {
  if (big_n == 0) throw Error("number of sections must be positive");
  const FeedforwardEncoder enc(g);
  const auto states = enc.all_states();
  std::vector<StateId> ids;
  std::vector<Edge> section;
  for (const auto& beta : states) {
    ids.push_back(beta.id());
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << enc.k()); ++v) {
      auto s = enc.step(beta, BitVector::from_uint(v, enc.k()));
      section.push_back({beta.id(), std::move(s.output), s.next.id()});
    }
  }
  return Trellis(TrellisKind::code, enc.state_bits(), enc.n(), std::vector<std::vector<StateId>>(big_n + 1, ids),
                 std::vector<std::vector<Edge>>(big_n, section));
}

namespace detail {

/// For each cut t, the states from which the anchor at cut N is reachable.
inline std::vector<std::set<StateId>> coreachable(const Trellis& t, StateId anchor) {
  const std::size_t big_n = t.n_sections();
  std::vector<std::set<StateId>> ok(big_n + 1);
  if (t.has_state(big_n, anchor)) ok[big_n].insert(anchor);
  for (std::size_t c = big_n; c-- > 0;)
    for (const auto& e : t.sections()[c])
      if (ok[c + 1].count(e.to)) ok[c].insert(e.from);
  return ok;
}

inline std::vector<std::set<StateId>> reachable(const Trellis& t, StateId anchor) {
  const std::size_t big_n = t.n_sections();
  std::vector<std::set<StateId>> ok(big_n + 1);
  if (t.has_state(0, anchor)) ok[0].insert(anchor);
  for (std::size_t c = 0; c < big_n; ++c)
    for (const auto& e : t.sections()[c])
      if (ok[c].count(e.from)) ok[c + 1].insert(e.to);
  return ok;
}

inline void check_anchor(const Trellis& t, StateId anchor) {
  if (!t.has_state(0, anchor) || !t.has_state(t.n_sections(), anchor))
    throw Error("anchor " + t.state_label(anchor) + " is not present at cuts 0 and N");
}

}  // namespace detail

/// Per section, whether each edge lies on some path of the subtrellis.
inline std::vector<std::vector<bool>> subtrellis_edges(const Trellis& t, SubtrellisId sub) {
  const auto fwd = detail::reachable(t, sub.anchor);
  const auto bwd = detail::coreachable(t, sub.anchor);
  std::vector<std::vector<bool>> out;
  for (std::size_t c = 0; c < t.n_sections(); ++c) {
    std::vector<bool> marks;
    for (const auto& e : t.sections()[c]) marks.push_back(fwd[c].count(e.from) && bwd[c + 1].count(e.to));
    out.push_back(std::move(marks));
  }
  return out;
}

/// Number of paths with state(0) = state(N) = anchor, saturating at `cap`.
inline std::uint64_t count_paths(const Trellis& t, SubtrellisId sub,
                                 std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
  detail::check_anchor(t, sub.anchor);
  std::map<StateId, std::uint64_t> counts{{sub.anchor, 1}};
  for (const auto& sec : t.sections()) {
    std::map<StateId, std::uint64_t> next;
    for (const auto& e : sec) {
      auto it = counts.find(e.from);
      if (it == counts.end()) continue;
      auto& slot = next[e.to];
      slot = (cap - slot < it->second) ? cap : slot + it->second;
    }
    counts = std::move(next);
  }
  auto it = counts.find(sub.anchor);
  return it == counts.end() ? 0 : it->second;
}

inline constexpr std::uint64_t kDefaultPathBound = std::uint64_t{1} << 20;

/// All paths of the subtrellis, in lexicographic order of the label sequence.
inline std::vector<TrellisPath> enumerate_paths(const Trellis& t, SubtrellisId sub,
                                                std::uint64_t bound = kDefaultPathBound) {
  const std::uint64_t total = count_paths(t, sub, bound + 1);
  if (total > bound) throw Error("subtrellis has more than " + std::to_string(bound) + " paths");
  const auto ok = detail::coreachable(t, sub.anchor);
  const std::size_t big_n = t.n_sections();

  std::vector<TrellisPath> out;
  out.reserve(total);
  TrellisPath cur;
  cur.states.push_back(sub.anchor);
  // Iterative DFS over (cut, next outgoing edge index).
  std::vector<std::size_t> cursor{0};
  while (!cursor.empty()) {
    const std::size_t c = cursor.size() - 1;
    if (c == big_n) {
      out.push_back(cur);
      cursor.pop_back();
      cur.states.pop_back();
      if (!cur.labels.empty()) cur.labels.pop_back();
      continue;
    }
    auto edges = t.outgoing(c, cur.states.back());
    std::size_t& i = cursor.back();
    while (i < edges.size() && !ok[c + 1].count(edges[i].to)) ++i;
    if (i == edges.size()) {
      cursor.pop_back();
      cur.states.pop_back();
      if (!cur.labels.empty()) cur.labels.pop_back();
      continue;
    }
    const Edge& e = edges[i++];
    cur.labels.push_back(e.label);
    cur.states.push_back(e.to);
    cursor.push_back(0);
  }
  std::stable_sort(out.begin(), out.end(), [](const TrellisPath& a, const TrellisPath& b) { return a.labels < b.labels; });
  return out;
}

}  // namespace tbt
