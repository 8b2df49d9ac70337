#pragma once

// Adjoint-obvious (observer form) syndrome former for Hᵀ(D) and the
// feedforward controller-form encoder for G(D).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tbtrellis/gf2.hpp"

namespace tbt {

// ---------------------------------------------------------------------------
// Syndrome-former state
// ---------------------------------------------------------------------------

/// sigma = (sigma^(1), ..., sigma^(M)), each block r bits. Block 1 is the
/// memory row nearest the syndrome outputs.
class SfState {
 public:
  SfState() = default;
  SfState(std::size_t memory, std::size_t r) : memory_(memory), r_(r), bits_(memory * r) {}
  SfState(std::size_t memory, std::size_t r, BitVector bits) : memory_(memory), r_(r), bits_(std::move(bits)) {
    if (bits_.size() != memory * r) throw Error("SfState: expected " + std::to_string(memory * r) + " bits");
  }

  std::size_t memory() const noexcept { return memory_; }
  std::size_t r() const noexcept { return r_; }
  const BitVector& bits() const noexcept { return bits_; }
  std::uint64_t id() const { return bits_.to_uint(); }

  /// Block p in 1..M.
  BitVector block(std::size_t p) const {
    if (p < 1 || p > memory_) throw Error("SfState: block index out of range");
    return bits_.slice((p - 1) * r_, r_);
  }

  std::string to_string() const { return bits_.to_tuple(); }

  SfState& operator+=(const SfState& rhs) {
    check_same_shape(rhs);
    bits_ ^= rhs.bits_;
    return *this;
  }
  friend SfState operator+(SfState a, const SfState& b) { return a += b; }
  friend bool operator==(const SfState&, const SfState&) = default;
  friend auto operator<=>(const SfState& a, const SfState& b) { return a.bits_ <=> b.bits_; }

 private:
  void check_same_shape(const SfState& o) const {
    if (o.memory_ != memory_ || o.r_ != r_) throw Error("SfState: shape mismatch");
  }

  std::size_t memory_ = 0;
  std::size_t r_ = 0;
  BitVector bits_;
};

/// xi_k = (zeta_k, sigma_k).
struct ExtendedState {
  BitVector zeta;
  SfState sigma;
};

struct SfStep {
  SfState next;
  BitVector syndrome;
};

struct SfRun {
  SfState final_state;
  Sequence syndromes;
};

class SyndromeFormer {
 public:
  explicit SyndromeFormer(PolyMatrix h) : h_(std::move(h)) {
    if (h_.rows() == 0 || h_.cols() == 0) throw Error("parity-check matrix is empty");
    for (std::size_t j = 0; j <= memory(); ++j) ht_.push_back(h_.coefficient(j).transpose());
  }

  const PolyMatrix& parity_check() const noexcept { return h_; }
  std::size_t n() const noexcept { return h_.cols(); }
  std::size_t r() const noexcept { return h_.rows(); }
  std::size_t memory() const noexcept { return h_.degree(); }
  std::size_t state_bits() const noexcept { return memory() * r(); }

  /// Number of memory elements actually present: sum of the row degrees of H.
  std::size_t constraint_length() const {
    std::size_t total = 0;
    for (std::size_t q = 0; q < r(); ++q) total += static_cast<std::size_t>(std::max(h_.row_degree(q), 0));
    return total;
  }

  SfState zero_state() const { return SfState(memory(), r()); }
  SfState state_from_bits(BitVector bits) const { return SfState(memory(), r(), std::move(bits)); }
  SfState state_from_id(std::uint64_t id) const { return state_from_bits(BitVector::from_uint(id, state_bits())); }

  /// sigma_k = (sigma^(2), ..., sigma^(M), 0) + e (H_1ᵀ, ..., H_Mᵀ)
  /// zeta_k  = sigma^(1) + e H_0ᵀ
  SfStep step(const SfState& sigma, const BitVector& e) const {
    check_state(sigma);
    if (e.size() != n()) throw Error("syndrome former: input symbol has " + std::to_string(e.size()) +
                                     " bits, expected " + std::to_string(n()));
    const std::size_t m = memory();
    BitVector zeta = e * ht_[0];
    if (m > 0) zeta ^= sigma.block(1);
    BitVector next;
    for (std::size_t p = 1; p <= m; ++p) {
      BitVector blk = e * ht_[p];
      if (p < m) blk ^= sigma.block(p + 1);
      next.append(blk);
    }
    return {SfState(m, r(), std::move(next)), std::move(zeta)};
  }

  SfRun run(const SfState& sigma0, std::span<const BitVector> seq) const {
    SfRun out{sigma0, {}};
    out.syndromes.reserve(seq.size());
    for (const auto& e : seq) {
      auto s = step(out.final_state, e);
      out.final_state = std::move(s.next);
      out.syndromes.push_back(std::move(s.syndrome));
    }
    return out;
  }

  /// H*: the (M+1)r x (M+1)n block upper-triangular matrix mapping
  /// (e_{k-M}, ..., e_k)ᵀ to xi_k. Block (p, c) = H_{M-c+p} for c >= p.
  BitMatrix extended_matrix() const {
    const std::size_t m = memory();
    BitMatrix out((m + 1) * r(), (m + 1) * n());
    for (std::size_t p = 0; p <= m; ++p)
      for (std::size_t c = p; c <= m; ++c) out.add_block(p * r(), c * n(), h_.coefficient(m - c + p));
    return out;
  }

  /// H**ᵀ: the Mn x Mr matrix with sigma_k = (e_{k-M+1}, ..., e_k) H**ᵀ.
  /// Block (a, p) = H_{M-a+p}ᵀ for a >= p.
  BitMatrix state_matrix() const {
    const std::size_t m = memory();
    BitMatrix out(m * n(), m * r());
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t p = 0; p <= a; ++p) out.add_block(a * n(), p * r(), ht_[m - a + p]);
    return out;
  }

  ExtendedState extended_state(std::span<const BitVector> window) const {
    if (window.size() != memory() + 1)
      throw Error("extended state needs a window of M+1 = " + std::to_string(memory() + 1) + " symbols");
    const BitVector xi = extended_matrix().apply(checked_flatten(window));
    return {xi.slice(0, r()), state_from_bits(xi.slice(r(), state_bits()))};
  }

  /// beta* = (y_{k-M+1}, ..., y_k) H**ᵀ for a window of encoder outputs.
  SfState dual_state(std::span<const BitVector> window) const {
    if (window.size() != memory())
      throw Error("dual state needs a window of M = " + std::to_string(memory()) + " symbols");
    if (memory() == 0) return zero_state();
    return state_from_bits(checked_flatten(window) * state_matrix());
  }

  /// States reachable from zero; a linear subspace of GF(2)^{Mr}, sorted.
  std::vector<SfState> reachable_states() const {
    std::set<SfState> seen{zero_state()};
    std::deque<SfState> queue{zero_state()};
    const std::uint64_t symbols = std::uint64_t{1} << n();
    while (!queue.empty()) {
      SfState s = queue.front();
      queue.pop_front();
      for (std::uint64_t v = 0; v < symbols; ++v) {
        auto next = step(s, BitVector::from_uint(v, n())).next;
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
    return {seen.begin(), seen.end()};
  }

 private:
  void check_state(const SfState& s) const {
    if (s.memory() != memory() || s.r() != r() || s.bits().size() != state_bits())
      throw Error("syndrome-former state has wrong shape");
  }
  BitVector checked_flatten(std::span<const BitVector> window) const {
    for (const auto& e : window)
      if (e.size() != n()) throw Error("window symbol has wrong width");
    return flatten(window);
  }

  PolyMatrix h_;
  std::vector<BitMatrix> ht_;  // H_jᵀ, j = 0..M
};

// ---------------------------------------------------------------------------
// Encoder state and feedforward encoder
// ---------------------------------------------------------------------------

/// One shift register per input stream; row j holds the last nu_j inputs of
/// stream j, most recent last. For G_1, beta_k = (u_{k-1}, u_k).
class EncState {
 public:
  EncState() = default;
  explicit EncState(std::vector<BitVector> regs) : regs_(std::move(regs)) {}

  const std::vector<BitVector>& registers() const noexcept { return regs_; }
  std::size_t inputs() const noexcept { return regs_.size(); }

  /// Row-major concatenation of the registers.
  BitVector bits() const { return flatten(regs_); }
  std::uint64_t id() const { return bits().to_uint(); }
  std::string to_string() const { return bits().to_tuple(); }

  friend bool operator==(const EncState&, const EncState&) = default;
  friend auto operator<=>(const EncState& a, const EncState& b) { return a.bits() <=> b.bits(); }

 private:
  std::vector<BitVector> regs_;
};

struct EncStep {
  EncState next;
  BitVector output;
};

class FeedforwardEncoder {
 public:
  explicit FeedforwardEncoder(PolyMatrix g) : g_(std::move(g)) {
    if (g_.rows() == 0 || g_.cols() == 0) throw Error("generator matrix is empty");
    for (std::size_t j = 0; j < k(); ++j) lengths_.push_back(static_cast<std::size_t>(std::max(g_.row_degree(j), 0)));
  }

  const PolyMatrix& generator() const noexcept { return g_; }
  std::size_t k() const noexcept { return g_.rows(); }
  std::size_t n() const noexcept { return g_.cols(); }
  std::size_t memory() const noexcept { return g_.degree(); }
  const std::vector<std::size_t>& register_lengths() const noexcept { return lengths_; }
  std::size_t state_bits() const {
    std::size_t s = 0;
    for (auto l : lengths_) s += l;
    return s;
  }

  EncState zero_state() const {
    std::vector<BitVector> regs;
    for (auto l : lengths_) regs.emplace_back(l);
    return EncState(std::move(regs));
  }

  EncState state_from_bits(const BitVector& bits) const {
    if (bits.size() != state_bits()) throw Error("encoder state: expected " + std::to_string(state_bits()) + " bits");
    std::vector<BitVector> regs;
    std::size_t pos = 0;
    for (auto l : lengths_) {
      regs.push_back(bits.slice(pos, l));
      pos += l;
    }
    return EncState(std::move(regs));
  }
  EncState state_from_id(std::uint64_t id) const { return state_from_bits(BitVector::from_uint(id, state_bits())); }

  /// Every register content is reachable in the controller form.
  std::vector<EncState> all_states() const {
    if (state_bits() > 24) throw Error("encoder has too many states to enumerate");
    std::vector<EncState> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << state_bits()); ++v) out.push_back(state_from_id(v));
    return out;
  }

  /// y = sum_i u_{k-i} G_i, then shift u into the registers.
  EncStep step(const EncState& beta, const BitVector& u) const {
    check_state(beta);
    if (u.size() != k()) throw Error("encoder input has " + std::to_string(u.size()) + " bits, expected " +
                                     std::to_string(k()));
    BitVector y(n());
    std::vector<BitVector> next;
    for (std::size_t j = 0; j < k(); ++j) {
      const BitVector& reg = beta.registers()[j];
      const std::size_t len = lengths_[j];
      if (u[j]) y ^= g_.coefficient(0).row(j);
      for (std::size_t i = 1; i <= len; ++i)
        if (reg[len - i]) y ^= g_.coefficient(i).row(j);
      BitVector shifted;
      for (std::size_t i = 1; i < len; ++i) shifted.push_back(reg[i]);
      if (len > 0) shifted.push_back(u[j]);
      next.push_back(std::move(shifted));
    }
    return {EncState(std::move(next)), std::move(y)};
  }

  /// Tailbiting state beta_0 = beta_N for an information sequence: the last
  /// nu_j inputs of each stream, taken cyclically.
  EncState tailbiting_state(std::span<const BitVector> info) const {
    const std::size_t big_n = info.size();
    if (big_n == 0) throw Error("empty information sequence");
    std::vector<BitVector> regs;
    for (std::size_t j = 0; j < k(); ++j) {
      BitVector reg;
      const std::size_t len = lengths_[j];
      for (std::size_t i = 0; i < len; ++i) {
        // position of u_{N - len + 1 + i} (1-indexed), wrapped
        const std::size_t t = ((big_n * (len + 1)) - len + i) % big_n;
        reg.push_back(info[t][j]);
      }
      regs.push_back(std::move(reg));
    }
    return EncState(std::move(regs));
  }

 private:
  void check_state(const EncState& s) const {
    if (s.inputs() != k()) throw Error("encoder state has wrong number of registers");
    for (std::size_t j = 0; j < k(); ++j)
      if (s.registers()[j].size() != lengths_[j]) throw Error("encoder register has wrong length");
  }

  PolyMatrix g_;
  std::vector<std::size_t> lengths_;
};

/// Tailbiting encoding as a cyclic convolution, y_t = sum_i u_{(t-i) mod N} G_i.
/// Does not go through the shift-register realization.
inline Sequence encode_tailbiting(const PolyMatrix& g, std::span<const BitVector> info) {
  const std::size_t big_n = info.size();
  Sequence y(big_n, BitVector(g.cols()));
  for (std::size_t t = 0; t < big_n; ++t) {
    for (std::size_t i = 0; i <= g.degree(); ++i) {
      const BitVector& u = info[(t + big_n * (i / big_n + 1) - i) % big_n];
      if (u.size() != g.rows()) throw Error("information symbol has wrong width");
      y[t] ^= u * g.coefficient(i);
    }
  }
  return y;
}

struct TailbitingCodeword {
  Sequence info;
  Sequence codeword;
  EncState anchor;
};

/// All 2^{Nk} tailbiting codewords, in order of the information word.
inline std::vector<TailbitingCodeword> all_tailbiting_codewords(const PolyMatrix& g, std::size_t big_n) {
  const FeedforwardEncoder enc(g);
  const std::size_t info_bits = big_n * enc.k();
  if (big_n == 0) throw Error("N must be positive");
  if (info_bits > 20) throw Error("N*k exceeds the exhaustive bound of 20");
  std::vector<TailbitingCodeword> out;
  out.reserve(std::size_t{1} << info_bits);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << info_bits); ++v) {
    Sequence info = split_symbols(BitVector::from_uint(v, info_bits), enc.k());
    Sequence y = encode_tailbiting(g, info);
    EncState anchor = enc.tailbiting_state(info);
    out.push_back({std::move(info), std::move(y), std::move(anchor)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dual and backward states
// ---------------------------------------------------------------------------

/// beta* for encoder state beta: drives the encoder from the zero state with
/// M frozen inputs followed by the register contents of beta, and feeds the
/// last M outputs through H**ᵀ. For a dual pair the frozen value does not
/// matter; `frozen_one` exists so that can be checked.
inline SfState dual_state_of(const PolyMatrix& g, const PolyMatrix& h, const EncState& beta, bool frozen_one = false) {
  if (g.cols() != h.cols()) throw Error("G and H have different numbers of columns");
  const FeedforwardEncoder enc(g);
  const SyndromeFormer sf(h);
  if (beta.inputs() != enc.k()) throw Error("encoder state has wrong number of registers");
  const std::size_t m = sf.memory();
  std::size_t longest = 0;
  for (auto l : enc.register_lengths()) longest = std::max(longest, l);
  const std::size_t steps = m + longest;

  EncState state = enc.zero_state();
  Sequence outputs;
  for (std::size_t t = 0; t < steps; ++t) {
    BitVector u(enc.k());
    for (std::size_t j = 0; j < enc.k(); ++j) {
      const std::size_t len = enc.register_lengths()[j];
      const std::size_t start = steps - len;
      u.set(j, t >= start ? beta.registers()[j].at(t - start) : frozen_one);
    }
    auto s = enc.step(state, u);
    state = std::move(s.next);
    outputs.push_back(std::move(s.output));
  }
  return sf.dual_state(std::span<const BitVector>(outputs).last(m));
}

/// State of the reciprocal encoder at the same cut when the path is read
/// backwards: each register reversed.
inline EncState backward_state(const PolyMatrix& g, const EncState& beta) {
  const FeedforwardEncoder enc(g);
  if (beta.inputs() != enc.k()) throw Error("encoder state has wrong number of registers");
  std::vector<BitVector> regs;
  for (std::size_t j = 0; j < beta.inputs(); ++j) {
    const BitVector& reg = beta.registers()[j];
    if (reg.size() != enc.register_lengths()[j]) throw Error("encoder register has wrong length");
    BitVector rev(reg.size());
    for (std::size_t i = 0; i < reg.size(); ++i) rev.set(i, reg[reg.size() - 1 - i]);
    regs.push_back(std::move(rev));
  }
  return EncState(std::move(regs));
}

// Free-function forms.

inline SfStep sf_step(const PolyMatrix& h, const SfState& sigma, const BitVector& e) {
  return SyndromeFormer(h).step(sigma, e);
}

inline SfRun sf_run(const PolyMatrix& h, const SfState& sigma0, std::span<const BitVector> seq) {
  return SyndromeFormer(h).run(sigma0, seq);
}

inline ExtendedState extended_state(const PolyMatrix& h, std::span<const BitVector> window) {
  return SyndromeFormer(h).extended_state(window);
}

inline SfState dual_state(const PolyMatrix& h, std::span<const BitVector> window) {
  return SyndromeFormer(h).dual_state(window);
}

inline EncStep encoder_step(const PolyMatrix& g, const EncState& beta, const BitVector& u) {
  return FeedforwardEncoder(g).step(beta, u);
}

}  // namespace tbt
