#pragma once

// Self-verification suites: each checks one structural property of the
// constructions against brute force at desk scale.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tbtrellis/decoder.hpp"
#include "tbtrellis/error_trellis.hpp"
#include "tbtrellis/gf2.hpp"
#include "tbtrellis/scalar_parity.hpp"
#include "tbtrellis/state_machines.hpp"
#include "tbtrellis/trellis.hpp"

namespace tbt {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;  // first failure, if any
};

/// Uniform random bits straight from the engine output, so sequences are
/// reproducible across standard libraries.
inline BitVector random_bits(std::mt19937_64& rng, std::size_t count) {
  BitVector v(count);
  std::uint64_t pool = 0;
  std::size_t left = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (left == 0) {
      pool = rng();
      left = 64;
    }
    v.set(i, pool & 1U);
    pool >>= 1;
    --left;
  }
  return v;
}

inline Sequence random_sequence(std::mt19937_64& rng, std::size_t length, std::size_t width) {
  return split_symbols(random_bits(rng, length * width), width);
}

namespace detail {

class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string name) { result_.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }
  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

inline std::set<Sequence> as_set(const std::vector<TrellisPath>& paths) {
  std::set<Sequence> out;
  for (const auto& p : paths) out.insert(p.labels);
  return out;
}

}  // namespace detail

/// Transitions of the syndrome former superpose.
inline SuiteResult check_superposition(const PolyMatrix& h, std::mt19937_64& rng, std::size_t samples) {
  detail::SuiteRecorder rec("superposition");
  const SyndromeFormer sf(h);
  for (std::size_t i = 0; i < samples; ++i) {
    const SfState s1 = sf.state_from_bits(random_bits(rng, sf.state_bits()));
    const SfState s2 = sf.state_from_bits(random_bits(rng, sf.state_bits()));
    const BitVector e1 = random_bits(rng, sf.n());
    const BitVector e2 = random_bits(rng, sf.n());
    const auto a = sf.step(s1, e1);
    const auto b = sf.step(s2, e2);
    const auto sum = sf.step(s1 + s2, e1 + e2);
    rec.check(sum.next == a.next + b.next && sum.syndrome == a.syndrome + b.syndrome,
              [&] { return "fails for sigma=" + s1.to_string() + " sigma'=" + s2.to_string(); });
  }
  return rec.done();
}

/// Every tailbiting codeword, fed from its anchor's dual state, returns to
/// that dual state with an all-zero syndrome.
inline SuiteResult check_zero_syndrome_traversal(const PolyMatrix& g, const PolyMatrix& h,
                                                 const std::vector<TailbitingCodeword>& codewords) {
  detail::SuiteRecorder rec("zero-syndrome traversal");
  const SyndromeFormer sf(h);
  std::map<EncState, SfState> duals;
  for (const auto& cw : codewords) {
    auto it = duals.find(cw.anchor);
    if (it == duals.end()) it = duals.emplace(cw.anchor, dual_state_of(g, h, cw.anchor)).first;
    const auto run = sf.run(it->second, cw.codeword);
    rec.check(run.final_state == it->second && hamming_weight(run.syndromes) == 0,
              [&] { return "codeword " + render_sequence(cw.codeword); });
  }
  return rec.done();
}

/// States from step M on, and syndromes from step M+1 on, do not depend on
/// the initial state.
inline SuiteResult check_last_m_determination(const PolyMatrix& h, std::size_t length, std::mt19937_64& rng,
                                              std::size_t samples) {
  detail::SuiteRecorder rec("last-M determination");
  const SyndromeFormer sf(h);
  const std::size_t m = sf.memory();
  length = std::max(length, m);
  for (std::size_t i = 0; i < samples; ++i) {
    const Sequence seq = random_sequence(rng, length, sf.n());
    SfState a = sf.state_from_bits(random_bits(rng, sf.state_bits()));
    SfState b = sf.state_from_bits(random_bits(rng, sf.state_bits()));
    bool ok = true;
    for (std::size_t k = 1; k <= length; ++k) {
      auto sa = sf.step(a, seq[k - 1]);
      auto sb = sf.step(b, seq[k - 1]);
      if (k >= m + 1 && sa.syndrome != sb.syndrome) ok = false;
      a = std::move(sa.next);
      b = std::move(sb.next);
      if (k >= m && a != b) ok = false;
    }
    rec.check(ok, [&] { return "sequence " + render_sequence(seq); });
  }
  return rec.done();
}

/// beta* does not depend on the frozen inputs used to reach beta.
inline SuiteResult check_dual_state_well_defined(const PolyMatrix& g, const PolyMatrix& h) {
  detail::SuiteRecorder rec("dual-state well-definedness");
  for (const auto& beta : FeedforwardEncoder(g).all_states())
    rec.check(dual_state_of(g, h, beta, false) == dual_state_of(g, h, beta, true),
              [&] { return "state " + beta.to_string(); });
  return rec.done();
}

/// Started in sigma_fin, the syndrome former ends in sigma_fin.
inline SuiteResult check_sigma_fin_fixed_point(const PolyMatrix& h, std::size_t big_n, std::mt19937_64& rng,
                                               std::size_t samples) {
  detail::SuiteRecorder rec("sigma_fin fixed point");
  const SyndromeFormer sf(h);
  for (std::size_t i = 0; i < samples; ++i) {
    const Sequence z = random_sequence(rng, big_n, sf.n());
    const SfState fin = sigma_fin(h, z);
    rec.check(sf.run(fin, z).final_state == fin, [&] { return "z=" + render_sequence(z); });
  }
  return rec.done();
}

/// Both anchor maps beta -> sigma_fin + beta* are injective.
inline SuiteResult check_anchor_bijection(const PolyMatrix& g, const PolyMatrix& h) {
  detail::SuiteRecorder rec("anchor bijection");
  for (bool backward : {false, true}) {
    const SyndromeFormer sf(backward ? h.reciprocal() : h);
    try {
      const auto pairs = anchor_map(g, h, sf.zero_state(), backward);
      rec.check(pairs.size() == sf.reachable_states().size(),
                [&] { return std::string(backward ? "backward" : "forward") + " anchors do not cover the states"; });
    } catch (const Error& e) {
      rec.check(false, [&] { return std::string(e.what()); });
    }
  }
  return rec.done();
}

/// { z + e : e in error subtrellis sigma_fin + beta* } equals the code
/// subtrellis of beta, for each anchor beta.
inline SuiteResult check_subtrellis_correspondence(const PolyMatrix& g, const PolyMatrix& h, std::size_t big_n,
                                                   std::span<const Sequence> received) {
  detail::SuiteRecorder rec("code/error subtrellis set equality");
  const Trellis code = build_tailbiting_code_trellis(g, big_n);
  std::map<StateId, std::set<Sequence>> code_sets;
  for (StateId b : code.anchors()) code_sets[b] = detail::as_set(enumerate_paths(code, {b}));
  for (const auto& z : received) {
    const ErrorTrellis et = build_tailbiting_error_trellis(h, z);
    for (const auto& [beta, sigma] : anchor_map(g, h, et.sigma_fin)) {
      std::set<Sequence> shifted;
      for (const auto& p : enumerate_paths(et.trellis, {sigma.id()})) shifted.insert(add(z, p.labels));
      rec.check(shifted == code_sets.at(beta.id()),
                [&] { return "z=" + render_sequence(z) + " anchor " + beta.to_string(); });
    }
  }
  return rec.done();
}

/// e is a path of forward error subtrellis error_anchor(beta) iff reverse(e)
/// is a path of backward error subtrellis backward_error_anchor(beta).
inline SuiteResult check_backward_correspondence(const PolyMatrix& g, const PolyMatrix& h,
                                                 std::span<const Sequence> received) {
  detail::SuiteRecorder rec("backward/forward path correspondence");
  for (const auto& z : received) {
    const ErrorTrellis fwd = build_tailbiting_error_trellis(h, z);
    const ErrorTrellis bwd = build_backward_error_trellis(h, z);
    for (const auto& beta : FeedforwardEncoder(g).all_states()) {
      const SfState fa = error_anchor(beta, fwd.sigma_fin, g, h);
      const SfState ba = backward_error_anchor(beta, bwd.sigma_fin, g, h);
      std::set<Sequence> forward_rev;
      for (const auto& p : enumerate_paths(fwd.trellis, {fa.id()})) forward_rev.insert(reversed(p.labels));
      rec.check(forward_rev == detail::as_set(enumerate_paths(bwd.trellis, {ba.id()})),
                [&] { return "z=" + render_sequence(z) + " anchor " + beta.to_string(); });
    }
  }
  return rec.done();
}

/// The permuted forward syndromes equal the syndromes of the reversed word
/// under the reciprocal parity-check matrix.
inline SuiteResult check_eta_zeta(const PolyMatrix& h, std::size_t big_n, std::mt19937_64& rng, std::size_t samples) {
  detail::SuiteRecorder rec("eta/zeta correspondence");
  const PolyMatrix ht = h.reciprocal();
  for (std::size_t i = 0; i < samples; ++i) {
    const Sequence z = random_sequence(rng, big_n, h.cols());
    const auto zeta = tailbiting_syndromes(h, z);
    const auto eta = tailbiting_syndromes(ht, reversed(z), SyndromeKind::backward);
    rec.check(eta_from_zeta(zeta, h.degree()) == eta, [&] { return "z=" + render_sequence(z); });
  }
  return rec.done();
}

/// The null space of the tailbiting H_scalar is exactly the set of
/// cyclically encoded words, and membership agrees with the syndrome run.
inline SuiteResult check_hscalar_membership(const PolyMatrix& h, std::size_t big_n,
                                            const std::vector<TailbitingCodeword>& codewords, std::mt19937_64& rng,
                                            std::size_t samples) {
  detail::SuiteRecorder rec("H_scalar membership");
  const ScalarParity p = hscalar_tailbiting(h, big_n);
  std::set<BitVector> code;
  for (const auto& cw : codewords) {
    const BitVector y = flatten(cw.codeword);
    code.insert(y);
    rec.check(is_tailbiting_codeword(p, y), [&] { return "codeword " + render_sequence(cw.codeword); });
  }
  const std::size_t nullity = p.matrix.cols() - p.matrix.rank();
  rec.check(nullity < 64 && code.size() == (std::size_t{1} << nullity),
            [&] { return "code has " + std::to_string(code.size()) + " words, null space dimension " +
                         std::to_string(nullity); });
  for (std::size_t i = 0; i < samples; ++i) {
    const Sequence z = random_sequence(rng, big_n, h.cols());
    const BitVector y = flatten(z);
    const bool member = is_tailbiting_codeword(p, y);
    const bool zero_syndrome = hamming_weight(tailbiting_syndromes(h, z).symbols) == 0;
    rec.check(member == zero_syndrome && member == (code.count(y) > 0), [&] { return "word " + y.to_string(); });
  }
  return rec.done();
}

/// Decoder weight equals the brute-force minimum distance to the code.
inline SuiteResult check_decoder_oracle(const PolyMatrix& g, const PolyMatrix& h, std::size_t big_n,
                                        const std::vector<TailbitingCodeword>& codewords, std::mt19937_64& rng,
                                        std::size_t samples) {
  detail::SuiteRecorder rec("decoder vs exhaustive search");
  const ScalarParity p = hscalar_tailbiting(h, big_n);
  for (std::size_t i = 0; i < samples; ++i) {
    const Sequence z = random_sequence(rng, big_n, h.cols());
    std::size_t best = SIZE_MAX;
    std::size_t count = 0;
    const Sequence* arg = nullptr;
    for (const auto& cw : codewords) {
      std::size_t d = hamming_weight(add(z, cw.codeword));
      if (d < best) {
        best = d;
        count = 1;
        arg = &cw.codeword;
      } else if (d == best) {
        ++count;
      }
    }
    const DecodeResult r = decode_tailbiting(g, h, z);
    const bool ok = r.weight == best && is_tailbiting_codeword(p, r.codeword) &&
                    (count > 1 || r.codeword == *arg) && add(z, r.error) == r.codeword;
    rec.check(ok, [&] { return "z=" + render_sequence(z); });
  }
  return rec.done();
}

struct VerifyOptions {
  std::size_t sections = 5;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::size_t trellis_words = 8;  // received words for the exhaustive subtrellis suites
};

/// Runs every suite. Requires N*k <= 20 and N >= max(1, M).
inline std::vector<SuiteResult> run_verification(const PolyMatrix& g, const PolyMatrix& h, const VerifyOptions& opt) {
  const std::size_t big_n = opt.sections;
  if (big_n == 0) throw Error("N must be positive");
  if (big_n < h.degree()) throw Error("N must be at least the parity-check memory M");
  if (big_n * g.rows() > 20) throw Error("N*k exceeds the exhaustive bound of 20");
  if (!is_dual_pair(g, h)) throw Error("G(D) H(D)^T is not zero");

  std::mt19937_64 rng(opt.seed);
  const auto codewords = all_tailbiting_codewords(g, big_n);
  // The oracle's cost grows with the code size; keep total work bounded.
  const std::size_t decode_samples =
      std::clamp<std::size_t>((std::size_t{1} << 22) / codewords.size(), 16, opt.samples);

  std::vector<Sequence> words{zero_sequence(big_n, g.cols())};
  words.push_back(codewords[codewords.size() / 2].codeword);
  while (words.size() < opt.trellis_words) words.push_back(random_sequence(rng, big_n, g.cols()));

  std::vector<SuiteResult> out;
  out.push_back(check_superposition(h, rng, opt.samples));
  out.push_back(check_last_m_determination(h, big_n, rng, opt.samples));
  out.push_back(check_zero_syndrome_traversal(g, h, codewords));
  out.push_back(check_dual_state_well_defined(g, h));
  out.push_back(check_anchor_bijection(g, h));
  out.push_back(check_sigma_fin_fixed_point(h, big_n, rng, opt.samples));
  out.push_back(check_subtrellis_correspondence(g, h, big_n, words));
  out.push_back(check_backward_correspondence(g, h, words));
  out.push_back(check_eta_zeta(h, big_n, rng, opt.samples));
  out.push_back(check_hscalar_membership(h, big_n, codewords, rng, opt.samples));
  out.push_back(check_decoder_oracle(g, h, big_n, codewords, rng, decode_samples));
  return out;
}

}  // namespace tbt
