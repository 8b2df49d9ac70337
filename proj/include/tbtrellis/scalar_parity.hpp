#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tbtrellis/gf2.hpp"

namespace tbt {

enum class ParityKind { terminated, tailbiting };

struct ScalarParity {
  BitMatrix matrix;
  ParityKind kind = ParityKind::tailbiting;
  std::size_t sections = 0;
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t memory = 0;
};

/// Banded (N+M)r x Nn matrix: block (i, j) = H_{i-j} for 0 <= i-j <= M.
inline ScalarParity hscalar_terminated(const PolyMatrix& h, std::size_t big_n) {
  if (big_n == 0) throw Error("number of sections must be positive");
  const std::size_t m = h.degree(), r = h.rows(), n = h.cols();
  BitMatrix out((big_n + m) * r, big_n * n);
  for (std::size_t j = 0; j < big_n; ++j)
    for (std::size_t d = 0; d <= m; ++d) out.add_block((j + d) * r, j * n, h.coefficient(d));
  return {std::move(out), ParityKind::terminated, big_n, r, n, m};
}

/// Cyclic Nr x Nn matrix: block (i, j) = sum of H_d over 0 <= d <= M with
/// d = (i - j) mod N. For N > M at most one term is present; at N = M the
/// wrapped H_M coincides with H_0 and the two are added.
inline ScalarParity hscalar_tailbiting(const PolyMatrix& h, std::size_t big_n) {
  const std::size_t m = h.degree(), r = h.rows(), n = h.cols();
  if (big_n == 0 || big_n < m)
    throw Error("tailbiting H_scalar needs N >= max(1, M); got N = " + std::to_string(big_n) + ", M = " +
                std::to_string(m));
  BitMatrix out(big_n * r, big_n * n);
  for (std::size_t j = 0; j < big_n; ++j)
    for (std::size_t d = 0; d <= m; ++d) out.add_block(((j + d) % big_n) * r, j * n, h.coefficient(d));
  return {std::move(out), ParityKind::tailbiting, big_n, r, n, m};
}

inline BitVector scalar_syndrome(const ScalarParity& p, const BitVector& y) {
  if (y.size() != p.matrix.cols())
    throw Error("word has " + std::to_string(y.size()) + " bits, expected " + std::to_string(p.matrix.cols()));
  return p.matrix.apply(y);
}

inline bool is_tailbiting_codeword(const ScalarParity& p, const BitVector& y) {
  if (p.kind != ParityKind::tailbiting) throw Error("membership test needs a tailbiting H_scalar");
  return scalar_syndrome(p, y).is_zero();
}

inline bool is_tailbiting_codeword(const ScalarParity& p, std::span<const BitVector> y) {
  return is_tailbiting_codeword(p, flatten(y));
}

/// Block layout, one token per r x n block: "H0", "H1", ..., "." for zero,
/// "H0+H2" where blocks coincide.
inline std::string block_layout(const ScalarParity& p) {
  const std::size_t row_blocks = p.matrix.rows() / p.r;
  std::vector<std::vector<std::string>> grid(row_blocks, std::vector<std::string>(p.sections));
  for (std::size_t j = 0; j < p.sections; ++j) {
    for (std::size_t d = 0; d <= p.memory; ++d) {
      const std::size_t i = p.kind == ParityKind::tailbiting ? (j + d) % p.sections : j + d;
      auto& cell = grid[i][j];
      if (!cell.empty()) cell += "+";
      cell += "H" + std::to_string(d);
    }
  }
  std::size_t width = 1;
  for (const auto& row : grid)
    for (const auto& c : row) width = std::max(width, c.size());
  std::string s;
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string c = row[j].empty() ? "." : row[j];
      c.resize(width, ' ');
      s += c;
      if (j + 1 < row.size()) s += ' ';
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    s += '\n';
  }
  return s;
}

}  // namespace tbt
