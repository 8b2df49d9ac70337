#pragma once

// Text renderings: Graphviz DOT and JSON for trellises, 0/1 matrix dumps,
// one-line decode results.

#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "tbtrellis/decoder.hpp"
#include "tbtrellis/scalar_parity.hpp"
#include "tbtrellis/trellis.hpp"

namespace tbt {

/// Cuts become rank=same columns; node names are t<cut>_<state id>.
/// Edges of the highlighted subtrellis are drawn bold.
inline std::string to_dot(const Trellis& t, std::optional<SubtrellisId> highlight = std::nullopt) {
  std::vector<std::vector<bool>> bold;
  if (highlight) bold = subtrellis_edges(t, *highlight);

  std::ostringstream os;
  os << "digraph trellis {\n";
  os << "  rankdir=LR;\n";
  os << "  label=\"" << to_string(t.kind()) << " trellis, N=" << t.n_sections() << "\";\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t c = 0; c < t.cuts().size(); ++c) {
    os << "  { rank=same;";
    for (StateId s : t.cuts()[c]) os << " \"t" << c << "_" << s << "\" [label=\"" << t.state_label(s) << "\"];";
    os << " }\n";
  }
  for (std::size_t c = 0; c < t.n_sections(); ++c) {
    const auto& sec = t.sections()[c];
    for (std::size_t i = 0; i < sec.size(); ++i) {
      const Edge& e = sec[i];
      os << "  \"t" << c << "_" << e.from << "\" -> \"t" << c + 1 << "_" << e.to << "\" [label=\"" << e.label.to_string()
         << "\"";
      if (!bold.empty() && bold[c][i]) os << ", style=bold, penwidth=3";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

/// { "cuts": [[state-strings]], "sections": [[{"from","label","to"}]] }
inline nlohmann::json to_json_value(const Trellis& t) {
  nlohmann::json cuts = nlohmann::json::array();
  for (const auto& c : t.cuts()) {
    nlohmann::json col = nlohmann::json::array();
    for (StateId s : c) col.push_back(t.state_label(s));
    cuts.push_back(std::move(col));
  }
  nlohmann::json sections = nlohmann::json::array();
  for (const auto& sec : t.sections()) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : sec)
      edges.push_back({{"from", t.state_label(e.from)}, {"label", e.label.to_string()}, {"to", t.state_label(e.to)}});
    sections.push_back(std::move(edges));
  }
  return {{"cuts", std::move(cuts)}, {"sections", std::move(sections)}};
}

inline std::string to_json(const Trellis& t) { return to_json_value(t).dump(2) + "\n"; }

/// "weight=2 anchor_beta=(0,0) anchor_sigma=(0,0) e=... y=..."
inline std::string render(const DecodeResult& r) {
  return "weight=" + std::to_string(r.weight) + " anchor_beta=" + r.anchor_beta.to_string() +
         " anchor_sigma=" + r.anchor_sigma.to_string() + " e=" + render_sequence(r.error) +
         " y=" + render_sequence(r.codeword);
}

/// Matrix rows followed by "size AxB rank R".
inline std::string render(const ScalarParity& p) {
  return p.matrix.to_string() + "size " + std::to_string(p.matrix.rows()) + "x" + std::to_string(p.matrix.cols()) +
         " rank " + std::to_string(p.matrix.rank()) + "\n";
}

}  // namespace tbt
