// Walks through the (3,1) code G(D) = (1, 1+D^2, 1+D+D^2): syndromes of a
// received word, error-subtrellis anchors for each encoder state, the
// backward construction, and decoding.

#include <iostream>

#include "tbtrellis/tbtrellis.hpp"

int main() {
  using namespace tbt;
  const PolyMatrix g = PolyMatrix::from_strings({{"1", "101", "111"}});
  const PolyMatrix h = PolyMatrix::from_strings({{"11", "01", "11"}, {"01", "1", "1"}});
  const Sequence z = parse_sequence("111 110 110 111 000", 3);

  const ErrorTrellis fwd = build_tailbiting_error_trellis(h, z);
  std::cout << "z         = " << render_sequence(z) << "\n";
  std::cout << "sigma_fin = " << fwd.sigma_fin.to_string() << "\n";
  std::cout << "zeta      = " << fwd.syndromes.to_string() << "\n\n";

  const ErrorTrellis bwd = build_backward_error_trellis(h, z);
  std::cout << "z~        = " << render_sequence(bwd.received) << "\n";
  std::cout << "sigma~fin = " << bwd.sigma_fin.to_string() << "\n";
  std::cout << "eta       = " << bwd.syndromes.to_string() << "\n\n";

  std::cout << "beta   beta*  forward-anchor  backward-anchor  paths\n";
  for (const auto& beta : FeedforwardEncoder(g).all_states()) {
    const SfState fa = error_anchor(beta, fwd.sigma_fin, g, h);
    const SfState ba = backward_error_anchor(beta, bwd.sigma_fin, g, h);
    std::cout << beta.to_string() << "  " << dual_state_of(g, h, beta).to_string() << "  " << fa.to_string()
              << "           " << ba.to_string() << "            " << count_paths(fwd.trellis, {fa.id()}) << "\n";
  }

  const DecodeResult r = decode_tailbiting(g, h, z);
  std::cout << "\n" << render(r) << "\n";
  return 0;
}
