// tbtrellis: command-line front end for tailbiting code/error trellises.
//
// Exit codes: 0 success, 1 usage or bad code file, 2 decode tie, 3 verification
// failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tbtrellis/tbtrellis.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTie = 2;
constexpr int kExitVerifyFailed = 3;

struct Options {
  std::string code_path;
  std::string received;
  std::string format = "dot";
  std::string out_path;
  std::string highlight;
  std::string kind = "tailbiting";
  std::string reciprocal_path;
  std::size_t sections = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  bool backward = false;
  bool blocks = false;
};

tbt::Sequence parse_received(const std::string& text, std::size_t n) {
  const tbt::BitVector bits = tbt::BitVector::from_string(text);
  if (bits.empty()) throw tbt::Error("received word is empty");
  if (bits.size() % n != 0)
    throw tbt::Error("received word has " + std::to_string(bits.size()) + " bits, not a multiple of n = " +
                     std::to_string(n));
  return tbt::split_symbols(bits, n);
}

/// Accepts "(1,0)", "1,0" or "10".
std::optional<tbt::SubtrellisId> parse_highlight(const std::string& text, const tbt::Trellis& t) {
  if (text.empty()) return std::nullopt;
  std::string digits;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ',' || c == ' ') continue;
    digits.push_back(c);
  }
  const tbt::BitVector bits = tbt::BitVector::from_string(digits);
  if (bits.size() != t.state_width())
    throw tbt::Error("highlight state needs " + std::to_string(t.state_width()) + " bits");
  return tbt::SubtrellisId{bits.to_uint()};
}

void emit(const std::string& text, const Options& opt) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw tbt::Error("cannot write " + opt.out_path);
  out << text;
}

void emit_trellis(const tbt::Trellis& t, const Options& opt) {
  if (opt.format == "json") {
    emit(tbt::to_json(t), opt);
  } else {
    emit(tbt::to_dot(t, parse_highlight(opt.highlight, t)), opt);
  }
}

int cmd_syndrome(const Options& opt) {
  const tbt::CodeSpec spec = tbt::load_code_spec(opt.code_path);
  const tbt::Sequence z = parse_received(opt.received, spec.n);
  if (opt.backward) {
    const auto et = tbt::build_backward_error_trellis(spec.parity_check(), z);
    std::cout << "sigma_fin=" << et.sigma_fin.to_string() << "\n";
    std::cout << "eta=" << et.syndromes.to_string() << "\n";
  } else {
    const tbt::PolyMatrix& h = spec.parity_check();
    std::cout << "sigma_fin=" << tbt::sigma_fin(h, z).to_string() << "\n";
    std::cout << "zeta=" << tbt::tailbiting_syndromes(h, z).to_string() << "\n";
  }
  return kExitOk;
}

int cmd_error_trellis(const Options& opt, bool backward) {
  const tbt::CodeSpec spec = tbt::load_code_spec(opt.code_path);
  const tbt::Sequence z = parse_received(opt.received, spec.n);
  std::optional<tbt::ErrorTrellis> et;
  if (!backward) {
    et = tbt::build_tailbiting_error_trellis(spec.parity_check(), z);
  } else if (!opt.reciprocal_path.empty()) {
    const tbt::CodeSpec rec = tbt::load_code_spec(opt.reciprocal_path);
    et = tbt::build_backward_error_trellis_with(rec.parity_check(), z);
  } else {
    et = tbt::build_backward_error_trellis(spec.parity_check(), z);
  }
  std::cerr << "sigma_fin=" << et->sigma_fin.to_string() << " " << (backward ? "eta=" : "zeta=")
            << et->syndromes.to_string() << "\n";
  emit_trellis(et->trellis, opt);
  return kExitOk;
}

int cmd_code_trellis(const Options& opt) {
  const tbt::CodeSpec spec = tbt::load_code_spec(opt.code_path);
  emit_trellis(tbt::build_tailbiting_code_trellis(spec.generator(), opt.sections), opt);
  return kExitOk;
}

int cmd_hscalar(const Options& opt) {
  const tbt::CodeSpec spec = tbt::load_code_spec(opt.code_path);
  const tbt::PolyMatrix& h = spec.parity_check();
  const tbt::ScalarParity p = opt.kind == "terminated" ? tbt::hscalar_terminated(h, opt.sections)
                                                       : tbt::hscalar_tailbiting(h, opt.sections);
  if (opt.blocks) std::cout << tbt::block_layout(p) << "\n";
  std::cout << tbt::render(p);
  return kExitOk;
}

int cmd_decode(const Options& opt) {
  const tbt::CodeSpec spec = tbt::load_code_spec(opt.code_path);
  const tbt::Sequence z = parse_received(opt.received, spec.n);
  const tbt::DecodeResult r = tbt::decode_tailbiting(spec.generator(), spec.parity_check(), z);
  std::cout << tbt::render(r) << "\n";
  if (r.tie) {
    std::cout << "tie: several subtrellises reach weight " << r.weight << "\n";
    return kExitTie;
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const tbt::CodeSpec spec = tbt::load_code_spec(opt.code_path);
  tbt::VerifyOptions vo;
  vo.sections = opt.sections;
  vo.seed = opt.seed;
  vo.samples = opt.samples;
  const auto results = tbt::run_verification(spec.generator(), spec.parity_check(), vo);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n";
    all = all && r.passed;
  }
  std::cout << (all ? "all suites passed" : "verification FAILED") << "\n";
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tailbiting convolutional code trellises, syndromes and decoding"};
  app.require_subcommand(1);
  Options opt;

  auto add_code = [&](CLI::App* sub) {
    sub->add_option("--code", opt.code_path, "code-spec JSON file")->required()->check(CLI::ExistingFile);
  };
  auto add_received = [&](CLI::App* sub) {
    sub->add_option("--received", opt.received, "received word, e.g. \"111 110 110 111 000\"")->required();
  };
  auto add_sections = [&](CLI::App* sub) {
    sub->add_option("-N,--sections", opt.sections, "number of trellis sections")->required();
  };
  auto add_trellis_output = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    sub->add_option("--out", opt.out_path, "write to FILE instead of stdout");
    sub->add_option("--highlight", opt.highlight, "subtrellis anchor to draw bold, e.g. (1,0)");
  };

  auto* syndrome = app.add_subcommand("syndrome", "print sigma_fin and the tailbiting syndrome sequence");
  add_code(syndrome);
  add_received(syndrome);
  syndrome->add_flag("--backward", opt.backward, "time-reversed word with the reciprocal parity-check matrix");

  auto* error = app.add_subcommand("error-trellis", "tailbiting error-trellis for a received word");
  add_code(error);
  add_received(error);
  add_trellis_output(error);

  auto* backward = app.add_subcommand("backward-error-trellis", "tailbiting backward error-trellis");
  add_code(backward);
  add_received(backward);
  add_trellis_output(backward);
  backward->add_option("--reciprocal-code", opt.reciprocal_path,
                       "code spec whose H replaces the derived reciprocal parity-check matrix")
      ->check(CLI::ExistingFile);

  auto* code = app.add_subcommand("code-trellis", "tailbiting code-trellis");
  add_code(code);
  add_sections(code);
  add_trellis_output(code);

  auto* hscalar = app.add_subcommand("hscalar", "scalar parity-check matrix");
  add_code(hscalar);
  add_sections(hscalar);
  hscalar->add_option("--kind", opt.kind, "tailbiting or terminated")
      ->check(CLI::IsMember({"tailbiting", "terminated"}));
  hscalar->add_flag("--blocks", opt.blocks, "also print the H_i block layout");

  auto* decode = app.add_subcommand("decode", "minimum-weight tailbiting decoding");
  add_code(decode);
  add_received(decode);

  auto* verify = app.add_subcommand("verify", "run the property suites against brute force");
  add_code(verify);
  add_sections(verify);
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--samples", opt.samples, "random samples per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*syndrome) return cmd_syndrome(opt);
    if (*error) return cmd_error_trellis(opt, false);
    if (*backward) return cmd_error_trellis(opt, true);
    if (*code) return cmd_code_trellis(opt);
    if (*hscalar) return cmd_hscalar(opt);
    if (*decode) return cmd_decode(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const tbt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
