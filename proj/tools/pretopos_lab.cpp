// pretopos-lab: define finite objects in the DSL, run constructions and
// verification suites, emit JSON certificates.
//
// Exit codes: 0 passed, 1 verification failed, 2 usage or parse error,
// 3 enumeration cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "pretopos/suites.hpp"
#include "pretopos/workspace.hpp"

namespace {

using namespace pretopos;

constexpr int kPassed = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ValidationError, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::uint64_t cap_from_env() {
  const char* raw = std::getenv("PRETOPOS_CAP");
  if (!raw || !*raw) return kDefaultCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || raw[0] == '-') throw Error(ErrorKind::ValidationError, "PRETOPOS_CAP must be a non-negative integer");
  return v;
}

int emit(const Certificate& c, const std::string& json_path) {
  const std::string text = c.dump() + "\n";
  if (json_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << json_path << "'\n";
      return kUsage;
    }
    out << text;
    std::cerr << c.kind << ": " << (c.passed ? "passed" : "FAILED") << "\n";
  }
  return c.passed ? kPassed : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-set model checker for the ΠW-pretopos structure of Set"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "parse and validate a workspace file");
  check->add_option("FILE", file, "workspace file, or - for stdin")->required();

  std::string cmd, json_path;
  auto* run = app.add_subcommand("run", "run one command against a workspace");
  run->add_option("FILE", file, "workspace file, or - for stdin")->required();
  run->add_option("--cmd", cmd, "e.g. \"construct pullback f g\"")->required();
  run->add_option("--json", json_path, "write the certificate here instead of stdout");

  std::size_t max_size = 3;
  std::optional<std::uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto* piw = verify->add_subcommand("piw", "Set is a ΠW-pretopos, exhaustively up to --max-size");
  piw->add_option("--max-size", max_size, "largest carrier")->check(CLI::Range(0, 6));
  piw->add_option("--seed", seed, "seed for the sampled checks");
  piw->add_option("--json", json_path, "write the certificate here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPassed : kUsage;
  }

  try {
    const std::uint64_t cap = cap_from_env();
    if (*check) {
      const Workspace w = parse(slurp(file));
      std::cout << "ok: " << w.names().size() << " bindings\n";
      return kPassed;
    }
    if (*run) {
      Workspace w = parse(slurp(file));
      w.cap = cap;
      return emit(run_command(w, cmd), json_path);
    }
    return emit(verify_piw_pretopos(max_size, seed, cap), json_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::CapExceeded ? kCap : kUsage;
  }
}
