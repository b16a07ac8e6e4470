// braidcsp: command-line front end for the braid key-exchange workbench.
//
//   braidcsp normal-form --n 3 "1 2 1"
//   braidcsp gen --protocol kolee --n 5 --priv-len 3 --seed 7 > s.json
//   braidcsp simulate s.json > run.json
//   braidcsp verify s.json run.json
//   braidcsp attack fixtures/kolee-b4.json
//   braidcsp session --role alice --listen 127.0.0.1:7000 s.json
//   braidcsp session --role bob --connect 127.0.0.1:7000 s.json
//
// Exit codes: 0 ok, 2 input error, 3 algebraic failure, 4 wire error.

#include <charconv>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "braidcsp/error.hpp"
#include "braidcsp/normal_form.hpp"
#include "braidcsp/scenario.hpp"
#include "braidcsp/session.hpp"

namespace {

using namespace braidcsp;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitAlgebra = 3;
constexpr int kExitWire = 4;

std::pair<std::string, std::uint16_t> parse_endpoint(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw InputError("endpoint must be HOST:PORT");
  unsigned port = 0;
  const char* first = text.data() + colon + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, port);
  if (ec != std::errc() || ptr != last || port > 65535) throw InputError("invalid port in '" + text + "'");
  return {text.substr(0, colon), static_cast<std::uint16_t>(port)};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON in '") + path + "': " + e.what());
  }
}

int cmd_normal_form(int n, const std::string& text) {
  const BraidContext ctx(n);
  const Word w = parse_word(text);
  const NormalForm nf = to_normal_form(ctx, w);
  std::cout << "delta_power: " << nf.delta_power << '\n';
  std::cout << "factors: [";
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    std::cout << (i ? ", " : "") << '[';
    const auto& image = nf.factors[i].image();
    for (std::size_t k = 0; k < image.size(); ++k) std::cout << (k ? " " : "") << image[k] + 1;
    std::cout << ']';
  }
  std::cout << "]\n";
  std::cout << "word: " << format_word(nf_to_word(nf)) << '\n';
  std::cout << "hex: " << io::to_hex(canonical_bytes(nf)) << '\n';
  return kExitOk;
}

int cmd_simulate(const std::string& path) {
  const json out = io::simulate(io::load_scenario(path));
  std::cout << out.dump(2) << '\n';
  return out["match"].get<bool>() ? kExitOk : kExitAlgebra;
}

int cmd_verify(const std::string& scenario_path, const std::string& saved_path) {
  const json out = io::reverify(io::load_scenario(scenario_path), read_json_file(saved_path));
  std::cout << out.dump(2) << '\n';
  return out["match"].get<bool>() && out["match_saved"].get<bool>() ? kExitOk : kExitAlgebra;
}

int cmd_attack(const std::string& path, bool with_timing) {
  std::cout << io::run_attack(io::load_scenario(path), with_timing).dump(2) << '\n';
  return kExitOk;
}

int cmd_session(const std::string& role_name, const std::string& listen, const std::string& connect,
                const std::string& port_file, const std::string& path) {
  if (role_name != "alice" && role_name != "bob") throw InputError("--role must be alice or bob");
  if (listen.empty() == connect.empty()) throw InputError("give exactly one of --listen or --connect");
  const Side role = role_name == "alice" ? Side::alice : Side::bob;
  const io::Scenario s = io::load_scenario(path);

  io::FdStream stream(-1);
  if (!listen.empty()) {
    const auto [host, port] = parse_endpoint(listen);
    stream = io::tcp_accept_one(host, port, [&](std::uint16_t bound) {
      if (!port_file.empty()) {
        const std::string tmp = port_file + ".tmp";
        std::ofstream(tmp) << bound << '\n';
        std::rename(tmp.c_str(), port_file.c_str());
      }
      std::cerr << "listening on " << host << ':' << bound << '\n';
    });
  } else {
    const auto [host, port] = parse_endpoint(connect);
    stream = io::tcp_connect(host, port);
  }
  const auto result = io::run_session(s, role, stream);
  std::cout << result.key.hex() << '\n';
  return kExitOk;
}

int cmd_gen(const io::GenOptions& options, bool with_attack) {
  io::Scenario s = io::generate_scenario(options);
  if (with_attack && s.protocol == io::Protocol::kolee) s.attack = io::DecompositionAttack{};
  std::cout << io::scenario_to_json(s).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid-group key exchange workbench: Ko-Lee and AAG protocols with adversary tooling"};
  app.require_subcommand(1);

  int nf_n = 3;
  std::string nf_word;
  auto* nf = app.add_subcommand("normal-form", "Print the Garside left normal form of a word");
  nf->add_option("--n", nf_n, "Strand count")->required();
  nf->add_option("word", nf_word, "Signed generator indices, e.g. \"1 2 -1\"");

  std::string sim_path;
  auto* sim = app.add_subcommand("simulate", "Run a scenario's protocol and print transcript and keys");
  sim->add_option("scenario", sim_path)->required();

  std::string ver_scenario, ver_saved;
  auto* ver = app.add_subcommand("verify", "Recompute keys for a saved simulate output");
  ver->add_option("scenario", ver_scenario)->required();
  ver->add_option("saved", ver_saved)->required();

  std::string atk_path;
  bool timing = false;
  auto* atk = app.add_subcommand("attack", "Run the scenario's attack section and print a report");
  atk->add_option("scenario", atk_path)->required();
  atk->add_flag("--timing", timing, "Report wall-clock elapsed_ms (otherwise 0, keeping output reproducible)");

  std::string role, listen, connect, port_file, ses_path;
  auto* ses = app.add_subcommand("session", "Play one side of the protocol over TCP");
  ses->add_option("--role", role, "alice or bob")->required();
  ses->add_option("--listen", listen, "HOST:PORT to accept one peer on (port 0 picks one)");
  ses->add_option("--connect", connect, "HOST:PORT of the listening peer");
  ses->add_option("--port-file", port_file, "Write the bound port here when listening");
  ses->add_option("scenario", ses_path)->required();

  io::GenOptions gen_options;
  std::string gen_protocol = "kolee";
  bool gen_attack = false;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random scenario");
  gen->add_option("--protocol", gen_protocol)->check(CLI::IsMember({"kolee", "aag"}));
  gen->add_option("--n", gen_options.n, "Strand count");
  gen->add_option("--split", gen_options.split, "Ko-Lee split point l (default n/2)");
  gen->add_option("--priv-len", gen_options.priv_len, "Private word length");
  gen->add_option("--seed", gen_options.seed, "Scenario seed");
  gen->add_option("--w-len", gen_options.w_len, "Ko-Lee base word length");
  gen->add_option("--tuple-size", gen_options.tuple_size, "AAG tuple size");
  gen->add_option("--gen-len", gen_options.generator_len, "AAG tuple word length");
  gen->add_flag("--attack", gen_attack, "Add a default decomposition attack section (Ko-Lee)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*nf) return cmd_normal_form(nf_n, nf_word);
    if (*sim) return cmd_simulate(sim_path);
    if (*ver) return cmd_verify(ver_scenario, ver_saved);
    if (*atk) return cmd_attack(atk_path, timing);
    if (*ses) return cmd_session(role, listen, connect, port_file, ses_path);
    if (*gen) {
      gen_options.protocol = gen_protocol == "aag" ? io::Protocol::aag : io::Protocol::kolee;
      return cmd_gen(gen_options, gen_attack);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const AlgebraError& e) {
    std::cerr << "algebraic failure: " << e.what() << '\n';
    return kExitAlgebra;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitAlgebra;
  } catch (const WireError& e) {
    std::cerr << "wire error: " << e.what() << '\n';
    return kExitWire;
  }
  return kExitInput;
}
