// Command-line front end. Exit codes: 0 success or accept, 1 reject or a
// failed check, 2 usage error.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bs12/acceptance.hpp"
#include "bs12/experiments.hpp"
#include "bs12/group_element.hpp"
#include "bs12/machine_io.hpp"
#include "bs12/nf_acceptor.hpp"
#include "bs12/normal_form.hpp"
#include "bs12/oracle.hpp"
#include "bs12/pda.hpp"
#include "bs12/rewriting.hpp"
#include "bs12/zoo.hpp"

namespace {

using namespace bs12;

constexpr const char* kGrammar =
    "Words are sequences of the tokens a, A, t, T, a^<int>, t^<int>\n"
    "(A = a^-1, T = t^-1; whitespace ignored; A^n and T^n are not allowed).\n"
    "Examples: tat^-1   a^2t^-1at^-1a^-1   ta^2t^-1a\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word word_arg(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("bad word: ") + e.what());
  }
}

void print_words(const std::vector<Word>& words) {
  for (const auto& w : words) std::cout << to_string(w) << '\n';
}

// Letters read by a machine: group words are parsed with the word grammar when
// the machine alphabet lies inside {a, A, t, T}; otherwise the text is taken
// symbol by symbol.
std::string machine_input(const Machine& m, const std::string& text, bool raw) {
  if (raw) return text;
  const auto& sigma = alphabet(m);
  bool group = true;
  for (Symbol c : sigma) group &= c == 'a' || c == 'A' || c == 't' || c == 'T';
  if (!group) return text;
  return to_symbols(word_arg(text));
}

void explain_reject(const Word& w) {
  auto type = classify_type(w);
  if (!type) {
    std::cerr << "none of the ten types\n";
    return;
  }
  std::cerr << "type " << to_string(*type) << '\n';
  try {
    RunForm r = encode_run(w);
    for (const auto& v : run_violations(r, *type)) std::cerr << v.message << '\n';
  } catch (const RunFormatError&) {
    std::cerr << "more than one run\n";
  }
}

void write_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, automata and experiments for BS(1,2) = <a, t | tat^-1 = a^2>"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  std::string word, machine_path, in_path, out_path, suite = "all", emit;
  std::size_t radius = 0, max_len = 0, cap = kDefaultBallCap, window = 3;
  std::optional<std::size_t> suite_radius;
  std::int64_t spacing = 10;
  unsigned iterations = 0;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool raw = false, json = false, list = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a word to its group element (JSON)");
  eval->add_option("word", word, "Word")->required();
  auto* reduce = app.add_subcommand("reduce", "Free reduction");
  reduce->add_option("word", word, "Word")->required();
  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of the element of a word");
  normalize_cmd->add_option("word", word, "Word")->required();
  auto* nf_check = app.add_subcommand("nf-check", "Is the word a normal form? Prints accept or reject");
  nf_check->add_option("word", word, "Word")->required();
  auto* length = app.add_subcommand("length", "Geodesic length of the element of a word");
  length->add_option("word", word, "Word")->required();

  auto* ball = app.add_subcommand("ball", "Cayley-graph ball: lines 'num dexp texp distance'");
  ball->add_option("--radius", radius, "Radius")->required();
  ball->add_option("--out", out_path, "Output file (default stdout)");
  ball->add_option("--cap", cap, "Largest radius allowed")->capture_default_str();
  auto* spheres = app.add_subcommand("spheres", "Sphere sizes for n = 0..radius");
  spheres->add_option("--radius", radius, "Radius")->required();
  spheres->add_option("--cap", cap, "Largest radius allowed")->capture_default_str();
  spheres->add_flag("--json", json, "JSON array output");
  auto* enumerate = app.add_subcommand("enumerate-nf", "All normal forms up to a length, shortlex order");
  enumerate->add_option("--max-len", max_len, "Maximum length")->required();

  auto* accept = app.add_subcommand("accept", "Run a machine file on a word; prints accept or reject");
  accept->add_option("--machine", machine_path, "Machine JSON file")->required()->check(CLI::ExistingFile);
  accept->add_option("--word", word, "Input word")->required();
  accept->add_flag("--raw", raw, "Read the input symbol by symbol, without the word grammar");
  auto* build_nf = app.add_subcommand("build-nf-acceptor", "Write the one-counter normal-form acceptor");
  build_nf->add_option("--out", out_path, "Output JSON file")->required();
  auto* to_pda = app.add_subcommand("counter-to-pda", "Compile a one-counter machine into a PDA");
  to_pda->add_option("--in", in_path, "Input machine file")->required()->check(CLI::ExistingFile);
  to_pda->add_option("--out", out_path, "Output PDA file")->required();
  auto* zoo_cmd = app.add_subcommand("zoo", "Named example machines");
  auto* zoo_list = zoo_cmd->add_flag("--list", list, "List the machines");
  auto* zoo_emit = zoo_cmd->add_option("--emit", emit, "Print one machine as JSON");
  zoo_list->excludes(zoo_emit);
  zoo_cmd->add_option("--out", out_path, "Write the emitted machine to a file")->needs(zoo_emit);

  auto* tm = app.add_subcommand("thue-morse", "f^i(a) for a -> abc, b -> ac, c -> b");
  tm->add_option("--i", iterations, "Iterations")->required()->check(CLI::Range(0u, kThueMorseMaxIterations));
  auto* tenc = app.add_subcommand("t-encode", "t-encoding of a word without a^-1");
  tenc->add_option("word", word, "Word")->required();
  tenc->add_flag("--json", json, "JSON array output");
  auto* swap = app.add_subcommand("swap-demo", "Mesa word and its swap variants");
  swap->add_option("--i", iterations, "Thue-Morse iterations")->required()->check(CLI::Range(0u, 8u));
  swap->add_option("--s", spacing, "Spacing of the t-blocks")->capture_default_str()->check(CLI::Range(1, 1000));
  swap->add_option("--window", window, "Swaps stay within the first 2*window+1 encoding values")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  swap->add_flag("--json", json, "JSON report");
  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
  verify->add_option("--radius", suite_radius, "Ball radius for nf-trichotomy and growth");
  verify->add_option("--seed", seed, "Seed for the closure suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << '\n' << kGrammar;
    return 2;
  }

  try {
    if (*eval) {
      std::cout << to_json(eval_word(word_arg(word))).dump() << '\n';
    } else if (*reduce) {
      std::cout << to_string(free_reduce(word_arg(word))) << '\n';
    } else if (*normalize_cmd) {
      std::cout << to_string(normalize(word_arg(word))) << '\n';
    } else if (*nf_check) {
      Word w = word_arg(word);
      bool ok = is_normal_form(w);
      std::cout << (ok ? "accept" : "reject") << '\n';
      if (!ok) explain_reject(w);
      return ok ? 0 : 1;
    } else if (*length) {
      std::cout << geodesic_length(eval_word(word_arg(word))) << '\n';
    } else if (*ball) {
      if (radius > cap) throw UsageError("radius exceeds --cap");
      Ball b = bfs_ball(radius, cap);
      if (out_path.empty()) {
        write_ball(b, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        write_ball(b, out);
      }
    } else if (*spheres) {
      if (radius > cap) throw UsageError("radius exceeds --cap");
      auto sizes = sphere_sizes(radius, cap);
      if (json) {
        std::cout << nlohmann::json(sizes).dump() << '\n';
      } else {
        for (std::size_t i = 0; i < sizes.size(); ++i) std::cout << (i ? " " : "") << sizes[i];
        std::cout << '\n';
      }
    } else if (*enumerate) {
      if (max_len > 16) throw UsageError("--max-len above 16 is not supported");
      print_words(enumerate_nf(max_len));
    } else if (*accept) {
      Machine m = load_machine(machine_path);
      std::string input = machine_input(m, word, raw);
      bool ok;
      try {
        ok = accepts(m, input);
      } catch (const AlphabetError& e) {
        throw UsageError(e.what());
      }
      std::cout << (ok ? "accept" : "reject") << '\n';
      return ok ? 0 : 1;
    } else if (*build_nf) {
      save_machine(build_nf_acceptor(), out_path);
    } else if (*to_pda) {
      Machine m = load_machine(in_path);
      const auto* c = std::get_if<CounterAutomaton>(&m);
      if (!c || c->k() != 1) throw UsageError("counter-to-pda needs a counter machine with k = 1");
      save_machine(counter_to_pda(*c), out_path);
    } else if (*zoo_cmd) {
      if (!emit.empty()) {
        const ZooEntry* e = nullptr;
        try {
          e = &zoo_entry(emit);
        } catch (const std::out_of_range&) {
          throw UsageError("unknown zoo machine: " + emit);
        }
        if (out_path.empty()) {
          std::cout << to_json(e->machine).dump(2) << '\n';
        } else {
          save_machine(e->machine, out_path);
        }
      } else {
        for (const auto& e : zoo()) std::cout << e.name << "  " << e.description << '\n';
      }
    } else if (*tm) {
      std::cout << thue_morse(iterations) << '\n';
    } else if (*tenc) {
      TEncoding e;
      try {
        e = t_encode(word_arg(word));
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
      if (json) {
        std::cout << nlohmann::json(e).dump() << '\n';
      } else {
        for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? " " : "") << e[i];
        std::cout << '\n';
      }
    } else if (*swap) {
      SwapReport r = swap_experiment(iterations, spacing, window);
      bool ok = r.geodesic_base && r.variants_geodesic.empty();
      if (json) {
        std::cout << to_json(r).dump(2) << '\n';
      } else {
        std::cout << "mesa length " << r.word_length << ", normal form length " << r.normal_form_length
                  << (r.geodesic_base ? " (geodesic)" : " (not geodesic)") << '\n'
                  << "variants " << r.variants_total << ", differing " << r.variants_differing
                  << ", still geodesic " << r.variants_geodesic.size() << '\n';
        for (const auto& v : r.variants_geodesic) std::cout << v << '\n';
      }
      return ok ? 0 : 1;
    } else if (*verify) {
      SuiteOptions options;
      options.radius = suite_radius;
      options.seed = seed;
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        bool known = false;
        for (const auto& n : suite_names()) known |= n == suite;
        if (!known) throw UsageError("unknown suite: " + suite);
        names.push_back(suite);
      }
      int failed = 0;
      for (const auto& n : names) {
        auto r = run_suite(n, options);
        std::cout << format_result(r) << std::endl;
        failed += !r.passed;
      }
      return failed ? 1 : 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
