#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idealis/corpus.hpp"

#ifndef IDEALIS_SOURCE_CORPUS_DIR
#define IDEALIS_SOURCE_CORPUS_DIR ""
#endif

namespace {

using namespace idealis;

struct Options {
  std::string format = "text";
  ExecOptions exec;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--nmax", opt.exec.nmax, "power scan bound");
  cmd->add_option("--mmax", opt.exec.mmax, "colon chain bound");
  cmd->add_option("--window", opt.exec.window, "stabilization window");
  cmd->add_option("--budget", opt.exec.budget, "witness search budget");
  cmd->add_option("--seed", opt.exec.seed, "search seed (overrides IDEALIS_SEED)");
}

// 0 = all good, 1 = a check failed or a command errored
int emit(const SessionScript& script, const Options& opt) {
  RunReport report = execute(script, opt.exec);
  if (opt.format == "json")
    std::cout << to_json(report, script).dump(2) << "\n";
  else
    std::cout << to_text(report);
  return report.ok ? 0 : 1;
}

int run_script_file(const std::string& path, const Options& opt) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return emit(parse_script(buf.str()), opt);
}

// direct subcommands reuse the script front end: the flags are assembled
// into a tiny script so every path through the engines is the same
int run_inline(const std::string& ring,
               const std::vector<std::pair<std::string, std::string>>& ideals,
               const std::string& command, const Options& opt) {
  std::string src = "ring " + ring + ";\n";
  for (const auto& [name, gens] : ideals) src += name + " = ideal(" + gens + ");\n";
  src += command + ";\n";
  return emit(parse_script(src), opt);
}

std::string corpus_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("IDEALIS_CORPUS_DIR")) return env;
  if (std::filesystem::is_directory("data/corpus")) return "data/corpus";
  return IDEALIS_SOURCE_CORPUS_DIR;
}

uint64_t seed_from_env() {
  if (const char* env = std::getenv("IDEALIS_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for ideal powers, reductions and closures"};
  app.require_subcommand(1);

  Options opt;
  opt.exec.seed = seed_from_env();

  // run <script.idl>
  std::string script_path;
  CLI::App* run = app.add_subcommand("run", "run an .idl script");
  run->add_option("script", script_path, "script file")->required();
  add_common(run, opt);

  // corpus run [--filter ID] [--dir DIR]
  CLI::App* corpus = app.add_subcommand("corpus", "catalogued worked examples");
  corpus->require_subcommand(1);
  std::string filter, dir_flag;
  CLI::App* corpus_run = corpus->add_subcommand("run", "run corpus entries");
  corpus_run->add_option("--filter", filter, "entry id (default: all)");
  corpus_run->add_option("--dir", dir_flag, "corpus directory");
  add_common(corpus_run, opt);

  // direct commands; two-ideal commands name them --ideal and --in
  std::string ring, ideal_a, ideal_b;
  std::vector<std::string> candidates;

  CLI::App* rr = app.add_subcommand("rr", "Ratliff-Rush closure");
  rr->add_option("--ring", ring, "ring declaration, e.g. \"sg<3,4> over Q\"")->required();
  rr->add_option("--ideal", ideal_a, "generators, e.g. \"t^6,t^7\"")->required();
  add_common(rr, opt);

  CLI::App* powerscan = app.add_subcommand("powerscan", "compare I^n with J^n");
  powerscan->add_option("--ring", ring, "ring declaration")->required();
  powerscan->add_option("--ideal", ideal_a, "generators of the inner ideal")->required();
  powerscan->add_option("--in", ideal_b, "generators of the outer ideal")->required();
  add_common(powerscan, opt);

  CLI::App* reduction = app.add_subcommand("reduction", "least m with I*J^m = J^(m+1)");
  reduction->add_option("--ring", ring, "ring declaration")->required();
  reduction->add_option("--ideal", ideal_a, "generators of the inner ideal")->required();
  reduction->add_option("--in", ideal_b, "generators of the outer ideal")->required();
  add_common(reduction, opt);

  CLI::App* bigscan = app.add_subcommand("bigscan", "search subideals with collapsing powers");
  bigscan->add_option("--ring", ring, "ring declaration")->required();
  bigscan->add_option("--ideal", ideal_a, "generators of the ideal under test")->required();
  bigscan->add_option("--candidate", candidates, "extra candidate generator lists");
  add_common(bigscan, opt);

  CLI::App* minsub = app.add_subcommand("minsub", "graded shrink keeping the power collapse");
  minsub->add_option("--ring", ring, "ring declaration")->required();
  minsub->add_option("--ideal", ideal_a, "generators of the inner ideal")->required();
  minsub->add_option("--in", ideal_b, "generators of the outer ideal")->required();
  add_common(minsub, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_script_file(script_path, opt);
    if (corpus_run->parsed()) {
      CorpusReport report = run_corpus(load_corpus(corpus_dir(dir_flag)), filter, opt.exec);
      if (opt.format == "json")
        std::cout << to_json(report).dump(2) << "\n";
      else
        std::cout << to_text(report);
      return report.ok ? 0 : 1;
    }
    if (rr->parsed()) return run_inline(ring, {{"A", ideal_a}}, "rr A", opt);
    if (powerscan->parsed())
      return run_inline(ring, {{"A", ideal_a}, {"B", ideal_b}}, "powerscan A B", opt);
    if (reduction->parsed())
      return run_inline(ring, {{"A", ideal_a}, {"B", ideal_b}}, "reduction A B", opt);
    if (bigscan->parsed()) {
      std::vector<std::pair<std::string, std::string>> ideals = {{"A", ideal_a}};
      std::string cmd = "bigscan A";
      for (size_t i = 0; i < candidates.size(); ++i) {
        std::string name = "C" + std::to_string(i + 1);
        ideals.emplace_back(name, candidates[i]);
        cmd += (i ? ", " : " candidates ") + name;
      }
      return run_inline(ring, ideals, cmd, opt);
    }
    if (minsub->parsed())
      return run_inline(ring, {{"A", ideal_a}, {"B", ideal_b}}, "minsub A B", opt);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
