#include "liebranch/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "liebranch/report.hpp"

namespace liebranch {

namespace {

std::vector<int> parse_int_csv(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) fail("empty entry in list '" + s + "'");
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<Int> parse_label_csv(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) fail("empty entry in weight '" + s + "'");
    out.push_back(Int(item));
  }
  return out;
}

struct CommonArgs {
  std::string g, a, drop, drop_classical, embedding_file, weight, format = "table";
  long level = 0;
  bool level_set = false;
  int max_grade = -1;
  bool plot = false;
};

void add_embedding_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--g", args.g, "ambient algebra, e.g. B4 or B2^");
  cmd->add_option("--a", args.a, "subalgebra, e.g. B2 or A1^");
  cmd->add_option("--drop", args.drop,
                  "extended-diagram nodes to delete (comma separated)");
  cmd->add_option("--drop-classical", args.drop_classical,
                  "same as --drop, for affine pairs");
  cmd->add_option("--embedding-file", args.embedding_file,
                  "JSON file describing the embedding");
  cmd->add_option("--format", args.format, "table, json or qseries");
  cmd->add_flag("--plot", args.plot, "append a character-grid view");
  cmd->add_option("--max-grade", args.max_grade,
                  "depth cutoff (required for affine pairs)");
}

void add_weight_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--weight", args.weight,
                  "Dynkin labels of the module, comma separated");
  auto* lv = cmd->add_option("--level", args.level, "level of the module");
  lv->each([&args](const std::string&) { args.level_set = true; });
}

EmbeddingSpec embedding_from_args(const CommonArgs& args) {
  if (!args.embedding_file.empty()) {
    std::ifstream in(args.embedding_file);
    if (!in) fail("cannot open embedding file '" + args.embedding_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return embedding_from_json(buf.str());
  }
  if (args.g.empty() || args.a.empty())
    fail("need --g and --a (or --embedding-file)");
  std::vector<int> drop;
  if (!args.drop.empty()) drop = parse_int_csv(args.drop);
  if (!args.drop_classical.empty()) {
    if (!drop.empty()) fail("give either --drop or --drop-classical, not both");
    drop = parse_int_csv(args.drop_classical);
  }
  return regular_embedding(parse_algebra(args.g), std::move(drop),
                           parse_algebra(args.a));
}

std::optional<int> cutoff_from_args(const Embedding& emb, const CommonArgs& args) {
  if (emb.g.affine) {
    if (args.max_grade < 0) fail("affine computations need --max-grade");
    return args.max_grade;
  }
  if (args.max_grade >= 0) fail("--max-grade only applies to affine pairs");
  return std::nullopt;
}

Weight weight_from_args(const Embedding& emb, const CommonArgs& args) {
  if (args.weight.empty()) fail("need --weight");
  std::vector<Int> labels = parse_label_csv(args.weight);
  if (static_cast<int>(labels.size()) != emb.g.rank())
    fail("--weight needs " + std::to_string(emb.g.rank()) + " labels");
  if (emb.g.affine && !args.level_set) fail("affine modules need --level");
  return module_weight(emb.g, labels, Int(args.level));
}

void check_format(const CommonArgs& args, bool allow_qseries) {
  if (args.format == "table" || args.format == "json") return;
  if (args.format == "qseries" && allow_qseries) return;
  fail("unsupported --format '" + args.format + "'");
}

int run_parsed(const std::string& command, const CommonArgs& args,
               std::ostream& out) {
  if (command == "fan") {
    check_format(args, false);
    Embedding emb = resolve_embedding(embedding_from_args(args));
    OrthogonalPair orth = orthogonal_pair(emb);
    std::optional<int> cutoff = cutoff_from_args(emb, args);
    FormalElement prod = fan_product(emb, orth, cutoff);
    Fan fan = extract_fan(emb, prod);
    out << (args.format == "json" ? fan_json(emb, orth, fan)
                                  : fan_table(emb, orth, fan));
    if (args.plot) out << fan_grid(emb, fan);
    return 0;
  }
  if (command == "singular") {
    check_format(args, false);
    Embedding emb = resolve_embedding(embedding_from_args(args));
    OrthogonalPair orth = orthogonal_pair(emb);
    std::optional<int> cutoff = cutoff_from_args(emb, args);
    Weight mu = weight_from_args(emb, args);
    SingularElement se = build_singular_element(emb, orth, mu, cutoff);
    out << (args.format == "json" ? singular_json(emb, mu, se)
                                  : singular_table(emb, mu, se));
    if (args.plot) out << singular_grid(emb, mu, se);
    return 0;
  }
  if (command == "branch" || command == "verify" || command == "coset") {
    check_format(args, command != "verify");
    EmbeddingSpec spec = embedding_from_args(args);
    Embedding emb = resolve_embedding(spec);
    std::optional<int> cutoff = cutoff_from_args(emb, args);
    Weight mu = weight_from_args(emb, args);
    BranchResult res = branch_module(spec, mu, cutoff);
    if (command == "branch") {
      if (args.format == "json")
        out << branch_json(res, mu);
      else if (args.format == "qseries")
        out << branch_qseries(res, mu);
      else
        out << branch_table(res, mu);
      return 0;
    }
    if (command == "verify") {
      BranchingTable oracle = brute_force_branch(res.emb, mu, cutoff);
      bool match = branching_equal(res.table, oracle);
      out << verify_report(res, mu, oracle, match);
      return match ? 0 : 1;
    }
    if (!emb.g.affine) fail("coset characters need affine algebras");
    ConformalReport conf =
        conformal_check(res.emb, res.orth, mu.level);
    auto chars = coset_characters(res.emb, mu, res.table);
    out << (args.format == "json" ? coset_json(res, mu, chars, conf)
                                  : coset_report(res, mu, chars, conf));
    return 0;
  }
  if (command == "invariant") {
    check_format(args, false);
    EmbeddingSpec spec = embedding_from_args(args);
    Embedding emb = resolve_embedding(spec);
    if (!emb.g.affine) fail("partition functions need affine algebras");
    std::optional<int> cutoff = cutoff_from_args(emb, args);
    if (!args.level_set) fail("invariant needs --level");
    OrthogonalPair orth = orthogonal_pair(emb);
    ConformalReport conf = conformal_check(emb, orth, Rat(args.level));
    PartitionFunction pf =
        assemble_partition_function(spec, Int(args.level), *cutoff);
    out << (args.format == "json" ? invariant_json(pf, conf)
                                  : invariant_report(pf, conf));
    return 0;
  }
  fail("unknown command '" + command + "'");
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"branching coefficients of classical and affine Lie algebras"};
  app.require_subcommand(1);
  static const char* commands[] = {"fan",    "singular", "branch",
                                   "verify", "coset",    "invariant"};
  static const char* blurbs[] = {
      "projected denominator quotient (the recurrence stencil)",
      "signed dimension-weighted orbit select",
      "branching coefficients of one module",
      "branch and cross-check against a direct expansion",
      "coset characters q^{m_mu - m_nu} b_nu(q)",
      "diagonal modular invariant in subalgebra characters"};
  CommonArgs parsed[6];
  for (int i = 0; i < 6; ++i) {
    CLI::App* cmd = app.add_subcommand(commands[i], blurbs[i]);
    add_embedding_options(cmd, parsed[i]);
    if (i >= 1) add_weight_options(cmd, parsed[i]);
  }
  CliResult result;
  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("liebranch"));
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    if (e.get_exit_code() != 0) os << "error: " << e.what() << "\n";
    else {
      // --help and friends print usage on stdout.
      result.out = app.help();
      result.status = 0;
      return result;
    }
    result.err = os.str();
    result.status = 2;
    return result;
  }
  try {
    std::ostringstream out;
    for (int i = 0; i < 6; ++i)
      if (app.get_subcommand(commands[i])->parsed()) {
        result.status = run_parsed(commands[i], parsed[i], out);
        break;
      }
    result.out = out.str();
  } catch (const std::exception& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.status = 1;
  }
  return result;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliResult res = run_cli(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.status;
}

}  // namespace liebranch
