#include "pwclone/cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pwclone/check.hpp"
#include "pwclone/clone.hpp"

namespace pwclone {

namespace {

// Shared arity of an --args group: the maximum value present anywhere in
// the group (0 when every entry is the empty word).
int group_arity(const std::vector<std::string>& tokens) {
  int max_value = 0;
  for (const std::string& token : tokens) {
    std::size_t pos = 0;
    while ((pos = token.find('^', pos)) != std::string::npos) {
      std::size_t start = pos;
      while (start > 0 && std::isdigit(static_cast<unsigned char>(token[start - 1]))) --start;
      int value = 0;
      std::from_chars(token.data() + start, token.data() + pos, value);
      max_value = std::max(max_value, value);
      ++pos;
    }
  }
  return max_value;
}

std::vector<std::string> split_args(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = text.find(';', pos);
    if (semi == std::string::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, semi - pos));
    pos = semi + 1;
  }
  return out;
}

struct Request {
  MonoidSpec monoid = MonoidSpec::trivial();
  CloneId clone = CloneId(Variety::P, MonoidSpec::trivial());
  bool json = false;

  void emit(std::ostream& out, const std::string& plain, const nlohmann::json& value) const {
    if (json) {
      out << nlohmann::json{{"result", value},
                            {"clone", clone.to_text()},
                            {"monoid", monoid.to_text()}}
                 .dump()
          << "\n";
    } else {
      out << plain << "\n";
    }
  }
};

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pigmented-word clones: normal forms, equivalence and verification suites",
               "pwclone"};
  app.require_subcommand(1);

  std::string monoid_text = "trivial";
  std::string clone_text = "p";
  bool json = false;
  app.add_option("--monoid", monoid_text, "monoid: trivial | free:<symbols> | zmod:<n> | int-add | nat-max | table:<path>");
  app.add_option("--clone", clone_text, "clone: p | winc | arra:k | arra-rev:k | inc:k | magn:k,k' | stal:k | stal-rev:k | pill:k,k'");
  app.add_flag("--json", json, "wrap the result as JSON");

  std::optional<int> arity;
  std::string word_text, word2_text, term_text, term2_text, args_text, suite_text;
  int dims_n = 0;
  bool brute_force = false;
  std::optional<long long> max_len;
  CheckBudget budget;

  CLI::App* normalize = app.add_subcommand("normalize", "canonical representative of a word");
  normalize->add_option("word", word_text)->required();
  normalize->add_option("--arity", arity);

  CLI::App* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two words");
  equiv_cmd->add_option("word", word_text)->required();
  equiv_cmd->add_option("other", word2_text)->required();
  equiv_cmd->add_option("--arity", arity);

  CLI::App* superpose_cmd = app.add_subcommand("superpose", "clone superposition");
  superpose_cmd->add_option("word", word_text)->required();
  superpose_cmd->add_option("--args", args_text, "arguments, ';'-separated")->required();
  superpose_cmd->add_option("--arity", arity);

  CLI::App* frontier_cmd = app.add_subcommand("frontier", "evaluate a term into a word");
  frontier_cmd->add_option("term", term_text)->required();
  frontier_cmd->add_option("--arity", arity);

  CLI::App* rc_cmd = app.add_subcommand("rc", "right-comb factorization of a word");
  rc_cmd->add_option("word", word_text)->required();
  rc_cmd->add_option("--arity", arity);

  CLI::App* term_equiv_cmd = app.add_subcommand("term-equiv", "word problem on two terms");
  term_equiv_cmd->add_option("term", term_text)->required();
  term_equiv_cmd->add_option("other", term2_text)->required();
  term_equiv_cmd->add_option("--arity", arity);

  CLI::App* dims_cmd = app.add_subcommand("dims", "number of classes of one arity");
  dims_cmd->add_option("n", dims_n)->required()->check(CLI::NonNegativeNumber);
  dims_cmd->add_flag("--brute-force", brute_force, "count by exhaustive enumeration");
  dims_cmd->add_option("--max-len", max_len, "length bound for --brute-force");

  CLI::App* check_cmd = app.add_subcommand("check", "run a verification suite");
  check_cmd->add_option("--suite", suite_text, "axioms | congruence | presentation | functor | reversion")->required();
  check_cmd->add_option("--samples", budget.samples);
  check_cmd->add_option("--max-arity", budget.max_arity);
  check_cmd->add_option("--max-len", budget.max_len);
  check_cmd->add_option("--seed", budget.seed);

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Request request;
    request.monoid = parse_monoid(monoid_text);
    request.clone = parse_clone(clone_text, request.monoid);
    request.json = json;
    const MonoidSpec& m = request.monoid;
    const CloneId& c = request.clone;

    if (*normalize) {
      PigmentedWord p = parse_word(word_text, m, arity);
      std::string text = format_word(normal_form(c, p));
      request.emit(out, text, text);
      return 0;
    }
    if (*equiv_cmd) {
      PigmentedWord p = parse_word(word_text, m, arity);
      PigmentedWord q = parse_word(word2_text, m, arity);
      const bool eq = equiv(c, p, q);
      request.emit(out, eq ? "equivalent" : "not-equivalent", eq);
      return eq ? 0 : 1;
    }
    if (*superpose_cmd) {
      PigmentedWord p = parse_word(word_text, m, arity);
      std::vector<std::string> tokens = split_args(args_text);
      const int shared = group_arity(tokens);
      std::vector<PigmentedWord> operands;
      operands.reserve(tokens.size());
      for (const std::string& token : tokens) operands.push_back(parse_word(token, m, shared));
      std::string text = format_word(clone_superpose(c, p, operands, shared));
      request.emit(out, text, text);
      return 0;
    }
    if (*frontier_cmd) {
      Term t = parse_term(term_text, m, arity);
      std::string text = format_word(frontier(t, m));
      request.emit(out, text, text);
      return 0;
    }
    if (*rc_cmd) {
      PigmentedWord p = parse_word(word_text, m, arity);
      std::string text = format_term(right_comb(p), m);
      request.emit(out, text, text);
      return 0;
    }
    if (*term_equiv_cmd) {
      Term t = parse_term(term_text, m, arity);
      Term u = parse_term(term2_text, m, arity);
      const bool eq = term_equiv(c, t, u);
      request.emit(out, eq ? "equivalent" : "not-equivalent", eq);
      return eq ? 0 : 1;
    }
    if (*dims_cmd) {
      if (brute_force) {
        auto classes = enumerate_classes(c, dims_n, max_len);
        std::string text = std::to_string(classes.size());
        request.emit(out, text, text);
      } else {
        DimCount d = dims(c, dims_n);
        std::string text = to_string(d);
        request.emit(out, text, text);
      }
      return 0;
    }
    if (*check_cmd) {
      CheckReport report = run_suite(c, parse_suite(suite_text), budget);
      if (request.json) {
        request.emit(out, "", nlohmann::json::parse(render_json(report)));
      } else {
        out << render_text(report);
      }
      return report.ok() ? 0 : 1;
    }
    err << "error: no command\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pwclone
