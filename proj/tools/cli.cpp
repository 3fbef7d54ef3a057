#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qgrowth/branching.hpp"
#include "qgrowth/checks.hpp"
#include "qgrowth/classical.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/rules.hpp"
#include "qgrowth/serialize.hpp"

namespace qgrowth::cli {

namespace {

/// A user-facing input problem; `kind` heads the diagnostic line.
struct InputError : std::runtime_error {
  InputError(std::string kind, const std::string& what) : std::runtime_error(what), kind(std::move(kind)) {}
  std::string kind;
};

enum class Algo { col, row, qcol, qrow, dyn3 };

Algo parse_algo(const std::string& name) {
  if (name == "col") return Algo::col;
  if (name == "row") return Algo::row;
  if (name == "qcol") return Algo::qcol;
  if (name == "qrow") return Algo::qrow;
  if (name == "dyn3") return Algo::dyn3;
  throw InputError("unknown algorithm", "'" + name + "' (expected col, row, qcol, qrow or dyn3)");
}

bool is_classical(Algo a) { return a == Algo::col || a == Algo::row; }
InsertionAlgo classical(Algo a) { return a == Algo::col ? InsertionAlgo::column : InsertionAlgo::row; }

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  try {
    if (!text.empty() && text.front() == '[') {
      for (const auto& v : json::parse(text)) out.push_back(v.get<int>());
      return out;
    }
    if (text.find(',') != std::string::npos) {
      std::size_t start = 0;
      while (start <= text.size()) {
        const auto stop = std::min(text.find(',', start), text.size());
        const std::string piece = text.substr(start, stop - start);
        if (piece.empty() || !std::all_of(piece.begin(), piece.end(), ::isdigit)) throw std::invalid_argument(piece);
        out.push_back(std::stoi(piece));
        start = stop + 1;
      }
      return out;
    }
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument(text);
      out.push_back(c - '0');
    }
  } catch (const std::exception&) {
    throw InputError("malformed " + what, "'" + text + "' (use digits like 31342, a comma list, or a JSON array)");
  }
  return out;
}

Word parse_word(const std::string& text, int ell) {
  Word w{parse_int_list(text, "word"), ell};
  if (w.alphabet_bound <= 0) {
    w.alphabet_bound = 1;
    for (int a : w.letters) w.alphabet_bound = std::max(w.alphabet_bound, a);
  }
  return w;
}

Permutation parse_perm(const std::string& text) { return Permutation(parse_int_list(text, "permutation")); }

TableauRows parse_tableau(const std::string& text) {
  try {
    return rows_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw InputError("malformed tableau", e.what());
  } catch (const ValidationError& e) {
    throw InputError("malformed tableau", e.what());
  }
}

Rational parse_q(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw InputError("malformed rational", "'" + text + "'");
  }
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

int emit_report(std::ostream& out, const CheckReport& r) {
  emit(out, to_json(r));
  return r.passed ? ok : check_failed;
}

struct Options {
  std::string algo = "qcol";
  int ell = 0;
  int letter = 0;
  std::string word;
  std::string perm;
  std::string tableau = "[]";
  int n = 3;
  std::string q = "1/2";
  std::string format = "json";
  std::string engine = "insertion";
  int jobs = 1;
  bool unmerged = false;
};

int cmd_insert(const Options& o, std::ostream& out) {
  const Algo algo = parse_algo(o.algo);
  const TableauRows rows = parse_tableau(o.tableau);
  int ell = o.ell;
  if (ell <= 0) {
    ell = std::max(o.letter, 1);
    for (const auto& row : rows)
      for (int e : row) ell = std::max(ell, e);
  }
  ShapeChain p;
  try {
    p = rows_to_chain(rows, ell);
  } catch (const ValidationError& e) {
    throw InputError("malformed tableau", e.what());
  }
  json doc = {{"algo", o.algo}, {"ell", ell}, {"letter", o.letter}, {"p", to_json(p)}};
  if (is_classical(algo)) {
    const ShapeChain result = insert_letter(classical(algo), p, o.letter);
    doc["result"] = {{"p", to_json(result)}, {"p_rows", chain_to_rows(result)}, {"display", result.to_string()}};
  } else {
    const auto result = branch_insert_letter(rule_by_name(o.algo), p, o.letter);
    json entries = to_json(result);
    for (std::size_t i = 0; i < entries.size(); ++i)
      entries[i]["chain"] = std::next(result.begin(), static_cast<std::ptrdiff_t>(i))->first.to_string();
    doc["results"] = entries;
  }
  emit(out, doc);
  return ok;
}

int cmd_word(const Options& o, std::ostream& out) {
  const Algo algo = parse_algo(o.algo);
  const Word w = parse_word(o.word, o.ell);
  w.validate();
  json doc = {{"algo", o.algo}, {"ell", w.alphabet_bound}, {"word", w.letters}};
  if (is_classical(algo)) {
    doc["result"] = to_json(insert_word(classical(algo), w));
  } else {
    const auto pairs = branch_insert_word(rule_by_name(o.algo), w, WordInsertOptions{!o.unmerged});
    doc["pairs"] = to_json(pairs);
    doc["total"] = pairs.total().to_string();
  }
  emit(out, doc);
  return ok;
}

int cmd_growth(const Options& o, std::ostream& out) {
  const Algo algo = parse_algo(o.algo);
  const Permutation sigma = parse_perm(o.perm);
  if (o.format != "json" && o.format != "dot")
    throw InputError("invalid argument", "--format must be json or dot");
  if (algo == Algo::col) {
    if (o.format == "dot") throw InputError("invalid argument", "dot export needs a branching variant (qcol, qrow)");
    json labels = json::array();
    for (const auto& column : classical_growth_grid(sigma)) {
      json col = json::array();
      for (const auto& shape : column) col.push_back(to_json(shape));
      labels.push_back(col);
    }
    emit(out, {{"algo", o.algo}, {"perm", sigma.images()}, {"labels", labels},
               {"result", to_json(classical_growth(sigma))}});
    return ok;
  }
  GrowthVariant v;
  try {
    v = growth_variant_by_name(o.algo);
  } catch (const std::invalid_argument& e) {
    throw InputError("invalid argument", e.what());
  }
  const GrowthGraph g = build_growth_graph(v, sigma);
  if (o.format == "dot") {
    out << to_dot(g);
    return ok;
  }
  json doc = to_json(g);
  doc["pairs"] = to_json(growth_compute(v, sigma));
  emit(out, doc);
  return ok;
}

std::string branching_algo(const Options& o) {
  const Algo algo = parse_algo(o.algo);
  if (is_classical(algo)) throw InputError("invalid argument", "checks need a branching algorithm (qcol, qrow, dyn3)");
  return o.algo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical and q-weighted Robinson-Schensted insertion with exact weights", "qgrowth"};
  app.require_subcommand(1);
  Options o;

  auto algo_opt = [&o](CLI::App* sub, const std::string& dflt) {
    o.algo = dflt;
    sub->add_option("--algo", o.algo, "col, row, qcol, qrow or dyn3")->capture_default_str();
  };

  auto* insert = app.add_subcommand("insert", "insert one letter into a tableau");
  insert->add_option("--algo", o.algo, "col, row, qcol, qrow or dyn3")->required();
  insert->add_option("--tableau", o.tableau, "tableau rows as JSON, e.g. [[1,1,3],[2]]");
  insert->add_option("--ell", o.ell, "alphabet bound (default: largest entry)");
  insert->add_option("--letter", o.letter, "letter to insert")->required();

  auto* word = app.add_subcommand("word", "insert a word, producing tableau pairs");
  word->add_option("--algo", o.algo, "col, row, qcol, qrow or dyn3")->required();
  word->add_option("--word", o.word, "letters, e.g. 31342, 3,1,3 or [3,1,3]")->required();
  word->add_option("--ell", o.ell, "alphabet bound (default: largest letter)");
  word->add_flag("--unmerged", o.unmerged, "merge equal pairs only at the end");

  auto* growth = app.add_subcommand("growth", "growth diagram of a permutation");
  growth->add_option("--algo", o.algo, "col, qcol or qrow")->required();
  growth->add_option("--perm", o.perm, "permutation in one-line notation")->required();
  growth->add_option("--format", o.format, "json or dot")->capture_default_str();

  auto* check = app.add_subcommand("check", "exhaustive verification");
  check->require_subcommand(1);
  auto* symmetry = check->add_subcommand("symmetry", "inverse permutation swaps the pair set");
  algo_opt(symmetry, "qcol");
  symmetry->add_option("--n", o.n, "permutation size")->capture_default_str();
  symmetry->add_option("--engine", o.engine, "insertion, growth or both")->capture_default_str();
  symmetry->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();

  auto* normalization = check->add_subcommand("normalization", "total weight 1 for every word");
  algo_opt(normalization, "qcol");
  normalization->add_option("--ell", o.ell, "alphabet bound")->required();
  normalization->add_option("--n", o.n, "word length")->capture_default_str();

  auto* conditions = check->add_subcommand("conditions", "sufficient conditions (i)-(iv) on all small triplets");
  algo_opt(conditions, "qcol");
  conditions->add_option("--n", o.n, "largest partition size")->capture_default_str();
  conditions->add_option("--ell", o.ell, "largest letter and level (default: n + 1)");

  auto* qzero = check->add_subcommand("qzero", "q = 0 recovers classical insertion");
  algo_opt(qzero, "qcol");
  qzero->add_option("--word", o.word, "single word (default: every word in [ell]^n)");
  qzero->add_option("--ell", o.ell, "alphabet bound");
  qzero->add_option("--n", o.n, "word length when sweeping")->capture_default_str();

  auto* numeric = check->add_subcommand("numeric", "nonnegative weights summing to 1 at a rational q");
  algo_opt(numeric, "qcol");
  numeric->add_option("--q", o.q, "exact rational in (0,1), e.g. 1/2")->capture_default_str();
  numeric->add_option("--n", o.n, "permutation size")->capture_default_str();

  auto* duality = check->add_subcommand("duality", "P_col(w) = P_row(reversed w)");
  duality->add_option("--ell", o.ell, "alphabet bound")->required();
  duality->add_option("--n", o.n, "word length")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return usage;
  }

  try {
    if (insert->parsed()) return cmd_insert(o, out);
    if (word->parsed()) return cmd_word(o, out);
    if (growth->parsed()) return cmd_growth(o, out);
    if (symmetry->parsed())
      return emit_report(out, check_symmetry(branching_algo(o), o.n, engine_by_name(o.engine), o.jobs));
    if (normalization->parsed()) return emit_report(out, check_normalization(branching_algo(o), o.ell, o.n));
    if (conditions->parsed()) {
      const auto rule = rule_by_name(branching_algo(o));
      return emit_report(out, to_check_report(check_conditions(rule, o.n, o.ell > 0 ? o.ell : o.n + 1)));
    }
    if (qzero->parsed()) {
      if (!o.word.empty()) return emit_report(out, check_q_zero(branching_algo(o), parse_word(o.word, o.ell)));
      return emit_report(out, check_q_zero_all(branching_algo(o), o.ell > 0 ? o.ell : 2, o.n));
    }
    if (numeric->parsed()) return emit_report(out, check_numeric(branching_algo(o), parse_q(o.q), o.n));
    if (duality->parsed()) return emit_report(out, check_duality(o.ell, o.n));
  } catch (const InputError& e) {
    err << "error: " << e.kind << ": " << e.what() << "\n";
    return usage;
  } catch (const LetterOutOfRange& e) {
    err << "error: letter out of range: " << e.what() << "\n";
    return usage;
  } catch (const NotAPermutation& e) {
    err << "error: not a permutation: " << e.what() << "\n";
    return usage;
  } catch (const ValidationError& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid argument: " << e.what() << "\n";
    return usage;
  }
  err << "error: usage: no command given\n";
  return usage;
}

}  // namespace qgrowth::cli
