// horogrowth: growth series calculator and verifier for G_m = Z^m *_{g -> g^3}.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "horogrowth/appendix.hpp"
#include "horogrowth/errors.hpp"
#include "horogrowth/verify.hpp"

using namespace horogrowth;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitBudgetOrParse = 3;

enum class Output { Plain, Json, Latex };

const std::map<std::string, Output> kOutputs{{"plain", Output::Plain}, {"json", Output::Json}, {"latex", Output::Latex}};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

LatticeVector parse_vector(const std::string& text) {
  LatticeVector v;
  std::size_t i = 0;
  while (i <= text.size()) {
    const std::size_t comma = std::min(text.find(',', i), text.size());
    const std::string item = text.substr(i, comma - i);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got \"" + item + "\"", i);
    }
    if (used != item.size()) throw ParseError("trailing characters in \"" + item + "\"", i + used);
    v.push_back(value);
    i = comma + 1;
  }
  return v;
}

struct SeriesArgs {
  std::string kind = "sub";
  unsigned m = 1;
  unsigned terms = 10;
  unsigned n = 1;
  bool rational = false;
};

int cmd_series(const SeriesArgs& a, Output out) {
  std::optional<IntPolynomial> poly;
  RationalFunction f;
  if (a.kind == "W") {
    poly = suffix_poly(a.m);
  } else if (a.kind == "V") {
    poly = cap_poly(a.m);
  } else if (a.kind == "R") {
    f = prefix_suffix_series(a.m);
  } else if (a.kind == "P") {
    f = positive_series(a.m);
  } else if (a.kind == "sub") {
    f = subgroup_series(a.m);
  } else if (a.kind == "full") {
    f = full_series(a.m);
  } else if (a.kind == "X0") {
    f = level_series(a.m).X_0;
  } else if (a.kind == "Xm1") {
    f = level_series(a.m).X_minus1;
  } else if (a.kind == "B") {
    f = relative_growth_series(a.m, a.n);
  } else {
    throw DomainError("unknown series kind \"" + a.kind + "\"");
  }
  if (poly) f = RationalFunction(*poly);
  const SeriesPrefix prefix = series_prefix(f, a.terms);

  switch (out) {
    case Output::Json: {
      Json j;
      j["kind"] = a.kind;
      j["m"] = a.m;
      if (a.kind == "B") j["n"] = a.n;
      j["rational"] = to_json(f);
      j["series"] = to_json(prefix);
      print_json(j);
      break;
    }
    case Output::Latex:
      std::cout << (poly ? to_latex(*poly) : to_latex(f)) << '\n';
      break;
    case Output::Plain:
      if (poly) {
        std::cout << to_string(*poly) << '\n';
      } else if (a.rational) {
        std::cout << to_string(f) << '\n';
      } else {
        std::cout << to_string(prefix) << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_spell(unsigned m, const std::string& vector, Output out) {
  const LatticeVector v = parse_vector(vector);
  if (v.size() != m) {
    throw ParseError("vector has " + std::to_string(v.size()) + " entries, expected m = " + std::to_string(m), 0);
  }
  const Word w = spell(v);
  if (out == Output::Json) {
    Json j;
    j["m"] = m;
    j["vector"] = v;
    j["word"] = format_word(w);
    j["compact"] = format_word_compact(w);
    j["length"] = word_length(v);
    print_json(j);
  } else {
    std::cout << format_word_compact(w) << " (length " << word_length(v) << ")\n";
  }
  return kExitOk;
}

int cmd_eval(unsigned m, const std::string& text, Output out) {
  const Word w = parse_word(text, m);
  const GroupElement g = eval_word(w);
  if (out == Output::Json) {
    Json j = to_json(g);
    j["normal_form"] = to_string(g);
    j["tau"] = tau(w);
    j["max_height"] = max_height(w);
    j["horocyclic"] = is_horocyclic(g);
    print_json(j);
  } else {
    std::cout << to_string(g) << '\n';
  }
  return kExitOk;
}

void print_report(const VerifyReport& r, Output out) {
  if (out == Output::Json) {
    print_json(to_json(r));
    return;
  }
  for (const auto& c : r.checks) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
  for (const auto& c : r.diagnostics) std::cout << "NOTE " << c.name << ": " << c.detail << '\n';
  std::cout << (r.ok() ? "suite " + r.suite + " passed" : "suite " + r.suite + " FAILED") << '\n';
}

int cmd_verify(const std::string& suite, std::optional<unsigned> m, std::optional<unsigned> radius, Output out) {
  VerifyReport r;
  if (suite == "appendix") {
    r = verify_appendix(m.value_or(10));
  } else if (suite == "bfs") {
    const unsigned mm = m.value_or(1);
    r = verify_bfs(mm, radius.value_or(mm == 1 ? 10 : (mm == 2 ? 7 : 6)));
  } else if (suite == "language") {
    r = verify_language(m.value_or(2));
  } else if (suite == "census") {
    const unsigned mm = m.value_or(1);
    r = verify_census(mm, radius.value_or(static_cast<unsigned>(level_fit_horizon(mm))));
  } else if (suite == "gfsa") {
    r = verify_gfsa();
  } else {
    throw DomainError("unknown suite \"" + suite + "\"");
  }
  print_report(r, out);
  return r.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_census(unsigned m, std::optional<unsigned> rmax, Output out) {
  const std::size_t horizon = rmax.value_or(static_cast<unsigned>(level_fit_horizon(m)));
  const CosetCensus census = coset_census(m, horizon);
  std::optional<LevelSeries> fit;
  std::string fit_error;
  try {
    fit = horizon >= level_fit_horizon(m) ? fit_level_series(census) : level_series(m);
  } catch (const FitError& e) {
    fit_error = e.what();
  }

  if (out == Output::Json) {
    Json j;
    j["m"] = m;
    j["rmax"] = horizon;
    j["chi"] = census_to_json(census);
    if (fit) {
      j["p_hat"] = to_json(fit->p_hat);
      j["q_hat"] = to_json(fit->q_hat);
      j["certified_to"] = fit->certified_to;
    } else {
      j["fit_error"] = fit_error;
    }
    print_json(j);
  } else {
    for (long level : census.levels()) {
      std::cout << "chi(" << level << ", 0.." << horizon << ") =";
      for (const auto& c : census.column(level)) std::cout << ' ' << c;
      std::cout << '\n';
    }
    if (fit) {
      std::cout << "p_hat = " << fit->p_hat << "\nq_hat = " << fit->q_hat << "\ncertified through x^"
                << fit->certified_to << '\n';
    } else {
      std::cout << "fit failed: " << fit_error << '\n';
    }
  }
  return fit ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact growth series and geodesics for Z^m *_{g -> g^3}"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "plain";
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"plain", "json", "latex"}))
      ->capture_default_str();

  SeriesArgs series;
  auto* s = app.add_subcommand("series", "Rational form or series prefix of a growth series");
  s->add_option("--kind", series.kind, "W, V, R, P, sub, full, X0, Xm1 or B")
      ->check(CLI::IsMember({"W", "V", "R", "P", "sub", "full", "X0", "Xm1", "B"}))
      ->capture_default_str();
  s->add_option("--m", series.m, "Dimension")->check(CLI::Range(1u, 64u))->capture_default_str();
  s->add_option("--terms", series.terms, "Highest power in the series prefix")->capture_default_str();
  s->add_option("--n", series.n, "Level depth for kind B")->capture_default_str();
  s->add_flag("--rational", series.rational, "Print the rational form instead of the series");

  unsigned m = 1;
  std::string vector, word;
  auto* sp = app.add_subcommand("spell", "Geodesic normal form of a^v");
  sp->add_option("--m", m, "Dimension")->check(CLI::Range(1u, 64u))->capture_default_str();
  sp->add_option("--vector", vector, "Comma-separated integers")->required();

  auto* ev = app.add_subcommand("eval", "Evaluate a word");
  ev->add_option("--m", m, "Dimension")->check(CLI::Range(1u, 64u))->capture_default_str();
  ev->add_option("--word", word, "Tokens t T a<i> A<i>, aliases a b c for m <= 3, ^k exponents")->required();

  std::string suite;
  std::optional<unsigned> vm, radius;
  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  vf->add_option("--suite", suite, "appendix, bfs, language, census or gfsa")
      ->required()
      ->check(CLI::IsMember({"appendix", "bfs", "language", "census", "gfsa"}));
  vf->add_option("--m", vm, "Dimension")->check(CLI::Range(1u, 64u));
  vf->add_option("--radius", radius, "BFS radius or census horizon");

  std::optional<unsigned> rmax;
  unsigned cm = 1;
  auto* cs = app.add_subcommand("census", "Coset census chi and level-series fit");
  cs->add_option("--m", cm, "Dimension")->check(CLI::Range(1u, 64u))->capture_default_str();
  cs->add_option("--rmax", rmax, "Census horizon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBudgetOrParse;
  }

  const Output out = kOutputs.at(output);
  try {
    if (*s) return cmd_series(series, out);
    if (*sp) return cmd_spell(m, vector, out);
    if (*ev) return cmd_eval(m, word, out);
    if (*vf) return cmd_verify(suite, vm, radius, out);
    if (*cs) return cmd_census(cm, rmax, out);
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kExitBudgetOrParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitBudgetOrParse;
  } catch (const FitError& e) {
    std::cerr << "fit error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudgetOrParse;
  }
  return kExitOk;
}
