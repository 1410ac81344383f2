#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <thread>

#include "fqt/error.hpp"
#include "fqt/factor.hpp"
#include "fqt/text.hpp"
#include "report.hpp"

namespace fqt::cli {
namespace {

struct Config {
  std::uint32_t p = 3;
  std::uint32_t k = 1;
  std::string format = "json";
  std::uint64_t seed = 20240601;
  std::size_t deg_bound = 2;
};

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FQT_THREADS")) {
    char* end = nullptr;
    unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) n = std::min<unsigned long>(n, cap);
  }
  return n;
}

class Emitter {
 public:
  Emitter(const Config& config, std::ostream& out) : json_(config.format == "json"), out_(out) {}

  void emit(const json& report, const std::string& text) {
    if (json_) {
      out_ << report.dump(2) << '\n';
    } else {
      out_ << text;
    }
  }

 private:
  bool json_;
  std::ostream& out_;
};

std::string join(const std::vector<Place>& places) {
  std::string s = "{";
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (i) s += ", ";
    s += format(places[i]);
  }
  return s + "}";
}

RatFunc random_fraction(const FieldCtx& field, std::mt19937_64& rng, std::size_t max_degree) {
  auto random_poly = [&](bool nonzero) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::uniform_int_distribution<std::uint32_t> coef(0, field.q() - 1);
    for (;;) {
      std::size_t d = deg(rng);
      std::vector<Fq> c(d + 1);
      for (Fq& x : c) x = field.element(coef(rng));
      Poly f(field, std::move(c));
      if (!nonzero || !f.is_zero()) return f;
    }
  };
  return RatFunc(random_poly(true), random_poly(true));
}

int cmd_selftest(const FieldCtx& field, const Config& config, Emitter& emit) {
  std::mt19937_64 rng(config.seed);
  json checks = json::array();
  bool all_ok = true;
  std::string text;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
    text += (ok ? "ok    " : "FAIL  ") + name + (detail.empty() ? "" : ": " + detail) + "\n";
    all_ok = all_ok && ok;
  };

  {
    std::uniform_int_distribution<std::uint32_t> coef(0, field.q() - 1);
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      Fq a = field.element(coef(rng)), b = field.element(coef(rng)), c = field.element(coef(rng));
      ok = field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c)) &&
           field.pow(a, field.q()) == a && (a.code == 0 || field.mul(a, field.inv(a)) == field.one());
    }
    record("field axioms", ok, "");
  }
  {
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      RatFunc x = random_fraction(field, rng, 4);
      std::int64_t sum = 0;
      for (const Place& v : support(x)) sum += *valuation(x, v) * v.degree();
      sum += *valuation(x, Place::infinity());
      ok = sum == 0;
    }
    record("product formula", ok, "");
  }
  {
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
      if (!reciprocity_check(random_fraction(field, rng, 3), random_fraction(field, rng, 3))) {
        ++failures;
      }
    }
    record("hilbert reciprocity", failures == 0, std::to_string(failures) + " failures");
  }
  {
    bool ok = true;
    std::string detail;
    for (const Poly& f : monic_irreducibles(field, 1)) {
      WitnessPair w = witness_pair(Place::trusted(f));
      ok = ok && w.delta.places.size() == 2 && w.delta.contains(w.target) &&
           w.delta.contains(Place::infinity()) && psi_holds(w.pair.a, w.pair.b).holds;
    }
    record("degree-one witnesses", ok, detail);
  }
  {
    unsigned with = build_universal_definition(field, false).report.total;
    unsigned without = build_universal_definition(field, true).report.total;
    record("quantifier totals", with == 89 && without == 90,
           std::to_string(with) + ", " + std::to_string(without));
  }
  emit.emit({{"q", field.q()}, {"seed", config.seed}, {"ok", all_ok}, {"checks", checks}}, text);
  return all_ok ? kExitOk : kExitDomain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Hilbert symbols, ramification sets and the universal definition of F_q[t]", "fqt"};
  app.require_subcommand(1);
  app.add_option("--p", config.p, "field characteristic (odd prime)");
  app.add_option("--k", config.k, "extension degree, q = p^k")->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", config.seed, "seed for sampled checks");
  app.add_option("--deg-bound", config.deg_bound, "degree bound for verify")
      ->check(CLI::NonNegativeNumber);

  std::string a_text, b_text, place_text, g_text, f_text;
  std::size_t scan_degree = 0;
  bool empty_params = false;

  CLI::App* symbol = app.add_subcommand("symbol", "Hilbert symbol (a, b)_v with tame intermediates");
  symbol->add_option("--a", a_text)->required();
  symbol->add_option("--b", b_text)->required();
  symbol->add_option("--place", place_text)->required();

  CLI::App* legendre_cmd = app.add_subcommand("legendre", "Legendre symbol (g / f)");
  legendre_cmd->add_option("--g", g_text)->required();
  legendre_cmd->add_option("--f", f_text)->required();

  CLI::App* delta = app.add_subcommand("delta", "ramification set of H_{a,b}");
  delta->add_option("--a", a_text)->required();
  delta->add_option("--b", b_text)->required();
  delta->add_option("--scan-degree", scan_degree, "also scan finite places up to this degree");

  CLI::App* witness = app.add_subcommand("witness", "pair (a, b) in D with ramification {p, inf}");
  witness->add_option("--place", place_text)->required();

  CLI::App* verify = app.add_subcommand("verify", "bounded check of the main theorem");

  CLI::App* formula = app.add_subcommand("formula", "assemble the universal definition");
  formula->add_flag("--empty-params", empty_params, "eliminate the parameter z via alpha");
  formula->add_flag("--sexpr-only", "print only the formula");

  CLI::App* selftest = app.add_subcommand("selftest", "quick internal consistency checks");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  FieldPtr field;
  try {
    field = make_field(config.p, config.k);
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
  const FieldCtx& F = *field;
  Emitter emit(config, out);

  try {
    if (symbol->parsed()) {
      RatFunc a = parse_ratfunc(F, a_text), b = parse_ratfunc(F, b_text);
      Place v = parse_place(F, place_text);
      TameSymbol s = tame_symbol(a, b, v);
      emit.emit(symbol_json(a, b, v, s),
                "(" + format(a) + ", " + format(b) + ")_" + format(v) + " = " +
                    std::to_string(s.value.value()) + "  [m = " + std::to_string(s.m) +
                    ", n = " + std::to_string(s.n) + ", unit residue " +
                    format(s.unit_residue) + "]\n");
      return kExitOk;
    }
    if (legendre_cmd->parsed()) {
      Poly g = parse_poly(F, g_text), f = parse_poly(F, f_text);
      SymbolValue value = legendre(g, f);
      emit.emit({{"g", format(g)}, {"f", format(f)}, {"value", value.value()}},
                "(" + format(g) + " / " + format(f) + ") = " + std::to_string(value.value()) +
                    "\n");
      return kExitOk;
    }
    if (delta->parsed()) {
      RatFunc a = parse_ratfunc(F, a_text), b = parse_ratfunc(F, b_text);
      RamificationSet set = delta_set(a, b, {scan_degree});
      bool rec = reciprocity_check(a, b);
      emit.emit(delta_json(set, rec),
                "Delta(" + format(a) + ", " + format(b) + ") = " + join(set.places) +
                    (rec ? "" : "  [reciprocity FAILED]") + "\n");
      return rec ? kExitOk : kExitDomain;
    }
    if (witness->parsed()) {
      Place p = parse_place(F, place_text);
      WitnessPair w = witness_pair(p);
      emit.emit(witness_json(w), "a = " + format(w.pair.a) + ", b = " + format(w.pair.b) +
                                     ", d = " + format(w.d) + ", Delta = " +
                                     join(w.delta.places) + "\n");
      return kExitOk;
    }
    if (verify->parsed()) {
      VerifyOptions options;
      options.threads = worker_count();
      TheoremReport r = verify_theorem(F, config.deg_bound, options);
      std::string text = "q = " + std::to_string(r.q) + ", degree bound " +
                         std::to_string(r.deg_bound) + ": " + std::to_string(r.members_checked) +
                         " members, " + std::to_string(r.nonmembers_checked) +
                         " non-members, " + std::to_string(r.pairs_used) + " pairs, " +
                         std::to_string(r.counterexamples.size()) + " counterexamples\n";
      for (const Counterexample& c : r.counterexamples) {
        text += "  x = " + c.x + ", (a, b) = (" + c.a + ", " + c.b + "): " + c.reason + "\n";
      }
      emit.emit(verify_json(r), text);
      return r.counterexamples.empty() ? kExitOk : kExitDomain;
    }
    if (formula->parsed()) {
      UniversalDefinition def = build_universal_definition(F, empty_params);
      if (formula->count("--sexpr-only") > 0) {
        out << to_sexpr(def.formula) << '\n';
        return kExitOk;
      }
      std::string text = to_sexpr(def.formula) + "\n\n";
      for (const QuantifierItem& item : def.report.items) {
        text += "  " + item.name + ": " + std::to_string(item.count) + "\n";
      }
      text += "  total: " + std::to_string(def.report.total) + " (" +
              to_string(def.report.prenex_class) + ")\n";
      emit.emit(formula_json(def), text);
      return def.report.consistent() ? kExitOk : kExitDomain;
    }
    if (selftest->parsed()) return cmd_selftest(F, config, emit);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace fqt::cli
