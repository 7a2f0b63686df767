#pragma once

/// Command-line front end. Every capability of the library is exposed as a
/// subcommand on one binary; run() is stream-parameterized so the test
/// suite can drive it in-process and pin golden transcripts.
///
/// Exit codes: 0 success, 1 input or usage error, 2 failed internal check.

#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotmod/arith.hpp"
#include "knotmod/bracket.hpp"
#include "knotmod/common.hpp"
#include "knotmod/diagram.hpp"
#include "knotmod/laurent.hpp"
#include "knotmod/modular.hpp"
#include "knotmod/scan.hpp"

namespace knotmod::cli {

using Json = nlohmann::ordered_json;

namespace detail {

/// Big integers render as JSON numbers when they fit, strings otherwise.
inline Json json_big(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

inline void emit(std::ostream& out, bool as_json, const Json& j,
                 const std::string& text) {
  if (as_json)
    out << j.dump() << "\n";
  else
    out << text;
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Kauffman brackets, Jones polynomials, and modular "
               "triviality of knot diagrams"};
  app.name("knotmod");
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit structured output");

  std::string pd_bracket;
  auto* cmd_bracket =
      app.add_subcommand("bracket", "Kauffman bracket of a diagram");
  cmd_bracket->add_option("--pd", pd_bracket, "PD code")->required();

  std::string pd_jones;
  long long jones_mod = 0;
  auto* cmd_jones = app.add_subcommand("jones", "Jones polynomial");
  cmd_jones->add_option("--pd", pd_jones, "PD code")->required();
  auto* opt_mod =
      cmd_jones->add_option("--mod", jones_mod, "reduce coefficients mod n");

  std::string pd_triviality;
  auto* cmd_triviality = app.add_subcommand(
      "triviality", "moduli n for which the knot is n-trivial");
  cmd_triviality->add_option("--pd", pd_triviality, "PD code")->required();

  std::string pd_construct;
  long long construct_n = 0, construct_k = 0;
  bool emit_pd = false;
  auto* cmd_construct = app.add_subcommand(
      "construct", "power V^(n^(k-1)) of an n-trivial knot, 1 mod n^k");
  cmd_construct->add_option("--pd", pd_construct, "PD code")->required();
  cmd_construct->add_option("--n", construct_n, "triviality modulus")
      ->required();
  cmd_construct->add_option("--k", construct_k, "power index")->required();
  cmd_construct->add_flag("--emit-pd", emit_pd,
                          "also print the repeated connected-sum diagram");

  std::vector<std::string> pd_consum;
  auto* cmd_consum =
      app.add_subcommand("consum", "connected sum of two diagrams");
  cmd_consum->add_option("--pd", pd_consum, "PD codes of both summands")
      ->expected(2);

  std::string table_path;
  long long scan_n = 0;
  long long scan_cap = 12;
  auto* cmd_scan =
      app.add_subcommand("scan", "n-triviality scan over a knot table");
  auto* opt_table = cmd_scan->add_option(
      "--table", table_path, "CSV table (defaults to KNOTMOD_TABLE)");
  cmd_scan->add_option("--n", scan_n, "triviality modulus")->required();
  cmd_scan->add_option("--max-crossings", scan_cap, "crossing cap");

  auto* cmd_arith =
      app.add_subcommand("arith", "number-theoretic helper checks");
  cmd_arith->require_subcommand(1);
  long long leg_p = 0, leg_k = 0;
  auto* cmd_legendre = cmd_arith->add_subcommand(
      "legendre", "valuation of k! at a prime p");
  cmd_legendre->add_option("--p", leg_p, "prime base")->required();
  cmd_legendre->add_option("--k", leg_k, "factorial argument")->required();
  long long bin_n = 0, bin_k = 0;
  auto* cmd_binome = cmd_arith->add_subcommand(
      "binome", "divisibility of C(n^(k-1), i) by n^(k-i)");
  cmd_binome->add_option("--n", bin_n, "base")->required();
  cmd_binome->add_option("--k", bin_k, "exponent")->required();

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return 1;
  }

  try {
    if (app.got_subcommand(cmd_bracket)) {
      const LaurentPoly b = kauffman_bracket(parse_pd(pd_bracket));
      detail::emit(out, as_json, Json{{"bracket", render(b)}},
                   render(b) + "\n");
      return 0;
    }

    if (app.got_subcommand(cmd_jones)) {
      const LaurentPoly v = jones(parse_pd(pd_jones));
      if (opt_mod->count() > 0) {
        const LaurentPoly r = reduce_mod(v, jones_mod);
        detail::emit(out, as_json,
                     Json{{"mod", jones_mod}, {"residue", render(r)}},
                     render(r) + "\n");
      } else {
        detail::emit(out, as_json, Json{{"V", render(v)}}, render(v) + "\n");
      }
      return 0;
    }

    if (app.got_subcommand(cmd_triviality)) {
      const LaurentPoly v = jones(parse_pd(pd_triviality));
      const TrivialModuli tm = trivial_moduli(v);
      std::ostringstream text;
      text << "V: " << render(v) << "\n";
      Json j{{"V", render(v)}, {"all", tm.all}};
      j["moduli"] = Json::array();
      if (tm.all) {
        text << "moduli: all\n";
      } else if (tm.moduli.empty()) {
        text << "moduli: none\n";
      } else {
        text << "moduli:";
        for (const BigInt& m : tm.moduli) {
          text << " " << m;
          j["moduli"].push_back(detail::json_big(m));
        }
        text << "\n";
      }
      detail::emit(out, as_json, j, text.str());
      return 0;
    }

    if (app.got_subcommand(cmd_construct)) {
      const Diagram d = parse_pd(pd_construct);
      const LaurentPoly v = jones(d);
      const LaurentPoly power = construct_power(v, construct_n, construct_k);
      const BigInt exponent =
          knotmod::detail::int_pow(construct_n, construct_k - 1);
      const BigInt modulus = knotmod::detail::int_pow(construct_n, construct_k);
      const LaurentPoly residue = reduce_mod(power, modulus);
      std::ostringstream text;
      text << "exponent: " << exponent << "\n";
      text << "modulus: " << modulus << "\n";
      text << "power: " << render(power) << "\n";
      text << "residue: " << render(residue) << "\n";
      Json j{{"n", construct_n},
             {"k", construct_k},
             {"exponent", detail::json_big(exponent)},
             {"modulus", detail::json_big(modulus)},
             {"power", render(power)},
             {"residue", render(residue)}};
      if (emit_pd) {
        const Diagram rep = repeat_sum(d, exponent.convert_to<long>());
        text << "pd: " << render(rep) << "\n";
        j["pd"] = render(rep);
      }
      detail::emit(out, as_json, j, text.str());
      return 0;
    }

    if (app.got_subcommand(cmd_consum)) {
      const Diagram d1 = parse_pd(pd_consum[0]);
      const Diagram d2 = parse_pd(pd_consum[1]);
      const Diagram sum = connected_sum(d1, d2);
      const LaurentPoly v = jones(d1) * jones(d2);
      std::ostringstream text;
      text << "pd: " << render(sum) << "\n";
      text << "V: " << render(v) << "\n";
      detail::emit(out, as_json, Json{{"pd", render(sum)}, {"V", render(v)}},
                   text.str());
      return 0;
    }

    if (app.got_subcommand(cmd_scan)) {
      if (opt_table->count() == 0) {
        const char* env = std::getenv("KNOTMOD_TABLE");
        if (env == nullptr || *env == '\0')
          throw InputError(
              "no table path given (use --table or set KNOTMOD_TABLE)");
        table_path = env;
      }
      const TableLoad load = load_table(table_path);
      const ScanReport report = scan_table(load.entries, scan_n,
                                           static_cast<std::size_t>(scan_cap));
      std::map<std::string, std::size_t> crossings;
      for (const TableEntry& e : load.entries)
        crossings[e.name] = e.crossing_count;

      std::vector<SkippedRow> skipped = load.skipped;
      skipped.insert(skipped.end(), report.skipped.begin(),
                     report.skipped.end());

      std::ostringstream text;
      text << "modulus: " << report.modulus << "\n";
      text << "scanned: " << report.scanned << "\n";
      text << "hits: " << report.hits.size() << "\n";
      Json j{{"modulus", report.modulus}, {"scanned", report.scanned}};
      j["hits"] = Json::array();
      for (const ScanHit& h : report.hits) {
        text << "hit: " << h.name << " crossings=" << crossings[h.name]
             << "\n";
        j["hits"].push_back(
            Json{{"name", h.name}, {"crossings", crossings[h.name]}});
      }
      text << "skipped: " << skipped.size() << "\n";
      j["skipped"] = Json::array();
      for (const SkippedRow& s : skipped) {
        text << "skip: " << s.name << " (" << s.reason << ")\n";
        j["skipped"].push_back(Json{{"name", s.name}, {"reason", s.reason}});
      }
      detail::emit(out, as_json, j, text.str());
      return 0;
    }

    if (cmd_arith->got_subcommand(cmd_legendre)) {
      const long long v = factorial_valuation(leg_k, leg_p);
      std::ostringstream text;
      text << "v_" << leg_p << "(" << leg_k << "!) = " << v << "\n";
      detail::emit(out, as_json,
                   Json{{"p", leg_p}, {"k", leg_k}, {"valuation", v}},
                   text.str());
      return 0;
    }

    if (cmd_arith->got_subcommand(cmd_binome)) {
      if (bin_k < 2) throw InputError("binome parameter k must be at least 2");
      std::ostringstream text;
      Json j{{"n", bin_n}, {"k", bin_k}};
      j["witnesses"] = Json::array();
      for (long long i = 1; i <= bin_k - 1; ++i) {
        const ArithWitness w = binome_divisibility(bin_n, bin_k, i);
        const BigInt top = knotmod::detail::int_pow(bin_n, bin_k - 1);
        text << "i=" << i << ": C(" << top << "," << i << ") = "
             << w.binomial_value << ", requires " << w.required_divisor
             << ", " << (w.divides ? "divides" : "does not divide") << "\n";
        j["witnesses"].push_back(Json{{"i", i},
                                      {"binomial",
                                       detail::json_big(w.binomial_value)},
                                      {"required",
                                       detail::json_big(w.required_divisor)},
                                      {"divides", w.divides}});
      }
      detail::emit(out, as_json, j, text.str());
      return 0;
    }

    err << "error: no subcommand selected\n";
    return 1;
  } catch (const InternalCheckError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace knotmod::cli
