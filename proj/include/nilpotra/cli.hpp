/// @file cli.hpp
/// @brief Command-line driver: normal forms, Hall-basis dumps,
///        automorphism algebra, and the verification suites, in plain
///        text or JSON.
///
/// run_cli is a plain function over (args, out, err) so tests can drive
/// the full command surface in-process.  Exit codes: 0 success, 2
/// usage/parse errors, 3 resource caps, 4 domain preconditions (which
/// includes feeding a non-automorphism to invert or ia-level).

#pragma once

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "common.hpp"
#include "element.hpp"
#include "lemma_lab.hpp"
#include "morphism.hpp"
#include "word.hpp"

namespace nilpotra {

struct RunConfig {
  int rank = 2;
  int cls = 2;
  std::uint64_t seed = 0;
  long long trials = 100;
  std::string format = "text";
  std::int64_t max_word_len = kDefaultMaxWordLen;
  std::int64_t max_witt = 1000000;
  bool counts = false;
};

namespace detail {

inline std::string trimmed(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), 0);
  }
}

/// Elements are accepted either as word text or as normal-form JSON
/// (self-describing rank/class).
inline NilpotentElement read_element(const std::string& text,
                                     const RunConfig& cfg) {
  const std::string t = trimmed(text);
  if (!t.empty() && t.front() == '{')
    return element_from_json(parse_json(t), Int(cfg.max_witt));
  ContextPtr ctx = GroupContext::get(cfg.rank, cfg.cls, Int(cfg.max_witt));
  return collect(parse_word(text, cfg.rank), ctx, cfg.max_word_len);
}

/// Endomorphisms are accepted as "xi -> word" clause text or JSON.
inline Endomorphism read_endo(const std::string& text, const RunConfig& cfg) {
  const std::string t = trimmed(text);
  if (!t.empty() && t.front() == '{') return endo_from_json(parse_json(t));
  ContextPtr ctx = GroupContext::get(cfg.rank, cfg.cls, Int(cfg.max_witt));
  return parse_endo(text, ctx, cfg.max_word_len);
}

inline void print_element(const NilpotentElement& a, const RunConfig& cfg,
                          std::ostream& out) {
  if (cfg.format == "json") {
    out << element_to_json(a).dump(2) << "\n";
    return;
  }
  if (a.coords.empty()) {
    out << "(identity)\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [pos, e] : a.coords)
    width = std::max(width, format_tree(a.ctx->basis().at(pos)).size());
  for (const auto& [pos, e] : a.coords) {
    std::string name = format_tree(a.ctx->basis().at(pos));
    name.resize(width, ' ');
    out << name << "  " << a.ctx->basis().weight_of(pos) << "  " << e.str()
        << "\n";
  }
}

inline void print_endo(const Endomorphism& f, const RunConfig& cfg,
                       std::ostream& out) {
  if (cfg.format == "json")
    out << endo_to_json(f).dump(2) << "\n";
  else
    out << format_endo(f) << "\n";
}

/// Scalar params of a report rendered as "k=v" pairs for text mode.
inline std::string render_params(const Json& params) {
  std::string s;
  for (const auto& [key, value] : params.items()) {
    if (value.is_array() || value.is_object()) continue;
    if (!s.empty()) s += " ";
    s += key + "=" + (value.is_string()
                          ? value.get<std::string>()
                          : value.dump());
  }
  return s;
}

inline int cmd_nf(const std::string& word_text, const RunConfig& cfg,
                  std::ostream& out) {
  print_element(read_element(word_text, cfg), cfg, out);
  return 0;
}

inline int cmd_hall(int n, int c, const RunConfig& cfg, std::ostream& out) {
  ContextPtr ctx = GroupContext::get(n, c, Int(cfg.max_witt));
  std::vector<Int> counts;
  for (int m = 1; m <= c; ++m) counts.push_back(witt_count(n, m));
  if (cfg.format == "json") {
    Json j;
    j["rank"] = n;
    j["class"] = c;
    Json jc = Json::array();
    for (const Int& w : counts) jc.push_back(w.str());
    j["counts"] = std::move(jc);
    if (!cfg.counts) {
      Json basis = Json::array();
      for (int pos = 0; pos < ctx->basis().size(); ++pos)
        basis.push_back(
            Json{{"commutator", format_tree(ctx->basis().at(pos))},
                 {"weight", ctx->basis().weight_of(pos)}});
      j["basis"] = std::move(basis);
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (cfg.counts) {
    std::string line;
    for (const Int& w : counts) {
      if (!line.empty()) line += ",";
      line += w.str();
    }
    out << line << "\n";
    return 0;
  }
  for (int pos = 0; pos < ctx->basis().size(); ++pos)
    out << ctx->basis().weight_of(pos) << "  "
        << format_tree(ctx->basis().at(pos)) << "\n";
  return 0;
}

inline int cmd_verify(const std::string& suite, const RunConfig& cfg,
                      std::ostream& out) {
  std::vector<std::string> ids;
  if (suite == "all")
    ids = suite_ids();
  else
    ids.push_back(suite);
  const VerifyConfig vcfg{cfg.seed, cfg.trials};
  long long passed = 0;
  long long failed = 0;
  long long asserted_failures = 0;
  Json all_reports = Json::array();
  for (const std::string& id : ids) {
    const std::vector<CheckReport> reports = run_suite(id, vcfg);
    for (const CheckReport& r : reports) {
      if (r.pass)
        ++passed;
      else {
        ++failed;
        if (suite_asserted(id)) ++asserted_failures;
      }
      if (cfg.format == "json") {
        all_reports.push_back(r.to_json());
      } else {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        const std::string p = render_params(r.params);
        if (!p.empty()) out << " " << p;
        out << " (cases=" << r.cases << ", millis=" << r.millis << ")\n";
        if (!r.pass)
          for (const Json& f : r.failures) out << "       " << f.dump() << "\n";
      }
    }
  }
  if (cfg.format == "json") {
    Json j;
    j["reports"] = std::move(all_reports);
    j["summary"] = Json{{"passed", passed},
                        {"failed", failed},
                        {"asserted_failures", asserted_failures}};
    out << j.dump(2) << "\n";
  } else {
    out << "checks passed: " << passed << ", failed: " << failed << "\n";
  }
  return asserted_failures == 0 ? 0 : 1;
}

}  // namespace detail

/// Runs one command; args exclude the program name.  Returns the exit
/// code and writes all output to the given streams.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"computation kit for finitely generated free nilpotent groups"};
  app.name("nilpotra");
  app.fallthrough(true);
  app.require_subcommand(1);
  app.add_option("-n,--rank", cfg.rank, "generator count (default 2)");
  app.add_option("-c,--class", cfg.cls, "nilpotency class (default 2)");
  app.add_option("--seed", cfg.seed, "random seed (default 0)");
  app.add_option("--trials", cfg.trials, "randomized trial count (default 100)");
  app.add_option("--format", cfg.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  auto* len_opt = app.add_option("--max-word-len", cfg.max_word_len,
                                 "cap on collected word length");
  app.add_option("--max-witt", cfg.max_witt, "cap on total Hall basis size");

  std::string nf_word;
  CLI::App* nf = app.add_subcommand("nf", "collect a word into normal form");
  nf->add_option("word", nf_word, "word in bracket grammar")->required();

  int hall_n = 2;
  int hall_c = 2;
  CLI::App* hall = app.add_subcommand("hall", "dump the Hall basis");
  hall->add_option("n", hall_n, "rank")->required();
  hall->add_option("c", hall_c, "class")->required();
  hall->add_flag("--counts", cfg.counts, "print the Witt count table only");

  CLI::App* aut = app.add_subcommand("aut", "endomorphism algebra");
  aut->require_subcommand(1);
  aut->fallthrough(true);
  std::string aut_f, aut_g, aut_word;
  CLI::App* aut_apply = aut->add_subcommand("apply", "apply a map to a word");
  aut_apply->add_option("endo", aut_f, "endomorphism")->required();
  aut_apply->add_option("word", aut_word, "word or normal-form JSON")
      ->required();
  CLI::App* aut_compose = aut->add_subcommand("compose", "f after g");
  aut_compose->add_option("f", aut_f, "outer map")->required();
  aut_compose->add_option("g", aut_g, "inner map")->required();
  CLI::App* aut_invert = aut->add_subcommand("invert", "invert an automorphism");
  aut_invert->add_option("endo", aut_f, "automorphism")->required();
  CLI::App* aut_check =
      aut->add_subcommand("check", "automorphism test (prints true/false)");
  aut_check->add_option("endo", aut_f, "endomorphism")->required();
  CLI::App* aut_ia = aut->add_subcommand("ia-level", "IA filtration level");
  aut_ia->add_option("endo", aut_f, "automorphism")->required();

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite,
                     "suite id or 'all' (see docs for the id list)");

  std::vector<std::string> argv_store;
  argv_store.push_back("nilpotra");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (len_opt->count() == 0) {
      if (const char* env = std::getenv("NILPOTRA_MAX_WORD_LEN")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0)
          throw parse_error("NILPOTRA_MAX_WORD_LEN is not a positive integer",
                            0);
        cfg.max_word_len = v;
      }
    }
    if (cfg.rank < 1 || cfg.cls < 1)
      throw domain_error("rank and class must be at least 1");
    if (cfg.max_word_len <= 0 || cfg.max_witt <= 0)
      throw domain_error("resource caps must be positive");

    if (nf->parsed()) return detail::cmd_nf(nf_word, cfg, out);
    if (hall->parsed()) return detail::cmd_hall(hall_n, hall_c, cfg, out);
    if (aut->parsed()) {
      if (aut_apply->parsed()) {
        const Endomorphism f = detail::read_endo(aut_f, cfg);
        RunConfig ecfg = cfg;
        ecfg.rank = f.ctx->rank();
        ecfg.cls = f.ctx->cls();
        const NilpotentElement a = detail::read_element(aut_word, ecfg);
        detail::print_element(apply(f, a), cfg, out);
        return 0;
      }
      if (aut_compose->parsed()) {
        detail::print_endo(
            compose(detail::read_endo(aut_f, cfg), detail::read_endo(aut_g, cfg)),
            cfg, out);
        return 0;
      }
      if (aut_invert->parsed()) {
        detail::print_endo(invert(detail::read_endo(aut_f, cfg)), cfg, out);
        return 0;
      }
      if (aut_check->parsed()) {
        out << (is_automorphism(detail::read_endo(aut_f, cfg)) ? "true"
                                                               : "false")
            << "\n";
        return 0;
      }
      if (aut_ia->parsed()) {
        out << ia_level(detail::read_endo(aut_f, cfg)) << "\n";
        return 0;
      }
    }
    if (verify->parsed()) {
      if (suite != "all") {
        const auto& ids = suite_ids();
        if (std::find(ids.begin(), ids.end(), suite) == ids.end()) {
          err << "error: unknown suite: " << suite << "\n";
          return 2;
        }
      }
      return detail::cmd_verify(suite, cfg, out);
    }
    err << "error: no command\n";
    return 2;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    err << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nilpotra
