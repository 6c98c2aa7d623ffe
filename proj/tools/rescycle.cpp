// command-line front end: batch verification, oracle queries, demo cases
#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rescycle/caseio.hpp"
#include "rescycle/errors.hpp"

namespace {

using namespace rescycle;

// 3 = parse > 2 = unsupported/fragment > 1 = mismatch > 0 = pass
int severity(ErrKind k) { return k == ErrKind::Parse ? 3 : 2; }

struct Overrides {
  std::string mode;
  int lift_bound = 0;
  long long seed = -1;
  std::string emit_dir;
  std::string format = "text";
};

void apply(const Overrides& o, Case& c) {
  if (!o.mode.empty()) c.mode = mode_from_string(o.mode);
  if (o.lift_bound > 0) c.options.lift_bound = o.lift_bound;
  if (o.seed >= 0) c.options.seed = static_cast<std::uint64_t>(o.seed);
  if (!o.emit_dir.empty()) c.options.emit_intermediates = o.emit_dir;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char ch : s)
    out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_') ? ch : '-';
  return out;
}

void emit_intermediates(const Case& c, const Report& r) {
  if (c.options.emit_intermediates.empty() || r.intermediates.empty()) return;
  namespace fs = std::filesystem;
  fs::path dir(c.options.emit_intermediates);
  fs::create_directories(dir);
  std::string stem = sanitize(c.name.empty() ? "case" : c.name);
  for (const auto& [key, value] : r.intermediates) {
    std::ofstream out(dir / (stem + "-" + sanitize(key) + ".txt"));
    out << value << "\n";
  }
}

struct Outcome {
  std::string text;
  int code = 0;
};

std::string error_text(const std::string& where, const Error& e, const std::string& format) {
  if (format == "text") return where + ": error: " + e.what() + "\n";
  nlohmann::json j;
  j["file"] = where;
  j["error"] = e.what();
  j["class"] = severity(e.kind()) == 3 ? "parse" : "unsupported";
  return j.dump(2) + "\n";
}

Outcome run_one(const std::string& path, const Overrides& o) {
  Outcome out;
  try {
    Case c = parse_case_file(path);
    apply(o, c);
    Report r = run_case(c);
    emit_intermediates(c, r);
    out.text = o.format == "text" ? render_report_text(r) : render_report_structured(c, r) + "\n";
    out.code = r.match ? 0 : 1;
  } catch (const Error& e) {
    out.code = severity(e.kind());
    out.text = error_text(path, e, o.format);
  } catch (const std::exception& e) {
    out.code = 2;
    out.text = path + ": error: " + std::string(e.what()) + "\n";
  }
  return out;
}

int run_report(const Case& c, const Overrides& o) {
  try {
    Report r = run_case(c);
    emit_intermediates(c, r);
    std::cout << (o.format == "text" ? render_report_text(r)
                                     : render_report_structured(c, r) + "\n");
    return r.match ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << error_text(c.name, e, "text");
    return severity(e.kind());
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"residue-current factorization of fundamental cycles, with an independent "
               "combinatorial oracle"};
  app.require_subcommand(1);
  Overrides o;

  auto* verify = app.add_subcommand("verify", "run case files and compare against the oracle");
  std::vector<std::string> files;
  verify->add_option("files", files, "case files (JSON)")->required();
  verify->add_option("--mode", o.mode, "override case mode (auto|ci|cm|universal|nonpure|demo)");
  verify->add_option("--lift-degree-bound", o.lift_bound, "degree bound for lifted chain maps");
  verify->add_option("--seed", o.seed, "seed for randomized internal checks");
  verify->add_option("--emit-intermediates", o.emit_dir, "write intermediate objects into DIR");
  verify->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json-like-structured"}));

  auto* cycle = app.add_subcommand("cycle", "print the oracle fundamental cycle of a case");
  std::string cycle_file;
  cycle->add_option("file", cycle_file, "case file (JSON)")->required();
  cycle->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json-like-structured"}));

  auto* demo = app.add_subcommand("demo", "run a built-in example");
  std::string which;
  std::string params = "3,2,1";
  demo->add_option("example", which, "ex-nonpure | ex-embedded")
      ->required()
      ->check(CLI::IsMember({"ex-nonpure", "ex-embedded"}));
  demo->add_option("--params", params, "k,l,m for ex-embedded");
  demo->add_option("--emit-intermediates", o.emit_dir, "write intermediate objects into DIR");
  demo->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json-like-structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  if (*verify) {
    std::vector<std::future<Outcome>> futs;
    futs.reserve(files.size());
    for (const auto& f : files)
      futs.push_back(std::async(std::launch::async, run_one, f, o));
    int code = 0;
    for (auto& fu : futs) {
      Outcome out = fu.get();
      std::cout << out.text;
      code = std::max(code, out.code);
    }
    return code;
  }

  if (*cycle) {
    try {
      Case c = parse_case_file(cycle_file);
      Cycle z = fundamental_cycle(c.ideal);
      if (o.format == "text") {
        std::cout << to_string(z, c.vars) << "\n";
      } else {
        nlohmann::json j;
        j["case"] = nlohmann::json::parse(c.source);
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& [vs, mass] : z.comps) {
          nlohmann::json comp;
          nlohmann::json names = nlohmann::json::array();
          for (int v : vs) names.push_back(c.vars.name(v));
          comp["vars"] = names;
          comp["mass"] = rat_to_string(mass.rat);
          comp["tpi"] = mass.tpi;
          comps.push_back(comp);
        }
        j["cycle"] = comps;
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    } catch (const Error& e) {
      std::cerr << error_text(cycle_file, e, "text");
      return severity(e.kind());
    }
  }

  // demo
  try {
    Case c;
    if (which == "ex-nonpure") {
      c.name = "ex-nonpure";
      c.vars = VarTable({"x", "y", "z"});
      c.ideal = MonomialIdeal(
          3, {Monomial::var(0) * Monomial::var(2), Monomial::var(1) * Monomial::var(2)});
      c.mode = Mode::NonPure;
    } else {
      int k = 0, l = 0, m = 0;
      if (std::sscanf(params.c_str(), "%d,%d,%d", &k, &l, &m) != 3 || k < 1 || l < 1 || m < 0)
        fail(ErrKind::Parse, "--params expects k,l,m with k,l >= 1 and m >= 0");
      c.name = "ex-embedded";
      c.vars = VarTable({"x", "y"});
      c.ideal = MonomialIdeal(
          2, {Monomial::var(1, k), Monomial::var(0, l) * Monomial::var(1, m)});
      c.mode = Mode::Demo;
    }
    if (!o.emit_dir.empty()) c.options.emit_intermediates = o.emit_dir;
    return run_report(c, o);
  } catch (const Error& e) {
    std::cerr << error_text("demo", e, "text");
    return severity(e.kind());
  }
}
