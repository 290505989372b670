#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "netcalc/canonical.hpp"
#include "netcalc/compose.hpp"
#include "netcalc/dot.hpp"
#include "netcalc/run.hpp"
#include "netcalc/step.hpp"
#include "netcalc/textio.hpp"
#include "netcalc/theorems.hpp"

namespace {

constexpr int kOk = 0;        // success / property holds
constexpr int kMismatch = 1;  // verified false, not isomorphic, not recognized
constexpr int kUsage = 2;     // usage or input error

using nlohmann::json;
using namespace netcalc;

struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ModuleDocument load_module(const std::string& path) {
  ParseOutcome out = parse_module(read_file(path));
  if (!out) {
    std::string msg;
    for (const ParseError& e : out.errors)
      msg += path + ":" + e.to_string() + "\n";
    if (!msg.empty()) msg.pop_back();
    throw InputError{msg};
  }
  return std::move(*out.doc);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{"cannot write '" + path + "'"};
  out << text;
}

json verdict_json(const Verdict& v) {
  json j;
  j["claim"] = to_string(v.claim);
  j["holds"] = v.holds;
  j["bound"] = v.bounds.empty() ? json(nullptr) : json(v.bounds[0]);
  j["seed"] = v.seed;
  j["applicable"] = v.applicable;
  j["inconclusive"] = v.inconclusive;
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (v.witness) {
    json w;
    w["seed"] = v.witness->seed;
    w["notes"] = v.witness->notes;
    w["operands"] = json::array();
    for (const NetModule& m : v.witness->operands)
      w["operands"].push_back(serialize_module(m, "W"));
    j["witness"] = w;
  }
  return j;
}

void print_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    std::cout << verdict_json(v).dump(2) << "\n";
    return;
  }
  std::cout << to_string(v.claim) << ": "
            << (!v.applicable     ? "not applicable"
                : v.inconclusive  ? "inconclusive"
                : v.holds         ? "holds"
                                  : "FAILS");
  if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
  std::cout << "\n";
  if (v.witness) {
    for (const std::string& n : v.witness->notes)
      std::cout << "  note: " << n << "\n";
    for (std::size_t i = 0; i < v.witness->operands.size(); ++i) {
      std::cout << "  operand " << i << ":\n";
      std::istringstream lines(serialize_module(v.witness->operands[i], "W"));
      std::string line;
      while (std::getline(lines, line)) std::cout << "    " << line << "\n";
    }
  }
}

int exit_code(const std::vector<Verdict>& vs) {
  for (const Verdict& v : vs)
    if (v.applicable && !v.holds) return kMismatch;
  return kOk;
}

struct VerifySummary {
  std::vector<Verdict> verdicts;
  std::size_t held = 0, failed = 0, not_applicable = 0, inconclusive = 0;

  void add(Verdict v) {
    if (!v.applicable)
      ++not_applicable;
    else if (v.inconclusive)
      ++inconclusive;
    else if (v.holds)
      ++held;
    else
      ++failed;
    verdicts.push_back(std::move(v));
  }

  int report(const std::string& claim, bool as_json) {
    if (as_json) {
      json j;
      j["claim"] = claim;
      j["checked"] = held + failed + not_applicable + inconclusive;
      j["held"] = held;
      j["failed"] = failed;
      j["not_applicable"] = not_applicable;
      j["inconclusive"] = inconclusive;
      j["holds"] = failed == 0 && inconclusive == 0;
      for (const Verdict& v : verdicts)
        if (v.applicable && !v.holds) {
          j["first_failure"] = verdict_json(v);
          break;
        }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << claim << ": " << held << " held, " << failed << " failed, "
                << not_applicable << " not applicable";
      if (inconclusive) std::cout << ", " << inconclusive << " inconclusive";
      std::cout << "\n";
      for (const Verdict& v : verdicts)
        if (v.applicable && !v.holds) {
          print_verdict(v, false);
          break;
        }
    }
    return failed == 0 && inconclusive == 0 ? kOk : kMismatch;
  }
};

int run_cli(int argc, char** argv) {
  CLI::App app{"net module calculus: composition, steps, runs, verification"};
  app.require_subcommand(1);

  // ---- compose ----
  auto* compose_cmd =
      app.add_subcommand("compose", "compose two or more modules left to right");
  std::vector<std::string> compose_inputs;
  std::string compose_out, compose_name = "Composed";
  compose_cmd->add_option("modules", compose_inputs, ".netmod files")
      ->required()
      ->expected(-2);
  compose_cmd->add_option("-o,--output", compose_out, "output file (default stdout)");
  compose_cmd->add_option("--name", compose_name, "name of the result module");

  // ---- steps ----
  auto* steps_cmd = app.add_subcommand("steps", "list steps of a module");
  std::string steps_input, steps_transition;
  bool steps_all = false;
  std::size_t steps_budget = 729;
  bool steps_json = false;
  steps_cmd->add_option("module", steps_input, ".netmod file")->required();
  steps_cmd->add_option("--transition", steps_transition,
                        "only steps of this transition label");
  steps_cmd->add_flag("--all", steps_all,
                      "enumerate every interface designation, not only the "
                      "canonical step");
  steps_cmd->add_option("--budget", steps_budget,
                        "max enumerated steps per transition");
  steps_cmd->add_flag("--json", steps_json, "machine readable output");

  // ---- runs ----
  auto* runs_cmd =
      app.add_subcommand("runs", "enumerate run classes up to a bound");
  std::string runs_input, runs_emit;
  std::size_t runs_max = 0, runs_budget = 4096;
  bool runs_basic_only = false, runs_all = false, runs_count = false;
  runs_cmd->add_option("module", runs_input, ".netmod file")->required();
  runs_cmd->add_option("--max-steps", runs_max, "transition bound")->required();
  runs_cmd->add_flag("--basic-only", runs_basic_only,
                     "canonical steps only (the default universe)");
  runs_cmd->add_flag("--all", runs_all, "full step universe");
  runs_cmd->add_option("--budget", runs_budget,
                       "per-transition step budget for --all");
  runs_cmd->add_flag("--count", runs_count, "print only the class count");
  runs_cmd->add_option("--emit", runs_emit,
                       "write one .netmod per run class into this directory");

  // ---- recognize ----
  auto* rec_cmd = app.add_subcommand(
      "recognize", "decompose a run into steps of a module");
  std::string rec_module, rec_run;
  bool rec_all = false;
  std::size_t rec_budget = 729;
  rec_cmd->add_option("module", rec_module, "host .netmod file")->required();
  rec_cmd->add_option("run", rec_run, "candidate run .netmod file")->required();
  rec_cmd->add_flag("--all", rec_all, "search the full step universe");
  rec_cmd->add_option("--budget", rec_budget,
                      "per-transition step budget for --all");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "machine-check the calculus");
  verify_cmd->require_subcommand(1);
  std::uint64_t seed = 1;
  bool as_json = false;

  auto* th1 = verify_cmd->add_subcommand(
      "theorem1", "basic runs are closed under composition");
  std::size_t th1_pairs = 200, th1_len = 4;
  th1->add_option("--pairs", th1_pairs, "number of random basic-run pairs");
  th1->add_option("--len", th1_len, "max steps per run");
  th1->add_option("--seed", seed, "seed");
  th1->add_flag("--json", as_json, "JSON report");

  auto* comp = verify_cmd->add_subcommand(
      "composition", "bounded run-set equality for a composition");
  std::string comp_m, comp_n;
  std::size_t comp_k = 4;
  bool comp_all = false;
  comp->add_option("left", comp_m, "left module file")->required();
  comp->add_option("right", comp_n, "right module file")->required();
  comp->add_option("--max-steps", comp_k, "transition bound");
  comp->add_flag("--all", comp_all, "full step universe");
  comp->add_option("--seed", seed, "seed (reported only)");
  comp->add_flag("--json", as_json, "JSON report");

  auto* assoc = verify_cmd->add_subcommand("associativity",
                                           "grouping independence");
  std::vector<std::string> assoc_files;
  std::size_t assoc_triples = 200;
  assoc->add_option("modules", assoc_files, "three module files (else random)")
      ->expected(0, 3);
  assoc->add_option("--triples", assoc_triples, "number of random triples");
  assoc->add_option("--seed", seed, "seed");
  assoc->add_flag("--json", as_json, "JSON report");

  auto* ident = verify_cmd->add_subcommand("identity",
                                           "the empty module is neutral");
  std::string ident_file;
  std::size_t ident_count = 100;
  ident->add_option("module", ident_file, "module file (else random)");
  ident->add_option("--count", ident_count, "number of random modules");
  ident->add_option("--seed", seed, "seed");
  ident->add_flag("--json", as_json, "JSON report");

  // ---- export-dot ----
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  std::string dot_input, dot_out, dot_style = "system";
  dot_cmd->add_option("module", dot_input, ".netmod file")->required();
  dot_cmd->add_option("--style", dot_style, "system | run")
      ->check(CLI::IsMember({"system", "run"}));
  dot_cmd->add_option("-o,--output", dot_out, "output file (default stdout)");

  // ---- iso ----
  auto* iso_cmd =
      app.add_subcommand("iso", "test two modules for isomorphism");
  std::string iso_a, iso_b;
  bool iso_witness = false;
  iso_cmd->add_option("left", iso_a, "module file")->required();
  iso_cmd->add_option("right", iso_b, "module file")->required();
  iso_cmd->add_flag("--witness", iso_witness, "print the element bijection");

  CLI11_PARSE(app, argc, argv);

  if (compose_cmd->parsed()) {
    std::vector<NetModule> ms;
    for (const std::string& path : compose_inputs)
      ms.push_back(load_module(path).body);
    Result<NetModule> r = try_compose_all(ms);
    if (!r) {
      std::cerr << "compose: " << r.reason() << "\n";
      return kMismatch;
    }
    write_output(compose_out, serialize_module(r.value(), compose_name));
    return kOk;
  }

  if (steps_cmd->parsed()) {
    ModuleDocument doc = load_module(steps_input);
    const NetModule& m = doc.body;
    if (!steps_transition.empty()) {
      bool known = false;
      for (ElementId t = 0; t < m.size(); ++t)
        known = known || (m.is_transition(t) &&
                          m.elements[t].name == steps_transition);
      if (!known)
        throw InputError{"no transition labeled \"" + steps_transition +
                         "\" in " + steps_input};
    }
    json out_json = json::array();
    std::size_t printed = 0;
    bool truncated = false;
    std::set<CanonicalForm> seen;
    for (ElementId t = 0; t < m.size(); ++t) {
      if (!m.is_transition(t)) continue;
      if (!steps_transition.empty() && m.elements[t].name != steps_transition)
        continue;
      std::vector<Step> steps;
      if (steps_all) {
        StepEnumeration e = enumerate_steps(m, t, steps_budget);
        truncated = truncated || e.truncated;
        steps = std::move(e.steps);
      } else {
        steps.push_back(basic_step(m, t));
      }
      for (const Step& s : steps) {
        if (!seen.insert(canonical_form(s.net)).second) continue;
        std::string name = "Step_" + std::to_string(printed++);
        if (steps_json)
          out_json.push_back({{"transition", s.host_transition_label.name},
                              {"module", serialize_module(s.net, name)}});
        else
          std::cout << "# step of transition \"" << s.host_transition_label.name
                    << "\"\n"
                    << serialize_module(s.net, name) << "\n";
      }
    }
    if (steps_json) {
      std::cout << json{{"steps", out_json}, {"truncated", truncated}}.dump(2)
                << "\n";
    } else if (truncated) {
      std::cout << "# enumeration truncated at budget\n";
    }
    return kOk;
  }

  if (runs_cmd->parsed()) {
    if (runs_basic_only && runs_all) {
      std::cerr << "runs: --basic-only and --all are mutually exclusive\n";
      return kUsage;
    }
    ModuleDocument doc = load_module(runs_input);
    StepUniverse universe = runs_all ? StepUniverse::all(runs_budget)
                                     : StepUniverse::basic();
    RunClassSet classes = runs_upto(doc.body, runs_max, universe);
    if (runs_count) {
      std::cout << classes.size() << (classes.truncated ? " (truncated)" : "")
                << "\n";
      return kOk;
    }
    if (!runs_emit.empty()) {
      std::filesystem::create_directories(runs_emit);
      std::size_t i = 0;
      for (const CanonicalForm& c : classes.classes) {
        std::ostringstream name;
        name << runs_emit << "/run_" << i++ << ".netmod";
        std::ofstream out(name.str(), std::ios::binary);
        out << c.bytes;
      }
      std::cout << "wrote " << i << " run classes to " << runs_emit << "\n";
      return kOk;
    }
    for (const CanonicalForm& c : classes.classes)
      std::cout << c.bytes << "\n";
    if (classes.truncated) std::cout << "# truncated at budget\n";
    return kOk;
  }

  if (rec_cmd->parsed()) {
    ModuleDocument host = load_module(rec_module);
    ModuleDocument run = load_module(rec_run);
    if (!is_acyclic(run.body) || !has_unbranched_places(run.body)) {
      std::cerr << "recognize: candidate is not a run (cyclic or branched)\n";
      return kMismatch;
    }
    StepUniverse universe =
        rec_all ? StepUniverse::all(rec_budget) : StepUniverse::basic();
    std::optional<std::vector<Step>> steps =
        recognize_run(host.body, run.body, universe);
    if (!steps) {
      std::cout << "none\n";
      return kMismatch;
    }
    std::cout << "# decomposition into " << steps->size() << " step(s)\n";
    for (std::size_t i = 0; i < steps->size(); ++i)
      std::cout << serialize_module((*steps)[i].net,
                                    "Step_" + std::to_string(i))
                << "\n";
    return kOk;
  }

  if (th1->parsed()) {
    VerifySummary summary;
    for (std::size_t i = 0; i < th1_pairs; ++i) {
      GenParams gp;
      gp.seed = seed + 2 * i;
      GenParams gq;
      gq.seed = seed + 2 * i + 1;
      Run r = random_basic_run(random_module(gp), gp.seed ^ 0xabcdu, th1_len);
      Run s = random_basic_run(random_module(gq), gq.seed ^ 0xabcdu, th1_len);
      Verdict v = check_theorem1(r, s);
      v.seed = gp.seed;
      summary.add(std::move(v));
    }
    return summary.report("theorem1", as_json);
  }

  if (comp->parsed()) {
    ModuleDocument m = load_module(comp_m);
    ModuleDocument n = load_module(comp_n);
    Verdict v = check_composition_theorem(
        m.body, n.body, comp_k,
        comp_all ? StepUniverse::all() : StepUniverse::basic());
    v.seed = seed;
    print_verdict(v, as_json);
    return exit_code({v});
  }

  if (assoc->parsed()) {
    VerifySummary summary;
    if (!assoc_files.empty()) {
      if (assoc_files.size() != 3) {
        std::cerr << "verify associativity: need exactly three module files\n";
        return kUsage;
      }
      Verdict v = check_associativity(load_module(assoc_files[0]).body,
                                      load_module(assoc_files[1]).body,
                                      load_module(assoc_files[2]).body);
      v.seed = seed;
      summary.add(std::move(v));
    } else {
      for (std::size_t i = 0; i < assoc_triples; ++i) {
        GenParams g;
        g.seed = seed + 3 * i;
        NetModule a = random_module(g);
        g.seed = seed + 3 * i + 1;
        NetModule b = random_module(g);
        g.seed = seed + 3 * i + 2;
        NetModule c = random_module(g);
        Verdict v = check_associativity(a, b, c);
        v.seed = seed + 3 * i;
        if (v.applicable && !v.holds && v.witness)
          *v.witness = shrink(v);
        summary.add(std::move(v));
      }
    }
    return summary.report("associativity", as_json);
  }

  if (ident->parsed()) {
    VerifySummary summary;
    if (!ident_file.empty()) {
      Verdict v = check_identity(load_module(ident_file).body);
      v.seed = seed;
      summary.add(std::move(v));
    } else {
      for (std::size_t i = 0; i < ident_count; ++i) {
        GenParams g;
        g.seed = seed + i;
        Verdict v = check_identity(random_module(g));
        v.seed = g.seed;
        summary.add(std::move(v));
      }
    }
    return summary.report("identity", as_json);
  }

  if (dot_cmd->parsed()) {
    ModuleDocument doc = load_module(dot_input);
    DotStyle style = dot_style == "run" ? DotStyle::Run : DotStyle::System;
    write_output(dot_out, to_dot(doc.body, style, doc.name));
    return kOk;
  }

  if (iso_cmd->parsed()) {
    ModuleDocument a = load_module(iso_a);
    ModuleDocument b = load_module(iso_b);
    std::vector<ElementId> witness;
    if (!is_isomorphic(a.body, b.body, &witness)) {
      std::cout << "not isomorphic\n";
      return kMismatch;
    }
    std::cout << "isomorphic\n";
    if (iso_witness)
      for (ElementId e = 0; e < witness.size(); ++e)
        std::cout << "  " << a.ids[e] << " -> " << b.ids[witness[e]] << "\n";
    return kOk;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
