// pal: command-line front end.
//
// Exit status: 0 success / valid / true, 1 countermodel / false / suite
// mismatch, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pal/pal.hpp"

namespace {

using pal::json;

struct ScopeFlags {
  std::size_t max_worlds = 2;
  std::vector<std::string> agents{"a", "b"};
  std::vector<std::string> atoms{"p", "q"};
  std::string frame = "s5";
  std::optional<std::uint64_t> budget;
  unsigned workers = 1;
  CLI::Option* frame_opt = nullptr;
};

void add_scope_flags(CLI::App* cmd, ScopeFlags& f) {
  cmd->add_option("--max-worlds", f.max_worlds, "largest model size to enumerate")->check(CLI::PositiveNumber);
  cmd->add_option("--agents", f.agents, "comma-separated agent names")->delimiter(',');
  cmd->add_option("--atoms", f.atoms, "comma-separated atom names")->delimiter(',');
  f.frame_opt = cmd->add_option("--frame", f.frame, "k or s5")->check(CLI::IsMember({"k", "s5"}));
  cmd->add_option("--budget", f.budget, "stop after this many models");
  cmd->add_option("--workers", f.workers, "worker threads for the model search")->check(CLI::PositiveNumber);
}

pal::Frame frame_of(const std::string& s) { return s == "k" ? pal::Frame::k : pal::Frame::s5; }
pal::Semantics semantics_of(const std::string& s) { return s == "sse" ? pal::Semantics::sse : pal::Semantics::direct; }

pal::Scope scope_of(const ScopeFlags& f, const std::string& semantics) {
  pal::Scope s;
  s.max_worlds = f.max_worlds;
  s.agents = f.agents;
  s.atoms = f.atoms;
  s.frame = frame_of(f.frame);
  s.semantics = semantics_of(semantics);
  s.model_budget = f.budget;
  s.workers = f.workers;
  return s;
}

std::string join(const json& arr, const char* sep = ", ") {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

void print_verdict(const json& v, std::ostream& os) {
  if (v["verdict"] == "valid") {
    os << "valid up to bound (" << v["models_checked"].get<std::uint64_t>() << " models"
       << (v["exhaustive"].get<bool>() ? "" : ", budget exhausted") << ")\n";
    return;
  }
  os << "countermodel at world " << v["world"].get<std::string>();
  if (v.contains("domain")) os << " with domain {" << join(v["domain"]) << "}";
  os << "\n" << v["countermodel"].dump(2) << "\n";
}

void print_suite(const json& items, std::ostream& os) {
  for (const auto& i : items) {
    const bool report_only = i["expected"] == "report";
    const bool ok = report_only || i["expected"] == i["verdict"];
    os << (report_only ? "  -   " : ok ? "  ok  " : "  !!  ") << i["name"].get<std::string>() << "  ["
       << i["frame"].get<std::string>() << ", " << i["semantics"].get<std::string>() << "]  "
       << i["verdict"].get<std::string>();
    if (i.contains("countermodel")) os << " (" << i["countermodel"]["worlds"].size() << " worlds)";
    if (!report_only && !ok) os << ", expected " << i["expected"].get<std::string>();
    os << "\n        " << i["form"].get<std::string>() << "\n";
    if (i.contains("note")) os << "        " << i["note"].get<std::string>() << "\n";
  }
}

json ast_json(const pal::Formula& f) {
  static const char* names[] = {"atom", "top", "neg", "and", "or", "imp", "iff",
                                "knows", "everyone", "announce", "rck", "ck"};
  json out = json::object();
  out["op"] = names[static_cast<int>(f.op())];
  if (f.op() == pal::Op::atom) out["name"] = f.name();
  if (f.op() == pal::Op::knows) out["agent"] = f.name();
  if (f.op() != pal::Op::atom && f.op() != pal::Op::top) {
    json kids = json::array();
    kids.push_back(ast_json(f.lhs()));
    if (f.is_binary()) kids.push_back(ast_json(f.rhs()));
    out["args"] = std::move(kids);
  }
  return out;
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for public announcement logic with relativized common knowledge"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "print machine-readable JSON");
  app.fallthrough();

  std::string formula_text;
  std::string model_path;
  std::string world_id;
  std::string domain_ids;
  std::string semantics = "direct";
  ScopeFlags scope;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print it back");
  parse_cmd->add_option("formula", formula_text)->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula at a world of a model file");
  eval_cmd->add_option("--model", model_path)->required();
  eval_cmd->add_option("--world", world_id)->required();
  eval_cmd->add_option("--domain", domain_ids, "comma-separated world ids");
  eval_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"direct", "sse"}));
  eval_cmd->add_option("formula", formula_text)->required();

  auto* announce_cmd = app.add_subcommand("announce", "print the model after a public announcement");
  announce_cmd->add_option("--model", model_path)->required();
  announce_cmd->add_option("formula", formula_text)->required();

  auto* valid_cmd = app.add_subcommand("valid", "bounded validity check");
  add_scope_flags(valid_cmd, scope);
  valid_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"direct", "sse"}));
  valid_cmd->add_option("formula", formula_text)->required();

  std::vector<std::string> premise_texts;
  std::string conclusion_text;
  auto* rule_cmd = app.add_subcommand("rule", "bounded check that a rule preserves validity in each model");
  add_scope_flags(rule_cmd, scope);
  rule_cmd->add_option("--semantics", semantics)->check(CLI::IsMember({"direct", "sse"}));
  rule_cmd->add_option("--premise", premise_texts);
  rule_cmd->add_option("--conclusion", conclusion_text)->required();

  std::string suite_name;
  std::size_t formulas = 500;
  std::size_t random_cases = 10000;
  auto* suite_cmd = app.add_subcommand("suite", "run an experiment suite");
  suite_cmd->add_option("name", suite_name)->required()->check(CLI::IsMember({"axioms", "substitution", "faithfulness"}));
  add_scope_flags(suite_cmd, scope);
  suite_cmd->add_option("--formulas", formulas, "faithfulness: generated formulas");
  suite_cmd->add_option("--random-cases", random_cases, "faithfulness: random cases at 3 worlds");

  bool footnote = false;
  auto* wise_cmd = app.add_subcommand("wisemen", "solve the wise men puzzle");
  wise_cmd->add_flag("--footnote-axioms", footnote, "also assume y would know if x's spot were white");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ostream& out = std::cout;
  try {
    if (*parse_cmd) {
      const pal::Formula f = pal::parse(formula_text);
      json doc = {{"formula", pal::render(f)},
                  {"ast", ast_json(f)},
                  {"modal_depth", pal::modal_depth(f)},
                  {"announcement_depth", pal::announcement_depth(f)}};
      if (as_json)
        out << doc.dump(2) << "\n";
      else
        out << doc["formula"].get<std::string>() << "\n";
      return 0;
    }

    if (*eval_cmd) {
      const pal::EpistemicModel m = pal::load_model(model_path);
      const pal::Formula f = pal::parse(formula_text);
      auto w = m.world_index(world_id);
      if (!w) throw pal::ModelError("unknown world '" + world_id + "'");
      pal::WorldSet d = m.all_worlds();
      if (eval_cmd->count("--domain")) d = m.worlds_named(split_ids(domain_ids));
      bool value = false;
      if (semantics_of(semantics) == pal::Semantics::sse) {
        value = pal::eval_sse(m, d, *w, f);
      } else {
        // Direct semantics reads a domain as the submodel on it.
        if (!d.contains(*w)) throw pal::ModelError("world '" + world_id + "' is outside the domain");
        const pal::EpistemicModel sub = pal::restrict(m, d);
        value = pal::eval_direct(sub, world_id, f);
      }
      if (as_json)
        out << json{{"world", world_id}, {"semantics", semantics}, {"formula", pal::render(f)}, {"value", value}}.dump(2)
            << "\n";
      else
        out << (value ? "true" : "false") << "\n";
      return value ? 0 : 1;
    }

    if (*announce_cmd) {
      const pal::EpistemicModel m = pal::load_model(model_path);
      out << pal::to_json(pal::announce(m, pal::parse(formula_text))).dump(2) << "\n";
      return 0;
    }

    if (*valid_cmd || *rule_cmd) {
      const pal::Scope s = scope_of(scope, semantics);
      pal::Verdict v;
      if (*valid_cmd) {
        v = pal::check_valid(pal::parse(formula_text), s);
      } else {
        std::vector<pal::Formula> premises;
        for (const auto& t : premise_texts) premises.push_back(pal::parse(t));
        v = pal::check_rule(premises, pal::parse(conclusion_text), s);
      }
      const json doc = pal::to_json(v);
      if (as_json)
        out << doc.dump(2) << "\n";
      else
        print_verdict(doc, out);
      return v.valid() ? 0 : 1;
    }

    if (*suite_cmd) {
      pal::Scope s = scope_of(scope, "direct");
      if (suite_name == "faithfulness") {
        pal::FaithfulnessOptions o;
        o.max_worlds = s.max_worlds;
        o.agents = s.agents;
        o.atoms = s.atoms;
        o.frame = scope.frame_opt->count() ? s.frame : pal::Frame::k;
        o.formulas = formulas;
        o.random_cases = random_cases;
        o.workers = s.workers;
        const pal::FaithfulnessReport r = pal::run_faithfulness(o);
        const json doc = pal::to_json(r);
        if (as_json) {
          out << doc.dump(2) << "\n";
        } else {
          out << "cases: " << r.exhaustive_cases << " exhaustive, " << r.random_cases << " random\n"
              << "discrepancies: " << r.discrepancies << "\n";
          if (doc.contains("first_discrepancy")) out << doc["first_discrepancy"].dump(2) << "\n";
        }
        return r.ok() ? 0 : 1;
      }
      pal::SuiteReport r;
      if (suite_name == "axioms") {
        std::vector<pal::Frame> frames{pal::Frame::k, pal::Frame::s5};
        if (scope.frame_opt->count()) frames = {s.frame};
        r = pal::run_axiom_suite(s, frames);
      } else {
        r = pal::run_substitution_suite(s);
      }
      const json doc = pal::to_json(r);
      if (as_json)
        out << doc.dump(2) << "\n";
      else
        print_suite(doc, out);
      return r.ok() ? 0 : 1;
    }

    if (*wise_cmd) {
      pal::wisemen::SolveOptions o;
      o.footnote_axioms = footnote;
      const pal::wisemen::Report r = pal::wisemen::solve(o);
      const json doc = pal::wisemen::to_json(r);
      if (as_json) {
        out << doc.dump(2) << "\n";
      } else {
        out << "premises hold at every world: " << (doc["premises_ok"].get<bool>() ? "yes" : "no") << "\n"
            << "cascade " << join(doc["cascade"], " -> ") << "\n"
            << "after both announcements: " << join(doc["worlds_after"]) << "\n"
            << "with the all-black world added the goal fails at "
            << (doc["negative_control_ok"].get<bool>() ? doc["negative_control_world"].get<std::string>() : "no world")
            << "\n";
        if (doc.contains("consequence"))
          out << "premises entail goal in every S5 model up to 2 worlds: "
              << (doc["consequence"]["verdict"] == "valid" ? "yes" : "no") << "\n";
        out << "theorem whitespot_c: "
            << (doc["goal_ok"].get<bool>() && doc["goal_sse_ok"].get<bool>() ? "VALID" : "NOT VALID") << "\n";
      }
      return r.ok() ? 0 : 1;
    }
  } catch (const pal::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const pal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
