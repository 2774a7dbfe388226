// Command-line front end: encoding, translation, classification, evaluation,
// stage checks, and the full verification suite.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfkit/hfkit.hpp"

namespace {

using nlohmann::json;
using namespace hfkit;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// plain decimal, #decimal, or a brace literal
AckCode parse_value(const std::string& text) {
  if (text.empty()) throw RangeError("empty value");
  if (text[0] == '{') return encode(parse_set_literal(text));
  if (text[0] == '#') return AckCode(Nat(text.substr(1)));
  return AckCode(Nat(text));
}

json report_json(const CheckReport& r) {
  json out{{"subject", r.subject}, {"n", r.n},     {"bump", r.bump},
           {"result", r.result_str()}, {"cases", r.cases},
           {"seed", r.seed},        {"elapsed_ms", r.elapsed_ms}};
  if (!r.counterexample.empty()) out["counterexample"] = r.counterexample;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

int emit_report(const CheckReport& r, bool as_json) {
  if (as_json) {
    std::cout << report_json(r).dump(2) << "\n";
  } else {
    std::cout << r.subject << ": " << r.result_str() << " (" << r.cases
              << " cases, " << r.elapsed_ms << " ms)";
    if (!r.note.empty()) std::cout << " [" << r.note << "]";
    std::cout << "\n";
    for (const auto& [k, v] : r.counterexample)
      std::cout << "  " << k << " = " << v << "\n";
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

Env parse_env(const std::string& text) {
  Env env;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eq = text.find('=', pos);
    if (eq == std::string::npos)
      throw RangeError("--env expects name=value pairs");
    std::size_t end = text.find(',', eq);
    if (end == std::string::npos) end = text.size();
    const std::string name = text.substr(pos, eq - pos);
    env[name] = parse_value(text.substr(eq + 1, end - eq - 1)).value();
    pos = end == text.size() ? end : end + 1;
  }
  return env;
}

const Signature& sig_by_flag(const std::string& name) {
  const Signature* sig = Signature::by_name(name);
  if (!sig) throw RangeError("unknown signature '" + name + "'");
  return *sig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hereditarily finite set toolkit"};
  app.require_subcommand(1);

  std::string sig_name = "set";
  std::string interp_name = "identity";
  std::string compose_name;
  std::string env_text;
  std::string oracle_flag = "on";
  std::uint64_t budget = 1024;
  std::uint64_t range = 16;
  std::uint64_t level = 0;
  std::uint64_t bump = 0;
  std::uint64_t seed = 0;
  bool as_json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "JSON output");
    cmd->add_option("--seed", seed, "random seed for sampled checks");
  };

  // encode
  std::string literal;
  auto* cmd_encode = app.add_subcommand("encode", "set literal -> code");
  cmd_encode->add_option("literal", literal)->required();
  add_common(cmd_encode);

  // decode
  std::string code_text;
  auto* cmd_decode = app.add_subcommand("decode", "code -> set literal");
  cmd_decode->add_option("code", code_text)->required();
  add_common(cmd_decode);

  // op
  std::string op_name;
  std::vector<std::string> op_args;
  auto* cmd_op = app.add_subcommand("op", "apply a set operation to codes");
  cmd_op->add_option("name", op_name)->required();
  cmd_op->add_option("args", op_args);
  add_common(cmd_op);

  // translate
  std::string formula_text;
  auto* cmd_translate =
      app.add_subcommand("translate", "translate a formula");
  cmd_translate->add_option("formula", formula_text)->required();
  cmd_translate->add_option("--interp", interp_name,
                            "a | o | b | identity (first applied)");
  cmd_translate->add_option("--compose", compose_name,
                            "second interpretation applied to the result");
  cmd_translate->add_option("--sig", sig_name, "source signature");
  add_common(cmd_translate);

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "hierarchy levels");
  cmd_classify->add_option("formula", formula_text)->required();
  cmd_classify->add_option("--sig", sig_name);
  add_common(cmd_classify);

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "evaluate over the model");
  cmd_eval->add_option("formula", formula_text)->required();
  cmd_eval->add_option("--sig", sig_name);
  cmd_eval->add_option("--env", env_text, "x=1,y=#3,z={{}} assignments");
  cmd_eval->add_option("--budget", budget);
  cmd_eval->add_option("--oracle", oracle_flag, "on | off");
  add_common(cmd_eval);

  // stage
  auto* cmd_stage = app.add_subcommand("stage", "stage bound and properties");
  cmd_stage->add_option("--n", level)->required();
  add_common(cmd_stage);

  // axiom-check
  std::string axiom_name_text;
  auto* cmd_axiom = app.add_subcommand("axiom-check", "finite-stage axiom check");
  cmd_axiom->add_option("axiom", axiom_name_text)->required();
  cmd_axiom->add_option("--n", level)->required();
  cmd_axiom->add_option("--bump", bump);
  add_common(cmd_axiom);

  // roundtrip
  std::string roundtrip_text;
  auto* cmd_roundtrip =
      app.add_subcommand("roundtrip", "translation round-trip check");
  cmd_roundtrip->add_option("kind", roundtrip_text)->required();
  cmd_roundtrip->add_option("--range", range);
  add_common(cmd_roundtrip);

  // selftest
  auto* cmd_selftest =
      app.add_subcommand("selftest", "run the acceptance suite");
  add_common(cmd_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (const char* cap = std::getenv("HFKIT_BIT_CAP")) {
      (void)cap;  // picked up by the library on first use
    }

    if (cmd_encode->parsed()) {
      std::cout << encode(parse_set_literal(literal)).str() << "\n";
      return kExitOk;
    }
    if (cmd_decode->parsed()) {
      std::cout << to_set_literal(decode(parse_value(code_text))) << "\n";
      return kExitOk;
    }
    if (cmd_op->parsed()) {
      auto arg = [&](std::size_t i) {
        if (i >= op_args.size()) throw RangeError("missing operand");
        return parse_value(op_args[i]);
      };
      Nat out;
      if (op_name == "eps")
        out = eps(arg(0), arg(1)) ? 1 : 0;
      else if (op_name == "pair")
        out = pair(arg(0), arg(1)).value();
      else if (op_name == "orderedpair")
        out = ordered_pair(arg(0), arg(1)).value();
      else if (op_name == "binunion")
        out = binunion(arg(0), arg(1)).value();
      else if (op_name == "bininter")
        out = bininter(arg(0), arg(1)).value();
      else if (op_name == "setunion")
        out = setunion(arg(0)).value();
      else if (op_name == "adjoin")
        out = adjoin(arg(0), arg(1)).value();
      else if (op_name == "sigma")
        out = sigma(arg(0));
      else if (op_name == "tc")
        out = tc(arg(0)).value();
      else if (op_name == "rank")
        out = rank(arg(0));
      else if (op_name == "summembers")
        out = sum_members(arg(0));
      else if (op_name == "v")
        out = von_neumann_code(arg(0).value()).value();
      else if (op_name == "isvn") {
        const auto r = is_von_neumann(arg(0));
        std::cout << (r ? r->str() : std::string("none")) << "\n";
        return kExitOk;
      } else
        throw RangeError("unknown operation '" + op_name + "'");
      std::cout << out.str() << "\n";
      return kExitOk;
    }
    if (cmd_translate->parsed()) {
      InterpretationSpec first =
          interp_by_name(interp_name, Signature::by_name(sig_name));
      const Formula input = parse(formula_text, *first.source);
      Formula output = translate(first, input);
      const Signature* target = first.target;
      std::string pipeline = first.name;
      if (!compose_name.empty()) {
        InterpretationSpec second =
            interp_by_name(compose_name, Signature::by_name(target->name));
        output = translate(second, output);
        target = second.target;
        pipeline += " then " + second.name;
      }
      const auto src_level = classify(input);
      const auto dst_level = classify(output);
      if (as_json) {
        json obligations_json = json::array();
        for (const Formula& ob : obligations(first))
          obligations_json.push_back(print(ob));
        json out{{"pipeline", pipeline},
                 {"source", first.source->name},
                 {"target", target->name},
                 {"input", print(input)},
                 {"output", print(output)},
                 {"source_level", {{"e", src_level.e_level},
                                   {"u", src_level.u_level}}},
                 {"target_level", {{"e", dst_level.e_level},
                                   {"u", dst_level.u_level}}},
                 {"obligations", obligations_json}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << print(output) << "\n";
      }
      return kExitOk;
    }
    if (cmd_classify->parsed()) {
      const Formula f = parse(formula_text, sig_by_flag(sig_name));
      const auto lvl = classify(f);
      if (as_json)
        std::cout << json{{"e", lvl.e_level}, {"u", lvl.u_level}}.dump() << "\n";
      else
        std::cout << "E=" << lvl.e_level << " U=" << lvl.u_level << "\n";
      return kExitOk;
    }
    if (cmd_eval->parsed()) {
      const Signature& sig = sig_by_flag(sig_name);
      const Formula f = parse(formula_text, sig);
      EvalOptions opts;
      opts.budget = budget;
      opts.oracle_mode = oracle_flag != "off";
      const Env env = parse_env(env_text);
      const TruthValue v = sig.name == "set" ? eval_set(f, env, opts)
                                             : eval_arith(f, env, opts);
      if (as_json)
        std::cout << json{{"value", to_string(v)}}.dump() << "\n";
      else
        std::cout << to_string(v) << "\n";
      return kExitOk;
    }
    if (cmd_stage->parsed()) {
      const Stage s = stage(level);
      const CheckReport r = check_stage_props(level);
      if (as_json) {
        json out = report_json(r);
        out["bound"] = s.bound.str();
        std::cout << out.dump(2) << "\n";
        return r.passed() ? kExitOk : kExitCheckFailed;
      }
      std::cout << "t_" << level << " = " << s.bound.str() << "\n";
      return emit_report(r, false);
    }
    if (cmd_axiom->parsed()) {
      const auto id = axiom_by_name(axiom_name_text);
      if (!id) throw RangeError("unknown axiom '" + axiom_name_text + "'");
      return emit_report(check_axiom(*id, level, bump, seed), as_json);
    }
    if (cmd_roundtrip->parsed()) {
      const auto kind = roundtrip_by_name(roundtrip_text);
      if (!kind)
        throw RangeError("unknown round-trip kind '" + roundtrip_text + "'");
      return emit_report(roundtrip_check(*kind, range), as_json);
    }
    if (cmd_selftest->parsed()) {
      if (as_json) {
        const auto results = selftest::run_all(seed, nullptr);
        json out = json::array();
        bool all = true;
        for (const auto& r : results) {
          out.push_back(json{{"id", r.id},
                             {"name", r.name},
                             {"pass", r.pass},
                             {"detail", r.detail},
                             {"elapsed_ms", r.elapsed_ms}});
          all = all && r.pass;
        }
        std::cout << out.dump(2) << "\n";
        return all ? kExitOk : kExitCheckFailed;
      }
      const auto results = selftest::run_all(seed, &std::cout);
      for (const auto& r : results)
        if (!r.pass) return kExitCheckFailed;
      return kExitOk;
    }
    std::cerr << "no command\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const RangeError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
