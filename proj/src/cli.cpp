#include "wmha/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "wmha/io.hpp"

namespace wmha {

namespace {

class UnknownExample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "text";
  std::size_t probes = 6;
  std::string phi_file;
  std::string out_file;
};

// Accumulates everything a command prints so text and json stay in step.
struct Outcome {
  std::string command;
  std::string input;
  std::string kind;
  Report report;
  std::optional<Json> obstruction;
  std::optional<std::string> expected;
  std::optional<std::string> actual;
  std::vector<std::string> notes;

  int exit_code() const {
    return report.ok() && !obstruction ? kExitPass : kExitCheckFailed;
  }
};

void emit(const Outcome& o, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    Json j;
    j["command"] = o.command;
    j["input"] = o.input;
    j["kind"] = o.kind;
    j["report"] = report_to_json(o.report);
    if (o.obstruction) j["obstruction"] = *o.obstruction;
    if (o.expected) j["expected"] = *o.expected;
    if (o.actual) j["actual"] = *o.actual;
    if (!o.notes.empty()) j["notes"] = o.notes;
    j["exit_code"] = o.exit_code();
    out << j.dump(1) << "\n";
    return;
  }
  out << o.command << " " << o.input << " (" << o.kind << ")\n";
  out << report_to_text(o.report);
  if (o.obstruction) {
    const Json& ob = *o.obstruction;
    out << "obstruction: " << ob["stage"].get<std::string>() << "\n";
    out << "  " << ob["narrative"].get<std::string>() << "\n";
    out << "  witness: " << ob["witness"]["text"].get<std::string>() << "\n";
  }
  if (o.expected) out << "expected: " << *o.expected << "\n";
  if (o.actual) out << "actual: " << *o.actual << "\n";
  for (const auto& n : o.notes) out << "note: " << n << "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

Wmha wmha_of_groupoid(const GroupoidDefinition& g) {
  return g.model == GroupoidModel::Function ? groupoid_wmha(*g.table)
                                            : groupoid_convolution_wmha(*g.table);
}

// Resolves the WMHA described by a definition; nullopt for kinds without one.
std::optional<Wmha> wmha_of(const Definition& d, Report* pre) {
  if (auto* w = std::get_if<Wmha>(&d.value)) return *w;
  if (auto* g = std::get_if<GroupoidDefinition>(&d.value))
    if (g->table) return wmha_of_groupoid(*g);
  if (auto* t = std::get_if<TwistDefinition>(&d.value)) {
    try {
      return twist_wmha(t->wmha, t->B_emb, t->twist);
    } catch (const TwistConditionFailed& e) {
      if (pre) pre->check("twist.condition", "E(vu(x)1)E = E", false, e.what());
      return std::nullopt;
    }
  }
  if (auto* s = std::get_if<SeparabilityDefinition>(&d.value)) {
    auto res = build_E_from_functional(s->B, s->phi_B, s->C, s->S_B);
    if (auto* sep = std::get_if<SeparabilityIdempotent>(&res)) {
      if (pre) pre->append(check_separability_idempotent(*sep));
      return separability_wmha(*sep);
    }
    const auto& bad = std::get<NotIdempotentResult>(res);
    if (pre)
      pre->check("separability.idempotent", "E^2 = E", false,
                 "E^2 - E = " + format_vector(bad.defect));
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Algebroid> algebroid_of(const Definition& d, Report* pre) {
  if (auto* a = std::get_if<Algebroid>(&d.value)) return *a;
  if (auto* t = std::get_if<TwistDefinition>(&d.value)) {
    try {
      return mixed_algebroid(t->wmha, t->B_emb, t->twist);
    } catch (const std::exception& e) {
      if (pre) pre->check("twist.condition", "E(vu(x)1)E = E", false, e.what());
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<Vector> load_candidates(const std::string& path, std::size_t dim) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (j.is_object() && j.contains("candidates")) j = j["candidates"];
  if (!j.is_array()) throw SchemaError("candidate functionals must be an array of vectors");
  std::vector<Vector> out;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != dim)
      throw SchemaError("each candidate functional needs " + std::to_string(dim) + " entries");
    Vector x;
    for (const auto& e : v) x.push_back(rational_from_json(e));
    out.push_back(x);
  }
  return out;
}

Outcome cmd_check_wmha(const std::string& file, const Options& opt) {
  Definition d = load_definition(file);
  Outcome o{"check-wmha", file, d.kind, {}, {}, d.expected, {}, {}};
  if (auto* g = std::get_if<GroupoidDefinition>(&d.value); g && g->lazy_pair) {
    o.report = check_lazy_pair_groupoid(opt.probes);
    o.notes.push_back("multiplier-level checks hold on the probe set only");
    return o;
  }
  if (std::holds_alternative<FiniteAlgebra>(d.value) || std::holds_alternative<Algebroid>(d.value))
    throw SchemaError("check-wmha needs a wmha, groupoid, separability or twist definition");
  auto w = wmha_of(d, &o.report);
  if (w) {
    o.report.append(check_wmha(*w));
    o.report.append(check_source_target(*w));
  }
  return o;
}

Outcome cmd_check_algebroid(const std::string& file, const Options&) {
  Definition d = load_definition(file);
  Outcome o{"check-algebroid", file, d.kind, {}, {}, d.expected, {}, {}};
  if (!std::holds_alternative<Algebroid>(d.value) && !std::holds_alternative<TwistDefinition>(d.value))
    throw SchemaError("check-algebroid needs an algebroid or twist definition");
  auto a = algebroid_of(d, &o.report);
  if (a) o.report.append(check_algebroid_axioms(*a));
  return o;
}

Outcome cmd_wmha_to_algebroid(const std::string& file, const Options& opt) {
  Definition d = load_definition(file);
  Outcome o{"wmha-to-algebroid", file, d.kind, {}, {}, d.expected, {}, {}};
  if (std::holds_alternative<FiniteAlgebra>(d.value) || std::holds_alternative<Algebroid>(d.value))
    throw SchemaError("wmha-to-algebroid needs a wmha, groupoid, separability or twist definition");
  auto w = wmha_of(d, &o.report);
  if (!w) return o;
  Report input = check_wmha(*w);
  o.report.append(input);
  if (!input.ok()) return o;
  ForwardResult f = forward_construct(*w);
  o.report.append(f.report);
  if (f.report.ok() && !opt.out_file.empty()) {
    Definition out{"algebroid", d.name.empty() ? "" : d.name + "-algebroid",
                   "multiplier Hopf algebroid of a weak multiplier Hopf algebra", std::string("success"),
                   f.algebroid};
    write_file(opt.out_file, dump_definition(out));
  }
  return o;
}

Outcome cmd_algebroid_to_wmha(const std::string& file, const Options& opt) {
  Definition d = load_definition(file);
  Outcome o{"algebroid-to-wmha", file, d.kind, {}, {}, d.expected, {}, {}};
  if (!std::holds_alternative<Algebroid>(d.value) && !std::holds_alternative<TwistDefinition>(d.value))
    throw SchemaError("algebroid-to-wmha needs an algebroid or twist definition");
  auto a = algebroid_of(d, &o.report);
  if (!a) return o;
  auto candidates = load_candidates(opt.phi_file, a->graphs.B.dim());
  Report input = check_algebroid_axioms(*a);
  o.report.append(input);
  if (!input.ok()) return o;
  PipelineResult p = reconstruct_wmha(*a, candidates);
  o.report.append(p.report);
  if (p.obstruction) {
    o.obstruction = obstruction_to_json(*p.obstruction, a->graphs.A);
    std::string why = validate_obstruction(*a, *p.obstruction);
    o.report.check("obstruction.witness_revalidates", "the witness exhibits a genuine violation",
                   why.empty(), why);
    o.actual = stage_name(p.obstruction->stage);
    if (!opt.out_file.empty()) {
      Json j;
      j["schema"] = kSchemaVersion;
      j["kind"] = "obstruction";
      j["data"] = *o.obstruction;
      write_file(opt.out_file, j.dump(1) + "\n");
    }
  } else {
    o.actual = "success";
    if (!opt.out_file.empty()) {
      Definition out{"wmha", d.name.empty() ? "" : d.name + "-wmha",
                     "weak multiplier Hopf algebra reconstructed from an algebroid", std::string("success"),
                     *p.wmha};
      write_file(opt.out_file, dump_definition(out));
    }
  }
  return o;
}

Outcome cmd_roundtrip(const std::string& file, const Options&) {
  Definition d = load_definition(file);
  Outcome o{"roundtrip", file, d.kind, {}, {}, d.expected, {}, {}};
  if (std::holds_alternative<FiniteAlgebra>(d.value) || std::holds_alternative<Algebroid>(d.value))
    throw SchemaError("roundtrip needs a wmha, groupoid, separability or twist definition");
  auto w = wmha_of(d, &o.report);
  if (!w) return o;
  ForwardResult f = forward_construct(*w);
  o.report.append(f.report);
  if (!f.report.ok()) return o;
  PipelineResult p = reconstruct_wmha(f.algebroid);
  o.report.append(p.report);
  if (!p.wmha) {
    o.obstruction = obstruction_to_json(*p.obstruction, w->algebra);
    o.actual = stage_name(p.obstruction->stage);
    return o;
  }
  o.actual = "success";
  const Wmha& back = *p.wmha;
  o.report.check("roundtrip.coproduct", "the recovered coproduct equals the original", back.delta == w->delta);
  o.report.check("roundtrip.counit", "the recovered counit equals the original", back.counit == w->counit);
  o.report.check("roundtrip.antipode", "the recovered antipode equals the original",
                 back.antipode == w->antipode);
  o.report.check("roundtrip.idempotent", "the recovered E equals Delta(1) of the original",
                 back.idempotent && *back.idempotent == compute_E(*w));
  return o;
}

using Params = std::map<std::string, std::string>;

std::string param(const Params& p, const std::string& key, const std::string& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

std::size_t size_param(const Params& p, const std::string& key, std::size_t fallback) {
  std::string v = param(p, key, std::to_string(fallback));
  try {
    std::size_t used = 0;
    long long n = std::stoll(v, &used);
    if (used != v.size() || n < 1) throw std::invalid_argument(v);
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw UnknownExample("parameter " + key + " must be a positive integer, got '" + v + "'");
  }
}

SeparabilityIdempotent separability_param(const Params& p) {
  std::string b = param(p, "B", "M2");
  std::string phi = param(p, "phi", "trace");
  if (b != "M2") throw UnknownExample("only B=M2 is available for this example");
  if (phi == "trace") return trace_separability_M2();
  if (phi == "weighted") return weighted_separability_M2();
  throw UnknownExample("phi must be trace or weighted");
}

Definition generate(const std::string& name, const Params& p) {
  if (name == "pair-groupoid") {
    std::size_t n = size_param(p, "n", 2);
    GroupoidDefinition g{pair_groupoid(n), false,
                         param(p, "model", "function") == "convolution" ? GroupoidModel::Convolution
                                                                         : GroupoidModel::Function};
    return {"groupoid", "pair-groupoid-" + std::to_string(n), "pair groupoid on n objects", "success", g};
  }
  if (name == "cyclic-group") {
    std::size_t n = size_param(p, "n", 2);
    GroupoidDefinition g{group_as_groupoid(cyclic_group(n)), false, GroupoidModel::Function};
    return {"groupoid", "cyclic-group-" + std::to_string(n), "cyclic group as a one-object groupoid",
            "success", g};
  }
  if (name == "action-groupoid") {
    GroupoidDefinition g{action_groupoid(cyclic_group(2), 2, {{0, 1}, {1, 0}}), false,
                         GroupoidModel::Function};
    return {"groupoid", "action-groupoid", "Z/2 acting on two points by the swap", "success", g};
  }
  if (name == "lazy-pair-groupoid") {
    return {"groupoid", "lazy-pair-groupoid", "pair groupoid on the natural numbers, checked on probes",
            "success", GroupoidDefinition{std::nullopt, true, GroupoidModel::Function}};
  }
  if (name == "separability") {
    std::string b = param(p, "B", "M2");
    if (b == "dual") {
      FiniteAlgebra d = dual_numbers();
      SeparabilityDefinition s{d, opposite_algebra(d), Matrix::identity(2), Vector{0, 1}};
      return {"separability", "separability-dual-numbers", "dual numbers with phi(1) = 0, phi(x) = 1",
              "NotIdempotent", s};
    }
    SeparabilityIdempotent sep = separability_param(p);
    return {"separability", "separability-M2-" + param(p, "phi", "trace"), "M_2 with a weighted trace",
            "success", SeparabilityDefinition{sep.B, sep.C, sep.S_B, sep.phi_B}};
  }
  if (name == "separability-bundle" || name == "example-5.1") {
    SeparabilityIdempotent sep = separability_param(p);
    return {"wmha", "separability-bundle-M2-" + param(p, "phi", "trace"),
            "A = C(x)B with Delta(yx) = (y(x)1)E(1(x)x)", "success", separability_wmha(sep)};
  }
  if (name == "obstruction-scenario" || name == "example-5.3") {
    std::string s = param(p, "scenario", "i");
    std::map<std::string, char> code{{"i", '1'}, {"ii", '2'}, {"iii", '3'}, {"iv", '4'}};
    if (!code.count(s)) throw UnknownExample("scenario must be i, ii, iii or iv");
    ObstructionScenario sc = obstruction_scenario(code[s]);
    return {"algebroid", "obstruction-scenario-" + s, "algebroid on B^op(x)B with twisted antipodes",
            expected_stage_name(sc.expected), sc.algebroid};
  }
  bool twisted = name == "twisted-coproduct" || name == "twist-5.4";
  if (twisted || name == "mixed-algebroid" || name == "twist-5.5") {
    std::string base = param(p, "base", "convolution");
    TwistDefinition t;
    std::string expected;
    if (base == "convolution") {
      std::size_t n = size_param(p, "n", 2);
      Groupoid g = pair_groupoid(n);
      t = {groupoid_convolution_wmha(g), unit_embedding(g), unit_weight_twist(n)};
      expected = "CounitsDiffer";
    } else if (base == "M2") {
      SeparabilityIdempotent sep = weighted_separability_M2();
      t = {separability_wmha(sep), separability_wmha_B_embedding(sep), frozen_twist_M2()};
      expected = "success";
    } else {
      throw UnknownExample("base must be convolution or M2");
    }
    if (twisted)
      return {"twist", "twist-" + base, "twisted coproduct (u(x)1)Delta(a)(v(x)1)", expected, t};
    return {"algebroid", "mixed-algebroid-" + base,
            "left structure of Delta with the right structure of the twisted coproduct", expected,
            mixed_algebroid(t.wmha, t.B_emb, t.twist)};
  }
  throw UnknownExample("unknown example '" + name + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and conversions for weak multiplier Hopf algebras and multiplier Hopf algebroids"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--probes", opt.probes, "Probe units for lazily presented groupoids");
  app.add_option("--phi", opt.phi_file, "JSON file with candidate functionals on B");
  app.add_option("--out", opt.out_file, "Output definition file");

  std::string file;
  auto* check_wmha_cmd = app.add_subcommand("check-wmha", "Run the weak multiplier Hopf algebra suite");
  auto* check_alg_cmd = app.add_subcommand("check-algebroid", "Run the multiplier Hopf algebroid suite");
  auto* fwd_cmd = app.add_subcommand("wmha-to-algebroid", "Build the algebroid of a weak multiplier Hopf algebra");
  auto* back_cmd = app.add_subcommand("algebroid-to-wmha", "Reconstruct a weak multiplier Hopf algebra");
  auto* rt_cmd = app.add_subcommand("roundtrip", "Forward then backward, comparing all structure tensors");
  for (auto* c : {check_wmha_cmd, check_alg_cmd, fwd_cmd, back_cmd, rt_cmd}) {
    c->add_option("file", file, "Definition file")->required();
    c->fallthrough();
  }
  auto* gen_cmd = app.add_subcommand("gen-example", "Write a corpus definition file");
  std::string example;
  std::vector<std::string> params;
  gen_cmd->add_option("name", example, "Example name")->required();
  gen_cmd->add_option("params", params, "key=value parameters");
  gen_cmd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*gen_cmd) {
      Params p;
      for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UnknownExample("parameters are key=value, got '" + kv + "'");
        p[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      Definition d = generate(example, p);
      std::string text = dump_definition(d);
      if (opt.out_file.empty()) out << text;
      else write_file(opt.out_file, text);
      return kExitPass;
    }
    Outcome o;
    if (*check_wmha_cmd) o = cmd_check_wmha(file, opt);
    else if (*check_alg_cmd) o = cmd_check_algebroid(file, opt);
    else if (*fwd_cmd) o = cmd_wmha_to_algebroid(file, opt);
    else if (*back_cmd) o = cmd_algebroid_to_wmha(file, opt);
    else o = cmd_roundtrip(file, opt);
    emit(o, opt, out);
    return o.exit_code();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
  } catch (const UnknownExample& e) {
    err << "unknown example: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace wmha
