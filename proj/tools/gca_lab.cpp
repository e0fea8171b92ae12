#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gca/automaton.hpp"
#include "gca/catalog.hpp"
#include "gca/configuration.hpp"
#include "gca/equivariance.hpp"
#include "gca/error.hpp"
#include "gca/report.hpp"
#include "gca/structure.hpp"
#include "gca/verify.hpp"
#include "gca/workspace.hpp"

using namespace gca;
using nlohmann::ordered_json;

namespace {

struct Args {
  std::string workspace;
  std::string report_path;
  std::string format = "text";
  std::string gca, first, second, phi, psi, group, subgroup, domain, codomain, input, window;
  std::size_t q = 2;
  std::size_t max_order = 6;
  std::size_t max_memory = 2;
  std::uint64_t seed = 1;
};

class Lab {
 public:
  explicit Lab(const Args& args) : args_(args) {}

  const Workspace& ws() {
    if (!ws_) {
      require(!args_.workspace.empty(), ErrorKind::InvalidArgument, "this command needs --workspace");
      ws_ = Workspace::load(args_.workspace);
    }
    return *ws_;
  }

  std::string hom_name(const Homomorphism& phi) {
    if (ws_)
      if (auto name = ws_->name_of(phi)) {
        const auto& named = ws_->homomorphism(*name);
        if (named.domain().name() == phi.domain().name() && named.codomain().name() == phi.codomain().name())
          return *name;
      }
    return phi.describe();
  }

  ordered_json memory_json(const Group& g, const std::vector<Element>& memory) {
    ordered_json out = ordered_json::array();
    for (const auto& m : memory) out.push_back(g.format(m));
    return out;
  }

  ordered_json gca_json(const Gca& t) {
    ordered_json j;
    j["phi"] = hom_name(t.phi());
    j["from"] = t.source().name();
    j["to"] = t.target().name();
    j["q"] = t.alphabet().size();
    j["memory"] = memory_json(t.source(), t.rule().memory());
    ordered_json table = ordered_json::array();
    for (auto s : t.rule().table()) table.push_back(int(s));
    j["table"] = table;
    return j;
  }

  static Check verdict(const std::string& name, bool ok, std::string detail = {}, std::size_t cases = 0) {
    return Check{name, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail), cases, std::nullopt};
  }

  std::vector<Element> parse_window(const Group& h) {
    std::vector<Element> out;
    std::stringstream in(args_.window);
    std::string part;
    while (std::getline(in, part, ';'))
      if (!part.empty()) out.push_back(parse_element(part, h));
    return out;
  }

  void apply_cmd(Report& r) {
    const Gca& t = ws().gca(args_.gca);
    const auto x = parse_configuration(args_.input, t.source(), t.alphabet());
    r.fact("gca", args_.gca);
    r.fact("input", format_configuration(x));
    std::vector<Element> window;
    if (!args_.window.empty()) {
      window = parse_window(t.target());
    } else {
      require(t.target().is_finite(), ErrorKind::InvalidArgument, "infinite output group: pass --window");
      window = t.target().elements();
    }
    const Pattern out = apply_window(t, x, window);
    if (args_.window.empty()) r.fact("output", format_configuration(apply(t, x)));
    else r.fact("output", format_pattern(t.target(), out));
    bool agree = true;
    for (const auto& h : window) agree = agree && out.at(h) == reference_evaluate(t, x, h);
    r.check(verdict("core.reference-evaluation", agree, "output cells recomputed from the definition", window.size()));
  }

  void compose_cmd(Report& r) {
    const Gca& first = ws().gca(args_.first);
    const Gca& second = ws().gca(args_.second);
    const Gca c = compose(first, second);
    r.fact("first", args_.first);
    r.fact("second", args_.second);
    r.fact("composed", gca_json(c));
    if (!c.is_finite() || !first.is_finite() ||
        configuration_count(first.source().order(), first.alphabet().size()) > (std::size_t{1} << 20)) {
      r.check({"core.compose-sequential", CheckStatus::Unsupported, "needs finite groups within the budget", 0, {}});
      return;
    }
    const DenseEvaluator ec(c), e1(first), e2(second);
    std::vector<Symbol> x(first.source().order(), 0);
    std::size_t cases = 0;
    bool ok = true;
    do {
      ok = ok && ec(x) == e2(e1(x));
      ++cases;
    } while (ok && next_configuration(x, first.alphabet().size()));
    r.check(verdict("core.compose-sequential", ok, "composed automaton against applying both in turn", cases));
  }

  void factorize_cmd(Report& r) {
    const Gca& t = ws().gca(args_.gca);
    const auto f = factorize(t);
    r.fact("gca", args_.gca);
    r.fact("tau", gca_json(f.tau));
    r.fact("phi", hom_name(f.phi));
    if (!t.is_finite()) {
      r.check({"core.factorization", CheckStatus::Unsupported, "exhaustive comparison needs finite groups", 0, {}});
      return;
    }
    r.check(verdict("core.factorization", same_map(compose(f.tau, pullback(f.phi, t.alphabet())), t),
                    "pullback after tau equals the automaton"));
  }

  void minimize_cmd(Report& r) {
    const Gca& t = ws().gca(args_.gca);
    const Gca m = minimized(t);
    r.fact("gca", args_.gca);
    r.fact("minimal_memory", memory_json(t.source(), minimal_memory_set(t)));
    r.fact("minimized", gca_json(m));
    r.check(verdict("core.minimization", same_map(m, t), "minimized rule realizes the same map"));
  }

  void delta_cmd(Report& r) {
    const auto& phi = ws().homomorphism(args_.phi);
    const auto& psi = ws().homomorphism(args_.psi);
    const auto d = difference_set(phi, psi);
    r.fact("phi", args_.phi);
    r.fact("psi", args_.psi);
    if (d.finite) {
      r.fact("delta", memory_json(phi.codomain(), d.elements));
      r.fact("trivial", d.is_trivial());
    } else {
      r.fact("delta", "infinite; certificate direction " + std::to_string(*d.direction + 1));
    }
  }

  void equivariance_cmd(Report& r) {
    const Gca& t = ws().gca(args_.gca);
    const auto& psi = ws().homomorphism(args_.psi);
    const auto v = decide_equivariance(t, psi);
    r.fact("gca", args_.gca);
    r.fact("psi", args_.psi);
    r.fact("equivariant", v.equivariant);
    r.fact("method", to_string(v.method));
    if (v.witness) {
      ordered_json w;
      w["h"] = t.target().format(v.witness->h);
      w["x"] = format_configuration(v.witness->x);
      w["value_phi"] = int(v.witness->value_phi);
      w["value_psi"] = int(v.witness->value_psi);
      r.fact("witness", w);
    }
    if (!v.equivariant)
      r.check(verdict("equivariance.witness-reverified", v.witness && v.reverified,
                      "witness values recomputed from the definition"));
  }

  void uhp_scan_cmd(Report& r) {
    const Gca& t = ws().gca(args_.gca);
    const auto homs = uhp_scan(t);
    ordered_json names = ordered_json::array();
    for (const auto& h : homs) names.push_back(hom_name(h));
    r.fact("gca", args_.gca);
    r.fact("homomorphisms", names);
    r.fact("verdict", homs.size() == 1 ? "UHP holds" : "UHP fails");
    bool contains = false;
    for (const auto& h : homs) contains = contains || h == t.phi();
    r.check(verdict("equivariance.scan-contains-phi", contains, "the automaton's own homomorphism is listed"));
  }

  void counterexample_cmd(Report& r) {
    const auto& phi = ws().homomorphism(args_.phi);
    const auto& psi = ws().homomorphism(args_.psi);
    const auto c = symmetric_counterexample(phi, psi, Alphabet(args_.q));
    r.fact("phi", args_.phi);
    r.fact("psi", args_.psi);
    r.fact("exists", c.exists);
    if (!c.exists) {
      r.fact("reason", c.reason);
      r.check({"equivariance.symmetric-counterexample", CheckStatus::Unsupported, c.reason, 0, {}});
      return;
    }
    r.fact("memory_subgroup", c.memory->describe());
    r.fact("tau", gca_json(*c.tau));
    r.check(verdict("equivariance.symmetric-counterexample", c.verified && !c.tau->rule().is_constant(),
                    "non-constant tau with equal pullback compositions"));
  }

  void quotient_cmd(Report& r) {
    const Gca& t = ws().gca(args_.gca);
    const Subgroup& n = ws().subgroup(args_.subgroup);
    const auto p = quotient_gca(t, n);
    r.fact("gca", args_.gca);
    r.fact("normal", args_.subgroup);
    r.fact("quotient_group", p.quotient.group.name());
    r.fact("induced", p.induced.describe());
    r.fact("quotient_gca", gca_json(p.quotient_gca));
    r.check(verdict("structure.quotient-diagram", p.diagram_verified, "lift after quotient equals t after lift"));
  }

  void restrict_cmd(Report& r) {
    const Gca& t = ws().gca(args_.gca);
    const Subgroup& k = ws().subgroup(args_.subgroup);
    const auto p = restrict(t, k);
    r.fact("gca", args_.gca);
    r.fact("subgroup", args_.subgroup);
    r.fact("image_subgroup", p.image_subgroup.describe());
    r.fact("restricted", gca_json(p.restricted));
    if (!t.is_finite()) {
      r.check({"structure.restriction-diagram", CheckStatus::Unsupported, "exhaustive check needs finite groups", 0, {}});
      return;
    }
    r.check(verdict("structure.restriction-diagram", p.diagram_verified, "restriction commutes with the automaton"));
  }

  void induce_cmd(Report& r) {
    const Gca& s = ws().gca(args_.gca);
    const Subgroup& k = ws().subgroup(args_.subgroup);
    const auto& phi = ws().homomorphism(args_.phi);
    const Gca t = induce(s, k, phi);
    r.fact("gca", args_.gca);
    r.fact("subgroup", args_.subgroup);
    r.fact("phi", args_.phi);
    r.fact("induced", gca_json(t));
    r.check(verdict("structure.induction-roundtrip", same_map(restrict(t, k).restricted, s),
                    "restricting the induced automaton gives it back"));
  }

  void transfer_cmd(Report& r) {
    const Gca& t = ws().gca(args_.gca);
    const Subgroup& k = ws().subgroup(args_.subgroup);
    const auto x = transfer_theorem_check(t, k);
    r.fact("gca", args_.gca);
    r.fact("subgroup", args_.subgroup);
    r.fact("injective", x.injective);
    r.fact("surjective", x.surjective);
    r.fact("restricted_injective", x.restricted_injective);
    r.fact("restricted_surjective", x.restricted_surjective);
    r.fact("phi_injective", x.phi_injective);
    r.fact("phi_surjective", x.phi_surjective);
    r.check(verdict("structure.injectivity-transfer", x.injectivity_transfer,
                    "injective iff restricted injective and phi surjective"));
    r.check(verdict("structure.bijectivity-transfer", x.bijectivity_transfer,
                    "bijective iff restricted bijective and phi bijective"));
    r.check(verdict("structure.restricted-pullback", x.restricted_pullback_injective,
                    "pullback along the restricted homomorphism is injective"));
  }

  void submonoid_cmd(Report& r) {
    const Subgroup& k = ws().subgroup(args_.subgroup);
    const auto x = gca_submonoid_check(k.parent(), k, args_.max_memory, Alphabet(args_.q));
    r.fact("subgroup", args_.subgroup);
    r.fact("group", k.parent().name());
    r.fact("fully_invariant", x.fully_invariant);
    r.fact("closed", x.closed);
    r.fact("rules", x.rules);
    r.fact("compositions", x.compositions);
    if (x.escape) r.fact("escape", *x.escape);
    r.check(verdict("structure.submonoid", x.agree(), "closure under composition matches full invariance"));
  }

  void surjectivity_cmd(Report& r) {
    const Group& h = ws().group(args_.domain);
    const Group& g = ws().group(args_.codomain);
    const auto x = surjectivity_experiment(h, g, args_.max_memory, Alphabet(args_.q));
    r.fact("domain", args_.domain);
    r.fact("codomain", args_.codomain);
    r.fact("instances", x.instances);
    ordered_json counts;
    counts["both"] = x.counts[1][1];
    counts["whole_only"] = x.counts[1][0];
    counts["restricted_only"] = x.counts[0][1];
    counts["neither"] = x.counts[0][0];
    r.fact("surjective_counts", counts);
  }

  void verify_cmd(Report& r) {
    run_verify(VerifyOptions{args_.max_order, args_.q, args_.max_memory, args_.seed}, r);
  }

 private:
  const Args& args_;
  std::optional<Workspace> ws_;
};

// argv without the report destination, so reports written to different
// paths stay identical.
std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--report") {
      ++i;
      continue;
    }
    if (a.rfind("--report=", 0) == 0) continue;
    out += (out.empty() ? "" : " ") + a;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized cellular automata workbench"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Args args;
  app.add_option("--workspace,-w", args.workspace, "JSON definition document");
  app.add_option("--report", args.report_path, "also write the JSON report here");
  app.add_option("--format", args.format, "stdout rendering")->check(CLI::IsMember({"text", "json"}));

  using Handler = void (Lab::*)(Report&);
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  const auto sub = [&](const char* name, const char* help, Handler h) {
    auto* s = app.add_subcommand(name, help);
    handlers.emplace_back(s, h);
    return s;
  };

  auto* apply = sub("apply", "evaluate an automaton on a configuration", &Lab::apply_cmd);
  apply->add_option("--gca", args.gca)->required();
  apply->add_option("--input", args.input, "dense:[..] | support:default=b;{..} | periodic:..")->required();
  apply->add_option("--window", args.window, "output cells separated by ';'");

  auto* comp = sub("compose", "second after first", &Lab::compose_cmd);
  comp->add_option("--first", args.first)->required();
  comp->add_option("--second", args.second)->required();

  for (auto [name, help, h] : {std::tuple{"factorize", "split into pullback and tau", &Lab::factorize_cmd},
                               std::tuple{"minimize", "minimal memory set and rule", &Lab::minimize_cmd},
                               std::tuple{"uhp-scan", "every homomorphism realizing the same map", &Lab::uhp_scan_cmd}})
    sub(name, help, h)->add_option("--gca", args.gca)->required();

  for (auto [name, help, h] :
       {std::tuple{"delta", "difference set of two homomorphisms", &Lab::delta_cmd},
        std::tuple{"counterexample", "symmetric rule equal under both homomorphisms", &Lab::counterexample_cmd}}) {
    auto* s = sub(name, help, h);
    s->add_option("--phi", args.phi)->required();
    s->add_option("--psi", args.psi)->required();
    if (std::string(name) == "counterexample") s->add_option("--q", args.q);
  }

  auto* eq = sub("equivariance", "decide whether the automaton is also over psi", &Lab::equivariance_cmd);
  eq->add_option("--gca", args.gca)->required();
  eq->add_option("--psi", args.psi)->required();

  for (auto [name, help, h] : {std::tuple{"quotient", "automaton on the quotient by a normal subgroup", &Lab::quotient_cmd},
                               std::tuple{"restrict", "restriction to a subgroup", &Lab::restrict_cmd},
                               std::tuple{"transfer", "injectivity and bijectivity transfer", &Lab::transfer_cmd}}) {
    auto* s = sub(name, help, h);
    s->add_option("--gca", args.gca)->required();
    s->add_option("--subgroup", args.subgroup)->required();
  }

  auto* ind = sub("induce", "extend an automaton over a restricted homomorphism", &Lab::induce_cmd);
  ind->add_option("--gca", args.gca)->required();
  ind->add_option("--subgroup", args.subgroup)->required();
  ind->add_option("--phi", args.phi)->required();

  auto* sm = sub("submonoid", "closure of automata with memory in a subgroup", &Lab::submonoid_cmd);
  sm->add_option("--subgroup", args.subgroup)->required();
  sm->add_option("--max-memory", args.max_memory);
  sm->add_option("--q", args.q);

  auto* ver = sub("verify", "run the full invariant suite", &Lab::verify_cmd);
  ver->add_option("--max-order", args.max_order);
  ver->add_option("--q", args.q);
  ver->add_option("--max-memory", args.max_memory);
  ver->add_option("--seed", args.seed);

  auto* sur = sub("surjectivity", "tally joint surjectivity of automata and restrictions", &Lab::surjectivity_cmd);
  sur->add_option("--domain", args.domain)->required();
  sur->add_option("--codomain", args.codomain)->required();
  sur->add_option("--max-memory", args.max_memory);
  sur->add_option("--q", args.q);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report report(command_echo(argc, argv));
  Lab lab(args);
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    for (const auto& [s, h] : handlers)
      if (s->parsed()) (lab.*h)(report);
    code = report.exit_code();
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    const auto status = code == 3 ? CheckStatus::Unsupported : CheckStatus::Fail;
    report.check({"error", status, std::string(to_string(e.kind())) + ": " + e.what(), 0, std::nullopt});
    std::cerr << "error: " << e.what() << "\n";
  }
  report.set_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());

  std::cout << (args.format == "json" ? report.json_text() : report.text());
  if (!args.report_path.empty()) {
    std::ofstream out(args.report_path);
    if (!out) {
      std::cerr << "error: cannot write " << args.report_path << "\n";
      return 2;
    }
    out << report.json_text();
  }
  return code;
}
