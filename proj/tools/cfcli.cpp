// cfcli: load instances, run coherence suites, print reports.
// Exit codes: 0 pass, 1 a check failed, 2 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cf/errors.hpp"
#include "cf/instance.hpp"
#include "cf/suites.hpp"

using namespace cf;

namespace {

struct Flags {
  std::uint64_t seed = 1;
  int dims = 2;
  int cases = 10;
  std::string field = "Qi";
  std::string json_out;
  std::string format = "text";
  bool drop_koszul = false;
  bool kappa_one = false;
};

Flags flags;

SuiteOptions suite_options() {
  SuiteOptions o;
  o.seed = flags.seed;
  o.dims = flags.dims;
  o.cases = flags.cases;
  o.field = parse_field(flags.field);
  o.drop_koszul = flags.drop_koszul;
  o.kappa_one = flags.kappa_one;
  return o;
}

Scalar kappa() { return flags.kappa_one ? Scalar(1) : kDefaultKappa; }

void write_json(const Json& j) {
  if (flags.json_out.empty()) return;
  std::ofstream f(flags.json_out);
  if (!f) throw IoError("cannot write " + flags.json_out);
  f << j.dump(2) << "\n";
}

// JSON on stdout (and to --json-out); returns the exit code
int emit(const Json& j, bool ok) {
  std::cout << j.dump(2) << "\n";
  write_json(j);
  return ok ? 0 : 1;
}

std::string space_name(const Instance& in, const SpacePtr& h) {
  for (const auto& [n, s] : in.spaces)
    if (s == h || same_space(*s, *h)) return n;
  return h->name;
}

int cmd_validate(const std::string& path) {
  auto in = load_instance(path);
  Json j{{"spaces", in.spaces.size()},         {"lagrangians", in.lagrangians.size()},
         {"correspondences", in.correspondences.size()}, {"spans", in.spans.size()},
         {"categories", in.categories.size()}, {"wannabes", in.wannabes.size()},
         {"fixtures", in.fixtures.size()}};
  if (flags.format == "json") return emit(j, true);
  std::cout << "ok: " << path << "\n";
  for (const auto& [k, v] : j.items()) std::cout << "  " << k << " " << v.get<int>() << "\n";
  write_json(j);
  return 0;
}

int cmd_compose(const std::string& path, const std::string& a, const std::string& b) {
  auto in = load_instance(path);
  if (in.spans.count(a) && in.spans.count(b)) {
    const auto &sa = in.span(a), &sb = in.span(b);
    if (!same_space(*sa.target, *sb.source)) throw InvalidInput("spans are not composable");
    auto s = compose_spans(sa, sb);
    auto rep = validate_span(s);
    Json j{{"source", space_name(in, s.source)},
           {"target", space_name(in, s.target)},
           {"w_dim", s.w_dim},
           {"eta", matrix_to_json(s.eta)},
           {"ker_dim", rep.ker_dim},
           {"valid", rep.ok}};
    return emit(j, rep.ok);
  }
  const auto &ca = in.correspondence(a), &cb = in.correspondence(b);
  if (!same_space(*ca.target, *cb.source)) throw InvalidInput("correspondences are not composable");
  auto c = compose_corr(ca, cb);
  auto rep = validate_lagrangian(*c.ambient, c.lag);
  Json j = correspondence_to_json(c, space_name(in, c.source), space_name(in, c.target));
  j["lagrangian"] = rep.ok;
  return emit(j, rep.ok);
}

int cmd_clifford(const std::string& path, const std::string& space) {
  auto in = load_instance(path);
  auto cl = build_clifford(in.space(space));
  auto v = validate_superalgebra(*cl.alg);
  Json j = algebra_to_json(*cl.alg);
  j["space"] = space;
  j["valid"] = v.ok;
  return emit(j, v.ok);
}

int cmd_fock(const std::string& path, const std::string& name) {
  auto in = load_instance(path);
  if (in.lagrangians.count(name)) {
    auto f = build_fock(in.lagrangian(name), kappa());
    bool ok = check_module_axiom(f);
    Json j{{"lagrangian", name},   {"dim", f.dim()}, {"parity", f.parity},
           {"vacuum", element_to_json(f.vacuum())}, {"module_axiom", ok}};
    return emit(j, ok);
  }
  auto fb = fock_bimodule(in.correspondence(name), kappa());
  bool ok = check_module_axiom(fb.fock);
  auto inv = invertibility_check(fb.mod);
  Json j = bimodule_to_json(fb.mod);
  j["correspondence"] = name;
  j["module_axiom"] = ok;
  j["invertible"] = inv.invertible;
  return emit(j, ok && inv.invertible);
}

int cmd_pfaffian(const std::string& path, const std::string& a, const std::string& b) {
  auto in = load_instance(path);
  const auto &ca = in.correspondence(a), &cb = in.correspondence(b);
  if (!same_space(*ca.target, *cb.source)) throw InvalidInput("correspondences are not composable");
  int k = pf_kernel(ca, cb).dim();
  Json j{{"kernel_dim", k}};
  bool ok = true;
  try {
    auto h = pf_hom(ca, cb, kappa());
    auto lam = lambda_iso(ca, cb, kappa());
    ok = h.line_parity() == k % 2;
    j["hom_dim"] = h.total_dim();
    j["parity"] = h.line_parity();
    j["generator"] = matrix_to_json(h.line_generator());
    j["lambda_comparison"] = scalar_to_json(lam.comparison);
  } catch (const InternalError& e) {
    ok = false;
    j["error"] = e.what();
  }
  j["verdict"] = ok ? "pass" : "fail";
  return emit(j, ok);
}

int print_suite(const SuiteReport& r) {
  Json j = suite_report_to_json(r);
  if (flags.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << suite_report_text(r);
  write_json(j);
  return r.pass() ? 0 : 1;
}

int cmd_coherence(const std::string& suite) {
  auto r = run_suite(suite, suite_options());
  int code = print_suite(r);
  if (flags.format != "json") std::cerr << suite << ": " << r.wall_seconds << " s\n";
  return code;
}

int cmd_fuzz(std::vector<std::string> suites) {
  if (suites.empty()) suites = suite_names();
  Json all = Json::array();
  bool ok = true;
  for (const auto& s : suites) {
    auto r = run_suite(s, suite_options());
    ok &= r.pass();
    all.push_back(suite_report_to_json(r));
    if (flags.format != "json") std::cout << s << " " << suite_report_text(r);
  }
  if (flags.format == "json") std::cout << all.dump(2) << "\n";
  write_json(all);
  return ok ? 0 : 1;
}

int cmd_report(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  Json j;
  try {
    j = Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + " is not valid JSON: " + e.what());
  }
  std::vector<SuiteReport> rs;
  if (j.is_array())
    for (const auto& x : j) rs.push_back(suite_report_from_json(x));
  else
    rs.push_back(suite_report_from_json(j));
  bool ok = true;
  for (const auto& r : rs) {
    ok &= r.pass();
    if (flags.format == "json")
      std::cout << suite_report_to_json(r).dump(2) << "\n";
    else
      std::cout << (rs.size() > 1 ? r.suite + " " : "") << suite_report_text(r);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford/Fock correspondences: exact coherence checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--seed", flags.seed, "base seed; case k uses seed + k");
  app.add_option("--dims", flags.dims, "max space dimension");
  app.add_option("--cases", flags.cases, "cases per suite");
  app.add_option("--field", flags.field, "Q or Qi")->check(CLI::IsMember({"Q", "Qi"}));
  app.add_option("--json-out", flags.json_out, "also write the JSON result here");
  app.add_option("--format", flags.format, "text or json")->check(CLI::IsMember({"text", "json"}));
#ifdef CF_TEST_HOOKS
  app.add_flag("--drop-koszul", flags.drop_koszul)->group("");
  app.add_flag("--kappa-one", flags.kappa_one)->group("");
#endif

  std::string path, a, b, suite;
  std::vector<std::string> suites;
  std::function<int()> run;

  auto* validate = app.add_subcommand("validate", "load and validate an instance file");
  validate->add_option("instance", path)->required();
  validate->callback([&] { run = [&] { return cmd_validate(path); }; });

  auto* compose = app.add_subcommand("compose", "compose two correspondences or two spans");
  compose->add_option("instance", path)->required();
  compose->add_option("first", a)->required();
  compose->add_option("second", b)->required();
  compose->callback([&] { run = [&] { return cmd_compose(path, a, b); }; });

  auto* clifford = app.add_subcommand("clifford", "Clifford algebra of a space");
  clifford->add_option("instance", path)->required();
  clifford->add_option("space", a)->required();
  clifford->callback([&] { run = [&] { return cmd_clifford(path, a); }; });

  auto* fock = app.add_subcommand("fock", "Fock module of a Lagrangian or bimodule of a correspondence");
  fock->add_option("instance", path)->required();
  fock->add_option("name", a)->required();
  fock->callback([&] { run = [&] { return cmd_fock(path, a); }; });

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian line of a composable pair");
  pf->add_option("instance", path)->required();
  pf->add_option("first", a)->required();
  pf->add_option("second", b)->required();
  pf->callback([&] { run = [&] { return cmd_pfaffian(path, a, b); }; });

  auto* coh = app.add_subcommand("coherence", "run one suite");
  coh->add_option("suite", suite)->required();
  coh->callback([&] { run = [&] { return cmd_coherence(suite); }; });

  auto* fuzz = app.add_subcommand("fuzz", "run several suites (default: all)");
  fuzz->add_option("--suites", suites)->delimiter(',');
  fuzz->callback([&] { run = [&] { return cmd_fuzz(suites); }; });

  auto* report = app.add_subcommand("report", "summarize a saved JSON report");
  report->add_option("file", path)->required();
  report->callback([&] { run = [&] { return cmd_report(path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run();
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
