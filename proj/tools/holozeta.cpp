// holozeta: command-line front end.
//
// Exit codes: 0 success, 1 failed verification or numeric/internal error,
// 2 stage timeout, 3 input error.

#include <yaml-cpp/yaml.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "holozeta/bfunction.hpp"
#include "holozeta/format.hpp"
#include "holozeta/integration.hpp"
#include "holozeta/laurent.hpp"
#include "holozeta/oracle.hpp"

#ifndef HOLOZETA_VERSION
#define HOLOZETA_VERSION "0.0.0"
#endif
#ifndef HOLOZETA_BUILD_ID
#define HOLOZETA_BUILD_ID "unknown"
#endif

using namespace holozeta;
using json = nlohmann::ordered_json;

namespace {

struct Problem {
  std::vector<std::string> vars;
  std::string f;
  std::vector<std::string> annihilator;
  std::optional<std::string> lambda0;
  std::optional<int> k;
  std::vector<std::string> phi;
  bool assume_saturated = false;
};

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem file '" + path + "'");
  YAML::Node doc;
  try {
    doc = YAML::Load(in);
  } catch (const YAML::Exception& e) {
    throw InputError("problem file: " + std::string(e.what()));
  }
  if (!doc.IsMap()) throw InputError("problem file: expected a mapping of keys");
  static const std::vector<std::string> known{"vars", "f", "annihilator", "lambda0", "k", "phi", "assume_saturated"};
  for (const auto& kv : doc) {
    const auto key = kv.first.as<std::string>();
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InputError("problem file: unknown key '" + key + "'");
  }
  Problem p;
  try {
    if (!doc["vars"] || !doc["vars"].IsSequence()) throw InputError("problem file: 'vars' must be a list");
    p.vars = doc["vars"].as<std::vector<std::string>>();
    if (!doc["f"]) throw InputError("problem file: missing 'f'");
    p.f = doc["f"].as<std::string>();
    if (!doc["annihilator"] || !doc["annihilator"].IsSequence())
      throw InputError("problem file: 'annihilator' must be a list");
    p.annihilator = doc["annihilator"].as<std::vector<std::string>>();
    if (doc["lambda0"]) p.lambda0 = doc["lambda0"].as<std::string>();
    if (doc["k"]) p.k = doc["k"].as<int>();
    if (doc["phi"]) p.phi = doc["phi"].as<std::vector<std::string>>();
    if (doc["assume_saturated"]) p.assume_saturated = doc["assume_saturated"].as<bool>();
  } catch (const YAML::Exception& e) {
    throw InputError("problem file: " + std::string(e.what()));
  }
  return p;
}

PhiSpec parse_phi(const std::vector<std::string>& tags) {
  PhiSpec phi;
  for (const auto& t : tags) {
    if (t == "gaussian")
      phi.factors.push_back(PhiFactor::kGaussian);
    else if (t == "exp")
      phi.factors.push_back(PhiFactor::kExp);
    else if (t == "exp_inverse")
      phi.factors.push_back(PhiFactor::kExpInverse);
    else
      throw InputError("unknown phi factor '" + t + "' (gaussian, exp, exp_inverse)");
  }
  return phi;
}

struct Settings {
  std::string command;
  std::string file;
  bool as_json = false;
  bool timings = false;
  double timeout = 0;
  std::string lambda0;
  std::optional<int> k;
  double box = 12;
  double tol = 1e-6;
};

json stats_json(const GbStats& st, bool timings) {
  json j{{"pairs_created", st.pairs_created},
         {"pairs_reduced", st.pairs_reduced},
         {"zero_reductions", st.zero_reductions},
         {"basis_size", st.basis_size}};
  if (timings) j["seconds"] = st.seconds;
  return j;
}

json strings(const std::vector<WeylOperator>& ops) {
  json a = json::array();
  for (const auto& g : ops) a.push_back(to_string(g));
  return a;
}

json difference_json(const DifferenceOperator& L) {
  json c = json::object();
  for (const auto& [k, a] : L.coeffs()) c[std::to_string(k)] = a.str("s");
  return {{"text", L.str()}, {"order", L.order()}, {"coefficients", c}};
}

class Runner {
 public:
  Runner(Settings s, Problem p) : set_(std::move(s)), prob_(std::move(p)) {}

  int run();
  const json& document() const { return doc_; }

 private:
  GbOptions stage(const std::string& name) {
    GbOptions o;
    o.stage = name;
    if (set_.timeout > 0)
      o.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(set_.timeout));
    current_ = name;
    started_ = Clock::now();
    return o;
  }
  void done() {
    if (set_.timings) doc_["timings"][current_] = std::chrono::duration<double>(Clock::now() - started_).count();
  }
  void need_saturation() const {
    if (!prob_.assume_saturated)
      throw InputError("this command needs 'assume_saturated: true' in the problem file");
  }

  void do_ann();
  void do_bfun();
  void do_funceq();
  void do_laurent();
  void do_zeta();
  bool do_verify();

  Settings set_;
  Problem prob_;
  ProblemInstance inst_;
  json doc_;
  json& results() { return doc_["results"]; }
  std::string current_ = "parse";
  Clock::time_point started_;
  std::optional<IdealPresentation> ann_;
  std::optional<FunctionalEquation> eqn_;
  std::optional<LaurentSystem> laurent_;
  std::optional<ZetaResult> zeta_;
};

void Runner::do_ann() {
  if (ann_) return;
  GbOptions o = stage("ann-fs");
  ann_ = ann_fs(inst_, o);
  done();
  results()["ann_fs"] = {{"generators", strings(ann_->basis())}, {"stats", stats_json(ann_->stats(), set_.timings)}};
}

void Runner::do_bfun() {
  if (eqn_) return;
  need_saturation();
  do_ann();
  GbOptions o = stage("bfun");
  const BFunction b = bfunction(*ann_, inst_.f, o);
  done();
  json roots = json::array();
  for (const auto& r : b.roots) roots.push_back({{"root", to_string(r.root)}, {"multiplicity", r.multiplicity}});
  results()["bfunction"] = {{"monic", b.poly.str("s")},
                            {"factored", b.factored()},
                            {"roots", roots},
                            {"nonrational_part", b.nonrational_part.str("s")}};
  o = stage("funceq");
  eqn_ = functional_operator(*ann_, inst_.f, b, o);
  done();
}

void Runner::do_funceq() {
  do_bfun();
  results()["functional_equation"] = {{"P0", to_string(eqn_->P0)}};
}

void Runner::do_laurent() {
  need_saturation();
  const std::string l0 = !set_.lambda0.empty() ? set_.lambda0 : prob_.lambda0.value_or("");
  if (l0.empty()) throw InputError("laurent needs lambda0 (--lambda0 or the problem file)");
  const Rational lambda0 = parse_rational(l0);
  const int k = set_.k ? *set_.k : prob_.k.value_or(-1);
  do_bfun();
  GbOptions o = stage("laurent");
  laurent_ = ann_laurent(inst_, *ann_, *eqn_, lambda0, k, o);
  done();
  results()["laurent"] = {{"lambda0", to_string(lambda0)},
                          {"k", k},
                          {"m", laurent_->m},
                          {"l", laurent_->l},
                          {"b_shifted", factored_string(laurent_->b)},
                          {"Q", strings(laurent_->Qk)},
                          {"generators", strings(laurent_->ann_w.basis())}};
}

void Runner::do_zeta() {
  if (zeta_) return;
  GbOptions o = stage("zeta-diff");
  zeta_ = zeta_difference(inst_, o);
  done();
  json ops = json::array();
  for (const auto& L : zeta_->ops) ops.push_back(difference_json(L));
  results()["zeta"] = {{"weight_bfunction", zeta_->bw.str("theta")},
                       {"k0", zeta_->k0 ? json(*zeta_->k0) : json(nullptr)},
                       {"d1_generators", strings(zeta_->d1_ideal.basis())},
                       {"difference_operators", ops}};
}

bool Runner::do_verify() {
  need_saturation();
  json checks = json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool passed, const std::string& detail) {
    checks.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
    ok = ok && passed;
  };
  do_funceq();
  stage("verify/symbolic");
  const SectionContext ctx = SectionContext::make(inst_);
  const LogSection one = LogSection::basic(ctx, WeylOperator::constant(inst_.dns, 1));
  int bad = 0;
  for (const auto& g : ann_->basis())
    if (!section_is_zero(apply_log_section(g, one, ctx), ctx)) ++bad;
  record("ann-fs generators annihilate f^s", bad == 0, std::to_string(ann_->basis().size() - bad) + "/" +
                                                            std::to_string(ann_->basis().size()));
  const LogSection lhs = apply_log_section(eqn_->P0, LogSection::basic(ctx, inst_.f), ctx);
  const LogSection rhs = LogSection::basic(ctx, from_upoly(eqn_->b.poly, inst_.dns, inst_.dns->central(Central::kS)));
  record("P0 f^(s+1) = b(s) f^s", section_is_zero(add(ctx, lhs, scale(ctx, rhs, -1)), ctx), eqn_->b.factored());
  if (!set_.lambda0.empty() || prob_.lambda0) {
    do_laurent();
    stage("verify/laurent");
    const LogSection sec = laurent_section(ctx, *laurent_);
    const Rational at = parse_rational(results()["laurent"]["lambda0"].get<std::string>()) + laurent_->m;
    bad = 0;
    for (const auto& g : laurent_->ann_w.basis())
      if (!section_is_zero(apply_log_section(g, sec, ctx), ctx, at)) ++bad;
    record("Laurent generators annihilate the coefficient", bad == 0,
           std::to_string(laurent_->ann_w.basis().size() - bad) + "/" +
               std::to_string(laurent_->ann_w.basis().size()));
  }
  done();
  if (!prob_.phi.empty()) {
    do_zeta();
    stage("verify/numeric");
    int order = 0;
    for (const auto& L : zeta_->ops) order = std::max(order, L.order());
    std::vector<double> lambdas;
    for (int i = 0; i <= order + 4; ++i) lambdas.push_back(i);
    QuadratureOptions q;
    q.box = set_.box;
    q.tol = std::min(set_.tol * 1e-2, 1e-8);
    const auto z = numeric_zeta(inst_.f, parse_phi(prob_.phi), lambdas, q);
    const double r = residual_check(zeta_->ops, z);
    std::ostringstream os;
    os << "max relative residual " << r << " on lambda = 0.." << order + 4;
    record("difference operators annihilate numeric Z", r <= set_.tol, os.str());
    done();
  }
  results()["verify"] = {{"checks", checks}, {"passed", ok}};
  return ok;
}

int Runner::run() {
  doc_["command"] = set_.command;
  doc_["version"] = HOLOZETA_VERSION;
  doc_["problem"] = {{"vars", prob_.vars}, {"f", prob_.f}, {"annihilator", prob_.annihilator}};
  doc_["status"] = "ok";
  doc_["results"] = json::object();
  int code = 0;
  try {
    current_ = "parse";
    inst_ = ProblemInstance::parse(prob_.vars, prob_.f, prob_.annihilator, prob_.assume_saturated);
    // echo the canonical form of the parsed input
    doc_["problem"]["f"] = to_string(inst_.f);
    doc_["problem"]["annihilator"] = strings(inst_.I);
    if (!prob_.phi.empty() && parse_phi(prob_.phi).factors.size() != prob_.vars.size())
      throw InputError("phi needs one factor per variable");
    if (set_.command == "ann-fs")
      do_ann();
    else if (set_.command == "bfun")
      do_bfun();
    else if (set_.command == "funceq")
      do_funceq();
    else if (set_.command == "laurent")
      do_laurent();
    else if (set_.command == "zeta-diff")
      do_zeta();
    else if (set_.command == "verify" && !do_verify()) {
      doc_["status"] = "failed";
      code = 1;
    }
  } catch (const TimeoutError& e) {
    doc_["status"] = "timeout";
    doc_["stage"] = e.stage();
    doc_["message"] = e.what();
    code = 2;
  } catch (const InputError& e) {
    doc_["status"] = "input-error";
    doc_["stage"] = current_;
    doc_["message"] = e.what();
    code = 3;
  } catch (const NumericError& e) {
    doc_["status"] = "numeric-error";
    doc_["stage"] = current_;
    doc_["message"] = e.what();
    code = 1;
  } catch (const std::exception& e) {
    doc_["status"] = "internal-error";
    doc_["stage"] = current_;
    doc_["message"] = e.what();
    code = 1;
  }
  return code;
}

void print_text(const json& d, std::ostream& out) {
  const json& r = d["results"];
  auto list = [&](const char* title, const json& a) {
    out << title << ":\n";
    for (const auto& g : a) out << "  " << g.get<std::string>() << "\n";
  };
  if (r.contains("ann_fs")) list("Ann f^s", r["ann_fs"]["generators"]);
  if (r.contains("bfunction")) {
    out << "b-function: " << r["bfunction"]["factored"].get<std::string>() << "\n";
    out << "monic: " << r["bfunction"]["monic"].get<std::string>() << "\n";
  }
  if (r.contains("functional_equation")) out << "P0: " << r["functional_equation"]["P0"].get<std::string>() << "\n";
  if (r.contains("laurent")) {
    const json& l = r["laurent"];
    out << "lambda0 = " << l["lambda0"].get<std::string>() << ", k = " << l["k"] << ", m = " << l["m"]
        << ", l = " << l["l"] << "\n";
    list("annihilator of the Laurent coefficient", l["generators"]);
  }
  if (r.contains("zeta")) {
    const json& z = r["zeta"];
    out << "weight b-function: " << z["weight_bfunction"].get<std::string>() << ", k0 = "
        << (z["k0"].is_null() ? std::string("none") : z["k0"].dump()) << "\n";
    out << "difference operators:\n";
    for (const auto& L : z["difference_operators"]) out << "  " << L["text"].get<std::string>() << "\n";
  }
  if (r.contains("verify")) {
    for (const auto& c : r["verify"]["checks"])
      out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " ("
          << c["detail"].get<std::string>() << ")\n";
  }
  if (d.contains("timings"))
    for (const auto& [k, v] : d["timings"].items()) out << "time " << k << ": " << v.get<double>() << " s\n";
  if (d["status"] != "ok") {
    out << d["status"].get<std::string>();
    if (d.contains("stage")) out << " in " << d["stage"].get<std::string>();
    if (d.contains("message")) out << ": " << d["message"].get<std::string>();
    out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holozeta: annihilators, b-functions, Laurent coefficients and zeta difference equations"};
  app.set_version_flag("--version", std::string("holozeta ") + HOLOZETA_VERSION + " (" + HOLOZETA_BUILD_ID + ")");
  app.require_subcommand(1);
  Settings set;
  std::string lambda0;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"ann-fs", "annihilator of f^s (x) u in D_n[s]"},
      {"bfun", "generalized b-function"},
      {"funceq", "b-function and the functional-equation operator P0"},
      {"laurent", "annihilator of a Laurent coefficient of f_+^lambda phi"},
      {"zeta-diff", "difference equations for the local zeta function"},
      {"verify", "symbolic and numeric checks of the computed objects"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("problem", set.file, "problem file")->required();
    sub->add_flag("--json", set.as_json, "machine-readable output");
    sub->add_flag("--timings", set.timings, "report wall-clock time per stage");
    sub->add_option("--timeout", set.timeout, "seconds allowed per stage (0: unlimited)");
    sub->add_option("--lambda0", set.lambda0, "rational point, e.g. -5/6");
    sub->add_option("--k", set.k, "Laurent index (default -1, the residue)");
    sub->add_option("--box", set.box, "half-width of the quadrature box");
    sub->add_option("--tol", set.tol, "relative tolerance of numeric checks");
    sub->callback([&set, name = name] { set.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  json doc;
  int code;
  try {
    Runner r(set, load_problem(set.file));
    code = r.run();
    doc = r.document();
  } catch (const InputError& e) {
    doc = {{"command", set.command}, {"version", HOLOZETA_VERSION}, {"status", "input-error"},
           {"stage", "parse"}, {"message", e.what()}, {"results", json::object()}};
    code = 3;
  }
  if (set.as_json)
    std::cout << doc.dump(2) << "\n";
  else
    print_text(doc, code == 0 || code == 1 ? std::cout : std::cerr);
  return code;
}
