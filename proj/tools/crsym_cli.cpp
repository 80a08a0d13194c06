// Command-line front end: exact computations on graded nilpotent symbols,
// Tanaka prolongations, central extensions and coordinate CR models.
#include <CLI11.hpp>
#include <functional>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crsym/acceptance.hpp"
#include "crsym/crmodel.hpp"
#include "crsym/prolong.hpp"

using namespace crsym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int depth_limit() {
  if (const char* env = std::getenv("GNLA_MAX_DEPTH")) return std::atoi(env);
  return 10;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "Gou(5)", "free(3)", "heis3", "m_HC", ..., or a path to a GNLA JSON file
GNLA load_algebra(const std::string& spec) {
  auto lp = spec.find('(');
  if (lp != std::string::npos && spec.back() == ')') {
    std::string name = spec.substr(0, lp);
    int n = std::stoi(spec.substr(lp + 1, spec.size() - lp - 2));
    if (name == "free") return free_gnla(n, std::max(depth_limit(), 1));
    return catalog(name, n);
  }
  if (spec.find('.') != std::string::npos || spec.find('/') != std::string::npos)
    return GNLA::from_json(nlohmann::json::parse(slurp(spec)));
  return catalog(spec);
}

QMat load_j(const std::string& spec) {
  if (spec == "standard") return ComplexStructure{Rat(1), Rat(0)}.matrix();
  auto j = nlohmann::json::parse(slurp(spec));
  if (j.contains("traceless_class")) {
    QMat k(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        k(r, c) = Rat::parse(j["traceless_class"][r][c].get<std::string>());
    return k;
  }
  return ComplexStructure::from_json(j).matrix();
}

std::map<std::string, Rat> parse_assignments(const std::string& s) {
  std::map<std::string, Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected name=value in --set");
    out[item.substr(0, eq)] = Rat::parse(item.substr(eq + 1));
  }
  return out;
}

struct Output {
  bool json = false;
  nlohmann::json j;
  std::ostringstream text;
  void flush() {
    if (json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

int run_model_cmd(const std::string& verb, const std::string& path,
                  const std::string& sets, Output& out) {
  CRModel m = parse_model(slurp(path));
  bool all_ok = true;
  if (verb == "parse" || verb == "all") {
    out.j["model"] = m.to_json();
    out.text << path << ": " << m.coords.size() << " coordinates, "
             << m.equations.size() << " equations, " << m.fields.size()
             << " fields\n";
  }
  if (verb == "verify" || verb == "all") {
    nlohmann::json tj = nlohmann::json::object();
    for (const auto& f : m.fields) {
      auto rep = verify_tangency(m, f);
      tj[f.name] = rep.ok;
      out.text << "tangency " << f.name << ": " << (rep.ok ? "ok" : "FAIL") << "\n";
      if (!rep.ok) {
        all_ok = false;
        for (const auto& [eq, res] : rep.residuals)
          out.text << "  residual at " << eq << ": " << res << "\n";
      }
    }
    out.j["tangency"] = tj;
  }
  if (verb == "closure" || verb == "all") {
    auto rep = closure(m);
    out.j["closure"] = rep.to_json();
    out.text << "closure: " << (rep.closed ? "closed" : ("FAIL " + rep.offending))
             << ", dimension " << rep.dimension << ", max commuting subset "
             << rep.max_commuting << "\n";
    if (!rep.closed) all_ok = false;
  }
  if (verb == "symbol" || verb == "all") {
    std::map<std::string, Rat> pr = parse_assignments(sets);
    for (const auto& p : m.params)
      if (!pr.count(p)) pr[p] = Rat(0);  // default sample
    auto sym = model_symbol(m, pr);
    out.j["symbol"] = sym.to_json();
    nlohmann::json prj = nlohmann::json::object();
    for (const auto& [k, v] : pr) prj[k] = v.to_string();
    out.j["parameters"] = prj;
    for (const auto& [k, v] : pr)
      out.text << "parameter " << k << " = " << v.to_string() << "\n";
    out.text << "symbol growth (";
    for (size_t i = 0; i < sym.reduced_growth.size(); ++i)
      out.text << (i ? "," : "") << sym.reduced_growth[i];
    out.text << "), r = " << sym.r;
    if (sym.hc_type) out.text << ", type " << to_string(sym.hc_type->type);
    out.text << "\n";
  }
  return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for rank-2 CR symbols, prolongations, "
               "central extensions and coordinate models"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  // gnla
  auto* gnla_cmd = app.add_subcommand("gnla", "graded nilpotent Lie algebra operations");
  gnla_cmd->require_subcommand(1);
  std::string alg, out_path;
  int depth = 10;
  auto* g_check = gnla_cmd->add_subcommand("check", "validate + fundamentality");
  g_check->add_option("algebra", alg)->required();
  auto* g_growth = gnla_cmd->add_subcommand("growth", "growth vectors");
  g_growth->add_option("algebra", alg)->required();
  auto* g_catalog = gnla_cmd->add_subcommand("catalog", "print a catalog algebra");
  g_catalog->add_option("algebra", alg)->required();
  auto* g_free = gnla_cmd->add_subcommand("free", "free GNLA on two generators");
  g_free->add_option("--depth", depth)->required();
  auto* g_dep = gnla_cmd->add_subcommand("deprolong", "symbol-level deprolongation");
  g_dep->add_option("algebra", alg)->required();

  // prolong
  auto* pr_cmd = app.add_subcommand("prolong", "Tanaka prolongation");
  auto* pr_run = pr_cmd->add_subcommand("run", "compute the prolongation report");
  std::string crj = "standard";
  int maxdeg = 6;
  pr_run->add_option("algebra", alg)->required();
  pr_run->add_option("--max-degree", maxdeg);
  pr_run->add_option("--cr-J", crj, "standard | none | <J json file>");

  // extend
  auto* ex_cmd = app.add_subcommand("extend", "central extensions");
  ex_cmd->require_subcommand(1);
  auto* ex_coc = ex_cmd->add_subcommand("cocycles", "degree-(depth+1) cocycle basis");
  ex_coc->add_option("algebra", alg)->required();
  auto* ex_apply = ex_cmd->add_subcommand("apply", "extend by cocycles");
  std::vector<std::string> cocycle_files;
  ex_apply->add_option("algebra", alg)->required();
  ex_apply->add_option("--cocycle", cocycle_files)->required();
  auto* ex_cls = ex_cmd->add_subcommand("classify", "type of an m_HC cocycle");
  ex_cls->add_option("--cocycle", cocycle_files)->required();
  auto* ex_enum = ex_cmd->add_subcommand("enumerate", "classify the (2,1,...,1) tower");
  std::string growth_flag = "211";
  int max_depth_flag = 9;
  ex_enum->add_option("--growth", growth_flag);
  ex_enum->add_option("--max-depth", max_depth_flag);

  // jnorm
  auto* jn = app.add_subcommand("jnorm", "complex structure normal form");
  std::string a_str = "1", b_str = "0";
  jn->add_option("algebra", alg)->required();
  jn->add_option("--a", a_str);
  jn->add_option("--b", b_str);

  // model
  auto* mo = app.add_subcommand("model", "coordinate model operations");
  mo->require_subcommand(1);
  std::string model_path, sets;
  for (const char* verb : {"parse", "verify", "closure", "symbol", "all"}) {
    auto* sub = mo->add_subcommand(verb);
    sub->add_option("file", model_path)->required();
    sub->add_option("--set", sets, "parameter values, e.g. a=1/2,b=0");
  }

  auto* suite = app.add_subcommand("paper-suite", "run the complete verification suite");
  (void)suite;

  // the global --json flag may appear after any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (auto* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Output out;
  out.json = json;
  try {
    if (g_check->parsed()) {
      GNLA m = load_algebra(alg);
      auto val = m.validate();
      auto fund = m.is_fundamental();
      out.j = {{"valid", val.ok}, {"fundamental", fund.ok}};
      if (!val.ok) out.j["validation_error"] = val.message;
      if (!fund.ok) out.j["fundamentality_error"] = fund.message;
      out.text << "validate: " << (val.ok ? "ok" : "FAIL " + val.message) << "\n"
               << "fundamental: " << (fund.ok ? "ok" : "FAIL " + fund.message) << "\n";
      out.flush();
      return val.ok && fund.ok ? kExitOk : kExitCheckFailed;
    }
    if (g_growth->parsed()) {
      auto g = load_algebra(alg).growth();
      out.j = {{"reduced", g.reduced}, {"cumulative", g.cumulative}};
      out.text << "reduced (";
      for (size_t i = 0; i < g.reduced.size(); ++i)
        out.text << (i ? "," : "") << g.reduced[i];
      out.text << "), cumulative (";
      for (size_t i = 0; i < g.cumulative.size(); ++i)
        out.text << (i ? "," : "") << g.cumulative[i];
      out.text << ")\n";
      out.flush();
      return kExitOk;
    }
    if (g_catalog->parsed()) {
      out.j = load_algebra(alg).to_json();
      out.text << out.j.dump(2) << "\n";
      out.flush();
      return kExitOk;
    }
    if (g_free->parsed()) {
      GNLA f = free_gnla(depth, depth_limit());
      out.j = {{"depth", f.depth()}, {"dims", f.dims()}};
      out.text << "free(" << depth << ") dims (";
      for (size_t i = 0; i < f.dims().size(); ++i)
        out.text << (i ? "," : "") << f.dims()[i];
      out.text << ")\n";
      out.flush();
      return kExitOk;
    }
    if (g_dep->parsed()) {
      GNLA d = deprolong(load_algebra(alg)).renamed_standard();
      out.j = d.to_json();
      out.text << out.j.dump(2) << "\n";
      out.flush();
      return kExitOk;
    }
    if (pr_run->parsed()) {
      GNLA m = load_algebra(alg);
      std::vector<Derivation0> g0;
      if (crj == "none")
        g0 = der0(m);
      else
        g0 = cr_g0(m, load_j(crj)).basis;
      auto rep = prolong(m, g0, maxdeg);
      out.j = rep.to_json();
      out.text << out.j.dump(2) << "\n";
      out.flush();
      return kExitOk;
    }
    if (ex_coc->parsed()) {
      GNLA m = load_algebra(alg);
      auto z = cocycles(m);
      out.j = nlohmann::json::array();
      for (const auto& w : z) out.j.push_back(w.to_json());
      out.text << "dim Z^2 in degree " << m.depth() + 1 << ": " << z.size() << "\n";
      for (const auto& w : z) out.text << w.to_json().dump() << "\n";
      out.flush();
      return kExitOk;
    }
    if (ex_apply->parsed()) {
      GNLA m = load_algebra(alg);
      std::vector<GradedCochain> ws;
      for (const auto& f : cocycle_files)
        ws.push_back(GradedCochain::from_json(m, m.depth() + 1,
                                              nlohmann::json::parse(slurp(f))));
      GNLA ext = extend_by(m, ws);
      out.j = ext.to_json();
      out.text << out.j.dump(2) << "\n";
      out.flush();
      return kExitOk;
    }
    if (ex_cls->parsed()) {
      GNLA hc = m_hc();
      std::vector<GradedCochain> ws;
      for (const auto& f : cocycle_files)
        ws.push_back(GradedCochain::from_json(hc, 4, nlohmann::json::parse(slurp(f))));
      HcClassification cls = ws.size() == 1 ? classify_hc_extension(ws[0])
                                            : classify_hc_pencil(ws[0], ws[1]);
      out.j = {{"type", to_string(cls.type)}, {"det", cls.det.to_string()}};
      out.text << to_string(cls.type) << " (det " << cls.det.to_string() << ")\n";
      out.flush();
      return kExitOk;
    }
    if (ex_enum->parsed()) {
      std::string norm;
      for (char ch : growth_flag)
        if (ch != ',') norm += ch;
      for (size_t i = 2; i < norm.size(); ++i)
        if (norm[i] != '1') throw std::invalid_argument("only --growth 211... is supported");
      if (norm.substr(0, 2) != "21")
        throw std::invalid_argument("only --growth 211... is supported");
      auto e = enumerate_211(max_depth_flag);
      out.j = nlohmann::json::array();
      for (const auto& d : e.per_depth) {
        out.j.push_back({{"depth", d.depth}, {"classes", d.labels}});
        out.text << "depth " << d.depth << ": " << d.labels.size() << " classes (";
        for (size_t i = 0; i < d.labels.size(); ++i)
          out.text << (i ? ", " : "") << d.labels[i];
        out.text << ")\n";
      }
      out.flush();
      return kExitOk;
    }
    if (jn->parsed()) {
      GNLA m = load_algebra(alg);
      auto res = normalize_J(m, {Rat::parse(a_str), Rat::parse(b_str)});
      out.j = {{"normal", res.normal.to_json()},
               {"element",
                {{res.element(0, 0).to_string(), res.element(0, 1).to_string()},
                 {res.element(1, 0).to_string(), res.element(1, 1).to_string()}}},
               {"factorization", res.factorization}};
      out.text << "normal form (a,b) = (" << res.normal.a.to_string() << ","
               << res.normal.b.to_string() << ") via " << res.factorization << "\n";
      out.flush();
      return kExitOk;
    }
    if (mo->parsed()) {
      for (const char* verb : {"parse", "verify", "closure", "symbol", "all"}) {
        auto* sub = mo->get_subcommand(verb);
        if (sub->parsed()) {
          int code = run_model_cmd(verb, model_path, sets, out);
          out.flush();
          return code;
        }
      }
    }
    if (suite->parsed()) {
      auto results = run_acceptance();
      int failed = 0;
      for (const auto& r : results) {
        out.text << (r.pass ? "ok  " : "FAIL") << " " << r.id << " - " << r.title
                 << "\n";
        for (const auto& n : r.notes)
          if (!r.pass) out.text << n << "\n";
        if (!r.pass) ++failed;
      }
      out.text << (results.size() - failed) << "/" << results.size()
               << " criteria passed\n";
      out.j = acceptance_to_json(results);
      out.flush();
      return failed ? kExitCheckFailed : kExitOk;
    }
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
