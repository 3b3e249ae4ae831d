#include "sslab/cli_runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "sslab/model_file.hpp"
#include "sslab/reduction.hpp"

namespace sslab {

namespace {

using nlohmann::json;

struct Pipeline {
  ModelFile model;
  std::unique_ptr<SuperspaceContext> ctx;
  bool failed = false;  // any mismatch verdict

  SuperspaceContext& context() {
    if (!ctx) {
      if (model.phase_vars.empty() || model.phase_vars.size() % 2)
        throw Error(
            "model must declare an even, positive number of 'var' symbols");
      if (!model.has_lagrangian) throw Error("model has no lagrangian");
      ps_ = PhaseSpace::canonical(model.phase_vars);
      ctx = std::make_unique<SuperspaceContext>(ps_, model.table);
    }
    return *ctx;
  }

  DimensionAssignment assignment() {
    DimensionAssignment a = DimensionAssignment::defaults();
    for (const auto& [name, d] : model.dims) a.set(name, d);
    a.extend_for_phase_space(context());
    return a;
  }

 private:
  PhaseSpace ps_;
};

void cmd_expand(Pipeline& pl, std::ostream& out, json& j) {
  SuperspaceContext& ctx = pl.context();
  out << "superfields:\n";
  json fields = json::array();
  for (int a = 0; a < ctx.dim(); ++a) {
    Superfield s = build_superfield(ctx, a);
    out << "  Phi^" << ctx.phase_space().phi[a] << " = " << s.element.str()
        << "\n";
    fields.push_back({{"index", ctx.phase_space().phi[a]},
                      {"element", s.element.str()}});
  }
  SuperAction sa = make_super_action(ctx, pl.model.lagrangian);
  out << "L(Phi) = " << sa.integrand.str() << "\n";
  j["expand"] = {{"superfields", fields}, {"integrand", sa.integrand.str()}};
}

void cmd_reduce(Pipeline& pl, std::ostream& out, json& j) {
  SuperspaceContext& ctx = pl.context();
  SuperAction sa = make_super_action(ctx, pl.model.lagrangian);
  GrassmannElement raw = cpi_component_lagrangian(sa);
  GrassmannElement norm = normalize_by_parts(ctx, raw);
  out << "component lagrangian (raw):        " << raw.str() << "\n";
  out << "component lagrangian (by parts):   " << norm.str() << "\n";
  j["reduce"] = {{"raw", raw.str()}, {"by_parts", norm.str()}};
}

void cmd_quantize(Pipeline& pl, const CliOptions& opt, std::ostream& out,
                  json& j) {
  SuperspaceContext& ctx = pl.context();
  SuperAction sa = make_super_action(ctx, pl.model.lagrangian);
  ScalarExpr e = quantize(sa, opt.divisor);
  bool ghost_free = true;  // quantize throws otherwise
  out << "exponent integrand: " << e.str() << "   (times int dt)\n";
  out << "ghost-free: " << (ghost_free ? "yes" : "no") << "\n";
  j["quantize"] = {{"exponent", e.str()},
                   {"divisor", opt.divisor},
                   {"ghost_free", ghost_free}};
}

void cmd_bigaction(Pipeline& pl, const CliOptions& opt, std::ostream& out,
                   json& j) {
  SuperspaceContext& ctx = pl.context();
  SuperAction sa = make_super_action(ctx, pl.model.lagrangian);
  LargeActionResult lar =
      large_action_insert(sa, ScalarExpr::symbol("B"), "B");
  out << "insertion: " << lar.insertion.str() << "\n";
  out << "support: theta thetabar = " << lar.support.root.str();
  if (opt.eps_symbolic)
    out << "  (eps->0: " << lar.support.limit.str() << ")";
  out << "\n";
  out << "exponent integrand: " << lar.exponent.str() << "   (times int dt)\n";
  j["bigaction"] = {{"insertion", lar.insertion.str()},
                    {"support_root", lar.support.root.str()},
                    {"support_limit", lar.support.limit.str()},
                    {"exponent", lar.exponent.str()}};
  if (pl.model.bigaction) {
    BigActionResult br = compute_B(*pl.model.bigaction);
    out << "B = M c^2 T = " << br.B << " J s, B/hbar = " << br.ratio_hbar
        << "\n";
    j["bigaction"]["B_J_s"] = br.B;
    j["bigaction"]["B_over_hbar"] = br.ratio_hbar;
  }
}

void cmd_dimcheck(Pipeline& pl, std::ostream& out, json& j) {
  SuperspaceContext& ctx = pl.context();
  DimensionAssignment a = pl.assignment();
  SuperAction sa = make_super_action(ctx, pl.model.lagrangian);

  Dimension measure = a.get("dtheta") + a.get("dthetabar");
  Dimension pair = a.get("theta") + a.get("thetabar");
  out << "dim(dtheta dthetabar) = " << measure.str() << "\n";
  out << "dim(thetabar theta)   = " << pair.str() << "\n";
  out << "note: " << a.theta_split_note() << "\n";

  bool ok = measure == -Dimension::action() && pair == Dimension::action();
  struct Row {
    const char* name;
    bool pass;
  };
  std::vector<Row> rows;
  rows.push_back({"classical exponent (dt dtheta dthetabar i L(Phi))",
                  check_dimensionless(sa.integrand, a,
                                      {"dt", "dtheta", "dthetabar"})});
  rows.push_back({"quantized exponent ((i/hbar) dt L)",
                  check_dimensionless(quantize(sa), a, {"dt"})});
  LargeActionResult lar =
      large_action_insert(sa, ScalarExpr::symbol("B"), "B");
  rows.push_back({"large-action exponent ((i/B) dt L)",
                  check_dimensionless(lar.exponent, a, {"dt"})});
  json rows_j = json::array();
  for (const auto& r : rows) {
    out << (r.pass ? "[pass] " : "[FAIL] ") << r.name << " dimensionless\n";
    rows_j.push_back({{"name", r.name}, {"pass", r.pass}});
    ok = ok && r.pass;
  }
  if (!ok) pl.failed = true;
  j["dimcheck"] = {{"measure", measure.str()},
                   {"pair", pair.str()},
                   {"rows", rows_j},
                   {"pass", ok}};
}

void cmd_lattice(Pipeline& pl, std::ostream& out, json& j) {
  if (!pl.model.lattice) throw Error("model has no [lattice] section");
  LatticeConfig cfg = *pl.model.lattice;
  out << "system,N,value,reference,abs_error\n";
  json rows = json::array();
  auto row = [&](const std::string& system, int n, std::complex<double> v,
                 std::complex<double> ref) {
    double err = std::abs(v - ref);
    out << system << "," << n << "," << v.real() << (v.imag() < 0 ? "-" : "+")
        << std::abs(v.imag()) << "i," << ref.real()
        << (ref.imag() < 0 ? "-" : "+") << std::abs(ref.imag()) << "i," << err
        << "\n";
    rows.push_back({{"system", system},
                    {"N", n},
                    {"value_re", v.real()},
                    {"value_im", v.imag()},
                    {"ref_re", ref.real()},
                    {"ref_im", ref.imag()},
                    {"abs_error", err}});
  };
  for (int n : {2, 4, 8}) {
    LatticeConfig c = cfg;
    c.steps = n;
    row("free", n, qm_lattice_kernel(c, LatticeSystem::free_particle),
        free_kernel_exact(c));
  }
  for (int n = 8; n <= 256; n *= 2) {
    LatticeConfig c = cfg;
    c.steps = n;
    row("harmonic", n, qm_lattice_kernel(c, LatticeSystem::harmonic),
        harmonic_kernel_exact(c));
  }
  j["lattice"] = rows;
}

void cmd_identities(Pipeline& pl, std::ostream& out, json& j) {
  SuperspaceContext& ctx = pl.context();
  ReductionReport rep = equivalence_check(ctx, pl.model.lagrangian);
  out << rep.to_text();
  json verdicts = json::array();
  for (const auto& v : rep.verdicts)
    verdicts.push_back({{"name", v.name},
                        {"anchor", v.anchor},
                        {"claim", v.claim},
                        {"engine", v.engine_result},
                        {"verdict", verdict_str(v.verdict)}});
  j["identities"] = {{"component_lagrangian", rep.component_lagrangian},
                     {"quantized_exponent", rep.quantized_exponent},
                     {"large_action_exponent", rep.large_action_exponent},
                     {"verdicts", verdicts}};
  if (rep.has_mismatch()) pl.failed = true;
}

}  // namespace

int run_cli(const CliOptions& opt, std::ostream& out, std::ostream& err) {
  json j;
  j["command"] = opt.command;
  j["model"] = opt.model_path;
  Pipeline pl;
  try {
    pl.model = load_model_file(opt.model_path);
    if (opt.command == "expand") {
      cmd_expand(pl, out, j);
    } else if (opt.command == "reduce") {
      cmd_reduce(pl, out, j);
    } else if (opt.command == "quantize") {
      cmd_quantize(pl, opt, out, j);
    } else if (opt.command == "bigaction") {
      cmd_bigaction(pl, opt, out, j);
    } else if (opt.command == "dimcheck") {
      cmd_dimcheck(pl, out, j);
    } else if (opt.command == "lattice") {
      cmd_lattice(pl, out, j);
    } else if (opt.command == "identities") {
      cmd_identities(pl, out, j);
    } else if (opt.command == "all") {
      cmd_expand(pl, out, j);
      cmd_reduce(pl, out, j);
      cmd_quantize(pl, opt, out, j);
      cmd_bigaction(pl, opt, out, j);
      cmd_dimcheck(pl, out, j);
      if (pl.model.lattice) cmd_lattice(pl, out, j);
      cmd_identities(pl, out, j);
    } else {
      err << "unknown command '" << opt.command << "'\n";
      return 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  j["pass"] = !pl.failed;
  if (!opt.json_path.empty()) {
    j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    std::ofstream f(opt.json_path);
    if (!f) {
      err << "error: cannot write " << opt.json_path << "\n";
      return 2;
    }
    f << j.dump(2) << "\n";
  }
  return pl.failed ? 1 : 0;
}

}  // namespace sslab
