// ocgw-cli: batch front end. Exit codes: 0 ok, 2 bad input, 3 window exhausted, 4 check failed.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ocgw/amodel.hpp"
#include "ocgw/bmodel.hpp"
#include "ocgw/checks.hpp"
#include "ocgw/eo.hpp"
#include "ocgw/json_out.hpp"
#include "ocgw/mirrormap.hpp"
#include "ocgw/psi.hpp"

using namespace ocgw;

namespace {

struct Config {
  OrbifoldInput in;
  int workers = 0;
  std::string output = "json";
  std::string out_path;
  // per command
  int g = 0, n = 1, tau_degree = 0, winding = 3, degree = 4;
  int check_tau = 2, check_winding = 5;
  std::vector<int> k;
  std::string side = "a";
  std::string basis = "native";
  std::string check;
};

ojson orbifold_json(const OrbifoldInput& in) { return ojson{{"r", in.r}, {"m", in.m}, {"s", in.s}, {"f", in.f}}; }

ojson provenance(const Config& c, const std::string& cmd) {
  ojson p;
  p["command"] = cmd;
  p["orbifold"] = orbifold_json(c.in);
  p["precision"] = "double";
  return p;
}

void emit(const Config& c, const ojson& j) {
  std::string s = dump_json(j, 2) + "\n";
  if (c.out_path.empty()) {
    std::fwrite(s.data(), 1, s.size(), stdout);
  } else {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw ValidationError("cannot open output file " + c.out_path);
    f << s;
  }
}

ojson report_json(const CheckReport& r) {
  return ojson{{"name", r.name}, {"deviation", r.deviation}, {"tol", r.tol}, {"ok", r.ok}, {"detail", r.detail}};
}

// a plain table or a JSON document
int emit_checks(const Config& c, const std::string& cmd, const std::vector<CheckReport>& rows) {
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.ok;
  if (c.output == "table") {
    std::printf("%-22s %-12s %-10s %s\n", "check", "deviation", "tol", "status");
    for (const auto& r : rows)
      std::printf("%-22s %-12.3e %-10.1e %s\n", r.name.c_str(), r.deviation, r.tol, r.ok ? "pass" : "FAIL");
  } else {
    ojson j;
    j["provenance"] = provenance(c, cmd);
    auto arr = ojson::array();
    for (const auto& r : rows) arr.push_back(report_json(r));
    j["checks"] = arr;
    j["ok"] = ok;
    emit(c, j);
  }
  return ok ? 0 : 4;
}

int run_describe(const Config& c) {
  OrbifoldData d(c.in);
  ojson j = ojson::parse(d.to_json());
  j["genus"] = d.genus();
  j["p"] = d.p();
  j["punctures"] = d.punctures();
  j["curve_supported"] = curve_supported(d);
  emit(c, ojson{{"provenance", provenance(c, "describe")}, {"orbifold", j}});
  return 0;
}

int run_psi(const Config& c) {
  BigQ v = psi_intersection(c.g, c.k);
  ojson j;
  j["provenance"] = ojson{{"command", "psi"}};
  j["g"] = c.g;
  j["k"] = c.k;
  j["value"] = to_string(v);
  j["value_double"] = big_to_double(v);
  emit(c, j);
  return 0;
}

int run_fgn(const Config& c) {
  OrbifoldData d(c.in);
  PotentialSeries F;
  if (c.side == "a") {
    F = f_gn_A(d, c.g, c.n, c.tau_degree, c.winding);
    if (c.basis == "psi") F = F.to_psi();
  } else if (c.side == "b") {
    if (c.basis == "prime") throw ValidationError("the B side is produced in the psi basis only");
    F = f_gn_B(d, c.g, c.n, c.tau_degree, c.winding);
  } else {
    throw ValidationError("--side must be a or b");
  }
  ojson p = provenance(c, "fgn");
  p["side"] = c.side;
  p["tau_degree"] = c.tau_degree;
  p["max_winding"] = c.winding;
  emit(c, ojson{{"provenance", p}, {"potential", F.to_json()}});
  return 0;
}

int run_eo(const Config& c) {
  OrbifoldData d(c.in);
  if (!c.check.empty()) {
    std::vector<CheckReport> rows;
    SpectralCurve sc(d, 24);
    if (c.check == "pants") {
      rows.push_back(pants_check(d));
    } else if (c.check == "doss") {
      rows.push_back(doss_check(d, c.g, c.n));
    } else if (c.check == "c-kernel") {
      rows.push_back(c_kernel_check(sc));
    } else if (c.check == "theta") {
      rows.push_back(theta_check(sc));
    } else if (c.check == "xi-recursion") {
      rows.push_back(xi_recursion_check(sc, 2));
    } else if (c.check == "xihxi") {
      rows.push_back(xihxi_check(sc, 2, 8));
    } else if (c.check == "b-check") {
      rows.push_back(b_check_consistency(sc));
    } else {
      throw ValidationError("unknown eo check " + c.check);
    }
    return emit_checks(c, "eo check " + c.check, rows);
  }
  auto F = eo_potential(d, c.g, c.n, c.winding);
  ojson p = provenance(c, "eo");
  p["max_winding"] = c.winding;
  emit(c, ojson{{"provenance", p}, {"potential", F.to_json()}});
  return 0;
}

int run_check(const Config& c) {
  if (c.check == "all") {
    bool ok = true;
    auto arr = ojson::array();
    if (c.output == "table") std::printf("%-4s %-6s %s\n", "id", "status", "criterion");
    run_acceptance([&](const Criterion& x) {
      ok = ok && x.ok;
      if (c.output == "table") {
        std::printf("%-4d %-6s %s | %s\n", x.id, x.ok ? "pass" : "FAIL", x.what.c_str(), x.detail.c_str());
        std::fflush(stdout);
      }
      arr.push_back(ojson{{"id", x.id}, {"ok", x.ok}, {"criterion", x.what}, {"detail", x.detail}});
    });
    if (c.output != "table") emit(c, ojson{{"provenance", ojson{{"command", "check all"}}}, {"criteria", arr}, {"ok", ok}});
    return ok ? 0 : 4;
  }
  OrbifoldData d(c.in);
  std::vector<CheckReport> rows;
  if (c.check == "bridge") {
    rows.push_back(bridge_check(d));
  } else if (c.check == "edges") {
    rows.push_back(edges_check(d));
  } else if (c.check == "xi") {
    rows.push_back(xi_check(d));
  } else if (c.check == "graphs") {
    rows.push_back(graphs_check(d, c.check_tau, c.check_winding));
  } else if (c.check == "stirling") {
    rows.push_back(stirling_summary(d));
  } else if (c.check == "main") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {2, 1}})
      rows.push_back(main_check(d, g, n, c.check_tau, c.check_winding));
  } else {
    throw ValidationError("unknown check " + c.check);
  }
  return emit_checks(c, "check " + c.check, rows);
}

int run_mirrormap(const Config& c) {
  OrbifoldData d(c.in);
  auto s = mirror_map_series(d, c.degree);
  ojson p = provenance(c, "mirrormap");
  p["degree"] = c.degree;
  auto table = [](const TruncatedSeries& t) {
    auto arr = ojson::array();
    for (const auto& [e, v] : t.terms()) arr.push_back(ojson{{"q", e}, {"re", v.real()}, {"im", v.imag()}});
    return arr;
  };
  auto tau = ojson::array(), inv = ojson::array();
  for (int a = 0; a < s.p; ++a) {
    tau.push_back(ojson{{"a", a + 1}, {"coefficients", table(s.tau[a])}});
    inv.push_back(ojson{{"a", a + 1}, {"coefficients", table(s.inverse[a])}});
  }
  emit(c, ojson{{"provenance", p}, {"tau", tau}, {"inverse", inv}, {"round_trip", s.p ? mirror_round_trip(s) : 0.0}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"open-closed GW potentials of [C^3/G] with a framed brane, A and B model"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--r", c.in.r, "r")->default_val(1);
  app.add_option("--m", c.in.m, "m")->default_val(1);
  app.add_option("--s", c.in.s, "s")->default_val(0);
  app.add_option("--f", c.in.f, "framing")->default_val(1);
  app.add_option("--workers", c.workers, "worker threads (overrides OCGW_WORKERS)");
  app.add_option("--output", c.output, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", c.out_path, "write JSON here instead of stdout");

  auto* describe = app.add_subcommand("describe", "group data, weights, Box");
  auto* psi = app.add_subcommand("psi", "<tau_k1 ... tau_kn>_g");
  psi->add_option("--g", c.g)->required();
  psi->add_option("--k", c.k, "insertions, e.g. --k 1 1 0")->required()->expected(1, -1);

  auto* fgn = app.add_subcommand("fgn", "F_{g,n} from the A or B graph sum");
  fgn->add_option("--side", c.side)->check(CLI::IsMember({"a", "b"}))->default_val("a");
  fgn->add_option("--g", c.g)->required();
  fgn->add_option("--n", c.n)->required();
  fgn->add_option("--tau-degree", c.tau_degree)->default_val(0);
  fgn->add_option("--max-winding", c.winding)->default_val(3);
  fgn->add_option("--basis", c.basis, "native, psi or prime")->check(CLI::IsMember({"native", "psi", "prime"}));

  auto* eo = app.add_subcommand("eo", "direct recursion on the r = 1 curve");
  eo->add_option("--g", c.g)->default_val(0);
  eo->add_option("--n", c.n)->default_val(1);
  eo->add_option("--max-winding", c.winding)->default_val(3);
  eo->add_option("--check", c.check, "pants, doss, c-kernel, theta, xi-recursion, xihxi, b-check");

  auto* check = app.add_subcommand("check", "verification tables");
  check->add_option("name", c.check, "bridge, edges, xi, graphs, stirling, main, all")->required();
  check->add_option("--tau-degree", c.check_tau)->default_val(2);
  check->add_option("--max-winding", c.check_winding)->default_val(5);

  auto* mm = app.add_subcommand("mirrormap", "hypergeometric mirror map and its inverse");
  mm->add_option("--degree", c.degree)->default_val(4);

  // orbifold and global flags may also follow the subcommand
  for (auto* sub : {describe, psi, fgn, eo, check, mm}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (c.workers < 0) {
    std::cerr << "error: --workers must be >= 0\n";
    return 2;
  }
  set_workers(c.workers);

  try {
    validate(c.in);
    if (*describe) return run_describe(c);
    if (*psi) return run_psi(c);
    if (*fgn) return run_fgn(c);
    if (*eo) return run_eo(c);
    if (*check) return run_check(c);
    if (*mm) return run_mirrormap(c);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const WindowError& e) {
    std::cerr << "window: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
