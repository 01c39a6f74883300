// Command-line interface: volumes of homogeneity domains and surfaces, the
// tabulated results over the standard grids, and a self-check battery.
//
// Exit codes: 0 success, 1 failed check, 2 usage or configuration error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homvol/homvol.hpp"

namespace {

using namespace homvol;

std::string fmt_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string fmt_compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

// ---------------------------------------------------------------- volume ---

struct VolumeArgs {
  std::string kind = "domain";
  std::vector<std::string> scales;
  std::vector<double> ps;
  std::string method = "closed";
  std::string format = "markdown";
  std::string out_path;
  McConfig mc;
  std::optional<int> nodes;
  std::optional<int> refine;
};

std::string volume_markdown(const std::vector<RunRecord>& recs) {
  std::vector<std::vector<std::string>> rows;
  for (const RunRecord& r : recs) {
    rows.push_back({r.quantity, r.scale, fmt_compact(*r.p), r.method, fmt_compact(r.estimate),
                    r.std_error ? fmt_sci(*r.std_error) : std::string("-"),
                    std::to_string(r.samples_or_nodes),
                    r.seed ? std::to_string(*r.seed) : std::string("-")});
  }
  return markdown_table(
             {"quantity", "scale", "p", "method", "estimate", "std_error", "samples/nodes", "seed"},
             rows) +
         "\ntool " + std::string(kVersion) + "\n";
}

int run_volume(const VolumeArgs& args) {
  const VolumeKind kind = args.kind == "surface" ? VolumeKind::Surface : VolumeKind::Domain;
  const Method method = parse_method(args.method);
  QuadConfig qcfg = kind == VolumeKind::Surface ? surface_quad_defaults() : domain_quad_defaults();
  if (args.nodes) qcfg.nodes_per_axis = *args.nodes;
  if (args.refine) qcfg.refinement = *args.refine;
  std::vector<RunRecord> recs;
  for (const std::string& token : args.scales) {
    const EffectScale scale = parse_scale(token);
    for (double p : args.ps) {
      const ProbBound bound(p);
      VolumeEstimate est;
      switch (method) {
        case Method::Closed: {
          const std::optional<double> closed = kind == VolumeKind::Surface
                                                   ? closed_surface_volume(scale, bound)
                                                   : closed_domain_volume(scale, bound);
          if (!closed) {
            throw std::domain_error("no closed form for the " + token + " " + args.kind +
                                    " volume at p=" + fmt_compact(p) +
                                    "; use --method mc or --method quad");
          }
          est = closed_estimate(*closed);
          break;
        }
        case Method::MonteCarlo:
          est = mc_volume(kind, scale, bound, args.mc);
          break;
        case Method::Cubature:
          est = kind == VolumeKind::Surface ? quad_surface_volume(scale, bound, qcfg)
                                            : quad_domain_volume(scale, bound, qcfg);
          break;
      }
      recs.push_back(make_record(
          kind == VolumeKind::Surface ? "surface_volume" : "domain_volume", scale, p,
          std::nullopt, est));
      validate_record(recs.back());
    }
  }
  if (args.format == "json") {
    emit(to_json(recs), args.out_path);
  } else if (args.format == "csv") {
    emit(to_csv(recs), args.out_path);
  } else {
    emit(volume_markdown(recs), args.out_path);
  }
  return 0;
}

// ---------------------------------------------------------------- tables ---

struct TablesArgs {
  std::string which;
  std::vector<double> p_grid = default_p_grid();
  std::vector<std::int64_t> n_grid = default_n_grid();
  double alpha = 0.05;
  std::string format = "markdown";
  std::string out_path;
  McConfig mc;
  std::optional<int> nodes;
  std::optional<int> refine;
};

std::string thm1_markdown(const std::vector<OddsDomainRow>& rows, const QuadConfig& cfg) {
  std::vector<std::string> header{"p"};
  std::vector<std::string> values{"F_o(p)/p^3"};
  for (const OddsDomainRow& r : rows) {
    header.push_back(fmt_compact(r.p));
    values.push_back(fmt_fixed(r.normalized, 2));
  }
  return "domain volume of the odds-scale homogeneity set, normalized by p^3\n" +
         markdown_table(header, {values}) + "\ncubature nodes=" +
         std::to_string(cfg.nodes_per_axis) + " refinement=" + std::to_string(cfg.refinement) +
         ", tool " + kVersion + "\n";
}

std::string thm2_markdown(const std::vector<OddsSurfaceRow>& rows, const QuadConfig& cfg) {
  std::vector<std::string> header{"p"};
  std::vector<std::string> values{"V_o(p)/p^3"};
  for (const OddsSurfaceRow& r : rows) {
    header.push_back(fmt_compact(r.p));
    values.push_back(fmt_fixed(r.surface_normalized, 2));
  }
  return "surface volume of the odds-scale homogeneity surface, normalized by p^3\n" +
         markdown_table(header, {values}) + "\ncubature nodes=" +
         std::to_string(cfg.nodes_per_axis) + " refinement=" + std::to_string(cfg.refinement) +
         ", tool " + kVersion + "\n";
}

std::string coro1_markdown(const std::vector<OddsSurfaceRow>& rows) {
  std::vector<std::string> header{"p"};
  std::vector<std::string> ra{"V_a/F_a"}, rm{"V_m/F_m"}, ro{"V_o/F_o"};
  for (const OddsSurfaceRow& r : rows) {
    const ProbBound bound(r.p);
    header.push_back(fmt_compact(r.p));
    ra.push_back(fmt_fixed(ratio_v_over_f(EffectScale::RiskDifference, bound).ratio, 2));
    rm.push_back(fmt_fixed(ratio_v_over_f(EffectScale::RiskRatio, bound).ratio, 2));
    ro.push_back(fmt_fixed(r.ratio, 2));
  }
  return "surface-to-domain volume ratios V(p)/F(p)\n" + markdown_table(header, {ra, rm, ro}) +
         "\ntool " + std::string(kVersion) + "\n";
}

std::string wald_markdown(const std::vector<WaldRow>& rows, double alpha, const McConfig& mc) {
  std::vector<std::string> header{"n"};
  std::vector<std::string> va{"vol rd"}, vm{"vol rr"}, vo{"vol or"};
  std::vector<std::string> sa{"se rd"}, sm{"se rr"}, so{"se or"};
  std::vector<std::string> rm{"ratio rr/rd"}, ro{"ratio or/rd"};
  for (const WaldRow& r : rows) {
    header.push_back(std::to_string(r.n));
    va.push_back(fmt_fixed(r.volume[0], 3));
    vm.push_back(fmt_fixed(r.volume[1], 3));
    vo.push_back(fmt_fixed(r.volume[2], 3));
    sa.push_back(fmt_sci(r.std_error[0]));
    sm.push_back(fmt_sci(r.std_error[1]));
    so.push_back(fmt_sci(r.std_error[2]));
    rm.push_back(fmt_fixed(r.ratio_rr_over_rd, 3));
    ro.push_back(fmt_fixed(r.ratio_or_over_rd, 3));
  }
  return "Wald acceptance-region volumes in the unit four-cube of estimated proportions\n" +
         markdown_table(header, {va, vm, vo, sa, sm, so, rm, ro}) + "\nalpha=" +
         fmt_compact(alpha) + " samples=" + std::to_string(mc.samples) + " seed=" +
         std::to_string(mc.seed) + " chunks=" + std::to_string(mc.chunks) + ", tool " +
         kVersion + "\n";
}

int run_tables(const TablesArgs& args) {
  for (double p : args.p_grid) {
    const ProbBound validated(p);  // reject bad grids before any work
    (void)validated;
  }
  if (args.which == "thm1") {
    QuadConfig cfg = domain_quad_defaults();
    if (args.nodes) cfg.nodes_per_axis = *args.nodes;
    if (args.refine) cfg.refinement = *args.refine;
    const std::vector<OddsDomainRow> rows = table_thm1(args.p_grid, cfg);
    if (args.format == "json") {
      nlohmann::json j;
      j["table"] = "thm1";
      j["method"] = "quad";
      j["nodes_per_axis"] = cfg.nodes_per_axis;
      j["refinement"] = cfg.refinement;
      j["tool_version"] = kVersion;
      j["rows"] = nlohmann::json::array();
      for (const OddsDomainRow& r : rows) {
        j["rows"].push_back({{"p", r.p},
                             {"volume", r.volume.value},
                             {"normalized", r.normalized},
                             {"evaluations", r.volume.samples_or_nodes}});
      }
      emit(j.dump(2) + "\n", args.out_path);
    } else if (args.format == "csv") {
      std::string out = "p,volume,normalized,evaluations,method,tool_version\n";
      for (const OddsDomainRow& r : rows) {
        out += detail::round_trip_double(r.p) + ',' + detail::round_trip_double(r.volume.value) +
               ',' + detail::round_trip_double(r.normalized) + ',' +
               std::to_string(r.volume.samples_or_nodes) + ",quad," + kVersion + "\n";
      }
      emit(out, args.out_path);
    } else {
      emit(thm1_markdown(rows, cfg), args.out_path);
    }
    return 0;
  }
  if (args.which == "thm2" || args.which == "coro1") {
    QuadConfig scfg = surface_quad_defaults();
    if (args.nodes) scfg.nodes_per_axis = *args.nodes;
    if (args.refine) scfg.refinement = *args.refine;
    const std::vector<OddsSurfaceRow> rows = table_thm2(args.p_grid, scfg);
    if (args.which == "thm2") {
      if (args.format == "json") {
        nlohmann::json j;
        j["table"] = "thm2";
        j["method"] = "quad";
        j["nodes_per_axis"] = scfg.nodes_per_axis;
        j["refinement"] = scfg.refinement;
        j["tool_version"] = kVersion;
        j["rows"] = nlohmann::json::array();
        for (const OddsSurfaceRow& r : rows) {
          j["rows"].push_back({{"p", r.p},
                               {"surface", r.surface.value},
                               {"surface_normalized", r.surface_normalized},
                               {"domain", r.domain.value},
                               {"domain_normalized", r.domain_normalized},
                               {"ratio", r.ratio},
                               {"evaluations", r.surface.samples_or_nodes}});
        }
        emit(j.dump(2) + "\n", args.out_path);
      } else if (args.format == "csv") {
        std::string out =
            "p,surface,surface_normalized,domain,domain_normalized,ratio,evaluations,method,"
            "tool_version\n";
        for (const OddsSurfaceRow& r : rows) {
          out += detail::round_trip_double(r.p) + ',' +
                 detail::round_trip_double(r.surface.value) + ',' +
                 detail::round_trip_double(r.surface_normalized) + ',' +
                 detail::round_trip_double(r.domain.value) + ',' +
                 detail::round_trip_double(r.domain_normalized) + ',' +
                 detail::round_trip_double(r.ratio) + ',' +
                 std::to_string(r.surface.samples_or_nodes) + ",quad," + kVersion + "\n";
        }
        emit(out, args.out_path);
      } else {
        emit(thm2_markdown(rows, scfg), args.out_path);
      }
      return 0;
    }
    // coro1: ratio rows for all three scales
    if (args.format == "json") {
      nlohmann::json j;
      j["table"] = "coro1";
      j["tool_version"] = kVersion;
      j["rows"] = nlohmann::json::array();
      for (const OddsSurfaceRow& r : rows) {
        const ProbBound bound(r.p);
        j["rows"].push_back(
            {{"p", r.p},
             {"ratio_rd", ratio_v_over_f(EffectScale::RiskDifference, bound).ratio},
             {"ratio_rr", ratio_v_over_f(EffectScale::RiskRatio, bound).ratio},
             {"ratio_or", r.ratio}});
      }
      emit(j.dump(2) + "\n", args.out_path);
    } else if (args.format == "csv") {
      std::string out = "p,ratio_rd,ratio_rr,ratio_or,tool_version\n";
      for (const OddsSurfaceRow& r : rows) {
        const ProbBound bound(r.p);
        out += detail::round_trip_double(r.p) + ',' +
               detail::round_trip_double(ratio_v_over_f(EffectScale::RiskDifference, bound).ratio) +
               ',' +
               detail::round_trip_double(ratio_v_over_f(EffectScale::RiskRatio, bound).ratio) +
               ',' + detail::round_trip_double(r.ratio) + ',' + kVersion + "\n";
      }
      emit(out, args.out_path);
    } else {
      emit(coro1_markdown(rows), args.out_path);
    }
    return 0;
  }
  if (args.which == "wald") {
    const std::vector<WaldRow> rows = table_wald(args.n_grid, args.alpha, args.mc);
    if (args.format == "json") {
      nlohmann::json j;
      j["table"] = "wald";
      j["alpha"] = args.alpha;
      j["samples"] = args.mc.samples;
      j["seed"] = args.mc.seed;
      j["chunks"] = args.mc.chunks;
      j["tool_version"] = kVersion;
      j["rows"] = nlohmann::json::array();
      for (const WaldRow& r : rows) {
        j["rows"].push_back({{"n", r.n},
                             {"volume", {{"rd", r.volume[0]}, {"rr", r.volume[1]}, {"or", r.volume[2]}}},
                             {"std_error",
                              {{"rd", r.std_error[0]}, {"rr", r.std_error[1]}, {"or", r.std_error[2]}}},
                             {"ratio_rr_over_rd", r.ratio_rr_over_rd},
                             {"ratio_or_over_rd", r.ratio_or_over_rd}});
      }
      emit(j.dump(2) + "\n", args.out_path);
    } else if (args.format == "csv") {
      std::string out =
          "n,vol_rd,se_rd,vol_rr,se_rr,vol_or,se_or,ratio_rr_over_rd,ratio_or_over_rd,alpha,"
          "samples,seed,chunks,tool_version\n";
      for (const WaldRow& r : rows) {
        out += std::to_string(r.n) + ',' + detail::round_trip_double(r.volume[0]) + ',' +
               detail::round_trip_double(r.std_error[0]) + ',' +
               detail::round_trip_double(r.volume[1]) + ',' +
               detail::round_trip_double(r.std_error[1]) + ',' +
               detail::round_trip_double(r.volume[2]) + ',' +
               detail::round_trip_double(r.std_error[2]) + ',' +
               detail::round_trip_double(r.ratio_rr_over_rd) + ',' +
               detail::round_trip_double(r.ratio_or_over_rd) + ',' +
               detail::round_trip_double(args.alpha) + ',' + std::to_string(args.mc.samples) +
               ',' + std::to_string(args.mc.seed) + ',' + std::to_string(args.mc.chunks) + ',' +
               kVersion + "\n";
      }
      emit(out, args.out_path);
    } else {
      emit(wald_markdown(rows, args.alpha, args.mc), args.out_path);
    }
    return 0;
  }
  throw std::domain_error("unknown table \"" + args.which + "\"; expected thm1, thm2, coro1, or wald");
}

// ----------------------------------------------------------------- check ---

double cdf_normal(double x) { return 0.5 * std::erfc(-x / 1.4142135623730951); }

// Mirrors the upper half to the lower, as the library does: near one the CDF
// carries only absolute precision, so bisecting there would locate the root
// no better than eps over the density.
double quantile_by_bisection(double q) {
  if (q > 0.5) return -quantile_by_bisection(1.0 - q);
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf_normal(mid) < q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct CheckReporter {
  int failures = 0;

  void report(bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << ": " << detail << "\n";
    if (!ok) ++failures;
  }
};

int run_check(bool fast) {
  CheckReporter rep;

  // Closed forms against cubature on the scales that have both.
  {
    const QuadConfig scfg = fast ? QuadConfig{8, 10} : surface_quad_defaults();
    for (double p : {0.3, 1.0}) {
      const ProbBound bound(p);
      for (EffectScale s : {EffectScale::RiskDifference, EffectScale::RiskRatio}) {
        const double p3 = p * p * p;
        const double fd = std::abs(quad_domain_volume(s, bound).value -
                                   *closed_domain_volume(s, bound));
        rep.report(fd <= 1e-10, std::string("quad domain vs closed ") + scale_token(s) +
                                    " p=" + fmt_compact(p),
                   "|diff|=" + fmt_sci(fd));
        const double fs = std::abs(quad_surface_volume(s, bound, scfg).value -
                                   *closed_surface_volume(s, bound));
        rep.report(fs <= 1e-3 * p3, std::string("quad surface vs closed ") + scale_token(s) +
                                        " p=" + fmt_compact(p),
                   "|diff|=" + fmt_sci(fs));
      }
    }
    const double f1 = std::abs(
        quad_domain_volume(EffectScale::OddsRatio, ProbBound(1.0)).value - 1.0);
    rep.report(f1 <= 1e-10, "quad domain vs closed or p=1", "|diff|=" + fmt_sci(f1));
  }

  // Gram determinant of the graph Jacobian against the closed volume element,
  // on interior triples: toward the cube edges the element itself diverges and
  // the explicit-Gram determinant loses absolute accuracy to cancellation, so
  // the oracle agreement is a statement about well-conditioned points.
  {
    std::mt19937_64 eng(20240817);
    const int trials = fast ? 200 : 1000;
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      const CellTriple t(0.1 + 0.8 * uniform01(eng), 0.1 + 0.8 * uniform01(eng),
                         0.1 + 0.8 * uniform01(eng));
      for (EffectScale s : kAllScales) {
        worst = std::max(worst, std::abs(gram_volume(jacobian(s, t)) - volume_element(s, t)));
      }
    }
    rep.report(worst <= 1e-10, "gram determinant vs volume element",
               std::to_string(trials) + " triples, worst abs diff=" + fmt_sci(worst));
  }

  // Normal quantile against bisection of the CDF.
  {
    const int points = fast ? 100 : 1000;
    double worst = 0.0;
    for (int i = 1; i <= points; ++i) {
      const double u = static_cast<double>(i) / (points + 1);
      // cover both the centre and the tails
      for (double q : {u, 1e-10 + u * 1e-3, 1.0 - 1e-10 - u * 1e-3}) {
        worst = std::max(worst, std::abs(normal_quantile(q) - quantile_by_bisection(q)));
      }
    }
    rep.report(worst <= 1e-9, "normal quantile vs bisection oracle",
               std::to_string(3 * points) + " points, worst abs diff=" + fmt_sci(worst));
  }

  // Monte Carlo against closed forms (5 standard errors).
  {
    McConfig mc;
    mc.samples = fast ? 200'000 : 1'000'000;
    mc.seed = 12345;
    const ProbBound one(1.0);
    for (EffectScale s : {EffectScale::RiskDifference, EffectScale::RiskRatio}) {
      for (VolumeKind kind : {VolumeKind::Domain, VolumeKind::Surface}) {
        const VolumeEstimate est = mc_volume(kind, s, one, mc);
        const double truth = kind == VolumeKind::Domain ? *closed_domain_volume(s, one)
                                                        : *closed_surface_volume(s, one);
        const double dev = std::abs(est.value - truth) / *est.std_error;
        rep.report(dev <= 5.0, std::string("mc vs closed ") + scale_token(s) + " " +
                                   (kind == VolumeKind::Domain ? "domain" : "surface"),
                   "deviation=" + fmt_fixed(dev, 2) + " se");
      }
    }
    // No closed form on the odds scale away from p=1: compare MC with cubature.
    const ProbBound half(0.5);
    mc.samples = fast ? 100'000 : 1'000'000;
    const VolumeEstimate est = mc_volume(VolumeKind::Domain, EffectScale::OddsRatio, half, mc);
    const double truth = quad_domain_volume(EffectScale::OddsRatio, half).value;
    const double dev = std::abs(est.value - truth) / *est.std_error;
    rep.report(dev <= 5.0, "mc vs quad or domain p=0.5", "deviation=" + fmt_fixed(dev, 2) + " se");
  }

  std::cout << (rep.failures == 0 ? "all checks passed\n"
                                  : std::to_string(rep.failures) + " check(s) failed\n");
  return rep.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"volumes of homogeneity domains, surfaces, and Wald acceptance regions"};
  app.require_subcommand(1);

  VolumeArgs vol;
  CLI::App* cmd_volume = app.add_subcommand("volume", "one volume per (scale, p) pair");
  cmd_volume->add_option("--kind", vol.kind, "domain or surface")
      ->check(CLI::IsMember({"domain", "surface"}))
      ->capture_default_str();
  cmd_volume->add_option("--scale", vol.scales, "effect scales (rd, rr, or)")
      ->required()
      ->delimiter(',');
  cmd_volume->add_option("--p", vol.ps, "probability bounds in (0, 1]")->required()->delimiter(',');
  cmd_volume->add_option("--method", vol.method, "closed, mc, or quad")
      ->check(CLI::IsMember({"closed", "mc", "quad"}))
      ->capture_default_str();
  cmd_volume->add_option("--format", vol.format, "json, csv, or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  cmd_volume->add_option("--out", vol.out_path, "write output to a file instead of stdout");
  cmd_volume->add_option("--samples", vol.mc.samples, "Monte Carlo draws")->capture_default_str();
  cmd_volume->add_option("--seed", vol.mc.seed, "Monte Carlo seed")
      ->envname("HOMVOL_SEED")
      ->capture_default_str();
  cmd_volume->add_option("--chunks", vol.mc.chunks, "Monte Carlo substreams")
      ->capture_default_str();
  cmd_volume->add_option("--nodes", vol.nodes,
                         "quadrature nodes per axis (default: 64 domain, 10 surface)");
  cmd_volume->add_option("--refine", vol.refine,
                         "quadrature grading levels (default: 0 domain, 14 surface)");

  TablesArgs tab;
  CLI::App* cmd_tables = app.add_subcommand("tables", "tabulated results over the standard grids");
  cmd_tables->add_option("--which", tab.which, "thm1, thm2, coro1, or wald")->required();
  cmd_tables->add_option("--p-grid", tab.p_grid, "probability bounds")->delimiter(',');
  cmd_tables->add_option("--n-grid", tab.n_grid, "per-group sample sizes")->delimiter(',');
  cmd_tables->add_option("--alpha", tab.alpha, "test level")->capture_default_str();
  cmd_tables->add_option("--format", tab.format, "json, csv, or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  cmd_tables->add_option("--out", tab.out_path, "write output to a file instead of stdout");
  cmd_tables->add_option("--samples", tab.mc.samples, "Monte Carlo draws")->capture_default_str();
  cmd_tables->add_option("--seed", tab.mc.seed, "Monte Carlo seed")
      ->envname("HOMVOL_SEED")
      ->capture_default_str();
  cmd_tables->add_option("--chunks", tab.mc.chunks, "Monte Carlo substreams")
      ->capture_default_str();
  cmd_tables->add_option("--nodes", tab.nodes, "quadrature nodes per axis");
  cmd_tables->add_option("--refine", tab.refine, "quadrature grading levels");

  bool fast = false;
  CLI::App* cmd_check = app.add_subcommand("check", "internal cross-check battery");
  cmd_check->add_flag("--fast", fast, "smaller sample sizes and grids");

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

  try {
    if (cmd_volume->parsed()) return run_volume(vol);
    if (cmd_tables->parsed()) return run_tables(tab);
    if (cmd_check->parsed()) return run_check(fast);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
