// mexlet: Mexican needlet profiles, sphere partitions, coefficients, and the
// numerical verification suites.  All angles are radians; CSV fields carry
// full round-trip (17 significant digit) precision; identical configuration
// gives byte-identical output.
//
// Exit codes: 0 success/PASS, 1 check FAILED, 2 configuration error,
// 3 resource limit exceeded.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mexlet/acceptance.hpp"
#include "mexlet/errors.hpp"
#include "mexlet/kernel.hpp"
#include "mexlet/needlet_field.hpp"
#include "mexlet/pixelization.hpp"
#include "mexlet/verify.hpp"

namespace {

constexpr double kPi = 3.14159265358979324;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const std::string& path, const std::string& body) {
  if (path == "-" || path.empty()) {
    std::fwrite(body.data(), 1, body.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output path " + path);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
}

mexlet::SeriesVariant parse_series(const std::string& s) {
  if (s == "half") return mexlet::SeriesVariant::HalfInteger;
  if (s == "int") return mexlet::SeriesVariant::Integer;
  throw std::invalid_argument("variant must be 'half' or 'int'");
}

mexlet::WeightVariant parse_weight(const std::string& s) {
  if (s == "squared") return mexlet::WeightVariant::SquaredArgument;
  if (s == "exact") return mexlet::WeightVariant::ExactLaplacian;
  throw std::invalid_argument("weight must be 'squared' or 'exact'");
}

// "2..6" or "2" -> [lo, hi]
std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(s);
    return {v, v};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// evenly spread generic centers for user-specified mixtures
mexlet::UnitVector spiral_center(int i, int n) {
  double z = 1.0 - 2.0 * (i + 0.5) / n;
  double theta = std::acos(std::fmin(1.0, std::fmax(-1.0, z)));
  double phi = 2.399963229728653 * i;  // golden angle
  return mexlet::UnitVector::from_spherical(theta, std::fmod(phi, 2.0 * kPi));
}

mexlet::ZonalMixture build_mixture(const std::string& degrees, const std::string& coeffs) {
  if (degrees.empty()) return mexlet::default_frame_mixture();
  std::vector<int> ls = parse_int_list(degrees);
  std::vector<double> cs;
  if (coeffs.empty()) {
    cs.assign(ls.size(), 1.0);
  } else {
    std::stringstream ss(coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) cs.push_back(std::stod(item));
  }
  if (cs.size() != ls.size())
    throw std::invalid_argument("--coeffs must match --degrees in length");
  mexlet::ZonalMixture F;
  for (std::size_t i = 0; i < ls.size(); ++i)
    F.terms.push_back(
        {ls[i], spiral_center(static_cast<int>(i), static_cast<int>(ls.size())), cs[i]});
  return F;
}

int cmd_profile(double B, int j, int s, int points, double theta_max,
                const std::string& variant, const std::string& weight, bool plain,
                const std::string& out_path) {
  mexlet::FilterParams params{B, j, s, parse_series(variant), parse_weight(weight)};
  if (points < 2) throw std::invalid_argument("--points must be >= 2");
  if (!(theta_max > 0.0) || theta_max > kPi)
    throw std::invalid_argument("--theta-max must be in (0, pi]");
  std::vector<double> thetas(points);
  for (int i = 0; i < points; ++i)
    thetas[i] = std::fmin(theta_max, theta_max * i / (points - 1));
  mexlet::KernelProfile prof = mexlet::sample_profile(
      params, thetas, plain ? mexlet::Summation::Plain : mexlet::Summation::Compensated);
  std::string csv = "theta,psi,envelope,ratio\n";
  for (int i = 0; i < points; ++i) {
    double env = mexlet::tail_envelope(B, j, s, thetas[i]);
    csv += num(thetas[i]) + "," + num(prof.values[i]) + "," + num(env) + "," +
           num(std::fabs(prof.values[i]) / env) + "\n";
  }
  emit(out_path, csv);
  return 0;
}

int cmd_psf_check(double eps, int s, int points, int nu_max, const std::string& out_path) {
  if (points < 1) throw std::invalid_argument("--points must be >= 1");
  std::string csv = "phi,direct,psf,rel_err\n";
  double worst = 0.0;
  for (int i = 1; i <= points; ++i) {
    double phi = i * kPi / (points + 1);
    double direct = mexlet::kappa_direct(eps, s, phi);
    double images = mexlet::kappa_psf(eps, s, phi, nu_max);
    double guard = std::fmax(std::fabs(direct),
                             mexlet::kThresholds.psf_abs_floor / (eps * eps));
    double rel = std::fabs(direct - images) / guard;
    worst = std::fmax(worst, rel);
    csv += num(phi) + "," + num(direct) + "," + num(images) + "," + num(rel) + "\n";
  }
  emit(out_path, csv);
  return worst <= mexlet::kThresholds.psf_rel ? 0 : 1;
}

int cmd_partition(double B, int j, int finesse, const std::string& out_path) {
  mexlet::Pixelization pix = mexlet::build_partition(B, j, finesse);
  std::string csv = "k,cx,cy,cz,area,diam\n";
  for (std::size_t k = 0; k < pix.size(); ++k) {
    const mexlet::PixelCell& c = pix.cells[k];
    csv += std::to_string(k) + "," + num(c.center.x) + "," + num(c.center.y) + "," +
           num(c.center.z) + "," + num(c.area) + "," + num(c.diameter) + "\n";
  }
  emit(out_path, csv);
  return 0;
}

int cmd_tail_check(double B, int s, const std::string& j_range, double msa, int points,
                   const std::string& out_path) {
  auto [j_lo, j_hi] = parse_range(j_range);
  std::vector<int> js;
  for (int j = j_lo; j <= j_hi; ++j) js.push_back(j);
  mexlet::TailReport rep = mexlet::tail_bound_report(B, s, js, msa, points);
  emit(out_path, mexlet::to_json(rep) + "\n");
  return rep.pass ? 0 : 1;
}

int cmd_frame_check(double B, int s, const std::string& degrees, const std::string& coeffs,
                    int j_min, int j_max, int finesse, std::size_t max_cells,
                    const std::string& out_path) {
  mexlet::FilterParams base{B, 0, s, mexlet::SeriesVariant::Integer,
                            mexlet::WeightVariant::SquaredArgument};
  mexlet::ZonalMixture F = build_mixture(degrees, coeffs);
  if (j_max < 0) {
    auto [lo, hi] = mexlet::frame_j_range(F, base);
    j_min = lo;
    j_max = hi;
  }
  mexlet::FrameOptions opts;
  opts.finesse = finesse;
  opts.max_cells_per_level = max_cells;
  mexlet::FrameReport rep = mexlet::frame_energy_report(F, base, j_min, j_max, opts);
  emit(out_path, mexlet::to_json(rep) + "\n");
  return rep.pass ? 0 : 1;
}

int cmd_analyze(double B, int j, int s, const std::string& degrees,
                const std::string& coeffs, int finesse, bool cubature,
                const std::string& out_path) {
  mexlet::FilterParams params{B, j, s, mexlet::SeriesVariant::Integer,
                              mexlet::WeightVariant::SquaredArgument};
  mexlet::ZonalMixture F = build_mixture(degrees, coeffs);
  mexlet::Pixelization pix = mexlet::build_partition(B, j, finesse);
  mexlet::NeedletCoefficients beta;
  if (cubature) {
    mexlet::CubatureGrid grid = mexlet::build_cubature(
        F.max_degree() + mexlet::truncation_degree(params, 1e-15));
    beta = mexlet::analyze(F, params, pix, grid);
  } else {
    beta = mexlet::analyze_exact(F, params, pix);
  }
  std::string csv = "k,beta\n";
  for (std::size_t k = 0; k < beta.values.size(); ++k)
    csv += std::to_string(k) + "," + num(beta.values[k]) + "\n";
  emit(out_path, csv);
  return 0;
}

int cmd_lp_norms(double B, int s, const std::string& j_range, const std::string& p_list,
                 const std::string& variant, const std::string& out_path) {
  auto [j_lo, j_hi] = parse_range(j_range);
  std::vector<double> ps;
  {
    std::stringstream ss(p_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "inf")
        ps.push_back(INFINITY);
      else
        ps.push_back(std::stod(item));
    }
  }
  if (ps.empty()) throw std::invalid_argument("--p list is empty");
  mexlet::FilterParams base{B, 0, s, parse_series(variant),
                            mexlet::WeightVariant::SquaredArgument};
  mexlet::LpReport rep = mexlet::lp_scaling_report(base, j_lo, j_hi, ps);
  std::string csv = "j,p,norm,fitted_slope\n";
  for (const auto& e : rep.entries) {
    double slope = 0.0;
    for (const auto& sl : rep.slopes)
      if (sl.p == e.p || (std::isinf(sl.p) && std::isinf(e.p))) slope = sl.fitted;
    csv += std::to_string(e.j) + "," + (std::isinf(e.p) ? "inf" : num(e.p)) + "," +
           num(e.norm) + "," + num(slope) + "\n";
  }
  emit(out_path, csv);
  return rep.pass ? 0 : 1;
}

int cmd_verify_all(double B, const std::string& s_list, const std::string& j_range) {
  mexlet::AcceptanceConfig cfg;
  cfg.B = B;
  cfg.s_list = parse_int_list(s_list);
  auto [j_lo, j_hi] = parse_range(j_range);
  cfg.j_min = j_lo;
  cfg.j_max = j_hi;
  auto results = mexlet::run_acceptance(cfg);
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%2d/10] %s  %-45s (%.2fs / budget %.0fs)\n", r.id,
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.budget_seconds);
    std::printf("        %s\n", r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("verify-all: %s\n", all ? "ALL PASS" : "FAILURES PRESENT");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mexican needlets on the 2-sphere: profiles, partitions, and checks"};
  app.require_subcommand(1);

  double B = 2.0, eps = 0.5, theta_max = kPi, msa = 8.0;
  int j = 4, s = 1, points = 512, nu_max = 3, finesse = 1;
  int frame_finesse = 2, frame_jmin = 0, frame_jmax = -1;
  std::size_t max_cells = 2'000'000;
  std::string out = "-", variant = "half", weight = "squared";
  std::string j_range = "2..6", s_list = "1,2,3", p_list = "1,2,4,inf";
  std::string degrees, coeffs;
  bool plain = false;

  auto* profile = app.add_subcommand("profile", "sample Psi over a theta grid (CSV)");
  profile->add_option("--B", B, "scale factor (> 1)");
  profile->add_option("--j", j, "resolution level");
  profile->add_option("--s", s, "shape parameter");
  profile->add_option("--points", points, "grid size");
  profile->add_option("--theta-max", theta_max, "grid end, radians in (0, pi]");
  profile->add_option("--variant", variant, "series variant: half | int");
  profile->add_option("--weight", weight, "weight variant: squared | exact");
  profile->add_flag("--plain", plain, "64-bit summation instead of compensated");
  profile->add_option("--out", out, "output path, - for stdout");

  auto* psf = app.add_subcommand("psf-check", "kappa series vs Poisson images (CSV)");
  psf->add_option("--eps", eps, "scale eps (> 0)");
  psf->add_option("--s", s, "shape parameter");
  psf->add_option("--points", points, "number of phi samples");
  psf->add_option("--nu-max", nu_max, "image cutoff");
  psf->add_option("--out", out, "output path");

  auto* part = app.add_subcommand("partition", "equal-area cells at one level (CSV)");
  part->add_option("--B", B, "scale factor");
  part->add_option("--j", j, "level, >= 0");
  part->add_option("--finesse", finesse, "ring refinement factor");
  part->add_option("--out", out, "output path");

  auto* tail = app.add_subcommand("tail-check", "Gaussian-Hermite tail report (JSON)");
  tail->add_option("--B", B, "scale factor");
  tail->add_option("--s", s, "shape parameter");
  tail->add_option("--j", j_range, "level range, e.g. 2..6");
  tail->add_option("--max-scaled-angle", msa, "theta/2eps ceiling (<= 10)");
  tail->add_option("--points", points, "grid points per level");
  tail->add_option("--out", out, "output path");

  auto* frame = app.add_subcommand("frame-check", "frame energy bracket report (JSON)");
  frame->add_option("--B", B, "scale factor");
  frame->add_option("--s", s, "shape parameter");
  frame->add_option("--degrees", degrees, "mixture degrees, e.g. 4,9 (default built-in)");
  frame->add_option("--coeffs", coeffs, "mixture coefficients");
  frame->add_option("--j-min", frame_jmin, "lowest level");
  frame->add_option("--j-max", frame_jmax, "highest level (-1: cover 1-1e-10 of energy)");
  frame->add_option("--finesse", frame_finesse, "ring refinement for frame runs");
  frame->add_option("--max-cells", max_cells, "per-level pixelization cap");
  frame->add_option("--out", out, "output path");

  bool use_cubature = false;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "needlet coefficients of a zonal mixture (CSV)");
  analyze_cmd->add_option("--B", B, "scale factor");
  analyze_cmd->add_option("--j", j, "resolution level");
  analyze_cmd->add_option("--s", s, "shape parameter");
  analyze_cmd->add_option("--degrees", degrees, "mixture degrees (default built-in)");
  analyze_cmd->add_option("--coeffs", coeffs, "mixture coefficients");
  analyze_cmd->add_option("--finesse", finesse, "ring refinement factor");
  analyze_cmd->add_flag("--cubature", use_cubature,
                        "integrate on the product grid instead of the exact route");
  analyze_cmd->add_option("--out", out, "output path");

  auto* lp = app.add_subcommand("lp-norms", "L^p norms and fitted exponents (CSV)");
  lp->add_option("--B", B, "scale factor");
  lp->add_option("--s", s, "shape parameter");
  lp->add_option("--j", j_range, "level range, e.g. 2..5");
  lp->add_option("--p", p_list, "comma list of p values, inf allowed");
  lp->add_option("--variant", variant, "series variant: half | int");
  lp->add_option("--out", out, "output path");

  auto* verify = app.add_subcommand("verify-all", "run every acceptance criterion");
  verify->add_option("--B", B, "scale factor for the tail suite");
  verify->add_option("--s", s_list, "comma list of shapes for the tail suite");
  verify->add_option("--j", j_range, "level range for the tail suite");

  try {
    app.parse(argc, argv);
    if (profile->parsed())
      return cmd_profile(B, j, s, points, theta_max, variant, weight, plain, out);
    if (psf->parsed()) return cmd_psf_check(eps, s, points, nu_max, out);
    if (part->parsed()) return cmd_partition(B, j, finesse, out);
    if (tail->parsed()) return cmd_tail_check(B, s, j_range, msa, points, out);
    if (frame->parsed())
      return cmd_frame_check(B, s, degrees, coeffs, frame_jmin, frame_jmax, frame_finesse,
                             max_cells, out);
    if (analyze_cmd->parsed())
      return cmd_analyze(B, j, s, degrees, coeffs, finesse, use_cubature, out);
    if (lp->parsed()) return cmd_lp_norms(B, s, j_range, p_list, variant, out);
    if (verify->parsed()) return cmd_verify_all(B, s_list, j_range);
    std::fprintf(stderr, "error: no subcommand\n");
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const mexlet::resource_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
