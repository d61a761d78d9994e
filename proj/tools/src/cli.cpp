#include "hring_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hring/hring.hpp"

namespace hring::cli {
namespace {

using json = nlohmann::ordered_json;

// Accepts p/q and golden wherever a plain real is expected.
const CLI::Validator kReal(
    [](std::string& text) {
      try {
        std::ostringstream os;
        os << std::setprecision(17) << parse_real(text);
        text = os.str();
        return std::string{};
      } catch (const std::invalid_argument& e) {
        return std::string{e.what()};
      }
    },
    "REAL");

json cj(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json sj(const SpherePoint& p) {
  if (p.is_infinity()) return "inf";
  return cj(p.value());
}

json fate_json(const Fate& f) {
  json j{{"class", std::string(to_string(f.cls))}};
  if (f.cls == FateClass::AttractedToCycle) {
    j["period"] = f.period;
    j["representative"] = f.representative_infinite ? json("inf") : cj(f.representative);
  }
  if (f.cls == FateClass::RotationDomain) j["entry_steps"] = f.entry_steps;
  return j;
}

json report(std::string_view op, json inputs, json result, json residuals = json::object(),
            json error_bound = nullptr) {
  return json{{"op", op},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"residuals", std::move(residuals)},
              {"error_bound", std::move(error_bound)}};
}

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- map selection -------------------------------------------------------------

struct MapOptions {
  std::string family;
  std::string a, b, u, alpha, beta, lambda, c;
  std::string r = "0.5";
  std::string t = "0";
  std::string theta = "0";
  int exponent = 2;
};

constexpr const char* kFamilies =
    "cubic, normalized-cubic, mero-two-zero, quartic, mero-pole, ez2, siegel2, "
    "cubic-blaschke, arnold, quadratic, rotation";

void add_map_options(CLI::App* app, MapOptions& m) {
  app->add_option("--family", m.family, std::string("map family: ") + kFamilies)->required();
  app->add_option("--a", m.a, "parameter a (complex; real for arnold)");
  app->add_option("--b", m.b, "parameter b (complex)");
  app->add_option("--u", m.u, "parameter u (complex); cubic default: period-2 value");
  app->add_option("--alpha", m.alpha, "normalized-cubic alpha");
  app->add_option("--beta", m.beta, "normalized-cubic beta");
  app->add_option("--lambda", m.lambda, "ez2 lambda");
  app->add_option("--c", m.c, "quadratic c");
  app->add_option("--r", m.r, "quartic r in (0,1)");
  app->add_option("--t", m.t, "phase t (quartic, cubic-blaschke, arnold)");
  app->add_option("--theta", m.theta, "rotation number (rotation family), real or golden");
  app->add_option("--exponent", m.exponent, "quartic zero exponent (2 or 4)");
}

cplx need(const std::string& v, const char* name, const std::string& family) {
  if (v.empty()) throw UsageError(family + " needs --" + name);
  return parse_complex(v);
}

std::pair<MapSpec, json> build_map(const MapOptions& m) {
  const std::string& f = m.family;
  const double r = parse_real(m.r), t = parse_real(m.t), theta = parse_real(m.theta);
  if (f == "cubic") {
    const cplx a = need(m.a, "a", f), b = need(m.b, "b", f);
    const cplx u = m.u.empty() ? u_for_period2(a, b) : parse_complex(m.u);
    return {CubicRat{a, b, u}, {{"family", f}, {"a", cj(a)}, {"b", cj(b)}, {"u", cj(u)}}};
  }
  if (f == "normalized-cubic") {
    const cplx al = need(m.alpha, "alpha", f), be = need(m.beta, "beta", f), u = need(m.u, "u", f);
    return {NormalizedCubic{al, be, u},
            {{"family", f}, {"alpha", cj(al)}, {"beta", cj(be)}, {"u", cj(u)}}};
  }
  if (f == "mero-two-zero") {
    const cplx a = need(m.a, "a", f), b = need(m.b, "b", f), u = need(m.u, "u", f);
    return {MeroTwoZeroExp{a, b, u}, {{"family", f}, {"a", cj(a)}, {"b", cj(b)}, {"u", cj(u)}}};
  }
  if (f == "quartic")
    return {QuarticBlaschke{r, t, m.exponent},
            {{"family", f}, {"r", r}, {"t", t}, {"exponent", m.exponent}}};
  if (f == "mero-pole") {
    const cplx a = need(m.a, "a", f), b = need(m.b, "b", f);
    return {MeroPoleExp{a, b}, {{"family", f}, {"a", cj(a)}, {"b", cj(b)}}};
  }
  if (f == "ez2") {
    const cplx l = need(m.lambda, "lambda", f);
    return {EntireZ2Exp{l}, {{"family", f}, {"lambda", cj(l)}}};
  }
  if (f == "siegel2") {
    const cplx b = need(m.b, "b", f);
    return {EntireSiegel2{b}, {{"family", f}, {"b", cj(b)}}};
  }
  if (f == "cubic-blaschke") {
    const cplx a = need(m.a, "a", f);
    return {CubicBlaschke{a, t}, {{"family", f}, {"a", cj(a)}, {"t", t}}};
  }
  if (f == "arnold") {
    const double a = m.a.empty() ? 0.0 : parse_real(m.a);
    return {Arnold{a, t}, {{"family", f}, {"a", a}, {"t", t}}};
  }
  if (f == "quadratic") {
    const cplx c = need(m.c, "c", f);
    return {Quadratic{c}, {{"family", f}, {"c", cj(c)}}};
  }
  if (f == "rotation") return {RigidRotation{theta}, {{"family", f}, {"theta", theta}}};
  throw UsageError("unknown family '" + f + "'; expected one of: " + kFamilies);
}

// ---- shared budget ---------------------------------------------------------------

void add_budget_options(CLI::App* app, Budget& b) {
  app->add_option("--max-iter", b.max_iter, "return-map steps N")->check(CLI::PositiveNumber);
  app->add_option("--ring-period", b.ring_period, "ring period p")->check(CLI::PositiveNumber);
  app->add_option("--max-entry", b.max_entry, "preliminary steps allowed before recurrence")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--escape-radius", b.escape_radius)->check(CLI::PositiveNumber);
  app->add_option("--attract-tol", b.attract_tol)->check(CLI::PositiveNumber);
  app->add_option("--recur-tol", b.recur_tol, "chordal recurrence tolerance")
      ->check(CLI::PositiveNumber);
  app->add_option("--max-period", b.max_period)->check(CLI::PositiveNumber);
}

json budget_json(const Budget& b) {
  return {{"max_iter", b.max_iter},         {"ring_period", b.ring_period},
          {"max_entry", b.max_entry},       {"escape_radius", b.escape_radius},
          {"attract_tol", b.attract_tol},   {"recur_tol", b.recur_tol},
          {"max_period", b.max_period},     {"converging_tol", b.converging_tol}};
}

struct ScanOptions {
  std::string base = "0";
  std::string direction = "1";
  double r_min = 1e-3;
  double r_max = 10.0;
  int samples = 200;
};

void add_scan_options(CLI::App* app, ScanOptions& s) {
  app->add_option("--scan-base", s.base, "ray base point (complex)");
  app->add_option("--scan-dir", s.direction, "ray direction (complex)");
  app->add_option("--r-min", s.r_min)->check(CLI::NonNegativeNumber);
  app->add_option("--r-max", s.r_max)->check(CLI::PositiveNumber);
  app->add_option("--samples", s.samples)->check(CLI::PositiveNumber);
}

RayScan to_scan(const ScanOptions& s) {
  return {parse_complex(s.base), parse_complex(s.direction), s.r_min, s.r_max, s.samples};
}

json scan_json(const ScanOptions& s) {
  const RayScan r = to_scan(s);
  return {{"base", cj(r.base)}, {"direction", cj(r.direction)}, {"r_min", r.r_min},
          {"r_max", r.r_max}, {"samples", r.samples}};
}

json window_json(const Window& w) {
  return {{"re_min", w.re_min}, {"re_max", w.re_max}, {"im_min", w.im_min}, {"im_max", w.im_max}};
}

json counts_json(const ClassCounts& c) {
  return {{"ring", c.ring}, {"ring_preimage", c.preimage}, {"attracted", c.attracted},
          {"escape", c.escape}, {"undecided", c.undecided}};
}

json error_json(std::string_view op, const Error& e) {
  json err{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (e.level >= 0) err["level"] = e.level;
  if (!e.partial_roots.empty()) {
    json roots = json::array();
    for (const cplx& r : e.partial_roots) roots.push_back(cj(r));
    err["partial_roots"] = roots;
  }
  return json{{"op", op}, {"error", err}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Herman ring and Siegel disk numerics"};
  app.name("hring");
  app.require_subcommand(1);

  // render-dyn
  MapOptions rd_map;
  Budget rd_budget;
  std::string rd_window = "-2,2,-2,2", rd_size = "200x200", rd_out;
  unsigned rd_threads = 0;
  auto* rd = app.add_subcommand("render-dyn", "render the fate image of a dynamical plane");
  add_map_options(rd, rd_map);
  add_budget_options(rd, rd_budget);
  rd->add_option("--window", rd_window, "re_min,re_max,im_min,im_max");
  rd->add_option("--size", rd_size, "WxH");
  rd->add_option("--threads", rd_threads, "0: all cores");
  rd->add_option("--out", rd_out, "PPM output path");

  // render-param
  std::string rp_plane = "e-lambda", rp_a = "4";
  Budget rp_budget;
  std::string rp_window = "-21,3,-6,6", rp_size = "240x120", rp_out;
  unsigned rp_threads = 0;
  auto* rp = app.add_subcommand("render-param", "render a parameter plane by critical-orbit fate");
  rp->add_option("--plane", rp_plane, "e-lambda or cubic-b")
      ->check(CLI::IsMember({"e-lambda", "cubic-b"}));
  rp->add_option("--a", rp_a, "cubic a for the b-plane");
  add_budget_options(rp, rp_budget);
  rp->add_option("--window", rp_window, "re_min,re_max,im_min,im_max");
  rp->add_option("--size", rp_size, "WxH");
  rp->add_option("--threads", rp_threads, "0: all cores");
  rp->add_option("--out", rp_out, "PPM output path");

  // rotnum
  MapOptions rn_map;
  Budget rn_budget;
  ScanOptions rn_scan;
  std::string rn_seed, rn_center = "0";
  int rn_p = 1, rn_n = 2000;
  bool rn_circle = false;
  auto* rn = app.add_subcommand("rotnum", "rotation number of a ring or invariant circle");
  add_map_options(rn, rn_map);
  add_scan_options(rn, rn_scan);
  rn->add_option("--p", rn_p, "ring period")->check(CLI::PositiveNumber);
  rn->add_option("--n", rn_n, "return-map steps")->check(CLI::PositiveNumber);
  rn->add_option("--seed", rn_seed, "seed point (default: ray scan)");
  rn->add_option("--center", rn_center, "point the ring surrounds");
  rn->add_option("--recur-tol", rn_budget.recur_tol)->check(CLI::PositiveNumber);
  rn->add_flag("--circle", rn_circle, "rotation of the unit-circle map (cubic-blaschke, arnold)");

  // find-seed
  MapOptions fs_map;
  Budget fs_budget;
  ScanOptions fs_scan;
  auto* fs = app.add_subcommand("find-seed", "first ray sample in a periodic ring");
  add_map_options(fs, fs_map);
  add_budget_options(fs, fs_budget);
  add_scan_options(fs, fs_scan);

  // solve-u
  int su_p = 2;
  std::string su_a, su_b;
  auto* su = app.add_subcommand("solve-u", "u making 0 periodic of period 2 or 3 for the cubic");
  su->add_option("--p", su_p, "period")->check(CLI::IsMember({2, 3}));
  su->add_option("--a", su_a, "a (complex)")->required();
  su->add_option("--b", su_b, "b (complex)")->required();

  // solve-siegel2
  std::string ss_theta = "golden", ss_seed = "1+1i";
  int ss_iter = 100;
  auto* ss = app.add_subcommand("solve-siegel2", "b with (b+1)e^{-b} = e^{2 pi i theta}");
  ss->add_option("--theta", ss_theta, "rotation number or golden");
  ss->add_option("--seed", ss_seed, "Newton seed (complex)");
  ss->add_option("--max-iter", ss_iter)->check(CLI::PositiveNumber);

  // siegel-lambda
  std::string sl_theta = "golden";
  auto* sl = app.add_subcommand("siegel-lambda", "lambda z^2 e^z with a Siegel fixed point");
  sl->add_option("--theta", sl_theta, "rotation number or golden");

  // verify-cycle
  MapOptions vc_map;
  std::string vc_z0 = "0";
  int vc_p = 2;
  double vc_tol = 1e-10;
  auto* vc = app.add_subcommand("verify-cycle", "check that z0 is periodic");
  add_map_options(vc, vc_map);
  vc->add_option("--z0", vc_z0, "start point (complex or inf)");
  vc->add_option("--p", vc_p, "period")->check(CLI::PositiveNumber);
  vc->add_option("--tol", vc_tol, "chordal residual tolerance")->check(CLI::PositiveNumber);

  // symmetry-check
  double sc_r = 1.0 / 40.0, sc_t = 0.0;
  int sc_exponent = 2, sc_n = 200;
  std::uint64_t sc_seed = 1;
  double sc_tol = 1e-10;
  auto* sc = app.add_subcommand("symmetry-check", "tau-symmetry and cycle report of the quartic");
  sc->add_option("--r", sc_r)->transform(kReal)->check(CLI::Range(0.0, 1.0));
  sc->add_option("--t", sc_t)->transform(kReal);
  sc->add_option("--exponent", sc_exponent)->check(CLI::IsMember({2, 4}));
  sc->add_option("--n", sc_n, "random sphere points")->check(CLI::PositiveNumber);
  sc->add_option("--seed", sc_seed);
  sc->add_option("--tol", sc_tol)->check(CLI::PositiveNumber);

  // verify-quadlike
  std::string vq_grid = "default";
  QuadlikeGrid vq;
  double vq_factor = 4.0;
  bool vq_records = false;
  auto* vqc = app.add_subcommand("verify-quadlike", "numerical checks of the quadratic-like family");
  vqc->add_option("--grid", vq_grid, "default or small")->check(CLI::IsMember({"default", "small"}));
  vqc->add_option("--threads", vq.threads, "0: all cores");
  vqc->add_option("--critical-factor", vq_factor, "critical value factor (4 is exact)");
  vqc->add_flag("--records", vq_records, "list a record per failed sample");

  // find-param
  std::string fp_method = "circle", fp_family = "cubic-blaschke", fp_slice = "quartic-t";
  std::string fp_a = "4", fp_b = "0", fp_theta = "golden";
  double fp_t0 = 0.0, fp_t1 = 1.0, fp_r = 1.0 / 40.0;
  int fp_exponent = 2, fp_depth = 6, fp_iterations = 1000000;
  auto* fp = app.add_subcommand("find-param", "parameter with a prescribed rotation number");
  fp->add_option("--method", fp_method, "circle or tongue")
      ->check(CLI::IsMember({"circle", "tongue"}));
  fp->add_option("--family", fp_family, "circle method: cubic-blaschke or arnold")
      ->check(CLI::IsMember({"cubic-blaschke", "arnold"}));
  fp->add_option("--slice", fp_slice, "tongue method: quartic-t, cubic-imb or arnold-t")
      ->check(CLI::IsMember({"quartic-t", "cubic-imb", "arnold-t"}));
  fp->add_option("--a", fp_a, "family parameter a");
  fp->add_option("--b", fp_b, "cubic-imb: b whose real part is kept");
  fp->add_option("--r", fp_r, "quartic r")->transform(kReal);
  fp->add_option("--exponent", fp_exponent, "quartic exponent")->check(CLI::IsMember({2, 4}));
  fp->add_option("--theta", fp_theta, "target rotation number or golden");
  fp->add_option("--t0", fp_t0, "bracket start")->transform(kReal);
  fp->add_option("--t1", fp_t1, "bracket end")->transform(kReal);
  fp->add_option("--depth", fp_depth, "convergent depth")->check(CLI::PositiveNumber);
  fp->add_option("--iterations", fp_iterations, "circle steps per estimate")
      ->check(CLI::PositiveNumber);

  // cf
  std::string cf_x = "golden";
  int cf_n = 10, cf_brjuno = -1;
  auto* cf = app.add_subcommand("cf", "continued fraction, convergents and Brjuno partial sum");
  cf->add_option("--x", cf_x, "number in (0,1), p/q, or golden");
  cf->add_option("--n", cf_n, "quotients")->check(CLI::PositiveNumber);
  cf->add_option("--brjuno", cf_brjuno, "terms of the Brjuno sum");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  std::string op;
  for (const CLI::App* s : app.get_subcommands()) op = s->get_name();
  try {
    json j;
    int code = 0;

    if (op == "render-dyn") {
      const auto [spec, inputs] = build_map(rd_map);
      const Window w = parse_window(rd_window);
      const auto [width, height] = parse_size(rd_size);
      const Map map{spec};
      const FateImage img = render_dynamical(map, w, width, height, rd_budget, rd_threads);
      const std::string bytes = encode_ppm(img);
      if (!rd_out.empty()) write_file(rd_out, bytes);
      j = report(op,
                 {{"map", inputs}, {"window", window_json(w)}, {"width", width},
                  {"height", height}, {"budget", budget_json(rd_budget)}, {"out", rd_out}},
                 {{"counts", counts_json(count_classes(img))}, {"bytes", bytes.size()}});
    } else if (op == "render-param") {
      const Window w = parse_window(rp_window);
      const auto [width, height] = parse_size(rp_size);
      json inputs{{"plane", rp_plane}};
      ParamSlice2D slice;
      if (rp_plane == "e-lambda") {
        slice = e_lambda_plane();
      } else {
        const cplx a = parse_complex(rp_a);
        slice = cubic_b_plane(a);
        inputs["a"] = cj(a);
      }
      inputs["window"] = window_json(w);
      inputs["width"] = width;
      inputs["height"] = height;
      inputs["budget"] = budget_json(rp_budget);
      inputs["out"] = rp_out;
      const FateImage img = render_parameter(slice, w, width, height, rp_budget, rp_threads);
      const std::string bytes = encode_ppm(img);
      if (!rp_out.empty()) write_file(rp_out, bytes);
      j = report(op, inputs, {{"counts", counts_json(count_classes(img))}, {"bytes", bytes.size()}});
    } else if (op == "rotnum") {
      const auto [spec, inputs] = build_map(rn_map);
      const Map map{spec};
      if (rn_circle) {
        const RotationEstimate est = circle_rotation_number(map, rn_n);
        j = report(op, {{"map", inputs}, {"circle", true}, {"n", rn_n}},
                   {{"rotation_number", est.value}, {"method", to_string(est.method)}},
                   json::object(), est.error_bound);
      } else {
        rn_budget.ring_period = rn_p;
        const SpherePoint seed = rn_seed.empty() ? find_ring_seed(map, to_scan(rn_scan), rn_budget)
                                                 : SpherePoint(parse_complex(rn_seed));
        const cplx center = parse_complex(rn_center);
        const RotationReport rep = rotation_number(map, rn_p, seed, center, rn_n, rn_budget.recur_tol);
        j = report(op,
                   {{"map", inputs}, {"p", rn_p}, {"n", rn_n}, {"seed", sj(seed)},
                    {"center", cj(center)}, {"recur_tol", rn_budget.recur_tol},
                    {"scan", rn_seed.empty() ? scan_json(rn_scan) : json(nullptr)}},
                   {{"rotation_number", rep.winding.value},
                    {"winding_mean", rep.winding.value},
                    {"closest_return", rep.closest_return.value},
                    {"return_times", rep.return_times}},
                   {{"discrepancy", rep.discrepancy},
                    {"closest_return_error_bound", rep.closest_return.error_bound},
                    {"max_angular_gap", rep.max_angular_gap}},
                   rep.winding.error_bound);
      }
    } else if (op == "find-seed") {
      const auto [spec, inputs] = build_map(fs_map);
      const Map map{spec};
      const SpherePoint seed = find_ring_seed(map, to_scan(fs_scan), fs_budget);
      j = report(op, {{"map", inputs}, {"budget", budget_json(fs_budget)}, {"scan", scan_json(fs_scan)}},
                 {{"seed", sj(seed)}, {"fate", fate_json(classify_point(map, seed, fs_budget))}});
    } else if (op == "solve-u") {
      const cplx a = parse_complex(su_a), b = parse_complex(su_b);
      json inputs{{"p", su_p}, {"a", cj(a)}, {"b", cj(b)}};
      auto residual = [&](cplx u) {
        return std::abs(iterate_n(Map{CubicRat{a, b, u}}, cplx{0.0, 0.0}, su_p).value());
      };
      if (su_p == 2) {
        const cplx u = u_for_period2(a, b);
        j = report(op, inputs, {{"u", cj(u)}}, {{"abs_f2_at_0", residual(u)}});
      } else {
        json us = json::array(), res = json::array();
        for (const cplx& u : u_candidates_period3(a, b)) {
          us.push_back(cj(u));
          res.push_back(residual(u));
        }
        j = report(op, inputs, {{"u_candidates", us}}, {{"abs_f3_at_0", res}});
      }
    } else if (op == "solve-siegel2") {
      const double theta = parse_real(ss_theta);
      const cplx seed = parse_complex(ss_seed);
      const NewtonReport r = solve_siegel2_b(theta, seed, ss_iter);
      const Map f{EntireSiegel2{r.root}};
      j = report(op, {{"theta", theta}, {"seed", cj(seed)}, {"max_iter", ss_iter}},
                 {{"b", cj(r.root)}, {"iterations", r.iterations},
                  {"cycle_multiplier", cj(f.derivative(cplx{0.0, 0.0}) * f.derivative(r.root))}},
                 {{"equation", r.residual}});
    } else if (op == "siegel-lambda") {
      const double theta = parse_real(sl_theta);
      const SiegelFixed s = siegel_lambda_fixed(theta);
      const Map e{EntireZ2Exp{s.lambda}};
      const cplx mult = e.derivative(s.z_fixed);
      j = report(op, {{"theta", theta}},
                 {{"lambda", cj(s.lambda)}, {"z_fixed", cj(s.z_fixed)}, {"multiplier", cj(mult)}},
                 {{"fixed_point", std::abs(e(s.z_fixed).value() - s.z_fixed)},
                  {"multiplier_modulus", std::abs(std::abs(mult) - 1.0)}});
    } else if (op == "verify-cycle") {
      const auto [spec, inputs] = build_map(vc_map);
      const Map map{spec};
      const SpherePoint z0 = vc_z0 == "inf" ? SpherePoint::infinity() : SpherePoint(parse_complex(vc_z0));
      const CycleReport rep = verify_cycle(map, z0, vc_p);
      json pts = json::array();
      for (const SpherePoint& p : rep.points) pts.push_back(sj(p));
      const bool pass = rep.residual < vc_tol;
      j = report(op, {{"map", inputs}, {"z0", sj(z0)}, {"p", vc_p}, {"tol", vc_tol}},
                 {{"pass", pass}, {"points", pts}, {"multiplier_modulus", rep.multiplier},
                  {"through_infinity", rep.through_infinity}},
                 {{"chordal", rep.residual}});
      code = pass ? 0 : 1;
    } else if (op == "symmetry-check") {
      const QuarticBlaschke q{sc_r, sc_t, sc_exponent};
      const double sup = symmetry_residual(Map{q}, sc_n, sc_seed);
      const QuarticCycleReport c = quartic_cycle_report(q);
      auto cyc = [](const std::vector<SpherePoint>& v) {
        json a = json::array();
        for (const SpherePoint& p : v) a.push_back(sj(p));
        return a;
      };
      const bool pass = sup < sc_tol;
      j = report(op, {{"r", sc_r}, {"t", sc_t}, {"exponent", sc_exponent}, {"n", sc_n},
                      {"seed", sc_seed}, {"tol", sc_tol}},
                 {{"pass", pass},
                  {"image_of_zero_factor", sj(c.image_of_zero_factor)},
                  {"image_of_zero", sj(c.image_of_zero)},
                  {"image_of_r", sj(c.image_of_r)},
                  {"image_of_infinity", sj(c.image_of_infinity)},
                  {"cycle_of_zero", cyc(c.cycle_of_zero)},
                  {"cycle_of_infinity", cyc(c.cycle_of_infinity)},
                  {"pole_order_at_r", c.pole_order_at_r}},
                 {{"symmetry_sup", sup}, {"zero_cycle", c.residual_zero_cycle}});
      code = pass ? 0 : 1;
    } else if (op == "verify-quadlike") {
      if (vq_grid == "small") {
        vq.interior = 100;
        vq.boundary = 1000;
        vq.z_res = 60;
        vq.containment_lambdas = 100;
        vq.degree_lambdas = 1;
        vq.degree_w = 10;
      }
      const QuadlikeReport r = verify_mandelbrot_like(vq, vq_factor);
      auto status = [](bool b) { return b ? "PASS" : "FAIL"; };
      json checks = json::array();
      checks.push_back({{"check_id", "i"}, {"status", status(r.pass_critical_value)},
                        {"samples", r.critical_value_checked}, {"margin", r.critical_value_min_margin}});
      checks.push_back({{"check_id", "ii"}, {"status", status(r.pass_boundary)},
                        {"samples", r.boundary_checked}, {"margin", r.boundary_min_margin}});
      checks.push_back({{"check_id", "iii"}, {"status", status(r.pass_winding)},
                        {"winding", r.winding}, {"winding_doubled", r.winding_refined}});
      checks.push_back({{"check_id", "iv"}, {"status", status(r.pass_containment)},
                        {"samples", r.containment_points}, {"margin", r.containment_min_margin}});
      checks.push_back({{"check_id", "degree"}, {"status", status(r.pass_degree)},
                        {"samples", r.degree_trials}, {"failures", r.degree_failures}});
      json result{{"pass", r.all_pass()}, {"checks", checks},
                  {"gamma1_abs_v", r.gamma1_abs_v}, {"gamma2_abs_v", r.gamma2_abs_v},
                  {"failure_count", r.failures.size()}};
      if (vq_records) {
        json recs = json::array();
        for (const QuadlikeRecord& f : r.failures)
          recs.push_back({{"check_id", f.check_id}, {"lambda", cj(f.lambda)},
                          {"status", f.pass ? "PASS" : "FAIL"}, {"margin", f.margin}});
        result["records"] = recs;
      }
      j = report(op,
                 {{"grid", vq_grid}, {"interior", vq.interior}, {"boundary", vq.boundary},
                  {"z_res", vq.z_res}, {"containment_lambdas", vq.containment_lambdas},
                  {"degree_lambdas", vq.degree_lambdas}, {"degree_w", vq.degree_w},
                  {"newton_seeds", vq.newton_seeds}, {"critical_factor", vq_factor}},
                 result,
                 {{"gamma1_margin", 1.0 / 3.0 - r.gamma1_abs_v},
                  {"gamma2_margin", r.gamma2_abs_v - 25.0}});
      code = r.all_pass() ? 0 : 1;
    } else if (op == "find-param") {
      const double theta = parse_real(fp_theta);
      if (fp_method == "circle") {
        CircleSearch s;
        s.iterations = fp_iterations;
        CircleFamily family;
        json inputs{{"method", fp_method}, {"family", fp_family}};
        if (fp_family == "cubic-blaschke") {
          const cplx a = parse_complex(fp_a);
          family = cubic_blaschke_family(a);
          inputs["a"] = cj(a);
        } else {
          const double a = parse_real(fp_a);
          family = arnold_family(a);
          inputs["a"] = a;
        }
        inputs["theta"] = theta;
        inputs["t0"] = fp_t0;
        inputs["t1"] = fp_t1;
        inputs["iterations"] = fp_iterations;
        const double t = find_t_circle(family, theta, fp_t0, fp_t1, s);
        const RotationEstimate est = circle_rotation_number(family(t), fp_iterations);
        j = report(op, inputs, {{"t", t}, {"rotation_number", est.value}},
                   {{"rotation", std::abs(est.value - theta)}}, est.error_bound);
      } else {
        ParamSlice slice;
        json inputs{{"method", fp_method}, {"slice", fp_slice}};
        if (fp_slice == "quartic-t") {
          slice = quartic_t_slice(fp_r, fp_exponent, fp_t0, fp_t1);
          inputs["r"] = fp_r;
          inputs["exponent"] = fp_exponent;
        } else if (fp_slice == "cubic-imb") {
          const cplx a = parse_complex(fp_a), b = parse_complex(fp_b);
          slice = cubic_imag_b_slice(a, b, fp_t0, fp_t1);
          inputs["a"] = cj(a);
          inputs["re_b"] = b.real();
        } else {
          const double a = parse_real(fp_a);
          slice = arnold_t_slice(a, fp_t0, fp_t1);
          inputs["a"] = a;
        }
        inputs["theta"] = theta;
        inputs["s0"] = fp_t0;
        inputs["s1"] = fp_t1;
        inputs["depth"] = fp_depth;
        const TongueChase c = find_param_by_tongues(slice, theta, fp_depth);
        json tongues = json::array();
        for (const TongueInterval& t : c.tongues)
          tongues.push_back({{"p", t.target.p}, {"q", t.target.q}, {"lo", t.lo}, {"hi", t.hi}});
        j = report(op, inputs,
                   {{"value", c.value}, {"depth", c.depth}, {"bracket", {c.lo, c.hi}},
                    {"tongues", tongues}},
                   json::object(), 0.5 * (c.hi - c.lo));
      }
    } else if (op == "cf") {
      ContinuedFraction c;
      json inputs{{"x", cf_x}, {"n", cf_n}};
      if (cf_x.find('/') != std::string::npos)
        c = cf_expand(parse_rational(cf_x), cf_n);
      else
        c = cf_expand(parse_real(cf_x), cf_n);
      json conv = json::array();
      for (const Convergent& k : convergents(c)) conv.push_back({k.p, k.q});
      json result{{"quotients", c.quotients}, {"convergents", conv}, {"terminated", c.terminated}};
      json residuals = json::object();
      if (cf_brjuno >= 0) {
        inputs["brjuno"] = cf_brjuno;
        const auto full = cf_x.find('/') != std::string::npos
                              ? convergents(cf_expand(parse_rational(cf_x), cf_brjuno + 1))
                              : convergents(cf_expand(parse_real(cf_x), cf_brjuno + 1));
        result["brjuno_partial"] = brjuno_partial(full, cf_brjuno);
      }
      residuals["value"] = std::abs(cf_value(c.quotients) - c.x);
      j = report(op, inputs, result, residuals);
    }
    out << j.dump(2) << '\n';
    return code;
  } catch (const Error& e) {
    out << error_json(op, e).dump(2) << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    out << json{{"op", op}, {"error", {{"code", "Failure"}, {"message", e.what()}}}}.dump(2) << '\n';
    return 1;
  }
}

}  // namespace hring::cli
