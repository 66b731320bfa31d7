#include "mpzeta/analytics.hpp"
#include "mpzeta/boundary.hpp"
#include "mpzeta/config.hpp"
#include "mpzeta/lfunc.hpp"
#include "mpzeta/meanper.hpp"
#include "mpzeta/mellin.hpp"
#include "mpzeta/zeta.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <string>

namespace {

using namespace mpzeta;

cplx parse_s(const std::string& text) {
    double re = 0.0, im = 0.0;
    char extra;
    if (std::sscanf(text.c_str(), "%lf,%lf %c", &re, &im, &extra) == 2) return {re, im};
    if (std::sscanf(text.c_str(), "%lf %c", &re, &extra) == 1) return {re, 0.0};
    throw CLI::ValidationError("--s", "expected 're' or 're,im'");
}

EllipticCurve resolve_curve(const std::string& name) {
    if (name.find('/') != std::string::npos || name.size() > 5)
        return EllipticCurve::from_json_file(name);
    return EllipticCurve::named(name);
}

int cmd_eval(const std::string& spec_name, const std::string& s_text, long long dK,
             const std::string& curve_name) {
    cplx s = parse_s(s_text);
    cplx v;
    if (spec_name == "riemann") {
        v = riemann_zeta(s);
    } else if (spec_name == "lambda_q") {
        v = lambda_q(s);
    } else if (spec_name == "lambda_K") {
        v = lambda_K(s, QuadField::make(dK));
    } else if (spec_name == "dirichlet") {
        v = dirichlet_l_kronecker(s, dK);
    } else if (spec_name == "ZK") {
        v = build_Z_K(QuadField::make(dK)).evaluator(s);
    } else if (spec_name == "ZE") {
        v = build_Z_E(resolve_curve(curve_name)).evaluator(s);
    } else if (spec_name == "ZE2") {
        v = build_Z_E_squared(resolve_curve(curve_name)).evaluator(s);
    } else if (spec_name == "lambda_E") {
        ModularLambda lam(resolve_curve(curve_name));
        v = lam(s);
    } else {
        throw CLI::ValidationError("--spec", "unknown spec " + spec_name);
    }
    std::printf("%.12g", v.real());
    if (std::abs(v.imag()) > 1e-13 * std::abs(v.real()) + 1e-300)
        std::printf(" %+.12gi", v.imag());
    std::printf("\n");
    return 0;
}

int cmd_boundary(const RunConfig& cfg) {
    EllipticCurve curve = resolve_curve(cfg.curve_or_field);
    auto grid = make_grid(cfg.t_from, cfg.t_to, cfg.t_step);
    std::vector<std::string> methods;
    {
        std::string m = cfg.method;
        std::size_t pos;
        while ((pos = m.find(',')) != std::string::npos) {
            methods.push_back(m.substr(0, pos));
            m = m.substr(pos + 1);
        }
        if (!m.empty()) methods.push_back(m);
    }
    std::vector<std::function<double(double)>> fns;
    std::shared_ptr<ContourCache> cache;
    std::shared_ptr<std::vector<PoleDatum>> ledger;
    for (const auto& m : methods) {
        if (m == "theta") {
            auto theta = std::make_shared<ThetaBoundaryE>(curve);
            fns.emplace_back([theta](double t) { return theta->eval(t); });
        } else if (m == "bessel2") {
            auto b = std::make_shared<BesselBoundaryE2>(curve);
            fns.emplace_back([b](double t) { return b->eval(t); });
        } else if (m == "contour") {
            LFunctionSpec spec = build_Z_E(curve);
            auto contour = ContourSpec::for_spec(spec, 1e-11, std::abs(cfg.t_to) + 1.0);
            cache = std::make_shared<ContourCache>(spec.evaluator, contour);
            double eps = spec.sign_eps.real();
            fns.emplace_back([cache, eps](double t) {
                double x = std::exp(-t);
                return cache->f(x).value - eps * std::exp(t) * cache->f(1.0 / x).value;
            });
        } else if (m == "poles") {
            if (cfg.zero_file.empty())
                throw config_error("boundary --method poles needs --zeros FILE");
            ZeroList zl = load_zeros(cfg.zero_file);
            double cutoff = zl.height_limit / 2.0;
            ledger = std::make_shared<std::vector<PoleDatum>>(
                pole_ledger_for_Z_E(curve, zl, cutoff));
            fns.emplace_back([ledger, cutoff](double t) {
                return pole_expansion(*ledger, std::exp(-t), cutoff);
            });
        } else {
            throw config_error("unknown boundary method: " + m);
        }
    }
    std::vector<std::string> cols = {"t"};
    for (const auto& m : methods) cols.push_back("H_" + m);
    if (methods.size() == 2) cols.push_back("diff");
    CsvWriter csv(cfg.out_path, cols, cfg);
    double maxdiff = 0.0;
    for (double t : grid) {
        std::vector<double> row = {t};
        for (auto& f : fns) row.push_back(f(t));
        if (methods.size() == 2) {
            double d = row[1] - row[2];
            row.push_back(d);
            maxdiff = std::max(maxdiff, std::abs(d));
        }
        csv.row(row);
    }
    csv.close();
    if (methods.size() == 2) std::fprintf(stderr, "max |diff| = %.6g\n", maxdiff);
    return 0;
}

int cmd_certify(const RunConfig& cfg, bool perturb) {
    EllipticCurve curve = resolve_curve(cfg.curve_or_field);
    ContourSpec cs;
    Convolutor v = build_convolutor_V(curve, cs, 1);
    ThetaBoundaryE theta(curve);
    BoundaryTerm h = theta.as_boundary_term();
    std::vector<double> grid;
    for (int i = 0; i <= 24; ++i) grid.push_back(0.1 * std::pow(100.0, i / 24.0));
    if (perturb) h = perturb_boundary(v, h, grid);
    CertifyReport rep = certify_mean_periodicity(v, h, grid);
    std::string json = rep.to_json();
    if (!cfg.out_path.empty()) {
        FILE* f = std::fopen(cfg.out_path.c_str(), "w");
        if (!f) throw config_error("cannot write report: " + cfg.out_path);
        std::fprintf(f, "%s\n", json.c_str());
        std::fclose(f);
    }
    std::printf("%s\n", json.c_str());
    if (cfg.strict && !rep.pass) return 2;
    return 0;
}

int cmd_explicit(const std::string& spec_name, double xlo, double xhi, int quad_points) {
    if (spec_name != "lambda_q")
        throw config_error("explicit: only --spec lambda_q is wired to a pole ledger");
    LFunctionSpec spec = build_lambda_q_spec();
    std::vector<PoleDatum> ledger = {
        {cplx(0.0, 0.0), 1, {cplx(-1.0, 0.0)}},
        {cplx(1.0, 0.0), 1, {cplx(1.0, 0.0)}},
    };
    TestFunction phi;
    phi.x_lo = xlo;
    phi.x_hi = xhi;
    phi.quad_points = quad_points;
    auto res = explicit_formula_check(spec, phi, ledger);
    std::printf("lhs = %.12g\nrhs = %.12g\n|lhs-rhs| = %.3g\n", res.lhs, res.rhs,
                std::abs(res.lhs - res.rhs));
    return 0;
}

int cmd_signscan(const RunConfig& cfg, int k, int series) {
    EllipticCurve curve = resolve_curve(cfg.curve_or_field);
    auto rep = single_sign_scan(curve, k, cfg.t_from, cfg.t_to, cfg.t_step, series);
    CsvWriter csv(cfg.out_path, {"bracket_lo", "bracket_hi"}, cfg);
    for (auto& [lo, hi] : rep.sign_changes) csv.row({lo, hi});
    csv.close();
    if (rep.constant_sign_from)
        std::fprintf(stderr, "no sign change; constant sign from t = %g\n",
                     *rep.constant_sign_from);
    else
        std::fprintf(stderr, "%zu sign change(s)\n", rep.sign_changes.size());
    return 0;
}

int cmd_ordinates(const RunConfig& cfg, double T, double H) {
    if (cfg.curve_or_field != "riemann")
        throw config_error("ordinates: only --spec riemann is wired");
    auto L = [](cplx s) { return riemann_zeta(s); };
    auto rep = good_ordinates(L, T, H, {-0.5, 2.5});
    CsvWriter csv(cfg.out_path, {"t"}, cfg);
    for (double t : rep.accepted) csv.row({t});
    csv.close();
    std::fprintf(stderr, "A = %g, excluded measure <= %g\n", rep.exponent_A,
                 rep.excluded_measure_estimate);
    return 0;
}

int cmd_zeros(const RunConfig& cfg, double height) {
    ZeroList list = zeta_zero_scan(height);
    int count = zeta_zero_count_argument(height);
    CsvWriter csv(cfg.out_path, {"gamma"}, cfg);
    for (double g : list.ordinates) csv.row({g});
    csv.close();
    if (count != static_cast<int>(list.ordinates.size()))
        std::fprintf(stderr, "warning: scan found %zu zeros, argument principle says %d\n",
                     list.ordinates.size(), count);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mean-periodic boundary terms of zeta functions: evaluators and checks"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string spec_name = "riemann", s_text = "2";
    long long dK = 1;
    int k = 0, series = 0, quad_points = 2000;
    double T = 30.0, H = 10.0, height = 50.0, xlo = 0.5, xhi = 2.0;
    bool perturb = false;

    auto add_common = [&cfg](CLI::App* c) {
        c->add_option("--tol", cfg.tol, "tolerance");
        c->add_option("--out", cfg.out_path, "output file (default stdout)");
        c->add_option("--cache-dir", cfg.cache_dir, "coefficient cache directory");
        c->add_flag("--strict", cfg.strict, "exit 2 on FAIL");
    };

    auto* ev = app.add_subcommand("eval", "evaluate L / Lambda / Z at a point");
    ev->add_option("--spec", spec_name, "riemann|lambda_q|lambda_K|dirichlet|ZK|ZE|ZE2|lambda_E");
    ev->add_option("--s", s_text, "point: 're' or 're,im'")->required();
    ev->add_option("--dK", dK, "fundamental discriminant");
    ev->add_option("--curve", cfg.curve_or_field, "curve label or JSON path");
    add_common(ev);

    auto* bd = app.add_subcommand("boundary", "emit CSV t,H(t) per method");
    bd->add_option("--curve", cfg.curve_or_field, "curve label or JSON path")->required();
    bd->add_option("--t-from", cfg.t_from);
    bd->add_option("--t-to", cfg.t_to);
    bd->add_option("--t-step", cfg.t_step);
    bd->add_option("--method", cfg.method, "theta|contour|bessel2|poles, comma pair for diff");
    bd->add_option("--zeros", cfg.zero_file, "zeros file for --method poles");
    add_common(bd);

    auto* ce = app.add_subcommand("certify", "mean-periodicity certification report");
    ce->add_option("--curve", cfg.curve_or_field)->required();
    ce->add_flag("--perturb", perturb, "run the 1% coefficient perturbation control");
    add_common(ce);

    auto* ex = app.add_subcommand("explicit", "summation-formula balance");
    ex->add_option("--spec", spec_name);
    ex->add_option("--x-lo", xlo);
    ex->add_option("--x-hi", xhi);
    ex->add_option("--quad-points", quad_points);
    add_common(ex);

    auto* sc = app.add_subcommand("signscan", "sign changes of boundary-series derivatives");
    sc->add_option("--curve", cfg.curve_or_field)->required();
    sc->add_option("--k", k, "derivative order 0..6");
    sc->add_option("--series", series, "0 = theta H_E, 1 = bessel h2");
    sc->add_option("--t-from", cfg.t_from);
    sc->add_option("--t-to", cfg.t_to);
    sc->add_option("--t-step", cfg.t_step);
    add_common(sc);

    auto* od = app.add_subcommand("ordinates", "good summation heights in (T, T+1)");
    od->add_option("--spec", cfg.curve_or_field);
    od->add_option("--T", T);
    od->add_option("--H", H);
    add_common(od);

    auto* zr = app.add_subcommand("zeros", "scan zeta zeros up to a height");
    zr->add_option("--height", height);
    add_common(zr);

    try {
        app.parse(argc, argv);
        cfg.command = app.get_subcommands().front()->get_name();
        if (ev->parsed()) return cmd_eval(spec_name, s_text, dK, cfg.curve_or_field);
        if (bd->parsed()) return cmd_boundary(cfg);
        if (ce->parsed()) return cmd_certify(cfg, perturb);
        if (ex->parsed()) return cmd_explicit(spec_name, xlo, xhi, quad_points);
        if (sc->parsed()) return cmd_signscan(cfg, k, series);
        if (od->parsed()) {
            cfg.curve_or_field = cfg.curve_or_field.empty() ? "riemann" : cfg.curve_or_field;
            return cmd_ordinates(cfg, T, H);
        }
        if (zr->parsed()) return cmd_zeros(cfg, height);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const config_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 2;
    }
}
