// Command-line front-end: deficiency-index arithmetic, polynomial half-plane
// counts, Stirling-type numbers, power expansions, expression application,
// numerical endpoint classification, PDE channel bookkeeping, and the full
// reproduction suite.

#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "defcalc/boundary.hpp"
#include "defcalc/channels.hpp"
#include "defcalc/expression.hpp"
#include "defcalc/halfplane.hpp"
#include "defcalc/index_calculus.hpp"
#include "defcalc/parse.hpp"
#include "defcalc/power_expansion.hpp"
#include "defcalc/report.hpp"
#include "defcalc/roots.hpp"
#include "defcalc/stirling.hpp"
#include "defcalc/verify.hpp"
#include "defcalc/weyl.hpp"

namespace {

using namespace defcalc;

void emit(const RunReport& report, bool json) {
    if (json) {
        std::fputs(report.to_json().c_str(), stdout);
        return;
    }
    std::string out;
    for (const auto& [k, v] : report.parameters) out += k + " = " + v + "\n";
    if (!report.checks.empty()) out += report.checks_table();
    std::fputs(out.c_str(), stdout);
}

int cmd_indices(const std::string& pair_text, const std::string& power_text,
                const std::string& poly_text, const std::string& product_text, bool json) {
    const DefectPair pair = parse_pair(pair_text);
    RunReport report;
    report.command = "indices";
    report.parameters.emplace_back("pair", pair.str());
    DefectPair result = pair;
    if (!power_text.empty()) {
        const auto m = static_cast<std::uint64_t>(std::stoull(power_text));
        result = power_indices(pair, m);
        report.parameters.emplace_back("power", power_text);
    } else if (!poly_text.empty()) {
        const RealPolynomial poly(parse_real_list(poly_text));
        result = polynomial_indices(pair, poly);
        report.parameters.emplace_back("poly", poly_text);
        report.parameters.emplace_back("degree", std::to_string(poly.degree()));
    } else if (!product_text.empty()) {
        // componentwise defect-number addition for a product with a second
        // factor of the given defect numbers
        const DefectPair other = parse_pair(product_text);
        result = {product_defect(pair.n_plus, other.n_plus),
                  product_defect(pair.n_minus, other.n_minus)};
        report.parameters.emplace_back("product", product_text);
    }
    report.results.set("indices", Json::str(result.str()));
    if (json)
        std::fputs(report.to_json().c_str(), stdout);
    else
        std::printf("%s\n", result.str().c_str());
    return 0;
}

int cmd_roots(const std::string& poly_text, double epsilon, const std::string& sign_text,
              const std::string& track_text, bool json) {
    const RealPolynomial poly(parse_real_list(poly_text));
    RunReport report;
    report.command = "roots";
    report.parameters.emplace_back("poly", poly_text);
    if (!track_text.empty()) {
        const EpsilonSign sign =
            sign_text == "minus" ? EpsilonSign::minus : EpsilonSign::plus;
        const TrackReport tr = track_roots(poly, sign, parse_real_list(track_text));
        Json paths = Json::array();
        for (const auto& path : tr.paths) {
            Json p = Json::object();
            p.set("initial_halfplane", Json::integer(path.initial_halfplane));
            p.set("stayed", Json::boolean(path.stayed_in_halfplane));
            Json pos = Json::array();
            for (const auto& r : path.positions) {
                Json c = Json::object();
                c.set("re", Json::num(r.real()));
                c.set("im", Json::num(r.imag()));
                pos.push(std::move(c));
            }
            p.set("positions", std::move(pos));
            paths.push(std::move(p));
        }
        report.results.set("paths", std::move(paths));
        report.results.set("all_confined", Json::boolean(tr.all_confined));
        if (json) {
            std::fputs(report.to_json().c_str(), stdout);
        } else {
            for (std::size_t i = 0; i < tr.paths.size(); ++i)
                std::printf("path %zu: starts in %s, %s\n", i,
                            tr.paths[i].initial_halfplane > 0 ? "C+" : "C-",
                            tr.paths[i].stayed_in_halfplane ? "confined" : "CHANGED half-plane");
            std::printf("all confined: %s\n", tr.all_confined ? "yes" : "no");
        }
        return tr.all_confined ? 0 : 1;
    }
    if (epsilon > 0) {
        const EpsilonSign sign =
            sign_text == "minus" ? EpsilonSign::minus : EpsilonSign::plus;
        const auto hp = halfplane_counts(poly, epsilon, sign);
        report.parameters.emplace_back("epsilon", format_double(epsilon));
        report.parameters.emplace_back("sign", sign_text.empty() ? "plus" : sign_text);
        Json counts = Json::object();
        counts.set("in_upper", Json::integer(hp.in_upper));
        counts.set("in_lower", Json::integer(hp.in_lower));
        counts.set("on_axis", Json::integer(hp.on_axis));
        report.results.set("halfplane", std::move(counts));
        if (json)
            std::fputs(report.to_json().c_str(), stdout);
        else
            std::printf("upper %d  lower %d  on-axis %d\n", hp.in_upper, hp.in_lower,
                        hp.on_axis);
        return 0;
    }
    const RootSet rs = find_roots(poly);
    Json arr = Json::array();
    for (const auto& r : rs.roots) {
        Json c = Json::object();
        c.set("re", Json::num(r.real()));
        c.set("im", Json::num(r.imag()));
        arr.push(std::move(c));
    }
    report.results.set("roots", std::move(arr));
    report.results.set("residual_bound", Json::num(rs.residual_bound));
    report.results.set("method", Json::str(rs.method));
    if (json) {
        std::fputs(report.to_json().c_str(), stdout);
    } else {
        for (const auto& r : rs.roots)
            std::printf("% .6g %+.6gi\n", r.real(), r.imag());
        std::printf("residual %.3g (%s)\n", rs.residual_bound, rs.method.c_str());
    }
    return 0;
}

int cmd_stirling(const std::string& family, unsigned m, unsigned j, const std::string& alpha,
                 const std::string& beta, bool decimal, bool json) {
    Rational value;
    bool approximate = false;
    double approx_value = 0.0;
    if (family == "classical") {
        value = stirling2(m, j);
    } else if (family == "legendre") {
        value = legendre_stirling(m, j);
    } else if (family == "jacobi") {
        const auto rational_literal = [](const std::string& s) {
            return s.find_first_not_of("0123456789+-./") == std::string::npos;
        };
        if (rational_literal(alpha) && rational_literal(beta)) {
            value = jacobi_stirling(m, j, parse_rational(alpha), parse_rational(beta));
        } else {
            // irrational parameters: high-precision floating path
            approximate = true;
            approx_value = jacobi_stirling_approx(m, j, parse_real_parameter(alpha),
                                                  parse_real_parameter(beta))
                               .value;
        }
    } else {
        throw CLI::ValidationError("family must be classical, legendre, or jacobi");
    }
    RunReport report;
    report.command = "stirling";
    report.parameters.emplace_back("family", family);
    report.parameters.emplace_back("m", std::to_string(m));
    report.parameters.emplace_back("j", std::to_string(j));
    if (approximate) {
        report.results.set("value", Json::num(approx_value));
        report.results.set("approximate", Json::boolean(true));
        if (json)
            std::fputs(report.to_json().c_str(), stdout);
        else
            std::printf("%s (approximate)\n", format_double(approx_value).c_str());
        return 0;
    }
    report.results.set("value", Json::str(to_string(value)));
    report.results.set("approximate", Json::boolean(false));
    if (json)
        std::fputs(report.to_json().c_str(), stdout);
    else if (decimal)
        std::printf("%s\n", format_double(static_cast<double>(value)).c_str());
    else
        std::printf("%s\n", to_string(value).c_str());
    return 0;
}

ClassicalFamily family_from_name(const std::string& name) {
    if (name == "legendre") return ClassicalFamily::legendre;
    if (name == "laguerre") return ClassicalFamily::laguerre;
    if (name == "hermite") return ClassicalFamily::hermite;
    if (name == "jacobi") return ClassicalFamily::jacobi;
    throw CLI::ValidationError("family must be legendre, laguerre, hermite, or jacobi");
}

int cmd_expand(const std::string& family, unsigned m, const std::string& alpha,
               const std::string& beta, bool json) {
    const PowerExpansion pe =
        power_expansion(family_from_name(family), m, parse_rational(alpha), parse_rational(beta));
    RunReport report;
    report.command = "expand";
    report.parameters.emplace_back("family", family);
    report.parameters.emplace_back("m", std::to_string(m));
    Json terms = Json::array();
    for (const auto& t : pe.terms) {
        Json term = Json::object();
        term.set("j", Json::integer(t.j));
        term.set("coefficient", Json::str(to_string(t.coefficient)));
        term.set("weight", Json::str(t.weight.str()));
        terms.push(std::move(term));
    }
    report.results.set("outer_weight", Json::str(pe.outer_weight.str()));
    report.results.set("terms", std::move(terms));
    if (json) {
        std::fputs(report.to_json().c_str(), stdout);
    } else {
        std::printf("tau^%u = w^-1 sum_j (-1)^j c_j D^j W_j D^j, w = %s\n", m,
                    pe.outer_weight.str().c_str());
        for (const auto& t : pe.terms)
            std::printf("  j=%u  c=%s  W=%s\n", t.j, to_string(t.coefficient).c_str(),
                        t.weight.str().c_str());
    }
    return 0;
}

FunctionWithDerivatives function_from_spec(const std::string& spec, int max_order) {
    if (spec.rfind("poly:", 0) == 0)
        return make_polynomial(parse_real_list(spec.substr(5)), max_order);
    if (spec.rfind("ubeta:", 0) == 0)
        return make_u_beta(parse_real_parameter(spec.substr(6)), max_order);
    throw CLI::ValidationError("function must be poly:c0,c1,... or ubeta:exponent");
}

int cmd_apply(const std::string& expr_name, const std::string& params_text,
              const std::string& function_spec, const std::string& points_text, bool json) {
    const Expression e = build_classical(
        expr_name, params_text.empty() ? std::vector<double>{} : parse_real_list(params_text));
    const auto f = function_from_spec(function_spec, e.order() + 2);
    const auto points = parse_real_list(points_text);
    RunReport report;
    report.command = "apply";
    report.parameters.emplace_back("expr", e.name);
    report.parameters.emplace_back("function", function_spec);
    Json rows = Json::array();
    for (double x : points) {
        const double v = apply(e, f, x);
        Json r = Json::object();
        r.set("x", Json::num(x));
        r.set("value", Json::num(v));
        rows.push(std::move(r));
        if (!json) std::printf("%-12.6g %s\n", x, format_double(v).c_str());
    }
    report.results.set("values", std::move(rows));
    if (json) std::fputs(report.to_json().c_str(), stdout);
    return 0;
}

Json classification_json(const EndpointClassification& cls) {
    Json out = Json::object();
    out.set("kind", Json::str(to_string(cls.kind)));
    out.set("l2_solution_count", Json::integer(cls.l2_solution_count));
    Json verdicts = Json::array();
    for (const auto& v : cls.verdicts) {
        Json row = Json::object();
        row.set("square_integrable", Json::boolean(v.is_square_integrable));
        row.set("fitted_exponent", Json::num(v.evidence.fitted_exponent));
        row.set("ci_halfwidth", Json::num(v.evidence.ci_halfwidth));
        row.set("tail_slope", Json::num(v.evidence.tail_slope));
        verdicts.push(std::move(row));
    }
    out.set("verdicts", std::move(verdicts));
    return out;
}

int cmd_classify(const std::string& expr_name, const std::string& params_text, bool json) {
    const Expression e = build_classical(
        expr_name, params_text.empty() ? std::vector<double>{} : parse_real_list(params_text));
    const ClassificationReport rep = deficiency_indices_minimal(e);
    RunReport report;
    report.command = "classify";
    report.parameters.emplace_back("expr", e.name);
    report.results.set("left", classification_json(rep.left));
    report.results.set("right", classification_json(rep.right));
    report.results.set("d_a", Json::integer(rep.left.l2_solution_count));
    report.results.set("d_b", Json::integer(rep.right.l2_solution_count));
    report.results.set("indices", Json::str(rep.indices.str()));
    if (json) {
        std::fputs(report.to_json().c_str(), stdout);
    } else {
        std::printf("left endpoint:  %s (d = %d)\n", to_string(rep.left.kind).c_str(),
                    rep.left.l2_solution_count);
        std::printf("right endpoint: %s (d = %d)\n", to_string(rep.right.kind).c_str(),
                    rep.right.l2_solution_count);
        std::printf("deficiency indices: %s\n", rep.indices.str().c_str());
    }
    return 0;
}

int cmd_pde(int dim, int big_l, const std::string& alpha_text, unsigned m_max, bool json) {
    const double alpha = parse_real_parameter(alpha_text);
    const DecompositionReport rep = decompose(dim, big_l, alpha, m_max);
    RunReport report;
    report.command = "pde";
    report.parameters.emplace_back("dim", std::to_string(dim));
    report.parameters.emplace_back("L", std::to_string(big_l));
    report.parameters.emplace_back("alpha", alpha_text);
    Json channels = Json::array();
    for (const auto& ch : rep.channels) {
        Json row = Json::object();
        row.set("l", Json::integer(ch.ell));
        row.set("indices", Json::str(ch.indices.str()));
        channels.push(std::move(row));
    }
    report.results.set("channels", std::move(channels));
    report.results.set("tail_certified_zero", Json::boolean(rep.tail_certified_zero));
    report.results.set("total", Json::str(rep.total.str()));
    Json powers = Json::array();
    for (const auto& [m, pair] : rep.power_table) {
        Json row = Json::object();
        row.set("m", Json::integer(static_cast<long long>(m)));
        row.set("indices", Json::str(pair.str()));
        powers.push(std::move(row));
    }
    report.results.set("powers", std::move(powers));
    if (json) {
        std::fputs(report.to_json().c_str(), stdout);
    } else {
        for (const auto& ch : rep.channels)
            std::printf("l = %d: %s\n", ch.ell, ch.indices.str().c_str());
        std::printf("tail (l >= %d): (0,0), certified analytically\n", rep.big_l + 1);
        std::printf("total: %s\n", rep.total.str().c_str());
        for (const auto& [m, pair] : rep.power_table)
            std::printf("m = %llu: %s\n", static_cast<unsigned long long>(m),
                        pair.str().c_str());
    }
    return 0;
}

int cmd_verify(const std::string& filter, double tol_scale, bool json) {
    RunReport report = verify::run_verify(filter, tol_scale);
    if (report.checks.empty()) {
        if (json)
            std::fputs(report.to_json().c_str(), stdout);
        else
            std::printf("0 checks matched filter '%s'\n", filter.c_str());
        return 0;
    }
    emit(report, json);
    if (!json) {
        int failures = 0;
        for (const auto& c : report.checks)
            if (!c.pass) ++failures;
        std::printf("%zu checks, %d failures\n", report.checks.size(), failures);
    }
    return report.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deficiency-index calculus and Sturm-Liouville classification"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --json after the subcommand name
    bool json = false;
    app.add_flag("--json", json, "machine-readable output (17 significant digits)");

    // indices
    std::string pair_text, power_text, poly_text, product_text;
    auto* indices = app.add_subcommand("indices", "index arithmetic for powers and polynomials");
    indices->add_option("--pair", pair_text, "base deficiency pair n+,n- (inf allowed)")
        ->required();
    auto* opt_power = indices->add_option("--power", power_text, "power m >= 1");
    auto* opt_poly = indices->add_option("--poly", poly_text, "polynomial a0,a1,...");
    auto* opt_prod = indices->add_option("--product", product_text,
                                         "defect numbers d+,d- of a second factor");
    opt_power->excludes(opt_poly)->excludes(opt_prod);
    opt_poly->excludes(opt_prod);

    // roots
    std::string roots_poly, sign_text, track_text;
    double epsilon = 0.0;
    auto* roots = app.add_subcommand("roots", "polynomial roots and half-plane counts");
    roots->add_option("--poly", roots_poly, "coefficients a0,a1,...")->required();
    roots->add_option("--eps", epsilon, "half-plane counts of P -+ i*eps");
    roots->add_option("--sign", sign_text, "plus (P - i eps) or minus (P + i eps)");
    roots->add_option("--track", track_text, "follow roots across an increasing eps grid");

    // stirling
    std::string family = "classical", alpha_text = "0", beta_text = "0";
    unsigned m = 1, j = 1;
    bool decimal = false;
    auto* stirling = app.add_subcommand("stirling", "Stirling-type numbers, exact");
    stirling->add_option("--family", family, "classical | legendre | jacobi");
    stirling->add_option("--m", m, "row index")->required();
    stirling->add_option("--j", j, "column index")->required();
    stirling->add_option("--alpha", alpha_text, "Jacobi alpha (rational or sqrt form)");
    stirling->add_option("--beta", beta_text, "Jacobi beta");
    stirling->add_flag("--decimal", decimal, "print decimal instead of a fraction");

    // expand
    std::string exp_family = "legendre", exp_alpha = "0", exp_beta = "0";
    unsigned exp_m = 1;
    auto* expand = app.add_subcommand("expand", "divergence-form power expansion");
    expand->add_option("--family", exp_family, "legendre | laguerre | hermite | jacobi")
        ->required();
    expand->add_option("--m", exp_m, "power")->required();
    expand->add_option("--alpha", exp_alpha, "family parameter (rational)");
    expand->add_option("--beta", exp_beta, "family parameter (rational)");

    // apply
    std::string apply_expr, apply_params, apply_function, apply_points;
    auto* applyc = app.add_subcommand("apply", "evaluate an expression on a test function");
    applyc->add_option("--expr", apply_expr, "expression name (e.g. legendre, bessel_alpha)")
        ->required();
    applyc->add_option("--params", apply_params, "expression parameters, comma separated");
    applyc->add_option("--function", apply_function, "poly:c0,c1,... or ubeta:exponent")
        ->required();
    applyc->add_option("--points", apply_points, "evaluation points, comma separated")
        ->required();

    // classify
    std::string cls_expr, cls_params;
    auto* classify = app.add_subcommand("classify", "numerical endpoint classification");
    classify->add_option("--expr", cls_expr, "expression name")->required();
    classify->add_option("--params", cls_params, "expression parameters (sqrt forms allowed)");

    // pde
    int dim = 3, big_l = 0;
    std::string pde_alpha = "0";
    unsigned m_max = 1;
    auto* pde = app.add_subcommand("pde", "spherical channel decomposition report");
    pde->add_option("--dim", dim, "space dimension n >= 2")->required();
    pde->add_option("--L", big_l, "perturbation index L >= 0")->required();
    pde->add_option("--alpha", pde_alpha, "boundary parameter in [-1/4, 3/4)");
    pde->add_option("--m", m_max, "largest power in the table");

    // verify
    std::string filter;
    double tol_scale = 1.0;
    auto* verify_cmd = app.add_subcommand("verify", "run the reproduction suite");
    verify_cmd->add_option("--filter", filter, "run only claims whose id contains this string");
    verify_cmd->add_option("--tol", tol_scale, "scale factor applied to every numeric tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*indices) return cmd_indices(pair_text, power_text, poly_text, product_text, json);
        if (*roots) return cmd_roots(roots_poly, epsilon, sign_text, track_text, json);
        if (*stirling) return cmd_stirling(family, m, j, alpha_text, beta_text, decimal, json);
        if (*expand) return cmd_expand(exp_family, exp_m, exp_alpha, exp_beta, json);
        if (*applyc) return cmd_apply(apply_expr, apply_params, apply_function, apply_points, json);
        if (*classify) return cmd_classify(cls_expr, cls_params, json);
        if (*pde) return cmd_pde(dim, big_l, pde_alpha, m_max, json);
        if (*verify_cmd) return cmd_verify(filter, tol_scale, json);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
    return 0;
}
