// Command-line front end: exact Heun/Belyi pullback computations with JSON
// output.  Exit codes: 0 success, 1 verification mismatch, 2 input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "heun/numeric.hpp"
#include "heun/tables.hpp"

using json = nlohmann::ordered_json;
using namespace heun;

namespace {

struct Options {
    std::string field;
    EvalContext ctx() const {
        EvalContext c;
        if (!field.empty()) c.field = parse_field_decl(field);
        return c;
    }
};

json scalar_json(const ExactScalar& s) {
    if (s.is_rational()) return rational_to_string(s.rat());
    json out;
    out["a"] = rational_to_string(s.rat());
    out["b"] = rational_to_string(s.gen());
    out["minpoly"] = s.field().minpoly_string();
    return out;
}

json ram_json(const RamificationData& r) {
    return json::array({r.over0, r.over1, r.over_inf});
}

json heun_json(const HeunEquation& h) {
    json out;
    out["theta1"] = scalar_json(h.theta1);
    out["theta2"] = scalar_json(h.theta2);
    out["theta3"] = scalar_json(h.theta3);
    out["theta4"] = scalar_json(h.theta4);
    out["theta41"] = scalar_json(h.theta41());
    out["theta42"] = scalar_json(h.theta42());
    out["t"] = scalar_json(h.t);
    out["q"] = scalar_json(h.q);
    return out;
}

json operator_json(const LinearODE2& ode) {
    json out;
    out["p1"] = ratfunc_to_string(ode.p1);
    out["p2"] = ratfunc_to_string(ode.p2);
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

IndexConstraint slot(long v) { return v > 0 ? IndexConstraint(v) : std::nullopt; }

int run(int argc, char** argv) {
    CLI::App app{"exact Heun equations from hypergeometric pullbacks along Belyi maps"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--field", opt.field, "quadratic extension, e.g. \"t1^2 = -3*t1 - 3\"");
    app.fallthrough();

    // belyi-verify ----------------------------------------------------------
    std::string j1s, j2s = "1";
    auto* belyi = app.add_subcommand("belyi-verify", "validate a Belyi fraction j1/j2");
    belyi->fallthrough();
    belyi->add_option("--j1", j1s)->required();
    belyi->add_option("--j2", j2s);

    // ramify -----------------------------------------------------------------
    auto* ramify = app.add_subcommand("ramify", "ramification data over {0, 1, infinity}");
    ramify->fallthrough();
    ramify->add_option("--j1", j1s)->required();
    ramify->add_option("--j2", j2s);

    // classify ----------------------------------------------------------------
    auto* classify = app.add_subcommand("classify", "parameter-family classification");
    classify->fallthrough();
    classify->add_option("--j1", j1s)->required();
    classify->add_option("--j2", j2s);

    // pullback ----------------------------------------------------------------
    std::string alphas, betas, gammas;
    bool normalize = false;
    long Aopt = 0, Bopt = 0, Copt = 0;
    auto* pull = app.add_subcommand("pullback", "hypergeometric pullback operator");
    pull->fallthrough();
    pull->add_option("--j1", j1s)->required();
    pull->add_option("--j2", j2s);
    pull->add_option("--alpha", alphas)->required();
    pull->add_option("--beta", betas)->required();
    pull->add_option("--gamma", gammas)->required();
    pull->add_flag("--normalize", normalize, "normalize to the Heun form");
    pull->add_option("--A", Aopt, "fiber-0 index constraint (0 = none)");
    pull->add_option("--B", Bopt, "fiber-1 index constraint (0 = none)");
    pull->add_option("--C", Copt, "fiber-infinity index constraint (0 = none)");

    // heun-normalize ------------------------------------------------------------
    std::string p1s, p2s;
    bool orbit = false;
    auto* norm = app.add_subcommand("heun-normalize", "normalize an operator to Heun form");
    norm->fallthrough();
    norm->add_option("--p1", p1s)->required();
    norm->add_option("--p2", p2s)->required();
    norm->add_flag("--orbit", orbit, "emit the full normalization orbit");

    // sl-form ---------------------------------------------------------------------
    std::string th1s = "1/2", th2s = "1/2", th3s = "1/2", th4s, ts, qs;
    auto* sl = app.add_subcommand("sl-form",
                                  "first-derivative-free form of an operator or a Heun family");
    sl->fallthrough();
    sl->add_option("--p1", p1s);
    sl->add_option("--p2", p2s);
    sl->add_option("--theta1", th1s);
    sl->add_option("--theta2", th2s);
    sl->add_option("--theta3", th3s);
    sl->add_option("--theta4", th4s);
    sl->add_option("--t", ts);
    sl->add_option("--q", qs);

    // lame --------------------------------------------------------------------------
    auto* lame = app.add_subcommand("lame", "Lame data of a Heun member with thetas 1/2");
    lame->fallthrough();
    lame->add_option("--theta4", th4s)->required();
    lame->add_option("--t", ts)->required();
    lame->add_option("--q", qs)->required();

    // accessory ------------------------------------------------------------------------
    std::string series;
    auto* acc = app.add_subcommand("accessory",
                                   "accessory parameter from an exponent-zero local solution");
    acc->fallthrough();
    acc->add_option("--theta1", th1s)->required();
    acc->add_option("--theta2", th2s)->required();
    acc->add_option("--theta3", th3s)->required();
    acc->add_option("--theta4", th4s)->required();
    acc->add_option("--t", ts)->required();
    acc->add_option("--series", series, "comma-separated coefficients c0,c1,c2,...")
        ->required();

    // tables-verify -----------------------------------------------------------------------
    std::string table = "all", fixtures_dir = "fixtures";
    auto* tv = app.add_subcommand("tables-verify", "run the bundled catalogue checks");
    tv->fallthrough();
    tv->add_option("--table", table, "1 | 1b | 2 | weierstrass | all");
    tv->add_option("--fixtures", fixtures_dir, "fixture directory");

    CLI11_PARSE(app, argc, argv);

    EvalContext ctx = opt.ctx();

    if (belyi->parsed()) {
        Poly j1p = parse_poly(j1s, ctx);  // parse failures are input errors (exit 2)
        Poly j2p = parse_poly(j2s, ctx);
        try {
            BelyiMap m = make_belyi(j1p, j2p);
            RamificationData r = ramification_data(m);
            json out;
            out["belyi"] = true;
            out["N"] = m.N;
            out["M"] = m.M;
            out["lead"] = scalar_json(m.lead);
            out["ram"] = ram_json(r);
            out["lambda_deg"] = m.lambda.degree();
            emit(out);
            return 0;
        } catch (const error& e) {
            emit(json{{"belyi", false}, {"error", e.what()}});
            return 1;
        }
    }

    if (ramify->parsed()) {
        BelyiMap m = make_belyi(parse_poly(j1s, ctx), parse_poly(j2s, ctx));
        RamificationData r = ramification_data(m);
        json out;
        out["degree"] = r.degree();
        out["ram"] = ram_json(r);
        out["infinity_index"] = r.inf_index;
        out["riemann_hurwitz"] = r.riemann_hurwitz_holds();
        emit(out);
        return 0;
    }

    if (classify->parsed()) {
        BelyiMap m = make_belyi(parse_poly(j1s, ctx), parse_poly(j2s, ctx));
        FamilyClassification fc = classify_family(ramification_data(m));
        json out;
        out["free_params"] = fc.free_params;
        out["A"] = fc.A ? json(*fc.A) : json();
        out["B"] = fc.B ? json(*fc.B) : json();
        out["C"] = fc.C ? json(*fc.C) : json();
        out["r"] = fc.r;
        out["s"] = fc.s;
        out["t"] = fc.t;
        out["r1"] = fc.r1;
        out["s1"] = fc.s1;
        out["t1"] = fc.t1;
        emit(out);
        return 0;
    }

    if (pull->parsed()) {
        BelyiMap m = make_belyi(parse_poly(j1s, ctx), parse_poly(j2s, ctx));
        HypergeometricParams p{parse_scalar(alphas, ctx), parse_scalar(betas, ctx),
                               parse_scalar(gammas, ctx)};
        LinearODE2 closed = belyi_pullback_operator(m, p);
        if (closed != belyi_pullback_oracle(m, p)) {
            emit(json{{"error", "operator routes disagree"}});
            return 1;
        }
        if (!normalize) {
            emit(operator_json(closed));
            return 0;
        }
        HeunEquation h =
            belyi_pullback_to_heun(m, p, slot(Aopt), slot(Bopt), slot(Copt), ctx.field);
        emit(heun_json(h));
        return 0;
    }

    if (norm->parsed()) {
        LinearODE2 ode{parse_ratfunc(p1s, ctx), parse_ratfunc(p2s, ctx)};
        if (orbit) {
            json arr = json::array();
            for (const auto& cand : heun_orbit(ode, ctx.field)) arr.push_back(heun_json(cand.heun));
            emit(arr);
            return 0;
        }
        emit(heun_json(ode_to_heun(ode, ctx.field)));
        return 0;
    }

    if (sl->parsed()) {
        if (!p1s.empty() || !p2s.empty()) {
            LinearODE2 ode{parse_ratfunc(p1s.empty() ? "0" : p1s, ctx),
                           parse_ratfunc(p2s.empty() ? "0" : p2s, ctx)};
            emit(operator_json(to_sl_form(ode)));
            return 0;
        }
        if (th4s.empty() || ts.empty() || qs.empty())
            throw error("sl-form needs either --p1/--p2 or the Heun parameters");
        HeunEquation h(parse_scalar(th1s, ctx), parse_scalar(th2s, ctx),
                       parse_scalar(th3s, ctx), parse_scalar(th4s, ctx),
                       parse_scalar(ts, ctx), parse_scalar(qs, ctx));
        SLHeun s = heun_to_sl(h);
        json out;
        out["a1"] = scalar_json(s.a1);
        out["a2"] = scalar_json(s.a2);
        out["a3"] = scalar_json(s.a3);
        out["a4"] = scalar_json(s.a4);
        out["L"] = scalar_json(s.L);
        out["t"] = scalar_json(s.t);
        emit(out);
        return 0;
    }

    if (lame->parsed()) {
        ExactScalar half(Rational(1, 2));
        HeunEquation h(half, half, half, parse_scalar(th4s, ctx), parse_scalar(ts, ctx),
                       parse_scalar(qs, ctx));
        LameEquation l = heun_to_lame(h);
        json out;
        out["n"] = scalar_json(l.n);
        out["B"] = scalar_json(l.B);
        out["g2"] = scalar_json(l.g2);
        out["g3"] = scalar_json(l.g3);
        emit(out);
        return 0;
    }

    if (acc->parsed()) {
        std::vector<ExactScalar> coeffs;
        std::istringstream in(series);
        std::string piece;
        while (std::getline(in, piece, ',')) coeffs.push_back(parse_scalar(piece, ctx));
        ExactScalar q = accessory_from_solution(parse_scalar(th1s, ctx),
                                                parse_scalar(th2s, ctx),
                                                parse_scalar(th3s, ctx),
                                                parse_scalar(th4s, ctx),
                                                parse_scalar(ts, ctx), coeffs);
        emit(json{{"q", scalar_json(q)}});
        return 0;
    }

    if (tv->parsed()) {
        Fixtures fx = load_fixtures(fixtures_dir);
        std::vector<Report> reports;
        auto samples = default_samples();
        if (table == "1" || table == "all")
            for (const auto& row : fx.table1) {
                auto r = verify_table1_row(fx, row, samples);
                reports.insert(reports.end(), r.begin(), r.end());
            }
        if (table == "1b" || table == "all")
            for (const auto& row : fx.table1b) {
                auto r = verify_table1b_row(row);
                reports.insert(reports.end(), r.begin(), r.end());
            }
        if (table == "2" || table == "all")
            for (const auto& row : fx.table2) {
                auto r = verify_table2_row(fx, row);
                reports.insert(reports.end(), r.begin(), r.end());
            }
        if (table == "weierstrass" || table == "all") {
            auto r = verify_weierstrass(fx);
            reports.insert(reports.end(), r.begin(), r.end());
        }
        if (reports.empty()) throw error("unknown table '" + table + "'");
        json arr = json::array();
        long failures = 0, quarantined = 0;
        for (const auto& r : reports) {
            json item;
            item["table"] = r.table;
            item["row"] = r.row;
            item["stage"] = r.stage;
            item["status"] = r.quarantined ? "quarantined" : (r.pass ? "pass" : "fail");
            if (!r.detail.empty()) item["detail"] = r.detail;
            arr.push_back(item);
            failures += !r.quarantined && !r.pass;
            quarantined += r.quarantined;
        }
        json out;
        out["reports"] = arr;
        out["checks"] = reports.size();
        out["failures"] = failures;
        out["quarantined"] = quarantined;
        emit(out);
        return failures == 0 ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
