#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "kd/cubic.hpp"
#include "kd/fixtures.hpp"
#include "kd/json_io.hpp"
#include "kd/quintic.hpp"
#include "kd/septic.hpp"

namespace {

using namespace kd;

struct Options {
    std::string a, b, D = "0";
    std::string point;
    std::string mw_path, mw_star_path;
    std::string poly;
    int bound = 0; // 0: use KD_DECOMP_BOUND or the default
    int iterate = 1;
    bool compact = false;
};

int effective_bound(const Options& opt) {
    if (opt.bound > 0) return opt.bound;
    if (const char* env = std::getenv("KD_DECOMP_BOUND")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 3;
}

void emit(const Json& doc, const Options& opt) {
    if (opt.compact)
        std::cout << doc.dump() << "\n";
    else
        std::cout << doc.dump(2) << "\n";
}

PointQ parse_point_arg(const std::string& text) {
    if (text == "inf") return PointQ::infinity();
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected a point as \"x,y\" or \"inf\", got \"" + text + "\"");
    return PointQ::affine(Rational::parse(text.substr(0, comma)),
                          Rational::parse(text.substr(comma + 1)));
}

MWBasis load_basis(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open MW basis file " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError("malformed MW basis file: " + std::string(e.what()));
    }
    return mw_basis_from_json(j);
}

Json run_classification(const CurveQ& E, const CurveQ& Estar, const PhiStarFn& phi_star,
                        int ell, const Options& opt, const ClassAttachments& attach,
                        const std::optional<PointQ>& base_point) {
    MWBasis eb = load_basis(opt.mw_path);
    MWBasis esb = load_basis(opt.mw_star_path);
    if (eb.curve != E) throw InvalidParametersError("--mw basis curve is not E");
    if (esb.curve != Estar) throw InvalidParametersError("--mw-star basis curve is not E*");
    int bound = effective_bound(opt);
    auto pres = image_presentation(phi_star, eb, esb, ell, bound);
    Json out;
    out["ell"] = ell;
    Json rows = Json::array();
    for (const auto& row : pres.rows()) rows.push_back(row);
    out["image_rows"] = rows;
    out["quotient_rank"] = pres.quotient_rank();
    try {
        Classification cls = enumerate_classes(pres, eb, attach);
        if (base_point) {
            try {
                cls.base_class = base_class(*base_point, pres, cls, eb, bound);
            } catch (const BaseReducibleFlag&) {
                out["base_reducible"] = true;
            }
        }
        Json cj = classification_to_json(cls);
        for (auto& [key, value] : cj.items()) out[key] = value;
    } catch (const EmptyQuotient&) {
        out["classes"] = Json::array();
        out["empty_quotient"] = true;
    }
    return out;
}

int dispatch(const std::string& cmd, const Options& opt) {
    if (cmd == "quintic-family") {
        QuinticFamily fam(Rational::parse(opt.a), Rational::parse(opt.b));
        Json out{{"params",
                  Json{{"a", rational_to_json(fam.params().a)},
                       {"b", rational_to_json(fam.params().b)},
                       {"d", rational_to_json(fam.params().d)}}},
                 {"E", curve_to_json(fam.E())},
                 {"Estar", curve_to_json(fam.Estar())},
                 {"Ea", curve_to_json(fam.Ea())},
                 {"Eastar", curve_to_json(fam.Eastar())},
                 {"lambda_star", isogeny_to_json(fam.lambda_star())},
                 {"P0", point_to_json(fam.base_point())},
                 {"is_degenerate", fam.is_degenerate()}};
        emit(out, opt);
    } else if (cmd == "quintic-beta") {
        QuinticFamily fam(Rational::parse(opt.a), Rational::parse(opt.b));
        PointQ P = parse_point_arg(opt.point);
        if (!fam.E().on_curve(P))
            throw PointValidationError("--point does not lie on E_{a,b}");
        Rational beta = fam.point_to_beta(P);
        emit(Json{{"beta", rational_to_json(beta)},
                  {"polynomial", poly_to_json(fam.brumer_from_point(P))}},
             opt);
    } else if (cmd == "quintic-classify") {
        QuinticFamily fam(Rational::parse(opt.a), Rational::parse(opt.b));
        ClassAttachments attach;
        attach.beta = [&fam](const PointQ& P) { return fam.point_to_beta(P); };
        attach.polynomial = [&fam](const PointQ& P) { return fam.brumer_from_point(P); };
        emit(run_classification(fam.E(), fam.Estar(),
                                [&fam](const PointQ& Q) { return fam.phi_star_eval(Q); }, 5,
                                opt, attach, fam.base_point()),
             opt);
    } else if (cmd == "quintic-transform") {
        QuinticFamily fam(Rational::parse(opt.a), Rational::parse(opt.b));
        PointQ P = opt.point.empty() ? fam.base_point() : parse_point_arg(opt.point);
        if (!fam.E().on_curve(P))
            throw PointValidationError("--point does not lie on E_{a,b}");
        Json betas = Json::array();
        PointQ cur = P;
        for (int i = 0; i < opt.iterate; ++i) {
            Rational beta = fam.doubling_transform(cur);
            betas.push_back(rational_to_json(beta));
            cur = fam.E().mul(2, cur);
        }
        Json out{{"betas", betas}};
        try {
            out["printed_formula"] =
                rational_to_json(hoshi_rikuna(fam.params().a, fam.params().b));
        } catch (const PoleError&) {
            out["printed_formula"] = nullptr;
        }
        emit(out, opt);
    } else if (cmd == "quintic-kummer-poly") {
        QuinticFamily fam(Rational::parse(opt.a), Rational::parse(opt.b));
        PointQ P = opt.point.empty() ? fam.base_point() : parse_point_arg(opt.point);
        if (!fam.E().on_curve(P))
            throw PointValidationError("--point does not lie on E_{a,b}");
        emit(Json{{"polynomial", poly_to_json(fam.kummer_poly(P))},
                  {"brumer", poly_to_json(fam.brumer_from_point(P))}},
             opt);
    } else if (cmd == "cubic-family") {
        CubicFamily fam(Rational::parse(opt.a), Rational::parse(opt.b));
        Json out{{"params",
                  Json{{"a", rational_to_json(fam.params().a)},
                       {"b", rational_to_json(fam.params().b)},
                       {"d", rational_to_json(fam.params().d)}}},
                 {"E", curve_to_json(fam.E())},
                 {"Estar", curve_to_json(fam.Estar())},
                 {"Ea", curve_to_json(fam.Ea())},
                 {"Eastar", curve_to_json(fam.Eastar())},
                 {"phi", isogeny_to_json(fam.phi())},
                 {"phi_star", isogeny_to_json(fam.phi_star())},
                 {"is_degenerate", fam.is_degenerate()}};
        emit(out, opt);
    } else if (cmd == "cubic-classify") {
        CubicFamily fam(Rational::parse(opt.a), Rational::parse(opt.b));
        ClassAttachments attach;
        attach.beta = [&fam](const PointQ& P) { return fam.point_to_beta(P); };
        attach.polynomial = [&fam](const PointQ& P) { return fam.cubic_from_point(P); };
        emit(run_classification(fam.E(), fam.Estar(),
                                [&fam](const PointQ& Q) { return fam.phi_star_eval(Q); }, 3,
                                opt, attach, std::nullopt),
             opt);
    } else if (cmd == "cubic-fixed-disc") {
        auto fd = fixed_disc_curve(Rational::parse(opt.D));
        ClassAttachments attach;
        attach.polynomial = [&fd](const PointQ& P) { return cubic_from_point(fd, P); };
        emit(run_classification(fd.E, fd.Estar,
                                [&fd](const PointQ& Q) { return fd.phi_star.evaluate(Q); },
                                3, opt, attach, std::nullopt),
             opt);
    } else if (cmd == "cubic-reduce") {
        UniPoly g = opt.poly.find('X') != std::string::npos
                        ? UniPoly::parse_expr(opt.poly)
                        : poly_from_json(Json::parse("[" + opt.poly + "]"));
        auto mp = point_from_monic(g);
        auto fd = fixed_disc_curve(mp.D);
        auto params = reduce_to_family(fd, mp.P);
        emit(Json{{"D", rational_to_json(mp.D)},
                  {"P_g", point_to_json(mp.P)},
                  {"depressed", poly_to_json(cubic_from_point(fd, mp.P))},
                  {"a", rational_to_json(params.a)},
                  {"b", rational_to_json(params.b)}},
             opt);
    } else if (cmd == "septic-poly") {
        Rational a = Rational::parse(opt.a), b = Rational::parse(opt.b);
        if (a.is_zero() || a == Rational(1))
            throw InvalidParametersError("septic family needs a outside {0, 1}");
        emit(Json{{"polynomial", poly_to_json(septic_poly(a, b))}}, opt);
    } else if (cmd == "septic-verify") {
        SepticFamily fam(Rational::parse(opt.a));
        PointQ K = PointQ::affine(Rational(0), Rational(0));
        auto order = fam.C().torsion_order(K);
        bool torsion_ok = order && *order == 7;
        bool xmap_ok = fam.psi().x_map() ==
                       RatFunc(septic_N(fam.a()), septic_D(fam.a()));
        bool kernel_ok = fam.psi().verify_kernel();
        Json out{{"a", rational_to_json(fam.a())},
                 {"torsion_order_7", torsion_ok},
                 {"x_map_matches", xmap_ok},
                 {"kernel_verified", kernel_ok},
                 {"ok", torsion_ok && xmap_ok && kernel_ok}};
        emit(out, opt);
        if (!(torsion_ok && xmap_ok && kernel_ok)) return 4;
    } else if (cmd == "verify-fixtures") {
        auto results = run_fixture_checks(load_fixtures(), effective_bound(opt));
        Json checks = Json::array();
        bool all_ok = true;
        for (const auto& r : results) {
            Json c{{"name", r.name}, {"ok", r.ok}};
            if (!r.detail.empty()) c["detail"] = r.detail;
            checks.push_back(std::move(c));
            all_ok = all_ok && r.ok;
        }
        emit(Json{{"checks", checks},
                  {"total", results.size()},
                  {"ok", all_ok}},
             opt);
        if (!all_ok) return 4;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for dihedral polynomial families via elliptic curves"};
    app.require_subcommand(1);
    Options opt;
    std::string chosen;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--bound", opt.bound, "decomposition search bound");
        sub->add_flag("--compact", opt.compact, "single-line JSON output");
        sub->final_callback([&chosen, sub] {
            chosen = sub->get_parent()->get_name() + "-" + sub->get_name();
        });
    };

    auto* quintic = app.add_subcommand("quintic", "Brumer quintic family");
    quintic->require_subcommand(1);
    for (auto name : {"family", "beta", "classify", "transform", "kummer-poly"}) {
        auto* sub = quintic->add_subcommand(name);
        sub->add_option("--a", opt.a)->required();
        sub->add_option("--b", opt.b)->required();
        add_common(sub);
        std::string n = name;
        if (n == "beta") sub->add_option("--point", opt.point)->required();
        if (n == "transform" || n == "kummer-poly") {
            sub->add_option("--point", opt.point);
        }
        if (n == "transform") sub->add_option("--iterate", opt.iterate);
        if (n == "classify") {
            sub->add_option("--mw", opt.mw_path)->required();
            sub->add_option("--mw-star", opt.mw_star_path)->required();
        }
    }

    auto* cubic = app.add_subcommand("cubic", "generic cubic family");
    cubic->require_subcommand(1);
    for (auto name : {"family", "classify", "fixed-disc", "reduce"}) {
        auto* sub = cubic->add_subcommand(name);
        add_common(sub);
        std::string n = name;
        if (n == "family" || n == "classify") {
            sub->add_option("--a", opt.a)->required();
            sub->add_option("--b", opt.b)->required();
        }
        if (n == "classify" || n == "fixed-disc") {
            sub->add_option("--mw", opt.mw_path)->required();
            sub->add_option("--mw-star", opt.mw_star_path)->required();
        }
        if (n == "fixed-disc") sub->add_option("--D", opt.D)->required();
        if (n == "reduce") sub->add_option("--poly", opt.poly)->required();
    }

    auto* septic = app.add_subcommand("septic", "septic family");
    septic->require_subcommand(1);
    for (auto name : {"poly", "verify"}) {
        auto* sub = septic->add_subcommand(name);
        sub->add_option("--a", opt.a)->required();
        if (std::string(name) == "poly") sub->add_option("--b", opt.b)->required();
        add_common(sub);
    }

    auto* verify = app.add_subcommand("verify", "replay bundled worked examples");
    {
        auto* sub = verify->add_subcommand("fixtures");
        add_common(sub);
    }
    verify->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        return dispatch(chosen, opt);
    } catch (const DecompositionNotFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
