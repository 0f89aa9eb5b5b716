#include "kd/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "kd/cubic.hpp"
#include "kd/quintic.hpp"

namespace kd {

namespace {

std::vector<long> to_longs(const Json& arr) {
    std::vector<long> out;
    for (const auto& v : arr) out.push_back(v.get<long>());
    return out;
}

bool same_up_to_sign(const std::vector<long>& a, const std::vector<long>& b) {
    if (a.size() != b.size()) return false;
    bool plus = true, minus = true;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) plus = false;
        if (a[i] != -b[i]) minus = false;
    }
    return plus || minus;
}

std::vector<int> line_of(const ImagePresentation& pres, const std::vector<long>& coeffs,
                         const std::vector<long>& torsion = {}) {
    auto q = pres.project(coeffs, torsion);
    int lead = 0;
    for (int x : q)
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead != 0) {
        int inv = 1;
        for (int cand = 1; cand < pres.ell(); ++cand)
            if (cand * lead % pres.ell() == 1) {
                inv = cand;
                break;
            }
        for (int& x : q) x = x * inv % pres.ell();
    }
    return q;
}

struct Checker {
    std::vector<CheckResult>& out;
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back(CheckResult{name, ok, ok ? "" : detail});
    }
};

void check_pipeline(Checker& ck, const std::string& tag, const Json& fx,
                    const CurveQ& E, const CurveQ& Estar, const PhiStarFn& phi_star,
                    int ell, int bound) {
    MWBasis eb = mw_basis_from_json(fx.at("mw"));
    MWBasis esb = mw_basis_from_json(fx.at("mw_star"));
    ck.check(tag + ": MW basis curve matches E", eb.curve == E);
    ck.check(tag + ": MW* basis curve matches E*", esb.curve == Estar);

    if (fx.contains("phi_star_images")) {
        const auto& rows = fx.at("phi_star_images");
        bool all = true;
        std::string bad;
        for (size_t i = 0; i < esb.free_gens.size(); ++i) {
            auto dec = decompose(phi_star(esb.free_gens[i]), eb, bound);
            if (!same_up_to_sign(dec.free_coeffs, to_longs(rows.at(i)))) {
                all = false;
                bad = "generator " + std::to_string(i + 1);
            }
        }
        ck.check(tag + ": phi* images decompose as listed (up to sign)", all, bad);
        if (fx.contains("phi_star_images_printed")) {
            // the source table rows that differ from the verified ones are
            // known transcription issues; confirm they still disagree
            const auto& printed = fx.at("phi_star_images_printed");
            std::string note;
            bool expected = true;
            for (size_t i = 0; i < esb.free_gens.size(); ++i) {
                auto listed = to_longs(rows.at(i));
                auto claimed = to_longs(printed.at(i));
                if (listed == claimed) continue;
                auto dec = decompose(phi_star(esb.free_gens[i]), eb, bound);
                if (same_up_to_sign(dec.free_coeffs, claimed)) expected = false;
                note += (note.empty() ? "" : ", ") + std::string("generator ") +
                        std::to_string(i + 1);
            }
            ck.out.push_back(CheckResult{
                tag + ": known table discrepancy confirmed (" + note + ")", expected,
                expected ? "printed rows differ from the verified decomposition; "
                           "duality check favors the verified rows"
                         : "printed row unexpectedly matches"});
        }
    }
    if (fx.contains("phi_star_to_infinity") && fx.at("phi_star_to_infinity").get<bool>()) {
        bool all = true;
        for (const auto& [T, order] : esb.torsion_gens) {
            (void)order;
            if (!phi_star(T).is_infinity()) all = false;
        }
        ck.check(tag + ": phi* kills the listed torsion generator", all);
    }

    auto pres = image_presentation(phi_star, eb, esb, ell, bound);
    ck.check(tag + ": quotient rank",
             pres.quotient_rank() == fx.at("quotient_rank").get<int>(),
             "got " + std::to_string(pres.quotient_rank()));

    if (fx.contains("image_generators")) {
        bool all = true;
        for (const auto& row : fx.at("image_generators"))
            if (!pres.in_image(to_longs(row), {})) all = false;
        ck.check(tag + ": listed image generators lie in the image", all);
    }

    auto cls = enumerate_classes(pres, eb, {});
    ck.check(tag + ": class count",
             static_cast<int>(cls.classes.size()) == fx.at("num_classes").get<int>(),
             "got " + std::to_string(cls.classes.size()));

    if (fx.contains("representatives")) {
        // the listed representatives generate exactly the enumerated lines
        std::vector<std::vector<int>> expected, got;
        for (const auto& row : fx.at("representatives"))
            expected.push_back(line_of(pres, to_longs(row)));
        for (const auto& entry : cls.classes) got.push_back(entry.line);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        bool distinct = true;
        for (size_t i = 1; i < expected.size(); ++i)
            if (expected[i] == expected[i - 1]) distinct = false;
        ck.check(tag + ": listed representatives match the classes by coset",
                 distinct && expected == got);
    }
    if (fx.contains("base_point") && fx.contains("base_class_coeffs")) {
        PointQ P0 = point_from_json(fx.at("base_point"));
        int idx = base_class(P0, pres, cls, eb, bound);
        auto expected_line = line_of(pres, to_longs(fx.at("base_class_coeffs")));
        ck.check(tag + ": base point falls in the listed class",
                 cls.classes[static_cast<size_t>(idx)].line == expected_line);
    }
}

void check_quintic(Checker& ck, const Json& fx, int bound) {
    std::string tag = fx.at("name").get<std::string>();
    Rational a = rational_from_json(fx.at("a"));
    Rational b = rational_from_json(fx.at("b"));
    ck.check(tag + ": d value", quintic_d(a, b) == rational_from_json(fx.at("d")));
    if (!fx.contains("E")) {
        // parameter-only fixture: the degenerate-square detection
        ck.check(tag + ": d is a rational square",
                 rational_sqrt(quintic_d(a, b)).has_value());
        return;
    }
    QuinticFamily fam(a, b);
    ck.check(tag + ": E display", fam.E() == curve_from_json(fx.at("E")));
    ck.check(tag + ": E* display", fam.Estar() == curve_from_json(fx.at("Estar")));
    check_pipeline(ck, tag, fx, fam.E(), fam.Estar(),
                   [&](const PointQ& Q) { return fam.phi_star_eval(Q); }, 5, bound);
    if (fx.contains("beta_table")) {
        MWBasis eb = mw_basis_from_json(fx.at("mw"));
        bool all = true;
        std::string bad;
        for (const auto& row : fx.at("beta_table")) {
            PointQ P = eb.combine(to_longs(row.at("coeffs")));
            if (fam.point_to_beta(P) != rational_from_json(row.at("beta"))) {
                all = false;
                bad = row.at("beta").get<std::string>();
            }
        }
        ck.check(tag + ": beta table", all, bad);
    }
}

void check_cubic(Checker& ck, const Json& fx, int bound) {
    std::string tag = fx.at("name").get<std::string>();
    Rational a = rational_from_json(fx.at("a"));
    Rational b = rational_from_json(fx.at("b"));
    ck.check(tag + ": d value", cubic_d(a, b) == rational_from_json(fx.at("d")));
    CubicFamily fam(a, b);
    ck.check(tag + ": E display", fam.E() == curve_from_json(fx.at("E")));
    ck.check(tag + ": E* display", fam.Estar() == curve_from_json(fx.at("Estar")));
    check_pipeline(ck, tag, fx, fam.E(), fam.Estar(),
                   [&](const PointQ& Q) { return fam.phi_star_eval(Q); }, 3, bound);
}

void check_fixed_disc(Checker& ck, const Json& fx, int bound) {
    std::string tag = fx.at("name").get<std::string>();
    auto fd = fixed_disc_curve(rational_from_json(fx.at("D")));
    ck.check(tag + ": E display", fd.E == curve_from_json(fx.at("E")));
    ck.check(tag + ": E* display", fd.Estar == curve_from_json(fx.at("Estar")));
    check_pipeline(ck, tag, fx, fd.E, fd.Estar,
                   [&](const PointQ& Q) { return fd.phi_star.evaluate(Q); }, 3, bound);
}

} // namespace

std::string fixtures_path() {
    if (const char* env = std::getenv("KD_DATA_DIR")) return std::string(env) + "/fixtures.json";
    return std::string(KD_DATA_DIR) + "/fixtures.json";
}

Json load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fixture file " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ParseError("malformed fixture file: " + std::string(e.what()));
    }
    return j;
}

std::vector<CheckResult> run_fixture_checks(const Json& fixtures, int bound) {
    std::vector<CheckResult> results;
    Checker ck{results};
    for (const auto& fx : fixtures.at("quintic")) check_quintic(ck, fx, bound);
    for (const auto& fx : fixtures.at("cubic")) check_cubic(ck, fx, bound);
    for (const auto& fx : fixtures.at("fixed_disc")) check_fixed_disc(ck, fx, bound);
    return results;
}

} // namespace kd
