#include "kd/json_io.hpp"

namespace kd {

namespace {

bool fits_int64(const mpz_class& z) {
    return z.fits_slong_p() && sizeof(long) == 8;
}

const Json& required(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\" in " + j.dump());
    return j.at(key);
}

} // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
    throw ParseError("expected a rational (string or integer), got " + j.dump());
}

Json poly_to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) {
        if (c.is_integer() && fits_int64(c.num()))
            arr.push_back(static_cast<int64_t>(c.num().get_si()));
        else
            arr.push_back(c.str());
    }
    return arr;
}

UniPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient array");
    std::vector<Rational> coeffs;
    for (const auto& entry : j) coeffs.push_back(rational_from_json(entry));
    return UniPoly(std::move(coeffs));
}

Json ratfunc_to_json(const RatFunc& f) {
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const Json& j) {
    return RatFunc(poly_from_json(required(j, "num")), poly_from_json(required(j, "den")));
}

Json point_to_json(const PointQ& P) {
    if (P.is_infinity()) return "inf";
    return Json{{"x", rational_to_json(P.x())}, {"y", rational_to_json(P.y())}};
}

PointQ point_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return PointQ::infinity();
        throw ParseError("expected a point object or \"inf\", got " + j.dump());
    }
    return PointQ::affine(rational_from_json(required(j, "x")), rational_from_json(required(j, "y")));
}

Json curve_to_json(const CurveQ& C) {
    return Json{{"a1", rational_to_json(C.a1())},
                {"a2", rational_to_json(C.a2())},
                {"a3", rational_to_json(C.a3())},
                {"a4", rational_to_json(C.a4())},
                {"a6", rational_to_json(C.a6())}};
}

CurveQ curve_from_json(const Json& j) {
    return CurveQ(rational_from_json(required(j, "a1")), rational_from_json(required(j, "a2")),
                  rational_from_json(required(j, "a3")), rational_from_json(required(j, "a4")),
                  rational_from_json(required(j, "a6")));
}

Json isogeny_to_json(const IsogenyMap& iso) {
    Json out{{"domain", curve_to_json(iso.domain())},
             {"codomain", curve_to_json(iso.codomain())},
             {"x_map", ratfunc_to_json(iso.x_map())},
             {"y_map",
              Json{{"u", poly_to_json(iso.y_map().u)},
                   {"v", poly_to_json(iso.y_map().v)},
                   {"w", poly_to_json(iso.y_map().w)}}},
             {"degree", iso.degree()}};
    if (iso.kernel_generator()) out["kernel_generator"] = point_to_json(*iso.kernel_generator());
    return out;
}

IsogenyMap isogeny_from_json(const Json& j) {
    std::optional<PointQ> kernel;
    if (j.contains("kernel_generator")) kernel = point_from_json(j.at("kernel_generator"));
    return IsogenyMap(curve_from_json(required(j, "domain")), curve_from_json(required(j, "codomain")),
                      ratfunc_from_json(required(j, "x_map")),
                      IsogenyYMap{poly_from_json(required(required(j, "y_map"), "u")),
                                  poly_from_json(required(required(j, "y_map"), "v")),
                                  poly_from_json(required(required(j, "y_map"), "w"))},
                      required(j, "degree").get<int>(), std::move(kernel));
}

Json mw_basis_to_json(const MWBasis& basis) {
    Json free_arr = Json::array();
    for (const auto& P : basis.free_gens) free_arr.push_back(point_to_json(P));
    Json torsion_arr = Json::array();
    for (const auto& [T, order] : basis.torsion_gens)
        torsion_arr.push_back(Json{{"point", point_to_json(T)}, {"order", order}});
    return Json{{"curve", curve_to_json(basis.curve)},
                {"free", free_arr},
                {"torsion", torsion_arr}};
}

MWBasis mw_basis_from_json(const Json& j) {
    const Json& free_list = required(j, "free");
    if (!free_list.is_array()) throw ParseError("\"free\" must be an array of points");
    std::vector<PointQ> free_gens;
    for (const auto& entry : free_list) free_gens.push_back(point_from_json(entry));
    std::vector<std::pair<PointQ, int>> torsion_gens;
    if (j.contains("torsion")) {
        const Json& torsion_list = j.at("torsion");
        if (!torsion_list.is_array())
            throw ParseError("\"torsion\" must be an array of {point, order} entries");
        for (const auto& entry : torsion_list) {
            const Json& order = required(entry, "order");
            if (!order.is_number_integer()) throw ParseError("torsion order must be an integer");
            torsion_gens.emplace_back(point_from_json(required(entry, "point")),
                                      order.get<int>());
        }
    }
    return MWBasis(curve_from_json(required(j, "curve")), std::move(free_gens),
                   std::move(torsion_gens));
}

Json classification_to_json(const Classification& cls) {
    Json classes = Json::array();
    for (const auto& entry : cls.classes) {
        Json c{{"subgroup", entry.line},
               {"rep_coeffs", Json{{"free", entry.rep_coeffs.free_coeffs},
                                   {"torsion", entry.rep_coeffs.torsion_coeffs}}},
               {"representative", point_to_json(entry.representative)}};
        if (entry.beta) c["beta"] = rational_to_json(*entry.beta);
        if (entry.polynomial) c["polynomial"] = poly_to_json(*entry.polynomial);
        classes.push_back(std::move(c));
    }
    Json out{{"ell", cls.ell}, {"quotient_rank", cls.quotient_rank}, {"classes", classes}};
    if (cls.base_class) out["base_class"] = *cls.base_class;
    return out;
}

} // namespace kd
