/**
 * @file serialize.hpp
 * @brief JSON views of the exact types. Polynomials serialize as arrays
 *        of "num/den" strings in ascending degree; h* entries as JSON
 *        integers (strings once they outgrow 64 bits). Key order is
 *        fixed so output is byte-deterministic.
 */
#ifndef EHRHART_SERIALIZE_HPP
#define EHRHART_SERIALIZE_HPP

#include <json.hpp>

#include "ehrhart/diagnostics.hpp"
#include "ehrhart/ehrhart.hpp"
#include "ehrhart/hstar.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const RationalPolynomial& p) {
    ordered_json a = ordered_json::array();
    for (const Rational& c : p.coefficients())
        a.push_back(fraction_string(c));
    return a;
}

inline ordered_json to_json_int(const Int& z) {
    if (z.fits_slong_p())
        return ordered_json(z.get_si());
    return ordered_json(z.get_str());
}

inline ordered_json to_json(const HStarVector& h) {
    ordered_json a = ordered_json::array();
    for (const Int& e : h.entries())
        a.push_back(to_json_int(e));
    return a;
}

inline ordered_json to_json(const EhrhartResult& r, const std::string& label, int dim) {
    ordered_json j;
    j["label"] = label;
    j["dim"] = dim;
    j["method"] = method_name(r.method);
    j["ehrhart"] = to_json(r.ehrhart);
    j["hstar"] = to_json(r.hstar);
    return j;
}

inline ordered_json to_json(const QuadrantReport& r) {
    ordered_json j;
    j["label"] = r.label;
    j["dim"] = r.dim;
    j["method"] = method_name(r.method);
    j["positive"] = r.positive;
    j["unimodal"] = r.unimodal;
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : r.ehrhart_coeffs)
        coeffs.push_back(fraction_string(c));
    j["ehrhart"] = coeffs;
    j["hstar"] = to_json(r.hstar);
    j["notes"] = r.notes;
    return j;
}

}  // namespace ehrhart

#endif  // EHRHART_SERIALIZE_HPP
