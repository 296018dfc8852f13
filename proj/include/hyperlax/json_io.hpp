#pragma once

// JSON wire formats. Rationals travel as exact "num/den" strings; keys are
// written in a fixed order so identical values serialize byte-identically.
//
//   Polynomial  {"nvars": n, "terms": [{"exps": [a1, ..., an], "coef": "p/q"}, ...]}
//   Vector      {"entries": ["p/q", ...]}
//   SymMatrix   {"d": d, "rows": [["p/q", ...], ...]}
//   Pencil      {"n": n, "matrices": [SymMatrix, ...]}
//   Verdict     {"outcome": "pass"|"refuted", "witness": [...]?, "trials": n, "seed": s}

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlax/dimcheck.hpp"
#include "hyperlax/hyperbolicity.hpp"
#include "hyperlax/lax.hpp"
#include "hyperlax/polynomial.hpp"
#include "hyperlax/realroots.hpp"
#include "hyperlax/text.hpp"

namespace hyperlax::json {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected a JSON object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

inline std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned()) throw ParseError(std::string("key '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

inline const Json& array_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) throw ParseError(std::string("key '") + key + "' must be an array");
    return v;
}

}  // namespace detail

inline Json to_json(const Rational& r) { return format_rational(r); }

/// Strings "p/q" or "p", or JSON integers.
inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("rational must be a \"num/den\" string or an integer");
}

inline Json to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json vector_to_json(const Vector& v) {
    Json j;
    j["entries"] = to_json(v);
    return j;
}

inline Vector rational_list_from_json(const Json& a) {
    if (!a.is_array()) throw ParseError("expected an array of rationals");
    Vector v;
    for (const auto& x : a) v.push_back(rational_from_json(x));
    return v;
}

inline Vector vector_from_json(const Json& j) { return rational_list_from_json(detail::field(j, "entries")); }

inline Json to_json(const Polynomial& p) {
    Json j;
    j["nvars"] = p.nvars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exps"] = e;
        t["coef"] = format_rational(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

/// Zero coefficients are skipped; a repeated exponent vector is an error.
inline Polynomial polynomial_from_json(const Json& j) {
    const std::size_t n = detail::size_field(j, "nvars");
    if (n == 0) throw ParseError("nvars must be positive");
    Polynomial p(n);
    std::set<Exponents> seen;
    for (const auto& t : detail::array_field(j, "terms")) {
        const Json& ej = detail::array_field(t, "exps");
        Exponents e;
        for (const auto& x : ej) {
            if (!x.is_number_unsigned()) throw ParseError("exponents must be nonnegative integers");
            e.push_back(x.get<unsigned>());
        }
        if (e.size() != n) throw ParseError("exponent vector length differs from nvars");
        if (!seen.insert(e).second) throw ParseError("repeated exponent vector in terms");
        p.add_term(std::move(e), rational_from_json(detail::field(t, "coef")));
    }
    return p;
}

inline Json to_json(const SymMatrix& m) {
    Json j;
    j["d"] = m.size();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.size(); ++k) row.push_back(format_rational(m(i, k)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline SymMatrix sym_matrix_from_json(const Json& j) {
    const std::size_t d = detail::size_field(j, "d");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : detail::array_field(j, "rows")) rows.push_back(rational_list_from_json(r));
    if (rows.size() != d) throw ParseError("row count differs from d");
    try {
        return SymMatrix::from_rows(rows);
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    }
}

inline Json to_json(const Pencil& p) {
    Json j;
    j["n"] = p.n();
    Json ms = Json::array();
    for (const auto& m : p.matrices()) ms.push_back(to_json(m));
    j["matrices"] = std::move(ms);
    return j;
}

inline Pencil pencil_from_json(const Json& j) {
    const std::size_t n = detail::size_field(j, "n");
    std::vector<SymMatrix> ms;
    for (const auto& m : detail::array_field(j, "matrices")) ms.push_back(sym_matrix_from_json(m));
    if (ms.size() != n) throw ParseError("matrix count differs from n");
    try {
        return Pencil(std::move(ms));
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    }
}

inline Json to_json(const Verdict& v) {
    Json j;
    j["outcome"] = v.passed() ? "pass" : "refuted";
    if (v.witness) j["witness"] = to_json(*v.witness);
    j["trials"] = v.trials;
    j["seed"] = v.seed;
    return j;
}

inline Verdict verdict_from_json(const Json& j) {
    Verdict v;
    const Json& outcome = detail::field(j, "outcome");
    if (outcome == "pass") {
        v.outcome = Outcome::pass;
    } else if (outcome == "refuted") {
        v.outcome = Outcome::refuted;
    } else {
        throw ParseError("outcome must be \"pass\" or \"refuted\"");
    }
    if (j.contains("witness")) v.witness = rational_list_from_json(j["witness"]);
    if (v.passed() == v.witness.has_value()) throw ParseError("witness must be present exactly when refuted");
    v.trials = detail::size_field(j, "trials");
    const Json& seed = detail::field(j, "seed");
    if (!seed.is_number_unsigned()) throw ParseError("seed must be a nonnegative integer");
    v.seed = seed.get<std::uint64_t>();
    return v;
}

inline Json to_json(const Interval& iv) { return Json::array({format_rational(iv.lo), format_rational(iv.hi)}); }

inline Json to_json(const RootIsolation& iso) {
    Json j;
    Json ivs = Json::array();
    for (const auto& iv : iso.intervals) ivs.push_back(to_json(iv));
    j["intervals"] = std::move(ivs);
    j["multiplicities"] = iso.multiplicities;
    return j;
}

inline Json to_json(const NumericDiagonal& nd) {
    Json j;
    j["d"] = nd.d();
    j["diag"] = nd.diag;
    Json ivs = Json::array();
    for (const auto& iv : nd.intervals) ivs.push_back(to_json(iv));
    j["intervals"] = std::move(ivs);
    j["residual"] = nd.residual;
    return j;
}

inline Json to_json(const DimReport& r) {
    Json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["det_image_dim"] = r.det_image_dim;
    j["poly_space_dim"] = r.poly_space_dim;
    j["det_smaller"] = r.det_smaller;
    return j;
}

}  // namespace hyperlax::json
