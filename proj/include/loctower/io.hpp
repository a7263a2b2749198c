#ifndef LOCTOWER_IO_HPP
#define LOCTOWER_IO_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "loctower/character.hpp"
#include "loctower/errors.hpp"
#include "loctower/function_algebra.hpp"
#include "loctower/function_spec.hpp"
#include "loctower/spectrum.hpp"
#include "loctower/tower.hpp"

namespace loctower::io {

using nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw TowerError(ErrorCode::BadInput, "expected a [re, im] number pair");
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw TowerError(ErrorCode::NonFiniteEntry, "non-finite complex literal");
    return z;
}

inline json parse_text(const std::string& text) {
    // nlohmann rejects NaN/Inf tokens at parse time, which is what the
    // format requires.
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw TowerError(ErrorCode::BadInput, "malformed input document");
    return j;
}

// Tower format: {"dims": [d1..dN], "levels": [row-major [re,im] arrays]}.

inline json tower_to_json(const OperatorTower& tower) {
    json dims = json::array();
    for (int d : tower.chain().dims()) dims.push_back(d);
    json levels = json::array();
    for (std::size_t a = 1; a <= tower.num_levels(); ++a) {
        const ComplexMatrix& m = tower.level(a);
        json entries = json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(complex_to_json(m(i, j)));
        levels.push_back(std::move(entries));
    }
    return json{{"dims", std::move(dims)}, {"levels", std::move(levels)}};
}

inline OperatorTower tower_from_json(const json& j, double coherence_tol = tol::coherence) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("levels"))
        throw TowerError(ErrorCode::BadInput, "tower document needs \"dims\" and \"levels\"");
    std::vector<int> dims;
    for (const auto& d : j.at("dims")) {
        if (!d.is_number_integer())
            throw TowerError(ErrorCode::BadInput, "dims must be integers");
        dims.push_back(d.get<int>());
    }
    IndexChain chain(std::move(dims));
    const json& levels = j.at("levels");
    if (!levels.is_array() || levels.size() != chain.size())
        throw TowerError(ErrorCode::DimensionMismatch, "levels array length must match dims");
    std::vector<ComplexMatrix> mats;
    for (std::size_t a = 1; a <= chain.size(); ++a) {
        const int d = chain.dim(a);
        const json& entries = levels[a - 1];
        if (!entries.is_array() || entries.size() != static_cast<std::size_t>(d) * d)
            throw TowerError(ErrorCode::DimensionMismatch,
                             "level " + std::to_string(a) + " needs " + std::to_string(d * d) +
                                 " entries");
        ComplexMatrix m(d, d);
        std::size_t idx = 0;
        for (int i = 0; i < d; ++i)
            for (int jj = 0; jj < d; ++jj) m(i, jj) = complex_from_json(entries[idx++]);
        mats.push_back(std::move(m));
    }
    return validate_tower(std::move(chain), std::move(mats), coherence_tol);
}

// FunctionSpec format, three closed variants keyed by "kind".

inline std::string named_function_string(NamedFunction f, Complex constant) {
    switch (f) {
        case NamedFunction::Identity: return "identity";
        case NamedFunction::Conj: return "conj";
        case NamedFunction::Exp: return "exp";
        case NamedFunction::Re: return "re";
        case NamedFunction::Im: return "im";
        case NamedFunction::Abs2: return "abs2";
        case NamedFunction::Const:
            return "const:" + std::to_string(constant.real()) + "," +
                   std::to_string(constant.imag());
    }
    throw TowerError(ErrorCode::BadInput, "corrupt named function");
}

inline FunctionSpec named_function_from_string(const std::string& name) {
    if (name == "identity") return FunctionSpec::named(NamedFunction::Identity);
    if (name == "conj") return FunctionSpec::named(NamedFunction::Conj);
    if (name == "exp") return FunctionSpec::named(NamedFunction::Exp);
    if (name == "re") return FunctionSpec::named(NamedFunction::Re);
    if (name == "im") return FunctionSpec::named(NamedFunction::Im);
    if (name == "abs2") return FunctionSpec::named(NamedFunction::Abs2);
    if (name.rfind("const:", 0) == 0) {
        const std::string body = name.substr(6);
        const auto comma = body.find(',');
        try {
            const double re = std::stod(body.substr(0, comma));
            const double im = comma == std::string::npos ? 0.0 : std::stod(body.substr(comma + 1));
            return FunctionSpec::named(NamedFunction::Const, Complex(re, im));
        } catch (const std::exception&) {
            throw TowerError(ErrorCode::BadInput, "malformed constant in \"" + name + "\"");
        }
    }
    throw TowerError(ErrorCode::BadInput, "unknown named function \"" + name + "\"");
}

inline json function_spec_to_json(const FunctionSpec& f) {
    switch (f.kind()) {
        case FunctionSpec::Kind::Polynomial: {
            json terms = json::array();
            for (const auto& t : f.terms())
                terms.push_back(json{{"j", t.z_power},
                                     {"k", t.conj_power},
                                     {"coeff", complex_to_json(t.coeff)}});
            return json{{"kind", "polynomial"}, {"terms", std::move(terms)}};
        }
        case FunctionSpec::Kind::Named:
            return json{{"kind", "named"},
                        {"name", named_function_string(f.named_function(), f.constant())}};
        case FunctionSpec::Kind::Table: {
            json points = json::array();
            for (const auto& p : f.points())
                points.push_back(
                    json{{"z", complex_to_json(p.point)}, {"fz", complex_to_json(p.value)}});
            return json{{"kind", "table"}, {"points", std::move(points)}};
        }
    }
    throw TowerError(ErrorCode::BadInput, "corrupt function spec");
}

inline FunctionSpec function_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw TowerError(ErrorCode::BadInput, "function spec needs a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "polynomial") {
        std::vector<PolyTerm> terms;
        for (const auto& t : j.at("terms"))
            terms.push_back(PolyTerm{t.at("j").get<int>(), t.at("k").get<int>(),
                                     complex_from_json(t.at("coeff"))});
        return FunctionSpec::polynomial(std::move(terms));
    }
    if (kind == "named") return named_function_from_string(j.at("name").get<std::string>());
    if (kind == "table") {
        std::vector<TablePoint> points;
        for (const auto& p : j.at("points"))
            points.push_back(TablePoint{complex_from_json(p.at("z")), complex_from_json(p.at("fz"))});
        return FunctionSpec::table(std::move(points));
    }
    throw TowerError(ErrorCode::BadInput, "unknown function spec kind \"" + kind + "\"");
}

// GridFunction format.

inline json grid_function_to_json(const GridFunction& f) {
    json values = json::array();
    for (Complex z : f.values()) values.push_back(complex_to_json(z));
    return json{{"mode", f.chain().mode() == IntervalChain::Mode::Symmetric ? "symmetric" : "halfline"},
                {"N", f.chain().num_levels()},
                {"samples_per_unit", f.chain().samples_per_unit()},
                {"values", std::move(values)}};
}

inline GridFunction grid_function_from_json(const json& j) {
    const std::string mode_str = j.at("mode").get<std::string>();
    IntervalChain::Mode mode;
    if (mode_str == "symmetric") mode = IntervalChain::Mode::Symmetric;
    else if (mode_str == "halfline") mode = IntervalChain::Mode::Halfline;
    else throw TowerError(ErrorCode::BadInput, "unknown mode \"" + mode_str + "\"");
    IntervalChain chain(mode, j.at("N").get<int>(), j.at("samples_per_unit").get<int>());
    std::vector<Complex> values;
    for (const auto& v : j.at("values")) values.push_back(complex_from_json(v));
    return GridFunction(std::move(chain), std::move(values));
}

// Spectra and characters.

inline json spectrum_to_json(const LocalSpectrum& s) {
    json per_level = json::array();
    for (const auto& lvl : s.per_level) {
        json arr = json::array();
        for (Complex z : lvl) arr.push_back(complex_to_json(z));
        per_level.push_back(std::move(arr));
    }
    json merged = json::array();
    for (Complex z : s.merged) merged.push_back(complex_to_json(z));
    return json{{"per_level", std::move(per_level)},
                {"merged", std::move(merged)},
                {"normal_input", s.normal_input}};
}

inline json character_to_json(const Character& c) {
    return json{{"min_level", static_cast<int>(c.min_level)}, {"value", complex_to_json(c.value)}};
}

inline json characters_to_json(const std::vector<Character>& chars) {
    json arr = json::array();
    for (const auto& c : chars) arr.push_back(character_to_json(c));
    return arr;
}

inline json gelfand_to_json(const std::vector<Character>& chars, const std::vector<Complex>& values) {
    json arr = json::array();
    for (std::size_t i = 0; i < chars.size(); ++i)
        arr.push_back(json{{"character", character_to_json(chars[i])},
                           {"value", complex_to_json(values[i])}});
    return arr;
}

}  // namespace loctower::io

#endif
