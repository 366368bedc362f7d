#pragma once

// JSON and shorthand I/O for FunctionSpec.
//
// JSON form, complex numbers as [re, im] pairs (a bare number is read as a
// real):
//   {"kind": "polynomial",    "coeffs": [[0,0],[1,0]]}
//   {"kind": "series",        "coeffs": [...], "truncation_degree": N}
//   {"kind": "moebius",       "a": [0,0], "b": [0.5,0], "c": [1,0]}
//   {"kind": "annulus_cover", "c": 0.3}
//
// Shorthand form used on the command line:
//   poly[0,0,1]   series[0,1,0.5i]   moebius(0,0.5,1)   annulus(0.3)

#include "schwarz/analytic.hpp"
#include "schwarz/errors.hpp"

#include "json.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace schwarz {

namespace detail {

inline nlohmann::json complex_to_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const nlohmann::json& j, const char* field) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw SpecFormatError(std::string("expected [re, im] pair for ") + field);
}

inline std::vector<cplx> coeffs_from_json(const nlohmann::json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw SpecFormatError("spec needs a \"coeffs\" array");
    std::vector<cplx> out;
    for (const auto& c : j["coeffs"]) out.push_back(complex_from_json(c, "coeffs"));
    if (out.empty()) throw SpecFormatError("\"coeffs\" must not be empty");
    return out;
}

inline std::string trim(std::string s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

inline double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw SpecFormatError("bad number '" + s + "'");
    }
    if (used != s.size()) throw SpecFormatError("bad number '" + s + "'");
    return v;
}

// Accepts 1.5, -2i, i, 1+2i, 0.5-3e-2i.
inline cplx parse_complex(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw SpecFormatError("empty complex literal");
    if (s.back() != 'i') return {parse_real(s), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t);
    };
    if (split == std::string::npos) return {0.0, imag_of(body)};
    return {parse_real(body.substr(0, split)), imag_of(body.substr(split))};
}

inline std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

} // namespace detail

inline nlohmann::json to_json(const FunctionSpec& spec) {
    nlohmann::json j;
    j["kind"] = std::string(spec.kind_name());
    if (auto* p = spec.as<Polynomial>()) {
        j["coeffs"] = nlohmann::json::array();
        for (auto c : p->coeffs) j["coeffs"].push_back(detail::complex_to_json(c));
    } else if (auto* s = spec.as<PowerSeries>()) {
        j["coeffs"] = nlohmann::json::array();
        for (auto c : s->coeffs) j["coeffs"].push_back(detail::complex_to_json(c));
        j["truncation_degree"] = s->truncation_degree();
    } else if (auto* m = spec.as<Moebius>()) {
        j["a"] = detail::complex_to_json(m->a);
        j["b"] = detail::complex_to_json(m->b);
        j["c"] = detail::complex_to_json(m->c);
    } else if (auto* a = spec.as<AnnulusCover>()) {
        j["c"] = a->c;
    }
    return j;
}

inline FunctionSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SpecFormatError("spec JSON must be an object with a string \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    try {
        if (kind == "polynomial") return FunctionSpec::polynomial(detail::coeffs_from_json(j));
        if (kind == "series") {
            auto coeffs = detail::coeffs_from_json(j);
            if (j.contains("truncation_degree") &&
                j["truncation_degree"].get<long>() != static_cast<long>(coeffs.size()) - 1)
                throw SpecFormatError("series: truncation_degree must equal len(coeffs) - 1");
            return FunctionSpec::series(std::move(coeffs));
        }
        if (kind == "moebius") {
            for (const char* k : {"a", "b", "c"})
                if (!j.contains(k)) throw SpecFormatError(std::string("moebius: missing \"") + k + "\"");
            return FunctionSpec::moebius(detail::complex_from_json(j["a"], "a"),
                                         detail::complex_from_json(j["b"], "b"),
                                         detail::complex_from_json(j["c"], "c"));
        }
        if (kind == "annulus_cover") {
            if (!j.contains("c") || !j["c"].is_number())
                throw SpecFormatError("annulus_cover: \"c\" must be a number");
            return FunctionSpec::annulus_cover(j["c"].get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw SpecFormatError(std::string("spec JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw SpecFormatError(e.what());
    }
    throw SpecFormatError("unknown spec kind '" + kind + "'");
}

inline FunctionSpec parse_spec_shorthand(const std::string& text) {
    const std::string s = detail::trim(text);
    auto body_between = [&](char open, char close) -> std::string {
        auto lo = s.find(open);
        if (lo == std::string::npos || s.back() != close)
            throw SpecFormatError("malformed spec shorthand '" + text + "'");
        return s.substr(lo + 1, s.size() - lo - 2);
    };
    auto complex_list = [&](const std::string& body) {
        std::vector<cplx> out;
        for (const auto& a : detail::split_args(body)) out.push_back(detail::parse_complex(a));
        if (out.empty()) throw SpecFormatError("empty coefficient list in '" + text + "'");
        return out;
    };
    try {
        if (s.rfind("poly[", 0) == 0) return FunctionSpec::polynomial(complex_list(body_between('[', ']')));
        if (s.rfind("series[", 0) == 0) return FunctionSpec::series(complex_list(body_between('[', ']')));
        if (s.rfind("moebius(", 0) == 0) {
            auto args = complex_list(body_between('(', ')'));
            if (args.size() != 3) throw SpecFormatError("moebius(a,b,c) needs three arguments");
            return FunctionSpec::moebius(args[0], args[1], args[2]);
        }
        if (s.rfind("annulus(", 0) == 0 || s.rfind("annulus_cover(", 0) == 0) {
            auto args = complex_list(body_between('(', ')'));
            if (args.size() != 1 || args[0].imag() != 0.0)
                throw SpecFormatError("annulus(c) needs one real argument");
            return FunctionSpec::annulus_cover(args[0].real());
        }
    } catch (const DomainError& e) {
        throw SpecFormatError(e.what());
    }
    throw SpecFormatError("unrecognized spec '" + text + "'");
}

/// Inline JSON, shorthand, or a path to a JSON file.
inline FunctionSpec parse_spec_argument(const std::string& arg) {
    const std::string s = detail::trim(arg);
    if (!s.empty() && s.front() == '{') {
        try {
            return spec_from_json(nlohmann::json::parse(s));
        } catch (const nlohmann::json::parse_error& e) {
            throw SpecFormatError(std::string("spec JSON: ") + e.what());
        }
    }
    for (const char* prefix : {"poly[", "series[", "moebius(", "annulus(", "annulus_cover("})
        if (s.rfind(prefix, 0) == 0) return parse_spec_shorthand(s);
    std::ifstream in(arg);
    if (!in) throw SpecFormatError("spec '" + arg + "' is neither JSON, shorthand, nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return spec_from_json(nlohmann::json::parse(buf.str()));
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecFormatError(std::string("spec file JSON: ") + e.what());
    }
}

/// 64-bit FNV-1a of the canonical JSON, as 16 hex digits.
inline std::string spec_hash(const FunctionSpec& spec) {
    const std::string text = to_json(spec).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace schwarz
