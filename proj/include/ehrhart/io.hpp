#pragma once

/// File formats and display: polytope and quasi-polynomial JSON documents
/// (rationals as "p/q" strings, bit-exact round trip), rational vector
/// literals, the congruence-class display, and cell listings.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehrhart/cells.hpp"
#include "ehrhart/hilbert.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/quasipoly.hpp"

namespace ehr {

using Json = nlohmann::ordered_json;

inline Json polytope_to_json(const Polytope& P) {
    Json j;
    j["dimension"] = P.dimension();
    Json verts = Json::array();
    for (const auto& v : P.vertices()) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.str());
        verts.push_back(row);
    }
    j["vertices"] = verts;
    return j;
}

inline Polytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("vertices"))
        throw parse_error("polytope document needs 'dimension' and 'vertices'");
    if (!j["dimension"].is_number_integer())
        throw parse_error("polytope 'dimension' must be an integer");
    std::size_t d = j["dimension"].get<std::size_t>();
    if (!j["vertices"].is_array() || j["vertices"].empty())
        throw parse_error("polytope 'vertices' must be a nonempty list");
    std::vector<RatVec> pts;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || row.size() != d)
            throw parse_error("polytope vertex rows must have length 'dimension'");
        RatVec p;
        for (const auto& x : row) {
            if (!x.is_string()) throw parse_error("vertex coordinates must be rational strings");
            p.push_back(Rational::parse(x.get<std::string>()));
        }
        pts.push_back(std::move(p));
    }
    return Polytope::from_vertices(pts);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw error("cannot write file: " + path);
    out << content;
}

inline Polytope load_polytope(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid polytope file: ") + e.what());
    }
    return polytope_from_json(j);
}

/// "p/q,p/q,..." -> rational vector.
inline RatVec parse_rational_vector(const std::string& text) {
    RatVec out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) out.push_back(Rational::parse(cur));
    if (out.empty()) throw parse_error("empty rational vector literal");
    return out;
}

inline Json quasipoly_to_json(const QuasiPolynomial& f) {
    Json j;
    j["period"] = f.period();
    Json cons = Json::array();
    for (const auto& p : f.constituents()) {
        Json coeffs = Json::array();
        for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
        cons.push_back(coeffs);
    }
    j["constituents"] = cons;
    return j;
}

inline QuasiPolynomial quasipoly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("period") || !j.contains("constituents"))
        throw parse_error("quasi-polynomial document needs 'period' and 'constituents'");
    long q = j["period"].get<long>();
    std::vector<Polynomial> cs;
    for (const auto& row : j["constituents"]) {
        std::vector<Rational> coeffs;
        for (const auto& c : row) coeffs.push_back(Rational::parse(c.get<std::string>()));
        cs.push_back(Polynomial(std::move(coeffs)));
    }
    if (q <= 0 || cs.size() != static_cast<std::size_t>(q))
        throw parse_error("quasi-polynomial period/constituent mismatch");
    return QuasiPolynomial(q, std::move(cs));
}

/// Residue classes grouped by equal constituent, one line per group:
/// "t = a_1,...,a_j (mod q): <polynomial>", groups ordered by smallest
/// residue.
inline std::string congruence_display(const QuasiPolynomial& f) {
    std::map<long, std::vector<long>> groups;  // leader residue -> members
    std::vector<long> leader_of;
    std::vector<Polynomial> leaders;
    for (long k = 0; k < f.period(); ++k) {
        bool found = false;
        for (std::size_t i = 0; i < leaders.size() && !found; ++i) {
            if (leaders[i] == f.constituent(k)) {
                groups[leader_of[i]].push_back(k);
                found = true;
            }
        }
        if (!found) {
            leaders.push_back(f.constituent(k));
            leader_of.push_back(k);
            groups[k].push_back(k);
        }
    }
    std::ostringstream out;
    for (const auto& [lead, members] : groups) {
        out << "t ≡ ";
        for (std::size_t i = 0; i < members.size(); ++i) out << (i ? "," : "") << members[i];
        out << " (mod " << f.period() << "): " << f.constituent(lead).str() << "\n";
    }
    return out.str();
}

inline std::string vector_str(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

inline Json cell_to_json(const Cell& cell, const QuasiPolynomial& tl_value) {
    Json j;
    Json c = Json::array();
    for (const auto& x : cell.key.ceilings) c.push_back(x.get_str());
    j["ceilings"] = c;
    if (!cell.key.flags.empty()) {
        Json e = Json::array();
        for (bool b : cell.key.flags) e.push_back(b);
        j["on_hyperplane"] = e;
    }
    j["dimension"] = cell.dimension;
    Json rep = Json::array();
    for (const auto& x : cell.representative) rep.push_back(x.str());
    j["representative"] = rep;
    j["tl"] = quasipoly_to_json(tl_value);
    return j;
}

inline Json hilbert_to_json(const HilbertSeriesData& h) {
    Json j;
    j["alpha"] = h.alpha.get_str();
    j["period"] = h.q;
    j["dimension"] = h.d;
    Json num = Json::array();
    for (const auto& c : h.numerator) num.push_back(c.get_str());
    j["numerator"] = num;
    return j;
}

}  // namespace ehr
