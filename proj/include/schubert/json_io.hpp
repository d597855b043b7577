// JSON forms for every exchanged value. Coweights are integer arrays,
// permutations are 1-indexed image arrays, alcoves are arrays of integer
// arrays, Laurent scalars are {"exponent": "p/q"} maps, matrices are nested
// arrays, lattices serialize as their basis matrix.

#pragma once

#include <json.hpp>

#include "schubert/global.hpp"
#include "schubert/minuscule.hpp"

namespace schubert {

using nlohmann::json;

inline json to_json(const Coweight& c) { return json(c.v); }
inline Coweight coweight_from_json(const json& j) {
    require(j.is_array() && !j.empty(), "coweight JSON must be a nonempty array");
    return Coweight(j.get<std::vector<int>>());
}

inline json to_json(const Permutation& p) { return json(p.img); }
inline Permutation permutation_from_json(const json& j) {
    require(j.is_array(), "permutation JSON must be an array");
    return Permutation(j.get<std::vector<int>>());
}

inline json to_json(const Alcove& x) {
    json terms = json::array();
    for (const auto& c : x.terms) terms.push_back(to_json(c));
    return terms;
}
inline Alcove alcove_from_json(const json& j) {
    require(j.is_array(), "alcove JSON must be an array of integer arrays");
    std::vector<Coweight> terms;
    for (const auto& e : j) terms.push_back(coweight_from_json(e));
    return validate_alcove(terms);
}

inline json to_json(const LaurentScalar& s) {
    json j = json::object();
    for (const auto& [e, c] : s.coefficients()) j[std::to_string(e)] = rat_to_string(c);
    return j;
}
inline LaurentScalar laurent_from_json(const json& j) {
    require(j.is_object(), "Laurent scalar JSON must be an exponent map");
    LaurentScalar s;
    for (auto it = j.begin(); it != j.end(); ++it)
        s.add_term(std::stoll(it.key()), rat_from_string(it.value().get<std::string>()));
    return s;
}

inline json to_json(const LaurentMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}
inline LaurentMatrix laurent_matrix_from_json(const json& j) {
    require(j.is_array() && !j.empty() && j.front().is_array() && !j.front().empty(),
            "matrix JSON must be a nonempty nested array");
    LaurentMatrix m(static_cast<int>(j.size()), static_cast<int>(j.front().size()));
    for (int r = 0; r < m.rows(); ++r) {
        require(static_cast<int>(j[static_cast<size_t>(r)].size()) == m.cols(),
                "ragged matrix JSON");
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = laurent_from_json(j[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    }
    return m;
}

inline json to_json(const Lattice& l) { return to_json(l.basis); }
inline Lattice lattice_from_json(const json& j) { return make_lattice(laurent_matrix_from_json(j)); }

inline json to_json(const LatticeFamily& f) {
    json members = json::array();
    for (const auto& l : f.members) members.push_back(to_json(l));
    return json{{"base", rat_to_string(f.base)}, {"members", std::move(members)}};
}

inline json to_json(const WitnessCheck& c) {
    return json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

inline json to_json(const ConvolutionWitness& w) {
    json frames = json::array();
    for (const auto& g : w.frames) frames.push_back(to_json(g));
    json checks = json::array();
    for (const auto& c : w.checks) checks.push_back(to_json(c));
    return json{{"x", to_json(w.x)},      {"y", to_json(w.y)},
                {"z", to_json(w.z)},      {"g", std::move(frames)},
                {"k", w.k},               {"mu", to_json(w.mu)},
                {"checks", std::move(checks)}, {"pass", w.all_pass()}};
}

inline json to_json(const DegenerationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    json samples = json::array();
    for (const auto& z : r.samples) samples.push_back(rat_to_string(z));
    return json{{"alcove", to_json(r.x)}, {"t", r.t},
                {"N", r.N},               {"checks", std::move(checks)},
                {"samples", std::move(samples)}, {"pass", r.all_pass()}};
}

inline json to_json(const DegenerationFamily& f) {
    json a = json::array(), b = json::array();
    for (const auto& m : f.A) a.push_back(to_json(m));
    for (const auto& m : f.B) b.push_back(to_json(m));
    return json{{"n", f.n}, {"t", f.t}, {"r", f.r}, {"N", f.N},
                {"A", std::move(a)}, {"B", std::move(b)}};
}

// LaTeX rendering of a polynomial matrix, for documentation output.
inline std::string to_latex(const LaurentScalar& s, const std::string& var = "u") {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : s.coefficients()) {
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string coeff = denominator(ac) == 1
                                ? rat_to_string(ac)
                                : "\\tfrac{" + numerator(ac).str() + "}{" + denominator(ac).str() + "}";
        if (!(ac == 1) || e == 0) out += coeff;
        if (e != 0) {
            out += var;
            if (e != 1) out += "^{" + std::to_string(e) + "}";
        }
    }
    return out;
}

inline std::string to_latex(const LaurentMatrix& m, const std::string& var = "u") {
    std::string out = "\\begin{pmatrix}";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            out += to_latex(m.at(i, j), var);
            if (j + 1 < m.cols()) out += " & ";
        }
        if (i + 1 < m.rows()) out += " \\\\ ";
    }
    out += "\\end{pmatrix}";
    return out;
}

}  // namespace schubert
