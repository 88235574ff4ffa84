#pragma once

#include <json.hpp>

#include "rbh4/rbcheck.hpp"
#include "rbh4/catalog.hpp"
#include "rbh4/search.hpp"

namespace rbh4 {

using json = nlohmann::json;

// Greek-letter display form of a parameter name ("alpha2" -> "α₂").
inline std::string param_display(const std::string& name) {
    static const std::vector<std::pair<std::string, std::string>> letters = {
        {"alpha", "α"}, {"beta", "β"}, {"gamma", "γ"}, {"delta", "δ"}, {"eta", "η"},
        {"lambda", "λ"}, {"mu", "μ"}, {"nu", "ν"}, {"sigma", "σ"}, {"xi", "ξ"},
        {"zeta", "ζ"}, {"we", "w_e"}, {"wf", "w_f"}, {"w", "w"}, {"p", "p"},
    };
    static const char* subscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    for (const auto& [ascii, uni] : letters) {
        if (name.rfind(ascii, 0) != 0) continue;
        std::string tail = name.substr(ascii.size());
        if (tail.empty()) return uni;
        std::string sub;
        for (char ch : tail) {
            if (ch < '0' || ch > '9') return name;
            sub += subscripts[ch - '0'];
        }
        return uni + sub;
    }
    return name;
}

template <typename S>
json to_json(const AlgebraSpec<S>& spec) {
    json constants = json::array();
    for (size_t i = 0; i < spec.dim(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < spec.dim(); ++j) {
            json cell = json::array();
            for (size_t k = 0; k < spec.dim(); ++k) cell.push_back(spec.c(i, j, k).to_string());
            row.push_back(cell);
        }
        constants.push_back(row);
    }
    return json{{"name", spec.name()},
                {"kind", kind_name(spec.kind())},
                {"basis", spec.basis_labels()},
                {"constants", constants}};
}

// Inverse of the spec serialization above; validates the parsed table.
template <typename Ctx>
AlgebraSpec<typename Ctx::Scalar> algebra_from_json(const json& j, const Ctx& ctx) {
    using S = typename Ctx::Scalar;
    std::string kind_text = j.at("kind").get<std::string>();
    AlgebraKind kind = kind_text == "associative" ? AlgebraKind::Associative
                       : kind_text == "lie"       ? AlgebraKind::Lie
                       : kind_text == "jordan"    ? AlgebraKind::Jordan
                                                  : throw std::invalid_argument(
                                                        "algebra kind: " + kind_text);
    std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
    size_t n = basis.size();
    const json& constants = j.at("constants");
    std::vector<S> c;
    c.reserve(n * n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t jj = 0; jj < n; ++jj)
            for (size_t k = 0; k < n; ++k)
                c.push_back(ctx.parse(constants.at(i).at(jj).at(k).template get<std::string>()));
    AlgebraSpec<S> spec(j.at("name").get<std::string>(), kind, basis, std::move(c),
                        ctx.from_int(0), ctx.from_int(1));
    spec.validate();
    return spec;
}

template <typename S>
json to_json(const AlgebraSpec<S>& spec, const RBReport<S>& report) {
    json residuals = json::array();
    for (const auto& r : report.residuals) {
        json comps = json::array();
        for (const auto& x : r.residual) comps.push_back(x.to_string());
        residuals.push_back(json{
            {"pair", {spec.basis_labels()[r.i], spec.basis_labels()[r.j]}},
            {"residual", comps}});
    }
    return json{{"verdict", report.pass ? "pass" : "fail"}, {"residuals", residuals}};
}

template <typename S>
json matrix_to_json(const Matrix<S>& m) {
    json rows = json::array();
    for (size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const ConstraintAtom& atom) {
    json polys = json::array();
    for (const auto& p : atom.polys) polys.push_back(p.to_string());
    const char* kind = atom.kind == ConstraintAtom::Kind::NonZero    ? "nonzero"
                       : atom.kind == ConstraintAtom::Kind::Zero     ? "zero"
                                                                     : "any-nonzero";
    return json{{"kind", kind}, {"polys", polys}};
}

inline json to_json(const Family& f) {
    json constraints = json::array();
    for (const auto& a : f.constraints) constraints.push_back(to_json(a));
    json letters = json::object();
    for (const auto& p : f.params) letters[p] = param_display(p);
    json j{{"id", f.id},
           {"algebra", f.algebra},
           {"source", f.source},
           {"params", f.params},
           {"param_letters", letters},
           {"matrix", matrix_to_json(f.matrix)},
           {"constraints", constraints}};
    if (!f.note.empty()) j["note"] = f.note;
    return j;
}

inline json to_json(const Discrepancy& d, const std::vector<std::string>& basis) {
    json j{{"family", d.family},
           {"pair", {basis[d.pair_i], basis[d.pair_j]}},
           {"residual_numerator", d.residual_numerator}};
    if (!d.note.empty()) j["note"] = d.note;
    return j;
}

inline json operator_line(const FoundOperator& op, const std::string& matched_family) {
    json entries = json::array();
    for (auto e : op.entries) entries.push_back(std::to_string(e));
    json j{{"matrix", entries}, {"kernel_dim", op.kernel_dim}};
    j["matched_family"] = matched_family.empty() ? json() : json(matched_family);
    return j;
}

inline json to_json(const CoverageReport& rep) {
    json per_family = json::object();
    for (const auto& fc : rep.per_family)
        if (fc.matched > 0) per_family[fc.family] = fc.matched;
    json unmatched = json::array();
    for (const auto& op : rep.unmatched) {
        json entries = json::array();
        for (auto e : op.entries) entries.push_back(std::to_string(e));
        unmatched.push_back(json{{"matrix", entries}, {"kernel_dim", op.kernel_dim}});
    }
    return json{{"total", rep.total},
                {"matched", rep.total - rep.unmatched.size()},
                {"per_family", per_family},
                {"unmatched", unmatched}};
}

}  // namespace rbh4
