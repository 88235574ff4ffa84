#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbh4/algebra.hpp"

namespace rbh4 {

// One failed basis pair: indices plus the residual vector.
template <typename S>
struct ResidualEntry {
    size_t i, j;
    Vec<S> residual;
};

template <typename S>
struct RBReport {
    bool pass = true;
    std::vector<ResidualEntry<S>> residuals;  // nonzero residuals only
};

// Residual of the weighted identity on one basis pair:
//   m(R e_i, R e_j) - R( m(R e_i, e_j) + m(e_i, R e_j) + lambda * m(e_i, e_j) ).
// Zero iff the identity holds on that pair.
template <typename S>
Vec<S> rb_residual(const AlgebraSpec<S>& spec, const Matrix<S>& r, const S& lambda, size_t i,
                   size_t j) {
    if (r.dim() != spec.dim()) throw std::invalid_argument("rb_residual: dimension mismatch");
    Vec<S> ri = r.column(i), rj = r.column(j);
    Vec<S> lhs = spec.multiply(ri, rj);
    Vec<S> inner = spec.multiply(ri, spec.basis_vector(j));
    Vec<S> t = spec.multiply(spec.basis_vector(i), rj);
    Vec<S> w = spec.basis_product(i, j);
    for (size_t k = 0; k < spec.dim(); ++k) inner[k] = inner[k] + t[k] + lambda * w[k];
    Vec<S> rhs = r.apply(inner);
    for (size_t k = 0; k < spec.dim(); ++k) lhs[k] = lhs[k] - rhs[k];
    return lhs;
}

// Basis pairs that decide the identity for each kind: bilinearity reduces the
// quantifiers to basis pairs; antisymmetry (lie) and commutativity (jordan)
// prune the redundant half.
inline std::vector<std::pair<size_t, size_t>> rb_pairs(AlgebraKind kind, size_t dim) {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            if (kind == AlgebraKind::Lie && j <= i) continue;
            if (kind == AlgebraKind::Jordan && j < i) continue;
            out.emplace_back(i, j);
        }
    return out;
}

template <typename S>
RBReport<S> check_rb(const AlgebraSpec<S>& spec, const Matrix<S>& r, const S& lambda) {
    RBReport<S> report;
    for (auto [i, j] : rb_pairs(spec.kind(), spec.dim())) {
        Vec<S> res = rb_residual(spec, r, lambda, i, j);
        bool zero = true;
        for (const auto& x : res)
            if (!x.is_zero()) zero = false;
        if (!zero) {
            report.pass = false;
            report.residuals.push_back({i, j, std::move(res)});
        }
    }
    return report;
}

template <typename S>
Matrix<S> conjugate(const Matrix<S>& r, const Automorphism<S>& sigma) {
    return sigma.matrix() * r * sigma.inverse_matrix();
}

// --- classification by kernel dimension --------------------------------------

struct Classification {
    size_t kernel_dim = 0;
    std::string kernel_tag;          // named ideal/subalgebra tag or "other"
    std::optional<std::string> kernel_alpha;
    std::string image_tag;
    std::optional<std::string> image_alpha;
    bool kernel_abelian = true;
    std::string bucket;              // dim3 | dim2-abelian | dim2-nonabelian | dim1 | nondegenerate | zero
    std::vector<std::string> kernel_basis_text;
};

template <typename S>
std::string vector_text(const AlgebraSpec<S>& spec, const Vec<S>& v);

// Refuses non-RB operators: the buckets only mean something for verified ones.
template <typename S>
Classification classify(const AlgebraSpec<S>& spec, const Matrix<S>& r, const S& lambda) {
    auto report = check_rb(spec, r, lambda);
    if (!report.pass)
        throw std::domain_error("classify: operator fails the Rota-Baxter identity");
    Classification cls;
    Subspace<S> ker = kernel_basis(r, spec.zero(), spec.one());
    Subspace<S> im = image_basis(r);
    cls.kernel_dim = ker.dim();
    auto kflags = subspace_ops(spec, ker);
    cls.kernel_abelian = kflags.is_abelian;
    auto tag_of = [&](const Subspace<S>& sub) -> std::pair<std::string, std::optional<std::string>> {
        if (spec.name() == "h4minus" || spec.name() == "h4plus") {
            auto flags = subspace_ops(spec, sub);
            if (flags.is_ideal) {
                auto t = identify_ideal(spec, sub);
                return {t.tag, t.alpha};
            }
            if (flags.is_subalgebra) return {"subalgebra", std::nullopt};
            return {"other", std::nullopt};
        }
        auto flags = subspace_ops(spec, sub);
        if (flags.is_ideal) return {"ideal", std::nullopt};
        if (flags.is_subalgebra) return {"subalgebra", std::nullopt};
        return {"other", std::nullopt};
    };
    if (ker.dim() > 0 && ker.dim() < spec.dim()) {
        auto [t, a] = tag_of(ker);
        cls.kernel_tag = t;
        cls.kernel_alpha = a;
    } else {
        cls.kernel_tag = ker.dim() == 0 ? "trivial" : "everything";
    }
    if (im.dim() > 0 && im.dim() < spec.dim()) {
        auto [t, a] = tag_of(im);
        cls.image_tag = t;
        cls.image_alpha = a;
    } else {
        cls.image_tag = im.dim() == 0 ? "trivial" : "everything";
    }
    size_t n = spec.dim();
    if (ker.dim() == n) cls.bucket = "zero";
    else if (ker.dim() == 0) cls.bucket = "nondegenerate";
    else if (ker.dim() == n - 1) cls.bucket = "dim" + std::to_string(n - 1);
    else if (ker.dim() == n - 2) cls.bucket = cls.kernel_abelian ? "dim2-abelian" : "dim2-nonabelian";
    else cls.bucket = "dim" + std::to_string(ker.dim());
    for (const auto& row : ker.basis()) cls.kernel_basis_text.push_back(vector_text(spec, row));
    return cls;
}

// Readable linear-combination form, e.g. "1 + 2*f" over the basis labels.
template <typename S>
std::string vector_text(const AlgebraSpec<S>& spec, const Vec<S>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::string coef = v[i].to_string();
        std::string part;
        if (coef == "1") part = spec.basis_labels()[i];
        else if (coef == "-1") part = "-" + spec.basis_labels()[i];
        else part = coef + "*" + spec.basis_labels()[i];
        if (out.empty()) out = part;
        else if (!part.empty() && part[0] == '-') out += " - " + part.substr(1);
        else out += " + " + part;
    }
    return out.empty() ? "0" : out;
}

}  // namespace rbh4
