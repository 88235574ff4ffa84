#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbh4/linalg.hpp"

namespace rbh4 {

enum class AlgebraKind { Associative, Lie, Jordan };

inline std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Associative: return "associative";
        case AlgebraKind::Lie: return "lie";
        case AlgebraKind::Jordan: return "jordan";
    }
    return "?";
}

// A finite-dimensional algebra given by structure constants:
// basis_i * basis_j = sum_k c[i][j][k] basis_k.
template <typename S>
class AlgebraSpec {
  public:
    AlgebraSpec() = default;
    AlgebraSpec(std::string name, AlgebraKind kind, std::vector<std::string> basis,
                std::vector<S> constants, S zero, S one)
        : name_(std::move(name)), kind_(kind), basis_(std::move(basis)),
          c_(std::move(constants)), zero_(std::move(zero)), one_(std::move(one)) {
        if (c_.size() != basis_.size() * basis_.size() * basis_.size())
            throw std::invalid_argument("AlgebraSpec: structure tensor size mismatch");
    }

    const std::string& name() const { return name_; }
    AlgebraKind kind() const { return kind_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis_labels() const { return basis_; }
    const S& zero() const { return zero_; }
    const S& one() const { return one_; }
    const S& c(size_t i, size_t j, size_t k) const { return c_[(i * dim() + j) * dim() + k]; }
    S& c(size_t i, size_t j, size_t k) { return c_[(i * dim() + j) * dim() + k]; }

    Vec<S> basis_vector(size_t i) const {
        Vec<S> v(dim(), zero_);
        v[i] = one_;
        return v;
    }

    Vec<S> multiply(const Vec<S>& a, const Vec<S>& b) const {
        if (a.size() != dim() || b.size() != dim())
            throw std::invalid_argument("AlgebraSpec: vector dimension mismatch");
        Vec<S> out(dim(), zero_);
        for (size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < dim(); ++j) {
                if (b[j].is_zero()) continue;
                S ab = a[i] * b[j];
                for (size_t k = 0; k < dim(); ++k) {
                    if (c(i, j, k).is_zero()) continue;
                    out[k] = out[k] + ab * c(i, j, k);
                }
            }
        }
        return out;
    }

    // Product of basis elements as a vector.
    Vec<S> basis_product(size_t i, size_t j) const {
        Vec<S> out(dim(), zero_);
        for (size_t k = 0; k < dim(); ++k) out[k] = c(i, j, k);
        return out;
    }

    // The kind's defining laws, checked on all basis tuples.
    void validate() const {
        size_t n = dim();
        if (kind_ == AlgebraKind::Associative) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    for (size_t k = 0; k < n; ++k) {
                        Vec<S> l = multiply(basis_product(i, j), basis_vector(k));
                        Vec<S> r = multiply(basis_vector(i), basis_product(j, k));
                        if (l != r) throw std::domain_error(name_ + ": associator does not vanish");
                    }
        } else if (kind_ == AlgebraKind::Lie) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    for (size_t k = 0; k < n; ++k) {
                        if (!(c(i, j, k) + c(j, i, k)).is_zero())
                            throw std::domain_error(name_ + ": bracket not antisymmetric");
                    }
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    for (size_t k = 0; k < n; ++k) {
                        Vec<S> s = multiply(basis_product(i, j), basis_vector(k));
                        Vec<S> t = multiply(basis_product(j, k), basis_vector(i));
                        Vec<S> u = multiply(basis_product(k, i), basis_vector(j));
                        for (size_t m = 0; m < n; ++m)
                            if (!(s[m] + t[m] + u[m]).is_zero())
                                throw std::domain_error(name_ + ": Jacobi identity fails");
                    }
        } else {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    for (size_t k = 0; k < n; ++k)
                        if (c(i, j, k) != c(j, i, k))
                            throw std::domain_error(name_ + ": product not commutative");
        }
    }

    AlgebraSpec scaled_product(const S& factor) const {
        AlgebraSpec r = *this;
        for (auto& x : r.c_) x = x * factor;
        return r;
    }

  private:
    std::string name_;
    AlgebraKind kind_ = AlgebraKind::Associative;
    std::vector<std::string> basis_;
    std::vector<S> c_;
    S zero_;
    S one_;
};

// a,b -> ab - ba on the same space.
template <typename S>
AlgebraSpec<S> adjoint_minus(const AlgebraSpec<S>& a) {
    if (a.kind() != AlgebraKind::Associative)
        throw std::invalid_argument("adjoint_minus: input must be associative");
    size_t n = a.dim();
    std::vector<S> c;
    c.reserve(n * n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) c.push_back(a.c(i, j, k) - a.c(j, i, k));
    AlgebraSpec<S> out(a.name() + "^(-)", AlgebraKind::Lie, a.basis_labels(), std::move(c),
                       a.zero(), a.one());
    out.validate();
    return out;
}

// a,b -> (ab + ba) / 2; requires char != 2.
template <typename S>
AlgebraSpec<S> adjoint_plus(const AlgebraSpec<S>& a) {
    if (a.kind() != AlgebraKind::Associative)
        throw std::invalid_argument("adjoint_plus: input must be associative");
    S two = a.one() + a.one();
    S half = two.inverse();
    size_t n = a.dim();
    std::vector<S> c;
    c.reserve(n * n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) c.push_back((a.c(i, j, k) + a.c(j, i, k)) * half);
    AlgebraSpec<S> out(a.name() + "^(+)", AlgebraKind::Jordan, a.basis_labels(), std::move(c),
                       a.zero(), a.one());
    out.validate();
    return out;
}

// --- concrete algebras -------------------------------------------------------
//
// Integer structure tables; halves only appear via adjoint_plus. Basis orders:
// h4       : 1, g, x, gx        (g^2 = 1, x^2 = 0, xg = -gx)
// h4minus  : 1, g, e, f         (e = x+gx, f = x-gx; [g,e] = 2e, [g,f] = -2f)
// h4plus   : 1, g, e, f         (symmetrized product)
// lm2      : h, e, f            ([h,e] = 2e, [h,f] = -2f, [e,f] = 0)
// lm3      : h, y, z            ([h,y] = 2y, [h,z] = [y,z] = 0)

template <typename Ctx>
AlgebraSpec<typename Ctx::Scalar> make_h4(const Ctx& ctx) {
    using S = typename Ctx::Scalar;
    const size_t n = 4;
    std::vector<S> c(n * n * n, ctx.from_int(0));
    auto set = [&](size_t i, size_t j, size_t k, long long v) {
        c[(i * n + j) * n + k] = ctx.from_int(v);
    };
    // unit
    for (size_t i = 0; i < n; ++i) { set(0, i, i, 1); if (i) set(i, 0, i, 1); }
    set(1, 1, 0, 1);   // g*g = 1
    set(1, 2, 3, 1);   // g*x = gx
    set(1, 3, 2, 1);   // g*gx = x
    set(2, 1, 3, -1);  // x*g = -gx
    set(3, 1, 2, -1);  // gx*g = -x
    // x*x = x*gx = gx*x = gx*gx = 0
    AlgebraSpec<S> spec("h4", AlgebraKind::Associative, {"1", "g", "x", "gx"}, std::move(c),
                        ctx.from_int(0), ctx.from_int(1));
    spec.validate();
    return spec;
}

template <typename Ctx>
AlgebraSpec<typename Ctx::Scalar> make_h4minus(const Ctx& ctx) {
    using S = typename Ctx::Scalar;
    const size_t n = 4;
    std::vector<S> c(n * n * n, ctx.from_int(0));
    auto set = [&](size_t i, size_t j, size_t k, long long v) {
        c[(i * n + j) * n + k] = ctx.from_int(v);
    };
    set(1, 2, 2, 2);   // [g,e] = 2e
    set(2, 1, 2, -2);
    set(1, 3, 3, -2);  // [g,f] = -2f
    set(3, 1, 3, 2);
    AlgebraSpec<S> spec("h4minus", AlgebraKind::Lie, {"1", "g", "e", "f"}, std::move(c),
                        ctx.from_int(0), ctx.from_int(1));
    spec.validate();
    return spec;
}

template <typename Ctx>
AlgebraSpec<typename Ctx::Scalar> make_lm2(const Ctx& ctx) {
    using S = typename Ctx::Scalar;
    const size_t n = 3;
    std::vector<S> c(n * n * n, ctx.from_int(0));
    auto set = [&](size_t i, size_t j, size_t k, long long v) {
        c[(i * n + j) * n + k] = ctx.from_int(v);
    };
    set(0, 1, 1, 2);   // [h,e] = 2e
    set(1, 0, 1, -2);
    set(0, 2, 2, -2);  // [h,f] = -2f
    set(2, 0, 2, 2);
    AlgebraSpec<S> spec("lm2", AlgebraKind::Lie, {"h", "e", "f"}, std::move(c),
                        ctx.from_int(0), ctx.from_int(1));
    spec.validate();
    return spec;
}

template <typename Ctx>
AlgebraSpec<typename Ctx::Scalar> make_lm3(const Ctx& ctx) {
    using S = typename Ctx::Scalar;
    const size_t n = 3;
    std::vector<S> c(n * n * n, ctx.from_int(0));
    auto set = [&](size_t i, size_t j, size_t k, long long v) {
        c[(i * n + j) * n + k] = ctx.from_int(v);
    };
    set(0, 1, 1, 2);   // [h,y] = 2y
    set(1, 0, 1, -2);
    AlgebraSpec<S> spec("lm3", AlgebraKind::Lie, {"h", "y", "z"}, std::move(c),
                        ctx.from_int(0), ctx.from_int(1));
    spec.validate();
    return spec;
}

// --- basis change between (1,g,x,gx) and (1,g,e,f) ---------------------------
//
// e = x+gx, f = x-gx, so x = (e+f)/2, gx = (e-f)/2.
// ef_to_xgx_matrix maps (1,g,e,f)-coordinates to (1,g,x,gx)-coordinates.

template <typename Ctx>
Matrix<typename Ctx::Scalar> ef_to_xgx_matrix(const Ctx& ctx) {
    using S = typename Ctx::Scalar;
    Matrix<S> p(4, ctx.from_int(0));
    p.at(0, 0) = ctx.from_int(1);
    p.at(1, 1) = ctx.from_int(1);
    p.at(2, 2) = ctx.from_int(1);   // e = x + gx
    p.at(3, 2) = ctx.from_int(1);
    p.at(2, 3) = ctx.from_int(1);   // f = x - gx
    p.at(3, 3) = ctx.from_int(-1);
    return p;
}

template <typename Ctx>
Matrix<typename Ctx::Scalar> xgx_to_ef_matrix(const Ctx& ctx) {
    return ef_to_xgx_matrix(ctx).inverted();
}

// Convert a vector of (1,g,e,f)-coordinates to (1,g,x,gx)-coordinates.
template <typename Ctx>
Vec<typename Ctx::Scalar> ef_coords_to_xgx(const Ctx& ctx, const Vec<typename Ctx::Scalar>& v) {
    return ef_to_xgx_matrix(ctx).apply(v);
}
template <typename Ctx>
Vec<typename Ctx::Scalar> xgx_coords_to_ef(const Ctx& ctx, const Vec<typename Ctx::Scalar>& v) {
    return xgx_to_ef_matrix(ctx).apply(v);
}

template <typename S>
AlgebraSpec<S> change_basis_spec(const AlgebraSpec<S>& spec, const Matrix<S>& to_old,
                                 const Matrix<S>& to_new, const std::vector<std::string>& labels,
                                 const std::string& name);

template <typename Ctx>
AlgebraSpec<typename Ctx::Scalar> make_h4plus(const Ctx& ctx) {
    auto plus = adjoint_plus(make_h4(ctx));
    // same space presented in the 1, g, e, f basis
    auto based = change_basis_spec(plus, ef_to_xgx_matrix(ctx), xgx_to_ef_matrix(ctx),
                                   std::vector<std::string>{"1", "g", "e", "f"}, "h4plus");
    based.validate();
    return based;
}

// Structure constants in a new basis: new_i * new_j = Q ( P(new_i) * P(new_j) )
// where P maps new coordinates to old and Q = P^-1.
template <typename S>
AlgebraSpec<S> change_basis_spec(const AlgebraSpec<S>& spec, const Matrix<S>& to_old,
                                 const Matrix<S>& to_new, const std::vector<std::string>& labels,
                                 const std::string& name) {
    size_t n = spec.dim();
    std::vector<S> c(n * n * n, spec.zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec<S> prod = to_new.apply(spec.multiply(to_old.column(i), to_old.column(j)));
            for (size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = prod[k];
        }
    return AlgebraSpec<S>(name, spec.kind(), labels, std::move(c), spec.zero(), spec.one());
}

// --- subspace classification -------------------------------------------------

template <typename S>
struct SubspaceFlags {
    bool is_subalgebra;
    bool is_ideal;
    bool is_abelian;  // all pairwise products vanish
};

template <typename S>
SubspaceFlags<S> subspace_ops(const AlgebraSpec<S>& spec, const Subspace<S>& sub) {
    if (sub.ambient_dim() != spec.dim())
        throw std::invalid_argument("subspace_ops: ambient dimension mismatch");
    SubspaceFlags<S> f{true, true, true};
    for (const auto& u : sub.basis())
        for (const auto& v : sub.basis()) {
            Vec<S> p = spec.multiply(u, v);
            bool zero = true;
            for (const auto& x : p)
                if (!x.is_zero()) zero = false;
            if (!zero) f.is_abelian = false;
            if (!sub.contains(p)) f.is_subalgebra = false;
        }
    for (size_t i = 0; i < spec.dim(); ++i)
        for (const auto& v : sub.basis()) {
            if (!sub.contains(spec.multiply(spec.basis_vector(i), v)) ||
                !sub.contains(spec.multiply(v, spec.basis_vector(i))))
                f.is_ideal = false;
        }
    return f;
}

// Tags for the named ideals of h4minus in the 1,g,e,f basis.
struct IdealTag {
    std::string tag;                   // "K", "K_e", "K_f", "I", "J_alpha", "other"
    std::optional<std::string> alpha;  // set for J_alpha
};

template <typename S>
IdealTag identify_ideal(const AlgebraSpec<S>& spec, const Subspace<S>& sub) {
    if (spec.name() != "h4minus" && spec.name() != "h4plus")
        throw std::invalid_argument("identify_ideal: expects the 1,g,e,f basis");
    auto flags = subspace_ops(spec, sub);
    if (!flags.is_ideal) throw std::domain_error("identify_ideal: subspace is not an ideal");
    const S zero = spec.zero();
    const S one = spec.one();
    auto unit = [&](size_t i) {
        Vec<S> v(4, zero);
        v[i] = one;
        return v;
    };
    auto span = [&](std::vector<Vec<S>> vs) { return Subspace<S>(4, std::move(vs)); };
    if (sub.dim() == 2) {
        if (sub == span({unit(2), unit(3)})) return {"K", std::nullopt};
        if (sub == span({unit(0), unit(2)})) return {"K_e", std::nullopt};
        if (sub == span({unit(0), unit(3)})) return {"K_f", std::nullopt};
        return {"other", std::nullopt};
    }
    if (sub.dim() == 3) {
        if (sub == span({unit(0), unit(2), unit(3)})) return {"I", std::nullopt};
        // J_alpha = span(alpha*1 + g, e, f): contains e and f, plus a vector with
        // a g component; alpha is read off the unique echelon row containing g.
        if (sub.contains(unit(2)) && sub.contains(unit(3))) {
            for (const auto& row : sub.basis()) {
                if (!row[1].is_zero()) {
                    S alpha = row[0] * row[1].inverse();
                    return {"J_alpha", alpha.to_string()};
                }
            }
        }
        return {"other", std::nullopt};
    }
    return {"other", std::nullopt};
}

// --- automorphisms ------------------------------------------------------------

// An invertible linear map certified multiplicative on all basis pairs.
template <typename S>
class Automorphism {
  public:
    Automorphism(const AlgebraSpec<S>& spec, Matrix<S> m) : m_(std::move(m)), minv_(m_.inverted()) {
        for (size_t i = 0; i < spec.dim(); ++i)
            for (size_t j = 0; j < spec.dim(); ++j) {
                Vec<S> lhs = m_.apply(spec.basis_product(i, j));
                Vec<S> rhs = spec.multiply(m_.column(i), m_.column(j));
                if (lhs != rhs)
                    throw std::domain_error("Automorphism: map is not multiplicative on basis pair (" +
                                            spec.basis_labels()[i] + "," + spec.basis_labels()[j] + ")");
            }
    }

    const Matrix<S>& matrix() const { return m_; }
    const Matrix<S>& inverse_matrix() const { return minv_; }

  private:
    Matrix<S> m_;
    Matrix<S> minv_;
};

// phi on h4minus/h4plus (1,g,e,f): 1->1, g->-g, e->-f, f->-e.
template <typename Ctx>
Automorphism<typename Ctx::Scalar> make_phi(const Ctx& ctx,
                                            const AlgebraSpec<typename Ctx::Scalar>& spec) {
    using S = typename Ctx::Scalar;
    Matrix<S> m(4, ctx.from_int(0));
    m.at(0, 0) = ctx.from_int(1);
    m.at(1, 1) = ctx.from_int(-1);
    m.at(3, 2) = ctx.from_int(-1);
    m.at(2, 3) = ctx.from_int(-1);
    return Automorphism<S>(spec, m);
}

// psi on lm2 (h,e,f): h->-h, e->-f, f->-e.
template <typename Ctx>
Automorphism<typename Ctx::Scalar> make_psi(const Ctx& ctx,
                                            const AlgebraSpec<typename Ctx::Scalar>& spec) {
    using S = typename Ctx::Scalar;
    Matrix<S> m(3, ctx.from_int(0));
    m.at(0, 0) = ctx.from_int(-1);
    m.at(2, 1) = ctx.from_int(-1);
    m.at(1, 2) = ctx.from_int(-1);
    return Automorphism<S>(spec, m);
}

}  // namespace rbh4
