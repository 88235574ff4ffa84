#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbh4/rbcheck.hpp"
#include "rbh4/scalar.hpp"

namespace rbh4 {

struct ConstraintViolation : std::runtime_error {
    explicit ConstraintViolation(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownFamily : std::runtime_error {
    explicit UnknownFamily(const std::string& id) : std::runtime_error("unknown family: " + id) {}
};

// A single constraint atom over the family parameters (and lambda).
struct ConstraintAtom {
    enum class Kind { NonZero, Zero, AnyNonZero };
    Kind kind;
    std::vector<Polynomial> polys;

    std::string text() const {
        std::string inner;
        for (const auto& p : polys) {
            if (!inner.empty()) inner += ", ";
            inner += p.to_string();
        }
        switch (kind) {
            case Kind::NonZero: return "nonzero(" + inner + ")";
            case Kind::Zero: return "zero(" + inner + ")";
            case Kind::AnyNonZero: return "any-nonzero(" + inner + ")";
        }
        return "?";
    }
};

// A parametric operator family: a matrix of rational functions in the
// parameters and lambda over one of the catalog algebras, plus its guards.
struct Family {
    std::string id;
    std::string algebra;  // h4 | h4minus | h4plus | lm2 | lm3
    std::string source;
    std::string note;
    std::vector<std::string> params;  // ordered; lambda is implicit
    Matrix<RatFunc> matrix;
    std::vector<ConstraintAtom> constraints;  // NonZero(lambda) always included
    std::map<std::string, Rational> sample;   // constraint-satisfying Q assignment
};

// Ledger entry for a family whose symbolic residual does not vanish.
struct Discrepancy {
    std::string family;
    size_t pair_i = 0, pair_j = 0;
    std::string residual_numerator;
    std::string note;
};

struct SymbolicVerdict {
    bool pass = false;
    RBReport<RatFunc> report;
    std::optional<Discrepancy> record;
};

// The embedded family catalog (defined in catalog_data.cpp). Order is the
// presentation order; ".fixed" variants directly follow their originals.
const std::vector<Family>& catalog();
const Family& find_family(const std::string& id);
std::vector<const Family*> families_for_algebra(const std::string& algebra_id);

template <typename Ctx>
AlgebraSpec<typename Ctx::Scalar> algebra_by_id(const std::string& id, const Ctx& ctx) {
    if (id == "h4") return make_h4(ctx);
    if (id == "h4minus") return make_h4minus(ctx);
    if (id == "h4plus") return make_h4plus(ctx);
    if (id == "lm2") return make_lm2(ctx);
    if (id == "lm3") return make_lm3(ctx);
    throw std::invalid_argument("unknown algebra id: " + id);
}

// Applies the family's zero-constraints as substitutions (each must be linear
// in some parameter with a constant coefficient) and returns the substituted
// matrix alongside the remaining constraints.
Matrix<RatFunc> zero_substituted_matrix(const Family& f);

// Full symbolic verification over the rational-function field: pass iff every
// basis-pair residual numerator is identically zero.
SymbolicVerdict verify_symbolic(const Family& f);

namespace detail {
template <typename S>
struct AssignmentLookup {
    const std::map<std::string, S>* values;
    S operator()(const std::string& name) const {
        auto it = values->find(name);
        if (it == values->end())
            throw std::invalid_argument("missing symbol in assignment: " + name);
        return it->second;
    }
};
}  // namespace detail

// Instantiate the family at a concrete assignment over the field of Ctx.
// `assignment` covers the parameters; lambda is passed separately and must be
// nonzero. Throws ConstraintViolation naming the first violated atom.
template <typename Ctx>
Matrix<typename Ctx::Scalar> instantiate(const Family& f,
                                         const std::map<std::string, typename Ctx::Scalar>& assignment,
                                         const typename Ctx::Scalar& lambda, const Ctx& ctx) {
    using S = typename Ctx::Scalar;
    std::map<std::string, S> values = assignment;
    values["lambda"] = lambda;
    auto value_of = detail::AssignmentLookup<S>{&values};
    auto from_rat = [&](const Rational& r) { return ctx.from_rational(r); };
    for (const auto& atom : f.constraints) {
        bool any_nonzero = false;
        for (const auto& p : atom.polys) {
            S v = p.template eval<S>(value_of, from_rat);
            if (!v.is_zero()) any_nonzero = true;
        }
        bool ok = true;
        switch (atom.kind) {
            case ConstraintAtom::Kind::NonZero: ok = any_nonzero; break;
            case ConstraintAtom::Kind::Zero: ok = !any_nonzero; break;
            case ConstraintAtom::Kind::AnyNonZero: ok = any_nonzero; break;
        }
        if (!ok)
            throw ConstraintViolation("family " + f.id + ": constraint " + atom.text() +
                                      " violated by the assignment");
    }
    size_t n = f.matrix.dim();
    Matrix<S> m(n, ctx.from_int(0));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            m.at(r, c) = f.matrix.at(r, c).template eval<S>(value_of, from_rat);
    return m;
}

// Exhaustive search over F_p assignments for one matching `target`;
// assignments are scanned in odometer order over the parameter list.
std::optional<std::map<std::string, long long>> membership(const Family& f, const Matrix<Fp>& target,
                                                           long long lambda, long long p);

// All distinct instances of the family over F_p at the given weight,
// in ascending row-major order.
std::vector<Matrix<Fp>> enumerate_instances(const Family& f, long long p, long long lambda);

// Row-major packed key for small F_p matrices (3 bits per entry).
uint64_t fp_matrix_key(const Matrix<Fp>& m);

inline constexpr size_t kMaxMembershipParams = 8;

}  // namespace rbh4
