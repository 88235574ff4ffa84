#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbh4/rational.hpp"

namespace rbh4 {

// Global order on variable symbols: "lambda" sorts after everything else,
// the rest by name. Keeps printed forms stable across runs.
inline bool symbol_less(const std::string& a, const std::string& b) {
    bool la = (a == "lambda"), lb = (b == "lambda");
    if (la != lb) return lb;
    return a < b;
}

// Sparse multivariate polynomial over the rationals. The variable table holds
// only symbols that actually occur; exponent vectors are dense per polynomial
// and aligned with the table. Two polynomials are equal iff, after this
// normalization, table and term map coincide.
class Polynomial {
  public:
    using Exponents = std::vector<uint32_t>;

    Polynomial() = default;
    Polynomial(const Rational& c) {
        if (!c.is_zero()) terms_[Exponents{}] = c;
    }
    Polynomial(long long c) : Polynomial(Rational(c)) {}

    static Polynomial variable(const std::string& name) {
        Polynomial p;
        p.vars_ = {name};
        p.terms_[Exponents{1}] = Rational(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(vars_.size(), 0));
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("Polynomial: not a constant");
        return terms_.begin()->second;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    size_t term_count() const { return terms_.size(); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combined(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combined(a, b, true); }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        auto vars = merged_vars(a.vars_, b.vars_);
        Polynomial av = a.aligned_to(vars), bv = b.aligned_to(vars);
        Polynomial r;
        r.vars_ = vars;
        for (const auto& [ea, ca] : av.terms_)
            for (const auto& [eb, cb] : bv.terms_) {
                Exponents e(vars.size());
                for (size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) r.terms_.emplace(std::move(e), ca * cb);
                else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        r.prune();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // Arbitrary but strict total order, for canonical containers of polynomials.
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
        return std::lexicographical_compare(
            a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
            [](const auto& x, const auto& y) {
                if (x.first != y.first) return x.first < y.first;
                return x.second < y.second;
            });
    }

    // Exact evaluation. The assignment must cover every variable that occurs.
    // `value_of` maps a symbol to a field element, `from_rational` embeds
    // coefficients; both are supplied by the caller's field context.
    template <typename S, typename ValueOf, typename FromRational>
    S eval(const ValueOf& value_of, const FromRational& from_rational) const {
        S acc = from_rational(Rational(0));
        std::vector<S> var_values;
        var_values.reserve(vars_.size());
        for (const auto& v : vars_) var_values.push_back(value_of(v));
        for (const auto& [e, c] : terms_) {
            S t = from_rational(c);
            for (size_t i = 0; i < vars_.size(); ++i)
                for (uint32_t k = 0; k < e[i]; ++k) t = t * var_values[i];
            acc = acc + t;
        }
        return acc;
    }

    // Largest term in lex order over the variable table (leading term for division).
    std::pair<Exponents, Rational> leading_term() const {
        if (is_zero()) throw std::logic_error("Polynomial: leading term of zero");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    // Exact multivariate division: returns q with *this == q * g, if it exists.
    // Works on raw aligned term maps; the lex-leading term of the remainder
    // strictly decreases, so the loop terminates.
    std::optional<Polynomial> divided_by(const Polynomial& g) const {
        if (g.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        if (is_zero()) return Polynomial();
        auto vars = merged_vars(vars_, g.vars_);
        std::map<Exponents, Rational> rem = aligned_to(vars).terms_;
        std::map<Exponents, Rational> gt = g.aligned_to(vars).terms_;
        std::map<Exponents, Rational> quo;
        auto glead = std::prev(gt.end());
        const Exponents& ge = glead->first;
        const Rational& gc = glead->second;
        while (!rem.empty()) {
            auto rlead = std::prev(rem.end());
            const Exponents re = rlead->first;
            const Rational rc = rlead->second;
            Exponents qe(vars.size());
            for (size_t i = 0; i < vars.size(); ++i) {
                if (re[i] < ge[i]) return std::nullopt;
                qe[i] = re[i] - ge[i];
            }
            Rational qc = rc / gc;
            quo[qe] = qc;
            for (const auto& [e2, c2] : gt) {
                Exponents e(vars.size());
                for (size_t i = 0; i < vars.size(); ++i) e[i] = qe[i] + e2[i];
                Rational delta = qc * c2;
                auto it = rem.find(e);
                if (it == rem.end()) {
                    rem.emplace(std::move(e), -delta);
                } else {
                    it->second -= delta;
                    if (it->second.is_zero()) rem.erase(it);
                }
            }
        }
        Polynomial q;
        q.vars_ = vars;
        q.terms_ = std::move(quo);
        q.prune();
        return q;
    }

    // Substitute one symbol by a value of any ring type V supporting + and *
    // (used with RationalFunction to apply solved zero-constraints).
    template <typename V, typename FromRational, typename VarLift>
    V substituted(const std::string& name, const V& value, const FromRational& from_rational,
                  const VarLift& lift_var) const {
        V acc = from_rational(Rational(0));
        for (const auto& [e, c] : terms_) {
            V t = from_rational(c);
            for (size_t i = 0; i < vars_.size(); ++i) {
                for (uint32_t k = 0; k < e[i]; ++k)
                    t = t * (vars_[i] == name ? value : lift_var(vars_[i]));
            }
            acc = acc + t;
        }
        return acc;
    }

    bool mentions(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name)
                for (const auto& [e, c] : terms_)
                    if (e[i] > 0) return true;
        return false;
    }

    // Degree in one variable.
    uint32_t degree_in(const std::string& name) const {
        uint32_t d = 0;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name)
                for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
        return d;
    }

    // For p linear in `name`: p = a*name + b with a a nonzero rational constant;
    // returns -b/a as a polynomial pair (numerator poly, constant a).
    // Used to turn a zero-constraint into a substitution.
    std::optional<std::pair<Polynomial, Rational>> linear_coefficient(const std::string& name) const {
        if (degree_in(name) != 1) return std::nullopt;
        size_t idx = vars_.size();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) idx = i;
        Polynomial coeff, rest;
        coeff.vars_ = vars_;
        rest.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            Exponents e2 = e;
            if (e[idx] == 1) {
                e2[idx] = 0;
                coeff.terms_[e2] = c;
            } else {
                rest.terms_[e2] = c;
            }
        }
        coeff.prune();
        rest.prune();
        if (!coeff.is_constant()) return std::nullopt;
        return std::make_pair(rest, coeff.constant_value());
    }

    // Canonical text: monomials sorted by total degree, then lex on exponents,
    // both descending; explicit '*' and '^'.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<const std::pair<const Exponents, Rational>*> order;
        for (const auto& t : terms_) order.push_back(&t);
        std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
            uint64_t da = 0, db = 0;
            for (auto x : a->first) da += x;
            for (auto x : b->first) db += x;
            if (da != db) return da > db;
            return a->first > b->first;
        });
        std::string out;
        bool first = true;
        for (const auto* t : order) {
            Rational c = t->second;
            if (first) {
                if (c.is_negative()) { out += "-"; c = -c; }
            } else {
                out += c.is_negative() ? " - " : " + ";
                if (c.is_negative()) c = -c;
            }
            first = false;
            std::string mono;
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (t->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
            }
            if (mono.empty()) out += c.to_string();
            else if (c.is_one()) out += mono;
            else out += c.to_string() + "*" + mono;
        }
        return out;
    }

  private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;

    static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                                const std::vector<std::string>& b) {
        std::vector<std::string> m;
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m), symbol_less);
        m.erase(std::unique(m.begin(), m.end()), m.end());
        return m;
    }

    Polynomial aligned_to(const std::vector<std::string>& vars) const {
        Polynomial r;
        r.vars_ = vars;
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i], symbol_less);
            pos[i] = static_cast<size_t>(it - vars.begin());
        }
        for (const auto& [e, c] : terms_) {
            Exponents ne(vars.size(), 0);
            for (size_t i = 0; i < vars_.size(); ++i) ne[pos[i]] = e[i];
            r.terms_[ne] = c;
        }
        return r;
    }

    static Polynomial combined(const Polynomial& a, const Polynomial& b, bool subtract) {
        auto vars = merged_vars(a.vars_, b.vars_);
        Polynomial r = a.aligned_to(vars);
        Polynomial bv = b.aligned_to(vars);
        for (const auto& [e, c] : bv.terms_) {
            Rational add = subtract ? -c : c;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) r.terms_.emplace(e, add);
            else {
                it->second += add;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        r.prune();
        return r;
    }

    // Drop variables that no longer occur; keeps equality structural.
    void prune() {
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < vars_.size(); ++i)
                if (e[i] > 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
        std::vector<std::string> nv;
        std::vector<size_t> keep;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) { nv.push_back(vars_[i]); keep.push_back(i); }
        std::map<Exponents, Rational> nt;
        for (const auto& [e, c] : terms_) {
            Exponents ne(keep.size());
            for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
            nt.emplace(std::move(ne), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }
};

}  // namespace rbh4
