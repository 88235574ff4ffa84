#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbh4/polynomial.hpp"

namespace rbh4 {

// Rational function num / (f1 * f2 * ...). Denominator factors are kept as a
// list of nonconstant polynomials; the enclosing constraint context is
// responsible for declaring each of them nonzero. No multivariate gcd is ever
// taken: factors cancel only by exact division, and equality is decided by
// cross-multiplication, so reduction is an optimization, never a correctness
// requirement.
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(const Rational& c) : num_(c) {}
    RatFunc(long long c) : num_(Rational(c)) {}
    RatFunc(Polynomial p) : num_(std::move(p)) {}

    static RatFunc variable(const std::string& name) { return RatFunc(Polynomial::variable(name)); }

    static RatFunc fraction(Polynomial num, std::vector<Polynomial> den_factors) {
        RatFunc r;
        r.num_ = std::move(num);
        r.den_ = std::move(den_factors);
        r.normalize();
        return r;
    }

    const Polynomial& num() const { return num_; }
    const std::vector<Polynomial>& den_factors() const { return den_; }
    Polynomial den_product() const {
        Polynomial d(1);
        for (const auto& f : den_) d *= f;
        return d;
    }

    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return combined(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return combined(a, b, true); }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        RatFunc r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
        r.normalize();
        return r;
    }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        RatFunc r;
        r.num_ = den_product();
        if (num_.is_constant()) {
            r.num_ *= Polynomial(num_.constant_value().inverse());
        } else {
            r.den_ = {num_};
        }
        r.normalize();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    // Cross-multiplied equality: n1*d2 == n2*d1.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_product() == b.num_ * a.den_product();
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    template <typename S, typename ValueOf, typename FromRational>
    S eval(const ValueOf& value_of, const FromRational& from_rational) const {
        S n = num_.template eval<S>(value_of, from_rational);
        for (const auto& f : den_) {
            S d = f.template eval<S>(value_of, from_rational);
            if (d.is_zero())
                throw std::domain_error("RatFunc: denominator " + f.to_string() +
                                        " vanishes at the given assignment");
            n = n / d;
        }
        return n;
    }

    RatFunc substituted(const std::string& name, const RatFunc& value) const {
        auto from_rat = [](const Rational& c) { return RatFunc(c); };
        auto lift = [](const std::string& v) { return RatFunc::variable(v); };
        RatFunc n = num_.substituted(name, value, from_rat, lift);
        for (const auto& f : den_) {
            RatFunc d = f.substituted(name, value, from_rat, lift);
            if (d.is_zero())
                throw std::domain_error("RatFunc: substitution makes denominator vanish");
            n = n / d;
        }
        return n;
    }

    bool mentions(const std::string& name) const {
        if (num_.mentions(name)) return true;
        for (const auto& f : den_)
            if (f.mentions(name)) return true;
        return false;
    }

    std::string to_string() const {
        if (den_.empty()) return num_.to_string();
        std::string d;
        for (const auto& f : den_) {
            if (!d.empty()) d += "*";
            d += f.term_count() > 1 ? "(" + f.to_string() + ")" : f.to_string();
        }
        std::string n = num_.to_string();
        if (num_.term_count() > 1) n = "(" + n + ")";
        return n + "/" + (den_.size() > 1 ? "(" + d + ")" : d);
    }

  private:
    Polynomial num_;
    std::vector<Polynomial> den_;  // nonconstant factors only, canonically sorted

    static RatFunc combined(const RatFunc& a, const RatFunc& b, bool subtract) {
        // denominator = factor-multiset union (max multiplicity per factor)
        RatFunc r;
        std::vector<Polynomial> uni = a.den_;
        std::vector<Polynomial> extra_b = b.den_;  // factors of b not in the union yet
        for (const auto& f : a.den_) {
            auto it = std::find(extra_b.begin(), extra_b.end(), f);
            if (it != extra_b.end()) extra_b.erase(it);
        }
        uni.insert(uni.end(), extra_b.begin(), extra_b.end());

        auto complement = [&uni](const std::vector<Polynomial>& den) {
            std::vector<Polynomial> rest = uni;
            for (const auto& f : den) {
                auto it = std::find(rest.begin(), rest.end(), f);
                if (it != rest.end()) rest.erase(it);
            }
            Polynomial prod(1);
            for (const auto& f : rest) prod *= f;
            return prod;
        };
        Polynomial na = a.num_ * complement(a.den_);
        Polynomial nb = b.num_ * complement(b.den_);
        r.num_ = subtract ? na - nb : na + nb;
        r.den_ = std::move(uni);
        r.normalize();
        return r;
    }

    void normalize() {
        if (num_.is_zero()) { den_.clear(); return; }
        // fold constant factors into the numerator
        std::vector<Polynomial> kept;
        for (auto& f : den_) {
            if (f.is_zero()) throw std::domain_error("RatFunc: zero denominator factor");
            if (f.is_constant()) num_ *= Polynomial(f.constant_value().inverse());
            else kept.push_back(std::move(f));
        }
        den_ = std::move(kept);
        // syntactic cancellation by exact division
        bool changed = true;
        while (changed && !num_.is_zero()) {
            changed = false;
            for (auto it = den_.begin(); it != den_.end(); ++it) {
                if (auto q = num_.divided_by(*it)) {
                    num_ = std::move(*q);
                    den_.erase(it);
                    changed = true;
                    break;
                }
            }
        }
        if (num_.is_zero()) den_.clear();
        std::sort(den_.begin(), den_.end());
    }
};

}  // namespace rbh4
