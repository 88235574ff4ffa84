#pragma once

#include <stdexcept>
#include <string>

namespace rbh4 {

// Element of the prime field F_p, p an odd prime. Arithmetic is mod p.
class Fp {
  public:
    Fp() : v_(0), p_(3) {}
    Fp(long long v, long long p) : p_(p) {
        check_modulus(p);
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    static void check_modulus(long long p) {
        if (p == 2) throw std::domain_error("Fp: characteristic 2 not supported");
        if (p < 3) throw std::domain_error("Fp: modulus must be an odd prime");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::domain_error("Fp: modulus " + std::to_string(p) + " is not prime");
    }

    static Fp parse(const std::string& s, long long p) {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("Fp: bad element \"" + s + "\"");
        return Fp(v, p);
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fp operator+(const Fp& a, const Fp& b) { a.match(b); return Fp(a.v_ + b.v_, a.p_); }
    friend Fp operator-(const Fp& a, const Fp& b) { a.match(b); return Fp(a.v_ - b.v_, a.p_); }
    friend Fp operator*(const Fp& a, const Fp& b) { a.match(b); return Fp(a.v_ * b.v_, a.p_); }
    Fp operator-() const { return Fp(-v_, p_); }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        long long t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return Fp(t, p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    friend bool operator==(const Fp& a, const Fp& b) { a.match(b); return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string to_string() const { return std::to_string(v_); }

  private:
    long long v_;
    long long p_;

    void match(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
    }
};

}  // namespace rbh4
