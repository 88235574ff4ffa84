#pragma once

#include <string>

#include "rbh4/fp.hpp"
#include "rbh4/rational.hpp"
#include "rbh4/ratfunc.hpp"

namespace rbh4 {

// Field contexts: the little factory each scalar type needs so that generic
// code can embed integers/rationals and parse text. Fp carries its modulus
// here; the others are stateless.

struct QCtx {
    using Scalar = Rational;
    Rational from_int(long long v) const { return Rational(v); }
    Rational from_rational(const Rational& r) const { return r; }
    Rational parse(const std::string& s) const { return Rational::parse(s); }
};

struct FpCtx {
    using Scalar = Fp;
    long long p;
    Fp from_int(long long v) const { return Fp(v, p); }
    Fp from_rational(const Rational& r) const {
        Fp n(r.num().to_ll() % p, p);
        Fp d(r.den().to_ll() % p, p);
        return n / d;
    }
    Fp parse(const std::string& s) const { return Fp::parse(s, p); }
};

struct RFCtx {
    using Scalar = RatFunc;
    RatFunc from_int(long long v) const { return RatFunc(v); }
    RatFunc from_rational(const Rational& r) const { return RatFunc(r); }
    RatFunc parse(const std::string&) const {
        throw std::invalid_argument("RatFunc: parsing from text not supported");
    }
};

}  // namespace rbh4
