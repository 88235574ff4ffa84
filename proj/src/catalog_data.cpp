#include "rbh4/catalog.hpp"

#include <array>

// The operator-family catalog. Families are transcribed from the source
// classification tables exactly as printed, including suspected misprints;
// verify_symbolic is the arbiter. Where a printed family fails symbolically
// and a minimal correction makes the residual vanish, the corrected form is
// stored as a second entry with suffix ".fixed" -- the original is never
// altered. Guard disjunctions that mix nonzero and zero conditions are split
// into sibling variants sharing an id prefix.

namespace rbh4 {
namespace {

RatFunc V(const char* name) { return RatFunc::variable(name); }
Polynomial PV(const char* name) { return Polynomial::variable(name); }

using Col = std::vector<RatFunc>;

Col vadd(const Col& a, const Col& b) {
    Col r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}
Col vscale(const RatFunc& c, const Col& v) {
    Col r = v;
    for (auto& x : r) x = c * x;
    return r;
}

class FB {
  public:
    FB(std::string id, std::string algebra, std::string source, size_t dim)
        : dim_(dim) {
        f_.id = std::move(id);
        f_.algebra = std::move(algebra);
        f_.source = std::move(source);
        f_.matrix = Matrix<RatFunc>(dim, RatFunc(0));
        f_.constraints.push_back({ConstraintAtom::Kind::NonZero, {PV("lambda")}});
    }
    FB& pars(std::initializer_list<const char*> names) {
        for (auto n : names) f_.params.emplace_back(n);
        return *this;
    }
    // images[j] = coordinates of the image of basis vector j
    FB& cols(std::vector<Col> images) {
        for (size_t j = 0; j < dim_; ++j)
            for (size_t r = 0; r < dim_; ++r) f_.matrix.at(r, j) = images[j][r];
        return *this;
    }
    FB& nz(const RatFunc& p) {
        f_.constraints.push_back({ConstraintAtom::Kind::NonZero, {p.num()}});
        return *this;
    }
    FB& anynz(std::initializer_list<RatFunc> ps) {
        ConstraintAtom a{ConstraintAtom::Kind::AnyNonZero, {}};
        for (const auto& p : ps) a.polys.push_back(p.num());
        f_.constraints.push_back(std::move(a));
        return *this;
    }
    FB& zero(const RatFunc& p) {
        f_.constraints.push_back({ConstraintAtom::Kind::Zero, {p.num()}});
        return *this;
    }
    FB& note(std::string n) {
        f_.note = std::move(n);
        return *this;
    }
    FB& sam(std::initializer_list<std::pair<const char*, long long>> vals) {
        for (const auto& [k, v] : vals) f_.sample[k] = Rational(v);
        return *this;
    }
    Family out() { return std::move(f_); }

  private:
    Family f_;
    size_t dim_;
};

// Images given over the basis (1, h, e, f) with h = alpha*1 + g, expressed as
// an operator matrix over (1, g, e, f).
std::vector<Col> from_alpha_basis(const RatFunc& alpha, std::array<Col, 4> img) {
    auto to_gef = [&](const Col& c) {
        return Col{c[0] + c[1] * alpha, c[1], c[2], c[3]};
    };
    Col i1 = to_gef(img[0]), ih = to_gef(img[1]), ie = to_gef(img[2]), iff = to_gef(img[3]);
    Col ig = vadd(ih, vscale(RatFunc(-1) * alpha, i1));
    return {i1, ig, ie, iff};
}

// Images given over the basis (1, h, e, f) with h = g + gamma*f.
std::vector<Col> from_gammaf_basis(const RatFunc& gamma, std::array<Col, 4> img) {
    auto to_gef = [&](const Col& c) {
        return Col{c[0], c[1], c[2], c[3] + c[1] * gamma};
    };
    Col i1 = to_gef(img[0]), ih = to_gef(img[1]), ie = to_gef(img[2]), iff = to_gef(img[3]);
    Col ig = vadd(ih, vscale(RatFunc(-1) * gamma, iff));
    return {i1, ig, ie, iff};
}

std::vector<Family> build_catalog() {
    std::vector<Family> cat;
    const RatFunc L = V("lambda");
    const Rational half(1, 2);

    // ---- associative families on h4, basis (1, g, x, gx) -------------------
    {
        cat.push_back(FB("assoc.a", "h4", "assoc-h4", 4)
                          .cols({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -L, 0}, {0, 0, 0, -L}})
                          .out());
        cat.push_back(FB("assoc.b", "h4", "assoc-h4", 4)
                          .cols({{-L, 0, 0, 0}, {0, -L, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})
                          .out());
        cat.push_back(FB("assoc.c", "h4", "assoc-h4", 4)
                          .cols({{-L, 0, 0, 0}, {0, -L, 0, 0}, {0, 0, -L, 0}, {0, 0, 0, -L}})
                          .out());
        RatFunc p1 = V("p1"), p2 = V("p2"), p3 = V("p3");
        cat.push_back(FB("assoc.d", "h4", "assoc-h4", 4)
                          .pars({"p1", "p2", "p3"})
                          .cols({{0, 0, 0, 0},
                                 {-p1, p1, RatFunc(-1) * (L + p1) * (L + p1 + p2) / p3,
                                  (L + p1) * (L + p2) / p3},
                                 {-p3, p3, RatFunc(-1) * (RatFunc(2) * L + p1 + p3), L + p2},
                                 {-p3, p3, RatFunc(-1) * (L + p1 + p2), p2}})
                          .nz(p3)
                          .note("x-coefficient of the x-image reads 2*lambda+p1+p3; the twin "
                                "family uses 2*lambda+p1+p2 there")
                          .sam({{"p1", 1}, {"p2", 1}, {"p3", 1}})
                          .out());
        cat.push_back(FB("assoc.d.fixed", "h4", "assoc-h4", 4)
                          .pars({"p1", "p2", "p3"})
                          .cols({{0, 0, 0, 0},
                                 {-p1, p1, RatFunc(-1) * (L + p1) * (L + p1 + p2) / p3,
                                  (L + p1) * (L + p2) / p3},
                                 {-p3, p3, RatFunc(-1) * (RatFunc(2) * L + p1 + p2), L + p2},
                                 {-p3, p3, RatFunc(-1) * (L + p1 + p2), p2}})
                          .nz(p3)
                          .note("x-coefficient of the x-image corrected to 2*lambda+p1+p2, "
                                "matching the twin family")
                          .sam({{"p1", 1}, {"p2", 1}, {"p3", 1}})
                          .out());
        cat.push_back(FB("assoc.e", "h4", "assoc-h4", 4)
                          .pars({"p1", "p2", "p3"})
                          .cols({{-L, 0, 0, 0},
                                 {L + p1, p1, RatFunc(-1) * (L + p1) * (L + p1 + p2) / p3,
                                  (L + p1) * (L + p2) / p3},
                                 {p3, p3, RatFunc(-1) * (RatFunc(2) * L + p1 + p2), L + p2},
                                 {p3, p3, RatFunc(-1) * (L + p1 + p2), p2}})
                          .nz(p3)
                          .sam({{"p1", 1}, {"p2", 1}, {"p3", 1}})
                          .out());
        cat.push_back(FB("assoc.f", "h4", "assoc-h4", 4)
                          .pars({"p1", "p2"})
                          .cols({{-L, 0, 0, 0},
                                 {L, 0, p1, p1 * p2 / (L + p2)},
                                 {0, 0, RatFunc(-1) * (L + p2), -p2},
                                 {0, 0, L + p2, p2}})
                          .nz(L + p2)
                          .sam({{"p1", 1}, {"p2", 1}})
                          .out());
        cat.push_back(FB("assoc.g", "h4", "assoc-h4", 4)
                          .pars({"p1", "p2"})
                          .cols({{-L, 0, 0, 0},
                                 {L, 0, L * (L + p1) / p2, L * (L + p1) / p2},
                                 {-p2, -p2, RatFunc(-1) * (RatFunc(2) * L + p1),
                                  RatFunc(-1) * (L + p1)},
                                 {p2, p2, L + p1, p1}})
                          .nz(p2)
                          .sam({{"p1", 1}, {"p2", 1}})
                          .out());
        cat.push_back(FB("assoc.h", "h4", "assoc-h4", 4)
                          .pars({"p1", "p2"})
                          .cols({{L * half, -(L * half), p1, p2},
                                 {L * half, -(L * half), -p2, p1},
                                 {0, 0, -(L * half), -(L * half)},
                                 {0, 0, -(L * half), -(L * half)}})
                          .note("fails on the pair (1,1) unless p1 = 0")
                          .sam({{"p1", 1}, {"p2", 1}})
                          .out());
        cat.push_back(FB("assoc.h.fixed", "h4", "assoc-h4", 4)
                          .pars({"p1", "p2"})
                          .cols({{L * half, -(L * half), p1, p2},
                                 {L * half, -(L * half), -p2, -p1},
                                 {0, 0, -(L * half), -(L * half)},
                                 {0, 0, -(L * half), -(L * half)}})
                          .note("gx-coefficient of the g-image negated")
                          .sam({{"p1", 1}, {"p2", 1}})
                          .out());
    }

    // ---- lm2 families, basis (h, e, f) --------------------------------------
    {
        RatFunc a1 = V("alpha1"), b1 = V("beta1"), g1 = V("gamma1");
        RatFunc a2 = V("alpha2"), b2 = V("beta2"), g2 = V("gamma2"), b3 = V("beta3");
        auto re112 = Col{a2, b2, g2};
        cat.push_back(FB("lm2.1.1", "lm2", "lie3-hef", 3)
                          .pars({"alpha2", "beta2", "gamma2"})
                          .cols({vscale((b2 + L) / a2, re112), re112, {0, 0, 0}})
                          .nz(a2)
                          .note("statement carries +1/alpha2*(beta2+lambda); the derivation "
                                "yields the opposite sign")
                          .sam({{"alpha2", 1}, {"beta2", 1}, {"gamma2", 1}})
                          .out());
        cat.push_back(FB("lm2.1.1.fixed", "lm2", "lie3-hef", 3)
                          .pars({"alpha2", "beta2", "gamma2"})
                          .cols({vscale(RatFunc(-1) * (b2 + L) / a2, re112), re112, {0, 0, 0}})
                          .nz(a2)
                          .note("h-image sign flipped to the derivation's value")
                          .sam({{"alpha2", 1}, {"beta2", 1}, {"gamma2", 1}})
                          .out());
        Col rf12{0, 0, -L};
        cat.push_back(FB("lm2.1.2", "lm2", "lie3-hef", 3)
                          .pars({"alpha2", "beta2", "gamma2"})
                          .cols({vscale(RatFunc(-1) / a2,
                                        vadd(vscale(b2 + L, re112), vscale(g2, rf12))),
                                 re112, rf12})
                          .nz(a2)
                          .sam({{"alpha2", 1}, {"beta2", 1}, {"gamma2", 1}})
                          .out());
        cat.push_back(FB("lm2.1.3", "lm2", "lie3-hef", 3)
                          .pars({"alpha1", "beta1", "gamma1"})
                          .cols({{a1, b1, g1}, {0, 0, 0}, {0, 0, 0}})
                          .sam({{"alpha1", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("lm2.1.4", "lm2", "lie3-hef", 3)
                          .pars({"beta1", "gamma1", "beta3"})
                          .cols({{-(L * half), b1, g1}, {0, 0, 0}, {0, b3, 0}})
                          .nz(b3)
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"beta3", 1}})
                          .out());
        cat.push_back(FB("lm2.1.5", "lm2", "lie3-hef", 3)
                          .pars({"alpha1", "beta1", "gamma1"})
                          .cols({{a1, b1, g1}, {0, 0, 0}, {0, 0, -L}})
                          .sam({{"alpha1", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("lm2.1.6", "lm2", "lie3-hef", 3)
                          .pars({"beta1", "gamma1", "beta3"})
                          .cols({{0, b1, g1}, {0, 0, 0}, {0, b3, -L}})
                          .nz(b3)
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"beta3", 1}})
                          .out());
        cat.push_back(FB("lm2.1.7", "lm2", "lie3-hef", 3)
                          .pars({"beta1", "gamma1", "beta3"})
                          .cols({{-L, b1, g1}, {0, -L, 0}, {0, b3, 0}})
                          .nz(b3)
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"beta3", 1}})
                          .out());
        cat.push_back(FB("lm2.1.8", "lm2", "lie3-hef", 3)
                          .pars({"alpha1", "beta1", "gamma1"})
                          .cols({{a1, b1, g1}, {0, -L, 0}, {0, 0, -L}})
                          .sam({{"alpha1", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("lm2.1.9", "lm2", "lie3-hef", 3)
                          .pars({"beta1", "gamma1", "beta3"})
                          .cols({{-(L * half), b1, g1}, {0, -L, 0}, {0, b3, -L}})
                          .nz(b3)
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"beta3", 1}})
                          .out());
        cat.push_back(FB("lm2.1.10", "lm2", "lie3-hef", 3)
                          .pars({"beta1", "gamma1", "beta2", "gamma2"})
                          .cols({{-(L * half), b1, g1},
                                 {0, b2, g2},
                                 {0, b2 * (b2 + L) / g2, b2}})
                          .nz(b2)
                          .nz(b2 + L)
                          .nz(g2)
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"beta2", 1}, {"gamma2", 1}})
                          .out());
    }

    // ---- lm3 families, basis (h, y, z) --------------------------------------
    {
        RatFunc a1 = V("alpha1"), b1 = V("beta1"), g1 = V("gamma1");
        RatFunc a2 = V("alpha2"), g2 = V("gamma2");
        RatFunc a3 = V("alpha3"), b3 = V("beta3"), g3 = V("gamma3");
        cat.push_back(FB("lm3.2.1", "lm3", "lie3-hyz", 3)
                          .pars({"alpha1", "beta1", "gamma1", "alpha3", "gamma3"})
                          .cols({{a1, b1, g1}, {0, 0, 0}, {a3, b1 * a3 / a1, g3}})
                          .nz(a1)
                          .nz(a1 + L)
                          .sam({{"alpha1", 1}, {"beta1", 1}, {"gamma1", 1}, {"alpha3", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.2", "lm3", "lie3-hyz", 3)
                          .pars({"beta1", "gamma1", "beta3", "gamma3"})
                          .cols({{0, b1, g1}, {0, 0, 0}, {0, b3, g3}})
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"beta3", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.3", "lm3", "lie3-hyz", 3)
                          .pars({"gamma1", "alpha3", "beta3", "gamma3"})
                          .cols({{0, 0, g1}, {0, 0, 0}, {a3, b3, g3}})
                          .sam({{"gamma1", 1}, {"alpha3", 1}, {"beta3", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.4", "lm3", "lie3-hyz", 3)
                          .pars({"alpha1", "beta1", "gamma1", "gamma3"})
                          .cols({{a1, b1, g1}, {0, -L, 0}, {0, 0, g3}})
                          .nz(a1)
                          .sam({{"alpha1", 1}, {"beta1", 1}, {"gamma1", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.5", "lm3", "lie3-hyz", 3)
                          .pars({"beta1", "gamma1", "beta3", "gamma3"})
                          .cols({{-L, b1, g1}, {0, -L, 0}, {0, b3, g3}})
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"beta3", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.6", "lm3", "lie3-hyz", 3)
                          .pars({"alpha1", "gamma1", "alpha3", "beta3", "gamma3"})
                          .cols({{a1, b3 * (a1 + L) / a3, g1}, {0, -L, 0}, {a3, b3, g3}})
                          .nz(a1)
                          .nz(a3)
                          .sam({{"alpha1", 1}, {"gamma1", 1}, {"alpha3", 1}, {"beta3", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.7", "lm3", "lie3-hyz", 3)
                          .pars({"beta1", "gamma1", "gamma2", "alpha3", "gamma3"})
                          .cols({{0, b1, g1}, {0, -L, g2}, {a3, a3 * b1 / L, g3}})
                          .note("statement omits the y,z-pair condition alpha3*gamma2 = 0")
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"gamma2", 1}, {"alpha3", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.7.fixed.a", "lm3", "lie3-hyz", 3)
                          .pars({"beta1", "gamma1", "gamma2", "alpha3", "gamma3"})
                          .cols({{0, b1, g1}, {0, -L, g2}, {a3, a3 * b1 / L, g3}})
                          .zero(a3)
                          .note("alpha3 = 0 branch of the omitted condition")
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"gamma2", 1}, {"alpha3", 0}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.7.fixed.b", "lm3", "lie3-hyz", 3)
                          .pars({"beta1", "gamma1", "gamma2", "alpha3", "gamma3"})
                          .cols({{0, b1, g1}, {0, -L, g2}, {a3, a3 * b1 / L, g3}})
                          .zero(g2)
                          .note("gamma2 = 0 branch of the omitted condition")
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"gamma2", 0}, {"alpha3", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.8", "lm3", "lie3-hyz", 3)
                          .pars({"beta1", "gamma1", "gamma2", "alpha3", "gamma3"})
                          .cols({{-L, b1, g1}, {0, 0, g2}, {a3, RatFunc(-1) * a3 * b1 / L, g3}})
                          .note("statement omits the y,z-pair condition alpha3*gamma2 = 0")
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"gamma2", 1}, {"alpha3", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.8.fixed.a", "lm3", "lie3-hyz", 3)
                          .pars({"beta1", "gamma1", "gamma2", "alpha3", "gamma3"})
                          .cols({{-L, b1, g1}, {0, 0, g2}, {a3, RatFunc(-1) * a3 * b1 / L, g3}})
                          .zero(a3)
                          .note("alpha3 = 0 branch of the omitted condition")
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"gamma2", 1}, {"alpha3", 0}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.8.fixed.b", "lm3", "lie3-hyz", 3)
                          .pars({"beta1", "gamma1", "gamma2", "alpha3", "gamma3"})
                          .cols({{-L, b1, g1}, {0, 0, g2}, {a3, RatFunc(-1) * a3 * b1 / L, g3}})
                          .zero(g2)
                          .note("gamma2 = 0 branch of the omitted condition")
                          .sam({{"beta1", 1}, {"gamma1", 1}, {"gamma2", 0}, {"alpha3", 1}, {"gamma3", 1}})
                          .out());
        cat.push_back(FB("lm3.2.9", "lm3", "lie3-hyz", 3)
                          .pars({"alpha1", "gamma1", "alpha2", "gamma2", "gamma3"})
                          .cols({{a1, RatFunc(-1) * a1 * (a1 + L) / a2, g1},
                                 {a2, RatFunc(-1) * (a1 + L), g2},
                                 {0, 0, g3}})
                          .nz(a2)
                          .sam({{"alpha1", 1}, {"gamma1", 1}, {"alpha2", 1}, {"gamma2", 1}, {"gamma3", 1}})
                          .out());
    }

    // ---- kernel dimension 3 on h4minus, basis (1, g, e, f) ------------------
    {
        RatFunc al = V("alpha"), ga = V("gamma");
        RatFunc a1 = V("alpha1"), a2 = V("alpha2"), a3 = V("alpha3"), a4 = V("alpha4");
        Col r1{a1, a2, a3, a4};
        cat.push_back(FB("ker3.i", "h4minus", "ker3", 4)
                          .pars({"alpha", "alpha1", "alpha2", "alpha3", "alpha4"})
                          .cols({r1, vscale(RatFunc(-1) * al, r1), {0, 0, 0, 0}, {0, 0, 0, 0}})
                          .anynz({a1, a2, a3, a4})
                          .sam({{"alpha", 1}, {"alpha1", 1}, {"alpha2", 0}, {"alpha3", 0}, {"alpha4", 0}})
                          .out());
        Col rf{a1, a2, a3, ga * a2 - L};
        cat.push_back(FB("ker3.ii", "h4minus", "ker3", 4)
                          .pars({"gamma", "alpha1", "alpha2", "alpha3"})
                          .cols({{0, 0, 0, 0}, vscale(RatFunc(-1) * ga, rf), {0, 0, 0, 0}, rf})
                          .anynz({a1, a2, a3, ga * a2 - L})
                          .sam({{"gamma", 1}, {"alpha1", 1}, {"alpha2", 0}, {"alpha3", 0}})
                          .out());
    }

    // ---- kernel dimension 2, abelian kernel containing a g-component --------
    {
        RatFunc al = V("alpha"), a1 = V("alpha1"), si = V("sigma");
        RatFunc xi = V("xi"), eta = V("eta"), a2 = V("alpha2"), b2 = V("beta2");
        cat.push_back(FB("ker2.ab1.i", "h4minus", "ker2-abelian-g", 4)
                          .pars({"alpha", "alpha1"})
                          .cols({{0, 0, 0, 0}, {0, 0, 0, 0}, {al, 0, -L, 0}, {a1, 0, 0, -L}})
                          .sam({{"alpha", 1}, {"alpha1", 1}})
                          .out());
        cat.push_back(FB("ker2.ab1.ii", "h4minus", "ker2-abelian-g", 4)
                          .pars({"alpha", "sigma"})
                          .cols({{0, 0, 0, 0}, {0, 0, 0, 0}, {al, si, -L, 0}, {0, 0, 0, -L}})
                          .sam({{"alpha", 1}, {"sigma", 1}})
                          .out());
        cat.push_back(FB("ker2.ab1.iii", "h4minus", "ker2-abelian-g", 4)
                          .pars({"alpha", "alpha1", "xi", "eta"})
                          .cols({{0, 0, 0, 0},
                                 {RatFunc(-1) * (xi * al + eta * a1), 0, xi * L, eta * L},
                                 {al, 0, -L, 0},
                                 {a1, 0, 0, -L}})
                          .anynz({xi, eta})
                          .note("guard printed with the letter nu; read as eta per the setup")
                          .sam({{"alpha", 1}, {"alpha1", 1}, {"xi", 1}, {"eta", 0}})
                          .out());
        Col re_iv{0, 0, -L, 0};
        Col rf_iv{a2, b2, b2 * xi, b2 * eta - L};
        cat.push_back(FB("ker2.ab1.iv", "h4minus", "ker2-abelian-g", 4)
                          .pars({"alpha2", "beta2", "xi", "eta"})
                          .cols({{0, 0, 0, 0},
                                 vadd(vscale(RatFunc(-1) * xi, re_iv), vscale(RatFunc(-1) * eta, rf_iv)),
                                 re_iv, rf_iv})
                          .nz(b2)
                          .anynz({xi, eta})
                          .note("guard printed with the letter nu; read as eta per the setup")
                          .sam({{"alpha2", 1}, {"beta2", 1}, {"xi", 1}, {"eta", 0}})
                          .out());
    }

    // ---- kernel dimension 2, abelian kernel inside 1,e,f --------------------
    {
        RatFunc ga = V("gamma"), eta = V("eta"), w1 = V("w1"), w2 = V("w2"), w3 = V("w3");
        RatFunc xi = V("xi"), nu = V("nu"), mu = V("mu"), ze = V("zeta");
        RatFunc b1 = V("beta1"), g1 = V("gamma1"), s1 = V("sigma1");
        RatFunc a1 = V("alpha1"), a2 = V("alpha2"), b2 = V("beta2"), al = V("alpha"), si = V("sigma");
        RatFunc we = V("we"), wf = V("wf");
        cat.push_back(FB("ker2.ab0.i", "h4minus", "ker2-abelian-i", 4)
                          .pars({"gamma", "eta", "w1", "w2", "w3"})
                          .cols({{-ga, 0, 0, 0}, {w1, -L, w2, w3}, {-eta, 0, 0, 0}, {1, 0, 0, 0}})
                          .nz(eta)
                          .sam({{"gamma", 1}, {"eta", 1}, {"w1", 1}, {"w2", 1}, {"w3", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.ii", "h4minus", "ker2-abelian-i", 4)
                          .pars({"w1", "w2", "w3"})
                          .cols({{0, 0, -L, 0}, {w1, -L, w2, w3}, {0, 0, -L, 0}, {0, 0, L, 0}})
                          .sam({{"w1", 1}, {"w2", 1}, {"w3", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.iii", "h4minus", "ker2-abelian-i", 4)
                          .pars({"gamma", "w1", "w2", "w3"})
                          .cols({{0, 0, 0, ga * L}, {w1, -L, w2, w3}, {0, 0, 0, L}, {0, 0, 0, -L}})
                          .sam({{"gamma", 1}, {"w1", 1}, {"w2", 1}, {"w3", 1}})
                          .out());
        Col rf_iv{xi, 0, nu, -L};
        cat.push_back(FB("ker2.ab0.iv", "h4minus", "ker2-abelian-i", 4)
                          .pars({"gamma", "zeta", "mu", "xi", "nu"})
                          .cols({vscale(RatFunc(-1) * ga, rf_iv),
                                 vadd(vscale(ze, rf_iv), Col{mu, 0, 0, 0}),
                                 {0, 0, 0, 0}, rf_iv})
                          .nz(mu)
                          .note("fails on the pair (1,g) unless gamma = 0")
                          .sam({{"gamma", 1}, {"zeta", 1}, {"mu", 1}, {"xi", 1}, {"nu", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.iv.fixed", "h4minus", "ker2-abelian-i", 4)
                          .pars({"gamma", "zeta", "mu", "xi", "nu"})
                          .cols({vscale(RatFunc(-1) * ga, rf_iv),
                                 vadd(vscale(ze, rf_iv), Col{mu, 0, 0, 0}),
                                 {0, 0, 0, 0}, rf_iv})
                          .nz(mu)
                          .zero(ga)
                          .note("gamma pinned to 0; the 1-image then vanishes")
                          .sam({{"gamma", 0}, {"zeta", 1}, {"mu", 1}, {"xi", 1}, {"nu", 1}})
                          .out());
        Col rf_v{xi, 1, b1, RatFunc(-1) * (L + s1)};
        cat.push_back(FB("ker2.ab0.v", "h4minus", "ker2-abelian-i", 4)
                          .pars({"gamma", "beta1", "sigma1", "xi", "mu"})
                          .cols({vscale(RatFunc(-1) * ga, rf_v),
                                 vadd(vscale(s1, rf_v), Col{mu, 0, 0, 0}),
                                 {0, 0, 0, 0}, rf_v})
                          .nz(mu)
                          .note("fails on the pairs (1,g) and (1,f) unless gamma = 0")
                          .sam({{"gamma", 1}, {"beta1", 1}, {"sigma1", 1}, {"xi", 1}, {"mu", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.v.fixed", "h4minus", "ker2-abelian-i", 4)
                          .pars({"gamma", "beta1", "sigma1", "xi", "mu"})
                          .cols({vscale(RatFunc(-1) * ga, rf_v),
                                 vadd(vscale(s1, rf_v), Col{mu, 0, 0, 0}),
                                 {0, 0, 0, 0}, rf_v})
                          .nz(mu)
                          .zero(ga)
                          .note("gamma pinned to 0; the 1-image then vanishes")
                          .sam({{"gamma", 0}, {"beta1", 1}, {"sigma1", 1}, {"xi", 1}, {"mu", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.vi", "h4minus", "ker2-abelian-i", 4)
                          .pars({"gamma", "sigma1", "beta1", "gamma1", "xi"})
                          .cols({{-ga, 0, 0, 0},
                                 {xi, s1, s1 * b1, s1 * g1},
                                 {0, 0, 0, 0},
                                 {1, 0, 0, 0}})
                          .note("fails on the pair (g,f) unless sigma1 = -lambda")
                          .sam({{"gamma", 1}, {"sigma1", 1}, {"beta1", 1}, {"gamma1", 1}, {"xi", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.vi.fixed", "h4minus", "ker2-abelian-i", 4)
                          .pars({"gamma", "sigma1", "beta1", "gamma1", "xi"})
                          .cols({{-ga, 0, 0, 0},
                                 {xi, s1, s1 * b1, s1 * g1},
                                 {0, 0, 0, 0},
                                 {1, 0, 0, 0}})
                          .zero(s1 + L)
                          .note("sigma1 pinned to -lambda, the value the g,f-pair forces")
                          .sam({{"gamma", 1}, {"sigma1", -1}, {"beta1", 1}, {"gamma1", 1}, {"xi", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.vii.a", "h4minus", "ker2-abelian-i", 4)
                          .pars({"xi", "alpha1", "beta1", "alpha2", "beta2"})
                          .cols({{0, 0, 0, 0}, {a2, 0, b2, xi * L}, {0, 0, 0, 0}, {a1, 0, b1, -L}})
                          .nz(b2 - xi * b1)
                          .note("first branch of the guard: beta2 != xi*beta1")
                          .sam({{"xi", 0}, {"alpha1", 0}, {"beta1", 0}, {"alpha2", 0}, {"beta2", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.vii.b", "h4minus", "ker2-abelian-i", 4)
                          .pars({"xi", "alpha1", "beta1", "alpha2", "beta2"})
                          .cols({{0, 0, 0, 0}, {a2, 0, b2, xi * L}, {0, 0, 0, 0}, {a1, 0, b1, -L}})
                          .zero(xi * a1 - a2)
                          .note("second branch of the guard: xi*alpha1 = alpha2")
                          .sam({{"xi", 1}, {"alpha1", 1}, {"beta1", 1}, {"alpha2", 1}, {"beta2", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.viii", "h4minus", "ker2-abelian-i", 4)
                          .pars({"gamma", "w1", "w2", "w3"})
                          .cols({{0, 0, 0, L * ga}, {w1, -L, w2, w3}, {0, 0, 0, 0}, {0, 0, 0, -L}})
                          .sam({{"gamma", 1}, {"w1", 1}, {"w2", 1}, {"w3", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.ix", "h4minus", "ker2-abelian-i", 4)
                          .pars({"sigma1", "w1", "w2", "w3"})
                          .cols({{0, 0, 0, 0}, {w1, s1, w2, w3}, {0, 0, 0, 0}, {0, 0, 0, -L}})
                          .sam({{"sigma1", 1}, {"w1", 1}, {"w2", 1}, {"w3", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.x", "h4minus", "ker2-abelian-i", 4)
                          .pars({"w1", "w2", "w3"})
                          .cols({{0, 0, 0, 0},
                                 {w1, -(L * half), w2, w3},
                                 {0, 0, 0, 0},
                                 {0, 0, RatFunc(-1) / L, 0}})
                          .sam({{"w1", 1}, {"w2", 1}, {"w3", 1}})
                          .out());
        Col r1_xi{al, si, we, wf};
        cat.push_back(FB("ker2.ab0.xi", "h4minus", "ker2-abelian-i", 4)
                          .pars({"sigma", "alpha", "we", "wf", "xi", "mu"})
                          .cols({r1_xi, vadd(vscale(xi, r1_xi), Col{mu, 0, 0, 0}),
                                 {0, 0, 0, 0}, {0, 0, 0, 0}})
                          .nz(si)
                          .nz(mu)
                          .note("the free kernel summand w spans the e and f directions")
                          .sam({{"sigma", 1}, {"alpha", 1}, {"we", 1}, {"wf", 1}, {"xi", 1}, {"mu", 1}})
                          .out());
        Col rg_xii{al, si, we, wf};
        cat.push_back(FB("ker2.ab0.xii", "h4minus", "ker2-abelian-i", 4)
                          .pars({"sigma", "alpha", "we", "wf", "xi", "mu"})
                          .cols({vadd(vscale(xi, rg_xii), Col{mu, 0, 0, 0}), rg_xii,
                                 {0, 0, 0, 0}, {0, 0, 0, 0}})
                          .nz(si)
                          .nz(mu)
                          .note("the free kernel summand w spans the e and f directions")
                          .sam({{"sigma", 1}, {"alpha", 1}, {"we", 1}, {"wf", 1}, {"xi", 1}, {"mu", 1}})
                          .out());
        cat.push_back(FB("ker2.ab0.xiii", "h4minus", "ker2-abelian-i", 4)
                          .pars({"alpha1", "beta1", "gamma2", "alpha2", "beta2"})
                          .cols({{a1, 0, b1, V("gamma2")},
                                 {a2, 0, b2, V("gamma2")},
                                 {0, 0, 0, 0}, {0, 0, 0, 0}})
                          .note("the f-coefficient gamma2 is printed identically in both the "
                                "1- and g-images")
                          .sam({{"alpha1", 1}, {"beta1", 1}, {"gamma2", 1}, {"alpha2", 1}, {"beta2", 1}})
                          .out());
    }

    // ---- kernel dimension 2, nonabelian kernel ------------------------------
    {
        RatFunc de = V("delta"), ga = V("gamma");
        RatFunc d1 = V("delta1"), d3 = V("delta3"), d4 = V("delta4");
        RatFunc s1 = V("sigma1"), s4 = V("sigma4"), xi = V("xi");
        Col rf{s1, 1, s4, ga - L};
        auto rg_of = [&](const Col& r1) {
            return vadd(vscale(RatFunc(-1) * de, r1), vscale(RatFunc(-1) * ga, rf));
        };
        {
            Col r1{d1, 0, 0, 0};
            cat.push_back(FB("ker2.nonab.i", "h4minus", "ker2-nonabelian", 4)
                              .pars({"delta", "gamma", "delta1", "sigma1", "sigma4"})
                              .cols({r1, rg_of(r1), {0, 0, 0, 0}, rf})
                              .nz(d1)
                              .sam({{"delta", 1}, {"gamma", 1}, {"delta1", 1}, {"sigma1", 1}, {"sigma4", 1}})
                              .out());
        }
        {
            Col r1{0, 0, d4, 0};
            cat.push_back(FB("ker2.nonab.ii", "h4minus", "ker2-nonabelian", 4)
                              .pars({"delta", "gamma", "delta4", "sigma1", "sigma4"})
                              .cols({r1, rg_of(r1), {0, 0, 0, 0}, rf})
                              .nz(d4)
                              .note("contradicts the 1,f-pair relation, which forces delta4 = 0 here")
                              .sam({{"delta", 1}, {"gamma", 1}, {"delta4", 1}, {"sigma1", 1}, {"sigma4", 1}})
                              .out());
        }
        {
            // R(1) = xi*(R(f) + lambda*f)
            Col r1 = vscale(xi, vadd(rf, Col{0, 0, 0, L}));
            cat.push_back(FB("ker2.nonab.iii", "h4minus", "ker2-nonabelian", 4)
                              .pars({"delta", "gamma", "xi", "sigma1", "sigma4"})
                              .cols({r1, rg_of(r1), {0, 0, 0, 0}, rf})
                              .nz(xi)
                              .note("contradicts the 1,f-pair relation, which forces xi = 0 here")
                              .sam({{"delta", 1}, {"gamma", 1}, {"xi", 1}, {"sigma1", 1}, {"sigma4", 1}})
                              .out());
        }
        {
            Col r1{d1, d3, d4, ga * d3};
            Col rf_l{0, 0, 0, -L};
            cat.push_back(FB("ker2.nonab.iv", "h4minus", "ker2-nonabelian", 4)
                              .pars({"delta", "gamma", "delta1", "delta3", "delta4"})
                              .cols({r1,
                                     vadd(vscale(RatFunc(-1) * de, r1), vscale(RatFunc(-1) * ga, rf_l)),
                                     {0, 0, 0, 0}, rf_l})
                              .nz(d3)
                              .sam({{"delta", 1}, {"gamma", 1}, {"delta1", 1}, {"delta3", 1}, {"delta4", 1}})
                              .out());
        }
        {
            Col r1{d1, 0, d4, 0};
            Col rf_l{s1, 0, s4, -L};
            cat.push_back(FB("ker2.nonab.v", "h4minus", "ker2-nonabelian", 4)
                              .pars({"delta", "gamma", "delta1", "delta4", "sigma1", "sigma4"})
                              .cols({r1,
                                     vadd(vscale(RatFunc(-1) * de, r1), vscale(RatFunc(-1) * ga, rf_l)),
                                     {0, 0, 0, 0}, rf_l})
                              .anynz({d1, d4})
                              .sam({{"delta", 1}, {"gamma", 1}, {"delta1", 1}, {"delta4", 0},
                                    {"sigma1", 1}, {"sigma4", 1}})
                              .out());
        }
    }

    // ---- kernel dimension 1, abelian image 1,e,f ----------------------------
    {
        RatFunc al = V("alpha"), a1 = V("alpha1"), a2 = V("alpha2");
        RatFunc be = V("beta"), b2 = V("beta2"), de = V("delta"), ga = V("gamma");
        RatFunc si = V("sigma"), mu = V("mu"), nu = V("nu");
        {
            Col r1{al, 0, 0, 0}, re{a1, 0, -L, 0}, rf{a2, 0, 0, -L};
            cat.push_back(FB("th0.i", "h4minus", "ker1-abelian", 4)
                              .pars({"alpha", "alpha1", "alpha2", "beta", "delta", "gamma"})
                              .cols({r1,
                                     vadd(vadd(vscale(be, r1), vscale(de, re)), vscale(ga, rf)),
                                     re, rf})
                              .nz(al)
                              .sam({{"alpha", 1}, {"alpha1", 1}, {"alpha2", 1}, {"beta", 1},
                                    {"delta", 1}, {"gamma", 1}})
                              .out());
        }
        cat.push_back(FB("th0.ii", "h4minus", "ker1-abelian", 4)
                          .pars({"alpha", "beta", "alpha2", "beta2", "sigma", "delta", "nu"})
                          .cols({{al, 0, be, 0},
                                 {si, 0, de, nu},
                                 {0, 0, 0, 0},
                                 {a2, 0, b2, -L}})
                          .nz(be * (nu * a2 + si * L) - al * (de * L + nu * b2))
                          .sam({{"alpha", 0}, {"beta", 1}, {"alpha2", 0}, {"beta2", 0},
                                {"sigma", 1}, {"delta", 0}, {"nu", 0}})
                          .out());
        cat.push_back(FB("th0.iii", "h4minus", "ker1-abelian", 4)
                          .pars({"alpha", "alpha1", "sigma", "mu", "nu"})
                          .cols({{0, 0, 0, 0},
                                 {si, 0, mu, nu},
                                 {al, 0, -L, 0},
                                 {a1, 0, 0, -L}})
                          .nz(L * si + al * mu + a1 * nu)
                          .sam({{"alpha", 0}, {"alpha1", 0}, {"sigma", 1}, {"mu", 0}, {"nu", 0}})
                          .out());
    }

    // ---- kernel dimension 1, image spanned by alpha*1+g, e, f ----------------
    {
        RatFunc al = V("alpha"), a1 = V("alpha1");
        RatFunc b1 = V("beta1"), g1 = V("gamma1"), b2 = V("beta2"), b3 = V("beta3");
        RatFunc xi = V("xi"), mu = V("mu"), nu = V("nu");
        cat.push_back(FB("th1.i", "h4minus", "ker1-a1g", 4)
                          .pars({"alpha", "xi", "mu", "nu", "beta3"})
                          .cols(from_alpha_basis(al, {Col{0, xi, mu, nu},
                                                      Col{0, 0, nu * b3 / xi, nu * L / xi},
                                                      Col{0, 0, 0, 0},
                                                      Col{0, 0, b3, -L}}))
                          .nz(xi)
                          .nz(nu)
                          .nz(b3)
                          .note("fails on the pair (1,f); no one-token correction found")
                          .sam({{"alpha", 1}, {"xi", 1}, {"mu", 1}, {"nu", 1}, {"beta3", 1}})
                          .out());
        cat.push_back(FB("th1.ii", "h4minus", "ker1-a1g", 4)
                          .pars({"alpha", "mu", "nu", "beta1", "gamma1"})
                          .cols(from_alpha_basis(al, {Col{0, 0, mu, nu},
                                                      Col{0, -L, b1, g1},
                                                      Col{0, 0, -L, 0},
                                                      Col{0, 0, -L, 0}}))
                          .nz(nu)
                          .note("f-image printed as -lambda*e; fails on the pair (1,g)")
                          .sam({{"alpha", 1}, {"mu", 1}, {"nu", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("th1.ii.fixed", "h4minus", "ker1-a1g", 4)
                          .pars({"alpha", "mu", "nu", "beta1", "gamma1"})
                          .cols(from_alpha_basis(al, {Col{0, 0, mu, nu},
                                                      Col{0, -L, b1, g1},
                                                      Col{0, 0, -L, 0},
                                                      Col{0, 0, 0, -L}}))
                          .nz(nu)
                          .note("f-image corrected to -lambda*f")
                          .sam({{"alpha", 1}, {"mu", 1}, {"nu", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("th1.iii", "h4minus", "ker1-a1g", 4)
                          .pars({"alpha", "alpha1", "beta1", "gamma1"})
                          .cols(from_alpha_basis(al, {Col{0, 0, 0, 0},
                                                      Col{0, a1, b1, g1},
                                                      Col{0, 0, -L, 0},
                                                      Col{0, 0, 0, -L}}))
                          .nz(a1)
                          .nz(a1 + L)
                          .sam({{"alpha", 1}, {"alpha1", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("th1.iv", "h4minus", "ker1-a1g", 4)
                          .pars({"alpha", "mu", "nu", "beta1", "gamma1"})
                          .cols(from_alpha_basis(al, {Col{0, 0, mu, nu},
                                                      Col{0, -L, b1, g1},
                                                      Col{0, 0, -L, 0},
                                                      Col{0, 0, 0, -L}}))
                          .sam({{"alpha", 1}, {"mu", 1}, {"nu", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("th1.v", "h4minus", "ker1-a1g", 4)
                          .pars({"alpha", "xi", "mu", "nu", "alpha1"})
                          .cols(from_alpha_basis(al, {Col{0, xi, mu, nu},
                                                      Col{0, a1, (a1 + L) * mu / xi, (a1 + L) * nu / xi},
                                                      Col{0, 0, -L, 0},
                                                      Col{0, 0, 0, -L}}))
                          .nz(xi)
                          .sam({{"alpha", 1}, {"xi", 1}, {"mu", 1}, {"nu", 1}, {"alpha1", 1}})
                          .out());
        cat.push_back(FB("th1.vi", "h4minus", "ker1-a1g", 4)
                          .pars({"alpha", "beta1", "gamma1", "beta3"})
                          .cols(from_alpha_basis(al, {Col{0, 0, 0, 0},
                                                      Col{0, -(L * half), b1, g1},
                                                      Col{0, 0, -L, 0},
                                                      Col{0, 0, b3, -L}}))
                          .nz(b3)
                          .sam({{"alpha", 1}, {"beta1", 1}, {"gamma1", 1}, {"beta3", 1}})
                          .out());
        cat.push_back(FB("th1.vii", "h4minus", "ker1-a1g", 4)
                          .pars({"alpha", "xi", "mu", "nu", "beta3"})
                          .cols(from_alpha_basis(al, {Col{0, xi, mu, nu},
                                                      Col{0, -(L * half),
                                                          (L * half * mu + b3 * nu) / xi,
                                                          L * half * nu / xi},
                                                      Col{0, 0, -L, 0},
                                                      Col{0, 0, b3, -L}}))
                          .nz(xi)
                          .nz(b3)
                          .note("fails on the pair (1,f); no one-token correction found")
                          .sam({{"alpha", 1}, {"xi", 1}, {"mu", 1}, {"nu", 1}, {"beta3", 1}})
                          .out());
        cat.push_back(FB("th1.viii", "h4minus", "ker1-a1g", 4)
                          .pars({"alpha", "beta1", "gamma1", "beta2"})
                          .cols(from_alpha_basis(al, {Col{0, 0, 0, 0},
                                                      Col{0, -(L * half), b1, g1},
                                                      Col{0, 0, b2, 1},
                                                      Col{0, 0, b2 * (b2 + L), b2}}))
                          .nz(b2)
                          .nz(b2 + L)
                          .sam({{"alpha", 1}, {"beta1", 1}, {"gamma1", 1}, {"beta2", 1}})
                          .out());
    }

    // ---- kernel dimension 1, image spanned by 1, g+gamma*f, e ----------------
    {
        RatFunc ga = V("gamma"), g1 = V("gamma1"), g2 = V("gamma2"), g3 = V("gamma3");
        RatFunc a1 = V("alpha1"), a3 = V("alpha3"), b1 = V("beta1"), b3 = V("beta3");
        RatFunc xi = V("xi"), mu = V("mu"), nu = V("nu");
        cat.push_back(FB("th2.i", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "beta3", "gamma1", "beta1", "mu"})
                          .cols(from_gammaf_basis(ga, {Col{g3, 0, b3, 0},
                                                       Col{g1, -(L * half), b1, 0},
                                                       Col{0, 0, 0, 0},
                                                       Col{0, 0, mu, 0}}))
                          .nz(mu)
                          .nz(g3)
                          .note("fails on the pair (1,g) unless beta3 = 0")
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"beta3", 1}, {"gamma1", 1},
                                {"beta1", 1}, {"mu", 1}})
                          .out());
        cat.push_back(FB("th2.i.fixed", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "beta3", "gamma1", "beta1", "mu"})
                          .cols(from_gammaf_basis(ga, {Col{g3, 0, b3, 0},
                                                       Col{g1, -(L * half), b1, 0},
                                                       Col{0, 0, 0, 0},
                                                       Col{0, 0, mu, 0}}))
                          .nz(mu)
                          .nz(g3)
                          .zero(b3)
                          .note("beta3 pinned to 0, the value the 1,g-pair forces")
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"beta3", 0}, {"gamma1", 1},
                                {"beta1", 1}, {"mu", 1}})
                          .out());
        cat.push_back(FB("th2.ii", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "gamma1", "alpha1", "beta1"})
                          .cols(from_gammaf_basis(ga, {Col{g3, 0, 0, 0},
                                                       Col{g1, a1, b1, 0},
                                                       Col{0, 0, -L, 0},
                                                       Col{0, 0, 0, 0}}))
                          .nz(a1)
                          .nz(a1 + L)
                          .nz(g3)
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"gamma1", 1}, {"alpha1", 1}, {"beta1", 1}})
                          .out());
        cat.push_back(FB("th2.iii", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "gamma1", "beta1", "nu", "mu"})
                          .cols(from_gammaf_basis(ga, {Col{g3, 0, 0, 0},
                                                       Col{g1, -L, b1, 0},
                                                       Col{0, 0, -L, 0},
                                                       Col{nu, 0, mu, 0}}))
                          .anynz({g3, nu})
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"gamma1", 1}, {"beta1", 1},
                                {"nu", 0}, {"mu", 1}})
                          .out());
        cat.push_back(FB("th2.iv", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "gamma1", "nu", "xi", "mu"})
                          .cols(from_gammaf_basis(ga, {Col{g3, 0, 0, 0},
                                                       Col{g1, -L, 0, 0},
                                                       Col{0, 0, -L, 0},
                                                       Col{nu, xi, mu, 0}}))
                          .anynz({g3, nu, xi})
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"gamma1", 1}, {"nu", 0},
                                {"xi", 1}, {"mu", 1}})
                          .out());
        cat.push_back(FB("th2.v", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "beta3", "gamma1", "beta1", "nu", "mu"})
                          .cols(from_gammaf_basis(ga, {Col{g3, 0, b3, 0},
                                                       Col{g1, -L, b1, 0},
                                                       Col{0, 0, -L, 0},
                                                       Col{nu, 0, 0, mu}}))
                          .nz(b3)
                          .anynz({g3, nu})
                          .note("f-image printed as nu*1+mu*f; the derivation produces mu*e")
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"beta3", 1}, {"gamma1", 1},
                                {"beta1", 1}, {"nu", 0}, {"mu", 1}})
                          .out());
        cat.push_back(FB("th2.v.fixed", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "beta3", "gamma1", "beta1", "nu", "mu"})
                          .cols(from_gammaf_basis(ga, {Col{g3, 0, b3, 0},
                                                       Col{g1, -L, b1, 0},
                                                       Col{0, 0, -L, 0},
                                                       Col{nu, 0, mu, 0}}))
                          .nz(b3)
                          .anynz({g3, nu})
                          .note("f-image corrected to nu*1+mu*e")
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"beta3", 1}, {"gamma1", 1},
                                {"beta1", 1}, {"nu", 0}, {"mu", 1}})
                          .out());
        cat.push_back(FB("th2.vi", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "alpha3", "beta3", "gamma1", "alpha1"})
                          .cols(from_gammaf_basis(ga, {Col{g3, a3, b3, 0},
                                                       Col{g1, a1, b3 * (a1 + L) / a3, 0},
                                                       Col{0, 0, -L, 0},
                                                       Col{0, 0, 0, 0}}))
                          .nz(a3)
                          .nz(a1)
                          .nz(g3 * a1 - g1 * a3)
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"alpha3", 1}, {"beta3", 1},
                                {"gamma1", 0}, {"alpha1", 1}})
                          .out());
        cat.push_back(FB("th2.vi.alt", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "alpha3", "beta3", "gamma1", "alpha1"})
                          .cols(from_gammaf_basis(ga, {Col{g3, a3, b3, 0},
                                                       Col{g1, a1, b3 * (a1 + L) / a3, 0},
                                                       Col{0, 0, -L, 0},
                                                       Col{0, 0, 0, 0}}))
                          .nz(a3)
                          .nz(a1)
                          .nz(g3)
                          .note("variant guard gamma3 != 0, as the derivation's case text uses")
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"alpha3", 1}, {"beta3", 1},
                                {"gamma1", 0}, {"alpha1", 1}})
                          .out());
        cat.push_back(FB("th2.vii", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "alpha3", "gamma1", "beta1", "gamma2"})
                          .cols(from_gammaf_basis(ga, {Col{g3, a3, a3 / L, 0},
                                                       Col{g1, 0, b1, 0},
                                                       Col{g2, 0, -L, 0},
                                                       Col{0, 0, 0, 0}}))
                          .nz(a3)
                          .nz(b1 * g2 + L * g1)
                          .note("fails on the pair (1,e) unless gamma2 = 0")
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"alpha3", 1}, {"gamma1", 0},
                                {"beta1", 1}, {"gamma2", 1}})
                          .out());
        cat.push_back(FB("th2.vii.fixed", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "alpha3", "gamma1", "beta1", "gamma2"})
                          .cols(from_gammaf_basis(ga, {Col{g3, a3, a3 * b1 / L, 0},
                                                       Col{g1, 0, b1, 0},
                                                       Col{g2, 0, -L, 0},
                                                       Col{0, 0, 0, 0}}))
                          .nz(a3)
                          .nz(b1 * g2 + L * g1)
                          .zero(g2)
                          .note("e-coefficient of the 1-image restored to the underlying "
                                "three-dimensional form (factor beta1) and gamma2 pinned to 0")
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"alpha3", 1}, {"gamma1", 1},
                                {"beta1", 1}, {"gamma2", 0}})
                          .out());
        cat.push_back(FB("th2.viii", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "gamma1", "xi", "mu", "nu"})
                          .cols(from_gammaf_basis(ga, {Col{g3, 0, 0, 0},
                                                       Col{g1, -L, RatFunc(-1) * L * mu / xi, 0},
                                                       Col{0, 0, 0, 0},
                                                       Col{nu, xi, mu, 0}}))
                          .nz(g3)
                          .nz(xi)
                          .nz(g1 * xi + L * nu)
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"gamma1", 1}, {"xi", 1},
                                {"mu", 1}, {"nu", 0}})
                          .out());
        cat.push_back(FB("th2.ix", "h4minus", "ker1-1gf", 4)
                          .pars({"gamma", "gamma3", "gamma1", "gamma2", "nu", "xi"})
                          .cols(from_gammaf_basis(ga, {Col{g3, 0, 0, 0},
                                                       Col{g1, -L, 0, 0},
                                                       Col{g2, 0, 0, 0},
                                                       Col{nu, xi, 0, 0}}))
                          .nz(g2)
                          .nz(xi)
                          .note("fails on the pair (e,f); its guards rule every instance out")
                          .sam({{"gamma", 1}, {"gamma3", 1}, {"gamma1", 1}, {"gamma2", 1},
                                {"nu", 1}, {"xi", 1}})
                          .out());
    }

    // ---- nondegenerate operators ---------------------------------------------
    {
        RatFunc al = V("alpha"), a1 = V("alpha1"), b1 = V("beta1");
        RatFunc g1 = V("gamma1"), b2 = V("beta2"), b3 = V("beta3");
        RatFunc xi = V("xi"), mu = V("mu"), nu = V("nu");
        cat.push_back(FB("ker0.main", "h4minus", "ker0", 4)
                          .pars({"alpha", "xi", "mu", "nu", "alpha1", "beta1"})
                          .cols(from_alpha_basis(al, {Col{0, xi, mu, nu},
                                                      Col{a1, b1, (L + b1) * mu / xi, (L + b1) * nu / xi},
                                                      Col{0, 0, -L, 0},
                                                      Col{0, 0, 0, -L}}))
                          .nz(xi)
                          .nz(a1)
                          .sam({{"alpha", 1}, {"xi", 1}, {"mu", 1}, {"nu", 1}, {"alpha1", 1}, {"beta1", 1}})
                          .out());
        cat.push_back(FB("ker0.i", "h4minus", "ker0", 4)
                          .pars({"alpha", "xi", "mu", "nu", "beta1", "gamma1"})
                          .cols({{xi, 0, mu, nu},
                                 {RatFunc(-1) * L * al, -L, b1, g1},
                                 {0, 0, -L, 0},
                                 {0, 0, 0, L}})
                          .nz(xi)
                          .note("f-image printed with weight +lambda; the derivation has -lambda")
                          .sam({{"alpha", 1}, {"xi", 1}, {"mu", 1}, {"nu", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("ker0.i.fixed", "h4minus", "ker0", 4)
                          .pars({"alpha", "xi", "mu", "nu", "beta1", "gamma1"})
                          .cols({{xi, 0, mu, nu},
                                 {RatFunc(-1) * L * al, -L, b1, g1},
                                 {0, 0, -L, 0},
                                 {0, 0, 0, -L}})
                          .nz(xi)
                          .note("f-image weight corrected to -lambda")
                          .sam({{"alpha", 1}, {"xi", 1}, {"mu", 1}, {"nu", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("ker0.ii", "h4minus", "ker0", 4)
                          .pars({"alpha", "xi", "alpha1", "beta1", "gamma1"})
                          .cols({{xi, 0, 0, 0},
                                 {al * a1, a1, b1, g1},
                                 {0, 0, -L, 0},
                                 {0, 0, 0, -L}})
                          .nz(xi)
                          .nz(a1)
                          .nz(a1 + L)
                          .sam({{"alpha", 1}, {"xi", 1}, {"alpha1", 1}, {"beta1", 1}, {"gamma1", 1}})
                          .out());
        cat.push_back(FB("ker0.iii", "h4minus", "ker0", 4)
                          .pars({"alpha", "xi", "beta1", "gamma1", "beta3"})
                          .cols({{xi, 0, 0, 0},
                                 {RatFunc(-1) * L * half * al, -(L * half), b1, g1},
                                 {0, 0, -L, 0},
                                 {0, 0, b3, -L}})
                          .nz(xi)
                          .nz(b3)
                          .sam({{"alpha", 1}, {"xi", 1}, {"beta1", 1}, {"gamma1", 1}, {"beta3", 1}})
                          .out());
        cat.push_back(FB("ker0.iv", "h4minus", "ker0", 4)
                          .pars({"alpha", "xi", "beta1", "gamma1", "beta2"})
                          .cols({{xi, 0, 0, 0},
                                 {RatFunc(-1) * L * half * al, -(L * half), b1, g1},
                                 {0, 0, b2, 1},
                                 {0, 0, b2 * (b2 + L), b2}})
                          .nz(xi)
                          .nz(b2)
                          .nz(b2 + L)
                          .sam({{"alpha", 1}, {"xi", 1}, {"beta1", 1}, {"gamma1", 1}, {"beta2", 1}})
                          .out());
    }

    return cat;
}

}  // namespace

const std::vector<Family>& catalog() {
    static const std::vector<Family> cat = build_catalog();
    return cat;
}

}  // namespace rbh4
