#include "rbh4/catalog.hpp"

#include <algorithm>

namespace rbh4 {

const Family& find_family(const std::string& id) {
    for (const auto& f : catalog())
        if (f.id == id) return f;
    throw UnknownFamily(id);
}

std::vector<const Family*> families_for_algebra(const std::string& algebra_id) {
    std::vector<const Family*> out;
    for (const auto& f : catalog())
        if (f.algebra == algebra_id) out.push_back(&f);
    return out;
}

Matrix<RatFunc> zero_substituted_matrix(const Family& f) {
    Matrix<RatFunc> m = f.matrix;
    for (const auto& atom : f.constraints) {
        if (atom.kind != ConstraintAtom::Kind::Zero) continue;
        for (const auto& p : atom.polys) {
            // solve p = 0 for a parameter occurring linearly with constant coefficient
            std::string target;
            Polynomial rest;
            Rational coeff;
            for (const auto& name : f.params) {
                if (!p.mentions(name)) continue;
                if (auto lin = p.linear_coefficient(name)) {
                    target = name;
                    rest = lin->first;
                    coeff = lin->second;
                    break;
                }
            }
            if (target.empty())
                throw std::logic_error("family " + f.id + ": zero-constraint " + p.to_string() +
                                       " is not linear in any parameter");
            RatFunc value = RatFunc(rest) * RatFunc(-coeff.inverse());
            for (size_t r = 0; r < m.dim(); ++r)
                for (size_t c = 0; c < m.dim(); ++c)
                    m.at(r, c) = m.at(r, c).substituted(target, value);
        }
    }
    return m;
}

SymbolicVerdict verify_symbolic(const Family& f) {
    RFCtx ctx;
    auto spec = algebra_by_id(f.algebra, ctx);
    Matrix<RatFunc> m = zero_substituted_matrix(f);
    RatFunc lambda = RatFunc::variable("lambda");
    SymbolicVerdict v;
    v.report = check_rb(spec, m, lambda);
    v.pass = v.report.pass;
    if (!v.pass) {
        const auto& first = v.report.residuals.front();
        std::string numerator;
        for (const auto& comp : first.residual) {
            if (comp.is_zero()) continue;
            numerator = comp.num().to_string();
            break;
        }
        v.record = Discrepancy{f.id, first.i, first.j, numerator, f.note};
    }
    return v;
}

namespace {

// Odometer over F_p^params; visits assignments in ascending lexicographic
// order of the parameter list.
class AssignmentScan {
  public:
    AssignmentScan(const Family& f, long long p, long long lambda) : f_(f), p_(p) {
        if (f.params.size() > kMaxMembershipParams)
            throw std::invalid_argument("family " + f.id + ": too many parameters (" +
                                        std::to_string(f.params.size()) + ") for exhaustive search");
        digits_.assign(f.params.size(), 0);
        ctx_ = FpCtx{p};
        lambda_ = Fp(lambda, p);
        if (lambda_.is_zero()) throw std::invalid_argument("weight must be nonzero");
        done_ = false;
    }

    bool done() const { return done_; }
    void advance() {
        for (size_t i = digits_.size(); i-- > 0;) {
            if (++digits_[i] < p_) return;
            digits_[i] = 0;
        }
        done_ = true;
    }

    std::map<std::string, Fp> assignment() const {
        std::map<std::string, Fp> a;
        for (size_t i = 0; i < f_.params.size(); ++i) a[f_.params[i]] = Fp(digits_[i], p_);
        return a;
    }
    std::map<std::string, long long> assignment_values() const {
        std::map<std::string, long long> a;
        for (size_t i = 0; i < f_.params.size(); ++i) a[f_.params[i]] = digits_[i];
        return a;
    }

    std::optional<Matrix<Fp>> try_instantiate() const {
        try {
            return instantiate(f_, assignment(), lambda_, ctx_);
        } catch (const ConstraintViolation&) {
            return std::nullopt;
        }
    }

  private:
    const Family& f_;
    long long p_;
    std::vector<long long> digits_;
    FpCtx ctx_;
    Fp lambda_;
    bool done_ = false;
};

}  // namespace

std::optional<std::map<std::string, long long>> membership(const Family& f, const Matrix<Fp>& target,
                                                           long long lambda, long long p) {
    for (AssignmentScan scan(f, p, lambda); !scan.done(); scan.advance()) {
        auto m = scan.try_instantiate();
        if (m && *m == target) return scan.assignment_values();
    }
    return std::nullopt;
}

std::vector<Matrix<Fp>> enumerate_instances(const Family& f, long long p, long long lambda) {
    std::vector<std::pair<uint64_t, Matrix<Fp>>> keyed;
    for (AssignmentScan scan(f, p, lambda); !scan.done(); scan.advance()) {
        auto m = scan.try_instantiate();
        if (m) keyed.emplace_back(fp_matrix_key(*m), std::move(*m));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Matrix<Fp>> out;
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
        out.push_back(std::move(keyed[i].second));
    }
    return out;
}

uint64_t fp_matrix_key(const Matrix<Fp>& m) {
    uint64_t key = 0;
    for (size_t r = 0; r < m.dim(); ++r)
        for (size_t c = 0; c < m.dim(); ++c)
            key = (key << 3) | static_cast<uint64_t>(m.at(r, c).value());
    return key;
}

}  // namespace rbh4
