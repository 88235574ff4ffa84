// Acceptance suite: runs every acceptance criterion end to end and prints one
// pass/fail line per criterion. Returns the number of failed criteria.
//
// Criteria 1 and 3 run exactly as stated. Four of the proof-backed families
// (assoc.d, assoc.h, lm3.2.7, lm3.2.8) carry misprints in their printed
// source tables, so their residuals do not vanish and those two criteria
// report FAIL. The corrected ".fixed" twins all verify; the output shows
// them alongside the failing originals.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "rbh4/jsonio.hpp"
#include "rbh4/search.hpp"

using namespace rbh4;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int number;
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void note(const std::string& what) { notes.push_back(what); }
    int report(double secs) const {
        std::printf("criterion %d: %s  (%.1fs)\n", number, pass ? "PASS" : "FAIL", secs);
        for (const auto& n : notes) std::printf("    - %s\n", n.c_str());
        std::fflush(stdout);
        return pass ? 0 : 1;
    }
};

std::string entries_text(const FoundOperator& op) {
    std::string s;
    for (auto e : op.entries) s += char('0' + e);
    return s;
}

std::vector<std::pair<std::string, size_t>> load_fixture(const std::string& name) {
    std::ifstream in(std::string(RBH4_FIXTURE_DIR) + "/" + name);
    std::vector<std::pair<std::string, size_t>> out;
    if (!in.good()) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto mpos = line.find("\"m\":\"");
        auto kpos = line.find("\"k\":");
        std::string m = line.substr(mpos + 5, line.find('"', mpos + 5) - mpos - 5);
        size_t k = std::stoul(line.substr(kpos + 4));
        out.emplace_back(m, k);
    }
    return out;
}

bool unmatched_equals_fixture(const std::vector<FoundOperator>& unmatched,
                              const std::string& fixture_name, Criterion& c) {
    auto fixture = load_fixture(fixture_name);
    if (fixture.size() != unmatched.size()) {
        c.fail("unmatched list (" + std::to_string(unmatched.size()) +
               ") differs from committed fixture " + fixture_name + " (" +
               std::to_string(fixture.size()) + ")");
        return false;
    }
    for (size_t i = 0; i < fixture.size(); ++i) {
        if (entries_text(unmatched[i]) != fixture[i].first ||
            unmatched[i].kernel_dim != fixture[i].second) {
            c.fail("unmatched entry " + std::to_string(i) + " deviates from the fixture");
            return false;
        }
    }
    return true;
}

// ---- criterion 1: proof-backed family verification --------------------------

int criterion1() {
    auto start = Clock::now();
    Criterion c{1, true, {}};
    std::vector<std::string> ids;
    for (char x = 'a'; x <= 'h'; ++x) ids.push_back(std::string("assoc.") + x);
    for (int i = 1; i <= 10; ++i) ids.push_back("lm2.1." + std::to_string(i));
    for (int i = 1; i <= 9; ++i) ids.push_back("lm3.2." + std::to_string(i));

    double worst = 0;
    for (const auto& id : ids) {
        auto t0 = Clock::now();
        bool pass;
        if (id == "lm2.1.1") {
            // the sign question: exactly one of the two transcribed signs verifies
            bool printed = verify_symbolic(find_family("lm2.1.1")).pass;
            bool fixed = verify_symbolic(find_family("lm2.1.1.fixed")).pass;
            pass = printed != fixed;
            if (pass) c.note("lm2.1.1 sign question: the derivation's sign verifies, the printed one does not");
        } else {
            const Family& fam = find_family(id);
            auto v = verify_symbolic(fam);
            pass = v.pass;
            if (!pass) {
                RFCtx rf;
                auto labels = algebra_by_id(fam.algebra, rf).basis_labels();
                c.fail(id + " residual numerator on pair (" + labels[v.record->pair_i] + "," +
                       labels[v.record->pair_j] + "): " + v.record->residual_numerator);
            }
        }
        worst = std::max(worst, seconds_since(t0));
        if (!pass) {
            // show whether a corrected twin verifies
            try {
                const Family& fixed = find_family(id + ".fixed");
                if (verify_symbolic(fixed).pass) c.note(id + ".fixed verifies");
            } catch (const UnknownFamily&) {
            }
        }
    }
    if (worst > 5.0) c.fail("a single family took longer than 5 s");
    double total = seconds_since(start);
    if (total > 180.0) c.fail("verification exceeded 3 minutes");
    return c.report(total);
}

// ---- criterion 2: full-catalog sweep ----------------------------------------

int criterion2() {
    auto start = Clock::now();
    Criterion c{2, true, {}};
    std::set<std::string> proof_backed;
    for (char x = 'a'; x <= 'h'; ++x) proof_backed.insert(std::string("assoc.") + x);
    for (int i = 1; i <= 10; ++i) proof_backed.insert("lm2.1." + std::to_string(i));
    for (int i = 1; i <= 9; ++i) proof_backed.insert("lm3.2." + std::to_string(i));

    size_t swept = 0, discrepancies = 0;
    for (const auto& f : catalog()) {
        if (proof_backed.count(f.id)) continue;
        auto v = verify_symbolic(f);  // every family gets a verdict
        ++swept;
        if (!v.pass) {
            if (!v.record || v.record->residual_numerator.empty() ||
                v.record->residual_numerator == "0") {
                c.fail(f.id + " failed without a usable discrepancy record");
                continue;
            }
            ++discrepancies;
        }
        if (f.id.size() > 6 && f.id.find(".fixed") != std::string::npos && !v.pass)
            c.fail("corrected variant " + f.id + " does not verify");
    }
    c.note(std::to_string(swept) + " families swept, " + std::to_string(discrepancies) +
           " discrepancy records");
    return c.report(seconds_since(start));
}

// ---- criterion 3: associative families on the Lie and Jordan sides ----------

int criterion3() {
    auto start = Clock::now();
    Criterion c{3, true, {}};
    RFCtx ctx;
    auto h4 = make_h4(ctx);
    auto lie = adjoint_minus(h4);
    auto jor = adjoint_plus(h4);
    RatFunc lambda = RatFunc::variable("lambda");
    for (char x = 'a'; x <= 'h'; ++x) {
        std::string id = std::string("assoc.") + x;
        auto m = zero_substituted_matrix(find_family(id));
        bool l = check_rb(lie, m, lambda).pass;
        bool j = check_rb(jor, m, lambda).pass;
        if (!l || !j) {
            c.fail(id + " fails the " + std::string(!l ? "lie" : "jordan") + " check as printed");
            auto fixed = zero_substituted_matrix(find_family(id + ".fixed"));
            if (check_rb(lie, fixed, lambda).pass && check_rb(jor, fixed, lambda).pass)
                c.note(id + ".fixed passes both the lie and jordan checks");
        }
    }
    double total = seconds_since(start);
    if (total > 60.0) c.fail("exceeded 1 minute");
    return c.report(total);
}

// ---- criterion 4: finite-field completeness in dimension 3 ------------------

int criterion4() {
    auto start = Clock::now();
    Criterion c{4, true, {}};
    ScanConfig cfg{"lm2", 3, 1, 2, 3};
    auto ops = enumerate_all(cfg);
    if (ops.size() != 342)
        c.fail("regression count off: expected 342 operators, found " +
               std::to_string(ops.size()));
    auto rep = coverage(ops, cfg);
    unmatched_equals_fixture(rep.unmatched, "unmatched_lm2_f3_w1.jsonl", c);
    c.note(std::to_string(rep.total - rep.unmatched.size()) + " matched, " +
           std::to_string(rep.unmatched.size()) + " unmatched documented as fixtures");
    double total = seconds_since(start);
    if (total > 10.0) c.fail("exceeded 10 s");
    return c.report(total);
}

// ---- criterion 5: finite-field completeness in dimension 4 ------------------

int criterion5() {
    auto start = Clock::now();
    Criterion c{5, true, {}};
    ScanConfig four{"h4minus", 3, 1, 4, 4};
    auto ops = enumerate_all(four);
    if (ops.size() != 16686)
        c.fail("regression count off: expected 16686 operators, found " +
               std::to_string(ops.size()));
    ScanConfig one{"h4minus", 3, 1, 1, 4};
    auto ops_single = enumerate_all(one);
    bool same = ops.size() == ops_single.size();
    for (size_t i = 0; same && i < ops.size(); ++i)
        same = ops[i].entries == ops_single[i].entries;
    if (!same) c.fail("output differs between 1 and 4 workers");
    auto rep = coverage(ops, four);
    unmatched_equals_fixture(rep.unmatched, "unmatched_h4minus_f3_w1.jsonl", c);
    c.note(std::to_string(rep.total) + " operators; " +
           std::to_string(rep.total - rep.unmatched.size()) + " matched, " +
           std::to_string(rep.unmatched.size()) + " unmatched documented as fixtures");
    double total = seconds_since(start);
    if (total > 900.0) c.fail("exceeded 15 minutes");
    return c.report(total);
}

// ---- criterion 6: the Lie-but-not-associative set over F3 -------------------

int criterion6() {
    auto start = Clock::now();
    Criterion c{6, true, {}};
    auto res = compare_lie_vs_assoc(3, 1, 4);
    if (res.lie_not_assoc.empty()) c.fail("comparison set is empty");
    if (!res.prop1_holds) c.fail("an associative pass fails the Lie check");
    if (res.lie_total != 16686 || res.assoc_total != 672 || res.lie_not_assoc.size() != 16014)
        c.fail("regression counts off: expected 16686/672/16014, found " +
               std::to_string(res.lie_total) + "/" + std::to_string(res.assoc_total) + "/" +
               std::to_string(res.lie_not_assoc.size()));
    FpCtx f3{3};
    auto lie = make_h4minus(f3);
    auto h4 = make_h4(f3);
    Fp lambda = f3.from_int(1);
    std::unordered_set<uint64_t> emitted;
    for (const auto& pair : res.lie_not_assoc) {
        auto m = operator_matrix(pair.op, 4, 3);
        emitted.insert(fp_matrix_key(m));
        if (!check_rb(lie, m, lambda).pass) {
            c.fail("an emitted operator fails the independent Lie re-check");
            break;
        }
        Matrix<Fp> xg(4, f3.from_int(0));
        for (size_t r = 0; r < 4; ++r)
            for (size_t cidx = 0; cidx < 4; ++cidx)
                xg.at(r, cidx) = f3.from_int(pair.assoc_entries[r * 4 + cidx]);
        if (check_rb(h4, xg, lambda).pass) {
            c.fail("an emitted operator passes the associative check");
            break;
        }
    }
    // disjointness from the associative-pass set, transported to 1,g,e,f
    ScanConfig assoc_cfg{"h4", 3, 1, 4, 4};
    auto assoc_ops = enumerate_all(assoc_cfg);
    auto to_xgx = ef_to_xgx_matrix(f3);
    auto to_ef = xgx_to_ef_matrix(f3);
    for (const auto& op : assoc_ops) {
        auto ef = to_ef * operator_matrix(op, 4, 3) * to_xgx;
        if (emitted.count(fp_matrix_key(ef))) {
            c.fail("comparison set meets the associative-pass set");
            break;
        }
    }
    c.note(std::to_string(res.lie_total) + " Lie passes, " + std::to_string(res.assoc_total) +
           " associative passes, " + std::to_string(res.lie_not_assoc.size()) +
           " Lie-only operators");
    return c.report(seconds_since(start));
}

// ---- criterion 7: exact property suites --------------------------------------

const char* kH4MinusFamilies[] = {"ker3.i",        "ker3.ii",      "ker2.ab1.iii",
                                  "ker2.ab0.viii", "ker2.nonab.i", "th0.iii",
                                  "th1.iv",        "ker0.main"};

template <typename Fn>
size_t for_random_verified(unsigned seed, size_t want, Fn fn) {
    const QCtx Q{};
    auto lie = make_h4minus(Q);
    Rational lambda(1);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(0, 3);
    size_t done = 0;
    for (int t = 0; done < want && t < 20000; ++t) {
        const Family& fam = find_family(kH4MinusFamilies[t % 8]);
        std::map<std::string, Rational> assign;
        for (const auto& p : fam.params) assign[p] = Rational(d(rng));
        Matrix<Rational> r(4, Rational(0));
        try {
            r = instantiate(fam, assign, lambda, Q);
        } catch (const ConstraintViolation&) {
            continue;
        }
        if (!check_rb(lie, r, lambda).pass) continue;
        if (!fn(lie, r, lambda, rng)) return done;
        ++done;
    }
    return done;
}

int criterion7() {
    auto start = Clock::now();
    Criterion c{7, true, {}};
    const QCtx Q{};

    // bilinearity: basis-pair residual vanishing extends to random vectors
    {
        size_t ok = for_random_verified(101, 100, [](const auto& lie, const auto& r,
                                                     const Rational& lambda, std::mt19937& rng) {
            std::uniform_int_distribution<int> d(-3, 3);
            Vec<Rational> u(4), v(4);
            for (auto& x : u) x = Rational(d(rng));
            for (auto& x : v) x = Rational(d(rng));
            Vec<Rational> ru = r.apply(u), rv = r.apply(v);
            Vec<Rational> lhs = lie.multiply(ru, rv);
            Vec<Rational> inner = lie.multiply(ru, v);
            Vec<Rational> t2 = lie.multiply(u, rv);
            Vec<Rational> t3 = lie.multiply(u, v);
            for (size_t k = 0; k < 4; ++k) inner[k] = inner[k] + t2[k] + lambda * t3[k];
            Vec<Rational> rhs = r.apply(inner);
            for (size_t k = 0; k < 4; ++k)
                if (!(lhs[k] - rhs[k]).is_zero()) return false;
            return true;
        });
        if (ok != 100) c.fail("bilinearity reduction: only " + std::to_string(ok) + "/100");
    }

    // kernel/image subalgebras and the kernel conditions
    {
        size_t ok = for_random_verified(102, 100, [](const auto& lie, const auto& r,
                                                     const Rational& lambda, std::mt19937&) {
            auto ker = kernel_basis(r, Rational(0), Rational(1));
            auto im = image_basis(r);
            for (const auto& u : ker.basis())
                for (const auto& v : ker.basis())
                    if (!ker.contains(lie.multiply(u, v))) return false;
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 4; ++j)
                    if (!im.contains(lie.multiply(r.column(i), r.column(j)))) return false;
            Subspace<Rational> span_ef(
                4, {{Rational(0), Rational(0), Rational(1), Rational(0)},
                    {Rational(0), Rational(0), Rational(0), Rational(1)}});
            for (size_t i = 0; i < 4; ++i) {
                Vec<Rational> shifted = r.column(i);
                shifted[i] += lambda;
                for (const auto& v : ker.basis()) {
                    Vec<Rational> w = lie.multiply(shifted, v);
                    if (!ker.contains(w) || !span_ef.contains(w)) return false;
                }
            }
            return true;
        });
        if (ok != 100) c.fail("kernel/image conditions: only " + std::to_string(ok) + "/100");
    }

    // conjugation invariance under phi (and psi on the 3-dimensional algebra)
    {
        auto lie0 = make_h4minus(Q);
        auto phi = make_phi(Q, lie0);
        size_t ok = for_random_verified(103, 100, [&](const auto& lie, const auto& r,
                                                      const Rational& lambda, std::mt19937&) {
            return check_rb(lie, conjugate(r, phi), lambda).pass;
        });
        if (ok != 100) c.fail("phi conjugation invariance: only " + std::to_string(ok) + "/100");

        auto lm2 = make_lm2(Q);
        auto psi = make_psi(Q, lm2);
        std::mt19937 rng(104);
        std::uniform_int_distribution<int> d(0, 3);
        const char* ids[] = {"lm2.1.2", "lm2.1.3", "lm2.1.7", "lm2.1.10"};
        size_t done = 0;
        for (int t = 0; done < 100 && t < 20000; ++t) {
            const Family& fam = find_family(ids[t % 4]);
            std::map<std::string, Rational> assign;
            for (const auto& p : fam.params) assign[p] = Rational(d(rng));
            Matrix<Rational> r(3, Rational(0));
            try {
                r = instantiate(fam, assign, Rational(1), Q);
            } catch (const ConstraintViolation&) {
                continue;
            }
            if (!check_rb(lm2, r, Rational(1)).pass) continue;
            if (!check_rb(lm2, conjugate(r, psi), Rational(1)).pass) {
                c.fail("psi conjugation broke a verified operator");
                break;
            }
            ++done;
        }
        if (done != 100) c.fail("psi conjugation invariance: only " + std::to_string(done) + "/100");
    }

    // verdict invariance under scaling the product
    {
        std::mt19937 crng(105);
        std::uniform_int_distribution<int> cd(1, 5);
        size_t ok = for_random_verified(106, 100, [&](const auto& lie, const auto& r,
                                                      const Rational& lambda, std::mt19937&) {
            auto scaled = lie.scaled_product(Rational(cd(crng)));
            return check_rb(scaled, r, lambda).pass;
        });
        if (ok != 100) c.fail("product scaling invariance: only " + std::to_string(ok) + "/100");
        // and a failing operator stays failing
        auto lie0 = make_h4minus(Q);
        Matrix<Rational> id4 = Matrix<Rational>::identity(4, Rational(0), Rational(1));
        if (check_rb(lie0.scaled_product(Rational(3)), id4, Rational(1)).pass)
            c.fail("product scaling turned a failing operator into a pass");
    }

    // weight scaling: R -> 2R maps the weight-1 set onto the weight-2 set over F3
    {
        ScanConfig w1{"h4minus", 3, 1, 4, 4};
        ScanConfig w2{"h4minus", 3, 2, 4, 4};
        auto s1 = enumerate_all(w1);
        auto s2 = enumerate_all(w2);
        FpCtx f3{3};
        std::unordered_set<uint64_t> set2;
        for (const auto& op : s2) set2.insert(fp_matrix_key(operator_matrix(op, 4, 3)));
        bool onto = s1.size() == s2.size();
        for (const auto& op : s1) {
            auto doubled = operator_matrix(op, 4, 3).scaled(f3.from_int(2));
            if (!set2.count(fp_matrix_key(doubled))) {
                onto = false;
                break;
            }
        }
        if (!onto) c.fail("weight scaling bijection between the F3 scans broke");
        else
            c.note("weight bijection: " + std::to_string(s1.size()) + " operators on each side");
    }

    return c.report(seconds_since(start));
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    int failures = 0;
    failures += criterion1();
    failures += criterion2();
    failures += criterion3();
    failures += criterion4();
    failures += criterion5();
    failures += criterion6();
    failures += criterion7();
    if (failures)
        std::printf("%d criterion(s) failed; the residual records above document the printed "
                    "forms that do not verify\n",
                    failures);
    else
        std::printf("all criteria passed\n");
    return failures;
}
