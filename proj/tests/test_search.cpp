#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <unordered_set>

#include "rbh4/search.hpp"

using namespace rbh4;

namespace {

// Regression constants frozen from the first exhaustive runs.
constexpr size_t kLm2Total = 342;       // lm2, F3, weight 1
constexpr size_t kLm2Unmatched = 135;
constexpr size_t kH4MinusTotal = 16686; // h4minus, F3, weight 1
constexpr size_t kH4MinusUnmatched = 7362;

std::vector<std::pair<std::string, size_t>> load_fixture(const std::string& name) {
    std::ifstream in(std::string(RBH4_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::vector<std::pair<std::string, size_t>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto mpos = line.find("\"m\":\"");
        auto kpos = line.find("\"k\":");
        REQUIRE(mpos != std::string::npos);
        REQUIRE(kpos != std::string::npos);
        std::string m = line.substr(mpos + 5, line.find('"', mpos + 5) - mpos - 5);
        size_t k = std::stoul(line.substr(kpos + 4));
        out.emplace_back(m, k);
    }
    return out;
}

std::string entries_text(const FoundOperator& op) {
    std::string s;
    for (auto e : op.entries) s += char('0' + e);
    return s;
}

}  // namespace

TEST_CASE("lm2 scan over F3 at weight 1") {
    ScanConfig cfg{"lm2", 3, 1, 1, 3};
    auto ops = enumerate_all(cfg);
    CHECK(ops.size() == kLm2Total);
    // contains the zero operator and -lambda*id
    std::unordered_set<std::string> seen;
    for (const auto& op : ops) seen.insert(entries_text(op));
    CHECK(seen.count("000000000"));
    CHECK(seen.count("200020002"));  // -1 = 2 mod 3 on the diagonal
    // kernel-dimension counts add up
    std::map<size_t, size_t> by_ker;
    for (const auto& op : ops) ++by_ker[op.kernel_dim];
    size_t sum = 0;
    for (auto& [k, v] : by_ker) sum += v;
    CHECK(sum == ops.size());
    // every emitted operator re-verifies through the generic checker
    FpCtx f3{3};
    auto spec = make_lm2(f3);
    for (const auto& op : ops)
        CHECK(check_rb(spec, operator_matrix(op, 3, 3), f3.from_int(1)).pass);
    // closure under the psi automorphism
    auto psi = make_psi(f3, spec);
    for (const auto& op : ops) {
        auto moved = conjugate(operator_matrix(op, 3, 3), psi);
        std::string key;
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < 3; ++c) key += char('0' + moved.at(r, c).value());
        CHECK(seen.count(key));
    }
}

TEST_CASE("scan output is independent of worker count and partition depth") {
    std::vector<std::string> reference;
    {
        ScanConfig cfg{"lm2", 3, 1, 1, 3};
        for (const auto& op : enumerate_all(cfg)) reference.push_back(entries_text(op));
    }
    // output must be lexicographically sorted row-major
    CHECK(std::is_sorted(reference.begin(), reference.end()));
    for (unsigned jobs : {2u, 4u}) {
        for (unsigned depth : {1u, 2u, 5u}) {
            ScanConfig cfg{"lm2", 3, 1, jobs, depth};
            std::vector<std::string> got;
            for (const auto& op : enumerate_all(cfg)) got.push_back(entries_text(op));
            CHECK(got == reference);
        }
    }
}

TEST_CASE("lm2 scans over larger fields") {
    for (long long p : {5LL, 7LL}) {
        ScanConfig cfg{"lm2", p, 1, 2, 3};
        auto ops = enumerate_all(cfg);
        CHECK(ops.size() > 0);
        FpCtx ctx{p};
        auto spec = make_lm2(ctx);
        // spot check a sample through the generic path
        for (size_t i = 0; i < ops.size(); i += 97)
            CHECK(check_rb(spec, operator_matrix(ops[i], 3, p), ctx.from_int(1)).pass);
    }
}

TEST_CASE("search bounds and weight guards") {
    CHECK_THROWS_AS(enumerate_all(ScanConfig{"h4minus", 5, 1, 1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_all(ScanConfig{"lm2", 11, 1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_all(ScanConfig{"lm2", 3, 0, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_all(ScanConfig{"lm2", 3, 3, 1, 3}), std::invalid_argument);
}

TEST_CASE("lm2 coverage against the catalog reproduces the fixture") {
    ScanConfig cfg{"lm2", 3, 1, 2, 3};
    auto ops = enumerate_all(cfg);
    auto rep = coverage(ops, cfg);
    CHECK(rep.total == kLm2Total);
    CHECK(rep.unmatched.size() == kLm2Unmatched);
    auto fixture = load_fixture("unmatched_lm2_f3_w1.jsonl");
    REQUIRE(fixture.size() == rep.unmatched.size());
    for (size_t i = 0; i < fixture.size(); ++i) {
        CHECK(entries_text(rep.unmatched[i]) == fixture[i].first);
        CHECK(rep.unmatched[i].kernel_dim == fixture[i].second);
    }
    // the zero operator is matched (by the first all-free family)
    for (const auto& op : rep.unmatched) CHECK(entries_text(op) != "000000000");
    // matched + unmatched == total, and per-family counts account for matched
    size_t matched = 0;
    for (const auto& fc : rep.per_family) matched += fc.matched;
    CHECK(matched + rep.unmatched.size() == rep.total);
    // every unmatched operator is the psi-conjugate of some matched one: the
    // table lists those forms only up to the h <-> -h symmetry
    FpCtx f3{3};
    auto spec = make_lm2(f3);
    auto psi = make_psi(f3, spec);
    auto fams = families_for_algebra("lm2");
    for (const auto& op : rep.unmatched) {
        auto moved = conjugate(operator_matrix(op, 3, 3), psi);
        bool ok = false;
        for (auto* f : fams)
            if (membership(*f, moved, 1, 3)) {
                ok = true;
                break;
            }
        CHECK(ok);
    }
}

TEST_CASE("h4minus full scan and coverage reproduce the fixture") {
    ScanConfig cfg{"h4minus", 3, 1, 2, 4};
    auto ops = enumerate_all(cfg);
    CHECK(ops.size() == kH4MinusTotal);
    {
        // the found set is closed under conjugation by phi
        FpCtx f3{3};
        auto lie = make_h4minus(f3);
        auto phi = make_phi(f3, lie);
        std::unordered_set<uint64_t> keys;
        for (const auto& op : ops) keys.insert(fp_matrix_key(operator_matrix(op, 4, 3)));
        for (const auto& op : ops) {
            auto moved = conjugate(operator_matrix(op, 4, 3), phi);
            CHECK(keys.count(fp_matrix_key(moved)) == 1);
        }
    }
    auto rep = coverage(ops, cfg);
    CHECK(rep.unmatched.size() == kH4MinusUnmatched);
    auto fixture = load_fixture("unmatched_h4minus_f3_w1.jsonl");
    REQUIRE(fixture.size() == rep.unmatched.size());
    for (size_t i = 0; i < fixture.size(); ++i) {
        CHECK(entries_text(rep.unmatched[i]) == fixture[i].first);
        CHECK(rep.unmatched[i].kernel_dim == fixture[i].second);
    }
    // the three-dimensional-kernel gap decomposes into the two known parts:
    // operators vanishing on I = span(1,e,f), and phi-mirrors of the second
    // ker3 form
    FpCtx f3{3};
    auto lie = make_h4minus(f3);
    auto phi = make_phi(f3, lie);
    size_t vanish_on_I = 0, mirror = 0, other = 0;
    for (const auto& op : rep.unmatched) {
        if (op.kernel_dim != 3) continue;
        auto m = operator_matrix(op, 4, 3);
        bool vanishes = true;
        for (size_t c : {0ul, 2ul, 3ul})
            for (size_t r = 0; r < 4; ++r)
                if (!m.at(r, c).is_zero()) vanishes = false;
        if (vanishes) {
            ++vanish_on_I;
            continue;
        }
        if (membership(find_family("ker3.ii"), conjugate(m, phi), 1, 3)) ++mirror;
        else ++other;
    }
    CHECK(vanish_on_I == 72);
    CHECK(mirror == 81);
    CHECK(other == 0);
}
