#include "rbh4/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace rbh4 {

namespace {

// Flat mod-p tables and structure tensor for the scan inner loop.
struct FastAlgebra {
    size_t dim;
    long long p;
    AlgebraKind kind;
    uint8_t add[8][8];
    uint8_t mul[8][8];
    uint8_t c[4][4][4];                       // structure tensor mod p
    std::vector<std::pair<size_t, size_t>> pairs;  // residual order, failures first
    uint8_t lambda;

    FastAlgebra(const AlgebraSpec<Fp>& spec, long long prime, long long lam) {
        dim = spec.dim();
        p = prime;
        kind = spec.kind();
        lambda = static_cast<uint8_t>(((lam % p) + p) % p);
        for (long long a = 0; a < p; ++a)
            for (long long b = 0; b < p; ++b) {
                add[a][b] = static_cast<uint8_t>((a + b) % p);
                mul[a][b] = static_cast<uint8_t>((a * b) % p);
            }
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j)
                for (size_t k = 0; k < dim; ++k)
                    c[i][j][k] = static_cast<uint8_t>(spec.c(i, j, k).value());
        // Pair order front-loads the rejections: on the 4-dim Lie algebra the
        // (g,e) pair kills most candidates, so it goes first.
        pairs = rb_pairs(kind, dim);
        if (spec.name() == "h4minus" || spec.name() == "h4plus") {
            std::vector<std::pair<size_t, size_t>> pref = {{1, 2}, {1, 3}};
            for (auto pr : pairs)
                if (std::find(pref.begin(), pref.end(), pr) == pref.end()) pref.push_back(pr);
            pairs = pref;
        }
    }

    uint8_t neg(uint8_t a) const { return a == 0 ? 0 : static_cast<uint8_t>(p - a); }

    // m(u, v) via the structure tensor
    void product(const uint8_t* u, const uint8_t* v, uint8_t* out) const {
        for (size_t k = 0; k < dim; ++k) out[k] = 0;
        for (size_t i = 0; i < dim; ++i) {
            if (!u[i]) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (!v[j]) continue;
                uint8_t uv = mul[u[i]][v[j]];
                for (size_t k = 0; k < dim; ++k)
                    if (c[i][j][k]) out[k] = add[out[k]][mul[uv][c[i][j][k]]];
            }
        }
    }

    // Residual on pair (i,j) for the operator with columns cols[j][*].
    bool pair_holds(const uint8_t cols[4][4], size_t i, size_t j) const {
        uint8_t lhs[4], inner[4], t[4];
        product(cols[i], cols[j], lhs);
        // m(R e_i, e_j): u = cols[i], v = basis j
        for (size_t k = 0; k < dim; ++k) inner[k] = 0;
        for (size_t a = 0; a < dim; ++a) {
            if (!cols[i][a]) continue;
            for (size_t k = 0; k < dim; ++k)
                if (c[a][j][k]) inner[k] = add[inner[k]][mul[cols[i][a]][c[a][j][k]]];
        }
        // + m(e_i, R e_j)
        for (size_t b = 0; b < dim; ++b) {
            if (!cols[j][b]) continue;
            for (size_t k = 0; k < dim; ++k)
                if (c[i][b][k]) inner[k] = add[inner[k]][mul[cols[j][b]][c[i][b][k]]];
        }
        // + lambda * m(e_i, e_j)
        for (size_t k = 0; k < dim; ++k)
            if (c[i][j][k]) inner[k] = add[inner[k]][mul[lambda][c[i][j][k]]];
        // R(inner)
        for (size_t k = 0; k < dim; ++k) {
            t[k] = 0;
            for (size_t cidx = 0; cidx < dim; ++cidx)
                if (inner[cidx]) t[k] = add[t[k]][mul[cols[cidx][k]][inner[cidx]]];
        }
        for (size_t k = 0; k < dim; ++k)
            if (lhs[k] != t[k]) return false;
        return true;
    }

    bool is_rb(const uint8_t cols[4][4]) const {
        for (auto [i, j] : pairs)
            if (!pair_holds(cols, i, j)) return false;
        return true;
    }
};

size_t kernel_dim_mod_p(const std::vector<uint8_t>& entries, size_t dim, long long p) {
    FpCtx ctx{p};
    Matrix<Fp> m(dim, ctx.from_int(0));
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) m.at(r, c) = ctx.from_int(entries[r * dim + c]);
    return kernel_basis(m, ctx.from_int(0), ctx.from_int(1)).dim();
}

// Scan one partition: the first `prefix_len` row-major entries are fixed to
// the digits of `prefix`; the rest run through an odometer in ascending
// lexicographic order.
void scan_partition(const FastAlgebra& fa, uint64_t prefix, unsigned prefix_len,
                    std::vector<std::vector<uint8_t>>& found) {
    size_t n = fa.dim;
    size_t cells = n * n;
    std::vector<uint8_t> entry(cells, 0);
    for (unsigned i = 0; i < prefix_len; ++i) {
        uint64_t digit = prefix;
        for (unsigned j = i + 1; j < prefix_len; ++j) digit /= static_cast<uint64_t>(fa.p);
        entry[i] = static_cast<uint8_t>(digit % static_cast<uint64_t>(fa.p));
    }
    uint8_t cols[4][4] = {};
    auto load_cols = [&]() {
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) cols[c][r] = entry[r * n + c];
    };
    for (;;) {
        load_cols();
        if (fa.is_rb(cols)) found.push_back(entry);
        // advance odometer over entries [prefix_len, cells)
        size_t i = cells;
        while (i > prefix_len) {
            --i;
            if (++entry[i] < fa.p) break;
            entry[i] = 0;
            if (i == prefix_len) return;
        }
        if (i == prefix_len && entry[i] == 0) return;
        if (cells == prefix_len) return;  // degenerate: single matrix per partition
    }
}

}  // namespace

std::vector<FoundOperator> enumerate_all(const ScanConfig& cfg) {
    if (cfg.p != 3 && cfg.p != 5 && cfg.p != 7)
        throw std::invalid_argument("search: field must be one of F3, F5, F7");
    FpCtx ctx{cfg.p};
    auto spec = algebra_by_id(cfg.algebra, ctx);
    size_t n = spec.dim();
    if (n == 4 && cfg.p != 3)
        throw std::invalid_argument("search: space bound exceeded; 4-dimensional scans require F3");
    if (Fp(cfg.lambda, cfg.p).is_zero())
        throw std::invalid_argument("search: weight must be nonzero in the field");
    FastAlgebra fa(spec, cfg.p, cfg.lambda);

    unsigned prefix_len = std::min<unsigned>(cfg.prefix_len, static_cast<unsigned>(n * n));
    uint64_t partitions = 1;
    for (unsigned i = 0; i < prefix_len; ++i) partitions *= static_cast<uint64_t>(cfg.p);

    std::vector<std::vector<std::vector<uint8_t>>> per_partition(partitions);
    unsigned jobs = std::max(1u, cfg.jobs);
    std::vector<std::thread> workers;
    std::atomic<uint64_t> next{0};
    auto work = [&]() {
        for (;;) {
            uint64_t part = next.fetch_add(1);
            if (part >= partitions) return;
            scan_partition(fa, part, prefix_len, per_partition[part]);
        }
    };
    if (jobs == 1) {
        work();
    } else {
        for (unsigned t = 0; t < jobs; ++t) workers.emplace_back(work);
        for (auto& w : workers) w.join();
    }

    std::vector<FoundOperator> out;
    for (auto& part : per_partition)
        for (auto& entries : part) {
            FoundOperator op;
            op.kernel_dim = kernel_dim_mod_p(entries, n, cfg.p);
            op.entries = std::move(entries);
            out.push_back(std::move(op));
        }
    return out;
}

Matrix<Fp> operator_matrix(const FoundOperator& op, size_t dim, long long p) {
    FpCtx ctx{p};
    Matrix<Fp> m(dim, ctx.from_int(0));
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) m.at(r, c) = ctx.from_int(op.entries[r * dim + c]);
    return m;
}

CoverageReport coverage(const std::vector<FoundOperator>& ops, const ScanConfig& cfg) {
    auto families = families_for_algebra(cfg.algebra);
    CoverageReport rep;
    rep.total = ops.size();
    std::vector<std::unordered_set<uint64_t>> instance_sets;
    instance_sets.reserve(families.size());
    for (const auto* f : families) {
        std::unordered_set<uint64_t> keys;
        for (const auto& m : enumerate_instances(*f, cfg.p, cfg.lambda)) keys.insert(fp_matrix_key(m));
        instance_sets.push_back(std::move(keys));
        rep.per_family.push_back({(*f).id, 0});
    }
    FpCtx ctx{cfg.p};
    auto spec = algebra_by_id(cfg.algebra, ctx);
    size_t n = spec.dim();
    for (const auto& op : ops) {
        uint64_t key = fp_matrix_key(operator_matrix(op, n, cfg.p));
        bool matched = false;
        for (size_t i = 0; i < families.size(); ++i) {
            if (instance_sets[i].count(key)) {
                ++rep.per_family[i].matched;
                matched = true;
                break;
            }
        }
        if (!matched) rep.unmatched.push_back(op);
    }
    return rep;
}

CompareResult compare_lie_vs_assoc(long long p, long long lambda, unsigned jobs) {
    if (p != 3) throw std::invalid_argument("compare: the full 4-dimensional scan requires F3");
    ScanConfig lie_cfg{"h4minus", p, lambda, jobs, 4};
    ScanConfig assoc_cfg{"h4", p, lambda, jobs, 4};
    auto lie_ops = enumerate_all(lie_cfg);
    auto assoc_ops = enumerate_all(assoc_cfg);

    FpCtx ctx{p};
    Matrix<Fp> to_xgx = ef_to_xgx_matrix(ctx);  // (1,g,e,f) coords -> (1,g,x,gx) coords
    Matrix<Fp> to_ef = xgx_to_ef_matrix(ctx);
    // Associative-pass set, converted to the 1,g,e,f basis.
    std::unordered_set<uint64_t> assoc_in_ef;
    std::unordered_set<uint64_t> lie_keys;
    for (const auto& op : lie_ops) lie_keys.insert(fp_matrix_key(operator_matrix(op, 4, p)));
    CompareResult res;
    res.lie_total = lie_ops.size();
    res.assoc_total = assoc_ops.size();
    for (const auto& op : assoc_ops) {
        Matrix<Fp> m = operator_matrix(op, 4, p);
        Matrix<Fp> ef = to_ef * m * to_xgx;
        uint64_t key = fp_matrix_key(ef);
        assoc_in_ef.insert(key);
        if (!lie_keys.count(key)) res.prop1_holds = false;
    }
    for (const auto& op : lie_ops) {
        Matrix<Fp> m = operator_matrix(op, 4, p);
        uint64_t key = fp_matrix_key(m);
        if (assoc_in_ef.count(key)) continue;
        ComparePair pair;
        pair.op = op;
        Matrix<Fp> xg = to_xgx * m * to_ef;
        for (size_t r = 0; r < 4; ++r)
            for (size_t c = 0; c < 4; ++c)
                pair.assoc_entries.push_back(static_cast<uint8_t>(xg.at(r, c).value()));
        res.lie_not_assoc.push_back(std::move(pair));
    }
    return res;
}

}  // namespace rbh4
