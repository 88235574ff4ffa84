#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rbh4/catalog.hpp"

namespace rbh4 {

// One operator found by an exhaustive scan, in row-major F_p entries.
struct FoundOperator {
    std::vector<uint8_t> entries;  // dim*dim, row-major
    size_t kernel_dim = 0;
};

struct ScanConfig {
    std::string algebra;  // h4 | h4minus | h4plus | lm2 | lm3
    long long p = 3;
    long long lambda = 1;
    unsigned jobs = 1;
    unsigned prefix_len = 4;  // entries fixed per partition
};

// All matrices over F_p satisfying the weighted identity on the named
// algebra, in ascending row-major (lexicographic) order. Partitions of the
// search space run independently; output is independent of the worker count.
// Refuses search spaces beyond p^(dim^2) ~ 10^8: dim 3 allows p in {3,5,7},
// dim 4 only p = 3.
std::vector<FoundOperator> enumerate_all(const ScanConfig& cfg);

Matrix<Fp> operator_matrix(const FoundOperator& op, size_t dim, long long p);

struct FamilyCount {
    std::string family;
    size_t matched = 0;  // operators counted under their first matching family
};

struct CoverageReport {
    size_t total = 0;
    std::vector<FamilyCount> per_family;  // catalog order
    std::vector<FoundOperator> unmatched;
};

// Match every found operator against the catalog families on the same
// algebra (fixed variants included); an operator counts once, under the
// first family in catalog order whose instance set contains it.
CoverageReport coverage(const std::vector<FoundOperator>& ops, const ScanConfig& cfg);

struct ComparePair {
    FoundOperator op;                     // h4minus basis entries
    std::vector<uint8_t> assoc_entries;   // same operator in the 1,g,x,gx basis
};

struct CompareResult {
    std::vector<ComparePair> lie_not_assoc;
    size_t lie_total = 0;
    size_t assoc_total = 0;
    bool prop1_holds = true;  // every associative pass also passes the Lie check
};

// Answers the Lie-versus-associative question at F_p scale: scans both
// identities over the full matrix space and returns the Lie-only operators.
CompareResult compare_lie_vs_assoc(long long p, long long lambda, unsigned jobs);

}  // namespace rbh4
