#pragma once

#include "wham/linalg.hpp"
#include "wham/wspace.hpp"

#include <optional>
#include <vector>

namespace wham {

/// Result of enumerating all nonzero codewords. When not constant, `first`
/// and `second` are message vectors whose codewords have different weights.
struct ConstantWeightResult {
    bool constant = true;
    std::optional<Rational> weight;
    std::optional<Vec> first;
    std::optional<Vec> second;
    Rational first_weight = 0;
    Rational second_weight = 0;
};

/// Generator must have full row rank.
ConstantWeightResult is_constant_weight_bruteforce(const CodeMatrix& g, std::uint64_t cap = kDefaultCap);

/// Per-projective-point column weight sums of a full-rank generator. The code
/// has constant weight iff every sum is the same sigma.
struct SigmaReport {
    bool is_constant = true;
    std::optional<Rational> sigma;
    std::vector<Vec> points;
    std::vector<Rational> per_point;
    std::optional<std::size_t> violating_point;
};

SigmaReport sigma_check(const CodeMatrix& g, std::uint64_t cap = kDefaultCap);

/// Weight of any s-dimensional subcode of a k-dimensional constant-weight code
/// with point sum sigma: (q^k - q^(k-s)) * sigma / (q - 1).
Rational subspace_weight_formula(int k, int s, const Rational& sigma, int q);

/// Whether every projective point carries the same multiset of column
/// weights. On failure names two points and a weight whose counts differ.
struct MultisetConditionResult {
    bool holds = true;
    std::optional<std::size_t> point_i;
    std::optional<std::size_t> point_j;
    std::optional<Rational> weight;
    std::size_t count_i = 0;
    std::size_t count_j = 0;
};

MultisetConditionResult multiset_condition_check(const CodeMatrix& g, std::uint64_t cap = kDefaultCap);

/// Checks, by enumeration, that constant weight forces equal subcode weights
/// in every dimension (`forward`), and that equal weights at dimension m force
/// constant weight (`converse`, absent when k = 1).
struct UniformityCheck {
    bool constant_weight = false;
    bool uniform_at_m = false;
    bool forward = true;
    std::optional<bool> converse;
};

UniformityCheck check_subcode_uniformity(const CodeMatrix& g, std::size_t m, std::uint64_t cap = kDefaultCap);

/// Weight of the subcode spanned by `rows`, from the union of supports of
/// all its codewords.
Rational enumerated_subcode_weight(const Matrix& rows, const WeightedSpace& space, std::uint64_t cap = kDefaultCap);

/// Each projective point of F^[k] repeated r times, unit weights.
CodeMatrix simplex_generator(const Field& field, std::size_t k, std::size_t r, std::uint64_t cap = kDefaultCap);

/// One coordinate per (point, weight) entry, labelled P<point>_<copy>
/// (1-based). `class_budget[p]` is the weight multiset of point p in canonical
/// order; all classes must share the same sum.
CodeMatrix weighted_constant_builder(const Field& field, std::size_t k,
                                     const std::vector<std::vector<Rational>>& class_budget,
                                     std::uint64_t cap = kDefaultCap);

} // namespace wham
