#pragma once

#include "wham/extension.hpp"
#include "wham/linalg.hpp"
#include "wham/wspace.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace wham {

/// Seeded source for random instances. Draws use only the raw 64-bit output
/// of mt19937_64, so a seed reproduces the same instances on every platform.
class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }
    std::uint64_t next() { return engine_(); }

    template <typename T>
    const T& pick(std::span<const T> items)
    {
        return items[below(items.size())];
    }

    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

Field random_field(InstanceRng& rng, std::span<const int> orders);
Elem random_element(InstanceRng& rng, const Field& field);
Elem random_nonzero(InstanceRng& rng, const Field& field);
Rational random_weight(InstanceRng& rng, int max_numerator, int max_denominator);
/// Weights drawn from a small pool of values, so that ties and equal-sum
/// coincidences are common.
WeightedSpace random_space(InstanceRng& rng, std::size_t n, int max_numerator, int max_denominator);
Matrix random_matrix(InstanceRng& rng, const Field& field, std::size_t rows, std::size_t cols);
/// Random matrix whose rows are independent (rows <= cols).
Matrix random_full_rank(InstanceRng& rng, const Field& field, std::size_t rows, std::size_t cols);
Subspace random_subspace(InstanceRng& rng, const Field& field, std::size_t k, std::size_t dim);
/// Weight-preserving permutation with random nonzero scalars.
MonomialIsometry random_isometry(InstanceRng& rng, const WeightedSpace& space, const Field& field);

/// A constant-weight code: random weight classes with a common sum per
/// projective point, optionally with extra zero columns, then a random
/// coordinate shuffle and column scaling.
CodeMatrix random_constant_weight_code(InstanceRng& rng, const Field& field, std::size_t k,
                                       std::uint64_t cap = kDefaultCap);

} // namespace wham
