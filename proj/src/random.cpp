#include "wham/random.hpp"

#include "wham/cwc.hpp"
#include "wham/error.hpp"

#include <map>
#include <numeric>

namespace wham {

Field random_field(InstanceRng& rng, std::span<const int> orders) { return Field::of_order(rng.pick(orders)); }

Elem random_element(InstanceRng& rng, const Field& field)
{
    return field.element(static_cast<int>(rng.below(static_cast<std::uint64_t>(field.q()))));
}

Elem random_nonzero(InstanceRng& rng, const Field& field)
{
    return field.element(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(field.q() - 1))));
}

Rational random_weight(InstanceRng& rng, int max_numerator, int max_denominator)
{
    return Rational(rng.between(1, max_numerator), rng.between(1, max_denominator));
}

WeightedSpace random_space(InstanceRng& rng, std::size_t n, int max_numerator, int max_denominator)
{
    std::vector<Rational> pool;
    const int pool_size = rng.between(1, 3);
    for (int i = 0; i < pool_size; ++i)
        pool.push_back(random_weight(rng, max_numerator, max_denominator));
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < n; ++i)
        weights.push_back(rng.chance(25) ? random_weight(rng, max_numerator, max_denominator)
                                         : rng.pick(std::span<const Rational>(pool)));
    return WeightedSpace::numbered(std::move(weights));
}

Matrix random_matrix(InstanceRng& rng, const Field& field, std::size_t rows, std::size_t cols)
{
    Matrix out(field, rows, cols);
    const bool sparse = rng.chance(30);
    for (std::size_t c = 0; c < cols; ++c) {
        if (rng.chance(15))
            continue;
        for (std::size_t r = 0; r < rows; ++r)
            if (!sparse || rng.chance(40))
                out.set(r, c, random_element(rng, field));
    }
    return out;
}

Matrix random_full_rank(InstanceRng& rng, const Field& field, std::size_t rows, std::size_t cols)
{
    if (rows > cols)
        throw InvalidArgument("cannot have more independent rows than columns");
    while (true) {
        Matrix m(field, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.set(r, c, random_element(rng, field));
        if (rank(m) == rows)
            return m;
    }
}

Subspace random_subspace(InstanceRng& rng, const Field& field, std::size_t k, std::size_t dim)
{
    if (dim == 0)
        return Subspace::zero(field, k);
    return Subspace::from_generators(random_full_rank(rng, field, dim, k));
}

MonomialIsometry random_isometry(InstanceRng& rng, const WeightedSpace& space, const Field& field)
{
    std::map<Rational, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < space.size(); ++i)
        classes[space.weight(i)].push_back(i);
    MonomialIsometry phi;
    phi.perm.resize(space.size());
    phi.scalars.resize(space.size());
    for (auto& [weight, members] : classes) {
        auto targets = members;
        rng.shuffle(targets);
        for (std::size_t t = 0; t < members.size(); ++t)
            phi.perm[members[t]] = targets[t];
    }
    for (auto& c : phi.scalars)
        c = random_nonzero(rng, field);
    return phi;
}

CodeMatrix random_constant_weight_code(InstanceRng& rng, const Field& field, std::size_t k, std::uint64_t cap)
{
    const ProjectiveSpace points(field, k, cap);
    const Rational sigma = random_weight(rng, 10, 10);

    auto random_class = [&] {
        const int parts = rng.between(1, 3);
        std::vector<int> units;
        for (int i = 0; i < parts; ++i)
            units.push_back(rng.between(1, 3));
        const int total = std::accumulate(units.begin(), units.end(), 0);
        std::vector<Rational> weights;
        for (int u : units)
            weights.push_back(sigma * u / total);
        return weights;
    };
    std::vector<std::vector<Rational>> budget;
    if (rng.chance(50)) {
        budget.assign(points.size(), random_class());
    } else {
        for (std::size_t p = 0; p < points.size(); ++p)
            budget.push_back(random_class());
    }
    const CodeMatrix base = weighted_constant_builder(field, k, budget, cap);

    std::vector<std::string> labels = base.space().labels();
    std::vector<Rational> weights = base.space().weights();
    std::vector<Vec> columns;
    for (std::size_t c = 0; c < base.length(); ++c)
        columns.push_back(vec_scale(base.grid().column(c), random_nonzero(rng, field), field));
    const int zeros = rng.between(0, 2);
    for (int z = 0; z < zeros; ++z) {
        labels.push_back("Z" + std::to_string(z + 1));
        weights.push_back(random_weight(rng, 10, 10));
        columns.emplace_back(k, kZero);
    }

    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    std::vector<std::string> shuffled_labels;
    std::vector<Rational> shuffled_weights;
    Matrix grid(field, k, order.size());
    for (std::size_t c = 0; c < order.size(); ++c) {
        shuffled_labels.push_back(labels[order[c]]);
        shuffled_weights.push_back(weights[order[c]]);
        for (std::size_t r = 0; r < k; ++r)
            grid.set(r, c, columns[order[c]][r]);
    }
    return CodeMatrix(WeightedSpace(std::move(shuffled_labels), std::move(shuffled_weights)), std::move(grid));
}

} // namespace wham
