#include "wham/cwc.hpp"

#include "wham/error.hpp"

#include <map>
#include <set>

namespace wham {

namespace {

void require_full_rank(const CodeMatrix& g)
{
    if (rank(g.grid()) != g.k())
        throw InvalidArgument("generator matrix is rank-deficient (rank " + std::to_string(rank(g.grid())) +
                              " < k = " + std::to_string(g.k()) + ")");
}

} // namespace

ConstantWeightResult is_constant_weight_bruteforce(const CodeMatrix& g, std::uint64_t cap)
{
    require_full_rank(g);
    const int q = g.field().q();
    const auto count = checked_power(q, g.k(), cap);
    ConstantWeightResult out;
    for (std::uint64_t code = 1; code < count; ++code) {
        auto gamma = decode(code, g.k(), q);
        auto weight = vector_weight(g.image(gamma), g.space());
        if (!out.first) {
            out.first = std::move(gamma);
            out.first_weight = weight;
            out.weight = std::move(weight);
        } else if (weight != out.first_weight) {
            out.constant = false;
            out.weight.reset();
            out.second = std::move(gamma);
            out.second_weight = std::move(weight);
            return out;
        }
    }
    return out;
}

SigmaReport sigma_check(const CodeMatrix& g, std::uint64_t cap)
{
    require_full_rank(g);
    const ProjectiveSpace points(g.field(), g.k(), cap);
    SigmaReport out;
    out.points = points.points();
    out.per_point = point_weight_sums(g, points);
    for (std::size_t i = 1; i < out.per_point.size(); ++i)
        if (out.per_point[i] != out.per_point[0]) {
            out.is_constant = false;
            out.violating_point = i;
            break;
        }
    if (out.is_constant)
        out.sigma = out.per_point.front();
    return out;
}

Rational subspace_weight_formula(int k, int s, const Rational& sigma, int q)
{
    if (s < 0 || s > k)
        throw InvalidArgument("subcode dimension must lie in [0, k]");
    const BigInt base = q;
    const BigInt qk = boost::multiprecision::pow(base, static_cast<unsigned>(k));
    const BigInt qks = boost::multiprecision::pow(base, static_cast<unsigned>(k - s));
    return Rational(qk - qks) * sigma / Rational(q - 1);
}

MultisetConditionResult multiset_condition_check(const CodeMatrix& g, std::uint64_t cap)
{
    require_full_rank(g);
    const ProjectiveSpace points(g.field(), g.k(), cap);
    const auto classes = point_classes(g, points);
    std::vector<std::map<Rational, std::size_t>> multisets(points.size());
    std::set<Rational> weights;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i]) {
            ++multisets[*classes[i]][g.space().weight(i)];
            weights.insert(g.space().weight(i));
        }

    MultisetConditionResult out;
    auto count = [](const std::map<Rational, std::size_t>& m, const Rational& w) {
        const auto it = m.find(w);
        return it == m.end() ? std::size_t{0} : it->second;
    };
    for (std::size_t j = 1; j < multisets.size(); ++j)
        for (const auto& w : weights) {
            const auto ci = count(multisets[0], w);
            const auto cj = count(multisets[j], w);
            if (ci != cj) {
                out.holds = false;
                out.point_i = 0;
                out.point_j = j;
                out.weight = w;
                out.count_i = ci;
                out.count_j = cj;
                return out;
            }
        }
    return out;
}

Rational enumerated_subcode_weight(const Matrix& rows, const WeightedSpace& space, std::uint64_t cap)
{
    const int q = rows.field().q();
    const auto count = checked_power(q, rows.rows(), cap);
    std::vector<bool> covered(rows.cols(), false);
    for (std::uint64_t code = 0; code < count; ++code) {
        const auto word = vec_mul(decode(code, rows.rows(), q), rows);
        for (std::size_t i = 0; i < word.size(); ++i)
            if (!word[i].is_zero())
                covered[i] = true;
    }
    Rational total = 0;
    for (std::size_t i = 0; i < covered.size(); ++i)
        if (covered[i])
            total += space.weight(i);
    return total;
}

UniformityCheck check_subcode_uniformity(const CodeMatrix& g, std::size_t m, std::uint64_t cap)
{
    UniformityCheck out;
    out.constant_weight = is_constant_weight_bruteforce(g, cap).constant;

    auto uniform_at = [&](std::size_t d) {
        std::optional<Rational> first;
        for (const auto& b : subspaces(g.k(), d, g.field(), cap)) {
            auto weight = enumerated_subcode_weight(g.image_of(b), g.space(), cap);
            if (!first)
                first = std::move(weight);
            else if (weight != *first)
                return false;
        }
        return true;
    };

    if (out.constant_weight)
        for (std::size_t d = 0; d <= g.k(); ++d)
            if (!uniform_at(d)) {
                out.forward = false;
                break;
            }
    if (m > g.k())
        throw InvalidArgument("subcode dimension exceeds k");
    out.uniform_at_m = uniform_at(m);
    if (m >= 1 && m + 1 <= g.k())
        out.converse = !out.uniform_at_m || out.constant_weight;
    return out;
}

CodeMatrix simplex_generator(const Field& field, std::size_t k, std::size_t r, std::uint64_t cap)
{
    if (k < 1 || r < 1)
        throw InvalidArgument("simplex construction needs k >= 1 and r >= 1");
    const ProjectiveSpace points(field, k, cap);
    std::vector<std::vector<Rational>> budget(points.size(), std::vector<Rational>(r, Rational(1)));
    return weighted_constant_builder(field, k, budget, cap);
}

CodeMatrix weighted_constant_builder(const Field& field, std::size_t k,
                                     const std::vector<std::vector<Rational>>& class_budget, std::uint64_t cap)
{
    const ProjectiveSpace points(field, k, cap);
    if (class_budget.size() != points.size())
        throw InvalidArgument("expected one weight class per projective point (" + std::to_string(points.size()) +
                              "), got " + std::to_string(class_budget.size()));
    std::optional<Rational> sigma;
    std::vector<std::string> labels;
    std::vector<Rational> weights;
    std::vector<Vec> columns;
    for (std::size_t p = 0; p < class_budget.size(); ++p) {
        Rational sum = 0;
        for (std::size_t c = 0; c < class_budget[p].size(); ++c) {
            const auto& w = class_budget[p][c];
            if (w <= 0)
                throw InvalidArgument("class weights must be positive");
            sum += w;
            labels.push_back("P" + std::to_string(p + 1) + "_" + std::to_string(c + 1));
            weights.push_back(w);
            columns.push_back(points.point(p));
        }
        if (!sigma)
            sigma = sum;
        else if (sum != *sigma)
            throw InvalidArgument("weight classes have unequal sums (" + to_string(*sigma) + " vs " + to_string(sum) +
                                  " at point " + std::to_string(p + 1) + ")");
    }
    if (columns.empty())
        throw InvalidArgument("weight classes are empty");

    Matrix grid(field, k, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < k; ++r)
            grid.set(r, c, columns[c][r]);
    return CodeMatrix(WeightedSpace(std::move(labels), std::move(weights)), std::move(grid));
}

} // namespace wham
