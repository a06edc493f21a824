#include "wham/extension.hpp"

#include "wham/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace wham {

MonomialIsometry MonomialIsometry::identity(std::size_t n)
{
    MonomialIsometry out;
    out.perm.resize(n);
    std::iota(out.perm.begin(), out.perm.end(), std::size_t{0});
    out.scalars.assign(n, kOne);
    return out;
}

Vec MonomialIsometry::apply(std::span<const Elem> alpha, const Field& field) const
{
    if (alpha.size() != size())
        throw InvalidArgument("vector length does not match the isometry");
    Vec out(size(), kZero);
    for (std::size_t i = 0; i < size(); ++i)
        out[perm[i]] = field.mul(alpha[i], scalars[i]);
    return out;
}

Matrix MonomialIsometry::apply(const Matrix& l) const
{
    if (l.cols() != size())
        throw InvalidArgument("matrix width does not match the isometry");
    const Field& f = l.field();
    Matrix out(f, l.rows(), l.cols());
    for (std::size_t r = 0; r < l.rows(); ++r)
        for (std::size_t i = 0; i < size(); ++i)
            out.set(r, perm[i], f.mul(l(r, i), scalars[i]));
    return out;
}

Matrix MonomialIsometry::matrix(const Field& field) const
{
    Matrix q(field, size(), size());
    for (std::size_t i = 0; i < size(); ++i)
        q.set(i, perm[i], scalars[i]);
    return q;
}

bool is_isometry(const MonomialIsometry& phi, const WeightedSpace& space, const Field& field, bool exhaustive,
                 std::uint64_t cap)
{
    const std::size_t n = space.size();
    if (phi.perm.size() != n || phi.scalars.size() != n)
        return false;
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (phi.perm[i] >= n || hit[phi.perm[i]])
            return false;
        hit[phi.perm[i]] = true;
        if (phi.scalars[i].is_zero() || phi.scalars[i].index >= field.q())
            return false;
        if (space.weight(i) != space.weight(phi.perm[i]))
            return false;
    }
    if (!exhaustive)
        return true;
    const auto count = checked_power(field.q(), n, cap);
    for (std::uint64_t code = 0; code < count; ++code) {
        const auto alpha = decode(code, n, field.q());
        if (vector_weight(phi.apply(alpha, field), space) != vector_weight(alpha, space))
            return false;
    }
    return true;
}

namespace {

void require_same_shape(const CodeMatrix& l, const CodeMatrix& m)
{
    if (!(l.field() == m.field()))
        throw InvalidArgument("maps are over different fields");
    if (!(l.space() == m.space()))
        throw InvalidArgument("maps have different weighted coordinate spaces");
    if (l.k() != m.k())
        throw InvalidArgument("maps have different source dimensions");
}

} // namespace

EquivalenceResult locally_equivalent_bruteforce(const CodeMatrix& l, const CodeMatrix& m, std::uint64_t cap)
{
    require_same_shape(l, m);
    const int q = l.field().q();
    const auto count = checked_power(q, l.k(), cap);
    EquivalenceResult out;
    for (std::uint64_t code = 0; code < count; ++code) {
        const auto gamma = decode(code, l.k(), q);
        auto left = vector_weight(l.image(gamma), l.space());
        auto right = vector_weight(m.image(gamma), m.space());
        if (left != right) {
            out.equivalent = false;
            out.witness = gamma;
            out.left = std::move(left);
            out.right = std::move(right);
            return out;
        }
    }
    return out;
}

EquivalenceResult locally_equivalent_projective(const CodeMatrix& l, const CodeMatrix& m, std::uint64_t cap)
{
    require_same_shape(l, m);
    const ProjectiveSpace points(l.field(), l.k(), cap);
    const auto left = point_weight_sums(l, points);
    const auto right = point_weight_sums(m, points);
    EquivalenceResult out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (left[i] != right[i]) {
            out.equivalent = false;
            out.witness = points.point(i);
            out.left = left[i];
            out.right = right[i];
            break;
        }
    return out;
}

std::vector<std::pair<Subspace, Rational>> subspace_weight_profile(const CodeMatrix& l, std::size_t m,
                                                                   std::uint64_t cap)
{
    if (m < 1 || m > l.k())
        throw InvalidArgument("profile dimension must lie in [1, k]");
    std::vector<std::pair<Subspace, Rational>> out;
    for (auto& b : subspaces(l.k(), m, l.field(), cap)) {
        auto weight = set_weight(l.image_of(b), l.space());
        out.emplace_back(std::move(b), std::move(weight));
    }
    return out;
}

LabelSet all_coordinates(const WeightedSpace& space)
{
    LabelSet out(space.size());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

namespace {

// Distinct weight values of H and K (descending), scaled to a common integer
// denominator, with each side's coordinates per value in label order.
struct ValueClasses {
    std::vector<Rational> values;
    std::vector<std::int64_t> scaled;
    std::vector<std::vector<std::size_t>> h;
    std::vector<std::vector<std::size_t>> k;

    std::size_t size() const { return values.size(); }
    int nh(std::size_t j) const { return static_cast<int>(h[j].size()); }
    int nk(std::size_t j) const { return static_cast<int>(k[j].size()); }
};

ValueClasses classify(const LabelSet& h, const LabelSet& k, const WeightedSpace& space)
{
    std::map<Rational, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::greater<>> by_value;
    for (auto i : h)
        by_value[space.weight(i)].first.push_back(i);
    for (auto i : k)
        by_value[space.weight(i)].second.push_back(i);

    ValueClasses out;
    BigInt common = 1;
    for (const auto& [value, sides] : by_value)
        common = boost::multiprecision::lcm(common, BigInt(boost::multiprecision::denominator(value)));

    BigInt bound = 0;
    std::vector<BigInt> scaled;
    for (auto& [value, sides] : by_value) {
        auto [hs, ks] = std::move(sides);
        std::sort(hs.begin(), hs.end());
        std::sort(ks.begin(), ks.end());
        scaled.push_back(boost::multiprecision::numerator(Rational(value * common)));
        bound += scaled.back() * static_cast<long long>(std::max(hs.size(), ks.size()));
        out.values.push_back(value);
        out.h.push_back(std::move(hs));
        out.k.push_back(std::move(ks));
    }
    if (bound > BigInt(std::int64_t{1} << 62))
        throw InvalidArgument("weights too large for exact subset-sum enumeration");
    for (const auto& w : scaled)
        out.scaled.push_back(static_cast<std::int64_t>(w));
    return out;
}

UdpCounterexample make_counterexample(const ValueClasses& classes, const std::vector<int>& from_h,
                                      const std::vector<int>& from_k)
{
    UdpCounterexample out;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        for (int t = 0; t < from_h[j]; ++t) {
            out.from_h.push_back(classes.h[j][static_cast<std::size_t>(t)]);
            out.multiset_h.push_back(classes.values[j]);
            out.sum += classes.values[j];
        }
        for (int t = 0; t < from_k[j]; ++t) {
            out.from_k.push_back(classes.k[j][static_cast<std::size_t>(t)]);
            out.multiset_k.push_back(classes.values[j]);
        }
    }
    std::sort(out.from_h.begin(), out.from_h.end());
    std::sort(out.from_k.begin(), out.from_k.end());
    std::sort(out.multiset_h.begin(), out.multiset_h.end());
    std::sort(out.multiset_k.begin(), out.multiset_k.end());
    return out;
}

// Calls visit(digits, sum) for every digit vector with lo[j] <= digits[j] <= hi[j];
// the last position varies fastest. Stops early when visit returns true.
template <typename Visit>
bool for_each_box_point(const std::vector<int>& lo, const std::vector<int>& hi, const std::vector<std::int64_t>& w,
                        Visit&& visit)
{
    std::vector<int> digits(lo);
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < lo.size(); ++j)
        sum += lo[j] * w[j];
    while (true) {
        if (visit(digits, sum))
            return true;
        bool advanced = false;
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (digits[j] < hi[j]) {
                ++digits[j];
                sum += w[j];
                advanced = true;
                break;
            }
            sum -= (digits[j] - lo[j]) * w[j];
            digits[j] = lo[j];
        }
        if (!advanced)
            return false;
    }
}

// Subsets are enumerated up to their weight multiset (a count per distinct
// value). Per sum, keep the two heaviest-first count vectors of each side.
UdpReport udp_direct(const ValueClasses& classes)
{
    const std::size_t d = classes.size();
    std::vector<std::uint64_t> place(d, 1);
    for (std::size_t j = d; j-- > 1;)
        place[j - 1] = place[j] * static_cast<std::uint64_t>(std::max(classes.nh(j), classes.nk(j)) + 1);

    struct Top2 {
        std::uint64_t best = 0;
        std::uint64_t second = 0;
        bool has_second = false;
    };
    auto collect = [&](bool h_side) {
        std::unordered_map<std::int64_t, Top2> table;
        std::vector<int> lo(d, 0);
        std::vector<int> hi(d);
        for (std::size_t j = 0; j < d; ++j)
            hi[j] = h_side ? classes.nh(j) : classes.nk(j);
        for_each_box_point(lo, hi, classes.scaled, [&](const std::vector<int>& counts, std::int64_t sum) {
            std::uint64_t code = 0;
            for (std::size_t j = 0; j < d; ++j)
                code += static_cast<std::uint64_t>(counts[j]) * place[j];
            auto [it, inserted] = table.try_emplace(sum, Top2{code, 0, false});
            if (inserted)
                return false;
            auto& top = it->second;
            if (code > top.best) {
                top.second = top.best;
                top.best = code;
                top.has_second = true;
            } else if (!top.has_second || code > top.second) {
                top.second = code;
                top.has_second = true;
            }
            return false;
        });
        return table;
    };
    const auto h_table = collect(true);
    const auto k_table = collect(false);

    std::optional<std::int64_t> conflict;
    for (const auto& [sum, top_h] : h_table) {
        const auto it = k_table.find(sum);
        if (it == k_table.end())
            continue;
        const auto& top_k = it->second;
        if (top_h.has_second || top_k.has_second || top_h.best != top_k.best)
            if (!conflict || sum < *conflict)
                conflict = sum;
    }
    if (!conflict)
        return {};

    const auto& top_h = h_table.at(*conflict);
    const auto& top_k = k_table.at(*conflict);
    std::uint64_t i_code = top_h.best;
    std::uint64_t j_code = top_k.best;
    if (j_code == i_code) {
        if (top_k.has_second)
            j_code = top_k.second;
        else
            i_code = top_h.second;
    }
    auto decode_counts = [&](std::uint64_t code) {
        std::vector<int> counts(d);
        for (std::size_t j = 0; j < d; ++j) {
            const auto radix = static_cast<std::uint64_t>(std::max(classes.nh(j), classes.nk(j)) + 1);
            counts[j] = static_cast<int>((code / place[j]) % radix);
        }
        return counts;
    };
    return {false, make_counterexample(classes, decode_counts(i_code), decode_counts(j_code))};
}

// UDP fails iff some nonzero integer vector e with -|K_v| <= e_v <= |H_v| has
// sum_v e_v * v = 0; split the values in two halves and match opposite sums.
UdpReport udp_meet_in_middle(const ValueClasses& classes)
{
    const std::size_t d = classes.size();
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto box = [&](std::size_t j) { return classes.nh(j) + classes.nk(j) + 1; };
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return box(a) > box(b); });
    std::vector<std::size_t> part_a;
    std::vector<std::size_t> part_b;
    double log_a = 0;
    double log_b = 0;
    for (auto j : order) {
        if (log_a <= log_b) {
            part_a.push_back(j);
            log_a += std::log(static_cast<double>(box(j)));
        } else {
            part_b.push_back(j);
            log_b += std::log(static_cast<double>(box(j)));
        }
    }
    std::sort(part_a.begin(), part_a.end());
    std::sort(part_b.begin(), part_b.end());

    auto bounds = [&](const std::vector<std::size_t>& part) {
        std::vector<int> lo;
        std::vector<int> hi;
        std::vector<std::int64_t> w;
        for (auto j : part) {
            lo.push_back(-classes.nk(j));
            hi.push_back(classes.nh(j));
            w.push_back(classes.scaled[j]);
        }
        return std::tuple{lo, hi, w};
    };
    auto witness = [&](const std::vector<int>& da, const std::vector<int>& db) {
        std::vector<int> from_h(d, 0);
        std::vector<int> from_k(d, 0);
        auto spread = [&](const std::vector<std::size_t>& part, const std::vector<int>& delta) {
            for (std::size_t t = 0; t < part.size(); ++t) {
                from_h[part[t]] = std::max(delta[t], 0);
                from_k[part[t]] = std::max(-delta[t], 0);
            }
        };
        spread(part_a, da);
        spread(part_b, db);
        return UdpReport{false, make_counterexample(classes, from_h, from_k)};
    };
    auto nonzero = [](const std::vector<int>& v) { return std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }); };

    const auto [lo_a, hi_a, w_a] = bounds(part_a);
    const auto [lo_b, hi_b, w_b] = bounds(part_b);
    std::optional<UdpReport> found;

    std::unordered_map<std::int64_t, std::vector<int>> sums_a;
    for_each_box_point(lo_a, hi_a, w_a, [&](const std::vector<int>& delta, std::int64_t sum) {
        if (sum == 0 && nonzero(delta)) {
            found = witness(delta, std::vector<int>(part_b.size(), 0));
            return true;
        }
        sums_a.try_emplace(sum, delta);
        return false;
    });
    if (found)
        return *found;

    for_each_box_point(lo_b, hi_b, w_b, [&](const std::vector<int>& delta, std::int64_t sum) {
        if (!nonzero(delta))
            return false;
        const auto it = sums_a.find(-sum);
        if (it == sums_a.end())
            return false;
        found = witness(it->second, delta);
        return true;
    });
    return found ? *found : UdpReport{};
}

} // namespace

UdpReport udp_check(const LabelSet& h, const LabelSet& k, const WeightedSpace& space, UdpMethod method)
{
    if (h.size() > kUdpMaxSetSize || k.size() > kUdpMaxSetSize)
        throw CapExceeded("UDP check limited to sets of at most " + std::to_string(kUdpMaxSetSize) +
                              " coordinates");
    for (const auto* set : {&h, &k})
        for (auto i : *set)
            if (i >= space.size())
                throw InvalidArgument("coordinate index out of range");
    const auto classes = classify(h, k, space);
    if (method == UdpMethod::Auto)
        method = (h.size() > kUdpDirectLimit || k.size() > kUdpDirectLimit) ? UdpMethod::MeetInMiddle
                                                                             : UdpMethod::Direct;
    return method == UdpMethod::Direct ? udp_direct(classes) : udp_meet_in_middle(classes);
}

ExtensionOutcome try_extend_to_isometry(const CodeMatrix& l, const CodeMatrix& m, std::uint64_t cap)
{
    require_same_shape(l, m);
    ExtensionOutcome out;
    out.local = locally_equivalent_projective(l, m, cap);
    out.udp = udp_check(joint_support(l.grid()), joint_support(m.grid()), l.space());
    if (!out.local.equivalent || !out.udp.holds)
        return out;

    const Field& f = l.field();
    const WeightedSpace& space = l.space();
    const ProjectiveSpace points(f, l.k(), cap);
    const auto tau = point_classes(l, points);
    const auto eta = point_classes(m, points);

    using Key = std::pair<std::size_t, Rational>;
    std::map<Key, std::vector<std::size_t>> left_on;
    std::map<Key, std::vector<std::size_t>> right_on;
    std::map<Rational, std::vector<std::size_t>> left_off;
    std::map<Rational, std::vector<std::size_t>> right_off;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (tau[i])
            left_on[{*tau[i], space.weight(i)}].push_back(i);
        else
            left_off[space.weight(i)].push_back(i);
        if (eta[i])
            right_on[{*eta[i], space.weight(i)}].push_back(i);
        else
            right_off[space.weight(i)].push_back(i);
    }

    MonomialIsometry phi;
    phi.perm.assign(space.size(), 0);
    phi.scalars.assign(space.size(), kOne);
    auto match = [](const auto& from, const auto& to, auto&& assign) {
        if (from.size() != to.size())
            throw Error("class structure mismatch while extending an isometry");
        for (const auto& [key, sources] : from) {
            const auto it = to.find(key);
            if (it == to.end() || it->second.size() != sources.size())
                throw Error("class structure mismatch while extending an isometry");
            for (std::size_t t = 0; t < sources.size(); ++t)
                assign(sources[t], it->second[t]);
        }
    };
    match(left_on, right_on, [&](std::size_t i, std::size_t j) {
        phi.perm[i] = j;
        const auto col_l = l.grid().column(i);
        const auto col_m = m.grid().column(j);
        const auto lead = static_cast<std::size_t>(
            std::find_if(col_l.begin(), col_l.end(), [](Elem e) { return !e.is_zero(); }) - col_l.begin());
        phi.scalars[i] = f.div(col_m[lead], col_l[lead]);
    });
    match(left_off, right_off, [&](std::size_t i, std::size_t j) {
        phi.perm[i] = j;
        phi.scalars[i] = kOne;
    });

    if (!(phi.apply(l.grid()) == m.grid()))
        throw Error("constructed monomial map does not reproduce the target matrix");
    out.isometry = std::move(phi);
    return out;
}

MonomialIsometry extend_to_isometry(const CodeMatrix& l, const CodeMatrix& m, std::uint64_t cap)
{
    auto outcome = try_extend_to_isometry(l, m, cap);
    if (!outcome.local.equivalent)
        throw PreconditionFailed("maps are not locally equivalent");
    if (!outcome.udp.holds)
        throw PreconditionFailed("supports of the two images fail the unique decomposition property");
    return std::move(*outcome.isometry);
}

MepReport mep_check(const WeightedSpace& space)
{
    const auto omega = all_coordinates(space);
    MepReport out;
    out.udp = udp_check(omega, omega, space);
    out.holds = out.udp.holds;
    if (!out.holds) {
        Vec alpha(space.size(), kZero);
        Vec beta(space.size(), kZero);
        for (auto i : out.udp.counterexample->from_h)
            alpha[i] = kOne;
        for (auto j : out.udp.counterexample->from_k)
            beta[j] = kOne;
        out.alpha = std::move(alpha);
        out.beta = std::move(beta);
    }
    return out;
}

TransitivityOutcome try_transitivity_map(std::span<const Elem> alpha, std::span<const Elem> beta,
                                         const WeightedSpace& space, const Field& field)
{
    TransitivityOutcome out;
    out.weight_alpha = vector_weight(alpha, space);
    out.weight_beta = vector_weight(beta, space);
    out.udp = udp_check(support(alpha), support(beta), space);
    if (out.weight_alpha != out.weight_beta || !out.udp.holds)
        return out;
    const CodeMatrix l(space, Matrix::from_rows(field, space.size(), {Vec(alpha.begin(), alpha.end())}));
    const CodeMatrix m(space, Matrix::from_rows(field, space.size(), {Vec(beta.begin(), beta.end())}));
    out.isometry = extend_to_isometry(l, m);
    return out;
}

MonomialIsometry transitivity_map(std::span<const Elem> alpha, std::span<const Elem> beta, const WeightedSpace& space,
                                  const Field& field)
{
    auto outcome = try_transitivity_map(alpha, beta, space, field);
    if (outcome.weight_alpha != outcome.weight_beta)
        throw PreconditionFailed("vectors have different weights");
    if (!outcome.udp.holds)
        throw PreconditionFailed("supports fail the unique decomposition property");
    return std::move(*outcome.isometry);
}

} // namespace wham
