#include "wham/identities.hpp"

#include "wham/cwc.hpp"
#include "wham/error.hpp"
#include "wham/random.hpp"

namespace wham {

namespace {

Rational power(int q, std::size_t e)
{
    return Rational(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(e)));
}

// Total weight of coordinates whose column is nonzero and lies in `s`.
Rational weight_of_columns_in(const CodeMatrix& l, const Subspace& s)
{
    Rational total = 0;
    for (std::size_t i = 0; i < l.length(); ++i) {
        const auto col = l.grid().column(i);
        if (!is_zero(col) && s.contains(col))
            total += l.space().weight(i);
    }
    return total;
}

} // namespace

IdentityCheck check_codeword_sum(const CodeMatrix& l, const Subspace& b, std::uint64_t cap)
{
    if (b.ambient_dim() != l.k())
        throw InvalidArgument("subspace dimension does not match generator rows");
    IdentityCheck out;
    for (const auto& theta : b.vectors(cap))
        out.lhs += vector_weight(l.image(theta), l.space());
    const int q = l.field().q();
    const Rational qm = power(q, b.dim());
    out.rhs = (qm - qm / q) * set_weight(l.image_of(b), l.space());
    return out;
}

IdentityCheck check_containing_sum(const CodeMatrix& l, const Subspace& a, std::size_t m, std::uint64_t cap)
{
    const std::size_t k = l.k();
    const std::size_t dim_a = a.dim();
    if (a.ambient_dim() != k)
        throw InvalidArgument("subspace dimension does not match generator rows");
    if (dim_a + 1 > k || m < dim_a + 1 || m > k)
        throw InvalidArgument("containing-sum identity needs dim A < m <= k and dim A < k");
    IdentityCheck out;
    for (const auto& b : subspaces_containing(a, m, cap))
        out.lhs += set_weight(l.image_of(b), l.space());

    const int q = l.field().q();
    const int ka = static_cast<int>(k - dim_a);
    const int ma = static_cast<int>(m - dim_a);
    out.rhs = power(q, k - m) * Rational(qbinom(ka - 1, ma - 1, q)) * set_weight(l.grid(), l.space()) +
              Rational(qbinom(ka - 1, ma, q)) * set_weight(l.image_of(a), l.space());
    return out;
}

IdentityCheck check_dual_complement(const CodeMatrix& l, const Subspace& u)
{
    IdentityCheck out;
    out.lhs = set_weight(l.image_of(u), l.space());
    out.rhs = set_weight(l.grid(), l.space()) - weight_of_columns_in(l, dual(u));
    return out;
}

IdentityCheck check_point_sum(const CodeMatrix& g, const Subspace& u, std::uint64_t cap)
{
    if (u.ambient_dim() != g.k())
        throw InvalidArgument("subspace dimension does not match generator rows");
    const auto report = sigma_check(g, cap);
    if (!report.is_constant)
        throw PreconditionFailed("generator does not have a constant point sum");
    const int q = g.field().q();
    IdentityCheck out;
    out.lhs = weight_of_columns_in(g, u);
    out.rhs = (power(q, u.dim()) - 1) * *report.sigma / Rational(q - 1);
    return out;
}

namespace {

constexpr const char* kCodewordSum = "codeword_sum";
constexpr const char* kContainingSum = "containing_sum";
constexpr const char* kDualComplement = "dual_complement";
constexpr const char* kPointSum = "point_sum";

void tally(IdentitySweepReport& report, const char* name, bool passed, const CodeMatrix& instance)
{
    auto it = std::find_if(report.tallies.begin(), report.tallies.end(), [&](const auto& t) { return t.name == name; });
    if (it == report.tallies.end()) {
        report.tallies.push_back({name, 0, 0});
        it = std::prev(report.tallies.end());
    }
    ++it->checks;
    if (passed)
        ++it->passed;
    else if (!report.failing_instance) {
        report.failing_instance = instance;
        report.failing_identity = name;
    }
}

void ensure_tallies(IdentitySweepReport& report)
{
    for (const char* name : {kCodewordSum, kContainingSum, kDualComplement, kPointSum})
        if (std::none_of(report.tallies.begin(), report.tallies.end(), [&](const auto& t) { return t.name == name; }))
            report.tallies.push_back({name, 0, 0});
}

} // namespace

void check_all_identities(const CodeMatrix& l, std::uint64_t seed, IdentitySweepReport& report, std::uint64_t cap)
{
    ensure_tallies(report);
    InstanceRng rng(seed);
    const std::size_t k = l.k();
    const Field& f = l.field();
    for (std::size_t d = 0; d <= k; ++d)
        for (const auto& b : subspaces(k, d, f, cap)) {
            tally(report, kCodewordSum, check_codeword_sum(l, b, cap).equal(), l);
            tally(report, kDualComplement, check_dual_complement(l, b).equal(), l);
        }
    for (std::size_t a = 0; a < k; ++a) {
        const auto base = random_subspace(rng, f, k, a);
        for (std::size_t m = a + 1; m <= k; ++m)
            tally(report, kContainingSum, check_containing_sum(l, base, m, cap).equal(), l);
    }
    if (rank(l.grid()) == k && sigma_check(l, cap).is_constant)
        for (std::size_t d = 0; d <= k; ++d)
            for (const auto& u : subspaces(k, d, f, cap, Side::Column))
                tally(report, kPointSum, check_point_sum(l, u, cap).equal(), l);
}

IdentitySweepReport run_identity_sweep(std::uint64_t seed, std::uint64_t trials, const SweepOptions& options)
{
    IdentitySweepReport report;
    ensure_tallies(report);
    InstanceRng master(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        InstanceRng rng(master.next());
        const Field f = random_field(rng, options.orders);
        const auto k = static_cast<std::size_t>(rng.between(1, static_cast<int>(options.max_k)));
        const auto n = static_cast<std::size_t>(rng.between(1, static_cast<int>(options.max_length)));
        const CodeMatrix l(random_space(rng, n, options.max_numerator, options.max_denominator),
                           random_matrix(rng, f, k, n));
        check_all_identities(l, rng.next(), report, options.cap);

        const CodeMatrix g = random_constant_weight_code(rng, f, k, options.cap);
        check_all_identities(g, rng.next(), report, options.cap);
        ++report.trials;
    }
    return report;
}

} // namespace wham
