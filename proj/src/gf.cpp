#include "wham/gf.hpp"

#include "wham/error.hpp"

#include <string>

namespace wham {

namespace {

using Poly = std::vector<int>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a modulo b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, int p)
{
    trim(a);
    const auto db = b.size() - 1;
    int lead_inv = 1;
    while ((lead_inv * b.back()) % p != 1)
        ++lead_inv;
    while (a.size() >= b.size()) {
        const int factor = (a.back() * lead_inv) % p;
        const auto shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly digits(int index, int p, int m)
{
    Poly out(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        out[static_cast<std::size_t>(i)] = index % p;
        index /= p;
    }
    return out;
}

int encode(const Poly& coeffs, int p)
{
    int index = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        index = index * p + *it;
    return index;
}

// Next coefficient tuple in lexicographic order with coefficient 0 most significant.
bool next_lex(Poly& c, int p)
{
    for (auto i = static_cast<std::ptrdiff_t>(c.size()) - 1; i >= 0; --i) {
        auto& digit = c[static_cast<std::size_t>(i)];
        if (++digit < p)
            return true;
        digit = 0;
    }
    return false;
}

} // namespace

bool is_prime(int n) noexcept
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_irreducible(std::span<const int> poly, int p)
{
    if (poly.size() < 2 || poly.back() != 1)
        return false;
    const Poly f(poly.begin(), poly.end());
    const int degree = static_cast<int>(f.size()) - 1;
    for (int e = 1; 2 * e <= degree; ++e) {
        Poly lower(static_cast<std::size_t>(e), 0);
        do {
            Poly divisor = lower;
            divisor.push_back(1);
            if (poly_mod(f, divisor, p).empty())
                return false;
        } while (next_lex(lower, p));
    }
    return true;
}

Field Field::create(int p, int m, std::optional<std::vector<int>> modulus)
{
    if (!is_prime(p))
        throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1)
        throw InvalidArgument("field extension degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw InvalidArgument("field order exceeds " + std::to_string(kMaxOrder));
    }

    if (modulus) {
        const auto& poly = *modulus;
        if (poly.size() != static_cast<std::size_t>(m) + 1)
            throw InvalidArgument("modulus must have exactly m+1 coefficients");
        for (int c : poly)
            if (c < 0 || c >= p)
                throw InvalidArgument("modulus coefficient out of range [0, p)");
        if (poly.back() != 1)
            throw InvalidArgument("modulus must be monic");
        if (!is_irreducible(poly, p))
            throw InvalidArgument("modulus is reducible over GF(" + std::to_string(p) + ")");
        return Field(p, m, poly);
    }

    Poly lower(static_cast<std::size_t>(m), 0);
    do {
        Poly candidate = lower;
        candidate.push_back(1);
        if (is_irreducible(candidate, p))
            return Field(p, m, std::move(candidate));
    } while (next_lex(lower, p));
    throw Error("no irreducible polynomial found"); // unreachable for valid p, m
}

Field Field::of_order(int q)
{
    if (q < 2)
        throw InvalidArgument("field order must be a prime power");
    int p = 2;
    while (q % p != 0)
        ++p;
    int m = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
    return create(p, m);
}

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus))
{
    q_ = 1;
    for (int i = 0; i < m; ++i)
        q_ *= p;
    const auto q = static_cast<std::size_t>(q_);
    auto tables = std::make_shared<Tables>();
    tables->add.resize(q * q);
    tables->mul.resize(q * q);
    tables->neg.resize(q);
    tables->inv.resize(q, 0);

    std::vector<Poly> polys;
    polys.reserve(q);
    for (int i = 0; i < q_; ++i)
        polys.push_back(digits(i, p, m));

    for (std::size_t a = 0; a < q; ++a) {
        Poly negated(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            negated[static_cast<std::size_t>(i)] = (p - polys[a][static_cast<std::size_t>(i)]) % p;
        tables->neg[a] = static_cast<std::uint8_t>(encode(negated, p));

        for (std::size_t b = 0; b < q; ++b) {
            Poly sum(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) {
                const auto u = static_cast<std::size_t>(i);
                sum[u] = (polys[a][u] + polys[b][u]) % p;
            }
            tables->add[a * q + b] = static_cast<std::uint8_t>(encode(sum, p));

            Poly product(static_cast<std::size_t>(2 * m - 1), 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    auto& c = product[static_cast<std::size_t>(i + j)];
                    c = (c + polys[a][static_cast<std::size_t>(i)] * polys[b][static_cast<std::size_t>(j)]) % p;
                }
            Poly reduced = m > 1 ? poly_mod(product, modulus_, p) : product;
            reduced.resize(static_cast<std::size_t>(m), 0);
            const auto encoded = static_cast<std::uint8_t>(encode(reduced, p));
            tables->mul[a * q + b] = encoded;
            if (encoded == 1)
                tables->inv[a] = static_cast<std::uint8_t>(b);
        }
    }
    tables_ = std::move(tables);
}

void Field::check(Elem a) const
{
    if (a.index >= q_)
        throw InvalidArgument("element index " + std::to_string(a.index) + " does not belong to GF(" +
                              std::to_string(q_) + ")");
}

Elem Field::element(int index) const
{
    if (index < 0 || index >= q_)
        throw InvalidArgument("element index " + std::to_string(index) + " out of range [0, " +
                              std::to_string(q_) + ")");
    return Elem{static_cast<std::uint8_t>(index)};
}

std::vector<Elem> Field::elements() const
{
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (int i = 0; i < q_; ++i)
        out.push_back(Elem{static_cast<std::uint8_t>(i)});
    return out;
}

std::vector<Elem> Field::nonzero_elements() const
{
    auto all = elements();
    all.erase(all.begin());
    return all;
}

Elem Field::add(Elem a, Elem b) const
{
    check(a);
    check(b);
    return Elem{tables_->add[a.index * static_cast<std::size_t>(q_) + b.index]};
}

Elem Field::neg(Elem a) const
{
    check(a);
    return Elem{tables_->neg[a.index]};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const
{
    check(a);
    check(b);
    return Elem{tables_->mul[a.index * static_cast<std::size_t>(q_) + b.index]};
}

Elem Field::inv(Elem a) const
{
    check(a);
    if (a.is_zero())
        throw InvalidArgument("inverse of zero");
    return Elem{tables_->inv[a.index]};
}

Elem Field::pow(Elem a, std::uint64_t e) const
{
    check(a);
    Elem result = kOne;
    Elem base = a;
    while (e > 0) {
        if (e & 1U)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

} // namespace wham
