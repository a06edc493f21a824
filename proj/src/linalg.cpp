#include "wham/linalg.hpp"

#include "wham/error.hpp"

#include <algorithm>
#include <string>

namespace wham {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, kZero)
{
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows)
{
    Matrix out(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InvalidArgument("matrix row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                  " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            out.set(r, c, rows[r][c]);
    }
    return out;
}

Matrix Matrix::identity(Field field, std::size_t n)
{
    Matrix out(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i)
        out.set(i, i, kOne);
    return out;
}

void Matrix::set(std::size_t r, std::size_t c, Elem value)
{
    if (value.index >= field_.q())
        throw InvalidArgument("matrix entry " + std::to_string(value.index) + " out of range [0, " +
                              std::to_string(field_.q()) + ")");
    data_[r * cols_ + c] = value;
}

Vec Matrix::row_vec(std::size_t r) const
{
    const auto span = row(r);
    return {span.begin(), span.end()};
}

Vec Matrix::column(std::size_t c) const
{
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

std::vector<Vec> Matrix::row_list() const
{
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row_vec(r));
    return out;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.is_zero(); });
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
    if (!(a.field() == b.field()))
        throw InvalidArgument("matrix operands over different fields");
    if (a.cols() != b.rows())
        throw InvalidArgument("matrix shapes do not compose");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Elem acc = kZero;
            for (std::size_t i = 0; i < a.cols(); ++i)
                acc = f.add(acc, f.mul(a(r, i), b(i, c)));
            out.set(r, c, acc);
        }
    return out;
}

Vec vec_mul(std::span<const Elem> gamma, const Matrix& m)
{
    if (gamma.size() != m.rows())
        throw InvalidArgument("vector length does not match matrix rows");
    const Field& f = m.field();
    Vec out(m.cols(), kZero);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (gamma[r].is_zero())
            continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[c] = f.add(out[c], f.mul(gamma[r], m(r, c)));
    }
    return out;
}

Vec vec_add(std::span<const Elem> a, std::span<const Elem> b, const Field& field)
{
    if (a.size() != b.size())
        throw InvalidArgument("vector lengths differ");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = field.add(a[i], b[i]);
    return out;
}

Vec vec_scale(std::span<const Elem> a, Elem c, const Field& field)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = field.mul(a[i], c);
    return out;
}

bool is_zero(std::span<const Elem> v)
{
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e.is_zero(); });
}

std::uint64_t encode(std::span<const Elem> v, int q)
{
    std::uint64_t code = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it)
        code = code * static_cast<std::uint64_t>(q) + it->index;
    return code;
}

Vec decode(std::uint64_t code, std::size_t length, int q)
{
    Vec out(length);
    for (auto& e : out) {
        e = Elem{static_cast<std::uint8_t>(code % static_cast<std::uint64_t>(q))};
        code /= static_cast<std::uint64_t>(q);
    }
    return out;
}

std::uint64_t checked_power(int q, std::size_t e, std::uint64_t cap)
{
    std::uint64_t value = 1;
    for (std::size_t i = 0; i < e; ++i) {
        value *= static_cast<std::uint64_t>(q);
        if (value > cap)
            throw CapExceeded(std::to_string(q) + "^" + std::to_string(e) + " exceeds enumeration cap " +
                              std::to_string(cap));
    }
    return value;
}

RrefResult rref(const Matrix& m)
{
    const Field& f = m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
        std::size_t r = lead_row;
        while (r < a.rows() && a(r, c).is_zero())
            ++r;
        if (r == a.rows())
            continue;
        if (r != lead_row)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const Elem tmp = a(r, j);
                a.set(r, j, a(lead_row, j));
                a.set(lead_row, j, tmp);
            }
        const Elem scale = f.inv(a(lead_row, c));
        for (std::size_t j = 0; j < a.cols(); ++j)
            a.set(lead_row, j, f.mul(a(lead_row, j), scale));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead_row || a(i, c).is_zero())
                continue;
            const Elem factor = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.set(i, j, f.sub(a(i, j), f.mul(factor, a(lead_row, j))));
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

BigInt qbinom(int n, int r, int q)
{
    if (n < 0 || r < 0)
        throw InvalidArgument("qbinom arguments must be nonnegative");
    if (q < 2)
        throw InvalidArgument("qbinom needs q >= 2");
    if (r > n)
        return 0;
    // Each partial product is itself a Gaussian binomial, so the division is exact.
    BigInt result = 1;
    const BigInt base = q;
    for (int i = 1; i <= r; ++i) {
        const BigInt num = boost::multiprecision::pow(base, static_cast<unsigned>(i + n - r)) - 1;
        const BigInt den = boost::multiprecision::pow(base, static_cast<unsigned>(i)) - 1;
        result = result * num / den;
    }
    return result;
}

Subspace Subspace::from_generators(const Matrix& generators, Side side)
{
    auto reduced = rref(generators);
    Matrix basis(generators.field(), reduced.rank, generators.cols());
    for (std::size_t r = 0; r < reduced.rank; ++r)
        for (std::size_t c = 0; c < generators.cols(); ++c)
            basis.set(r, c, reduced.reduced(r, c));
    return Subspace(std::move(basis), std::move(reduced.pivots), side);
}

Subspace Subspace::zero(const Field& field, std::size_t k, Side side)
{
    return Subspace(Matrix(field, 0, k), {}, side);
}

Subspace Subspace::full(const Field& field, std::size_t k, Side side)
{
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i)
        pivots[i] = i;
    return Subspace(Matrix::identity(field, k), std::move(pivots), side);
}

bool Subspace::contains(std::span<const Elem> v) const
{
    if (v.size() != ambient_dim())
        throw InvalidArgument("vector length does not match subspace ambient dimension");
    const Field& f = field();
    // Reduce v by the basis; the pivot entries of v give the coefficients.
    Vec rest(v.begin(), v.end());
    for (std::size_t r = 0; r < dim(); ++r) {
        const Elem coeff = rest[pivots_[r]];
        if (coeff.is_zero())
            continue;
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            rest[c] = f.sub(rest[c], f.mul(coeff, basis_(r, c)));
    }
    return is_zero(rest);
}

std::vector<Vec> Subspace::vectors(std::uint64_t cap) const
{
    const Field& f = field();
    const auto count = checked_power(f.q(), dim(), cap);
    std::vector<Vec> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code)
        out.push_back(vec_mul(decode(code, dim(), f.q()), basis_));
    return out;
}

std::vector<Subspace> subspaces(std::size_t k, std::size_t m, const Field& field, std::uint64_t cap, Side side)
{
    if (m > k)
        throw InvalidArgument("subspace dimension exceeds ambient dimension");
    const BigInt total = qbinom(static_cast<int>(k), static_cast<int>(m), field.q());
    if (total > cap)
        throw CapExceeded("number of " + std::to_string(m) + "-dimensional subspaces of GF(" +
                          std::to_string(field.q()) + ")^" + std::to_string(k) + " is " + total.str() +
                          ", above the enumeration cap " + std::to_string(cap));

    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(total));

    std::vector<std::size_t> pivots(m);
    for (std::size_t i = 0; i < m; ++i)
        pivots[i] = i;

    while (true) {
        // Free positions: (row, column) right of the row's pivot and not a pivot column.
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = pivots[r] + 1; c < k; ++c)
                if (!std::binary_search(pivots.begin(), pivots.end(), c))
                    free.emplace_back(r, c);

        Matrix basis(field, m, k);
        for (std::size_t r = 0; r < m; ++r)
            basis.set(r, pivots[r], kOne);
        std::vector<int> digits(free.size(), 0);
        while (true) {
            out.push_back(Subspace(basis, pivots, side));
            std::size_t i = 0;
            for (; i < digits.size(); ++i) {
                const auto [r, c] = free[i];
                if (++digits[i] < field.q()) {
                    basis.set(r, c, Elem{static_cast<std::uint8_t>(digits[i])});
                    break;
                }
                digits[i] = 0;
                basis.set(r, c, kZero);
            }
            if (i == digits.size())
                break;
        }

        // Next pivot combination in lexicographic order.
        std::size_t i = m;
        while (i > 0 && pivots[i - 1] == k - m + (i - 1))
            --i;
        if (i == 0)
            break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < m; ++j)
            pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

std::vector<Subspace> subspaces_containing(const Subspace& a, std::size_t m, std::uint64_t cap)
{
    const std::size_t k = a.ambient_dim();
    const std::size_t dim_a = a.dim();
    if (m < dim_a || m > k)
        throw InvalidArgument("target dimension must lie between dim(A) and the ambient dimension");
    const Field& f = a.field();

    // The non-pivot coordinates of A's RREF give a complement, identifying
    // F^k / A with F^(k - dim A).
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < k; ++c)
        if (!std::binary_search(a.pivots().begin(), a.pivots().end(), c))
            complement.push_back(c);

    const auto quotients = subspaces(k - dim_a, m - dim_a, f, cap, Side::Row);
    std::vector<Subspace> out;
    out.reserve(quotients.size());
    for (const auto& quotient : quotients) {
        Matrix gens(f, m, k);
        for (std::size_t r = 0; r < dim_a; ++r)
            for (std::size_t c = 0; c < k; ++c)
                gens.set(r, c, a.basis()(r, c));
        for (std::size_t r = 0; r < quotient.dim(); ++r)
            for (std::size_t j = 0; j < complement.size(); ++j)
                gens.set(dim_a + r, complement[j], quotient.basis()(r, j));
        out.push_back(Subspace::from_generators(gens, a.side()));
    }
    return out;
}

Subspace dual(const Subspace& u)
{
    const Field& f = u.field();
    const std::size_t k = u.ambient_dim();
    const auto& pivots = u.pivots();
    const Side other = u.side() == Side::Row ? Side::Column : Side::Row;

    std::vector<Vec> gens;
    for (std::size_t free = 0; free < k; ++free) {
        if (std::binary_search(pivots.begin(), pivots.end(), free))
            continue;
        Vec beta(k, kZero);
        beta[free] = kOne;
        for (std::size_t r = 0; r < u.dim(); ++r)
            beta[pivots[r]] = f.neg(u.basis()(r, free));
        gens.push_back(std::move(beta));
    }
    return Subspace::from_generators(Matrix::from_rows(f, k, gens), other);
}

Vec normalize(std::span<const Elem> v, const Field& field)
{
    const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return !e.is_zero(); });
    if (lead == v.end())
        throw InvalidArgument("cannot normalize the zero vector");
    return vec_scale(v, field.inv(*lead), field);
}

ProjectiveSpace::ProjectiveSpace(Field field, std::size_t k, std::uint64_t cap)
    : field_(std::move(field)), k_(k)
{
    if (k == 0)
        throw InvalidArgument("projective space needs k >= 1");
    const auto q = static_cast<std::uint64_t>(field_.q());
    std::uint64_t count = 0;
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count += power;
        if (count > cap)
            throw CapExceeded("projective space of dimension " + std::to_string(k) + " over GF(" +
                              std::to_string(q) + ") exceeds enumeration cap " + std::to_string(cap));
        power *= q;
    }

    codes_.reserve(count);
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::uint64_t lead_weight = 1;
        for (std::size_t i = 0; i < lead; ++i)
            lead_weight *= q;
        std::uint64_t tail = 1;
        for (std::size_t i = lead + 1; i < k; ++i)
            tail *= q;
        for (std::uint64_t t = 0; t < tail; ++t)
            codes_.push_back(lead_weight + t * lead_weight * q);
    }
    std::sort(codes_.begin(), codes_.end());
    points_.reserve(codes_.size());
    for (auto code : codes_)
        points_.push_back(decode(code, k, field_.q()));
}

std::size_t ProjectiveSpace::index_of(std::span<const Elem> v) const
{
    if (v.size() != k_)
        throw InvalidArgument("vector length does not match projective space dimension");
    const auto code = encode(normalize(v, field_), field_.q());
    const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    return static_cast<std::size_t>(it - codes_.begin());
}

std::vector<Vec> projective_points(std::size_t k, const Field& field, std::uint64_t cap)
{
    return ProjectiveSpace(field, k, cap).points();
}

} // namespace wham
