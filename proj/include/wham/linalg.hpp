#pragma once

#include "wham/gf.hpp"
#include "wham/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wham {

using Vec = std::vector<Elem>;

/// Default bound on the size of any enumeration (subspaces, vectors, maps).
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Dense row-major matrix over one field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);

    /// Every row must have `cols` entries, each an element of `field`.
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix identity(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem value);

    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const;
    Vec column(std::size_t c) const;
    std::vector<Vec> row_list() const;

    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

/// Row vector times matrix: gamma * m.
Vec vec_mul(std::span<const Elem> gamma, const Matrix& m);
Vec vec_add(std::span<const Elem> a, std::span<const Elem> b, const Field& field);
Vec vec_scale(std::span<const Elem> a, Elem c, const Field& field);
bool is_zero(std::span<const Elem> v);

/// Base-q integer with coordinate 0 least significant.
std::uint64_t encode(std::span<const Elem> v, int q);
Vec decode(std::uint64_t code, std::size_t length, int q);

/// q^e, or a CapExceeded error when it does not fit below `cap`.
std::uint64_t checked_power(int q, std::size_t e, std::uint64_t cap);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Gaussian binomial coefficient; zero when r > n.
BigInt qbinom(int n, int r, int q);

/// Row vectors F^k or column vectors F^[k].
enum class Side { Row, Column };

/// A subspace of F^k stored as the RREF of a basis; equal subspaces have
/// identical bases.
class Subspace {
public:
    /// Span of the rows of `generators`.
    static Subspace from_generators(const Matrix& generators, Side side = Side::Row);
    static Subspace zero(const Field& field, std::size_t k, Side side = Side::Row);
    static Subspace full(const Field& field, std::size_t k, Side side = Side::Row);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    Side side() const noexcept { return side_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(std::span<const Elem> v) const;

    /// All q^dim members, coefficient of basis row 0 varying fastest.
    std::vector<Vec> vectors(std::uint64_t cap = kDefaultCap) const;

    /// Same subspace viewed on the other side (rows <-> columns).
    Subspace transposed() const { return Subspace(basis_, pivots_, side_ == Side::Row ? Side::Column : Side::Row); }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.side_ == b.side_ && a.basis_ == b.basis_;
    }

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots, Side side)
        : basis_(std::move(basis)), pivots_(std::move(pivots)), side_(side)
    {
    }

    friend std::vector<Subspace> subspaces(std::size_t, std::size_t, const Field&, std::uint64_t, Side);

    Matrix basis_;
    std::vector<std::size_t> pivots_;
    Side side_;
};

/// Every m-dimensional subspace of F^k exactly once, generated by RREF
/// profile: pivot sets in lexicographic order, then free entries.
std::vector<Subspace> subspaces(std::size_t k, std::size_t m, const Field& field, std::uint64_t cap = kDefaultCap,
                                Side side = Side::Row);

/// Every m-dimensional subspace containing `a`.
std::vector<Subspace> subspaces_containing(const Subspace& a, std::size_t m, std::uint64_t cap = kDefaultCap);

/// Annihilator under the standard bilinear form; lives on the opposite side.
Subspace dual(const Subspace& u);

/// Divides by the first nonzero entry. `v` must be nonzero.
Vec normalize(std::span<const Elem> v, const Field& field);

/// The 1-dimensional subspaces of F^[k], each represented by the vector whose
/// first nonzero entry is 1, ordered by their base-q code (coordinate 0 least
/// significant).
class ProjectiveSpace {
public:
    ProjectiveSpace(Field field, std::size_t k, std::uint64_t cap = kDefaultCap);

    const Field& field() const noexcept { return field_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Vec>& points() const noexcept { return points_; }
    const Vec& point(std::size_t index) const { return points_[index]; }

    /// Index of the point containing the nonzero vector v.
    std::size_t index_of(std::span<const Elem> v) const;
    Vec point_of(std::span<const Elem> v) const { return points_[index_of(v)]; }

private:
    Field field_;
    std::size_t k_;
    std::vector<Vec> points_;
    std::vector<std::uint64_t> codes_;
};

std::vector<Vec> projective_points(std::size_t k, const Field& field, std::uint64_t cap = kDefaultCap);

} // namespace wham
