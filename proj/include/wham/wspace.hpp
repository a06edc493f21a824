#pragma once

#include "wham/linalg.hpp"
#include "wham/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wham {

/// Sorted coordinate indices into a WeightedSpace.
using LabelSet = std::vector<std::size_t>;

/// A finite coordinate set with a strictly positive rational weight per
/// coordinate. Coordinates keep their input order.
class WeightedSpace {
public:
    WeightedSpace(std::vector<std::string> labels, std::vector<Rational> weights);

    /// Labels "1".."n", every weight 1 (plain Hamming weight).
    static WeightedSpace uniform(std::size_t n);
    /// Labels "1".."n" with the given weights.
    static WeightedSpace numbered(std::vector<Rational> weights);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const Rational& weight(std::size_t i) const { return weights_[i]; }

    std::size_t index_of(const std::string& label) const;

    Rational total() const;
    Rational sum(std::span<const std::size_t> indices) const;

    friend bool operator==(const WeightedSpace& a, const WeightedSpace& b)
    {
        return a.labels_ == b.labels_ && a.weights_ == b.weights_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Rational> weights_;
};

/// A k x |Omega| generator matrix; represents the linear map gamma -> gamma * grid.
class CodeMatrix {
public:
    CodeMatrix(WeightedSpace space, Matrix grid);

    const Field& field() const noexcept { return grid_.field(); }
    const WeightedSpace& space() const noexcept { return space_; }
    std::size_t k() const noexcept { return grid_.rows(); }
    std::size_t length() const noexcept { return grid_.cols(); }
    const Matrix& grid() const noexcept { return grid_; }

    Vec image(std::span<const Elem> gamma) const { return vec_mul(gamma, grid_); }
    /// Generators of the image of the row subspace `b` of F^k.
    Matrix image_of(const Subspace& b) const;

    friend bool operator==(const CodeMatrix& a, const CodeMatrix& b)
    {
        return a.space_ == b.space_ && a.grid_ == b.grid_;
    }

private:
    WeightedSpace space_;
    Matrix grid_;
};

LabelSet support(std::span<const Elem> v);

/// Union of the supports of the rows. For rows generating a subspace this is
/// the support of the whole subspace.
LabelSet joint_support(const Matrix& rows);

Rational vector_weight(std::span<const Elem> v, const WeightedSpace& space);
Rational set_weight(const Matrix& rows, const WeightedSpace& space);
Rational distance(std::span<const Elem> a, std::span<const Elem> b, const WeightedSpace& space, const Field& field);

/// Columns of the generator matrix, one per coordinate.
std::vector<Vec> column_map(const CodeMatrix& code);

/// For each projective point I of F^[k], the total weight of the coordinates
/// whose (nonzero) column lies in I. Zero columns contribute nothing.
std::vector<Rational> point_weight_sums(const CodeMatrix& code, const ProjectiveSpace& points);

/// Projective point index of each coordinate's column, or nullopt for zero columns.
std::vector<std::optional<std::size_t>> point_classes(const CodeMatrix& code, const ProjectiveSpace& points);

} // namespace wham
