#include "wham/wspace.hpp"

#include "wham/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace wham {

WeightedSpace::WeightedSpace(std::vector<std::string> labels, std::vector<Rational> weights)
    : labels_(std::move(labels)), weights_(std::move(weights))
{
    if (labels_.empty())
        throw InvalidArgument("coordinate set must be nonempty");
    if (labels_.size() != weights_.size())
        throw InvalidArgument("label and weight counts differ");
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!seen.insert(labels_[i]).second)
            throw InvalidArgument("duplicate coordinate label \"" + labels_[i] + "\"");
        if (weights_[i] <= 0)
            throw InvalidArgument("weight of \"" + labels_[i] + "\" must be positive, got " + to_string(weights_[i]));
    }
}

WeightedSpace WeightedSpace::uniform(std::size_t n) { return numbered(std::vector<Rational>(n, Rational(1))); }

WeightedSpace WeightedSpace::numbered(std::vector<Rational> weights)
{
    std::vector<std::string> labels;
    labels.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        labels.push_back(std::to_string(i + 1));
    return WeightedSpace(std::move(labels), std::move(weights));
}

std::size_t WeightedSpace::index_of(const std::string& label) const
{
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw InvalidArgument("unknown coordinate label \"" + label + "\"");
    return static_cast<std::size_t>(it - labels_.begin());
}

Rational WeightedSpace::total() const
{
    Rational sum = 0;
    for (const auto& w : weights_)
        sum += w;
    return sum;
}

Rational WeightedSpace::sum(std::span<const std::size_t> indices) const
{
    Rational out = 0;
    for (auto i : indices)
        out += weights_.at(i);
    return out;
}

CodeMatrix::CodeMatrix(WeightedSpace space, Matrix grid) : space_(std::move(space)), grid_(std::move(grid))
{
    if (grid_.cols() != space_.size())
        throw InvalidArgument("generator has " + std::to_string(grid_.cols()) + " columns but the space has " +
                              std::to_string(space_.size()) + " coordinates");
    if (grid_.rows() == 0)
        throw InvalidArgument("generator needs at least one row");
}

Matrix CodeMatrix::image_of(const Subspace& b) const
{
    if (b.ambient_dim() != k())
        throw InvalidArgument("subspace dimension does not match generator rows");
    return multiply(b.basis(), grid_);
}

LabelSet support(std::span<const Elem> v)
{
    LabelSet out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            out.push_back(i);
    return out;
}

LabelSet joint_support(const Matrix& rows)
{
    LabelSet out;
    for (std::size_t c = 0; c < rows.cols(); ++c)
        for (std::size_t r = 0; r < rows.rows(); ++r)
            if (!rows(r, c).is_zero()) {
                out.push_back(c);
                break;
            }
    return out;
}

Rational vector_weight(std::span<const Elem> v, const WeightedSpace& space)
{
    if (v.size() != space.size())
        throw InvalidArgument("vector length does not match the coordinate set");
    const auto s = support(v);
    return space.sum(s);
}

Rational set_weight(const Matrix& rows, const WeightedSpace& space)
{
    if (rows.cols() != space.size())
        throw InvalidArgument("vector length does not match the coordinate set");
    const auto s = joint_support(rows);
    return space.sum(s);
}

Rational distance(std::span<const Elem> a, std::span<const Elem> b, const WeightedSpace& space, const Field& field)
{
    Vec diff(a.size());
    if (a.size() != b.size())
        throw InvalidArgument("vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        diff[i] = field.sub(b[i], a[i]);
    return vector_weight(diff, space);
}

std::vector<Vec> column_map(const CodeMatrix& code)
{
    std::vector<Vec> out;
    out.reserve(code.length());
    for (std::size_t c = 0; c < code.length(); ++c)
        out.push_back(code.grid().column(c));
    return out;
}

} // namespace wham

namespace wham {

std::vector<std::optional<std::size_t>> point_classes(const CodeMatrix& code, const ProjectiveSpace& points)
{
    if (points.k() != code.k() || !(points.field() == code.field()))
        throw InvalidArgument("projective space does not match the generator");
    std::vector<std::optional<std::size_t>> out(code.length());
    for (std::size_t i = 0; i < code.length(); ++i) {
        const auto col = code.grid().column(i);
        if (!is_zero(col))
            out[i] = points.index_of(col);
    }
    return out;
}

std::vector<Rational> point_weight_sums(const CodeMatrix& code, const ProjectiveSpace& points)
{
    std::vector<Rational> sums(points.size(), Rational(0));
    const auto classes = point_classes(code, points);
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i])
            sums[*classes[i]] += code.space().weight(i);
    return sums;
}

} // namespace wham
