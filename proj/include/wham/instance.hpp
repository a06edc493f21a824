#pragma once

#include "wham/error.hpp"
#include "wham/extension.hpp"
#include "wham/gf.hpp"
#include "wham/linalg.hpp"
#include "wham/wspace.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace wham {

/// Key order is preserved so coordinate labels keep their input order.
using Json = nlohmann::ordered_json;

/// A malformed instance document; the message names the offending key.
class ParseError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Instance document shared by every command: a field, the weight map and any
/// of the named matrices, label sets and vectors. Columns follow the order of
/// the `omega` keys.
struct InstanceDoc {
    explicit InstanceDoc(WeightedSpace omega) : space(std::move(omega)) {}

    std::optional<Field> field;
    WeightedSpace space;
    std::optional<Matrix> generator;
    std::optional<Matrix> left;
    std::optional<Matrix> right;
    std::optional<LabelSet> h;
    std::optional<LabelSet> k;
    std::optional<Vec> alpha;
    std::optional<Vec> beta;
    std::optional<std::string> description;
    Json meta;

    /// The named matrix paired with the weight map; ParseError when absent.
    CodeMatrix code(const std::string& name) const;

    friend bool operator==(const InstanceDoc& a, const InstanceDoc& b);
};

InstanceDoc parse_instance(const Json& doc);
InstanceDoc parse_instance_text(const std::string& text);
InstanceDoc parse_instance_file(const std::filesystem::path& path);

Json to_json(const InstanceDoc& doc);
Json field_to_json(const Field& field);
Field field_from_json(const Json& j, const std::string& context = "field");

Json vec_to_json(std::span<const Elem> v);
Json matrix_to_json(const Matrix& m);
Json labels_to_json(const LabelSet& set, const WeightedSpace& space);
Json rationals_to_json(const std::vector<Rational>& values);
Json isometry_to_json(const MonomialIsometry& phi, const WeightedSpace& space);

/// Instance document for a single code: field, omega, generator.
InstanceDoc instance_for(const CodeMatrix& code, const std::string& matrix_name = "generator");

} // namespace wham
