#include "wham/instance.hpp"

#include <fstream>
#include <sstream>

namespace wham {

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& message)
{
    throw ParseError(key + ": " + message);
}

int as_int(const Json& j, const std::string& key)
{
    if (!j.is_number_integer())
        fail(key, "expected an integer");
    return j.get<int>();
}

Rational weight_from_json(const Json& j, const std::string& key)
{
    Rational value;
    try {
        if (j.is_string())
            value = parse_rational(j.get<std::string>());
        else if (j.is_number_integer())
            value = Rational(j.get<long long>());
        else
            fail(key, "expected a rational string \"a\" or \"a/b\"");
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(key, e.what());
    }
    if (value <= 0)
        fail(key, "nonpositive weight " + to_string(value));
    return value;
}

Vec vec_from_json(const Json& j, const Field& field, std::size_t length, const std::string& key)
{
    if (!j.is_array())
        fail(key, "expected an array of element indices");
    if (j.size() != length)
        fail(key, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
    Vec out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto sub = key + "[" + std::to_string(i) + "]";
        const int index = as_int(j[i], sub);
        if (index < 0 || index >= field.q())
            fail(sub, "entry " + std::to_string(index) + " out of range [0, " + std::to_string(field.q()) + ")");
        out.push_back(Elem{static_cast<std::uint8_t>(index)});
    }
    return out;
}

Matrix matrix_from_json(const Json& j, const Field& field, std::size_t cols, const std::string& key)
{
    if (!j.is_array() || j.empty())
        fail(key, "expected a nonempty array of rows");
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < j.size(); ++r)
        rows.push_back(vec_from_json(j[r], field, cols, key + "[" + std::to_string(r) + "]"));
    return Matrix::from_rows(field, cols, rows);
}

LabelSet labels_from_json(const Json& j, const WeightedSpace& space, const std::string& key)
{
    if (!j.is_array())
        fail(key, "expected an array of labels");
    LabelSet out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto sub = key + "[" + std::to_string(i) + "]";
        if (!j[i].is_string())
            fail(sub, "expected a label string");
        const auto label = j[i].get<std::string>();
        const auto it = std::find(space.labels().begin(), space.labels().end(), label);
        if (it == space.labels().end())
            fail(sub, "label \"" + label + "\" is not a key of omega");
        const auto index = static_cast<std::size_t>(it - space.labels().begin());
        if (std::find(out.begin(), out.end(), index) != out.end())
            fail(sub, "duplicate label \"" + label + "\"");
        out.push_back(index);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const char* const kMatrixKeys[] = {"generator", "left", "right"};

} // namespace

Field field_from_json(const Json& j, const std::string& context)
{
    if (!j.is_object())
        fail(context, "expected an object with keys p, m and optional modulus");
    for (const auto& [key, value] : j.items())
        if (key != "p" && key != "m" && key != "modulus")
            fail(context + "." + key, "unknown key");
    if (!j.contains("p"))
        fail(context + ".p", "missing");
    const int p = as_int(j["p"], context + ".p");
    const int m = j.contains("m") ? as_int(j["m"], context + ".m") : 1;
    std::optional<std::vector<int>> modulus;
    if (j.contains("modulus")) {
        const auto& mod = j["modulus"];
        if (!mod.is_array())
            fail(context + ".modulus", "expected an array of coefficients");
        modulus.emplace();
        for (std::size_t i = 0; i < mod.size(); ++i)
            modulus->push_back(as_int(mod[i], context + ".modulus[" + std::to_string(i) + "]"));
    }
    try {
        return Field::create(p, m, modulus);
    } catch (const Error& e) {
        fail(context, e.what());
    }
}

Json field_to_json(const Field& field)
{
    Json j;
    j["p"] = field.p();
    j["m"] = field.m();
    if (field.m() > 1 || field.modulus() != std::vector<int>{0, 1})
        j["modulus"] = field.modulus();
    return j;
}

Json vec_to_json(std::span<const Elem> v)
{
    Json j = Json::array();
    for (auto e : v)
        j.push_back(static_cast<int>(e.index));
    return j;
}

Json matrix_to_json(const Matrix& m)
{
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        j.push_back(vec_to_json(m.row(r)));
    return j;
}

Json labels_to_json(const LabelSet& set, const WeightedSpace& space)
{
    Json j = Json::array();
    for (auto i : set)
        j.push_back(space.label(i));
    return j;
}

Json rationals_to_json(const std::vector<Rational>& values)
{
    Json j = Json::array();
    for (const auto& v : values)
        j.push_back(to_string(v));
    return j;
}

Json isometry_to_json(const MonomialIsometry& phi, const WeightedSpace& space)
{
    Json perm = Json::object();
    Json scalars = Json::object();
    for (std::size_t i = 0; i < phi.size(); ++i) {
        perm[space.label(i)] = space.label(phi.perm[i]);
        scalars[space.label(i)] = static_cast<int>(phi.scalars[i].index);
    }
    Json j;
    j["perm"] = std::move(perm);
    j["scalars"] = std::move(scalars);
    return j;
}

InstanceDoc parse_instance(const Json& doc)
{
    if (!doc.is_object())
        fail("document", "expected an object");
    for (const auto& [key, value] : doc.items()) {
        static const char* const known[] = {"field", "omega",  "generator", "left", "right", "H",
                                            "K",     "alpha",  "beta",      "description", "meta"};
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) ==
            std::end(known))
            fail(key, "unknown key");
    }

    if (!doc.contains("omega"))
        fail("omega", "missing");
    const auto& omega = doc["omega"];
    if (!omega.is_object() || omega.empty())
        fail("omega", "expected a nonempty mapping label -> rational");
    std::vector<std::string> labels;
    std::vector<Rational> weights;
    for (const auto& [label, value] : omega.items()) {
        labels.push_back(label);
        weights.push_back(weight_from_json(value, "omega." + label));
    }
    InstanceDoc out{WeightedSpace(std::move(labels), std::move(weights))};
    const std::size_t n = out.space.size();

    if (doc.contains("field"))
        out.field = field_from_json(doc["field"]);

    auto need_field = [&](const std::string& key) -> const Field& {
        if (!out.field)
            fail(key, "requires a field");
        return *out.field;
    };
    for (const char* key : kMatrixKeys) {
        if (!doc.contains(key))
            continue;
        auto matrix = matrix_from_json(doc[key], need_field(key), n, key);
        if (std::string_view(key) == "generator")
            out.generator = std::move(matrix);
        else if (std::string_view(key) == "left")
            out.left = std::move(matrix);
        else
            out.right = std::move(matrix);
    }
    if (doc.contains("H"))
        out.h = labels_from_json(doc["H"], out.space, "H");
    if (doc.contains("K"))
        out.k = labels_from_json(doc["K"], out.space, "K");
    if (doc.contains("alpha"))
        out.alpha = vec_from_json(doc["alpha"], need_field("alpha"), n, "alpha");
    if (doc.contains("beta"))
        out.beta = vec_from_json(doc["beta"], need_field("beta"), n, "beta");
    if (doc.contains("description")) {
        if (!doc["description"].is_string())
            fail("description", "expected a string");
        out.description = doc["description"].get<std::string>();
    }
    if (doc.contains("meta"))
        out.meta = doc["meta"];
    return out;
}

InstanceDoc parse_instance_text(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    return parse_instance(doc);
}

InstanceDoc parse_instance_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path.string() + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_instance_text(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Json to_json(const InstanceDoc& doc)
{
    Json j;
    if (doc.description)
        j["description"] = *doc.description;
    if (doc.field)
        j["field"] = field_to_json(*doc.field);
    Json omega = Json::object();
    for (std::size_t i = 0; i < doc.space.size(); ++i)
        omega[doc.space.label(i)] = to_string(doc.space.weight(i));
    j["omega"] = std::move(omega);
    if (doc.generator)
        j["generator"] = matrix_to_json(*doc.generator);
    if (doc.left)
        j["left"] = matrix_to_json(*doc.left);
    if (doc.right)
        j["right"] = matrix_to_json(*doc.right);
    if (doc.h)
        j["H"] = labels_to_json(*doc.h, doc.space);
    if (doc.k)
        j["K"] = labels_to_json(*doc.k, doc.space);
    if (doc.alpha)
        j["alpha"] = vec_to_json(*doc.alpha);
    if (doc.beta)
        j["beta"] = vec_to_json(*doc.beta);
    if (!doc.meta.is_null())
        j["meta"] = doc.meta;
    return j;
}

bool operator==(const InstanceDoc& a, const InstanceDoc& b)
{
    return a.field == b.field && a.space == b.space && a.generator == b.generator && a.left == b.left &&
           a.right == b.right && a.h == b.h && a.k == b.k && a.alpha == b.alpha && a.beta == b.beta &&
           a.description == b.description && a.meta == b.meta;
}

CodeMatrix InstanceDoc::code(const std::string& name) const
{
    const std::optional<Matrix>* source = nullptr;
    if (name == "generator")
        source = &generator;
    else if (name == "left")
        source = &left;
    else if (name == "right")
        source = &right;
    if (source == nullptr || !source->has_value())
        fail(name, "missing");
    return CodeMatrix(space, **source);
}

InstanceDoc instance_for(const CodeMatrix& code, const std::string& matrix_name)
{
    InstanceDoc doc{code.space()};
    doc.field = code.field();
    if (matrix_name == "left")
        doc.left = code.grid();
    else if (matrix_name == "right")
        doc.right = code.grid();
    else
        doc.generator = code.grid();
    return doc;
}

} // namespace wham
