#include "lefschetz/json_io.hpp"

#include <fstream>

namespace lefschetz::io {

namespace {

int int_field(const nlohmann::json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw SchemaError(where, std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw SchemaError(where + "." + key, "expected an integer");
    return v.get<int>();
}

}  // namespace

Rational coeff_from_json(const nlohmann::json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(where, e.what());
    }
    throw SchemaError(where, "expected a decimal integer or a \"p/q\" string");
}

nlohmann::json form_to_json(const Form& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        terms.push_back({{"idx", m.indices()}, {"coeff", c.str()}});
    }
    return nlohmann::json{{"n", f.half_dim()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

Form form_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("form", "expected an object");
    const int n = int_field(j, "n", "form");
    const int degree = int_field(j, "degree", "form");
    if (n < 1) throw SchemaError("form.n", "n must be positive");
    if (degree < 0) throw SchemaError("form.degree", "degree must be non-negative");
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw SchemaError("form.terms", "expected an array");
    Form f(n, degree);
    size_t pos = 0;
    for (const auto& t : j.at("terms")) {
        const std::string where = "terms[" + std::to_string(pos) + "]";
        if (!t.is_object()) throw SchemaError(where, "expected an object");
        if (!t.contains("idx") || !t.at("idx").is_array()) throw SchemaError(where + ".idx", "expected an array");
        std::vector<int> idx;
        for (const auto& v : t.at("idx")) {
            if (!v.is_number_integer()) throw SchemaError(where + ".idx", "expected integers");
            idx.push_back(v.get<int>());
        }
        if (static_cast<int>(idx.size()) != degree)
            throw SchemaError(where + ".idx", "length must equal the degree");
        for (size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 1 || idx[i] > 2 * n) throw SchemaError(where + ".idx", "index out of range 1..2n");
            if (i > 0 && idx[i] <= idx[i - 1])
                throw SchemaError(where + ".idx", "indices must be strictly increasing");
        }
        if (!t.contains("coeff")) throw SchemaError(where, "missing field 'coeff'");
        Rational c = coeff_from_json(t.at("coeff"), where + ".coeff");
        if (c.is_zero()) throw SchemaError(where + ".coeff", "zero coefficients are not stored");
        MultiIndex m(idx);
        if (!f.coeff(m).is_zero()) throw SchemaError(where + ".idx", "duplicate term");
        f.add_term(m, c);
        ++pos;
    }
    return f;
}

nlohmann::json linear_map_to_json(const LinearMap& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < t.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < t.dim(); ++c) row.push_back(t.entry(r, c).str());
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n", t.half_dim()}, {"matrix", std::move(rows)}};
}

LinearMap linear_map_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("linear_map", "expected an object");
    const int n = int_field(j, "n", "linear_map");
    if (n < 1) throw SchemaError("linear_map.n", "n must be positive");
    if (!j.contains("matrix") || !j.at("matrix").is_array())
        throw SchemaError("linear_map.matrix", "expected an array of rows");
    const auto& rows = j.at("matrix");
    if (static_cast<int>(rows.size()) != 2 * n)
        throw SchemaError("linear_map.matrix", "expected 2n rows");
    Matrix m(2 * n, 2 * n);
    for (int r = 0; r < 2 * n; ++r) {
        const std::string where = "matrix[" + std::to_string(r) + "]";
        const auto& row = rows.at(static_cast<size_t>(r));
        if (!row.is_array() || static_cast<int>(row.size()) != 2 * n)
            throw SchemaError(where, "expected 2n entries");
        for (int c = 0; c < 2 * n; ++c)
            m.at(r, c) = coeff_from_json(row.at(static_cast<size_t>(c)),
                                         where + "[" + std::to_string(c) + "]");
    }
    return LinearMap(n, std::move(m));
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        entries.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, "cannot open file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path, e.what());
    }
    return j;
}

Form load_form(const std::string& path) { return form_from_json(load_json(path)); }

}  // namespace lefschetz::io
