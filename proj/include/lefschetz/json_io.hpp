#pragma once

#include "lefschetz/form.hpp"
#include "lefschetz/linear_map.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace lefschetz::io {

/// Malformed input. `where` points at the offending element
/// ("terms[2].idx" and the like); the full message embeds it.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// {"n": int, "degree": int, "terms": [{"idx": [int,...], "coeff": "p/q"}]}
/// idx strictly increasing, coeff a decimal integer (number or string) or a
/// "p/q" string. Emission is canonical: terms in lexicographic idx order,
/// integral coefficients without the "/1".
nlohmann::json form_to_json(const Form& f);
Form form_from_json(const nlohmann::json& j);

/// {"n": int, "matrix": [["p/q", ...], ...]} row-major, 2n x 2n.
nlohmann::json linear_map_to_json(const LinearMap& t);
LinearMap linear_map_from_json(const nlohmann::json& j);

/// {"rows": int, "cols": int, "entries": [["p/q", ...], ...]}
nlohmann::json matrix_to_json(const Matrix& m);

/// Parses a coefficient entry (string or integral number).
Rational coeff_from_json(const nlohmann::json& j, const std::string& where);

Form load_form(const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace lefschetz::io
