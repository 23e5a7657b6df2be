#pragma once

// Small JSON building blocks shared by the serializers. Rationals are strings
// ("p" or "p/q"), forms are objects keyed by indeterminate ("c1", "c3"),
// functions are arrays of forms.

#include "sgx/function_vector.hpp"

#include <json.hpp>

#include <vector>

namespace sgx {

nlohmann::json rational_to_json(const Rational& q);
nlohmann::json rationals_to_json(const std::vector<Rational>& qs);
nlohmann::json linear_form_to_json(const LinearForm& f);
nlohmann::json function_to_json(const FunctionVector& fn);

}  // namespace sgx
