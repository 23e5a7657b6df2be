#include "sgx/json_io.hpp"

namespace sgx {

nlohmann::json rational_to_json(const Rational& q) { return rational_to_string(q); }

nlohmann::json rationals_to_json(const std::vector<Rational>& qs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& q : qs) arr.push_back(rational_to_json(q));
    return arr;
}

nlohmann::json linear_form_to_json(const LinearForm& f) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [idx, coeff] : f.terms())
        obj["c" + std::to_string(idx)] = rational_to_string(coeff);
    return obj;
}

nlohmann::json function_to_json(const FunctionVector& fn) {
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 1; k <= fn.n(); ++k) arr.push_back(linear_form_to_json(fn.slot(k)));
    return arr;
}

}  // namespace sgx
