#include "sgx/rational.hpp"

#include <cctype>

namespace sgx {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    const std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto check_integer = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!check_integer(num) || !check_integer(den))
        throw std::invalid_argument("malformed rational literal: " + text);
    Rational q;
    if (q.set_str(num + "/" + den, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace sgx
