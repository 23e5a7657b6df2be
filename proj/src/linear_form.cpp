#include "sgx/linear_form.hpp"

#include <cctype>
#include <sstream>

namespace sgx {

LinearForm LinearForm::indeterminate(int index, const Rational& coeff) {
    if (index < 1) throw std::invalid_argument("indeterminate index must be >= 1");
    LinearForm f;
    if (coeff != 0) f.terms_[index] = coeff;
    return f;
}

Rational LinearForm::coefficient(int index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
    for (const auto& [idx, coeff] : other.terms_) {
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(idx, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) { return *this += -other; }

LinearForm LinearForm::operator+(const LinearForm& other) const {
    LinearForm out = *this;
    out += other;
    return out;
}

LinearForm LinearForm::operator-(const LinearForm& other) const {
    LinearForm out = *this;
    out -= other;
    return out;
}

LinearForm LinearForm::operator-() const {
    LinearForm out;
    for (const auto& [idx, coeff] : terms_) out.terms_.emplace(idx, -coeff);
    return out;
}

LinearForm LinearForm::scaled(const Rational& factor) const {
    LinearForm out;
    if (factor == 0) return out;
    for (const auto& [idx, coeff] : terms_) out.terms_.emplace(idx, coeff * factor);
    return out;
}

std::optional<int> LinearForm::single_indeterminate() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [idx, coeff] = *terms_.begin();
    if (coeff != 1) return std::nullopt;
    return idx;
}

Rational LinearForm::evaluate(const std::vector<Rational>& values) const {
    Rational acc = 0;
    for (const auto& [idx, coeff] : terms_) {
        if (idx >= 1 && idx <= static_cast<int>(values.size())) acc += coeff * values[idx - 1];
    }
    return acc;
}

std::string LinearForm::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, coeff] : terms_) {
        if (coeff > 0 && !first) out << "+";
        if (coeff == -1) {
            out << "-";
        } else if (coeff != 1) {
            out << rational_to_string(coeff) << "*";
        }
        out << "c" << idx;
        first = false;
    }
    return out.str();
}

LinearForm LinearForm::from_text(const std::string& text) {
    LinearForm out;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty linear form");
    if (s == "0") return out;
    std::size_t i = 0;
    while (i < s.size()) {
        Rational sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        // Optional rational multiplier followed by '*'.
        Rational coeff = 1;
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        if (j > i && j < s.size() && s[j] == '*') {
            coeff = rational_from_string(s.substr(i, j - i));
            i = j + 1;
        }
        if (i >= s.size() || s[i] != 'c')
            throw std::invalid_argument("malformed linear form: " + text);
        ++i;
        j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("malformed linear form: " + text);
        int idx = std::stoi(s.substr(i, j - i));
        out += LinearForm::indeterminate(idx, coeff * sign);
        i = j;
    }
    return out;
}

}  // namespace sgx
