#include "sgx/function_vector.hpp"

#include <sstream>

namespace sgx {

namespace {
const LinearForm kZeroForm{};
}

const LinearForm& FunctionVector::slot(int k) const {
    if (k == 0 || k == n_ + 1) return kZeroForm;
    if (k < 1 || k > n_) throw std::out_of_range("function slot out of range");
    return slots_[static_cast<std::size_t>(k - 1)];
}

void FunctionVector::set_slot(int k, LinearForm value) {
    if (k < 1 || k > n_) throw std::out_of_range("function slot out of range");
    slots_[static_cast<std::size_t>(k - 1)] = std::move(value);
}

FunctionVector FunctionVector::operator+(const FunctionVector& other) const {
    if (n_ != other.n_) throw std::invalid_argument("function arity mismatch");
    FunctionVector out(n_);
    for (int k = 1; k <= n_; ++k) out.set_slot(k, slot(k) + other.slot(k));
    return out;
}

FunctionVector FunctionVector::operator-(const FunctionVector& other) const {
    if (n_ != other.n_) throw std::invalid_argument("function arity mismatch");
    FunctionVector out(n_);
    for (int k = 1; k <= n_; ++k) out.set_slot(k, slot(k) - other.slot(k));
    return out;
}

bool FunctionVector::is_zero() const {
    for (const auto& f : slots_)
        if (!f.is_zero()) return false;
    return true;
}

FunctionVector FunctionVector::r_difference(int n, int a, int b, const LinearForm& weight) {
    if (a < 1 || a > n + 1 || b < 1 || b > n + 1)
        throw std::invalid_argument("r-function index out of range");
    FunctionVector out(n);
    if (a < b) {
        for (int k = a; k < b; ++k) out.set_slot(k, weight);
    } else {
        for (int k = b; k < a; ++k) out.set_slot(k, -weight);
    }
    return out;
}

std::vector<Rational> FunctionVector::values(const std::vector<Rational>& coeffValues) const {
    std::vector<Rational> out;
    out.reserve(slots_.size());
    for (const auto& f : slots_) out.push_back(f.evaluate(coeffValues));
    return out;
}

std::string FunctionVector::to_text() const {
    if (n_ == 0) return "()";
    std::ostringstream out;
    for (int k = 1; k <= n_; ++k) {
        if (k > 1) out << "; ";
        out << slot(k).to_text();
    }
    return out.str();
}

FunctionVector FunctionVector::from_text(const std::string& text, int n) {
    if (text == "()") {
        if (n > 0) throw std::invalid_argument("arity mismatch in function literal");
        return FunctionVector(0);
    }
    std::vector<LinearForm> forms;
    std::size_t start = 0;
    while (true) {
        std::size_t semi = text.find(';', start);
        forms.push_back(LinearForm::from_text(
            text.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (n >= 0 && n != static_cast<int>(forms.size()))
        throw std::invalid_argument("arity mismatch in function literal");
    FunctionVector out(static_cast<int>(forms.size()));
    for (int k = 1; k <= out.n(); ++k) out.set_slot(k, std::move(forms[static_cast<std::size_t>(k - 1)]));
    return out;
}

}  // namespace sgx
