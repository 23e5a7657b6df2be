#pragma once

// Symbolic linear forms over the coefficient indeterminates c_1..c_n, with
// exact rational coefficients and no constant term. Stored sparsely; zero
// coefficients are never kept, so equality is structural.

#include "sgx/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgx {

class LinearForm {
  public:
    LinearForm() = default;

    static LinearForm indeterminate(int index, const Rational& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coefficient(int index) const;

    LinearForm& operator+=(const LinearForm& other);
    LinearForm& operator-=(const LinearForm& other);
    LinearForm operator+(const LinearForm& other) const;
    LinearForm operator-(const LinearForm& other) const;
    LinearForm operator-() const;
    LinearForm scaled(const Rational& factor) const;

    bool operator==(const LinearForm& other) const { return terms_ == other.terms_; }
    bool operator<(const LinearForm& other) const { return terms_ < other.terms_; }

    // If the form is exactly 1*c_j returns j; std::nullopt otherwise.
    std::optional<int> single_indeterminate() const;

    // Substitutes numeric values: values[i-1] is the value of c_i; indices
    // beyond the vector (or index 0) count as zero.
    Rational evaluate(const std::vector<Rational>& values) const;

    // Text form like "c1+c2-c3", "2*c1-1/2*c4", or "0".
    std::string to_text() const;
    static LinearForm from_text(const std::string& text);

  private:
    std::map<int, Rational> terms_;
};

}  // namespace sgx
