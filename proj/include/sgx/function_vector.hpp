#pragma once

// A vertex function expressed in the coordinate basis x_k = r^k - r^{k+1},
// k = 1..n: slot k holds the symbolic coefficient of x_k. The boundary
// conventions (slot 0 and slot n+1 read as the zero form) live in the
// accessors and are never stored.

#include "sgx/linear_form.hpp"

#include <string>
#include <vector>

namespace sgx {

class FunctionVector {
  public:
    FunctionVector() : n_(0) {}
    explicit FunctionVector(int n) : n_(n), slots_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("function vector with negative arity");
    }

    int n() const { return n_; }

    // k may range over 0..n+1; the two boundary slots are the zero form.
    const LinearForm& slot(int k) const;
    void set_slot(int k, LinearForm value);

    FunctionVector operator+(const FunctionVector& other) const;
    FunctionVector operator-(const FunctionVector& other) const;
    bool is_zero() const;

    bool operator==(const FunctionVector& other) const {
        return n_ == other.n_ && slots_ == other.slots_;
    }
    bool operator<(const FunctionVector& other) const {
        if (n_ != other.n_) return n_ < other.n_;
        return slots_ < other.slots_;
    }

    // The image of weight*(r^a - r^b): +weight on slots a..b-1 when a < b,
    // -weight on slots b..a-1 when b < a. a, b range over 1..n+1.
    static FunctionVector r_difference(int n, int a, int b, const LinearForm& weight);

    // Numeric slot values under coefficient values (values[i-1] = c_i).
    std::vector<Rational> values(const std::vector<Rational>& coeffValues) const;

    // Text form "c1; c1+c2-c3; c1" (empty arity prints "()").
    std::string to_text() const;
    static FunctionVector from_text(const std::string& text, int n = -1);

  private:
    int n_;
    std::vector<LinearForm> slots_;
};

}  // namespace sgx
