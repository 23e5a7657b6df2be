#pragma once

// Coefficient orderings and numeric coefficient assignments. An order is a
// linear order ≺ on {1..n} given as the sequence s_1 ≺ s_2 ≺ ... ≺ s_n;
// numeric coefficients are compatible with it when their values are
// non-decreasing along the sequence.

#include "sgx/rational.hpp"

#include <cstdint>
#include <vector>

namespace sgx {

class CoeffOrder {
  public:
    CoeffOrder() = default;
    // seq must be a permutation of 1..seq.size().
    explicit CoeffOrder(std::vector<int> seq);

    int n() const { return static_cast<int>(seq_.size()); }
    const std::vector<int>& seq() const { return seq_; }
    // Position of index i in the sequence, 1-based (s_rank = i).
    int rank_of(int index) const;
    bool precedes(int a, int b) const { return rank_of(a) < rank_of(b); }

    bool operator==(const CoeffOrder& other) const { return seq_ == other.seq_; }

  private:
    std::vector<int> seq_;
    std::vector<int> rank_;  // rank_[i-1] = position of i, 1-based
};

struct NumericCoeffs {
    std::vector<Rational> c;  // c[k-1] is the value of c_k

    int n() const { return static_cast<int>(c.size()); }
    // k may range over 0..n+1; both boundary values are 0.
    Rational at(int k) const;
};

// True iff values are non-decreasing along the order: c_{s_1} <= ... <= c_{s_n}.
bool compatible(const CoeffOrder& order, const NumericCoeffs& coeffs);

// The first k elements of the order sequence, sorted ascending.
std::vector<int> sorted_chain(const CoeffOrder& order, int k);

enum class Profile { generic, ties, zeros };

const char* profile_name(Profile p);
Profile profile_from_name(const std::string& name);

// Deterministic sampler: a 64-bit LCG (state := state*6364136223846793005 +
// 1442695040888963407 mod 2^64, value := (state >> 33) % 1000 + 1) seeded with
// `seed` draws n values in [1,1000]; they are sorted ascending and assigned to
// c_{s_1} <= ... <= c_{s_n}, which makes the result compatible by
// construction. generic redraws until the values are pairwise distinct; ties
// forces at least one repeat (v[1] := v[0], degenerate at n = 1); zeros forces
// v[0] := 0.
NumericCoeffs sample_coeffs(const CoeffOrder& order, std::uint64_t seed, Profile profile);

// All permutations of 1..n in lexicographic sequence order.
std::vector<CoeffOrder> all_orders(int n);

}  // namespace sgx
