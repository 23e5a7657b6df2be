#include "sgx/orders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace sgx {

CoeffOrder::CoeffOrder(std::vector<int> seq) : seq_(std::move(seq)) {
    const int n = static_cast<int>(seq_.size());
    rank_.assign(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int pos = 1; pos <= n; ++pos) {
        int v = seq_[static_cast<std::size_t>(pos - 1)];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("order sequence is not a permutation of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
        rank_[static_cast<std::size_t>(v - 1)] = pos;
    }
}

int CoeffOrder::rank_of(int index) const {
    if (index < 1 || index > n()) throw std::out_of_range("order index out of range");
    return rank_[static_cast<std::size_t>(index - 1)];
}

Rational NumericCoeffs::at(int k) const {
    if (k == 0 || k == n() + 1) return Rational(0);
    if (k < 1 || k > n()) throw std::out_of_range("coefficient index out of range");
    return c[static_cast<std::size_t>(k - 1)];
}

bool compatible(const CoeffOrder& order, const NumericCoeffs& coeffs) {
    if (order.n() != coeffs.n()) throw std::invalid_argument("order/coefficient arity mismatch");
    for (int i = 1; i < order.n(); ++i) {
        if (coeffs.at(order.seq()[static_cast<std::size_t>(i - 1)]) >
            coeffs.at(order.seq()[static_cast<std::size_t>(i)]))
            return false;
    }
    return true;
}

std::vector<int> sorted_chain(const CoeffOrder& order, int k) {
    if (k < 0 || k > order.n()) throw std::out_of_range("chain length out of range");
    std::vector<int> chain(order.seq().begin(), order.seq().begin() + k);
    std::sort(chain.begin(), chain.end());
    return chain;
}

const char* profile_name(Profile p) {
    switch (p) {
        case Profile::generic: return "generic";
        case Profile::ties: return "ties";
        case Profile::zeros: return "zeros";
    }
    return "?";
}

Profile profile_from_name(const std::string& name) {
    if (name == "generic") return Profile::generic;
    if (name == "ties") return Profile::ties;
    if (name == "zeros") return Profile::zeros;
    throw std::invalid_argument("unknown profile: " + name);
}

namespace {

struct Lcg {
    std::uint64_t state;
    std::uint64_t next_value() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return (state >> 33) % 1000ULL + 1ULL;
    }
};

}  // namespace

NumericCoeffs sample_coeffs(const CoeffOrder& order, std::uint64_t seed, Profile profile) {
    const int n = order.n();
    Lcg gen{seed};
    std::vector<std::uint64_t> values;
    if (profile == Profile::generic) {
        std::set<std::uint64_t> seen;
        while (static_cast<int>(values.size()) < n) {
            std::uint64_t v = gen.next_value();
            if (seen.insert(v).second) values.push_back(v);
        }
    } else {
        for (int i = 0; i < n; ++i) values.push_back(gen.next_value());
    }
    std::sort(values.begin(), values.end());
    if (profile == Profile::ties && n >= 2) values[1] = values[0];
    if (profile == Profile::zeros) values[0] = 0;

    NumericCoeffs coeffs;
    coeffs.c.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        int target = order.seq()[static_cast<std::size_t>(i)];
        coeffs.c[static_cast<std::size_t>(target - 1)] =
            Rational(static_cast<unsigned long>(values[static_cast<std::size_t>(i)]));
    }
    return coeffs;
}

std::vector<CoeffOrder> all_orders(int n) {
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
    std::vector<CoeffOrder> out;
    if (n == 0) {
        out.emplace_back(std::vector<int>{});
        return out;
    }
    do {
        out.emplace_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

}  // namespace sgx
