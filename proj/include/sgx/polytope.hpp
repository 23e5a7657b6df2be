#pragma once

// Convex inequality systems attached to an order and compatible numeric
// coefficients, with exact vertex enumeration. Three variants share the box
// 0 <= x_k <= c_k and differ in the difference constraints:
//   chain     — consecutive pairs of each prefix chain,
//   pivot     — only the pair(s) around the newest chain element,
//   allPairs  — every pair r > s.
// Right-hand sides min{0, c_a - c_b} are evaluated numerically at build time.

#include "sgx/fusion.hpp"
#include "sgx/orders.hpp"

#include <string>
#include <vector>

namespace sgx {

enum class Variant { chain, pivot, allPairs };

const char* variant_token(Variant v);          // "3", "3p", "3pp"
Variant variant_from_token(const std::string& token);

struct AffineInequality {
    std::vector<Rational> normal;  // normal . x >= rhs
    Rational rhs;
    std::vector<std::string> provenance;  // every rule that produced it
};

struct InequalitySystem {
    CoeffOrder order;
    NumericCoeffs coeffs;
    Variant variant = Variant::chain;
    std::vector<AffineInequality> ineqs;

    int n() const { return order.n(); }
};

// Requires compatible(order, coeffs). Inequalities are deduplicated after
// primitive-integer canonicalization; provenance lists are merged.
InequalitySystem build_system(const CoeffOrder& order, const NumericCoeffs& coeffs,
                              Variant variant);

bool contains(const InequalitySystem& sys, const std::vector<Rational>& x);

// Exhaustive vertex enumeration: every n-subset of inequalities with an
// invertible normal matrix is solved exactly; solutions satisfying the whole
// system are kept, deduplicated, and sorted. The plain serial loop is the
// reference; enumerate_vertices partitions the subset range across OpenMP
// threads when available and must return the identical sorted set.
std::vector<std::vector<Rational>> enumerate_vertices_serial(const InequalitySystem& sys);
std::vector<std::vector<Rational>> enumerate_vertices(const InequalitySystem& sys);

// True iff points[idx] is NOT a convex combination of the other points
// (decided by exact phase-1 simplex feasibility).
bool is_extreme_point(const std::vector<std::vector<Rational>>& points, std::size_t idx);

enum class SystemRelation { equal, aStrictlyInsideB, bStrictlyInsideA, incomparable };

const char* relation_name(SystemRelation r);

// Decided by mutual vertex containment.
SystemRelation compare_systems(const InequalitySystem& a, const InequalitySystem& b);

struct TheoremReport {
    bool ok = false;
    std::size_t vertexCount = 0;
    std::size_t functionCount = 0;
    // Symmetric difference when ok is false.
    std::vector<std::vector<Rational>> onlyVertices;
    std::vector<std::vector<Rational>> onlyFunctions;
};

// The headline check: the vertex set of the chain system equals the set of
// numerically evaluated vertex functions of the fused graph (set semantics —
// functions that collide numerically count once).
TheoremReport verify_theorem(const CoeffOrder& order, const NumericCoeffs& coeffs);

std::string system_to_json(const InequalitySystem& sys,
                           const std::vector<std::vector<Rational>>* vertices);
std::string vertices_to_csv(int n, const std::vector<std::vector<Rational>>& vertices);

}  // namespace sgx
