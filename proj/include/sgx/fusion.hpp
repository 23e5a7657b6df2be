#pragma once

// Construction of the labelled vertex-function graph for a coefficient order
// by repeated binary fusion, together with every certificate and check the
// workbench runs against it:
//   - build_sgraph: bottom-up fusion; at each level the graph is doubled, the
//     upper copy inserts the new slot from its lower neighbour slot, the lower
//     copy from its upper neighbour slot plus (c_s - c_next), and the two
//     copies are matched 1:1 by new edges carrying the fused index.
//   - zset: the set of vertex functions (all 2^n are pairwise distinct).
//   - propagate_functions: independent re-derivation of all functions from the
//     distinguished vertex through the per-edge difference relation.
//   - per-edge relation check, per-level certificate checks, the S-property
//     path check, and exact separating evaluation points.

#include "sgx/function_vector.hpp"
#include "sgx/orders.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgx {

struct SVertex {
    int id = 0;
    int label = 0;  // 1..n+1
    FunctionVector fn;
};

struct SEdge {
    int u = 0;
    int v = 0;
    int coeffIndex = 0;  // 1..n
};

struct FusionPair {
    int v = 0;    // id in the level's upper copy
    int phi = 0;  // matched id in the level's lower copy
    LinearForm cv;  // the form with fn(phi(v)) - fn(v) = (c_s - cv) on slot s
};

struct FusionCertificate {
    int s = 0;  // index fused at this level (the ≺-maximal element so far)
    std::vector<FusionPair> pairs;
    // Function table of the whole graph right after this fusion step. Later
    // steps rewrite functions in the copies they make, so level checks must
    // read this snapshot, not the finished graph.
    std::vector<FunctionVector> fnsAtLevel;
};

struct SGraph {
    CoeffOrder order;
    std::vector<SVertex> vertices;  // vertices[id].id == id
    std::vector<SEdge> edges;
    int distinguished = 0;  // id; label n+1, zero function
    std::vector<FusionCertificate> levels;  // one per fusion step, outermost last

    int n() const { return order.n(); }
};

SGraph build_sgraph(const CoeffOrder& order);

// Distinct vertex functions, sorted. The construction makes all 2^n functions
// pairwise distinct, so the size equals the vertex count; tests assert that.
std::vector<FunctionVector> zset(const SGraph& g);

// Re-derives every vertex function by walking edges from the distinguished
// vertex (function 0) using fn(u) - fn(v) = c_r (r^{label u} - r^{label v}).
// Independent of the slot-insertion recursion; tests compare the two.
std::vector<FunctionVector> propagate_functions(const SGraph& g);

struct EdgeViolation {
    int u = 0, v = 0, coeffIndex = 0;
    std::string what;
};

// Symbolic check of the per-edge difference relation on the finished graph.
std::vector<EdgeViolation> check_edge_relation(const SGraph& g);

struct CertificateViolation {
    int level = 0;  // 1-based fusion step
    int v = 0;      // upper-copy id at that level
    std::string what;
};

// Per-level symbolic checks against the level snapshots: the matched pair
// differs exactly on the fused slot, the difference is c_s - c(v) with c(v)
// zero or a single other indeterminate, and the stored c(v) agrees.
std::vector<CertificateViolation> check_fusion_certificates(const SGraph& g);

// Numeric part of the certificate check: c_s - c(v) >= 0 under compatible
// coefficients, and the fused-slot interval bounds at the outermost level
// (lower-neighbour slot <= fused slot of the lower copy <= upper-neighbour
// slot + c_s - c_{s+1}).
std::vector<CertificateViolation> check_certificate_signs(const SGraph& g,
                                                          const NumericCoeffs& coeffs);

struct SPropertyFailure {
    int v = 0;  // start vertex id
    int k = 0;  // unreachable target label
};

// From every vertex and for every target label in 1..n+1 there must be a path
// whose edge coefficient indices strictly increase in ≺-rank and which ends on
// a vertex of that label (the empty path serves the vertex's own label). The
// verdict depends only on the order; coeffs are part of the interface because
// callers check under sampled compatible values.
std::vector<SPropertyFailure> s_property(const SGraph& g, const NumericCoeffs& coeffs);

struct EvaluationPoint {
    std::vector<Rational> b;  // b[j-1] is the value at r^j, j = 1..n+1
};

// Sum over slots of value(slot_k) * (b_k - b_{k+1}).
Rational evaluate_at(const FunctionVector& fn, const NumericCoeffs& coeffs,
                     const EvaluationPoint& b);

// A point where the target vertex's function evaluates strictly above every
// numerically distinct vertex function (exact LP with margin 1). Returns
// nullopt only if the LP is infeasible, which the separation theory rules out
// for distinct functions.
std::optional<EvaluationPoint> separating_point(const SGraph& g, const NumericCoeffs& coeffs,
                                                int targetId);

// Cross-check mode: the recursive interval construction — walk the fusion
// levels, inserting each new coordinate value just below (target in upper
// copy) or just above (lower copy) its fused neighbour. Certifies the same
// property when the evaluated functions are pairwise distinct numerically.
EvaluationPoint separating_point_interval(const SGraph& g, int targetId);

// Witness that the naive lower-copy shift fn(phi(v)) = fn(v) + (c_s -
// c_{s+1}) * delta_s fails in general: returns some outermost-level v where it
// differs symbolically, if any.
std::optional<int> naive_shift_witness(const SGraph& g);

// Serialization.
std::string sgraph_to_json(const SGraph& g);
std::string sgraph_to_dot(const SGraph& g);

}  // namespace sgx
