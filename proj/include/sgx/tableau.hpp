#pragma once

// Height-profile tableaux. A complete tableau is determined by its n+1 column
// heights, so profiles are the whole representation. This module checks
// profile admissibility, evaluates the attached function by two independent
// routes (per-row contributions vs per-column telescoping differences),
// extracts the order relations a profile imposes, and runs the function-level
// deconstruction / height-profile reconstruction calculus.

#include "sgx/function_vector.hpp"
#include "sgx/orders.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sgx {

struct HeightProfile {
    std::vector<int> heights;  // heights[j-1] = height of column j, j = 1..n+1

    int n() const { return static_cast<int>(heights.size()) - 1; }
    int height(int col) const;  // 1-based; throws outside [1, n+1]
    int max_height() const;

    bool operator==(const HeightProfile& o) const { return heights == o.heights; }
    bool operator<(const HeightProfile& o) const { return heights < o.heights; }
};

struct ProfileViolation {
    std::string clause;  // "negative-height", "odd-level-rightmost", "even-level-leftmost",
                         // "left-support", "right-support", "empty-profile"
    int level = 0;
    int column = 0;  // 1-based
};

// Admissibility: at every populated odd level the rightmost column reaching
// it must be the last column, at every even level the leftmost must be the
// first; and each column top must be supported by its neighbours (odd top m:
// left height >= m-2 and right height >= m-1; even top m > 0: left >= m-1 and
// right >= m-2; conditions clipped at the ends). Necessary conditions only.
std::vector<ProfileViolation> validate_profile(const HeightProfile& h);
bool admissible(const HeightProfile& h);

struct BoundaryViolation {
    int row = 0;     // level m whose row rule has no partner
    int column = 0;  // 1-based source column
};

struct RowEvaluation {
    FunctionVector total;
    std::vector<FunctionVector> rows;           // rows[m-1] = contribution of level m
    std::vector<BoundaryViolation> violations;  // empty iff the evaluation is defined

    bool ok() const { return violations.empty(); }
};

// Row route: in an odd row m every column C_k with k <= n reaching the row
// contributes c_k(r^k - r^j), j > k minimal reaching m; in an even row m
// every column C_{k+1} with k+1 >= 2 reaching the row contributes
// c_k(r^{k+1} - r^j), j < k+1 maximal reaching m. A missing partner is
// reported as a BoundaryViolation instead of a contribution.
RowEvaluation evaluate_rows(const HeightProfile& h);

struct DiffEvaluation {
    FunctionVector total;           // cumulative sums of the diffs
    std::vector<LinearForm> diffs;  // diffs[k] = slot(k+1) - slot(k), k = 0..n
};

// Telescoping route, independent of evaluate_rows: the slot difference at
// column C_{k+1} of height m is c_{k+1} - c_j when a neighbouring partner at
// level m exists (C_j with j in [1,k] for odd m; C_{j+1} with j in [k+1,n]
// for even m > 0), else c_{k+1}; height 0 contributes 0. c_{n+1} reads as the
// zero form. The cumulative sums must equal the row route exactly.
DiffEvaluation evaluate_diffs(const HeightProfile& h);

struct OrderRelations {
    std::set<std::pair<int, int>> pairs;  // (a, b) meaning a comes before b
};

// Relations a profile imposes on {1..n}. Two columns are neighbouring at
// level m when both reach m and every column strictly between them stays
// below m. At odd level m a neighbouring pair (C_j, C_{k+1}) with j <= k
// orders j before k and before t-1 for every between-column C_t of height
// exactly m-1; at even level m a neighbouring pair (C_{k+1}, C_{j+1}) with
// j > k orders j before k+1. Reflexive pairs are dropped.
OrderRelations order_relations(const HeightProfile& h);
OrderRelations transitive_closure(const OrderRelations& r);
// True iff every relation (closure included) holds in the given linear order.
bool embeds_in(const OrderRelations& r, const CoeffOrder& order);

enum class Parity { odd, even };

const char* parity_name(Parity p);
Parity parity_from_name(const std::string& name);

struct ExtremalColumn {
    enum class Kind { empty, column, notRepresentable };
    Kind kind = Kind::notRepresentable;
    int k = -1;                // valid when kind == column
    std::vector<int> matches;  // every k in [0,n] passing the slot test
};

// Locates the column whose top block was placed last: the unique k in [0,n]
// with slot(k+1) - slot(k) = c_{k+1} as linear forms (boundary slots and
// c_{n+1} read as zero). The zero function yields Kind::empty; zero or
// several matches yield Kind::notRepresentable.
ExtremalColumn strongly_extremal_column(const FunctionVector& f);

struct QuasiCandidate {
    int j = 0;
    Parity parity = Parity::odd;
};

// Partner candidates for removing the top block of column k, returned in
// branch order: odd j in [k+1, n] ascending with slot(j+1) - slot(j) =
// c_{j+1} - c_{k+1}, then even j in [0, k-1] descending with slot(j+1) -
// slot(j) = c_{j+1} - c_k. Empty means no legal removal.
std::vector<QuasiCandidate> quasi_extremal_neighbor(const FunctionVector& f, int k);

struct Move {
    int k = 0;  // column C_{k+1} loses/gains its top block
    int j = 0;  // partner column witness
    Parity parity = Parity::odd;

    bool operator==(const Move& o) const {
        return k == o.k && j == o.j && parity == o.parity;
    }
};

// The function-level contribution of one move: c_{k+1}(r^{k+1} - r^{j+1})
// for odd moves (j > k), c_k(r^{k+1} - r^{j+1}) for even moves (j < k).
FunctionVector move_term(int n, const Move& m);
// Sum of the move terms; a returned log replays to the deconstructed input.
FunctionVector replay(int n, const std::vector<Move>& log);

struct DeconstructResult {
    bool ok = false;
    std::vector<Move> log;  // removal order, topmost block first
    std::string reason;     // "no-extremal", "ambiguous-extremal", "no-branch", "step-bound"
    FunctionVector stuckAt;  // first function at which the search failed
    long long steps = 0;     // moves tried
};

// Depth-first block removal: repeatedly locate the strongly extremal column,
// branch over quasi-extremal partners in order, subtract the move term, and
// stop at the zero function. A visited-function set prunes the cycles caused
// by equivalent representatives. maxSteps < 0 selects the default bound
// 4*n^2*(n+1).
DeconstructResult deconstruct(const FunctionVector& f, long long maxSteps = -1);

// With extremal column k, the slot below the removed block must vanish:
// slot(k) == 0 (slot 0 reads as zero).
bool extremal_slot_vanishes(const FunctionVector& f, int k);

struct RebuildResult {
    bool ok = false;
    HeightProfile profile;  // complete when ok; best partial otherwise
    std::optional<Move> blockingMove;
    long long steps = 0;
};

// Reverse-replays a move log from the empty profile: each move adds one block
// on top of column C_{k+1} (the new height must match the move parity and be
// maximal), with function-preserving augmentations inserted between moves
// when the direct move is inadmissible — a single block creating a unique new
// maximum, or a vertical domino. Every step is gated by validate_profile and
// exact re-evaluation against the replayed intermediate function; round-trip
// equality evaluate_rows(h) = f is the only certificate. Throws
// std::invalid_argument unless replay(log) == f. maxSteps < 0 selects a
// size-based default.
RebuildResult rebuild_heights(const std::vector<Move>& log, const FunctionVector& f,
                              long long maxSteps = -1);

std::string heights_to_text(const HeightProfile& h);  // "3,2,1,3"
// n >= 0 enforces exactly n+1 entries.
HeightProfile heights_from_text(const std::string& text, int n = -1);
std::string movelog_to_json(const std::vector<Move>& log);
std::vector<Move> movelog_from_json(const std::string& text);

}  // namespace sgx
