// Acceptance gate: one line per criterion, exact comparisons throughout.
// Exits 0 only if every criterion passes. Wall-clock timings go to stderr so
// stdout stays comparable between runs.

#include "sgx/fusion.hpp"
#include "sgx/harness.hpp"
#include "sgx/orders.hpp"
#include "sgx/polytope.hpp"
#include "sgx/tableau.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace sgx;

namespace {

struct Criterion {
    int id = 0;
    bool pass = false;
    std::string detail;
};

std::vector<std::vector<Rational>> evaluated_zset(const std::vector<FunctionVector>& zs,
                                                  const NumericCoeffs& coeffs) {
    std::vector<std::vector<Rational>> vals;
    vals.reserve(zs.size());
    for (const auto& fn : zs) vals.push_back(fn.values(coeffs.c));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

// The dominant functions of a z-set at one evaluation point, keyed by their
// numeric value vectors so that numerically identical functions collapse.
// Which function dominates is an ordering invariant of the evaluation point;
// the full ranking below the top is not (ranks of non-adjacent vertices can
// swap between points with the same coordinate ordering).
std::set<std::vector<Rational>> dominant_values(const std::vector<FunctionVector>& zs,
                                                const NumericCoeffs& coeffs,
                                                const std::vector<Rational>& vals) {
    Rational best = vals.front();
    for (const auto& v : vals)
        if (v > best) best = v;
    std::set<std::vector<Rational>> tops;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] == best) tops.insert(zs[i].values(coeffs.c));
    return tops;
}

// Deterministic generator for the evaluation-point pair sampling; same
// recurrence family as the coefficient sampler but fully local to this file.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

// A point whose coordinates realize the given permutation strictly:
// perm[i] - 1 is the coordinate holding the (i+1)-th smallest value.
EvaluationPoint point_with_ordering(const std::vector<int>& perm, Rng& rng) {
    const int m = static_cast<int>(perm.size());
    std::set<long> drawn;
    while (static_cast<int>(drawn.size()) < m) drawn.insert(static_cast<long>(rng.next() % 100000));
    std::vector<long> sorted(drawn.begin(), drawn.end());
    EvaluationPoint pt;
    pt.b.assign(static_cast<std::size_t>(m), Rational(0));
    for (int i = 0; i < m; ++i)
        pt.b[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)] =
            Rational(sorted[static_cast<std::size_t>(i)]);
    return pt;
}

std::string plural(long long k, const char* noun) {
    std::ostringstream os;
    os << k << " " << noun << (k == 1 ? "" : "s");
    return os.str();
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    VertexCache cache;
    const auto tStart = std::chrono::steady_clock::now();
    auto stamp = [&](const char* what) {
        std::cerr << what << " at "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - tStart)
                         .count()
                  << "s\n";
    };

    // ---------------------------------------------------------------- 1
    // Vertex enumeration equals the evaluated function set: n up to 5, every
    // order, three generic samples, plus one ties and one zeros sample each.
    {
        auto runProfile = [&](Profile p, int trials) {
            long long units = 0;
            long long bad = 0;
            for (int n = 1; n <= 5; ++n) {
                for (const auto& order : all_orders(n)) {
                    auto zs = zset(build_sgraph(order));
                    for (int t = 0; t < trials; ++t) {
                        auto coeffs = sample_coeffs(order, 42 + static_cast<std::uint64_t>(t), p);
                        ++units;
                        if (cache.get(order, coeffs, Variant::chain) != evaluated_zset(zs, coeffs))
                            ++bad;
                    }
                }
            }
            return std::pair<long long, long long>(units, bad);
        };
        auto [gu, gb] = runProfile(Profile::generic, 3);
        stamp("criterion 1 generic");
        auto [tu, tb] = runProfile(Profile::ties, 1);
        auto [zu, zb] = runProfile(Profile::zeros, 1);
        stamp("criterion 1 ties/zeros");
        std::ostringstream os;
        os << "generic " << gu - gb << "/" << gu << ", ties " << tu - tb << "/" << tu
           << ", zeros " << zu - zb << "/" << zu << " systems matched";
        results.push_back({1, gb == 0 && tb == 0 && zb == 0, os.str()});
    }

    // ---------------------------------------------------------------- 2
    // 2^n vertices carrying 2^n pairwise distinct functions, n up to 6.
    {
        long long orders = 0;
        long long bad = 0;
        for (int n = 1; n <= 6; ++n) {
            for (const auto& order : all_orders(n)) {
                ++orders;
                auto g = build_sgraph(order);
                std::set<FunctionVector> fns;
                for (const auto& v : g.vertices) fns.insert(v.fn);
                if (g.vertices.size() != (1u << n) || fns.size() != (1u << n)) ++bad;
            }
        }
        std::ostringstream os;
        os << plural(orders, "order") << " checked, " << bad << " with wrong cardinality";
        results.push_back({2, bad == 0, os.str()});
        stamp("criterion 2");
    }

    // ---------------------------------------------------------------- 3
    // Frozen counting values.
    {
        const long long f4 = count_functions(4);
        const long long f2 = count_functions(2);
        const long long g3 = count_graphs(3);
        const long long g4 = count_graphs(4);
        std::ostringstream os;
        os << "functions(4)=" << f4 << " functions(2)=" << f2 << " graphs(3)=" << g3
           << " graphs(4)=" << g4;
        results.push_back({3, f4 == 42 && f2 == 5 && g3 == 5 && g4 == 14, os.str()});
        stamp("criterion 3");
    }

    // ---------------------------------------------------------------- 4
    // Edge relation and fusion certificates, symbolically and under sampled
    // signs, n up to 6; plus a recorded witness that the naive copy shift
    // fails in general.
    {
        long long violations = 0;
        long long units = 0;
        bool witnessFound = false;
        std::string witness = "none";
        for (int n = 1; n <= 6; ++n) {
            for (const auto& order : all_orders(n)) {
                auto g = build_sgraph(order);
                ++units;
                violations += static_cast<long long>(check_edge_relation(g).size());
                violations += static_cast<long long>(check_fusion_certificates(g).size());
                auto coeffs = sample_coeffs(order, 42, Profile::generic);
                violations += static_cast<long long>(check_certificate_signs(g, coeffs).size());
                if (!witnessFound) {
                    if (auto w = naive_shift_witness(g)) {
                        witnessFound = true;
                        std::ostringstream ws;
                        ws << "vertex " << *w << " of order (";
                        for (std::size_t i = 0; i < order.seq().size(); ++i)
                            ws << (i ? "," : "") << order.seq()[i];
                        ws << ")";
                        witness = ws.str();
                    }
                }
            }
        }
        std::ostringstream os;
        os << plural(units, "graph") << ", " << violations << " violations, shift witness: "
           << witness;
        results.push_back({4, violations == 0 && witnessFound, os.str()});
        stamp("criterion 4");
    }

    // ---------------------------------------------------------------- 5
    // Chain and pivot systems agree (n up to 5, three samples per order);
    // dropping a chain inequality strictly enlarges; the all-pairs system is
    // strictly smaller exactly in the reversed-pair scenario.
    {
        long long units = 0;
        long long bad = 0;
        for (int n = 1; n <= 5; ++n) {
            for (const auto& order : all_orders(n)) {
                for (int t = 0; t < 3; ++t) {
                    auto coeffs =
                        sample_coeffs(order, 42 + static_cast<std::uint64_t>(t), Profile::generic);
                    auto sysChain = build_system(order, coeffs, Variant::chain);
                    auto sysPivot = build_system(order, coeffs, Variant::pivot);
                    const auto& va = cache.get(order, coeffs, Variant::chain);
                    const auto& vb = cache.get(order, coeffs, Variant::pivot);
                    ++units;
                    bool ok = true;
                    for (const auto& v : va)
                        if (!contains(sysPivot, v)) ok = false;
                    for (const auto& v : vb)
                        if (!contains(sysChain, v)) ok = false;
                    if (!ok) ++bad;
                }
            }
        }
        stamp("criterion 5 equivalence");

        bool enlarges = false;
        {
            CoeffOrder order({1, 3, 2});
            NumericCoeffs coeffs{{Rational(1), Rational(3), Rational(2)}};
            auto full = build_system(order, coeffs, Variant::chain);
            InequalitySystem reduced = full;
            reduced.ineqs.erase(std::remove_if(reduced.ineqs.begin(), reduced.ineqs.end(),
                                               [](const AffineInequality& iq) {
                                                   return std::all_of(
                                                       iq.provenance.begin(), iq.provenance.end(),
                                                       [](const std::string& tag) {
                                                           return tag.rfind("chain k=2", 0) == 0;
                                                       });
                                               }),
                                reduced.ineqs.end());
            for (const auto& v : enumerate_vertices(reduced))
                if (!contains(full, v)) enlarges = true;
        }
        bool strictSubset = false;
        bool reversedWitness = false;
        {
            CoeffOrder order({2, 1, 3});
            NumericCoeffs coeffs{{Rational(2), Rational(1), Rational(3)}};
            auto a = build_system(order, coeffs, Variant::allPairs);
            auto b = build_system(order, coeffs, Variant::chain);
            strictSubset = compare_systems(a, b) == SystemRelation::aStrictlyInsideB;
            for (const auto& v : enumerate_vertices(b))
                if (v[2] < v[0]) reversedWitness = true;
        }
        std::ostringstream os;
        os << units - bad << "/" << units << " systems equivalent; drop-enlarges " << enlarges
           << ", strict-subset " << strictSubset << ", reversed-pair vertex " << reversedWitness;
        results.push_back({5, bad == 0 && enlarges && strictSubset && reversedWitness, os.str()});
        stamp("criterion 5");
    }

    // ---------------------------------------------------------------- 6
    // Rank-increasing reachability of every label from every vertex.
    {
        long long units = 0;
        long long failures = 0;
        for (int n = 1; n <= 5; ++n) {
            for (const auto& order : all_orders(n)) {
                auto g = build_sgraph(order);
                for (int t = 0; t < 2; ++t) {
                    auto coeffs =
                        sample_coeffs(order, 42 + static_cast<std::uint64_t>(t), Profile::generic);
                    ++units;
                    failures += static_cast<long long>(s_property(g, coeffs).size());
                }
            }
        }
        std::ostringstream os;
        os << plural(units, "unit") << ", " << failures << " unreachable pairs";
        results.push_back({6, failures == 0, os.str()});
        stamp("criterion 6");
    }

    // ---------------------------------------------------------------- 7
    // Separating points certify every evaluated function extreme, and the
    // induced ranking depends only on the coordinate ordering of the point.
    {
        long long separated = 0;
        long long missed = 0;
        for (int n = 1; n <= 4; ++n) {
            for (const auto& order : all_orders(n)) {
                auto g = build_sgraph(order);
                auto coeffs = sample_coeffs(order, 42, Profile::generic);
                std::vector<std::vector<Rational>> vals;
                for (const auto& v : g.vertices) vals.push_back(v.fn.values(coeffs.c));
                for (const auto& target : g.vertices) {
                    auto pt = separating_point(g, coeffs, target.id);
                    if (!pt) {
                        ++missed;
                        continue;
                    }
                    auto top = evaluate_at(target.fn, coeffs, *pt);
                    bool dominates = true;
                    for (const auto& other : g.vertices) {
                        if (vals[static_cast<std::size_t>(other.id)] ==
                            vals[static_cast<std::size_t>(target.id)])
                            continue;
                        if (!(evaluate_at(other.fn, coeffs, *pt) < top)) dominates = false;
                    }
                    if (dominates) ++separated;
                    else ++missed;
                }
            }
        }
        stamp("criterion 7 separation");

        long long pairs = 0;
        long long mismatched = 0;
        Rng rng{2026};
        for (int n = 2; n <= 4; ++n) {
            auto orders = all_orders(n);
            if (orders.size() > 6) orders.resize(6);
            for (const auto& order : orders) {
                auto zs = zset(build_sgraph(order));
                for (Profile prof : {Profile::generic, Profile::ties, Profile::zeros}) {
                    auto coeffs = sample_coeffs(order, 42, prof);
                    for (int rep = 0; rep < 8; ++rep) {
                        std::vector<int> perm(static_cast<std::size_t>(n) + 1);
                        for (int i = 0; i <= n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
                        for (int i = n; i > 0; --i)
                            std::swap(perm[static_cast<std::size_t>(i)],
                                      perm[static_cast<std::size_t>(rng.below(i + 1))]);
                        auto p1 = point_with_ordering(perm, rng);
                        auto p2 = point_with_ordering(perm, rng);
                        std::vector<Rational> v1;
                        std::vector<Rational> v2;
                        for (const auto& z : zs) {
                            v1.push_back(evaluate_at(z, coeffs, p1));
                            v2.push_back(evaluate_at(z, coeffs, p2));
                        }
                        ++pairs;
                        if (dominant_values(zs, coeffs, v1) != dominant_values(zs, coeffs, v2))
                            ++mismatched;
                    }
                }
            }
        }
        std::ostringstream os;
        os << separated << " separations, " << missed << " missed; " << pairs
           << " order-equivalent point pairs, " << mismatched << " dominance mismatches";
        results.push_back({7, missed == 0 && pairs >= 100 && mismatched == 0, os.str()});
        stamp("criterion 7");
    }

    // ---------------------------------------------------------------- 8 & 9
    // Reconstruction: deconstruct every vertex function (n up to 4), verify
    // the per-step invariants, replay, and rebuild heights; the two frozen
    // evaluation examples; rows/diffs agreement on every rebuilt profile.
    {
        long long deconstructed = 0;
        long long deconFailures = 0;
        long long stepInvariantFailures = 0;
        long long rebuildAttempts34 = 0;
        long long rebuildSuccesses34 = 0;
        long long rebuildFailuresSmall = 0;
        long long profileAgree = 0;
        long long profileDisagree = 0;
        for (int n = 1; n <= 4; ++n) {
            for (const auto& order : all_orders(n)) {
                for (const auto& z : zset(build_sgraph(order))) {
                    auto d = deconstruct(z);
                    if (!d.ok) {
                        ++deconFailures;
                        continue;
                    }
                    ++deconstructed;
                    if (!(replay(n, d.log) == z)) ++stepInvariantFailures;
                    FunctionVector f = z;
                    for (const auto& mv : d.log) {
                        auto ext = strongly_extremal_column(f);
                        if (ext.kind != ExtremalColumn::Kind::column || ext.k != mv.k ||
                            !extremal_slot_vanishes(f, ext.k))
                            ++stepInvariantFailures;
                        f = f - move_term(n, mv);
                    }
                    if (!f.is_zero()) ++stepInvariantFailures;

                    auto rb = rebuild_heights(d.log, z);
                    if (n <= 2) {
                        if (!rb.ok) ++rebuildFailuresSmall;
                    } else {
                        ++rebuildAttempts34;
                        if (rb.ok) ++rebuildSuccesses34;
                    }
                    if (rb.ok) {
                        auto rows = evaluate_rows(rb.profile);
                        auto diffs = evaluate_diffs(rb.profile);
                        if (rows.ok() && rows.total == z && rows.total == diffs.total)
                            ++profileAgree;
                        else
                            ++profileDisagree;
                    }
                }
            }
        }
        // A function with two extremal candidates must be flagged, not forced.
        bool rejectsAmbiguous =
            !deconstruct(FunctionVector::from_text("c1; c1+c2")).ok &&
            strongly_extremal_column(FunctionVector::from_text("c1; c1+c2")).kind ==
                ExtremalColumn::Kind::notRepresentable;

        bool ex1 = evaluate_rows(HeightProfile{{3, 2, 1, 3}}).total ==
                   FunctionVector::from_text("c1; c1+c2-c3; c1");
        bool ex2 = evaluate_rows(HeightProfile{{2, 1, 2}}).total ==
                   FunctionVector::from_text("c1-c2; 0");

        std::ostringstream os9;
        os9 << deconstructed << " deconstructed (" << deconFailures << " failures, "
            << stepInvariantFailures << " step violations), ambiguous input flagged "
            << rejectsAmbiguous << ", rebuild n<=2 failures " << rebuildFailuresSmall
            << ", rebuild n=3..4 " << rebuildSuccesses34 << "/" << rebuildAttempts34;
        std::ostringstream os8;
        os8 << "worked examples " << (ex1 && ex2 ? "match" : "MISMATCH") << "; rebuilt profiles "
            << profileAgree << " agree, " << profileDisagree << " disagree";
        results.push_back(
            {8, ex1 && ex2 && profileDisagree == 0 && profileAgree > 0, os8.str()});
        results.push_back({9,
                           deconFailures == 0 && stepInvariantFailures == 0 && rejectsAmbiguous &&
                               rebuildFailuresSmall == 0 && rebuildAttempts34 > 0,
                           os9.str()});
        stamp("criteria 8-9");
    }

    // ---------------------------------------------------------------- 10
    // Every vertex function satisfies the box and chain inequalities under
    // every sampled compatible coefficient vector, n up to 6.
    {
        long long points = 0;
        long long outside = 0;
        for (int n = 1; n <= 6; ++n) {
            for (const auto& order : all_orders(n)) {
                auto zs = zset(build_sgraph(order));
                for (Profile p : {Profile::generic, Profile::ties, Profile::zeros}) {
                    auto coeffs = sample_coeffs(order, 42, p);
                    auto sys = build_system(order, coeffs, Variant::chain);
                    for (const auto& z : zs) {
                        ++points;
                        if (!contains(sys, z.values(coeffs.c))) ++outside;
                    }
                }
            }
        }
        std::ostringstream os;
        os << plural(points, "evaluated point") << ", " << outside << " outside the system";
        results.push_back({10, outside == 0, os.str()});
        stamp("criterion 10");
    }

    std::sort(results.begin(), results.end(),
              [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
    bool all = true;
    for (const auto& c : results) {
        std::cout << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << " — "
                  << c.detail << "\n";
        if (!c.pass) all = false;
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES PRESENT")
              << "\n";
    return all ? 0 : 1;
}
