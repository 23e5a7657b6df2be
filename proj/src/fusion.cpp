#include "sgx/fusion.hpp"

#include "sgx/json_io.hpp"
#include "sgx/simplex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sgx {

namespace {

// Predecessor / successor of s within the processed index set (0 if none).
int pred_in(const std::set<int>& m, int s) {
    auto it = m.lower_bound(s);
    if (it == m.begin()) return 0;
    return *std::prev(it);
}

int succ_in(const std::set<int>& m, int s) {
    auto it = m.upper_bound(s);
    return it == m.end() ? 0 : *it;
}

LinearForm coeff_form(int index) {
    return index == 0 ? LinearForm{} : LinearForm::indeterminate(index);
}

}  // namespace

SGraph build_sgraph(const CoeffOrder& order) {
    const int n = order.n();
    SGraph g;
    g.order = order;
    g.vertices.push_back(SVertex{0, 1, FunctionVector(n)});
    g.distinguished = 0;

    std::set<int> processed;
    for (int d = 1; d <= n; ++d) {
        const int s = order.seq()[static_cast<std::size_t>(d - 1)];
        const int prev = pred_in(processed, s);
        const int next = succ_in(processed, s);
        // Closed-up rank of s among the indices fused so far plus s itself.
        const int p = static_cast<int>(std::distance(processed.begin(), processed.lower_bound(s))) + 1;
        const std::size_t half = g.vertices.size();

        std::vector<SVertex> verts;
        verts.reserve(half * 2);
        // Upper copy: labels at or above the insertion rank move up one; the
        // new slot takes the value of its lower neighbour slot.
        for (std::size_t i = 0; i < half; ++i) {
            const SVertex& old = g.vertices[i];
            SVertex v;
            v.id = static_cast<int>(i);
            v.label = old.label >= p ? old.label + 1 : old.label;
            v.fn = old.fn;
            v.fn.set_slot(s, old.fn.slot(prev == 0 ? 0 : prev));
            verts.push_back(std::move(v));
        }
        // Lower copy: the matched vertex keeps every label except p+1 -> p;
        // the new slot takes the upper neighbour slot plus (c_s - c_next).
        FusionCertificate cert;
        cert.s = s;
        const LinearForm shift = coeff_form(s) - coeff_form(next);
        for (std::size_t i = 0; i < half; ++i) {
            const SVertex& up = verts[i];
            SVertex v;
            v.id = static_cast<int>(i + half);
            v.label = up.label == p + 1 ? p : up.label;
            v.fn = up.fn;
            v.fn.set_slot(s, (next == 0 ? LinearForm{} : up.fn.slot(next)) + shift);
            LinearForm cv = coeff_form(s) - (v.fn.slot(s) - up.fn.slot(s));
            cert.pairs.push_back(FusionPair{up.id, v.id, std::move(cv)});
            verts.push_back(std::move(v));
        }

        std::vector<SEdge> edges;
        edges.reserve(g.edges.size() * 2 + half);
        for (const SEdge& e : g.edges) edges.push_back(e);
        for (const SEdge& e : g.edges)
            edges.push_back(SEdge{e.u + static_cast<int>(half), e.v + static_cast<int>(half),
                                  e.coeffIndex});
        for (std::size_t i = 0; i < half; ++i)
            if (verts[i].label == p + 1)
                edges.push_back(SEdge{static_cast<int>(i), static_cast<int>(i + half), s});

        g.vertices = std::move(verts);
        g.edges = std::move(edges);
        cert.fnsAtLevel.reserve(g.vertices.size());
        for (const SVertex& v : g.vertices) cert.fnsAtLevel.push_back(v.fn);
        g.levels.push_back(std::move(cert));
        processed.insert(s);
    }
    return g;
}

std::vector<FunctionVector> zset(const SGraph& g) {
    std::set<FunctionVector> out;
    for (const SVertex& v : g.vertices) out.insert(v.fn);
    return std::vector<FunctionVector>(out.begin(), out.end());
}

std::vector<FunctionVector> propagate_functions(const SGraph& g) {
    const int n = g.n();
    std::vector<std::vector<std::pair<int, const SEdge*>>> adj(g.vertices.size());
    for (const SEdge& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, &e});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, &e});
    }
    std::vector<FunctionVector> fns(g.vertices.size());
    std::vector<bool> known(g.vertices.size(), false);
    std::deque<int> queue;
    fns[static_cast<std::size_t>(g.distinguished)] = FunctionVector(n);
    known[static_cast<std::size_t>(g.distinguished)] = true;
    queue.push_back(g.distinguished);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto [w, e] : adj[static_cast<std::size_t>(u)]) {
            if (known[static_cast<std::size_t>(w)]) continue;
            const FunctionVector diff =
                FunctionVector::r_difference(n, g.vertices[static_cast<std::size_t>(u)].label,
                                             g.vertices[static_cast<std::size_t>(w)].label,
                                             coeff_form(e->coeffIndex));
            // fn(u) - fn(w) = diff, so fn(w) = fn(u) - diff.
            fns[static_cast<std::size_t>(w)] = fns[static_cast<std::size_t>(u)] - diff;
            known[static_cast<std::size_t>(w)] = true;
            queue.push_back(w);
        }
    }
    for (bool k : known)
        if (!k) throw std::logic_error("graph is not connected");
    return fns;
}

std::vector<EdgeViolation> check_edge_relation(const SGraph& g) {
    std::vector<EdgeViolation> out;
    for (const SEdge& e : g.edges) {
        const SVertex& u = g.vertices[static_cast<std::size_t>(e.u)];
        const SVertex& v = g.vertices[static_cast<std::size_t>(e.v)];
        const FunctionVector expect =
            FunctionVector::r_difference(g.n(), u.label, v.label, coeff_form(e.coeffIndex));
        if (!(u.fn - v.fn == expect))
            out.push_back(EdgeViolation{e.u, e.v, e.coeffIndex,
                                        "difference " + (u.fn - v.fn).to_text() +
                                            " != " + expect.to_text()});
    }
    return out;
}

std::vector<CertificateViolation> check_fusion_certificates(const SGraph& g) {
    std::vector<CertificateViolation> out;
    const int n = g.n();
    std::set<int> processed;
    for (int d = 1; d <= n; ++d) {
        const FusionCertificate& cert = g.levels[static_cast<std::size_t>(d - 1)];
        const int s = g.order.seq()[static_cast<std::size_t>(d - 1)];
        if (cert.s != s) {
            out.push_back({d, -1, "certificate fused index mismatch"});
            processed.insert(s);
            continue;
        }
        const int next = succ_in(processed, s);
        const LinearForm shift = coeff_form(s) - coeff_form(next);
        const std::size_t size = std::size_t(1) << d;
        if (cert.fnsAtLevel.size() != size) {
            out.push_back({d, -1, "level snapshot has wrong size"});
            processed.insert(s);
            continue;
        }
        for (const FusionPair& pair : cert.pairs) {
            const FunctionVector& up = cert.fnsAtLevel[static_cast<std::size_t>(pair.v)];
            const FunctionVector& low = cert.fnsAtLevel[static_cast<std::size_t>(pair.phi)];
            // Matched functions agree away from the fused slot, and the fused
            // slot of the lower copy is the upper-neighbour slot shifted.
            for (int k = 1; k <= n; ++k) {
                if (k == s) continue;
                if (!(up.slot(k) == low.slot(k))) {
                    out.push_back({d, pair.v, "pair differs off the fused slot"});
                    break;
                }
            }
            const LinearForm expected =
                (next == 0 ? LinearForm{} : up.slot(next)) + shift;
            if (!(low.slot(s) == expected))
                out.push_back({d, pair.v, "fused slot does not follow the shift rule"});
            // Independent reading: the difference is c_s - c(v) with c(v)
            // either zero or a single other indeterminate.
            const LinearForm diff = low.slot(s) - up.slot(s);
            const LinearForm cv = coeff_form(s) - diff;
            if (!(cv == pair.cv)) out.push_back({d, pair.v, "stored c(v) disagrees"});
            if (!cv.is_zero()) {
                auto j = cv.single_indeterminate();
                if (!j || *j == s)
                    out.push_back({d, pair.v, "c(v) = " + cv.to_text() +
                                                  " is neither zero nor a distinct indeterminate"});
            }
        }
        processed.insert(s);
    }
    // The outermost snapshot must be the finished graph.
    if (n > 0) {
        const auto& last = g.levels.back().fnsAtLevel;
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            if (!(last[i] == g.vertices[i].fn)) {
                out.push_back({n, static_cast<int>(i), "outermost snapshot differs from graph"});
                break;
            }
    }
    return out;
}

std::vector<CertificateViolation> check_certificate_signs(const SGraph& g,
                                                          const NumericCoeffs& coeffs) {
    if (!compatible(g.order, coeffs))
        throw std::invalid_argument("coefficients are not compatible with the order");
    std::vector<CertificateViolation> out;
    const int n = g.n();
    for (int d = 1; d <= n; ++d) {
        const FusionCertificate& cert = g.levels[static_cast<std::size_t>(d - 1)];
        const Rational cs = coeffs.at(cert.s);
        for (const FusionPair& pair : cert.pairs) {
            if (cs - pair.cv.evaluate(coeffs.c) < 0)
                out.push_back({d, pair.v, "c_s - c(v) is negative"});
        }
    }
    if (n > 0) {
        // Outermost fused-slot interval: lower-neighbour slot <= fused slot of
        // the matched vertex <= upper-neighbour slot + c_s - c_{s+1}.
        const FusionCertificate& cert = g.levels.back();
        const int s = cert.s;
        const Rational width = coeffs.at(s) - coeffs.at(s + 1);
        for (const FusionPair& pair : cert.pairs) {
            const FunctionVector& up = g.vertices[static_cast<std::size_t>(pair.v)].fn;
            const FunctionVector& low = g.vertices[static_cast<std::size_t>(pair.phi)].fn;
            const Rational lo = up.slot(s - 1).evaluate(coeffs.c);
            const Rational mid = low.slot(s).evaluate(coeffs.c);
            const Rational hi = up.slot(s + 1).evaluate(coeffs.c) + width;
            if (!(lo <= mid && mid <= hi))
                out.push_back({n, pair.v, "fused slot escapes its interval"});
        }
    }
    return out;
}

std::vector<SPropertyFailure> s_property(const SGraph& g, const NumericCoeffs& coeffs) {
    if (!compatible(g.order, coeffs))
        throw std::invalid_argument("coefficients are not compatible with the order");
    const int n = g.n();
    const std::size_t vcount = g.vertices.size();
    std::vector<std::vector<std::pair<int, int>>> adj(vcount);  // (neighbour, rank)
    for (const SEdge& e : g.edges) {
        const int rank = g.order.rank_of(e.coeffIndex);
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, rank});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, rank});
    }
    std::vector<SPropertyFailure> out;
    for (std::size_t start = 0; start < vcount; ++start) {
        // States: (vertex, minimum rank the next edge must exceed).
        std::vector<std::vector<bool>> seen(vcount, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
        std::vector<bool> label_reached(static_cast<std::size_t>(n) + 2, false);
        std::deque<std::pair<int, int>> queue;
        seen[start][0] = true;
        queue.push_back({static_cast<int>(start), 0});
        while (!queue.empty()) {
            auto [u, last] = queue.front();
            queue.pop_front();
            label_reached[static_cast<std::size_t>(g.vertices[static_cast<std::size_t>(u)].label)] =
                true;
            for (auto [w, rank] : adj[static_cast<std::size_t>(u)]) {
                if (rank <= last) continue;
                if (seen[static_cast<std::size_t>(w)][static_cast<std::size_t>(rank)]) continue;
                seen[static_cast<std::size_t>(w)][static_cast<std::size_t>(rank)] = true;
                queue.push_back({w, rank});
            }
        }
        for (int k = 1; k <= n + 1; ++k)
            if (!label_reached[static_cast<std::size_t>(k)])
                out.push_back(SPropertyFailure{static_cast<int>(start), k});
    }
    return out;
}

Rational evaluate_at(const FunctionVector& fn, const NumericCoeffs& coeffs,
                     const EvaluationPoint& b) {
    if (static_cast<int>(b.b.size()) != fn.n() + 1)
        throw std::invalid_argument("evaluation point has wrong arity");
    Rational acc = 0;
    const auto vals = fn.values(coeffs.c);
    for (int k = 1; k <= fn.n(); ++k)
        acc += vals[static_cast<std::size_t>(k - 1)] *
               (b.b[static_cast<std::size_t>(k - 1)] - b.b[static_cast<std::size_t>(k)]);
    return acc;
}

std::optional<EvaluationPoint> separating_point(const SGraph& g, const NumericCoeffs& coeffs,
                                                int targetId) {
    const int n = g.n();
    const auto tv = g.vertices[static_cast<std::size_t>(targetId)].fn.values(coeffs.c);
    std::set<std::vector<Rational>> competitors;
    for (const SVertex& v : g.vertices) {
        auto zv = v.fn.values(coeffs.c);
        if (zv != tv) competitors.insert(std::move(zv));
    }
    // Margin-1 feasibility over free variables b_1..b_{n+1}: for each
    // competitor z, sum_j ((t-z)_j - (t-z)_{j-1}) b_j >= 1. Free variables are
    // split b = u - w; each constraint gets a surplus variable.
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    const std::size_t rows = competitors.size();
    std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(2 * dim + rows, Rational(0)));
    std::vector<Rational> rhs(rows, Rational(1));
    std::size_t i = 0;
    for (const auto& zv : competitors) {
        for (std::size_t j = 0; j < dim; ++j) {
            Rational a = 0;
            if (j < static_cast<std::size_t>(n)) a += tv[j] - zv[j];
            if (j >= 1) a -= tv[j - 1] - zv[j - 1];
            A[i][j] = a;
            A[i][dim + j] = -a;
        }
        A[i][2 * dim + i] = -1;
        ++i;
    }
    auto x = simplex_feasible(std::move(A), std::move(rhs));
    if (!x) return std::nullopt;
    EvaluationPoint b;
    b.b.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) b.b[j] = (*x)[j] - (*x)[dim + j];
    return b;
}

EvaluationPoint separating_point_interval(const SGraph& g, int targetId) {
    const int n = g.n();
    // Which copy holds the target at each level, outermost first computed,
    // then replayed innermost-out.
    std::vector<bool> lowerSide(static_cast<std::size_t>(n) + 1, false);
    int id = targetId;
    for (int d = n; d >= 1; --d) {
        const int half = 1 << (d - 1);
        lowerSide[static_cast<std::size_t>(d)] = id >= half;
        if (id >= half) id -= half;
    }
    std::vector<Rational> vals{Rational(0)};
    std::set<int> processed;
    for (int d = 1; d <= n; ++d) {
        const int s = g.order.seq()[static_cast<std::size_t>(d - 1)];
        const int p = static_cast<int>(std::distance(processed.begin(), processed.lower_bound(s))) + 1;
        const Rational ref = vals[static_cast<std::size_t>(p - 1)];
        Rational newVal;
        if (!lowerSide[static_cast<std::size_t>(d)]) {
            // Target sits in the upper copy: new coordinate value just below
            // its fused neighbour, without crossing any other value.
            std::optional<Rational> floor;
            for (const auto& v : vals)
                if (v < ref && (!floor || v > *floor)) floor = v;
            newVal = floor ? Rational((*floor + ref) / 2) : Rational(ref - 1);
        } else {
            std::optional<Rational> ceil;
            for (const auto& v : vals)
                if (v > ref && (!ceil || v < *ceil)) ceil = v;
            newVal = ceil ? Rational((ref + *ceil) / 2) : Rational(ref + 1);
        }
        vals.insert(vals.begin() + (p - 1), newVal);
        processed.insert(s);
    }
    return EvaluationPoint{std::move(vals)};
}

std::optional<int> naive_shift_witness(const SGraph& g) {
    const int n = g.n();
    if (n == 0) return std::nullopt;
    const FusionCertificate& cert = g.levels.back();
    const int s = cert.s;
    const LinearForm shift = coeff_form(s) - (s + 1 <= n ? coeff_form(s + 1) : LinearForm{});
    for (const FusionPair& pair : cert.pairs) {
        FunctionVector naive = g.vertices[static_cast<std::size_t>(pair.v)].fn;
        naive.set_slot(s, naive.slot(s) + shift);
        if (!(naive == g.vertices[static_cast<std::size_t>(pair.phi)].fn)) return pair.v;
    }
    return std::nullopt;
}

std::string sgraph_to_json(const SGraph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["order"] = g.order.seq();
    j["vertices"] = nlohmann::json::array();
    for (const SVertex& v : g.vertices)
        j["vertices"].push_back(
            {{"id", v.id}, {"label", v.label}, {"fn", function_to_json(v.fn)}});
    j["edges"] = nlohmann::json::array();
    for (const SEdge& e : g.edges)
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"r", e.coeffIndex}});
    j["distinguished"] = g.distinguished;
    j["certificates"] = nlohmann::json::array();
    for (const FusionCertificate& cert : g.levels) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const FusionPair& pair : cert.pairs)
            pairs.push_back({{"v", pair.v}, {"phi", pair.phi}, {"cv", pair.cv.to_text()}});
        j["certificates"].push_back({{"s", cert.s}, {"pairs", pairs}});
    }
    return j.dump(2) + "\n";
}

std::string sgraph_to_dot(const SGraph& g) {
    std::ostringstream out;
    out << "graph sgraph {\n";
    for (const SVertex& v : g.vertices)
        out << "  v" << v.id << " [label=\"" << v.label << "|" << v.fn.to_text() << "\"];\n";
    for (const SEdge& e : g.edges)
        out << "  v" << e.u << " -- v" << e.v << " [label=\"c" << e.coeffIndex << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace sgx
