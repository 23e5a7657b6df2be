#include "sgx/polytope.hpp"

#include "sgx/json_io.hpp"
#include "sgx/simplex.hpp"

#include <json.hpp>

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sgx {

const char* variant_token(Variant v) {
    switch (v) {
        case Variant::chain: return "3";
        case Variant::pivot: return "3p";
        case Variant::allPairs: return "3pp";
    }
    throw std::logic_error("unknown variant");
}

Variant variant_from_token(const std::string& token) {
    if (token == "3") return Variant::chain;
    if (token == "3p") return Variant::pivot;
    if (token == "3pp") return Variant::allPairs;
    throw std::invalid_argument("unknown variant token: " + token);
}

namespace {

// Scale (normal, rhs) by a positive rational so the normal becomes a
// primitive integer vector; identical half-spaces then compare equal.
void canonicalize(std::vector<Rational>& normal, Rational& rhs) {
    mpz_class scale = 1;
    for (const auto& q : normal) scale = lcm(scale, q.get_den());
    mpz_class g = 0;
    for (const auto& q : normal) g = gcd(g, mpz_class(q.get_num() * (scale / q.get_den())));
    if (g == 0) return;  // all-zero normal, leave as-is
    Rational factor(scale, g);
    factor.canonicalize();
    for (auto& q : normal) q *= factor;
    rhs *= factor;
}

std::string half_space_key(const std::vector<Rational>& normal, const Rational& rhs) {
    std::string key;
    for (const auto& q : normal) {
        key += rational_to_string(q);
        key += ',';
    }
    key += '|';
    key += rational_to_string(rhs);
    return key;
}

// Exact Gauss-Jordan solve of normal-matrix * x = rhs for an n-subset of
// inequalities. Empty result marks a singular matrix.
std::optional<std::vector<Rational>> solve_square(const std::vector<const AffineInequality*>& rows,
                                                  int n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::vector<Rational>> a(un, std::vector<Rational>(un + 1));
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j < un; ++j) a[i][j] = rows[i]->normal[j];
        a[i][un] = rows[i]->rhs;
    }
    for (std::size_t col = 0; col < un; ++col) {
        std::size_t pivot = un;
        for (std::size_t row = col; row < un; ++row) {
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot == un) return std::nullopt;
        std::swap(a[col], a[pivot]);
        for (std::size_t row = 0; row < un; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j <= un; ++j) a[row][j] -= factor * a[col][j];
        }
    }
    std::vector<Rational> x(un);
    for (std::size_t i = 0; i < un; ++i) x[i] = a[i][un] / a[i][i];
    return x;
}

// All n-subsets of {0..m-1}, flattened n per entry, in lexicographic order.
std::vector<int> all_subsets(int m, int n) {
    std::vector<int> flat;
    if (n == 0 || m < n) return flat;
    std::vector<int> comb(static_cast<std::size_t>(n));
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        flat.insert(flat.end(), comb.begin(), comb.end());
        int i = n - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - n + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return flat;
}

std::optional<std::vector<Rational>> vertex_of_subset(const InequalitySystem& sys,
                                                      const int* subset, int n) {
    std::vector<const AffineInequality*> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rows.push_back(&sys.ineqs[static_cast<std::size_t>(subset[i])]);
    auto x = solve_square(rows, n);
    if (!x || !contains(sys, *x)) return std::nullopt;
    return x;
}

void sort_unique(std::vector<std::vector<Rational>>& points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

}  // namespace

InequalitySystem build_system(const CoeffOrder& order, const NumericCoeffs& coeffs,
                              Variant variant) {
    if (order.n() != coeffs.n())
        throw std::invalid_argument("order and coefficients disagree on n");
    if (!compatible(order, coeffs))
        throw std::invalid_argument("coefficients are not compatible with the order");
    const int n = order.n();
    InequalitySystem sys{order, coeffs, variant, {}};

    std::map<std::string, std::size_t> seen;
    auto add = [&](std::vector<Rational> normal, Rational rhs, std::string tag) {
        canonicalize(normal, rhs);
        std::string key = half_space_key(normal, rhs);
        if (auto it = seen.find(key); it != seen.end()) {
            sys.ineqs[it->second].provenance.push_back(std::move(tag));
            return;
        }
        seen.emplace(std::move(key), sys.ineqs.size());
        sys.ineqs.push_back({std::move(normal), std::move(rhs), {std::move(tag)}});
    };
    // Normal of x_plus - x_minus (either side may be absent when 0).
    auto unit = [&](int plus, int minus) {
        std::vector<Rational> normal(static_cast<std::size_t>(n), Rational(0));
        if (plus > 0) normal[static_cast<std::size_t>(plus - 1)] += 1;
        if (minus > 0) normal[static_cast<std::size_t>(minus - 1)] -= 1;
        return normal;
    };
    // rhs of x_hi - x_lo >= min{0, c_hi - c_lo}.
    auto pair_rhs = [&](int lo, int hi) {
        Rational diff = coeffs.at(hi) - coeffs.at(lo);
        return diff < 0 ? diff : Rational(0);
    };

    for (int k = 1; k <= n; ++k) {
        add(unit(k, 0), Rational(0), "box-lower " + std::to_string(k));
        add(unit(0, k), -coeffs.at(k), "box-upper " + std::to_string(k));
    }

    switch (variant) {
        case Variant::chain:
            for (int k = 1; k <= n; ++k) {
                auto chain = sorted_chain(order, k);
                for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                    int t = chain[i];
                    int tn = chain[i + 1];
                    add(unit(tn, t), pair_rhs(t, tn),
                        "chain k=" + std::to_string(k) + " (" + std::to_string(t) + "," +
                            std::to_string(tn) + ")");
                }
            }
            break;
        case Variant::pivot:
            for (int k = 1; k <= n; ++k) {
                auto chain = sorted_chain(order, k);
                int s = order.seq()[static_cast<std::size_t>(k - 1)];
                auto pos = std::find(chain.begin(), chain.end(), s) - chain.begin();
                int j = static_cast<int>(pos) + 1;  // 1-based position of s in the chain
                if (j < k) {
                    int above = chain[static_cast<std::size_t>(j)];
                    add(unit(above, s), coeffs.at(above) - coeffs.at(s),
                        "pivot-up k=" + std::to_string(k));
                }
                if (j > 1) {
                    int below = chain[static_cast<std::size_t>(j - 2)];
                    add(unit(s, below), Rational(0), "pivot-down k=" + std::to_string(k));
                }
            }
            break;
        case Variant::allPairs:
            for (int s = 1; s <= n; ++s) {
                for (int r = s + 1; r <= n; ++r) {
                    add(unit(r, s), pair_rhs(s, r),
                        "pair (" + std::to_string(r) + "," + std::to_string(s) + ")");
                }
            }
            break;
    }
    return sys;
}

bool contains(const InequalitySystem& sys, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != sys.n())
        throw std::invalid_argument("point dimension does not match the system");
    for (const auto& iq : sys.ineqs) {
        Rational lhs(0);
        for (std::size_t j = 0; j < x.size(); ++j) lhs += iq.normal[j] * x[j];
        if (lhs < iq.rhs) return false;
    }
    return true;
}

std::vector<std::vector<Rational>> enumerate_vertices_serial(const InequalitySystem& sys) {
    const int n = sys.n();
    if (n == 0) return {{}};
    const int m = static_cast<int>(sys.ineqs.size());
    std::vector<std::vector<Rational>> found;
    if (m < n) return found;
    std::vector<int> comb(static_cast<std::size_t>(n));
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        if (auto x = vertex_of_subset(sys, comb.data(), n)) found.push_back(std::move(*x));
        int i = n - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - n + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    sort_unique(found);
    return found;
}

std::vector<std::vector<Rational>> enumerate_vertices(const InequalitySystem& sys) {
    const int n = sys.n();
    if (n == 0) return {{}};
    const int m = static_cast<int>(sys.ineqs.size());
    std::vector<std::vector<Rational>> found;
    if (m < n) return found;
    const std::vector<int> flat = all_subsets(m, n);
    const auto total = static_cast<long long>(flat.size() / static_cast<std::size_t>(n));
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::vector<Rational>> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long t = 0; t < total; ++t) {
            auto offset = static_cast<std::size_t>(t) * static_cast<std::size_t>(n);
            if (auto x = vertex_of_subset(sys, flat.data() + offset, n))
                local.push_back(std::move(*x));
        }
#pragma omp critical
        found.insert(found.end(), std::make_move_iterator(local.begin()),
                     std::make_move_iterator(local.end()));
    }
#else
    for (long long t = 0; t < total; ++t) {
        auto offset = static_cast<std::size_t>(t) * static_cast<std::size_t>(n);
        if (auto x = vertex_of_subset(sys, flat.data() + offset, n)) found.push_back(std::move(*x));
    }
#endif
    sort_unique(found);
    return found;
}

bool is_extreme_point(const std::vector<std::vector<Rational>>& points, std::size_t idx) {
    if (idx >= points.size()) throw std::out_of_range("point index out of range");
    const auto& p = points[idx];
    const std::size_t dim = p.size();
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (i != idx) others.push_back(i);
    if (others.empty()) return true;
    // Feasibility of: sum_j lambda_j * other_j = p, sum_j lambda_j = 1, lambda >= 0.
    std::vector<std::vector<Rational>> A(dim + 1, std::vector<Rational>(others.size()));
    std::vector<Rational> b(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < others.size(); ++j) A[i][j] = points[others[j]][i];
        b[i] = p[i];
    }
    for (std::size_t j = 0; j < others.size(); ++j) A[dim][j] = 1;
    b[dim] = 1;
    return !simplex_feasible(std::move(A), std::move(b)).has_value();
}

const char* relation_name(SystemRelation r) {
    switch (r) {
        case SystemRelation::equal: return "equal";
        case SystemRelation::aStrictlyInsideB: return "aStrictlyInsideB";
        case SystemRelation::bStrictlyInsideA: return "bStrictlyInsideA";
        case SystemRelation::incomparable: return "incomparable";
    }
    throw std::logic_error("unknown relation");
}

SystemRelation compare_systems(const InequalitySystem& a, const InequalitySystem& b) {
    auto va = enumerate_vertices(a);
    auto vb = enumerate_vertices(b);
    bool aInB = std::all_of(va.begin(), va.end(),
                            [&](const std::vector<Rational>& v) { return contains(b, v); });
    bool bInA = std::all_of(vb.begin(), vb.end(),
                            [&](const std::vector<Rational>& v) { return contains(a, v); });
    if (aInB && bInA) return SystemRelation::equal;
    if (aInB) return SystemRelation::aStrictlyInsideB;
    if (bInA) return SystemRelation::bStrictlyInsideA;
    return SystemRelation::incomparable;
}

TheoremReport verify_theorem(const CoeffOrder& order, const NumericCoeffs& coeffs) {
    auto sys = build_system(order, coeffs, Variant::chain);
    auto vertices = enumerate_vertices(sys);
    auto g = build_sgraph(order);
    std::vector<std::vector<Rational>> zvals;
    for (const auto& fn : zset(g)) zvals.push_back(fn.values(coeffs.c));
    sort_unique(zvals);

    TheoremReport rep;
    rep.vertexCount = vertices.size();
    rep.functionCount = zvals.size();
    rep.ok = (vertices == zvals);
    if (!rep.ok) {
        std::set_difference(vertices.begin(), vertices.end(), zvals.begin(), zvals.end(),
                            std::back_inserter(rep.onlyVertices));
        std::set_difference(zvals.begin(), zvals.end(), vertices.begin(), vertices.end(),
                            std::back_inserter(rep.onlyFunctions));
    }
    return rep;
}

std::string system_to_json(const InequalitySystem& sys,
                           const std::vector<std::vector<Rational>>* vertices) {
    nlohmann::json j;
    j["n"] = sys.n();
    j["variant"] = variant_token(sys.variant);
    j["order"] = sys.order.seq();
    j["coeffs"] = rationals_to_json(sys.coeffs.c);
    auto arr = nlohmann::json::array();
    for (const auto& iq : sys.ineqs) {
        nlohmann::json e;
        e["normal"] = rationals_to_json(iq.normal);
        e["rhs"] = rational_to_json(iq.rhs);
        e["provenance"] = iq.provenance;
        arr.push_back(std::move(e));
    }
    j["inequalities"] = std::move(arr);
    if (vertices != nullptr) {
        auto va = nlohmann::json::array();
        for (const auto& v : *vertices) va.push_back(rationals_to_json(v));
        j["vertices"] = std::move(va);
    }
    return j.dump(2) + "\n";
}

std::string vertices_to_csv(int n, const std::vector<std::vector<Rational>>& vertices) {
    std::ostringstream out;
    for (int k = 1; k <= n; ++k) out << (k > 1 ? "," : "") << "x" << k;
    out << "\n";
    for (const auto& v : vertices) {
        for (std::size_t j = 0; j < v.size(); ++j) out << (j > 0 ? "," : "") << rational_to_string(v[j]);
        out << "\n";
    }
    return out.str();
}

}  // namespace sgx
