#include "sgx/harness.hpp"

#include "sgx/json_io.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sgx {

const std::vector<std::string> kAllChecks = {"theorem",        "fusion", "sproperty", "lemma15",
                                             "reconstruction", "counts", "remarks"};

bool is_known_check(const std::string& token) {
    return std::find(kAllChecks.begin(), kAllChecks.end(), token) != kAllChecks.end();
}

long long count_functions(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("counting is limited to n <= 6");
    std::set<FunctionVector> all;
    for (const auto& order : all_orders(n))
        for (const auto& fn : zset(build_sgraph(order))) all.insert(fn);
    return static_cast<long long>(all.size());
}

long long count_graphs(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("counting is limited to n <= 6");
    std::set<std::vector<FunctionVector>> sets;
    for (const auto& order : all_orders(n)) sets.insert(zset(build_sgraph(order)));
    return static_cast<long long>(sets.size());
}

const std::vector<std::vector<Rational>>& VertexCache::get(const CoeffOrder& order,
                                                           const NumericCoeffs& coeffs,
                                                           Variant variant) {
    std::string key = variant_token(variant);
    key += '|';
    for (int s : order.seq()) {
        key += std::to_string(s);
        key += ',';
    }
    key += '|';
    for (const auto& q : coeffs.c) {
        key += rational_to_string(q);
        key += ',';
    }
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto verts = enumerate_vertices(build_system(order, coeffs, variant));
    return cache_.emplace(std::move(key), std::move(verts)).first->second;
}

namespace {

constexpr std::size_t kMaxCounterexamples = 100;
constexpr long long kCatalan[] = {1, 1, 2, 5, 14, 42, 132};

void add_cx(CheckOutcome& oc, nlohmann::json cx) {
    ++oc.failures;
    if (oc.counterexamples.size() < kMaxCounterexamples)
        oc.counterexamples.push_back(std::move(cx));
}

nlohmann::json unit_json(const CoeffOrder& order, const NumericCoeffs& coeffs,
                         const std::string& profileLabel, int trial, std::uint64_t unitSeed) {
    nlohmann::json j;
    j["n"] = order.n();
    j["order"] = order.seq();
    j["coeffs"] = rationals_to_json(coeffs.c);
    j["profile"] = profileLabel;
    j["trial"] = trial;
    j["unitSeed"] = unitSeed;
    return j;
}

nlohmann::json points_json(const std::vector<std::vector<Rational>>& pts, std::size_t cap = 16) {
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < pts.size() && i < cap; ++i) arr.push_back(rationals_to_json(pts[i]));
    return arr;
}

std::vector<CoeffOrder> orders_for(const SweepConfig& cfg, int n) {
    if (cfg.fixedOrder) {
        CoeffOrder o(*cfg.fixedOrder);
        if (o.n() != n) return {};
        return {o};
    }
    return all_orders(n);
}

// Calls fn(coeffs, profileLabel, trial, unitSeed) for every sample of one
// order, in deterministic sequence.
template <typename F>
void for_each_sample(const SweepConfig& cfg, const CoeffOrder& order, bool genericOnly, F&& fn) {
    if (cfg.fixedCoeffs) {
        NumericCoeffs coeffs{*cfg.fixedCoeffs};
        fn(coeffs, std::string("fixed"), 0, cfg.seed);
        return;
    }
    for (Profile p : cfg.profiles) {
        if (genericOnly && p != Profile::generic) continue;
        for (int trial = 0; trial < cfg.trialsPerOrder; ++trial) {
            const std::uint64_t unitSeed = cfg.seed + static_cast<std::uint64_t>(trial);
            fn(sample_coeffs(order, unitSeed, p), std::string(profile_name(p)), trial, unitSeed);
        }
    }
}

std::vector<std::vector<Rational>> evaluated_zset(const std::vector<FunctionVector>& zs,
                                                  const NumericCoeffs& coeffs) {
    std::vector<std::vector<Rational>> vals;
    vals.reserve(zs.size());
    for (const auto& fn : zs) vals.push_back(fn.values(coeffs.c));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.nValues.empty()) throw std::invalid_argument("sweep needs at least one n");
    for (int n : cfg.nValues)
        if (n < 1 || n > 6) throw std::invalid_argument("sweep n must be in [1,6]");
    if (cfg.trialsPerOrder < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.profiles.empty()) throw std::invalid_argument("at least one sampling profile required");
    for (const auto& c : cfg.checks)
        if (!is_known_check(c)) throw std::invalid_argument("unknown check: " + c);
    if (cfg.fixedCoeffs && !cfg.fixedOrder)
        throw std::invalid_argument("fixed coefficients require a fixed order");
    if (cfg.fixedOrder) {
        CoeffOrder order(*cfg.fixedOrder);  // validates the permutation
        if (std::find(cfg.nValues.begin(), cfg.nValues.end(), order.n()) == cfg.nValues.end())
            throw std::invalid_argument("fixed order size missing from the n values");
        if (cfg.fixedCoeffs) {
            NumericCoeffs coeffs{*cfg.fixedCoeffs};
            if (coeffs.n() != order.n())
                throw std::invalid_argument("fixed coefficients do not match the fixed order");
            if (!compatible(order, coeffs))
                throw std::invalid_argument("fixed coefficients incompatible with the fixed order");
        }
    }
}

nlohmann::json config_to_json(const SweepConfig& cfg) {
    nlohmann::json j;
    j["nValues"] = cfg.nValues;
    j["trialsPerOrder"] = cfg.trialsPerOrder;
    j["seed"] = cfg.seed;
    auto profiles = nlohmann::json::array();
    for (Profile p : cfg.profiles) profiles.push_back(profile_name(p));
    j["profiles"] = profiles;
    j["checks"] = cfg.checks;
    j["maxSteps"] = cfg.maxSteps;
    if (cfg.fixedOrder) j["fixedOrder"] = *cfg.fixedOrder;
    if (cfg.fixedCoeffs) j["fixedCoeffs"] = rationals_to_json(*cfg.fixedCoeffs);
    return j;
}

void run_theorem(const SweepConfig& cfg, VertexCache& cache, CheckOutcome& oc) {
    for (int n : cfg.nValues) {
        for (const auto& order : orders_for(cfg, n)) {
            auto zs = zset(build_sgraph(order));
            for_each_sample(cfg, order, false,
                            [&](const NumericCoeffs& coeffs, const std::string& label, int trial,
                                std::uint64_t unitSeed) {
                                ++oc.unitsRun;
                                auto zvals = evaluated_zset(zs, coeffs);
                                const auto& verts = cache.get(order, coeffs, Variant::chain);
                                if (verts == zvals) return;
                                auto cx = unit_json(order, coeffs, label, trial, unitSeed);
                                std::vector<std::vector<Rational>> onlyV;
                                std::vector<std::vector<Rational>> onlyZ;
                                std::set_difference(verts.begin(), verts.end(), zvals.begin(),
                                                    zvals.end(), std::back_inserter(onlyV));
                                std::set_difference(zvals.begin(), zvals.end(), verts.begin(),
                                                    verts.end(), std::back_inserter(onlyZ));
                                cx["onlyVertices"] = points_json(onlyV);
                                cx["onlyFunctions"] = points_json(onlyZ);
                                add_cx(oc, std::move(cx));
                            });
        }
    }
}

void run_fusion(const SweepConfig& cfg, CheckOutcome& oc) {
    long long witnesses = 0;
    nlohmann::json witnessExample;
    for (int n : cfg.nValues) {
        for (const auto& order : orders_for(cfg, n)) {
            auto g = build_sgraph(order);
            ++oc.unitsRun;

            auto edgeViolations = check_edge_relation(g);
            if (!edgeViolations.empty()) {
                nlohmann::json cx;
                cx["order"] = order.seq();
                cx["kind"] = "edge-relation";
                cx["count"] = edgeViolations.size();
                auto detail = nlohmann::json::array();
                for (std::size_t i = 0; i < edgeViolations.size() && i < 8; ++i) {
                    const auto& v = edgeViolations[i];
                    detail.push_back({{"u", v.u}, {"v", v.v}, {"r", v.coeffIndex}, {"what", v.what}});
                }
                cx["violations"] = detail;
                add_cx(oc, std::move(cx));
            }

            auto certViolations = check_fusion_certificates(g);
            if (!certViolations.empty()) {
                nlohmann::json cx;
                cx["order"] = order.seq();
                cx["kind"] = "certificate";
                cx["count"] = certViolations.size();
                auto detail = nlohmann::json::array();
                for (std::size_t i = 0; i < certViolations.size() && i < 8; ++i) {
                    const auto& v = certViolations[i];
                    detail.push_back({{"level", v.level}, {"vertex", v.v}, {"what", v.what}});
                }
                cx["violations"] = detail;
                add_cx(oc, std::move(cx));
            }

            auto propagated = propagate_functions(g);
            for (const auto& vx : g.vertices) {
                if (propagated[static_cast<std::size_t>(vx.id)] == vx.fn) continue;
                nlohmann::json cx;
                cx["order"] = order.seq();
                cx["kind"] = "propagation-mismatch";
                cx["vertex"] = vx.id;
                cx["stored"] = vx.fn.to_text();
                cx["propagated"] = propagated[static_cast<std::size_t>(vx.id)].to_text();
                add_cx(oc, std::move(cx));
            }

            if (auto w = naive_shift_witness(g)) {
                ++witnesses;
                if (witnessExample.is_null())
                    witnessExample = {{"order", order.seq()}, {"vertex", *w}};
            }

            for_each_sample(cfg, order, false,
                            [&](const NumericCoeffs& coeffs, const std::string& label, int trial,
                                std::uint64_t unitSeed) {
                                ++oc.unitsRun;
                                auto signs = check_certificate_signs(g, coeffs);
                                if (signs.empty()) return;
                                auto cx = unit_json(order, coeffs, label, trial, unitSeed);
                                cx["kind"] = "certificate-signs";
                                auto detail = nlohmann::json::array();
                                for (std::size_t i = 0; i < signs.size() && i < 8; ++i)
                                    detail.push_back({{"level", signs[i].level},
                                                      {"vertex", signs[i].v},
                                                      {"what", signs[i].what}});
                                cx["violations"] = detail;
                                add_cx(oc, std::move(cx));
                            });
        }
    }
    oc.notes["naiveShiftWitnesses"] = witnesses;
    if (!witnessExample.is_null()) oc.notes["naiveShiftExample"] = witnessExample;
}

void run_sproperty(const SweepConfig& cfg, CheckOutcome& oc) {
    for (int n : cfg.nValues) {
        for (const auto& order : orders_for(cfg, n)) {
            auto g = build_sgraph(order);
            for_each_sample(cfg, order, true,
                            [&](const NumericCoeffs& coeffs, const std::string& label, int trial,
                                std::uint64_t unitSeed) {
                                ++oc.unitsRun;
                                auto fails = s_property(g, coeffs);
                                if (fails.empty()) return;
                                auto cx = unit_json(order, coeffs, label, trial, unitSeed);
                                auto detail = nlohmann::json::array();
                                for (std::size_t i = 0; i < fails.size() && i < 8; ++i)
                                    detail.push_back({{"vertex", fails[i].v}, {"label", fails[i].k}});
                                cx["unreachable"] = detail;
                                add_cx(oc, std::move(cx));
                            });
        }
    }
}

void run_lemma15(const SweepConfig& cfg, VertexCache& cache, CheckOutcome& oc) {
    for (int n : cfg.nValues) {
        for (const auto& order : orders_for(cfg, n)) {
            for_each_sample(
                cfg, order, false,
                [&](const NumericCoeffs& coeffs, const std::string& label, int trial,
                    std::uint64_t unitSeed) {
                    ++oc.unitsRun;
                    auto sysChain = build_system(order, coeffs, Variant::chain);
                    auto sysPivot = build_system(order, coeffs, Variant::pivot);
                    const auto& va = cache.get(order, coeffs, Variant::chain);
                    const auto& vb = cache.get(order, coeffs, Variant::pivot);
                    const std::vector<Rational>* offender = nullptr;
                    for (const auto& v : va)
                        if (!contains(sysPivot, v)) {
                            offender = &v;
                            break;
                        }
                    if (offender == nullptr) {
                        for (const auto& v : vb)
                            if (!contains(sysChain, v)) {
                                offender = &v;
                                break;
                            }
                    }
                    if (offender == nullptr && va == vb) return;
                    auto cx = unit_json(order, coeffs, label, trial, unitSeed);
                    cx["chainVertices"] = va.size();
                    cx["pivotVertices"] = vb.size();
                    if (offender != nullptr) cx["offendingVertex"] = rationals_to_json(*offender);
                    add_cx(oc, std::move(cx));
                });
        }
    }
}

void run_reconstruction(const SweepConfig& cfg, CheckOutcome& oc) {
    nlohmann::json rebuildStats = nlohmann::json::object();
    long long embedFailures = 0;
    for (int n : cfg.nValues) {
        long long attempts = 0;
        long long successes = 0;
        for (const auto& order : orders_for(cfg, n)) {
            auto g = build_sgraph(order);
            auto zs = zset(g);
            std::vector<std::vector<FunctionVector>> intermediatesPerZ;

            for (const auto& z : zs) {
                ++oc.unitsRun;
                auto d = deconstruct(z, cfg.maxSteps);
                if (!d.ok) {
                    nlohmann::json cx;
                    cx["order"] = order.seq();
                    cx["fn"] = z.to_text();
                    cx["kind"] = "deconstruct-failed";
                    cx["reason"] = d.reason;
                    add_cx(oc, std::move(cx));
                    continue;
                }
                if (!(replay(n, d.log) == z)) {
                    nlohmann::json cx;
                    cx["order"] = order.seq();
                    cx["fn"] = z.to_text();
                    cx["kind"] = "replay-mismatch";
                    cx["log"] = nlohmann::json::parse(movelog_to_json(d.log));
                    add_cx(oc, std::move(cx));
                    continue;
                }
                std::vector<FunctionVector> inter;
                FunctionVector f = z;
                bool bad = false;
                for (const auto& mv : d.log) {
                    inter.push_back(f);
                    auto ext = strongly_extremal_column(f);
                    if (ext.kind != ExtremalColumn::Kind::column || ext.k != mv.k) {
                        nlohmann::json cx;
                        cx["order"] = order.seq();
                        cx["fn"] = f.to_text();
                        cx["kind"] = "extremal-mismatch";
                        add_cx(oc, std::move(cx));
                        bad = true;
                        break;
                    }
                    if (!extremal_slot_vanishes(f, ext.k)) {
                        nlohmann::json cx;
                        cx["order"] = order.seq();
                        cx["fn"] = f.to_text();
                        cx["kind"] = "extremal-slot-nonzero";
                        cx["k"] = ext.k;
                        add_cx(oc, std::move(cx));
                        bad = true;
                        break;
                    }
                    f = f - move_term(n, mv);
                }
                if (bad) continue;
                intermediatesPerZ.push_back(std::move(inter));

                ++attempts;
                auto rb = rebuild_heights(d.log, z, cfg.maxSteps);
                if (rb.ok) {
                    ++successes;
                    auto ev = evaluate_rows(rb.profile);
                    if (!(ev.ok() && ev.total == z)) {
                        nlohmann::json cx;
                        cx["order"] = order.seq();
                        cx["fn"] = z.to_text();
                        cx["kind"] = "rebuild-certificate";
                        cx["profile"] = heights_to_text(rb.profile);
                        add_cx(oc, std::move(cx));
                    }
                    if (!embeds_in(order_relations(rb.profile), order)) ++embedFailures;
                } else if (n <= 2) {
                    nlohmann::json cx;
                    cx["order"] = order.seq();
                    cx["fn"] = z.to_text();
                    cx["kind"] = "rebuild-failed";
                    add_cx(oc, std::move(cx));
                }
            }

            for_each_sample(cfg, order, false,
                            [&](const NumericCoeffs& coeffs, const std::string& label, int trial,
                                std::uint64_t unitSeed) {
                                ++oc.unitsRun;
                                auto sys = build_system(order, coeffs, Variant::chain);
                                for (const auto& inter : intermediatesPerZ) {
                                    for (const auto& f : inter) {
                                        if (contains(sys, f.values(coeffs.c))) continue;
                                        auto cx = unit_json(order, coeffs, label, trial, unitSeed);
                                        cx["kind"] = "intermediate-outside";
                                        cx["fn"] = f.to_text();
                                        add_cx(oc, std::move(cx));
                                    }
                                }
                            });
        }
        rebuildStats[std::to_string(n)] = {{"attempts", attempts}, {"successes", successes}};
    }
    oc.notes["rebuild"] = rebuildStats;
    oc.notes["orderEmbeddingFailures"] = embedFailures;
}

void run_counts(const SweepConfig& cfg, CheckOutcome& oc) {
    static const std::map<int, long long> knownFunctionCounts{{1, 2}, {2, 5}, {4, 42}};
    nlohmann::json functionCounts = nlohmann::json::object();
    nlohmann::json graphCounts = nlohmann::json::object();
    for (int n : cfg.nValues) {
        ++oc.unitsRun;
        for (const auto& order : all_orders(n)) {
            auto zs = zset(build_sgraph(order));
            if (static_cast<long long>(zs.size()) == (1LL << n)) continue;
            nlohmann::json cx;
            cx["order"] = order.seq();
            cx["kind"] = "per-order-count";
            cx["expected"] = (1LL << n);
            cx["actual"] = zs.size();
            add_cx(oc, std::move(cx));
        }
        const long long graphs = count_graphs(n);
        if (graphs != kCatalan[n]) {
            nlohmann::json cx;
            cx["n"] = n;
            cx["kind"] = "graph-count";
            cx["expected"] = kCatalan[n];
            cx["actual"] = graphs;
            add_cx(oc, std::move(cx));
        }
        const long long functions = count_functions(n);
        if (auto it = knownFunctionCounts.find(n);
            it != knownFunctionCounts.end() && functions != it->second) {
            nlohmann::json cx;
            cx["n"] = n;
            cx["kind"] = "function-count";
            cx["expected"] = it->second;
            cx["actual"] = functions;
            add_cx(oc, std::move(cx));
        }
        functionCounts[std::to_string(n)] = functions;
        graphCounts[std::to_string(n)] = graphs;
    }
    oc.notes["functions"] = functionCounts;
    oc.notes["graphs"] = graphCounts;
}

// Fixed desk-scale scenarios for the two containment remarks; independent of
// the configured n values.
void run_remarks(CheckOutcome& oc) {
    {
        ++oc.unitsRun;
        CoeffOrder order({1, 3, 2});
        NumericCoeffs coeffs{{Rational(1), Rational(3), Rational(2)}};
        auto full = build_system(order, coeffs, Variant::chain);
        InequalitySystem reduced = full;
        reduced.ineqs.erase(
            std::remove_if(reduced.ineqs.begin(), reduced.ineqs.end(),
                           [](const AffineInequality& iq) {
                               return std::all_of(iq.provenance.begin(), iq.provenance.end(),
                                                  [](const std::string& tag) {
                                                      return tag.rfind("chain k=2", 0) == 0;
                                                  });
                           }),
            reduced.ineqs.end());
        auto vFull = enumerate_vertices(full);
        auto vReduced = enumerate_vertices(reduced);
        bool allInside = true;
        for (const auto& v : vFull)
            if (!contains(reduced, v)) allInside = false;
        nlohmann::json witness;
        for (const auto& v : vReduced) {
            if (!contains(full, v)) {
                witness = rationals_to_json(v);
                break;
            }
        }
        if (!allInside || witness.is_null()) {
            nlohmann::json cx;
            cx["remark"] = "dropping-a-chain-inequality-must-enlarge";
            cx["order"] = order.seq();
            cx["coeffs"] = rationals_to_json(coeffs.c);
            cx["fullVertices"] = vFull.size();
            cx["reducedVertices"] = vReduced.size();
            add_cx(oc, std::move(cx));
        } else {
            oc.notes["enlargementWitness"] = witness;
            oc.notes["enlargementVertexCounts"] = {{"full", vFull.size()},
                                                   {"reduced", vReduced.size()}};
        }
    }
    {
        ++oc.unitsRun;
        CoeffOrder order({2, 1, 3});
        NumericCoeffs coeffs{{Rational(2), Rational(1), Rational(3)}};
        auto allPairsSys = build_system(order, coeffs, Variant::allPairs);
        auto chainSys = build_system(order, coeffs, Variant::chain);
        auto rel = compare_systems(allPairsSys, chainSys);
        if (rel != SystemRelation::aStrictlyInsideB) {
            nlohmann::json cx;
            cx["remark"] = "all-pairs-strictly-inside-chain";
            cx["order"] = order.seq();
            cx["coeffs"] = rationals_to_json(coeffs.c);
            cx["relation"] = relation_name(rel);
            add_cx(oc, std::move(cx));
        }
        nlohmann::json witness;
        for (const auto& v : enumerate_vertices(chainSys)) {
            if (v[2] < v[0]) {
                witness = rationals_to_json(v);
                break;
            }
        }
        if (witness.is_null()) {
            nlohmann::json cx;
            cx["remark"] = "chain-vertex-with-reversed-pair";
            cx["order"] = order.seq();
            cx["coeffs"] = rationals_to_json(coeffs.c);
            add_cx(oc, std::move(cx));
        } else {
            oc.notes["reversedPairWitness"] = witness;
        }
    }
}

}  // namespace

VerificationReport run_sweep(const SweepConfig& cfg, VertexCache* cache) {
    validate_config(cfg);
    VertexCache local;
    if (cache == nullptr) cache = &local;

    VerificationReport rep;
    rep.configEcho = config_to_json(cfg);
    auto requested = [&](const std::string& token) {
        return std::find(cfg.checks.begin(), cfg.checks.end(), token) != cfg.checks.end();
    };
    for (const auto& token : kAllChecks) {
        CheckOutcome oc;
        oc.check = token;
        if (requested(token)) {
            if (token == "theorem") run_theorem(cfg, *cache, oc);
            else if (token == "fusion") run_fusion(cfg, oc);
            else if (token == "sproperty") run_sproperty(cfg, oc);
            else if (token == "lemma15") run_lemma15(cfg, *cache, oc);
            else if (token == "reconstruction") run_reconstruction(cfg, oc);
            else if (token == "counts") run_counts(cfg, oc);
            else run_remarks(oc);
            oc.status = (oc.failures == 0) ? "pass" : "fail";
            if (oc.failures != 0) rep.allPassed = false;
        }
        rep.outcomes.push_back(std::move(oc));
    }
    return rep;
}

std::string report_to_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["version"] = kToolVersion;
    j["config"] = rep.configEcho;
    auto checks = nlohmann::json::array();
    long long totalUnits = 0;
    for (const auto& oc : rep.outcomes) {
        nlohmann::json e;
        e["check"] = oc.check;
        e["status"] = oc.status;
        e["unitsRun"] = oc.unitsRun;
        e["failures"] = oc.failures;
        if (!oc.notes.empty()) e["notes"] = oc.notes;
        e["counterexamples"] = oc.counterexamples;
        checks.push_back(std::move(e));
        totalUnits += oc.unitsRun;
    }
    j["checks"] = std::move(checks);
    j["allPassed"] = rep.allPassed;
    j["workUnits"] = totalUnits;
    return j.dump(2) + "\n";
}

}  // namespace sgx
