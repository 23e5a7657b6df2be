// Command-line front end: graph/zset/polytope construction, tableau
// evaluation and reconstruction, counting, and the verification sweeps.
//
// Exit codes: 0 = success / all checks passed, 1 = a check failed (or a
// reconstruction came back not-representable), 2 = invalid input.

#include "sgx/fusion.hpp"
#include "sgx/harness.hpp"
#include "sgx/json_io.hpp"
#include "sgx/orders.hpp"
#include "sgx/polytope.hpp"
#include "sgx/tableau.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(trimmed(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& item : split_list(text)) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer entry: " + item);
        }
        if (used != item.size()) throw std::invalid_argument("bad integer entry: " + item);
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::vector<sgx::Rational> parse_rational_list(const std::string& text) {
    std::vector<sgx::Rational> out;
    for (const auto& item : split_list(text)) out.push_back(sgx::rational_from_string(item));
    if (out.empty()) throw std::invalid_argument("empty coefficient list");
    return out;
}

void write_output(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + outPath);
    out << text;
}

sgx::CoeffOrder order_from_flags(const std::string& orderText, int n) {
    if (!orderText.empty()) return sgx::CoeffOrder(parse_int_list(orderText));
    if (n >= 0) {
        std::vector<int> seq(static_cast<std::size_t>(n));
        std::iota(seq.begin(), seq.end(), 1);
        return sgx::CoeffOrder(seq);
    }
    throw std::invalid_argument("need --order (or --n for the natural order)");
}

nlohmann::json move_json(const sgx::Move& m) {
    return {{"k", m.k}, {"j", m.j}, {"parity", sgx::parity_name(m.parity)}};
}

int run_report(const sgx::SweepConfig& cfg, const std::string& reportPath,
               const std::string& outPath) {
    const auto t0 = std::chrono::steady_clock::now();
    auto rep = sgx::run_sweep(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "elapsed " << secs << "s\n";

    const std::string text = sgx::report_to_json(rep);
    std::string path = !reportPath.empty() ? reportPath : outPath;
    if (!path.empty()) {
        write_output(text, path);
        for (const auto& oc : rep.outcomes) {
            std::cout << oc.check << ": " << oc.status << " (units " << oc.unitsRun
                      << ", failures " << oc.failures << ")\n";
        }
    } else {
        std::cout << text;
    }
    return rep.allPassed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for fused vertex-function graphs and their convex hulls"};
    app.require_subcommand(1);

    // Shared flag storage; each subcommand binds the subset it understands.
    std::string orderText;
    std::string coeffText;
    std::string variantText = "3";
    std::string formatText = "json";
    std::string outPath;
    std::string reportPath;
    std::string nListText = "1,2,3";
    std::string profileNames = "generic";
    std::string heightsText;
    std::string fnText;
    std::string checkToken;
    int nSingle = -1;
    int trials = 1;
    std::uint64_t seed = 0;
    long long maxSteps = -1;

    auto addOrderFlags = [&](CLI::App* cmd) {
        cmd->add_option("--n", nSingle, "size; implies the natural order 1..n");
        cmd->add_option("--order", orderText, "comma-separated permutation, e.g. 1,3,2");
    };

    auto* graphCmd = app.add_subcommand("graph", "construct the graph for one order");
    addOrderFlags(graphCmd);
    graphCmd->add_option("--format", formatText, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    graphCmd->add_option("--out", outPath, "output file (stdout when omitted)");

    auto* zsetCmd = app.add_subcommand("zset", "list the symbolic vertex functions for one order");
    addOrderFlags(zsetCmd);
    zsetCmd->add_option("--out", outPath, "output file (stdout when omitted)");

    auto* polyCmd = app.add_subcommand("polytope", "build an inequality system and its vertices");
    addOrderFlags(polyCmd);
    polyCmd->add_option("--coeffs", coeffText, "comma-separated rationals, e.g. 1,4,2")
        ->required();
    polyCmd->add_option("--variant", variantText, "inequality family: 3|3p|3pp")
        ->check(CLI::IsMember({"3", "3p", "3pp"}));
    polyCmd->add_option("--format", formatText, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    polyCmd->add_option("--out", outPath, "output file (stdout when omitted)");

    auto* tabCmd = app.add_subcommand("tableau", "height-profile evaluation and reconstruction");
    tabCmd->require_subcommand(1);
    auto* evalCmd = tabCmd->add_subcommand("eval", "evaluate one height profile");
    evalCmd->add_option("--profile", heightsText, "comma-separated heights, e.g. 3,2,1,3")
        ->required();
    evalCmd->add_option("--out", outPath, "output file (stdout when omitted)");
    auto* reconCmd = tabCmd->add_subcommand("reconstruct", "deconstruct a function and rebuild heights");
    reconCmd->add_option("fn", fnText, "function text, e.g. 'c1; c1+c2-c3; c1'")->required();
    reconCmd->add_option("--n", nSingle, "expected slot count (inferred when omitted)");
    reconCmd->add_option("--max-steps", maxSteps, "search step bound (default scales with n)");
    reconCmd->add_option("--out", outPath, "output file (stdout when omitted)");

    auto* countCmd = app.add_subcommand("count", "distinct functions and graphs for one size");
    countCmd->add_option("--n", nSingle, "size, 1..6")->required();
    countCmd->add_option("--out", outPath, "output file (stdout when omitted)");

    auto addSweepFlags = [&](CLI::App* cmd) {
        cmd->add_option("--n", nListText, "comma-separated sizes, e.g. 1,2,3");
        cmd->add_option("--order", orderText, "restrict to one order (comma-separated)");
        cmd->add_option("--coeffs", coeffText, "pin coefficients (requires --order)");
        cmd->add_option("--seed", seed, "base seed for coefficient sampling");
        cmd->add_option("--profile", profileNames, "sampling profiles: generic|ties|zeros, comma-separated");
        cmd->add_option("--trials", trials, "samples per order and profile");
        cmd->add_option("--max-steps", maxSteps, "reconstruction step bound");
        cmd->add_option("--report", reportPath, "write the JSON report here");
        cmd->add_option("--out", outPath, "output file (stdout when omitted)");
    };

    auto* verifyCmd = app.add_subcommand("verify", "run one named check");
    verifyCmd
        ->add_option("check", checkToken, "theorem|fusion|sproperty|lemma15|reconstruction|counts|remarks")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(sgx::kAllChecks.begin(), sgx::kAllChecks.end())));
    addSweepFlags(verifyCmd);

    auto* sweepCmd = app.add_subcommand("sweep", "run every check over sampled coefficients");
    addSweepFlags(sweepCmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(graphCmd)) {
            auto g = sgx::build_sgraph(order_from_flags(orderText, nSingle));
            write_output(formatText == "dot" ? sgx::sgraph_to_dot(g) : sgx::sgraph_to_json(g),
                         outPath);
            return 0;
        }
        if (app.got_subcommand(zsetCmd)) {
            auto order = order_from_flags(orderText, nSingle);
            auto zs = sgx::zset(sgx::build_sgraph(order));
            nlohmann::json j;
            j["n"] = order.n();
            j["order"] = order.seq();
            j["count"] = zs.size();
            auto fns = nlohmann::json::array();
            for (const auto& fn : zs)
                fns.push_back({{"text", fn.to_text()}, {"slots", sgx::function_to_json(fn)}});
            j["functions"] = std::move(fns);
            write_output(j.dump(2) + "\n", outPath);
            return 0;
        }
        if (app.got_subcommand(polyCmd)) {
            auto order = order_from_flags(orderText, nSingle);
            sgx::NumericCoeffs coeffs{parse_rational_list(coeffText)};
            auto sys = sgx::build_system(order, coeffs, sgx::variant_from_token(variantText));
            auto verts = sgx::enumerate_vertices(sys);
            if (formatText == "csv") write_output(sgx::vertices_to_csv(order.n(), verts), outPath);
            else write_output(sgx::system_to_json(sys, &verts), outPath);
            return 0;
        }
        if (app.got_subcommand(tabCmd)) {
            if (tabCmd->got_subcommand(evalCmd)) {
                auto h = sgx::heights_from_text(heightsText);
                auto profileViolations = sgx::validate_profile(h);
                auto rows = sgx::evaluate_rows(h);
                auto diffs = sgx::evaluate_diffs(h);
                auto relations = sgx::order_relations(h);
                nlohmann::json j;
                j["heights"] = h.heights;
                j["admissible"] = profileViolations.empty();
                auto pv = nlohmann::json::array();
                for (const auto& v : profileViolations)
                    pv.push_back({{"clause", v.clause}, {"level", v.level}, {"column", v.column}});
                j["profileViolations"] = std::move(pv);
                auto rowArr = nlohmann::json::array();
                for (const auto& row : rows.rows) rowArr.push_back(row.to_text());
                j["rows"] = std::move(rowArr);
                auto bv = nlohmann::json::array();
                for (const auto& v : rows.violations)
                    bv.push_back({{"row", v.row}, {"column", v.column}});
                j["boundaryViolations"] = std::move(bv);
                j["ok"] = rows.ok();
                j["total"] = rows.total.to_text();
                auto diffArr = nlohmann::json::array();
                for (const auto& d : diffs.diffs) diffArr.push_back(d.to_text());
                j["diffs"] = std::move(diffArr);
                j["diffTotal"] = diffs.total.to_text();
                j["rowsMatchDiffs"] = (rows.total == diffs.total);
                auto rl = nlohmann::json::array();
                for (const auto& p : relations.pairs) rl.push_back({p.first, p.second});
                j["orderRelations"] = std::move(rl);
                write_output(j.dump(2) + "\n", outPath);
                return 0;
            }
            // reconstruct
            auto f = sgx::FunctionVector::from_text(fnText, nSingle);
            auto d = sgx::deconstruct(f, maxSteps);
            nlohmann::json j;
            j["fn"] = f.to_text();
            j["n"] = f.n();
            j["ok"] = d.ok;
            j["steps"] = d.steps;
            auto logArr = nlohmann::json::array();
            for (const auto& m : d.log) logArr.push_back(move_json(m));
            j["log"] = std::move(logArr);
            if (!d.ok) {
                j["reason"] = d.reason;
                j["stuckAt"] = d.stuckAt.to_text();
            } else {
                auto rb = sgx::rebuild_heights(d.log, f, maxSteps);
                nlohmann::json r;
                r["ok"] = rb.ok;
                r["steps"] = rb.steps;
                if (rb.ok) {
                    r["heights"] = rb.profile.heights;
                    r["profile"] = sgx::heights_to_text(rb.profile);
                } else if (rb.blockingMove) {
                    r["blockingMove"] = move_json(*rb.blockingMove);
                }
                j["rebuild"] = std::move(r);
            }
            write_output(j.dump(2) + "\n", outPath);
            return d.ok ? 0 : 1;
        }
        if (app.got_subcommand(countCmd)) {
            nlohmann::json j;
            j["n"] = nSingle;
            j["functions"] = sgx::count_functions(nSingle);
            j["graphs"] = sgx::count_graphs(nSingle);
            j["orders"] = sgx::all_orders(nSingle).size();
            j["functionsPerOrder"] = (1LL << nSingle);
            write_output(j.dump(2) + "\n", outPath);
            return 0;
        }
        // verify / sweep
        sgx::SweepConfig cfg;
        cfg.nValues = parse_int_list(nListText);
        cfg.trialsPerOrder = trials;
        cfg.seed = seed;
        cfg.maxSteps = maxSteps;
        cfg.profiles.clear();
        for (const auto& name : split_list(profileNames))
            cfg.profiles.push_back(sgx::profile_from_name(name));
        if (!orderText.empty()) {
            cfg.fixedOrder = parse_int_list(orderText);
            // Convenience: an explicit order pins the sweep to its size unless
            // the caller asked for specific sizes themselves.
            if (verifyCmd->count("--n") == 0 && sweepCmd->count("--n") == 0)
                cfg.nValues = {static_cast<int>(cfg.fixedOrder->size())};
        }
        if (!coeffText.empty()) cfg.fixedCoeffs = parse_rational_list(coeffText);
        cfg.checks = app.got_subcommand(verifyCmd) ? std::vector<std::string>{checkToken}
                                                   : sgx::kAllChecks;
        return run_report(cfg, reportPath, outPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
