#include "sgx/tableau.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sgx {

int HeightProfile::height(int col) const {
    if (col < 1 || col > static_cast<int>(heights.size()))
        throw std::out_of_range("column index out of range");
    return heights[static_cast<std::size_t>(col - 1)];
}

int HeightProfile::max_height() const {
    int top = 0;
    for (int h : heights) top = std::max(top, h);
    return top;
}

namespace {

// c_idx as a form; indices 0 and n+1 read as zero.
LinearForm coeff_form(int n, int idx) {
    if (idx < 1 || idx > n) return LinearForm();
    return LinearForm::indeterminate(idx);
}

// Columns a < b both reach level m and nothing strictly between them does.
bool neighbouring(const HeightProfile& h, int a, int b, int m) {
    if (h.height(a) < m || h.height(b) < m) return false;
    for (int t = a + 1; t < b; ++t)
        if (h.height(t) >= m) return false;
    return true;
}

}  // namespace

std::vector<ProfileViolation> validate_profile(const HeightProfile& h) {
    std::vector<ProfileViolation> out;
    const int cols = static_cast<int>(h.heights.size());
    if (cols < 1) {
        out.push_back({"empty-profile", 0, 0});
        return out;
    }
    for (int col = 1; col <= cols; ++col)
        if (h.height(col) < 0) out.push_back({"negative-height", 0, col});
    if (!out.empty()) return out;

    const int top = h.max_height();
    for (int m = 1; m <= top; ++m) {
        int leftmost = 0;
        int rightmost = 0;
        for (int col = 1; col <= cols; ++col) {
            if (h.height(col) < m) continue;
            if (leftmost == 0) leftmost = col;
            rightmost = col;
        }
        if (leftmost == 0) continue;
        if (m % 2 == 1 && rightmost != cols)
            out.push_back({"odd-level-rightmost", m, rightmost});
        if (m % 2 == 0 && leftmost != 1)
            out.push_back({"even-level-leftmost", m, leftmost});
    }
    for (int col = 1; col <= cols; ++col) {
        const int m = h.height(col);
        if (m == 0) continue;
        const int needLeft = (m % 2 == 1) ? m - 2 : m - 1;
        const int needRight = (m % 2 == 1) ? m - 1 : m - 2;
        if (col > 1 && h.height(col - 1) < needLeft) out.push_back({"left-support", m, col});
        if (col < cols && h.height(col + 1) < needRight) out.push_back({"right-support", m, col});
    }
    return out;
}

bool admissible(const HeightProfile& h) { return validate_profile(h).empty(); }

RowEvaluation evaluate_rows(const HeightProfile& h) {
    const int n = h.n();
    RowEvaluation res;
    res.total = FunctionVector(n);
    const int top = h.max_height();
    for (int m = 1; m <= top; ++m) {
        FunctionVector row(n);
        if (m % 2 == 1) {
            for (int k = 1; k <= n; ++k) {
                if (h.height(k) < m) continue;
                int j = 0;
                for (int t = k + 1; t <= n + 1; ++t) {
                    if (h.height(t) >= m) {
                        j = t;
                        break;
                    }
                }
                if (j == 0) {
                    res.violations.push_back({m, k});
                    continue;
                }
                row = row + FunctionVector::r_difference(n, k, j, coeff_form(n, k));
            }
        } else {
            for (int col = 2; col <= n + 1; ++col) {
                if (h.height(col) < m) continue;
                int j = 0;
                for (int t = col - 1; t >= 1; --t) {
                    if (h.height(t) >= m) {
                        j = t;
                        break;
                    }
                }
                if (j == 0) {
                    res.violations.push_back({m, col});
                    continue;
                }
                row = row + FunctionVector::r_difference(n, col, j, coeff_form(n, col - 1));
            }
        }
        res.rows.push_back(row);
        res.total = res.total + row;
    }
    return res;
}

DiffEvaluation evaluate_diffs(const HeightProfile& h) {
    const int n = h.n();
    DiffEvaluation res;
    res.total = FunctionVector(n);
    res.diffs.reserve(static_cast<std::size_t>(n) + 1);
    LinearForm running;
    for (int k = 0; k <= n; ++k) {
        const int m = h.height(k + 1);
        LinearForm d;
        if (m > 0) {
            d = coeff_form(n, k + 1);
            if (m % 2 == 1) {
                for (int j = k; j >= 1; --j) {
                    if (neighbouring(h, j, k + 1, m)) {
                        d -= coeff_form(n, j);
                        break;
                    }
                }
            } else {
                for (int j = k + 1; j <= n; ++j) {
                    if (neighbouring(h, k + 1, j + 1, m)) {
                        d -= coeff_form(n, j);
                        break;
                    }
                }
            }
        }
        running += d;
        res.diffs.push_back(std::move(d));
        if (k + 1 <= n) res.total.set_slot(k + 1, running);
    }
    return res;
}

OrderRelations order_relations(const HeightProfile& h) {
    OrderRelations rels;
    const int cols = h.n() + 1;
    const int top = h.max_height();
    auto add = [&](int a, int b) {
        if (a != b) rels.pairs.emplace(a, b);
    };
    for (int m = 1; m <= top; ++m) {
        int prev = 0;
        for (int col = 1; col <= cols; ++col) {
            if (h.height(col) < m) continue;
            if (prev != 0) {
                if (m % 2 == 1) {
                    // neighbouring pair (C_prev, C_col) = (C_j, C_{k+1})
                    const int j = prev;
                    for (int t = prev + 1; t < col; ++t)
                        if (h.height(t) == m - 1) add(j, t - 1);
                    add(j, col - 1);
                } else {
                    // neighbouring pair (C_prev, C_col) = (C_{k+1}, C_{j+1})
                    add(col - 1, prev);
                }
            }
            prev = col;
        }
    }
    return rels;
}

OrderRelations transitive_closure(const OrderRelations& r) {
    OrderRelations out = r;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> fresh;
        for (const auto& [a, b] : out.pairs) {
            for (const auto& [c, d] : out.pairs) {
                if (b != c || a == d) continue;
                if (out.pairs.count({a, d}) == 0) fresh.emplace_back(a, d);
            }
        }
        for (const auto& p : fresh) changed |= out.pairs.insert(p).second;
    }
    return out;
}

bool embeds_in(const OrderRelations& r, const CoeffOrder& order) {
    OrderRelations closed = transitive_closure(r);
    for (const auto& [a, b] : closed.pairs) {
        if (a < 1 || a > order.n() || b < 1 || b > order.n()) return false;
        if (!order.precedes(a, b)) return false;
    }
    return true;
}

const char* parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

Parity parity_from_name(const std::string& name) {
    if (name == "odd") return Parity::odd;
    if (name == "even") return Parity::even;
    throw std::invalid_argument("unknown parity: " + name);
}

ExtremalColumn strongly_extremal_column(const FunctionVector& f) {
    ExtremalColumn res;
    if (f.is_zero()) {
        res.kind = ExtremalColumn::Kind::empty;
        return res;
    }
    const int n = f.n();
    for (int k = 0; k <= n; ++k)
        if (f.slot(k + 1) - f.slot(k) == coeff_form(n, k + 1)) res.matches.push_back(k);
    if (res.matches.size() == 1) {
        res.kind = ExtremalColumn::Kind::column;
        res.k = res.matches.front();
    } else {
        res.kind = ExtremalColumn::Kind::notRepresentable;
    }
    return res;
}

std::vector<QuasiCandidate> quasi_extremal_neighbor(const FunctionVector& f, int k) {
    const int n = f.n();
    if (k < 0 || k > n) throw std::invalid_argument("extremal column index out of range");
    std::vector<QuasiCandidate> out;
    for (int j = k + 1; j <= n; ++j)
        if (f.slot(j + 1) - f.slot(j) == coeff_form(n, j + 1) - coeff_form(n, k + 1))
            out.push_back({j, Parity::odd});
    for (int j = k - 1; j >= 0; --j)
        if (f.slot(j + 1) - f.slot(j) == coeff_form(n, j + 1) - coeff_form(n, k))
            out.push_back({j, Parity::even});
    return out;
}

FunctionVector move_term(int n, const Move& m) {
    const int weightIndex = (m.parity == Parity::odd) ? m.k + 1 : m.k;
    return FunctionVector::r_difference(n, m.k + 1, m.j + 1, coeff_form(n, weightIndex));
}

FunctionVector replay(int n, const std::vector<Move>& log) {
    FunctionVector f(n);
    for (const auto& m : log) f = f + move_term(n, m);
    return f;
}

DeconstructResult deconstruct(const FunctionVector& f, long long maxSteps) {
    const int n = f.n();
    if (maxSteps < 0) maxSteps = 4LL * n * n * (n + 1);
    DeconstructResult res;
    std::set<FunctionVector> visited;
    std::vector<Move> path;
    bool noted = false;
    auto note = [&](const std::string& why, const FunctionVector& at) {
        if (noted) return;
        noted = true;
        res.reason = why;
        res.stuckAt = at;
    };

    std::function<bool(const FunctionVector&)> go = [&](const FunctionVector& cur) -> bool {
        if (cur.is_zero()) return true;
        if (!visited.insert(cur).second) return false;
        auto ext = strongly_extremal_column(cur);
        if (ext.kind != ExtremalColumn::Kind::column) {
            note(ext.matches.empty() ? "no-extremal" : "ambiguous-extremal", cur);
            return false;
        }
        auto cands = quasi_extremal_neighbor(cur, ext.k);
        if (cands.empty()) {
            note("no-branch", cur);
            return false;
        }
        for (const auto& cand : cands) {
            if (res.steps >= maxSteps) {
                note("step-bound", cur);
                return false;
            }
            ++res.steps;
            Move mv{ext.k, cand.j, cand.parity};
            path.push_back(mv);
            if (go(cur - move_term(n, mv))) return true;
            path.pop_back();
        }
        return false;
    };

    res.ok = go(f);
    if (res.ok) {
        res.log = std::move(path);
        res.reason.clear();
    } else if (!noted) {
        note("no-branch", f);
    }
    return res;
}

bool extremal_slot_vanishes(const FunctionVector& f, int k) {
    if (k < 0 || k > f.n()) throw std::invalid_argument("extremal column index out of range");
    return f.slot(k).is_zero();
}

RebuildResult rebuild_heights(const std::vector<Move>& log, const FunctionVector& f,
                              long long maxSteps) {
    const int n = f.n();
    const int cols = n + 1;
    if (!(replay(n, log) == f))
        throw std::invalid_argument("move log does not replay to the given function");
    const auto len = static_cast<long long>(log.size());
    if (maxSteps < 0) maxSteps = 2000 * (len + 1);
    const int heightCap = static_cast<int>(len) + 2 * (n + 2) + 2;

    // expected[i] = replay of the log suffix starting at move i; rebuilding
    // applies moves last-to-first, so after absorbing moves i..len-1 the
    // profile must evaluate to expected[i].
    std::vector<FunctionVector> expected(static_cast<std::size_t>(len) + 1, FunctionVector(n));
    for (long long i = len - 1; i >= 0; --i)
        expected[static_cast<std::size_t>(i)] =
            expected[static_cast<std::size_t>(i + 1)] + move_term(n, log[static_cast<std::size_t>(i)]);

    RebuildResult res;
    res.profile.heights.assign(static_cast<std::size_t>(cols), 0);
    std::set<std::pair<std::vector<int>, long long>> visited;
    long long bestApplied = -1;

    auto evaluates_to = [&](const HeightProfile& h, const FunctionVector& want) {
        auto ev = evaluate_rows(h);
        return ev.ok() && ev.total == want;
    };

    // applied = number of moves absorbed so far (log suffix of that length).
    std::function<bool(HeightProfile&, long long)> go = [&](HeightProfile& h,
                                                            long long applied) -> bool {
        if (applied > bestApplied) {
            bestApplied = applied;
            res.profile = h;
            if (applied < len) res.blockingMove = log[static_cast<std::size_t>(len - applied - 1)];
            else res.blockingMove.reset();
        }
        if (applied == len) return true;
        if (res.steps >= maxSteps) return false;
        if (!visited.insert({h.heights, applied}).second) return false;

        const Move& mv = log[static_cast<std::size_t>(len - applied - 1)];
        const int maxHt = h.max_height();

        // The direct move: one block on top of column C_{k+1}.
        {
            auto& ht = h.heights[static_cast<std::size_t>(mv.k)];
            ++ht;
            ++res.steps;
            const bool parityOk = (ht % 2 == 1) == (mv.parity == Parity::odd);
            if (parityOk && ht >= maxHt && admissible(h) &&
                evaluates_to(h, expected[static_cast<std::size_t>(len - applied - 1)])) {
                if (go(h, applied + 1)) return true;
            }
            --ht;
        }
        // Augmentations that leave the function unchanged.
        const FunctionVector& unchanged = expected[static_cast<std::size_t>(len - applied)];
        for (int col = 1; col <= cols; ++col) {
            auto& ht = h.heights[static_cast<std::size_t>(col - 1)];
            if (ht + 1 <= heightCap && ht + 1 > maxHt) {  // single block, unique new maximum
                ++ht;
                ++res.steps;
                if (admissible(h) && evaluates_to(h, unchanged) && go(h, applied)) return true;
                --ht;
            }
            if (ht + 2 <= heightCap) {  // vertical domino
                ht += 2;
                ++res.steps;
                if (admissible(h) && evaluates_to(h, unchanged) && go(h, applied)) return true;
                ht -= 2;
            }
            if (res.steps >= maxSteps) return false;
        }
        return false;
    };

    HeightProfile work;
    work.heights.assign(static_cast<std::size_t>(cols), 0);
    res.ok = go(work, 0);
    if (res.ok) {
        res.profile = work;
        res.blockingMove.reset();
    }
    return res;
}

std::string heights_to_text(const HeightProfile& h) {
    std::ostringstream out;
    for (std::size_t i = 0; i < h.heights.size(); ++i) out << (i > 0 ? "," : "") << h.heights[i];
    return out.str();
}

HeightProfile heights_from_text(const std::string& text, int n) {
    HeightProfile h;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad height entry: " + item);
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size() || value < 0)
            throw std::invalid_argument("bad height entry: " + item);
        h.heights.push_back(value);
    }
    if (h.heights.empty()) throw std::invalid_argument("empty height profile");
    if (n >= 0 && static_cast<int>(h.heights.size()) != n + 1)
        throw std::invalid_argument("height profile must have n+1 entries");
    return h;
}

std::string movelog_to_json(const std::vector<Move>& log) {
    auto arr = nlohmann::json::array();
    for (const auto& m : log)
        arr.push_back({{"k", m.k}, {"j", m.j}, {"parity", parity_name(m.parity)}});
    return arr.dump();
}

std::vector<Move> movelog_from_json(const std::string& text) {
    auto parsed = nlohmann::json::parse(text);
    if (!parsed.is_array()) throw std::invalid_argument("move log must be a JSON array");
    std::vector<Move> log;
    for (const auto& e : parsed) {
        Move m;
        m.k = e.at("k").get<int>();
        m.j = e.at("j").get<int>();
        m.parity = parity_from_name(e.at("parity").get<std::string>());
        log.push_back(m);
    }
    return log;
}

}  // namespace sgx
