#include "sgx/fusion.hpp"
#include "sgx/orders.hpp"
#include "sgx/tableau.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sgx;

namespace {

HeightProfile hp(std::initializer_list<int> hs) { return HeightProfile{std::vector<int>(hs)}; }

FunctionVector fn(const std::string& text, int n = -1) {
    return FunctionVector::from_text(text, n);
}

}  // namespace

TEST_CASE("profile admissibility") {
    CHECK(admissible(hp({3, 2, 1, 3})));
    CHECK(admissible(hp({2, 1, 2})));
    CHECK(admissible(hp({1, 1})));
    CHECK(admissible(hp({0, 0, 0})));
    CHECK(admissible(hp({1, 0, 1})));

    // Level 2 is even, so the leftmost column reaching it must be the first.
    CHECK_FALSE(admissible(hp({0, 2, 1, 1})));
    auto violations = validate_profile(hp({0, 2, 1, 1}));
    REQUIRE_FALSE(violations.empty());
    bool found = false;
    for (const auto& v : violations)
        if (v.clause == "even-level-leftmost" && v.level == 2) found = true;
    CHECK(found);

    CHECK_FALSE(validate_profile(HeightProfile{{}}).empty());
    CHECK_FALSE(validate_profile(hp({1, -1})).empty());
    // Level 1 is odd, so the rightmost column reaching it must be the last.
    CHECK_FALSE(admissible(hp({1, 1, 0})));
}

TEST_CASE("row evaluation fixtures") {
    {
        auto ev = evaluate_rows(hp({3, 2, 1, 3}));
        CHECK(ev.ok());
        CHECK(ev.total == fn("c1; c1+c2-c3; c1"));
        CHECK(ev.rows.size() == 3);
        // Row 1 collects every first block; row 3 joins only the two towers.
        CHECK(ev.rows[2] == fn("c1; c1; c1"));
    }
    {
        auto ev = evaluate_rows(hp({2, 1, 2}));
        CHECK(ev.ok());
        CHECK(ev.total == fn("c1-c2; 0"));
    }
    {
        auto ev = evaluate_rows(hp({1, 1}));
        CHECK(ev.ok());
        CHECK(ev.total == fn("c1"));
    }
    {
        auto ev = evaluate_rows(hp({0, 0, 0}));
        CHECK(ev.ok());
        CHECK(ev.total.is_zero());
        CHECK(ev.rows.empty());
    }
    {
        // The lone level-2 block in column 2 has no partner to its left.
        auto ev = evaluate_rows(hp({0, 2, 1, 1}));
        CHECK_FALSE(ev.ok());
        REQUIRE_FALSE(ev.violations.empty());
        CHECK(ev.violations[0].row == 2);
        CHECK(ev.violations[0].column == 2);
    }
}

TEST_CASE("difference evaluation fixtures") {
    auto ev = evaluate_diffs(hp({2, 1, 2}));
    REQUIRE(ev.diffs.size() == 3);
    CHECK(ev.diffs[0] == LinearForm::from_text("c1-c2"));
    CHECK(ev.diffs[1] == LinearForm::from_text("c2-c1"));
    CHECK(ev.diffs[2].is_zero());
    CHECK(ev.total == fn("c1-c2; 0"));
}

TEST_CASE("rows and differences agree on every small admissible profile") {
    // Exhaustive scan: all profiles with entries up to 4 for n = 2, up to 3
    // for n = 3. The two evaluation routes are implemented independently.
    auto scan = [](int n, int maxHeight) {
        std::vector<int> hs(static_cast<std::size_t>(n) + 1, 0);
        long long checked = 0;
        while (true) {
            HeightProfile h{hs};
            if (admissible(h)) {
                auto rows = evaluate_rows(h);
                if (rows.ok()) {
                    auto diffs = evaluate_diffs(h);
                    CHECK(rows.total == diffs.total);
                    ++checked;
                }
            }
            std::size_t i = 0;
            while (i < hs.size() && hs[i] == maxHeight) hs[i++] = 0;
            if (i == hs.size()) break;
            ++hs[i];
        }
        return checked;
    };
    CHECK(scan(2, 4) > 10);
    CHECK(scan(3, 3) > 10);
}

TEST_CASE("order relations extracted from neighbouring columns") {
    {
        auto rel = order_relations(hp({2, 1, 2}));
        CHECK(rel.pairs == std::set<std::pair<int, int>>{{2, 1}});
    }
    {
        auto rel = order_relations(hp({3, 2, 1, 3}));
        CHECK(rel.pairs == std::set<std::pair<int, int>>{{3, 2}, {1, 3}});
    }
    CHECK(order_relations(hp({0, 0, 0})).pairs.empty());

    OrderRelations chainRel;
    chainRel.pairs = {{1, 2}, {2, 3}};
    auto closed = transitive_closure(chainRel);
    CHECK(closed.pairs.count({1, 3}) == 1);

    CHECK(embeds_in(order_relations(hp({2, 1, 2})), CoeffOrder({2, 1})));
    CHECK_FALSE(embeds_in(order_relations(hp({2, 1, 2})), CoeffOrder({1, 2})));
}

TEST_CASE("strongly extremal column detection") {
    {
        auto e = strongly_extremal_column(fn("c1; c1+c2-c3; c1"));
        CHECK(e.kind == ExtremalColumn::Kind::column);
        CHECK(e.k == 0);
    }
    {
        auto e = strongly_extremal_column(fn("c1-c2; 0"));
        CHECK(e.kind == ExtremalColumn::Kind::column);
        CHECK(e.k == 2);
    }
    {
        auto e = strongly_extremal_column(fn("c1; c1+c2"));
        CHECK(e.kind == ExtremalColumn::Kind::notRepresentable);
        CHECK(e.matches == std::vector<int>{0, 1});
    }
    CHECK(strongly_extremal_column(FunctionVector(2)).kind == ExtremalColumn::Kind::empty);
}

TEST_CASE("quasi-extremal neighbour candidates") {
    {
        auto q = quasi_extremal_neighbor(fn("c1; c1+c2-c3; c1"), 0);
        REQUIRE(q.size() == 1);
        CHECK(q[0].j == 3);
        CHECK(q[0].parity == Parity::odd);
    }
    {
        auto q = quasi_extremal_neighbor(fn("c1-c2; 0"), 2);
        REQUIRE(q.size() == 1);
        CHECK(q[0].j == 0);
        CHECK(q[0].parity == Parity::even);
    }
    {
        // Two candidates, odd ascending first, then even descending.
        auto q = quasi_extremal_neighbor(fn("0; c2; c3"), 1);
        REQUIRE(q.size() == 2);
        CHECK(q[0].j == 2);
        CHECK(q[0].parity == Parity::odd);
        CHECK(q[1].j == 0);
        CHECK(q[1].parity == Parity::even);
    }
    CHECK_THROWS_AS(quasi_extremal_neighbor(fn("c1-c2; 0"), 5), std::invalid_argument);
}

TEST_CASE("move terms and replay") {
    CHECK(move_term(3, Move{0, 3, Parity::odd}) ==
          FunctionVector::r_difference(3, 1, 4, LinearForm::indeterminate(1)));
    CHECK(move_term(2, Move{2, 0, Parity::even}) ==
          FunctionVector::r_difference(2, 3, 1, LinearForm::indeterminate(2)));

    std::vector<Move> log{{2, 0, Parity::even}, {0, 1, Parity::odd}, {1, 2, Parity::odd}};
    CHECK(replay(2, log) == fn("c1-c2; 0"));
    CHECK(replay(2, {}) == FunctionVector(2));

    CHECK(std::string(parity_name(Parity::odd)) == "odd");
    CHECK(parity_from_name("even") == Parity::even);
    CHECK_THROWS_AS(parity_from_name("sideways"), std::invalid_argument);
}

TEST_CASE("deconstruction logs are frozen for the worked examples") {
    {
        auto d = deconstruct(fn("c1; c1+c2-c3; c1"));
        REQUIRE(d.ok);
        std::vector<Move> expect{
            {0, 3, Parity::odd}, {3, 1, Parity::even}, {1, 2, Parity::odd}, {2, 3, Parity::odd}};
        CHECK(d.log == expect);
        CHECK(replay(3, d.log) == fn("c1; c1+c2-c3; c1"));
        CHECK(d.steps > 0);
    }
    {
        auto d = deconstruct(fn("c1-c2; 0"));
        REQUIRE(d.ok);
        std::vector<Move> expect{{2, 0, Parity::even}, {0, 1, Parity::odd}, {1, 2, Parity::odd}};
        CHECK(d.log == expect);

        // The walk passes through the expected intermediates.
        auto f1 = fn("c1-c2; 0") - move_term(2, d.log[0]);
        CHECK(f1 == fn("c1; c2"));
        auto f2 = f1 - move_term(2, d.log[1]);
        CHECK(f2 == fn("0; c2"));
        CHECK((f2 - move_term(2, d.log[2])).is_zero());
    }
    {
        auto d = deconstruct(fn("c1; c1+c2"));
        CHECK_FALSE(d.ok);
        CHECK(d.reason == "ambiguous-extremal");
        CHECK(d.stuckAt == fn("c1; c1+c2"));
    }
    {
        auto d = deconstruct(FunctionVector(3));
        CHECK(d.ok);
        CHECK(d.log.empty());
    }
}

TEST_CASE("extremal slot vanishing") {
    CHECK(extremal_slot_vanishes(fn("c1; c1+c2-c3; c1"), 0));
    CHECK(extremal_slot_vanishes(fn("c1-c2; 0"), 2));
    CHECK_FALSE(extremal_slot_vanishes(fn("c1; c2"), 1));
}

TEST_CASE("height rebuilding") {
    {
        std::vector<Move> log{{0, 2, Parity::odd}};
        auto rb = rebuild_heights(log, fn("c1; c1"));
        REQUIRE(rb.ok);
        CHECK(rb.profile.heights == std::vector<int>{1, 0, 1});
        CHECK(evaluate_rows(rb.profile).total == fn("c1; c1"));
    }
    {
        std::vector<Move> log{{2, 0, Parity::even}, {0, 1, Parity::odd}, {1, 2, Parity::odd}};
        auto rb = rebuild_heights(log, fn("c1-c2; 0"));
        REQUIRE(rb.ok);
        CHECK(admissible(rb.profile));
        // The certificate is function equality, not a specific height vector.
        auto ev = evaluate_rows(rb.profile);
        CHECK(ev.ok());
        CHECK(ev.total == fn("c1-c2; 0"));
    }
    {
        auto rb = rebuild_heights({}, FunctionVector(2));
        REQUIRE(rb.ok);
        CHECK(rb.profile.heights == std::vector<int>{0, 0, 0});
    }
    // The log must replay to the claimed function.
    CHECK_THROWS_AS(rebuild_heights({Move{0, 2, Parity::odd}}, fn("c1; c2")),
                    std::invalid_argument);
    {
        // An unreachable budget reports failure instead of spinning.
        std::vector<Move> log{{2, 0, Parity::even}, {0, 1, Parity::odd}, {1, 2, Parity::odd}};
        auto rb = rebuild_heights(log, fn("c1-c2; 0"), 1);
        CHECK_FALSE(rb.ok);
    }
}

TEST_CASE("deconstruct and rebuild round-trip every vertex function at small sizes") {
    for (int n = 1; n <= 2; ++n) {
        for (const auto& order : all_orders(n)) {
            for (const auto& z : zset(build_sgraph(order))) {
                auto d = deconstruct(z);
                REQUIRE(d.ok);
                CHECK(replay(n, d.log) == z);
                auto rb = rebuild_heights(d.log, z);
                REQUIRE(rb.ok);
                auto ev = evaluate_rows(rb.profile);
                CHECK(ev.ok());
                CHECK(ev.total == z);
            }
        }
    }
}

TEST_CASE("height profile text and move log serialization") {
    CHECK(heights_to_text(hp({3, 2, 1, 3})) == "3,2,1,3");
    CHECK(heights_from_text("3,2,1,3").heights == std::vector<int>{3, 2, 1, 3});
    CHECK(heights_from_text("2, 1, 2", 2).heights == std::vector<int>{2, 1, 2});
    CHECK_THROWS_AS(heights_from_text(""), std::invalid_argument);
    CHECK_THROWS_AS(heights_from_text("1,a"), std::invalid_argument);
    CHECK_THROWS_AS(heights_from_text("-1,0"), std::invalid_argument);
    CHECK_THROWS_AS(heights_from_text("1,1", 3), std::invalid_argument);

    std::vector<Move> log{{2, 0, Parity::even}, {0, 1, Parity::odd}};
    CHECK(movelog_from_json(movelog_to_json(log)) == log);
    CHECK(movelog_from_json("[]").empty());
}
