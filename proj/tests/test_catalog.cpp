#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "edc/catalog.hpp"
#include "edc/executor.hpp"

using namespace edc;

namespace {

// Every supported entry and variant, a handful of random instances each:
// outputs must agree with the closed-form oracle and the expansion must be
// compass-pure and replayable through the executor.
void exercise_entry(const entry& en, int samples, double tol_rel = 1e-6) {
    rng g(0x5EED0000 + en.part * 1000 + en.number);
    for (int i = 0; i < samples; ++i) {
        instance in = en.sample(g);
        for (int v = 1; v <= en.variants; ++v) {
            CAPTURE(en.id_text());
            CAPTURE(v);
            CAPTURE(i);
            run_result rr = run_proposition(prop_id{en.part, en.number, v}, in);
            CHECK(rr.metrics.ruler_steps == 0);
            check_result cr = en.check(in, rr.out);
            CAPTURE(cr.detail);
            CHECK(cr.rel_error <= tol_rel);

            if (i == 0 && v == 1) {
                // The emitted program replays to the same values.
                trace t = execute(rr.prog, {}, tolerance_for(in));
                for (const auto& [name, val] : rr.out.points) {
                    bool found = false;
                    for (const auto& [r, tv] : t.entries) {
                        if (const point* p = std::get_if<point>(&tv);
                            p && distance(*p, val) < 1e-12) {
                            found = true;
                            break;
                        }
                    }
                    CHECK(found);
                }
            }
        }
    }
}

} // namespace

TEST_CASE("catalog: every registered entry matches its oracle") {
    for (const auto& en : catalog()) {
        if (!en.supported) continue;
        exercise_entry(en, 8);
    }
}

TEST_CASE("catalog: spot values from the construction corpus") {
    { // equilateral apex
        instance in;
        in.points = {{"A", {0, 0}}, {"B", {1, 0}}};
        in.branches = {{"side", branch::left}};
        run_result rr = run_proposition(prop_id{1, 1}, in);
        CHECK(rr.out.pt("C").x == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(rr.out.pt("C").y == doctest::Approx(0.86602540378).epsilon(1e-9));
        CHECK(rr.metrics.circles == 2);
        CHECK(rr.metrics.intersections == 1);
    }
    { // midpoint variants agree and differ in ledger
        instance in;
        in.points = {{"A", {0, 0}}, {"B", {1, 1}}};
        run_result r1 = run_proposition(prop_id{1, 15, 1}, in);
        run_result r2 = run_proposition(prop_id{1, 15, 2}, in);
        run_result r3 = run_proposition(prop_id{1, 15, 3}, in);
        CHECK(distance(r1.out.pt("M"), {0.5, 0.5}) < 1e-9);
        CHECK(distance(r1.out.pt("M"), r2.out.pt("M")) < 1e-9);
        CHECK(distance(r1.out.pt("M"), r3.out.pt("M")) < 1e-9);
        CHECK(r1.metrics != r2.metrics);
        CHECK(r2.metrics != r3.metrics);
    }
    { // golden section on the unit segment
        instance in;
        in.points = {{"A", {0, 0}}, {"C", {1, 0}}};
        run_result rr = run_proposition(prop_id{1, 39}, in);
        CHECK(rr.out.scalar("gc") == doctest::Approx(0.61803398875).epsilon(1e-10));
    }
    { // pentagon side on the unit circle
        instance in;
        in.points = {{"O", {0, 0}}, {"P", {1, 0}}};
        run_result rr = run_proposition(prop_id{1, 41}, in);
        CHECK(rr.out.scalar("side_len") == doctest::Approx(1.17557050458).epsilon(1e-10));
    }
    { // pentadecagon side on the unit circle
        instance in;
        in.points = {{"O", {0, 0}}, {"P", {1, 0}}};
        run_result rr = run_proposition(prop_id{1, 45}, in);
        CHECK(rr.out.scalar("side_len") ==
              doctest::Approx(2.0 * std::sin(std::numbers::pi / 15.0)).epsilon(1e-10));
    }
    { // proportionals
        instance in;
        in.scalars = {{"a", 3.0}, {"b", 1.0}, {"c", 12.0}};
        run_result rr = run_proposition(prop_id{1, 31, 2}, in);
        CHECK(rr.out.scalar("d") == doctest::Approx(4.0).epsilon(1e-10));
        instance in2;
        in2.scalars = {{"p", 1.0}, {"q", 4.0}};
        CHECK(run_proposition(prop_id{1, 27}, in2).out.scalar("side") ==
              doctest::Approx(2.0).epsilon(1e-10));
        instance in3;
        in3.scalars = {{"a", 1.0}, {"b", 2.0}};
        CHECK(run_proposition(prop_id{1, 30}, in3).out.scalar("t") ==
              doctest::Approx(4.0).epsilon(1e-10));
    }
    { // P1.7: the 3-4-5 right triangle
        instance in;
        in.points = {{"A", {0, 0}}, {"B", {3, 0}}};
        in.scalars = {{"ac", 4.0}, {"bc", 5.0}};
        in.branches = {{"side", branch::left}};
        run_result rr = run_proposition(prop_id{1, 7}, in);
        CHECK(distance(rr.out.pt("C"), {0, 4}) < 1e-9);
    }
    { // P1.11: inscribed square side on the unit circle
        instance in;
        in.points = {{"O", {0, 0}}, {"P", {1, 0}}};
        in.branches = {{"side", branch::left}};
        run_result rr = run_proposition(prop_id{1, 11}, in);
        CHECK(rr.out.scalar("side_len") ==
              doctest::Approx(std::numbers::sqrt2).epsilon(1e-10));
    }
}

TEST_CASE("catalog: registry shape") {
    int part1 = 0, part2 = 0;
    for (const auto& en : catalog()) {
        if (en.part == 1) ++part1;
        else ++part2;
    }
    CHECK(part1 == 54);
    const entry& p29 = find_entry(1, 29);
    CHECK(p29.variants == 3);
    REQUIRE(p29.unsupported_variants.size() == 1);
    CHECK(p29.unsupported_variants[0].first == 4);
    // The registered gap raises Unsupported.
    instance in;
    in.scalars = {{"a", 2.0}, {"b", 1.0}};
    CHECK_THROWS_AS((void)run_proposition(prop_id{1, 29, 4}, in), error);
}

TEST_CASE("catalog: unsupported and degenerate inputs raise typed errors") {
    {
        instance in;
        in.points = {{"A", {1, 1}}, {"B", {1, 1}}};
        in.branches = {{"side", branch::left}};
        CHECK_THROWS_AS((void)run_proposition(prop_id{1, 1}, in), error);
    }
    {
        // P1.21 first construction rejects lengths beyond |AB|.
        instance in;
        in.points = {{"A", {0, 0}}, {"B", {1, 0}}};
        in.scalars = {{"len", 1.5}};
        in.branches = {{"side", branch::left}};
        try {
            (void)run_proposition(prop_id{1, 21, 1}, in);
            CHECK(false);
        } catch (const error& err) {
            CHECK(err.code() == errc::length_out_of_range);
        }
    }
}

TEST_CASE("catalog: P1.21 spot example and Pythagoras identity") {
    instance in;
    in.points = {{"A", {0, 0}}, {"B", {1, 0}}};
    in.scalars = {{"len", 1.0}};
    in.branches = {{"side", branch::left}};
    run_result rr = run_proposition(prop_id{1, 21, 1}, in);
    CHECK(distance(rr.out.pt("K"), {0, 1}) < 1e-9);

    rng g(711);
    for (int i = 0; i < 50; ++i) {
        const double a = g.uniform(0.1, 10.0);
        const double b = g.uniform(0.1, 1.0) * a;
        instance inst;
        inst.points = {{"A", {0, 0}}, {"B", {a, 0}}};
        inst.scalars = {{"len", b}};
        inst.branches = {{"side", branch::left}};
        for (int v = 1; v <= 2; ++v) {
            run_result r = run_proposition(prop_id{1, 21, v}, inst);
            const double hyp = r.out.scalar("hyp");
            CHECK(std::fabs(hyp * hyp - (a * a + b * b)) <= 1e-9 * std::max(1.0, a * a + b * b));
        }
    }
}
