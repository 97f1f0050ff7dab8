#include <doctest.h>

#include <random>

#include "ncode/feasibility.hpp"

using namespace ncode;

namespace {

LinearConstraint row(std::vector<Rational> a, Relation rel, Rational b) { return {std::move(a), rel, std::move(b)}; }

// Substitution check kept independent of LinearConstraint::satisfied_by.
bool holds(const LinearConstraint& c, const Point& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) s += c.coeffs[i] * x[i];
    switch (c.relation) {
        case Relation::weak_le: return s <= c.bound;
        case Relation::eq: return s == c.bound;
        case Relation::strict_lt: return s < c.bound;
    }
    return false;
}

bool witness_ok(const std::vector<LinearConstraint>& cs, const FeasibilityResult& r, int dim) {
    if (!r.feasible) return !r.witness.has_value();
    if (!r.witness || static_cast<int>(r.witness->size()) != dim) return false;
    return std::all_of(cs.begin(), cs.end(), [&](const LinearConstraint& c) { return holds(c, *r.witness); });
}

Rational small_rational(std::mt19937_64& rng, int span) {
    Rational q(static_cast<long>(rng() % (2 * span + 1)) - span, 1 + static_cast<long>(rng() % 4));
    q.canonicalize();
    return q;
}

// Exact one-variable oracle: intersect the half-lines directly.
bool interval_feasible(const std::vector<LinearConstraint>& cs) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    auto tighten_hi = [&](Rational v, bool strict) {
        if (!hi || v < *hi || (v == *hi && strict)) hi = v, hi_strict = strict;
    };
    auto tighten_lo = [&](Rational v, bool strict) {
        if (!lo || v > *lo || (v == *lo && strict)) lo = v, lo_strict = strict;
    };
    for (const auto& c : cs) {
        const Rational a = c.coeffs[0];
        const bool strict = c.relation == Relation::strict_lt;
        if (a == 0) {
            if (strict ? !(0 < c.bound) : (c.relation == Relation::eq ? c.bound != 0 : !(0 <= c.bound))) return false;
            continue;
        }
        const Rational v = c.bound / a;
        if (c.relation == Relation::eq) {
            tighten_hi(v, false);
            tighten_lo(v, false);
        } else if (a > 0) {
            tighten_hi(v, strict);
        } else {
            tighten_lo(v, strict);
        }
    }
    if (!lo || !hi) return true;
    if (*lo < *hi) return true;
    return *lo == *hi && !lo_strict && !hi_strict;
}

}  // namespace

TEST_CASE("one-dimensional examples") {
    const std::vector<LinearConstraint> contradictory{row({1}, Relation::strict_lt, 0), row({-1}, Relation::weak_le, 0)};
    CHECK_FALSE(is_feasible(contradictory, 1).feasible);

    const std::vector<LinearConstraint> open_unit{row({-1}, Relation::strict_lt, 0), row({1}, Relation::strict_lt, 1)};
    const auto r = is_feasible(open_unit, 1);
    REQUIRE(r.feasible);
    CHECK((*r.witness)[0] == Rational(1, 2));

    const std::vector<LinearConstraint> point{row({1}, Relation::weak_le, 3), row({-1}, Relation::weak_le, -3)};
    const auto p = is_feasible(point, 1);
    REQUIRE(p.feasible);
    CHECK((*p.witness)[0] == 3);
    const std::vector<LinearConstraint> pinched{row({1}, Relation::strict_lt, 3), row({-1}, Relation::weak_le, -3)};
    CHECK_FALSE(is_feasible(pinched, 1).feasible);
}

TEST_CASE("barred and unbarred slabs of the two-dimensional bar-word realization meet") {
    // Y1: x >= 0, x2 <= 1, x1 + x2 >= 1.  Y2: x >= 0, x1 <= 1, x1 + x2 >= 1.
    const std::vector<LinearConstraint> cs{
        row({-1, 0}, Relation::weak_le, 0), row({0, -1}, Relation::weak_le, 0), row({0, 1}, Relation::weak_le, 1),
        row({-1, -1}, Relation::weak_le, -1), row({1, 0}, Relation::weak_le, 1),
    };
    const Point candidate{Rational(1, 2), Rational(1, 2)};
    CHECK(std::all_of(cs.begin(), cs.end(), [&](const LinearConstraint& c) { return holds(c, candidate); }));
    const auto r = is_feasible(cs, 2);
    CHECK(r.feasible);
    CHECK(witness_ok(cs, r, 2));
}

TEST_CASE("non-canonical input is accepted") {
    // -3/3 and 2/2 as built, without canonicalization: x < -1 and x >= -1.
    const Rational minus_one(-3, 3), one(2, 2);
    const std::vector<LinearConstraint> gap{row({1}, Relation::strict_lt, minus_one), row({-1}, Relation::weak_le, one)};
    CHECK_FALSE(is_feasible(gap, 1).feasible);
    const std::vector<LinearConstraint> touch{row({1}, Relation::weak_le, minus_one), row({-1}, Relation::weak_le, one)};
    const auto r = is_feasible(touch, 1);
    REQUIRE(r.feasible);
    CHECK((*r.witness)[0] == -1);
}

TEST_CASE("degenerate systems") {
    CHECK(is_feasible(std::vector<LinearConstraint>{}, 3).feasible);
    CHECK(is_feasible(std::vector<LinearConstraint>{}, 0).feasible);
    CHECK_FALSE(is_feasible(std::vector<LinearConstraint>{row({0, 0}, Relation::strict_lt, 0)}, 2).feasible);
    CHECK(is_feasible(std::vector<LinearConstraint>{row({0, 0}, Relation::weak_le, 0)}, 2).feasible);
    CHECK_FALSE(is_feasible(std::vector<LinearConstraint>{row({0}, Relation::eq, 1)}, 1).feasible);
    CHECK_THROWS_AS(is_feasible(std::vector<LinearConstraint>{row({1, 2}, Relation::weak_le, 0)}, 3),
                    std::invalid_argument);
}

TEST_CASE("equalities pin a lower-dimensional set") {
    // x + y = 1, x - y = 0, z < x: the witness must be (1/2, 1/2, z) with z < 1/2.
    const std::vector<LinearConstraint> cs{row({1, 1, 0}, Relation::eq, 1), row({1, -1, 0}, Relation::eq, 0),
                                           row({-1, 0, 1}, Relation::strict_lt, 0)};
    const auto r = is_feasible(cs, 3);
    REQUIRE(r.feasible);
    CHECK(witness_ok(cs, r, 3));
    const std::vector<LinearConstraint> clash{row({1, 1}, Relation::eq, 1), row({1, 1}, Relation::strict_lt, 1)};
    CHECK_FALSE(is_feasible(clash, 2).feasible);
}

TEST_CASE("one-variable systems agree with the interval oracle") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<LinearConstraint> cs;
        const int m = 1 + static_cast<int>(rng() % 5);
        for (int k = 0; k < m; ++k) {
            const auto rel = static_cast<Relation>(rng() % 3);
            cs.push_back(row({small_rational(rng, 2)}, rel, small_rational(rng, 3)));
        }
        const auto r = is_feasible(cs, 1);
        CHECK(r.feasible == interval_feasible(cs));
        CHECK(witness_ok(cs, r, 1));
    }
}

TEST_CASE("planted points are always found feasible") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 400; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 5);
        Point planted(d);
        for (auto& v : planted) v = small_rational(rng, 5);
        std::vector<LinearConstraint> cs;
        for (int k = 0; k < 2 + static_cast<int>(rng() % 10); ++k) {
            std::vector<Rational> a(d);
            Rational s = 0;
            for (int i = 0; i < d; ++i) {
                a[i] = small_rational(rng, 3);
                s += a[i] * planted[i];
            }
            switch (rng() % 3) {
                case 0: cs.push_back(row(a, Relation::weak_le, s)); break;
                case 1: cs.push_back(row(a, Relation::eq, s)); break;
                default: cs.push_back(row(a, Relation::strict_lt, s + Rational(1, 1 + rng() % 5))); break;
            }
        }
        const auto r = is_feasible(cs, d);
        CHECK(r.feasible);
        CHECK(witness_ok(cs, r, d));
    }
}

TEST_CASE("a strict contradiction hidden among random rows is detected") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 4);
        std::vector<LinearConstraint> cs;
        for (int k = 0; k < static_cast<int>(rng() % 6); ++k) {
            std::vector<Rational> a(d);
            for (auto& v : a) v = small_rational(rng, 3);
            cs.push_back(row(a, static_cast<Relation>(rng() % 3), small_rational(rng, 6)));
        }
        std::vector<Rational> a(d), neg(d);
        for (int i = 0; i < d; ++i) {
            a[i] = small_rational(rng, 3);
            neg[i] = -a[i];
        }
        if (std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; })) {
            a[0] = 1;
            neg[0] = -1;
        }
        const Rational b = small_rational(rng, 4);
        // a.x <= b and a.x > b, scaled so the engine has to normalize.
        cs.push_back(row(a, Relation::weak_le, b));
        std::vector<Rational> scaled(d);
        for (int i = 0; i < d; ++i) scaled[i] = neg[i] * 3;
        cs.push_back(row(scaled, Relation::strict_lt, -b * 3));
        std::shuffle(cs.begin(), cs.end(), rng);
        CHECK_FALSE(is_feasible(cs, d).feasible);
    }
}

TEST_CASE("verdict is invariant under an invertible change of variables") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<LinearConstraint> cs;
        for (int k = 0; k < 2 + static_cast<int>(rng() % 6); ++k) {
            cs.push_back(row({small_rational(rng, 3), small_rational(rng, 3)}, static_cast<Relation>(rng() % 3),
                             small_rational(rng, 3)));
        }
        // x = M y with M = [[1, s], [0, 1]] then swap coordinates; a.x = (a M) . y.
        const Rational s = small_rational(rng, 3);
        std::vector<LinearConstraint> moved;
        for (const auto& c : cs) {
            const Rational y1 = c.coeffs[0], y2 = c.coeffs[0] * s + c.coeffs[1];
            moved.push_back(row({y2, y1}, c.relation, c.bound));
        }
        const auto r = is_feasible(cs, 2);
        const auto m = is_feasible(moved, 2);
        CHECK(r.feasible == m.feasible);
        CHECK(witness_ok(cs, r, 2));
        CHECK(witness_ok(moved, m, 2));
    }
}
