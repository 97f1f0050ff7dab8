#include "ncode/feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace ncode {

Rational LinearConstraint::lhs(std::span<const Rational> point) const {
    if (point.size() != coeffs.size()) throw std::invalid_argument("point dimension differs from constraint");
    Rational sum = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * point[i];
    return sum;
}

bool LinearConstraint::satisfied_by(std::span<const Rational> point) const {
    const Rational value = lhs(point);
    switch (relation) {
        case Relation::weak_le: return value <= bound;
        case Relation::eq: return value == bound;
        case Relation::strict_lt: return value < bound;
    }
    return false;
}

namespace {

/// a · x <= b, or < b when strict.
struct Row {
    std::vector<Rational> a;
    Rational b;
    bool strict = false;
};

using System = std::vector<Row>;

/// Drops trivial rows and keeps the tightest row per direction. Returns false on a
/// contradictory trivial row (0 <= b with b < 0, or 0 < b with b <= 0).
bool simplify(System& rows) {
    // Key: coefficient vector scaled so its first nonzero entry has magnitude 1.
    std::map<std::vector<Rational>, Row> tightest;
    for (Row& row : rows) {
        auto lead = std::find_if(row.a.begin(), row.a.end(), [](const Rational& q) { return q != 0; });
        if (lead == row.a.end()) {
            if (row.strict ? !(0 < row.b) : !(0 <= row.b)) return false;
            continue;
        }
        const Rational scale = abs(*lead);
        for (Rational& q : row.a) q /= scale;
        row.b /= scale;
        auto [it, inserted] = tightest.try_emplace(row.a, row);
        if (!inserted) {
            Row& kept = it->second;
            if (row.b < kept.b || (row.b == kept.b && row.strict)) kept = row;
        }
    }
    rows.clear();
    rows.reserve(tightest.size());
    for (auto& [key, row] : tightest) rows.push_back(std::move(row));
    return true;
}

System eliminate(const System& rows, std::size_t var) {
    System upper, lower, next;
    for (const Row& row : rows) {
        if (row.a[var] > 0) upper.push_back(row);
        else if (row.a[var] < 0) lower.push_back(row);
        else next.push_back(row);
    }
    for (const Row& up : upper) {
        for (const Row& lo : lower) {
            // Positive combination cancelling x_var.
            const Rational cu = -lo.a[var];
            const Rational cl = up.a[var];
            Row combined;
            combined.a.resize(up.a.size());
            for (std::size_t i = 0; i < up.a.size(); ++i) combined.a[i] = cu * up.a[i] + cl * lo.a[i];
            combined.a[var] = 0;
            combined.b = cu * up.b + cl * lo.b;
            combined.strict = up.strict || lo.strict;
            next.push_back(std::move(combined));
        }
    }
    return next;
}

std::size_t pick_variable(const System& rows, const std::vector<bool>& done) {
    std::size_t best = done.size();
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < done.size(); ++v) {
        if (done[v]) continue;
        std::size_t pos = 0, neg = 0;
        for (const Row& row : rows) {
            if (row.a[v] > 0) ++pos;
            else if (row.a[v] < 0) ++neg;
        }
        const std::size_t cost = pos * neg;
        if (best == done.size() || cost < best_cost) {
            best = v;
            best_cost = cost;
        }
    }
    return best;
}

/// A simple value inside the interval described by optional strict/weak bounds.
Rational choose_value(const std::optional<std::pair<Rational, bool>>& lower,
                      const std::optional<std::pair<Rational, bool>>& upper) {
    auto fits = [&](const Rational& v) {
        if (lower && (lower->second ? !(v > lower->first) : !(v >= lower->first))) return false;
        if (upper && (upper->second ? !(v < upper->first) : !(v <= upper->first))) return false;
        return true;
    };
    if (fits(0)) return 0;
    if (lower && upper) {
        const Rational mid = (lower->first + upper->first) / 2;
        mpz_class lo_int, hi_int;
        mpz_fdiv_q(lo_int.get_mpz_t(), mid.get_num_mpz_t(), mid.get_den_mpz_t());
        hi_int = lo_int + 1;
        if (fits(Rational(lo_int))) return Rational(lo_int);
        if (fits(Rational(hi_int))) return Rational(hi_int);
        return mid;
    }
    if (lower) {
        mpz_class c;
        mpz_fdiv_q(c.get_mpz_t(), lower->first.get_num_mpz_t(), lower->first.get_den_mpz_t());
        c += 1;
        return Rational(c);
    }
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), upper->first.get_num_mpz_t(), upper->first.get_den_mpz_t());
    c -= 1;
    return Rational(c);
}

}  // namespace

FeasibilityResult is_feasible(std::span<const LinearConstraint> input, int dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    // GMP comparisons assume canonical operands; hand-built mpq_class values may not be.
    std::vector<LinearConstraint> constraints(input.begin(), input.end());
    for (auto& c : constraints) {
        if (c.dim() != dim) {
            throw std::invalid_argument("constraint has " + std::to_string(c.dim()) + " coefficients, expected " +
                                        std::to_string(dim));
        }
        for (Rational& q : c.coeffs) q.canonicalize();
        c.bound.canonicalize();
    }
    System rows;
    rows.reserve(constraints.size() * 2);
    for (const auto& c : constraints) {
        if (c.relation == Relation::eq) {
            rows.push_back({c.coeffs, c.bound, false});
            Row negated{c.coeffs, -c.bound, false};
            for (Rational& q : negated.a) q = -q;
            rows.push_back(std::move(negated));
        } else {
            rows.push_back({c.coeffs, c.bound, c.relation == Relation::strict_lt});
        }
    }

    const std::size_t n = static_cast<std::size_t>(dim);
    std::vector<bool> done(n, false);
    std::vector<std::pair<std::size_t, System>> stages;
    stages.reserve(n);
    if (!simplify(rows)) return {};
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t var = pick_variable(rows, done);
        done[var] = true;
        System next = eliminate(rows, var);
        stages.emplace_back(var, std::move(rows));
        rows = std::move(next);
        if (!simplify(rows)) return {};
    }

    Point x(n, Rational(0));
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const std::size_t var = it->first;
        std::optional<std::pair<Rational, bool>> lower, upper;
        for (const Row& row : it->second) {
            if (row.a[var] == 0) continue;
            Rational rest = row.b;
            for (std::size_t i = 0; i < n; ++i) {
                if (i != var) rest -= row.a[i] * x[i];
            }
            const Rational limit = rest / row.a[var];
            if (row.a[var] > 0) {
                if (!upper || limit < upper->first || (limit == upper->first && row.strict)) upper = {{limit, row.strict}};
            } else {
                if (!lower || limit > lower->first || (limit == lower->first && row.strict)) lower = {{limit, row.strict}};
            }
        }
        x[var] = choose_value(lower, upper);
    }
    for (const auto& c : constraints) {
        if (!c.satisfied_by(x)) throw std::logic_error("feasibility witness failed substitution");
    }
    return {true, std::move(x)};
}

}  // namespace ncode
