#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ncode/rational.hpp"

namespace ncode {

enum class Relation { weak_le, eq, strict_lt };

/// coeffs · x  <rel>  bound
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Relation relation = Relation::weak_le;
    Rational bound;

    int dim() const { return static_cast<int>(coeffs.size()); }
    Rational lhs(std::span<const Rational> point) const;
    bool satisfied_by(std::span<const Rational> point) const;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

using Point = std::vector<Rational>;

struct FeasibilityResult {
    bool feasible = false;
    /// A point satisfying every constraint (strict ones strictly) when feasible.
    std::optional<Point> witness;
};

/// Exact decision of a mixed strict/weak/equality system by Fourier–Motzkin elimination.
///
/// Throws std::invalid_argument when a constraint's length differs from `dim`.
FeasibilityResult is_feasible(std::span<const LinearConstraint> constraints, int dim);

}  // namespace ncode
