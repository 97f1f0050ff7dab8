#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ncode/code.hpp"
#include "ncode/feasibility.hpp"

namespace ncode {

enum class Topology { open, closed };

const char* to_string(Topology t);

/// Raised when a set's constraints are incompatible with the arrangement's topology.
class TopologyViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A convex polyhedron given by an H-representation in R^dim.
struct Polyhedron {
    int dim = 0;
    std::vector<LinearConstraint> constraints;

    /// Throws std::invalid_argument if some constraint has the wrong length.
    void validate() const;

    friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
};

/// The constraints of `p` as the given topology reads them: under OPEN every inequality is strict.
/// Throws TopologyViolation for an equality under OPEN or a strict row under CLOSED.
std::vector<LinearConstraint> interpreted_constraints(const Polyhedron& p, Topology topology);

bool contains(const Polyhedron& p, Topology topology, std::span<const Rational> point);

bool set_is_empty(const Polyhedron& p, Topology topology);

/// Sets U_1..U_n in R^dim sharing one topology.
class Arrangement {
public:
    Arrangement() = default;
    /// Validates dimensions and topology rules. Under OPEN, strict rows are stored as weak ones
    /// (the two read identically).
    Arrangement(int dim, Topology topology, std::vector<Polyhedron> sets);

    int dim() const { return dim_; }
    Topology topology() const { return topology_; }
    const std::vector<Polyhedron>& sets() const { return sets_; }
    int size() const { return static_cast<int>(sets_.size()); }

    /// { i : point ∈ U_i }
    Codeword membership(std::span<const Rational> point) const;

    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    int dim_ = 0;
    Topology topology_ = Topology::closed;
    std::vector<Polyhedron> sets_;
};

struct AtomResult {
    bool nonempty = false;
    std::optional<Point> witness;
};

/// Decides whether U_sigma minus the union of the other sets is nonempty.
AtomResult atom_is_nonempty(const Arrangement& arr, Codeword sigma);

/// code(U, R^d). Requires at most 20 sets.
NeuralCode code_of_arrangement(const Arrangement& arr);

/// Same as code_of_arrangement, also returning one witness point per codeword (in word order).
struct ExtractedCode {
    NeuralCode code;
    std::vector<Point> witnesses;
};
ExtractedCode extract_code(const Arrangement& arr);

/// Reads an OPEN arrangement's rows weakly. Throws std::invalid_argument for CLOSED input.
Arrangement interpret_closure(const Arrangement& arr);

/// Whether the line { point + t * direction } meets the topology-interpreted set.
bool line_meets(const Polyhedron& p, Topology topology, std::span<const Rational> point,
                std::span<const Rational> direction);

}  // namespace ncode
