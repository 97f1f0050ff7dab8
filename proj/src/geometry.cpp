#include "ncode/geometry.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace ncode {

const char* to_string(Topology t) { return t == Topology::open ? "open" : "closed"; }

void Polyhedron::validate() const {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    for (const auto& c : constraints) {
        if (c.dim() != dim) {
            throw std::invalid_argument("constraint has " + std::to_string(c.dim()) + " coefficients in dimension " +
                                        std::to_string(dim));
        }
    }
}

std::vector<LinearConstraint> interpreted_constraints(const Polyhedron& p, Topology topology) {
    std::vector<LinearConstraint> out = p.constraints;
    for (auto& c : out) {
        if (topology == Topology::open) {
            if (c.relation == Relation::eq) throw TopologyViolation("equality constraint in an open set");
            c.relation = Relation::strict_lt;
        } else if (c.relation == Relation::strict_lt) {
            throw TopologyViolation("strict constraint in a closed set");
        }
    }
    return out;
}

bool contains(const Polyhedron& p, Topology topology, std::span<const Rational> point) {
    const auto rows = interpreted_constraints(p, topology);
    return std::all_of(rows.begin(), rows.end(), [&](const LinearConstraint& c) { return c.satisfied_by(point); });
}

bool set_is_empty(const Polyhedron& p, Topology topology) {
    p.validate();
    return !is_feasible(interpreted_constraints(p, topology), p.dim).feasible;
}

Arrangement::Arrangement(int dim, Topology topology, std::vector<Polyhedron> sets)
    : dim_(dim), topology_(topology), sets_(std::move(sets)) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    if (static_cast<int>(sets_.size()) > kMaxNeurons) throw std::invalid_argument("too many sets");
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        Polyhedron& p = sets_[i];
        if (p.dim != dim) {
            throw std::invalid_argument("set " + std::to_string(i + 1) + " has dimension " + std::to_string(p.dim) +
                                        ", arrangement has " + std::to_string(dim));
        }
        p.validate();
        for (auto& c : p.constraints) {
            for (Rational& q : c.coeffs) q.canonicalize();
            c.bound.canonicalize();
            if (topology == Topology::open) {
                if (c.relation == Relation::eq) {
                    throw TopologyViolation("set " + std::to_string(i + 1) + ": equality constraint under open topology");
                }
                c.relation = Relation::weak_le;
            } else if (c.relation == Relation::strict_lt) {
                throw TopologyViolation("set " + std::to_string(i + 1) + ": strict constraint under closed topology");
            }
        }
    }
}

Codeword Arrangement::membership(std::span<const Rational> point) const {
    Codeword sigma;
    for (int i = 0; i < size(); ++i) {
        if (contains(sets_[i], topology_, point)) sigma = sigma.with(i + 1);
    }
    return sigma;
}

namespace {

/// The ways a point can fail one interpreted row.
std::vector<LinearConstraint> negations(const LinearConstraint& c) {
    auto flipped = [&](Relation rel) {
        LinearConstraint out{c.coeffs, rel, -c.bound};
        for (Rational& q : out.coeffs) q = -q;
        return out;
    };
    switch (c.relation) {
        case Relation::weak_le: return {flipped(Relation::strict_lt)};
        case Relation::strict_lt: return {flipped(Relation::weak_le)};
        case Relation::eq: return {LinearConstraint{c.coeffs, Relation::strict_lt, c.bound}, flipped(Relation::strict_lt)};
    }
    return {};
}

class AtomSearch {
public:
    AtomSearch(const Arrangement& arr, Codeword sigma) : arr_(arr), sigma_(sigma) {
        rows_.resize(arr.size());
        for (int i = 0; i < arr.size(); ++i) rows_[i] = interpreted_constraints(arr.sets()[i], arr.topology());
        for (int j = 1; j <= arr.size(); ++j) {
            if (!sigma.contains(j)) outside_.push_back(j);
        }
    }

    AtomResult run() {
        std::vector<LinearConstraint> region;
        for (int i : sigma_.members()) region.insert(region.end(), rows_[i - 1].begin(), rows_[i - 1].end());
        auto base = is_feasible(region, arr_.dim());
        if (!base.feasible) return {};
        return descend(region, std::move(base.witness), 0);
    }

private:
    AtomResult descend(std::vector<LinearConstraint>& region, std::optional<Point> witness, std::size_t next) {
        if (next == outside_.size()) return {true, std::move(witness)};
        const auto& avoid = rows_[outside_[next] - 1];
        // A set that misses the current region imposes nothing.
        std::vector<LinearConstraint> probe = region;
        probe.insert(probe.end(), avoid.begin(), avoid.end());
        if (!is_feasible(probe, arr_.dim()).feasible) return descend(region, std::move(witness), next + 1);

        for (const auto& row : avoid) {
            for (auto& neg : negations(row)) {
                region.push_back(std::move(neg));
                auto branch = is_feasible(region, arr_.dim());
                if (branch.feasible) {
                    AtomResult found = descend(region, std::move(branch.witness), next + 1);
                    if (found.nonempty) {
                        region.pop_back();
                        return found;
                    }
                }
                region.pop_back();
            }
        }
        return {};
    }

    const Arrangement& arr_;
    Codeword sigma_;
    std::vector<std::vector<LinearConstraint>> rows_;
    std::vector<int> outside_;
};

}  // namespace

AtomResult atom_is_nonempty(const Arrangement& arr, Codeword sigma) {
    if (!sigma.subset_of(Codeword::full(arr.size()))) {
        throw std::invalid_argument("codeword {" + sigma.to_string() + "} exceeds the arrangement's " +
                                    std::to_string(arr.size()) + " sets");
    }
    return AtomSearch(arr, sigma).run();
}

ExtractedCode extract_code(const Arrangement& arr) {
    const int n = arr.size();
    if (n > 20) throw std::invalid_argument("code extraction supports at most 20 sets");
    std::vector<std::vector<LinearConstraint>> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = interpreted_constraints(arr.sets()[i], arr.topology());

    // Nerve faces (nonempty U_sigma), breadth-first from the empty face.
    std::vector<Codeword> nerve{Codeword{}};
    std::deque<std::pair<Codeword, std::vector<LinearConstraint>>> queue;
    queue.emplace_back(Codeword{}, std::vector<LinearConstraint>{});
    while (!queue.empty()) {
        auto [face, region] = std::move(queue.front());
        queue.pop_front();
        for (int j = face.max_member() + 1; j <= n; ++j) {
            std::vector<LinearConstraint> grown = region;
            grown.insert(grown.end(), rows[j - 1].begin(), rows[j - 1].end());
            if (!is_feasible(grown, arr.dim()).feasible) continue;
            nerve.push_back(face.with(j));
            queue.emplace_back(face.with(j), std::move(grown));
        }
    }
    std::sort(nerve.begin(), nerve.end());

    std::vector<Codeword> words;
    std::vector<Point> witnesses;
    for (Codeword sigma : nerve) {
        AtomResult atom = atom_is_nonempty(arr, sigma);
        if (!atom.nonempty) continue;
        words.push_back(sigma);
        witnesses.push_back(std::move(*atom.witness));
    }
    return {NeuralCode(n, std::move(words)), std::move(witnesses)};
}

NeuralCode code_of_arrangement(const Arrangement& arr) { return extract_code(arr).code; }

Arrangement interpret_closure(const Arrangement& arr) {
    if (arr.topology() != Topology::open) throw std::invalid_argument("arrangement is already closed");
    return Arrangement(arr.dim(), Topology::closed, arr.sets());
}

bool line_meets(const Polyhedron& p, Topology topology, std::span<const Rational> point,
                std::span<const Rational> direction) {
    p.validate();
    if (static_cast<int>(point.size()) != p.dim || static_cast<int>(direction.size()) != p.dim) {
        throw std::invalid_argument("line dimension differs from polyhedron");
    }
    if (std::all_of(direction.begin(), direction.end(), [](const Rational& q) { return q == 0; })) {
        throw std::invalid_argument("line direction is zero");
    }
    std::vector<LinearConstraint> along;
    for (const auto& c : interpreted_constraints(p, topology)) {
        along.push_back({{c.lhs(direction)}, c.relation, c.bound - c.lhs(point)});
    }
    return is_feasible(along, 1).feasible;
}

}  // namespace ncode
