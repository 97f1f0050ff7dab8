#pragma once

#include <vector>

#include "ncode/code.hpp"

namespace ncode {

/// An abstract simplicial complex on the vertex universe 1..n, stored by its facets.
///
/// The void complex has no faces at all; the complex {∅} has the single facet ∅.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Keeps only the inclusion-maximal members of `generators`.
    SimplicialComplex(int n, std::vector<Codeword> generators);

    int universe() const { return n_; }
    const std::vector<Codeword>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    /// True for the void complex and for {∅}.
    bool has_no_vertices() const { return facets_.empty() || (facets_.size() == 1 && facets_[0].empty()); }
    bool contains(Codeword face) const;
    /// Dimension of the largest facet; -1 for {∅}, -2 for the void complex.
    int dimension() const;
    Codeword vertex_set() const;

    /// Every face including ∅, sorted.
    std::vector<Codeword> faces() const;
    /// f[k] = number of faces with k+1 vertices (k >= 0).
    std::vector<long> f_vector() const;
    /// Sum over nonempty faces of (-1)^dim.
    long euler_characteristic() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int n_ = 0;
    std::vector<Codeword> facets_;
};

/// The smallest simplicial complex containing every codeword.
SimplicialComplex simplicial_complex(const NeuralCode& code);

}  // namespace ncode
