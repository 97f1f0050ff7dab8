#include "ncode/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ncode {

SimplicialComplex::SimplicialComplex(int n, std::vector<Codeword> generators) : n_(n) {
    if (n < 0 || n > kMaxNeurons) throw std::invalid_argument("vertex universe out of range");
    const Codeword universe = Codeword::full(n);
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (Codeword g : generators) {
        if (!g.subset_of(universe)) throw std::invalid_argument("face {" + g.to_string() + "} exceeds vertex universe");
        bool maximal = std::none_of(generators.begin(), generators.end(),
                                    [g](Codeword other) { return g.proper_subset_of(other); });
        if (maximal) facets_.push_back(g);
    }
}

bool SimplicialComplex::contains(Codeword face) const {
    return std::any_of(facets_.begin(), facets_.end(), [face](Codeword f) { return face.subset_of(f); });
}

int SimplicialComplex::dimension() const {
    if (facets_.empty()) return -2;
    int best = 0;
    for (Codeword f : facets_) best = std::max(best, f.size());
    return best - 1;
}

Codeword SimplicialComplex::vertex_set() const {
    Codeword v;
    for (Codeword f : facets_) v = v | f;
    return v;
}

std::vector<Codeword> SimplicialComplex::faces() const {
    std::unordered_set<Codeword, CodewordHash> seen;
    for (Codeword f : facets_) {
        // Enumerate submasks of the facet.
        const std::uint64_t full = f.bits();
        std::uint64_t sub = full;
        while (true) {
            seen.insert(Codeword::from_bits(sub));
            if (sub == 0) break;
            sub = (sub - 1) & full;
        }
    }
    std::vector<Codeword> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
    std::vector<long> f(std::max(dimension() + 1, 0), 0);
    for (Codeword face : faces()) {
        if (!face.empty()) ++f[face.size() - 1];
    }
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    const auto f = f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0) ? f[k] : -f[k];
    return chi;
}

SimplicialComplex simplicial_complex(const NeuralCode& code) {
    return SimplicialComplex(code.neuron_count(), code.words());
}

}  // namespace ncode
