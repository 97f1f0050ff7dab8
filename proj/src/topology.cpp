#include "ncode/topology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ncode {

SimplicialComplex link(const SimplicialComplex& cpx, Codeword sigma) {
    if (!cpx.contains(sigma)) {
        std::string members = sigma.to_string();
        std::replace(members.begin(), members.end(), ' ', ',');
        throw FaceNotFound("{" + members + "} is not a face of the complex");
    }
    std::vector<Codeword> pieces;
    for (Codeword f : cpx.facets()) {
        if (sigma.subset_of(f)) pieces.push_back(f - sigma);
    }
    return SimplicialComplex(cpx.universe(), std::move(pieces));
}

bool BettiVector::is_zero() const {
    return std::all_of(ranks.begin(), ranks.end(), [](long r) { return r == 0; });
}

std::size_t rational_rank(std::vector<std::vector<long>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = rows[r][c];
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const mpq_class factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

namespace {

/// Nonempty faces grouped by dimension.
using FaceLevels = std::vector<std::vector<Codeword>>;

FaceLevels levels_of(const std::vector<Codeword>& faces) {
    FaceLevels levels;
    for (Codeword f : faces) {
        if (f.empty()) continue;
        const std::size_t dim = static_cast<std::size_t>(f.size() - 1);
        if (levels.size() <= dim) levels.resize(dim + 1);
        levels[dim].push_back(f);
    }
    return levels;
}

BettiVector betti_from_levels(const FaceLevels& levels) {
    BettiVector out;
    if (levels.empty()) return out;
    // rank_of_boundary[k] = rank of the boundary map from k-faces; k = 0 is the augmentation.
    std::vector<std::size_t> rank_of_boundary(levels.size() + 1, 0);
    rank_of_boundary[0] = levels[0].empty() ? 0 : 1;
    for (std::size_t k = 1; k < levels.size(); ++k) {
        const auto& lower = levels[k - 1];
        std::unordered_map<Codeword, std::size_t, CodewordHash> column;
        for (std::size_t i = 0; i < lower.size(); ++i) column.emplace(lower[i], i);
        std::vector<std::vector<long>> rows;
        rows.reserve(levels[k].size());
        for (Codeword face : levels[k]) {
            std::vector<long> row(lower.size(), 0);
            long sign = 1;
            for (int v : face.members()) {
                row[column.at(face.without(v))] = sign;
                sign = -sign;
            }
            rows.push_back(std::move(row));
        }
        rank_of_boundary[k] = rational_rank(std::move(rows));
    }
    out.ranks.resize(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) {
        out.ranks[k] = static_cast<long>(levels[k].size()) - static_cast<long>(rank_of_boundary[k]) -
                       static_cast<long>(rank_of_boundary[k + 1]);
    }
    return out;
}

/// Faces of the nerve of the facet cover: index sets of facets with a common vertex.
/// Returns nullopt once more than `limit` faces have been produced.
std::optional<std::vector<Codeword>> facet_nerve_faces(const std::vector<Codeword>& facets, std::size_t limit) {
    std::vector<Codeword> out;
    const int m = static_cast<int>(facets.size());
    bool overflow = false;
    auto extend = [&](auto&& self, Codeword chosen, Codeword common, int next) -> void {
        for (int i = next; i < m && !overflow; ++i) {
            Codeword meet = common & facets[i];
            if (meet.empty()) continue;
            Codeword face = chosen.with(i + 1);
            out.push_back(face);
            if (out.size() > limit) {
                overflow = true;
                return;
            }
            self(self, face, meet, i + 1);
        }
    };
    for (int i = 0; i < m && !overflow; ++i) {
        out.push_back(Codeword{i + 1});
        if (out.size() > limit) {
            overflow = true;
        } else {
            extend(extend, Codeword{i + 1}, facets[i], i + 1);
        }
    }
    if (overflow) return std::nullopt;
    return out;
}

}  // namespace

BettiVector reduced_homology(const SimplicialComplex& cpx) {
    if (cpx.has_no_vertices()) return {};
    const auto& facets = cpx.facets();
    BettiVector result;
    // Facets are simplices and every nonempty intersection of simplices is a simplex, so the
    // complex and the nerve of its facet cover have the same homology. Use whichever is smaller.
    std::size_t direct_bound = 0;
    for (Codeword f : facets) direct_bound += (std::size_t{1} << std::min(f.size(), 62));
    if (facets.size() <= static_cast<std::size_t>(kMaxNeurons)) {
        if (auto nerve = facet_nerve_faces(facets, direct_bound / 2)) {
            result = betti_from_levels(levels_of(*nerve));
        } else {
            result = betti_from_levels(levels_of(cpx.faces()));
        }
    } else {
        result = betti_from_levels(levels_of(cpx.faces()));
    }
    // Pad or trim to the dimension of the complex itself.
    result.ranks.resize(static_cast<std::size_t>(cpx.dimension() + 1), 0);
    return result;
}

const char* to_string(Contractibility c) {
    switch (c) {
        case Contractibility::contractible: return "CONTRACTIBLE";
        case Contractibility::non_contractible: return "NON_CONTRACTIBLE";
        case Contractibility::unknown: return "UNKNOWN";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "true";
        case Verdict::no: return "false";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

namespace {

using FacetList = std::vector<Codeword>;

struct FacetListHash {
    std::size_t operator()(const FacetList& list) const noexcept {
        std::size_t h = list.size();
        for (Codeword w : list) h ^= CodewordHash{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

bool is_single_vertex(const FacetList& facets) { return facets.size() == 1 && facets[0].size() == 1; }

/// Applies the elementary collapse removing `free_face` and `coface`; nullopt if the pair is not a
/// valid collapse in `facets`.
std::optional<FacetList> collapse(const FacetList& facets, Codeword free_face, Codeword coface) {
    if (free_face.empty() || !free_face.proper_subset_of(coface) || coface.size() != free_face.size() + 1) {
        return std::nullopt;
    }
    auto it = std::find(facets.begin(), facets.end(), coface);
    if (it == facets.end()) return std::nullopt;
    FacetList rest;
    rest.reserve(facets.size() + coface.size());
    for (Codeword f : facets) {
        if (f == coface) continue;
        if (free_face.subset_of(f)) return std::nullopt;
        rest.push_back(f);
    }
    const std::size_t kept = rest.size();
    for (int u : free_face.members()) {
        Codeword boundary = coface.without(u);
        bool covered = std::any_of(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(kept),
                                   [boundary](Codeword f) { return boundary.subset_of(f); });
        if (!covered) rest.push_back(boundary);
    }
    std::sort(rest.begin(), rest.end());
    return rest;
}

class CollapseSearch {
public:
    explicit CollapseSearch(std::size_t budget) : budget_(budget) {}

    bool run(const FacetList& start) { return visit(start); }

    const std::vector<std::pair<Codeword, Codeword>>& steps() const { return steps_; }
    std::size_t explored() const { return explored_; }
    bool exhausted_budget() const { return out_of_budget_; }

private:
    bool visit(const FacetList& state) {
        if (is_single_vertex(state)) return true;
        if (out_of_budget_) return false;
        if (!visited_.insert(state).second) return false;
        if (++explored_ > budget_) {
            out_of_budget_ = true;
            return false;
        }
        for (Codeword sigma : state) {
            if (sigma.size() < 2) continue;
            for (int v : sigma.members()) {
                const Codeword tau = sigma.without(v);
                auto next = collapse(state, tau, sigma);
                if (!next) continue;
                steps_.emplace_back(tau, sigma);
                if (visit(*next)) return true;
                steps_.pop_back();
                if (out_of_budget_) return false;
            }
        }
        return false;
    }

    std::size_t budget_;
    std::size_t explored_ = 0;
    bool out_of_budget_ = false;
    std::unordered_set<FacetList, FacetListHash> visited_;
    std::vector<std::pair<Codeword, Codeword>> steps_;
};

}  // namespace

ContractibilityStatus contractibility(const SimplicialComplex& cpx, const ContractibilityOptions& options) {
    ContractibilityStatus status;
    if (cpx.has_no_vertices()) {
        status.verdict = Contractibility::non_contractible;
        status.certificate = certificate::EmptyComplex{};
        return status;
    }
    Codeword common = cpx.facets().front();
    for (Codeword f : cpx.facets()) common = common & f;
    if (!common.empty()) {
        status.verdict = Contractibility::contractible;
        status.certificate = certificate::ConeApex{common.members().front()};
        return status;
    }
    const BettiVector betti = reduced_homology(cpx);
    for (std::size_t k = 0; k < betti.ranks.size(); ++k) {
        if (betti.ranks[k] != 0) {
            status.verdict = Contractibility::non_contractible;
            status.certificate = certificate::NonzeroBetti{static_cast<int>(k), betti.ranks[k]};
            return status;
        }
    }
    CollapseSearch search(options.collapse_state_budget);
    const bool collapsed = search.run(cpx.facets());
    status.states_explored = search.explored();
    if (collapsed) {
        status.verdict = Contractibility::contractible;
        status.certificate = certificate::CollapseSequence{search.steps()};
    }
    return status;
}

bool certificate_is_valid(const SimplicialComplex& cpx, const ContractibilityStatus& status) {
    return std::visit(
        [&](const auto& cert) -> bool {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, certificate::None>) {
                return status.verdict == Contractibility::unknown;
            } else if constexpr (std::is_same_v<T, certificate::ConeApex>) {
                if (status.verdict != Contractibility::contractible || cpx.has_no_vertices()) return false;
                return std::all_of(cpx.facets().begin(), cpx.facets().end(),
                                   [&](Codeword f) { return f.contains(cert.apex); });
            } else if constexpr (std::is_same_v<T, certificate::CollapseSequence>) {
                if (status.verdict != Contractibility::contractible) return false;
                FacetList state = cpx.facets();
                for (const auto& [free_face, coface] : cert.steps) {
                    auto next = collapse(state, free_face, coface);
                    if (!next) return false;
                    state = std::move(*next);
                }
                return is_single_vertex(state);
            } else if constexpr (std::is_same_v<T, certificate::EmptyComplex>) {
                return status.verdict == Contractibility::non_contractible && cpx.has_no_vertices();
            } else {
                return status.verdict == Contractibility::non_contractible && cert.rank > 0 &&
                       reduced_homology(cpx).at(cert.dimension) == cert.rank;
            }
        },
        status.certificate);
}

std::string describe(const Certificate& cert) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, certificate::None>) {
                return "no certificate (collapse search budget exhausted)";
            } else if constexpr (std::is_same_v<T, certificate::ConeApex>) {
                return "cone apex " + std::to_string(c.apex);
            } else if constexpr (std::is_same_v<T, certificate::CollapseSequence>) {
                return "collapse sequence of " + std::to_string(c.steps.size()) + (c.steps.size() == 1 ? " step" : " steps");
            } else if constexpr (std::is_same_v<T, certificate::EmptyComplex>) {
                return "empty complex";
            } else {
                return "reduced Betti_" + std::to_string(c.dimension) + " = " + std::to_string(c.rank);
            }
        },
        cert);
}

std::map<Codeword, ContractibilityStatus> mandatory_codewords(const SimplicialComplex& cpx,
                                                              const ContractibilityOptions& options) {
    std::map<Codeword, ContractibilityStatus> out;
    for (Codeword face : cpx.faces()) {
        if (face.empty()) continue;
        out.emplace(face, contractibility(link(cpx, face), options));
    }
    return out;
}

LocallyGoodReport is_locally_good(const NeuralCode& code, const ContractibilityOptions& options) {
    LocallyGoodReport report;
    const SimplicialComplex delta = simplicial_complex(code);
    bool any_unknown = false;
    bool any_bad = false;
    for (const auto& mi : maximal_intersections(code)) {
        if (mi.intersection.empty() || code.contains(mi.intersection)) continue;
        LocalCheck check{mi.intersection, link(delta, mi.intersection), {}};
        check.status = contractibility(check.link, options);
        any_bad = any_bad || check.status.verdict == Contractibility::non_contractible;
        any_unknown = any_unknown || check.status.verdict == Contractibility::unknown;
        report.checked.push_back(std::move(check));
    }
    report.verdict = any_bad ? Verdict::no : (any_unknown ? Verdict::unknown : Verdict::yes);
    return report;
}

}  // namespace ncode
