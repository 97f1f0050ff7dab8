#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ncode/code.hpp"
#include "ncode/complex.hpp"

namespace ncode {

/// Thrown when a link is requested for a set that is not a face.
class FaceNotFound : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Lk_sigma(cpx) = { tau ⊆ [n] \ sigma : sigma ∪ tau ∈ cpx }.
SimplicialComplex link(const SimplicialComplex& cpx, Codeword sigma);

/// Reduced rational Betti numbers; ranks[k] is the rank in dimension k.
///
/// Empty for complexes without vertices (the void complex and {∅}).
struct BettiVector {
    std::vector<long> ranks;

    long at(int dim) const { return dim >= 0 && dim < static_cast<int>(ranks.size()) ? ranks[dim] : 0; }
    bool is_zero() const;
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector reduced_homology(const SimplicialComplex& cpx);

/// Rank over Q of an integer matrix, by exact rational elimination.
std::size_t rational_rank(std::vector<std::vector<long>> rows);

enum class Contractibility { contractible, non_contractible, unknown };

const char* to_string(Contractibility c);

namespace certificate {
struct ConeApex {
    int apex;
};
/// Each step removes the free face `free_face` together with its unique coface `coface`.
struct CollapseSequence {
    std::vector<std::pair<Codeword, Codeword>> steps;
};
/// The complex has no vertices, so its geometric realization is empty.
struct EmptyComplex {};
struct NonzeroBetti {
    int dimension;
    long rank;
};
struct None {};
}  // namespace certificate

using Certificate = std::variant<certificate::None, certificate::ConeApex, certificate::CollapseSequence,
                                 certificate::EmptyComplex, certificate::NonzeroBetti>;

struct ContractibilityStatus {
    Contractibility verdict = Contractibility::unknown;
    Certificate certificate;
    /// Collapse-search states explored (0 when the search was not needed).
    std::size_t states_explored = 0;
};

struct ContractibilityOptions {
    std::size_t collapse_state_budget = 1'000'000;
};

ContractibilityStatus contractibility(const SimplicialComplex& cpx, const ContractibilityOptions& options = {});

/// Re-derives the verdict from the certificate alone.
bool certificate_is_valid(const SimplicialComplex& cpx, const ContractibilityStatus& status);

/// One line summary, e.g. "cone apex 3" or "collapse sequence of 4 steps".
std::string describe(const Certificate& cert);

/// Status of Lk_sigma for every nonempty face sigma; NON_CONTRACTIBLE marks a mandatory codeword.
std::map<Codeword, ContractibilityStatus> mandatory_codewords(const SimplicialComplex& cpx,
                                                              const ContractibilityOptions& options = {});

enum class Verdict { yes, no, unknown };

const char* to_string(Verdict v);

struct LocalCheck {
    Codeword face;
    SimplicialComplex link;
    ContractibilityStatus status;
};

struct LocallyGoodReport {
    Verdict verdict = Verdict::yes;
    /// Nonempty intersections of >= 2 maximal codewords absent from the code, sorted.
    std::vector<LocalCheck> checked;
};

/// A code is locally good iff every nonempty intersection of maximal codewords missing from the code
/// has a contractible link in Δ(code).
LocallyGoodReport is_locally_good(const NeuralCode& code, const ContractibilityOptions& options = {});

}  // namespace ncode
