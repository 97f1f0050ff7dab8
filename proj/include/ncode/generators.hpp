#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncode/code.hpp"
#include "ncode/geometry.hpp"

namespace ncode {

/// Barred neuron i (1 <= i <= n) of the A_n family, relabeled as n + 1 + i.
inline int barred(int n, int i) { return n + 1 + i; }

/// A_n on neurons 1..2n+1: 2n+3 codewords. Throws std::invalid_argument for n < 2.
NeuralCode gen_An(int n);
/// A_n restricted to neurons 1..n+1.
NeuralCode gen_Sn(int n);
/// A_n plus the word of all barred neurons.
NeuralCode gen_Cn(int n);

/// Closed realization of C_n in R^n: barred sets are box-slabs in the nonnegative orthant, the
/// unbarred ones cut by sum(x) >= 1, and set n+1 the slab 2n <= sum(x) <= 2n+1.
Arrangement realization_Cn_Rn(int n);

/// Closed realization of A_n in R^2 (2 <= n <= 8): n segments from a common apex, each shared by
/// i and its barred twin, crossed by one transversal segment for neuron n+1.
Arrangement realization_An_R2(int n);

/// realization_An_R2 with the barred sets dropped; realizes S_n.
Arrangement realization_Sn_R2(int n);

struct Realization {
    /// Short label, e.g. "closed", "open", "r2", "rn".
    std::string tag;
    Arrangement arrangement;
    std::string provenance;
};

/// Facts each corpus entry is expected to satisfy. Unset fields are not asserted.
struct Expectations {
    std::optional<std::vector<Codeword>> maximal;
    std::optional<bool> max_intersection_complete;
    std::optional<Codeword> missing_intersection;
    std::optional<bool> locally_good;
    /// Exact set of nonempty maximal intersections absent from the code.
    std::optional<std::vector<Codeword>> locally_checked;
    std::vector<Codeword> non_mandatory;
    std::optional<long> min_betti1;
    std::optional<bool> sunflower;
};

struct CorpusEntry {
    std::string name;
    NeuralCode code;
    std::vector<Realization> realizations;
    Expectations expected;
};

/// Named codes and families with their realizations, in a fixed order.
std::vector<CorpusEntry> corpus();

std::optional<CorpusEntry> find_corpus_entry(const std::string& name);

/// Six neurons, twelve words: max-intersection incomplete yet open and closed convex.
NeuralCode six_neuron_code();
/// Six neurons realized by a fan of three triangles over a trapezoid.
NeuralCode triangle_fan_code();
/// triangle_fan_code with neurons 7 and 8 duplicating neurons 1 and 3.
NeuralCode duplicated_fan_code();
/// Eight neurons, locally good, glued from two five-neuron pieces.
NeuralCode eight_neuron_code();
/// {123, 1, 2, 3, ∅}
NeuralCode sunflower3_code();

Arrangement six_neuron_realization(Topology topology);
Arrangement triangle_fan_realization();
Arrangement duplicated_fan_realization();
/// U1 = [-9,2]x[0,2], U2 = [0,2]x[0,9], U3 = [0,11]x[0,2].
Arrangement sunflower3_realization(Topology topology);

/// Builds a codeword from compact digits, e.g. word("1457"). Only for neurons 1..9.
Codeword word(const std::string& digits);

}  // namespace ncode
