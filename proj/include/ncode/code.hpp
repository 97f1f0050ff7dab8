#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncode {

/// Largest supported neuron count. Codewords are 64-bit masks.
inline constexpr int kMaxNeurons = 64;

/// A subset of neurons 1..64, stored as a bit mask (bit i-1 <-> neuron i).
class Codeword {
public:
    constexpr Codeword() = default;
    Codeword(std::initializer_list<int> members);

    static Codeword from_members(std::span<const int> members);
    static constexpr Codeword from_bits(std::uint64_t bits) { Codeword w; w.bits_ = bits; return w; }
    /// {1, ..., n}
    static Codeword full(int n);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const;
    /// Largest member, or 0 for the empty word.
    int max_member() const;
    bool contains(int neuron) const;
    constexpr bool subset_of(Codeword other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(Codeword other) const { return subset_of(other) && bits_ != other.bits_; }

    Codeword with(int neuron) const;
    Codeword without(int neuron) const;

    std::vector<int> members() const;

    /// Members separated by single spaces; "-" for the empty word.
    std::string to_string() const;

    friend constexpr Codeword operator&(Codeword a, Codeword b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr Codeword operator|(Codeword a, Codeword b) { return from_bits(a.bits_ | b.bits_); }
    /// Set difference.
    friend constexpr Codeword operator-(Codeword a, Codeword b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Codeword a, Codeword b) { return a.bits_ == b.bits_; }

    /// Lexicographic order on increasing member sequences; the empty word is smallest.
    friend std::strong_ordering operator<=>(Codeword a, Codeword b);

private:
    std::uint64_t bits_ = 0;
};

struct CodewordHash {
    std::size_t operator()(Codeword w) const noexcept { return std::hash<std::uint64_t>{}(w.bits()); }
};

class SimplicialComplex;

/// A neural code: a set of codewords over the neurons 1..n.
///
/// Words are kept sorted and deduplicated, so equality is set equality on (n, words).
class NeuralCode {
public:
    NeuralCode() = default;
    /// Throws std::invalid_argument if n is out of range or a word uses a neuron > n.
    NeuralCode(int n, std::vector<Codeword> words);

    int neuron_count() const { return n_; }
    const std::vector<Codeword>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool contains(Codeword w) const;

    friend bool operator==(const NeuralCode&, const NeuralCode&) = default;

private:
    int n_ = 0;
    std::vector<Codeword> words_;
};

/// Words not strictly contained in another word of the code, in sorted order.
std::vector<Codeword> maximal_codewords(const NeuralCode& code);

struct MaxIntersectionReport {
    bool complete = true;
    /// On failure: the maximal words whose intersection is missing, and that intersection.
    std::vector<Codeword> witness_words;
    std::optional<Codeword> missing_intersection;
};

/// Every intersection of two or more maximal codewords is a codeword.
MaxIntersectionReport max_intersection_check(const NeuralCode& code);

/// An intersection of two or more maximal codewords together with one generating family.
struct MaximalIntersection {
    Codeword intersection;
    std::vector<Codeword> generators;
};

/// All distinct intersections of >= 2 maximal codewords, sorted by intersection.
std::vector<MaximalIntersection> maximal_intersections(const NeuralCode& code);

struct Restriction {
    NeuralCode code;
    /// neuron_map[k] is the original index of restricted neuron k+1.
    std::vector<int> neuron_map;
};

/// {sigma & tau}, reindexed to 1..|tau| in increasing original order.
Restriction restrict_to(const NeuralCode& code, Codeword tau);

/// Relabels neuron i as image[i-1]. `image` must be a bijection on 1..n.
NeuralCode permute(const NeuralCode& code, std::span<const int> image);

struct AddCodewordResult {
    NeuralCode code;
    bool already_present = false;
    /// sigma is strictly contained in some word of the result.
    bool non_maximal = false;
    /// The simplicial complex is unchanged by the addition.
    bool complex_preserved = false;
};

AddCodewordResult add_codeword(const NeuralCode& code, Codeword sigma);

/// Classes of neurons that fire in exactly the same codewords, each sorted, ordered by smallest member.
std::vector<std::vector<int>> duplicate_neurons(const NeuralCode& code);

/// [n] is a codeword and every other codeword has at most one neuron.
bool is_sunflower_code(const NeuralCode& code);

}  // namespace ncode
