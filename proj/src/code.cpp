#include "ncode/code.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "ncode/complex.hpp"

namespace ncode {

namespace {

void check_neuron(int neuron) {
    if (neuron < 1 || neuron > kMaxNeurons) {
        throw std::invalid_argument("neuron index " + std::to_string(neuron) + " outside 1.." +
                                    std::to_string(kMaxNeurons));
    }
}

constexpr std::uint64_t bit(int neuron) { return std::uint64_t{1} << (neuron - 1); }

}  // namespace

Codeword::Codeword(std::initializer_list<int> members) {
    for (int m : members) {
        check_neuron(m);
        bits_ |= bit(m);
    }
}

Codeword Codeword::from_members(std::span<const int> members) {
    Codeword w;
    for (int m : members) {
        check_neuron(m);
        w.bits_ |= bit(m);
    }
    return w;
}

Codeword Codeword::full(int n) {
    if (n < 0 || n > kMaxNeurons) throw std::invalid_argument("neuron count out of range");
    return from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

int Codeword::size() const { return std::popcount(bits_); }

int Codeword::max_member() const { return 64 - std::countl_zero(bits_); }

bool Codeword::contains(int neuron) const {
    return neuron >= 1 && neuron <= kMaxNeurons && (bits_ & bit(neuron)) != 0;
}

Codeword Codeword::with(int neuron) const {
    check_neuron(neuron);
    return from_bits(bits_ | bit(neuron));
}

Codeword Codeword::without(int neuron) const {
    check_neuron(neuron);
    return from_bits(bits_ & ~bit(neuron));
}

std::vector<int> Codeword::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string Codeword::to_string() const {
    if (empty()) return "-";
    std::string s;
    for (int m : members()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(m);
    }
    return s;
}

std::strong_ordering operator<=>(Codeword a, Codeword b) {
    // Walk both member sequences from the smallest element; a proper prefix sorts first.
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
        int mx = std::countr_zero(x), my = std::countr_zero(y);
        if (mx != my) return mx <=> my;
        x &= x - 1;
        y &= y - 1;
    }
    if (x == 0 && y == 0) return std::strong_ordering::equal;
    return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

NeuralCode::NeuralCode(int n, std::vector<Codeword> words) : n_(n), words_(std::move(words)) {
    if (n < 0 || n > kMaxNeurons) {
        throw std::invalid_argument("neuron count " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxNeurons));
    }
    const Codeword universe = Codeword::full(n);
    for (Codeword w : words_) {
        if (!w.subset_of(universe)) {
            throw std::invalid_argument("codeword {" + w.to_string() + "} uses a neuron > " + std::to_string(n));
        }
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool NeuralCode::contains(Codeword w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::vector<Codeword> maximal_codewords(const NeuralCode& code) {
    std::vector<Codeword> out;
    const auto& words = code.words();
    for (Codeword w : words) {
        bool maximal = std::none_of(words.begin(), words.end(), [w](Codeword v) { return w.proper_subset_of(v); });
        if (maximal) out.push_back(w);
    }
    return out;
}

std::vector<MaximalIntersection> maximal_intersections(const NeuralCode& code) {
    const std::vector<Codeword> maximal = maximal_codewords(code);
    // Closure under intersecting with one more maximal word, starting from pairwise intersections.
    // Each intersection remembers the first generating family found in this deterministic order.
    std::map<Codeword, std::vector<Codeword>> found;
    std::vector<Codeword> frontier;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        for (std::size_t j = i + 1; j < maximal.size(); ++j) {
            Codeword meet = maximal[i] & maximal[j];
            if (found.emplace(meet, std::vector<Codeword>{maximal[i], maximal[j]}).second) frontier.push_back(meet);
        }
    }
    while (!frontier.empty()) {
        std::vector<Codeword> next;
        for (Codeword w : frontier) {
            for (Codeword m : maximal) {
                Codeword meet = w & m;
                if (found.contains(meet)) continue;
                std::vector<Codeword> gens = found.at(w);
                gens.push_back(m);
                std::sort(gens.begin(), gens.end());
                found.emplace(meet, std::move(gens));
                next.push_back(meet);
            }
        }
        frontier = std::move(next);
    }
    std::vector<MaximalIntersection> out;
    out.reserve(found.size());
    for (auto& [meet, gens] : found) out.push_back({meet, std::move(gens)});
    return out;
}

MaxIntersectionReport max_intersection_check(const NeuralCode& code) {
    MaxIntersectionReport report;
    for (const auto& mi : maximal_intersections(code)) {
        if (!code.contains(mi.intersection)) {
            report.complete = false;
            report.witness_words = mi.generators;
            report.missing_intersection = mi.intersection;
            break;
        }
    }
    return report;
}

Restriction restrict_to(const NeuralCode& code, Codeword tau) {
    if (!tau.subset_of(Codeword::full(code.neuron_count()))) {
        throw std::invalid_argument("restriction set {" + tau.to_string() + "} exceeds neuron count " +
                                    std::to_string(code.neuron_count()));
    }
    Restriction r;
    r.neuron_map = tau.members();
    std::vector<int> new_index(code.neuron_count() + 1, 0);
    for (std::size_t k = 0; k < r.neuron_map.size(); ++k) new_index[r.neuron_map[k]] = static_cast<int>(k) + 1;

    std::vector<Codeword> words;
    words.reserve(code.size());
    for (Codeword w : code.words()) {
        Codeword image;
        for (int m : (w & tau).members()) image = image.with(new_index[m]);
        words.push_back(image);
    }
    r.code = NeuralCode(tau.size(), std::move(words));
    return r;
}

NeuralCode permute(const NeuralCode& code, std::span<const int> image) {
    const int n = code.neuron_count();
    if (static_cast<int>(image.size()) != n) throw std::invalid_argument("permutation length differs from neuron count");
    std::vector<bool> hit(n + 1, false);
    for (int v : image) {
        if (v < 1 || v > n || hit[v]) throw std::invalid_argument("relabeling is not a bijection on 1..n");
        hit[v] = true;
    }
    std::vector<Codeword> words;
    words.reserve(code.size());
    for (Codeword w : code.words()) {
        Codeword mapped;
        for (int m : w.members()) mapped = mapped.with(image[m - 1]);
        words.push_back(mapped);
    }
    return NeuralCode(n, std::move(words));
}

AddCodewordResult add_codeword(const NeuralCode& code, Codeword sigma) {
    AddCodewordResult result;
    result.already_present = code.contains(sigma);
    std::vector<Codeword> words = code.words();
    words.push_back(sigma);
    result.code = NeuralCode(code.neuron_count(), std::move(words));
    const auto& all = result.code.words();
    result.non_maximal = std::any_of(all.begin(), all.end(), [sigma](Codeword v) { return sigma.proper_subset_of(v); });
    result.complex_preserved = simplicial_complex(code) == simplicial_complex(result.code);
    return result;
}

std::vector<std::vector<int>> duplicate_neurons(const NeuralCode& code) {
    const int n = code.neuron_count();
    // Signature of neuron i: the indices of the words containing it.
    std::map<std::vector<std::size_t>, std::vector<int>> classes;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::size_t> sig;
        for (std::size_t k = 0; k < code.size(); ++k) {
            if (code.words()[k].contains(i)) sig.push_back(k);
        }
        classes[sig].push_back(i);
    }
    std::vector<std::vector<int>> out;
    for (auto& [sig, members] : classes) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_sunflower_code(const NeuralCode& code) {
    const Codeword everything = Codeword::full(code.neuron_count());
    if (!code.contains(everything)) return false;
    return std::all_of(code.words().begin(), code.words().end(),
                       [everything](Codeword w) { return w == everything || w.size() <= 1; });
}

}  // namespace ncode
