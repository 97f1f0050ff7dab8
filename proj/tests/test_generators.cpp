#include <doctest.h>

#include "ncode/complex.hpp"
#include "ncode/generators.hpp"
#include "ncode/geometry.hpp"

using namespace ncode;

TEST_CASE("the two-petal segment family, clause by clause") {
    // 1bar -> 4, 2bar -> 5.
    const NeuralCode a2 = gen_An(2);
    CHECK(a2 == NeuralCode(5, {word("1245"), word("3"), Codeword{}, word("134"), word("235"), word("14"), word("25")}));
    CHECK(a2.size() == 7);
}

TEST_CASE("family sizes") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(gen_An(n).size() == static_cast<std::size_t>(2 * n + 3));
        CHECK(gen_An(n).neuron_count() == 2 * n + 1);
        CHECK(gen_Cn(n).size() == static_cast<std::size_t>(2 * n + 4));
    }
    CHECK_THROWS_AS(gen_An(1), std::invalid_argument);
    CHECK_THROWS_AS(gen_Sn(1), std::invalid_argument);
    CHECK_THROWS_AS(gen_Cn(0), std::invalid_argument);
}

TEST_CASE("S_n is the restriction of A_n to the first n+1 neurons") {
    CHECK(gen_Sn(2) == NeuralCode(3, {word("12"), word("13"), word("23"), word("1"), word("2"), word("3"), Codeword{}}));
    for (int n = 2; n <= 6; ++n) CHECK(gen_Sn(n) == restrict_to(gen_An(n), Codeword::full(n + 1)).code);
    CHECK(maximal_codewords(gen_Sn(3)) == std::vector<Codeword>{word("123"), word("14"), word("24"), word("34")});
}

TEST_CASE("C_n adds the bar word without changing the complex") {
    for (int n = 2; n <= 6; ++n) {
        const Codeword bars = Codeword::full(2 * n + 1) - Codeword::full(n + 1);
        const auto added = add_codeword(gen_An(n), bars);
        CHECK(added.code == gen_Cn(n));
        CHECK_FALSE(added.already_present);
        CHECK(added.non_maximal);
        CHECK(simplicial_complex(gen_Cn(n)) == simplicial_complex(gen_An(n)));
    }
}

TEST_CASE("duplicated fan code") {
    const NeuralCode c = duplicated_fan_code();
    CHECK(c.size() == 10);
    CHECK(c.neuron_count() == 8);
    CHECK(restrict_to(c, Codeword::full(6)).code == triangle_fan_code());
}

TEST_CASE("corpus layout") {
    const auto entries = corpus();
    std::vector<std::string> names;
    for (const auto& e : entries) names.push_back(e.name);
    const std::vector<std::string> expected{"eq1", "c0", "thm3_2", "thm3_2_plus278", "thm3_10", "sunflower3",
                                            "an2", "an3", "an4", "an5", "sn2", "sn3", "sn4", "sn5",
                                            "cn2", "cn3", "cn4", "cn5"};
    CHECK(names == expected);
    CHECK(find_corpus_entry("thm3_10").has_value());
    CHECK_FALSE(find_corpus_entry("nope").has_value());
    CHECK(find_corpus_entry("thm3_10")->realizations.empty());
    CHECK(find_corpus_entry("thm3_2_plus278")->realizations.empty());
    CHECK(find_corpus_entry("eq1")->realizations.size() == 2);
    CHECK(*find_corpus_entry("eq1")->expected.missing_intersection == word("3"));
    CHECK(*find_corpus_entry("thm3_10")->expected.locally_good);
}

TEST_CASE("realizations of the smaller corpus entries round-trip") {
    for (const auto& e : corpus()) {
        for (const auto& r : e.realizations) {
            if (r.arrangement.size() > 9) continue;  // the acceptance suite covers the large ones
            CAPTURE(e.name);
            CAPTURE(r.tag);
            CHECK(code_of_arrangement(r.arrangement) == e.code);
        }
    }
}

TEST_CASE("word helper") {
    CHECK(word("") == Codeword{});
    CHECK(word("3146") == Codeword{1, 3, 4, 6});
    CHECK_THROWS_AS(word("1a"), std::invalid_argument);
}
