#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncode/cli.hpp"
#include "ncode/formats.hpp"
#include "ncode/generators.hpp"

using namespace ncode;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run ncode_cmd(std::vector<std::string> args) {
    args.insert(args.begin(), "ncode");
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) { return (std::filesystem::path(NCODE_CORPUS_DIR) / name).string(); }

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("ncode_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("analyze the six-neuron code") {
    const Run r = ncode_cmd({"analyze", corpus_file("eq1.code")});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("maximal codewords (4): {1,2,3} {1,2,4} {1,3,5} {2,3,6}") != std::string::npos);
    CHECK(r.out.find("max-intersection complete: false") != std::string::npos);
    CHECK(r.out.find("{1,3,5} & {2,3,6} = {3} (not a codeword)") != std::string::npos);
    CHECK(r.out.find("locally good: true") != std::string::npos);
    CHECK(r.out.find("  {3} non-mandatory CONTRACTIBLE absent") != std::string::npos);
    CHECK(r.out.find("  {4} non-mandatory CONTRACTIBLE absent") != std::string::npos);
    CHECK(r.out.find("homology") == std::string::npos);
}

TEST_CASE("analyze with homology") {
    const Run r = ncode_cmd({"analyze", corpus_file("cn2.code"), "--homology"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("reduced Betti numbers: 0 1") != std::string::npos);
}

TEST_CASE("analyze the eight-neuron code") {
    const Run r = ncode_cmd({"analyze", corpus_file("thm3_10.code")});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.find("locally good: true") != std::string::npos);
    CHECK(r.out.find("checked intersections (3): {1} {3} {7}") != std::string::npos);
}

TEST_CASE("analyze rejects bad input") {
    const auto dir = scratch_dir("analyze");
    std::ofstream(dir / "empty.code").close();
    CHECK(ncode_cmd({"analyze", (dir / "empty.code").string()}).status == cli::kError);
    CHECK(ncode_cmd({"analyze", (dir / "missing.code").string()}).status == cli::kError);
    CHECK(ncode_cmd({"analyze"}).status == cli::kError);
    CHECK(ncode_cmd({"frobnicate"}).status == cli::kError);
    CHECK(ncode_cmd({}).status == cli::kError);
}

TEST_CASE("code-of") {
    const Run r = ncode_cmd({"code-of", corpus_file("sunflower3.arr")});
    CHECK(r.status == cli::kOk);
    CHECK(r.out == serialize_code(sunflower3_code()));
    CHECK(ncode_cmd({"code-of", corpus_file("cn2.arr")}).out == serialize_code(gen_Cn(2)));

    const auto dir = scratch_dir("code_of");
    std::ofstream(dir / "bad.arr") << "dimension: 2\ntopology: open\nset 1\n1 0 = 0\n";
    const Run bad = ncode_cmd({"code-of", (dir / "bad.arr").string()});
    CHECK(bad.status == cli::kError);
    CHECK(bad.err.find("equality") != std::string::npos);
}

TEST_CASE("verify") {
    CHECK(ncode_cmd({"verify", corpus_file("c0.arr"), corpus_file("c0.code")}).status == cli::kOk);
    CHECK(ncode_cmd({"verify", corpus_file("thm3_2.arr"), corpus_file("thm3_2.code")}).status == cli::kOk);
    const Run mismatch = ncode_cmd({"verify", corpus_file("c0.arr"), corpus_file("eq1.code")});
    CHECK(mismatch.status == cli::kMismatch);
    CHECK(mismatch.out.find("only in arrangement: {1,4,5}") != std::string::npos);
    CHECK(mismatch.out.find("only in code file: {1,2}") != std::string::npos);
    CHECK(ncode_cmd({"verify", corpus_file("c0.arr"), corpus_file("nope.code")}).status == cli::kError);
}

TEST_CASE("gen") {
    const Run an3 = ncode_cmd({"gen", "an", "--n", "3"});
    CHECK(an3.status == cli::kOk);
    CHECK(parse_code(an3.out).size() == 9);
    const Run cn2 = ncode_cmd({"gen", "cn", "--n", "2", "--realization", "rn"});
    CHECK(cn2.status == cli::kOk);
    CHECK(cn2.out == serialize_arrangement(realization_Cn_Rn(2)));
    CHECK(ncode_cmd({"gen", "an", "--n", "1"}).status == cli::kError);
    CHECK(ncode_cmd({"gen", "an"}).status == cli::kError);
    CHECK(ncode_cmd({"gen", "an", "--n", "9", "--realization", "r2"}).status == cli::kError);
    CHECK(ncode_cmd({"gen", "zz", "--n", "3"}).status == cli::kError);
    CHECK(ncode_cmd({"gen", "eq1"}).out == serialize_code(six_neuron_code()));
    CHECK(ncode_cmd({"gen", "corpus"}).status == cli::kError);
    // Byte determinism.
    CHECK(ncode_cmd({"gen", "an", "--n", "4", "--realization", "r2"}).out ==
          ncode_cmd({"gen", "an", "--n", "4", "--realization", "r2"}).out);
}

TEST_CASE("gen writes files into a directory") {
    const auto dir = scratch_dir("gen");
    CHECK(ncode_cmd({"gen", "sunflower3", "-o", dir.string()}).status == cli::kOk);
    CHECK(std::filesystem::exists(dir / "sunflower3.code"));
    CHECK(std::filesystem::exists(dir / "sunflower3.arr"));
    CHECK(std::filesystem::exists(dir / "sunflower3_open.arr"));
    CHECK(ncode_cmd({"verify", (dir / "sunflower3_open.arr").string(), (dir / "sunflower3.code").string()}).status ==
          cli::kOk);
}

TEST_CASE("link") {
    const Run three = ncode_cmd({"link", corpus_file("eq1.code"), "--face", "3"});
    CHECK(three.status == cli::kOk);
    CHECK(three.out.find("link of {3}: {1,2} {1,5} {2,6}") != std::string::npos);
    CHECK(three.out.find("status: CONTRACTIBLE") != std::string::npos);
    const Run four = ncode_cmd({"link", corpus_file("eq1.code"), "--face", "4"});
    CHECK(four.out.find("link of {4}: {1,2}\n") != std::string::npos);
    CHECK(four.out.find("status: CONTRACTIBLE") != std::string::npos);
    const Run bad = ncode_cmd({"link", corpus_file("eq1.code"), "--face", "6 5"});
    CHECK(bad.status == cli::kError);
    CHECK(bad.err.find("{5,6} is not a face") != std::string::npos);
    CHECK(ncode_cmd({"link", corpus_file("eq1.code"), "--face", "x"}).status == cli::kError);
}

TEST_CASE("verify accepts the output of code-of for every shipped arrangement") {
    const auto dir = scratch_dir("roundtrip");
    for (const auto& p : std::filesystem::directory_iterator(NCODE_CORPUS_DIR)) {
        if (p.path().extension() != ".arr") continue;
        const auto size = parse_arrangement([&] {
            std::ifstream in(p.path());
            std::ostringstream s;
            s << in.rdbuf();
            return s.str();
        }()).size();
        if (size > 9) continue;  // large arrangements run in the acceptance suite
        CAPTURE(p.path().string());
        const Run extracted = ncode_cmd({"code-of", p.path().string()});
        REQUIRE(extracted.status == cli::kOk);
        const auto code_path = dir / (p.path().stem().string() + ".code");
        std::ofstream(code_path) << extracted.out;
        CHECK(ncode_cmd({"verify", p.path().string(), code_path.string()}).status == cli::kOk);
    }
}
