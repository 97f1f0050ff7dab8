#include "ncode/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ncode/complex.hpp"
#include "ncode/formats.hpp"
#include "ncode/generators.hpp"
#include "ncode/geometry.hpp"
#include "ncode/topology.hpp"

namespace ncode::cli {

std::string braced(Codeword w) {
    std::string s = "{";
    bool first = true;
    for (int m : w.members()) {
        if (!first) s += ',';
        s += std::to_string(m);
        first = false;
    }
    return s + "}";
}

namespace {

/// An operational failure with a message for stderr.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure("cannot write '" + path.string() + "'");
    out << text;
}

NeuralCode load_code(const std::string& path) {
    try {
        return parse_code(read_file(path));
    } catch (const ParseError& e) {
        throw Failure(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw Failure(path + ": " + e.what());
    }
}

Arrangement load_arrangement(const std::string& path) {
    try {
        return parse_arrangement(read_file(path));
    } catch (const ParseError& e) {
        throw Failure(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw Failure(path + ": " + e.what());
    }
}

std::string facet_list(const SimplicialComplex& cpx) {
    if (cpx.is_void()) return "(void)";
    std::string s;
    for (Codeword f : cpx.facets()) {
        if (!s.empty()) s += ' ';
        s += braced(f);
    }
    return s;
}

std::string status_line(const ContractibilityStatus& st) {
    return std::string(to_string(st.verdict)) + " (" + describe(st.certificate) + ")";
}

const char* mandatory_label(Contractibility c) {
    switch (c) {
        case Contractibility::non_contractible: return "mandatory";
        case Contractibility::contractible: return "non-mandatory";
        case Contractibility::unknown: return "undetermined";
    }
    return "?";
}

void analyze(const std::string& path, bool homology, std::ostream& out) {
    const NeuralCode code = load_code(path);
    const SimplicialComplex delta = simplicial_complex(code);

    out << "code: " << code.neuron_count() << " neurons, " << code.size() << " codewords\n";
    const auto maximal = maximal_codewords(code);
    out << "maximal codewords (" << maximal.size() << "):";
    for (Codeword w : maximal) out << ' ' << braced(w);
    out << "\n";

    const auto mic = max_intersection_check(code);
    out << "max-intersection complete: " << (mic.complete ? "true" : "false") << "\n";
    if (!mic.complete) {
        out << "  witness:";
        for (std::size_t k = 0; k < mic.witness_words.size(); ++k) {
            out << (k == 0 ? " " : " & ") << braced(mic.witness_words[k]);
        }
        out << " = " << braced(*mic.missing_intersection) << " (not a codeword)\n";
    }

    const auto good = is_locally_good(code);
    out << "locally good: " << to_string(good.verdict) << "\n";
    out << "  checked intersections (" << good.checked.size() << "):";
    for (const auto& c : good.checked) out << ' ' << braced(c.face);
    out << "\n";
    for (const auto& c : good.checked) {
        out << "    " << braced(c.face) << ": link " << facet_list(c.link) << "; " << status_line(c.status) << "\n";
    }

    const auto table = mandatory_codewords(delta);
    std::size_t mandatory = 0, missing_mandatory = 0;
    for (const auto& [face, st] : table) {
        if (st.verdict == Contractibility::non_contractible) {
            ++mandatory;
            if (!code.contains(face)) ++missing_mandatory;
        }
    }
    out << "mandatory codewords: " << mandatory << " of " << table.size() << " nonempty faces, " << missing_mandatory
        << " missing from the code\n";
    for (const auto& [face, st] : table) {
        out << "  " << braced(face) << ' ' << mandatory_label(st.verdict) << ' ' << to_string(st.verdict) << ' '
            << (code.contains(face) ? "in-code" : "absent") << "\n";
    }

    if (homology) {
        const auto betti = reduced_homology(delta);
        out << "reduced Betti numbers:";
        if (betti.ranks.empty()) out << " (no vertices)";
        for (long b : betti.ranks) out << ' ' << b;
        out << "\n";
        out << "euler characteristic: " << delta.euler_characteristic() << "\n";
    }
}

void link_command(const std::string& path, const std::string& face_text, std::ostream& out) {
    const NeuralCode code = load_code(path);
    Codeword face;
    std::istringstream in(face_text);
    std::string tok;
    while (in >> tok) {
        int idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Failure("malformed face index '" + tok + "'");
        }
        if (idx < 1 || idx > code.neuron_count()) throw Failure("face index " + tok + " out of range");
        face = face.with(idx);
    }
    const SimplicialComplex delta = simplicial_complex(code);
    SimplicialComplex lk;
    try {
        lk = link(delta, face);
    } catch (const FaceNotFound& e) {
        throw Failure(e.what());
    }
    const auto status = contractibility(lk);
    out << "link of " << braced(face) << ": " << facet_list(lk) << "\n";
    out << "status: " << status_line(status) << "\n";
    if (const auto* seq = std::get_if<certificate::CollapseSequence>(&status.certificate)) {
        for (const auto& [free_face, coface] : seq->steps) {
            out << "  collapse " << braced(free_face) << " < " << braced(coface) << "\n";
        }
    }
}

int verify(const std::string& arr_path, const std::string& code_path, std::ostream& out) {
    const Arrangement arr = load_arrangement(arr_path);
    const NeuralCode expected = load_code(code_path);
    if (arr.size() > 20) throw Failure("arrangement has more than 20 sets");
    const NeuralCode actual = code_of_arrangement(arr);
    if (actual == expected) {
        out << "ok: arrangement realizes the code (" << actual.size() << " codewords)\n";
        return kOk;
    }
    out << "mismatch\n";
    if (actual.neuron_count() != expected.neuron_count()) {
        out << "  arrangement has " << actual.neuron_count() << " sets, code file declares " << expected.neuron_count()
            << " neurons\n";
    }
    out << "  only in arrangement:";
    for (Codeword w : actual.words()) {
        if (!expected.contains(w)) out << ' ' << braced(w);
    }
    out << "\n  only in code file:";
    for (Codeword w : expected.words()) {
        if (!actual.contains(w)) out << ' ' << braced(w);
    }
    out << "\n";
    return kMismatch;
}

struct Generated {
    std::string name;
    NeuralCode code;
    std::vector<Realization> realizations;
};

Generated generate_family(const std::string& family, std::optional<int> n) {
    if (!n) throw Failure("family '" + family + "' needs --n");
    try {
        if (family == "an") {
            Generated g{"an" + std::to_string(*n), gen_An(*n), {}};
            if (*n <= 8) g.realizations.push_back({"r2", realization_An_R2(*n), ""});
            return g;
        }
        if (family == "sn") {
            Generated g{"sn" + std::to_string(*n), gen_Sn(*n), {}};
            if (*n <= 8) g.realizations.push_back({"r2", realization_Sn_R2(*n), ""});
            return g;
        }
        Generated g{"cn" + std::to_string(*n), gen_Cn(*n), {}};
        g.realizations.push_back({"rn", realization_Cn_Rn(*n), ""});
        return g;
    } catch (const std::invalid_argument& e) {
        throw Failure(e.what());
    }
}

std::string arrangement_file_name(const std::string& name, const std::vector<Realization>& all, std::size_t index) {
    return index == 0 ? name + ".arr" : name + "_" + all[index].tag + ".arr";
}

void write_entry(const std::filesystem::path& dir, const Generated& g, const std::optional<std::string>& only_tag,
                 std::ostream& out) {
    write_file(dir / (g.name + ".code"), serialize_code(g.code));
    out << (dir / (g.name + ".code")).string() << "\n";
    for (std::size_t k = 0; k < g.realizations.size(); ++k) {
        if (only_tag && g.realizations[k].tag != *only_tag) continue;
        const auto file = dir / arrangement_file_name(g.name, g.realizations, k);
        write_file(file, serialize_arrangement(g.realizations[k].arrangement));
        out << file.string() << "\n";
    }
}

void gen(const std::string& family, std::optional<int> n, const std::optional<std::string>& tag,
         const std::optional<std::string>& out_dir, std::ostream& out) {
    std::vector<Generated> entries;
    const bool is_family = family == "an" || family == "sn" || family == "cn";
    if (is_family) {
        entries.push_back(generate_family(family, n));
    } else if (family == "corpus") {
        if (!out_dir) throw Failure("'gen corpus' needs --out");
        for (auto& e : corpus()) entries.push_back({e.name, e.code, e.realizations});
    } else if (auto e = find_corpus_entry(family)) {
        entries.push_back({e->name, e->code, e->realizations});
    } else {
        throw Failure("unknown family or corpus entry '" + family + "'");
    }
    if (tag) {
        for (const auto& g : entries) {
            bool found = false;
            for (const auto& r : g.realizations) found = found || r.tag == *tag;
            if (!found) throw Failure("'" + g.name + "' has no realization '" + *tag + "'");
        }
    }

    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        for (const auto& g : entries) {
            // Families write an arrangement only when one is requested.
            if (is_family && !tag) {
                write_entry(*out_dir, Generated{g.name, g.code, {}}, std::nullopt, out);
            } else {
                write_entry(*out_dir, g, tag, out);
            }
        }
        return;
    }
    const Generated& g = entries.front();
    if (tag) {
        for (const auto& r : g.realizations) {
            if (r.tag == *tag) {
                out << serialize_arrangement(r.arrangement);
                return;
            }
        }
    }
    out << serialize_code(g.code);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Neural code convexity toolkit"};
    app.require_subcommand(1);

    bool homology = false;
    std::string code_path, arr_path, family, face_text;
    std::optional<int> n;
    std::optional<std::string> tag, out_dir;

    auto* analyze_cmd = app.add_subcommand("analyze", "Report maximal words, completeness, mandatory codewords and local goodness");
    analyze_cmd->add_option("code", code_path, "Code file")->required();
    analyze_cmd->add_flag("--homology", homology, "Also print reduced Betti numbers of the simplicial complex");

    auto* code_of_cmd = app.add_subcommand("code-of", "Print the code realized by an arrangement");
    code_of_cmd->add_option("arrangement", arr_path, "Arrangement file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check that an arrangement realizes a code (exit 2 on mismatch)");
    verify_cmd->add_option("arrangement", arr_path, "Arrangement file")->required();
    verify_cmd->add_option("code", code_path, "Code file")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate a family member (an, sn, cn), a corpus entry, or the whole corpus");
    gen_cmd->add_option("family", family, "an | sn | cn | corpus | <corpus entry name>")->required();
    gen_cmd->add_option("--n", n, "Family parameter");
    gen_cmd->add_option("--realization", tag, "Realization tag to emit (r2, rn, open, closed)");
    gen_cmd->add_option("-o,--out", out_dir, "Directory to write .code/.arr files into");

    auto* link_cmd = app.add_subcommand("link", "Print the link of a face of the code's simplicial complex");
    link_cmd->add_option("code", code_path, "Code file")->required();
    link_cmd->add_option("--face", face_text, "Face as space-separated neuron indices")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kOk : kError;
    }

    try {
        if (*analyze_cmd) {
            analyze(code_path, homology, out);
        } else if (*code_of_cmd) {
            const Arrangement arr = load_arrangement(arr_path);
            if (arr.size() > 20) throw Failure("arrangement has more than 20 sets");
            out << serialize_code(code_of_arrangement(arr));
        } else if (*verify_cmd) {
            return verify(arr_path, code_path, out);
        } else if (*gen_cmd) {
            gen(family, n, tag, out_dir, out);
        } else if (*link_cmd) {
            link_command(code_path, face_text, out);
        }
    } catch (const Failure& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kOk;
}

}  // namespace ncode::cli
