#include "ncode/generators.hpp"

#include <stdexcept>
#include <string>

namespace ncode {

Codeword word(const std::string& digits) {
    Codeword w;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("word() takes digits 1-9, got '" + digits + "'");
        w = w.with(c - '0');
    }
    return w;
}

namespace {

void require_family_n(int n) {
    if (n < 2) throw std::invalid_argument("family requires n >= 2, got " + std::to_string(n));
    if (2 * n + 1 > kMaxNeurons) throw std::invalid_argument("n too large for 64 neurons");
}

std::vector<Codeword> words(std::initializer_list<const char*> digits) {
    std::vector<Codeword> out;
    for (const char* d : digits) out.push_back(word(d));
    return out;
}

LinearConstraint le(std::vector<Rational> a, Rational b) { return {std::move(a), Relation::weak_le, std::move(b)}; }
LinearConstraint eq(std::vector<Rational> a, Rational b) { return {std::move(a), Relation::eq, std::move(b)}; }

Polyhedron box2(Rational xlo, Rational xhi, Rational ylo, Rational yhi) {
    return {2,
            {le({-1, 0}, -xlo), le({1, 0}, xhi), le({0, -1}, -ylo), le({0, 1}, yhi)}};
}

struct P2 {
    Rational x, y;
};

/// The closed half-plane bounded by the line through p and q that contains `inside`.
LinearConstraint halfplane(const P2& p, const P2& q, const P2& inside) {
    Rational a = q.y - p.y;
    Rational b = p.x - q.x;
    Rational c = a * p.x + b * p.y;
    if (a * inside.x + b * inside.y > c) {
        a = -a;
        b = -b;
        c = -c;
    }
    return le({a, b}, c);
}

/// Triangle from its three corners.
Polyhedron triangle(const P2& a, const P2& b, const P2& c) {
    const P2 centroid{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
    return {2, {halfplane(a, b, centroid), halfplane(b, c, centroid), halfplane(c, a, centroid)}};
}

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::vector<Polyhedron> fan_sets() {
    const P2 apex{0, 7};
    Polyhedron v1 = triangle(apex, {-9, -6}, {-5, -6});
    Polyhedron v2 = triangle(apex, {-2, -6}, {2, -6});
    Polyhedron v3 = triangle(apex, {5, -6}, {9, -6});
    const P2 band_center{0, q(-9, 2)};
    Polyhedron v4{2,
                  {le({0, -1}, 6), le({0, 1}, -3), halfplane({-9, -6}, {q(-69, 10), -3}, band_center),
                   halfplane({9, -6}, {q(69, 10), -3}, band_center)}};
    // V5 stops at the right edge of V2, V6 at its left edge.
    Polyhedron v5 = v4;
    v5.constraints.push_back(halfplane(apex, {2, -6}, {0, 0}));
    Polyhedron v6 = v4;
    v6.constraints.push_back(halfplane(apex, {-2, -6}, {0, 0}));
    return {v1, v2, v3, v4, v5, v6};
}

}  // namespace

NeuralCode gen_An(int n) {
    require_family_n(n);
    std::vector<Codeword> ws;
    Codeword top;
    for (int i = 1; i <= n; ++i) top = top.with(i).with(barred(n, i));
    ws.push_back(top);
    ws.push_back(Codeword{n + 1});
    ws.push_back(Codeword{});
    for (int i = 1; i <= n; ++i) {
        ws.push_back(Codeword{i, barred(n, i), n + 1});
        ws.push_back(Codeword{i, barred(n, i)});
    }
    return NeuralCode(2 * n + 1, std::move(ws));
}

NeuralCode gen_Sn(int n) {
    require_family_n(n);
    // [n], {i, n+1}, {i} for i in [n+1], and the empty word.
    std::vector<Codeword> ws{Codeword::full(n), Codeword{}};
    for (int i = 1; i <= n; ++i) ws.push_back(Codeword{i, n + 1});
    for (int i = 1; i <= n + 1; ++i) ws.push_back(Codeword{i});
    return NeuralCode(n + 1, std::move(ws));
}

NeuralCode gen_Cn(int n) {
    require_family_n(n);
    Codeword bars;
    for (int i = 1; i <= n; ++i) bars = bars.with(barred(n, i));
    return add_codeword(gen_An(n), bars).code;
}

Arrangement realization_Cn_Rn(int n) {
    require_family_n(n);
    const auto unit = [n](int j, long sign) {
        std::vector<Rational> a(n, Rational(0));
        a[j] = sign;
        return a;
    };
    const std::vector<Rational> ones(n, Rational(1));
    const std::vector<Rational> minus_ones(n, Rational(-1));

    std::vector<Polyhedron> sets(2 * n + 1, Polyhedron{n, {}});
    for (int i = 0; i < n; ++i) {
        Polyhedron slab{n, {}};
        for (int j = 0; j < n; ++j) slab.constraints.push_back(le(unit(j, -1), 0));
        for (int j = 0; j < n; ++j) {
            if (j != i) slab.constraints.push_back(le(unit(j, 1), 1));
        }
        sets[barred(n, i + 1) - 1] = slab;
        slab.constraints.push_back(le(minus_ones, -1));
        sets[i] = std::move(slab);
    }
    sets[n] = Polyhedron{n, {le(minus_ones, -2 * n), le(ones, 2 * n + 1)}};
    return Arrangement(n, Topology::closed, std::move(sets));
}

Arrangement realization_An_R2(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("planar A_n realization supports 2 <= n <= 8, got " + std::to_string(n));
    std::vector<Polyhedron> sets(2 * n + 1);
    for (int k = 1; k <= n; ++k) {
        // Segment from the apex (0, 4) to (xk, -4): 8x + xk*y = 4xk with -4 <= y <= 4.
        const Rational xk = Rational(-9) + q(18 * (k - 1), n - 1);
        Polyhedron segment{2, {eq({8, xk}, 4 * xk), le({0, -1}, 4), le({0, 1}, 4)}};
        sets[k - 1] = segment;
        sets[barred(n, k) - 1] = segment;
    }
    sets[n] = Polyhedron{2, {eq({0, 1}, -2), le({-1, 0}, 9), le({1, 0}, 9)}};
    return Arrangement(2, Topology::closed, std::move(sets));
}

Arrangement realization_Sn_R2(int n) {
    const Arrangement full = realization_An_R2(n);
    std::vector<Polyhedron> kept(full.sets().begin(), full.sets().begin() + n + 1);
    return Arrangement(2, Topology::closed, std::move(kept));
}

NeuralCode six_neuron_code() {
    return NeuralCode(6, words({"123", "124", "135", "236", "12", "13", "14", "23", "24", "1", "2", ""}));
}

NeuralCode triangle_fan_code() {
    return NeuralCode(6, words({"2456", "123", "145", "346", "45", "46", "1", "2", "3", ""}));
}

NeuralCode duplicated_fan_code() {
    return NeuralCode(8, words({"12378", "1457", "2456", "3468", "17", "38", "45", "46", "2", ""}));
}

NeuralCode eight_neuron_code() {
    return NeuralCode(8, words({"2345", "123", "124", "145", "12", "14", "23", "24", "45", "2", "4", "",
                                "237", "238", "367", "678", "26", "37", "67", "6", "8"}));
}

NeuralCode sunflower3_code() { return NeuralCode(3, words({"123", "1", "2", "3", ""})); }

Arrangement six_neuron_realization(Topology topology) {
    // Two overlapping boxes for 1 and 2, horizontal bands for 3 and 4 across the overlap,
    // and small boxes for 5 and 6 inside the band of 3 on either side.
    return Arrangement(2, topology,
                       {box2(-8, 2, -6, 6), box2(-2, 8, -6, 6), box2(-6, 6, 1, 4), box2(-6, 6, -4, -1),
                        box2(-5, -3, 2, 3), box2(3, 5, 2, 3)});
}

Arrangement triangle_fan_realization() { return Arrangement(2, Topology::closed, fan_sets()); }

Arrangement duplicated_fan_realization() {
    std::vector<Polyhedron> sets = fan_sets();
    sets.push_back(sets[0]);
    sets.push_back(sets[2]);
    return Arrangement(2, Topology::closed, std::move(sets));
}

Arrangement sunflower3_realization(Topology topology) {
    return Arrangement(2, topology, {box2(-9, 2, 0, 2), box2(0, 2, 0, 9), box2(0, 11, 0, 2)});
}

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> out;

    {
        CorpusEntry e{"eq1", six_neuron_code(), {}, {}};
        e.realizations.push_back({"open", six_neuron_realization(Topology::open), "derived polyhedral stand-in for the circle picture"});
        e.realizations.push_back({"closed", six_neuron_realization(Topology::closed), "closure of the open realization"});
        e.expected.maximal = words({"123", "124", "135", "236"});
        e.expected.max_intersection_complete = false;
        e.expected.missing_intersection = word("3");
        e.expected.locally_good = true;
        e.expected.locally_checked = words({"3"});
        e.expected.non_mandatory = words({"3", "4"});
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{"c0", triangle_fan_code(), {}, {}};
        e.realizations.push_back({"closed", triangle_fan_realization(), "derived coordinates for the triangle fan picture"});
        e.expected.maximal = words({"123", "145", "2456", "346"});
        e.expected.locally_good = true;
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{"thm3_2", duplicated_fan_code(), {}, {}};
        e.realizations.push_back({"closed", duplicated_fan_realization(), "triangle fan with V7 = V1 and V8 = V3"});
        e.expected.maximal = words({"12378", "1457", "2456", "3468"});
        e.expected.locally_good = true;
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{"thm3_2_plus278", add_codeword(duplicated_fan_code(), word("278")).code, {}, {}};
        e.expected.maximal = words({"12378", "1457", "2456", "3468"});
        e.expected.locally_good = true;
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{"thm3_10", eight_neuron_code(), {}, {}};
        e.expected.maximal = words({"123", "124", "145", "2345", "237", "238", "26", "367", "678"});
        e.expected.locally_good = true;
        e.expected.locally_checked = words({"1", "3", "7"});
        e.expected.non_mandatory = words({"1", "3", "7"});
        out.push_back(std::move(e));
    }
    {
        CorpusEntry e{"sunflower3", sunflower3_code(), {}, {}};
        e.realizations.push_back({"closed", sunflower3_realization(Topology::closed), "rectangles from the sunflower picture"});
        e.realizations.push_back({"open", sunflower3_realization(Topology::open), "interiors of the same rectangles"});
        e.expected.sunflower = true;
        e.expected.max_intersection_complete = true;
        e.expected.locally_good = true;
        out.push_back(std::move(e));
    }
    for (int n = 2; n <= 5; ++n) {
        CorpusEntry e{"an" + std::to_string(n), gen_An(n), {}, {}};
        e.realizations.push_back({"r2", realization_An_R2(n), "segments through a common apex plus a transversal"});
        e.expected.locally_good = true;
        out.push_back(std::move(e));
    }
    for (int n = 2; n <= 5; ++n) {
        CorpusEntry e{"sn" + std::to_string(n), gen_Sn(n), {}, {}};
        e.realizations.push_back({"r2", realization_Sn_R2(n), "planar A_n realization without the barred sets"});
        e.expected.locally_good = true;
        out.push_back(std::move(e));
    }
    for (int n = 2; n <= 5; ++n) {
        CorpusEntry e{"cn" + std::to_string(n), gen_Cn(n), {}, {}};
        e.realizations.push_back({"rn", realization_Cn_Rn(n), "box-slab construction in R^n"});
        e.expected.locally_good = true;
        e.expected.min_betti1 = 1;
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<CorpusEntry> find_corpus_entry(const std::string& name) {
    for (auto& e : corpus()) {
        if (e.name == name) return std::move(e);
    }
    return std::nullopt;
}

}  // namespace ncode
