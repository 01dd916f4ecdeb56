#include "raq/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "raq/quandle.hpp"
#include "raq/spectral.hpp"
#include "raq/words.hpp"

namespace raq::verify {

void SuiteResult::check(const std::string& label, bool ok) {
    lines.push_back(label + "\t" + (ok ? "ok" : "FAIL"));
    passed = passed && ok;
}

void SuiteResult::note(const std::string& label, const std::string& value) {
    lines.push_back(label + "\t" + value);
}

namespace {

NormalForm random_artin_word(std::mt19937_64& rng, const CoxeterSystem& sys, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(1, sys.size()), exp(-3, 3);
    std::vector<Syllable> word;
    int L = len(rng);
    for (int i = 0; i < L; ++i) {
        long long e = 0;
        do e = exp(rng); while (e == 0);
        word.push_back({gen(rng), e});
    }
    return NormalForm::from_word(sys.gamma, Coeff::Z, word);
}

std::string vec_str(const std::vector<long long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace

SuiteResult quandle_suite(const CoxeterSystem& sys, const Options& opt) {
    SuiteResult result{"quandle"};
    auto refl = enumerate_reflections(sys, opt.reflection_window);
    result.note("reflections", std::to_string(refl.size()));

    bool idem = true;
    for (const auto& x : refl) idem = idem && quandle_op(x, x) == x;
    result.check("idempotence", idem);

    bool bij = true;
    for (const auto& x : refl)
        for (const auto& y : refl)
            bij = bij && quandle_op_inverse(quandle_op(x, y), y) == x &&
                  quandle_op(quandle_op_inverse(x, y), y) == x;
    result.check("right translations bijective", bij);

    std::mt19937_64 rng(opt.seed);
    bool distrib = true;
    int triples = std::min<int>(opt.word_samples,
                                static_cast<int>(refl.size() * refl.size()));
    for (int t = 0; t < triples; ++t) {
        const auto& x = refl[rng() % refl.size()];
        const auto& y = refl[rng() % refl.size()];
        const auto& z = refl[rng() % refl.size()];
        distrib = distrib && quandle_op(quandle_op(x, y), z) ==
                                 quandle_op(quandle_op(x, z), quandle_op(y, z));
    }
    result.check("self-distributivity", distrib);
    return result;
}

SuiteResult pullback_suite(const CoxeterSystem& sys, const Options& opt) {
    SuiteResult result{"pullback"};
    auto refl = enumerate_reflections(sys, opt.reflection_window);
    std::mt19937_64 rng(opt.seed);

    bool defining = true;
    int pairs = std::min<int>(opt.word_samples, static_cast<int>(refl.size() * refl.size()));
    for (int t = 0; t < pairs; ++t) {
        const auto& x = refl[rng() % refl.size()];
        const auto& y = refl[rng() % refl.size()];
        auto ey = adjoint_generator(sys, y);
        auto lhs = adjoint_generator(sys, quandle_op(x, y));
        auto rhs = ad_multiply(ad_invert(ey), ad_multiply(adjoint_generator(sys, x), ey));
        defining = defining && ad_equals(lhs, rhs);
    }
    result.check("defining relation e_{x*y} = e_y^-1 e_x e_y", defining);

    bool kernel_even = true, kernel_member = true;
    for (int t = 0; t < opt.word_samples; ++t) {
        auto a = artin_to_adjoint(sys, random_artin_word(rng, sys, 10));
        if (adjoint_to_coxeter(a).is_identity())
            for (long long x : a.v()) kernel_even = kernel_even && x % 2 == 0;
        std::vector<long long> v(static_cast<std::size_t>(sys.class_count()));
        for (auto& x : v) x = 2 * (static_cast<long long>(rng() % 9) - 4);
        AdElement k(sys, NormalForm(sys.gamma, Coeff::Z2), v);
        kernel_member = kernel_member && adjoint_to_coxeter(k).is_identity();
    }
    result.check("kernel elements have even vectors", kernel_even);
    result.check("even vectors give kernel elements", kernel_member);

    bool ab_constant = true;
    for (const auto& x : refl) {
        auto v = adjoint_abelianization(adjoint_generator(sys, x));
        for (std::size_t kk = 0; kk < v.size(); ++kk)
            ab_constant = ab_constant &&
                          v[kk] == (static_cast<int>(kk) == x.class_index() ? 1 : 0);
    }
    result.check("class vectors of generators", ab_constant);
    return result;
}

SuiteResult factorization_suite(const CoxeterSystem& sys, const Options& opt) {
    SuiteResult result{"factorization"};
    std::mt19937_64 rng(opt.seed);
    bool factor = true, hom = true;
    for (int t = 0; t < opt.word_samples; ++t) {
        auto a = random_artin_word(rng, sys, 12);
        factor = factor &&
                 artin_to_coxeter(sys, a) == adjoint_to_coxeter(artin_to_adjoint(sys, a));
        auto b = random_artin_word(rng, sys, 8);
        hom = hom && ad_equals(artin_to_adjoint(sys, multiply(a, b)),
                               ad_multiply(artin_to_adjoint(sys, a),
                                           artin_to_adjoint(sys, b)));
    }
    result.check("projection factors through the adjoint group", factor);
    result.check("the factor map is a homomorphism", hom);
    return result;
}

SuiteResult bbcg_suite(const SimpleGraph& g, const Options& opt) {
    SuiteResult result{"bbcg"};
    auto k = flag_complex(g);
    for (const char* label : {"circle", "mobius"}) {
        auto pair = std::string(label) == "circle" ? model_circle_pair()
                                                   : model_mobius_pair(opt.model);
        auto report = bbcg_check(k, pair, opt.degree, opt.cell_cap);
        for (const auto& row : report.rows)
            result.note(std::string(label) + "\tdegree " + std::to_string(row.degree),
                        std::to_string(row.lhs) + " = " + std::to_string(row.rhs));
        result.check(std::string(label) + " pair summand accounting", report.pass);
    }
    return result;
}

SuiteResult splitting_suite(const SimpleGraph& g, const Options& opt) {
    SuiteResult result{"splitting"};
    auto report = splitting_report(g, opt.degree, opt.model, opt.cell_cap);
    result.note("adjoint reduced Betti", vec_str(report.adjoint));
    result.note("artin reduced Betti", vec_str(report.artin));
    result.note("complement", vec_str(report.difference));
    result.check("artin summand dominated degreewise", report.pass);
    return result;
}

SuiteResult collapse_suite(const SimpleGraph& g, const Options& opt) {
    SuiteResult result{"collapse"};
    auto report = collapse_crosscheck(g, opt.degree, opt.model, opt.cell_cap);
    for (const auto& row : report.rows)
        result.note("degree " + std::to_string(row.degree),
                    std::to_string(row.lhs) + " = " + std::to_string(row.rhs));
    result.check("page dimensions match the cellular model", report.pass);
    return result;
}

SuiteResult generation_suite(const SimpleGraph& g, const Options& opt) {
    SuiteResult result{"generation"};
    E3Page page(g, opt.degree);
    auto report = generation_check(page, opt.degree);
    for (const auto& row : report.rows)
        result.note("degree " + std::to_string(row.degree),
                    std::to_string(row.lhs) + " of " + std::to_string(row.rhs));
    result.check("z classes span the page", report.pass);

    // Product relations: zero products and index moves.
    int m = g.vertex_count();
    auto gens = z_generator_indices(g, opt.degree);
    bool zero_products = true, index_moves = true, sum_relation = true;
    for (const auto& [i, I] : gens) {
        for (const auto& [j, J] : gens) {
            int deg = 2 + std::popcount(I) + std::popcount(J);
            if (deg > opt.degree) continue;
            auto prod = page.product(page.z_class(i, I), page.z_class(j, J));
            if (I & J) {
                zero_products = zero_products && prod.is_zero();
            } else if (i != j && !g.adjacent(i, j)) {
                zero_products = zero_products && prod.is_zero();
            } else if (i != j && g.adjacent(i, j)) {
                std::uint32_t Nj = static_cast<std::uint32_t>(
                                       ((std::uint64_t{1} << m) - 1) & ~g.neighbor_mask(j)) &
                                   ~(std::uint32_t{1} << (j - 1));
                std::uint32_t movable = I & Nj;
                while (movable) {
                    std::uint32_t kbit = movable & (~movable + 1);
                    movable &= movable - 1;
                    auto rhs = page.product(page.z_class(i, I & ~kbit),
                                            page.z_class(j, J | kbit));
                    index_moves = index_moves && prod == rhs;
                }
            }
        }
    }
    result.check("zero product relations", zero_products);
    result.check("index-move relations", index_moves);

    for (std::uint32_t I = 1; I < (std::uint32_t{1} << m); ++I) {
        auto vs = mask_to_vertices(I);
        if (vs.size() < 2 || 1 + static_cast<int>(vs.size()) > opt.degree) continue;
        bool independent = true;
        for (std::size_t a = 0; a < vs.size() && independent; ++a)
            for (std::size_t b = a + 1; b < vs.size() && independent; ++b)
                independent = !g.adjacent(vs[a], vs[b]);
        if (!independent) continue;
        F2Row acc;
        bool first = true;
        for (int i : vs) {
            auto prod = page.product(page.z_class(i, std::uint32_t{0}),
                                     page.z_class(i, I & ~(std::uint32_t{1} << (i - 1))));
            if (first) {
                acc = prod.coords;
                first = false;
            } else {
                f2_xor(acc, prod.coords);
            }
        }
        sum_relation = sum_relation && f2_is_zero(acc);
    }
    result.check("boundary sum relations", sum_relation);
    return result;
}

std::vector<std::string> suite_names() {
    return {"quandle", "pullback", "factorization", "bbcg", "splitting", "collapse",
            "generation"};
}

SuiteResult run_suite(const std::string& name, const CoxeterSystem& sys, const Options& opt) {
    if (name == "quandle") return quandle_suite(sys, opt);
    if (name == "pullback") return pullback_suite(sys, opt);
    if (name == "factorization") return factorization_suite(sys, opt);
    if (name == "bbcg") return bbcg_suite(sys.gamma, opt);
    if (name == "splitting") return splitting_suite(sys.gamma, opt);
    if (name == "collapse") return collapse_suite(sys.gamma, opt);
    if (name == "generation") return generation_suite(sys.gamma, opt);
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace raq::verify
