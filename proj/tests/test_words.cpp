#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "raq/words.hpp"

using namespace raq;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() & 1) edges.emplace_back(u, v);
    return SimpleGraph(n, edges);
}

std::vector<Syllable> random_word(std::mt19937_64& rng, int m, int max_len, Coeff coeff) {
    std::uniform_int_distribution<int> len(0, max_len), gen(1, m), exp(-3, 3);
    std::vector<Syllable> word;
    int L = len(rng);
    for (int i = 0; i < L; ++i) {
        long long e = 1;
        if (coeff == Coeff::Z) {
            do e = exp(rng); while (e == 0);
        }
        word.push_back({gen(rng), e});
    }
    return word;
}

// Insert relator noise and commuting swaps without changing the element.
std::vector<Syllable> obfuscate(std::mt19937_64& rng, const SimpleGraph& g,
                                std::vector<Syllable> word, Coeff coeff) {
    std::uniform_int_distribution<int> gen(1, g.vertex_count());
    for (int round = 0; round < 12; ++round) {
        switch (rng() % 3) {
            case 0: {  // insert g·g (Z2) or g·g^{-1} (Z)
                int s = gen(rng);
                std::size_t pos = word.empty() ? 0 : rng() % (word.size() + 1);
                long long e = coeff == Coeff::Z2 ? 1 : 1 + static_cast<long long>(rng() % 3);
                word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos),
                            {Syllable{s, e}, Syllable{s, coeff == Coeff::Z2 ? e : -e}});
                break;
            }
            case 1: {  // swap adjacent commuting syllables
                if (word.size() < 2) break;
                std::size_t i = rng() % (word.size() - 1);
                if (word[i].gen == word[i + 1].gen || g.adjacent(word[i].gen, word[i + 1].gen))
                    std::swap(word[i], word[i + 1]);
                break;
            }
            case 2: {  // split a syllable in two
                if (word.empty() || coeff == Coeff::Z2) break;
                std::size_t i = rng() % word.size();
                if (word[i].exp > 1) {
                    word[i].exp -= 1;
                    word.insert(word.begin() + static_cast<std::ptrdiff_t>(i),
                                Syllable{word[i].gen, 1});
                }
                break;
            }
        }
    }
    return word;
}

}  // namespace

TEST_CASE("normalization on the path graph") {
    auto g = path_graph(3);
    SUBCASE("commuting pair cancels through") {
        auto nf = NormalForm::from_letters(g, Coeff::Z2, {1, 2, 1});
        CHECK(nf.syllables() == std::vector<Syllable>{{2, 1}});
        CHECK(nf.str() == "2");
    }
    SUBCASE("non-commuting word is irreducible") {
        auto nf = NormalForm::from_letters(g, Coeff::Z2, {1, 3, 1});
        CHECK(nf.syllables() == std::vector<Syllable>{{1, 1}, {3, 1}, {1, 1}});
        CHECK_FALSE(equals(nf, NormalForm::from_letters(g, Coeff::Z2, {3})));
    }
    SUBCASE("involutions cancel") {
        CHECK(NormalForm::from_letters(g, Coeff::Z2, {1, 1}).is_identity());
    }
    SUBCASE("canonical order puts the least movable generator first") {
        auto nf = NormalForm::from_letters(g, Coeff::Z2, {2, 1});
        CHECK(nf.str() == "1 2");
        // 3 does not commute with 1: order is forced.
        auto nf2 = NormalForm::from_letters(g, Coeff::Z2, {3, 1});
        CHECK(nf2.str() == "3 1");
    }
    SUBCASE("zero exponent rejected") {
        std::vector<Syllable> bad{{1, 0}};
        CHECK_THROWS_AS(NormalForm::from_word(g, Coeff::Z, bad), std::invalid_argument);
    }
    SUBCASE("out of range generator rejected") {
        std::vector<Syllable> bad{{4, 1}};
        CHECK_THROWS_AS(NormalForm::from_word(g, Coeff::Z2, bad), std::out_of_range);
    }
}

TEST_CASE("defining relations collapse") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 2 + static_cast<int>(rng() % 5));
        for (const auto& [u, v] : g.edges()) {
            // stst = 1 in W
            CHECK(NormalForm::from_letters(g, Coeff::Z2, {u, v, u, v}).is_identity());
            // [a_u, a_v] = 1 in A_W
            std::vector<Syllable> comm{{u, 1}, {v, 1}, {u, -1}, {v, -1}};
            CHECK(NormalForm::from_word(g, Coeff::Z, comm).is_identity());
        }
        // s^2 = 1 for every generator
        for (int s = 1; s <= g.vertex_count(); ++s)
            CHECK(NormalForm::from_letters(g, Coeff::Z2, {s, s}).is_identity());
    }
}

TEST_CASE("group laws") {
    std::mt19937_64 rng(43);
    for (Coeff coeff : {Coeff::Z2, Coeff::Z}) {
        for (int trial = 0; trial < 200; ++trial) {
            int m = 1 + static_cast<int>(rng() % 5);
            auto g = random_graph(rng, m);
            auto a = NormalForm::from_word(g, coeff, random_word(rng, m, 10, coeff));
            auto b = NormalForm::from_word(g, coeff, random_word(rng, m, 10, coeff));
            auto c = NormalForm::from_word(g, coeff, random_word(rng, m, 10, coeff));
            NormalForm id(g, coeff);

            CHECK(multiply(a, invert(a)) == id);
            CHECK(multiply(invert(a), a) == id);
            CHECK(multiply(id, b) == b);
            CHECK(multiply(b, id) == b);
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));

            // Abelianization is a homomorphism.
            auto ab = abelianize(multiply(a, b));
            auto ea = abelianize(a);
            auto eb = abelianize(b);
            for (std::size_t i = 0; i < ab.size(); ++i) {
                long long sum = ea[i] + eb[i];
                if (coeff == Coeff::Z2) sum = ((sum % 2) + 2) % 2;
                CHECK(ab[i] == sum);
            }
        }
    }
    SUBCASE("mixed contexts rejected") {
        auto g1 = path_graph(3);
        auto g2 = complete_graph(3);
        NormalForm a(g1, Coeff::Z2), b(g2, Coeff::Z2), c(g1, Coeff::Z);
        CHECK_THROWS_AS(multiply(a, b), std::invalid_argument);
        CHECK_THROWS_AS(multiply(a, c), std::invalid_argument);
    }
}

TEST_CASE("Tits matrices") {
    auto g = path_graph(3);
    SUBCASE("identity and involutions") {
        CHECK(tits_eval(NormalForm(g, Coeff::Z2)) == TitsMatrix::identity(3));
        for (int s = 1; s <= 3; ++s) {
            auto rho = TitsMatrix::generator(g, s);
            CHECK(rho * rho == TitsMatrix::identity(3));
            CHECK_FALSE(rho == TitsMatrix::identity(3));
        }
    }
    SUBCASE("hand-computed generator matrix") {
        // Vertex 1 of the path: adjacent to 2, not to 3.
        auto rho = TitsMatrix::generator(g, 1);
        CHECK(rho.at(0, 0) == -1);
        CHECK(rho.at(0, 1) == 0);
        CHECK(rho.at(0, 2) == 2);
        CHECK(rho.at(1, 1) == 1);
        CHECK(rho.at(2, 2) == 1);
    }
    SUBCASE("separates the irreducible word from its shadow") {
        auto a = NormalForm::from_letters(g, Coeff::Z2, {1, 3, 1});
        auto b = NormalForm::from_letters(g, Coeff::Z2, {3});
        CHECK_FALSE(tits_eval(a) == tits_eval(b));
    }
    SUBCASE("overflow detected") {
        // Powers of a Coxeter element of the free product Z/2 * Z/2 * Z/2
        // grow exponentially; the checked arithmetic must notice.
        auto h = SimpleGraph(3);
        auto prod = TitsMatrix::identity(3);
        CHECK_THROWS_AS(
            [&] {
                for (int i = 0; i < 300; ++i) prod = prod * TitsMatrix::generator(h, 1 + i % 3);
            }(),
            std::overflow_error);
    }
    SUBCASE("Z-mode words rejected") {
        CHECK_THROWS_AS(tits_eval(NormalForm(g, Coeff::Z)), std::logic_error);
    }
}

TEST_CASE("oracle soundness: equality agrees with the faithful representation") {
    std::mt19937_64 rng(123456);
    int disagreements = 0;
    for (int m = 1; m <= 6; ++m) {
        auto g = random_graph(rng, m);
        for (int trial = 0; trial < 400; ++trial) {
            auto wa = random_word(rng, m, 20, Coeff::Z2);
            auto wb = random_word(rng, m, 20, Coeff::Z2);
            auto a = NormalForm::from_word(g, Coeff::Z2, wa);
            auto b = NormalForm::from_word(g, Coeff::Z2, wb);
            if (equals(a, b) != (tits_eval(a) == tits_eval(b))) ++disagreements;
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("normal form is invariant under relator insertion") {
    std::mt19937_64 rng(98765);
    for (Coeff coeff : {Coeff::Z2, Coeff::Z}) {
        for (int trial = 0; trial < 300; ++trial) {
            int m = 1 + static_cast<int>(rng() % 5);
            auto g = random_graph(rng, m);
            auto word = random_word(rng, m, 12, coeff);
            auto noisy = obfuscate(rng, g, word, coeff);
            auto a = NormalForm::from_word(g, coeff, word);
            auto b = NormalForm::from_word(g, coeff, noisy);
            CHECK(a == b);
            CHECK(a.length() == b.length());
            if (coeff == Coeff::Z2) CHECK(tits_eval(a) == tits_eval(b));
        }
    }
}
