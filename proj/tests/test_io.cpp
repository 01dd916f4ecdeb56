#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "raq/io.hpp"

using namespace raq;

TEST_CASE("graph text format") {
    std::istringstream in("4\n1 2\n2 3\n3 4\n");
    auto g = parse_graph_text(in);
    CHECK(g == path_graph(4));

    std::istringstream just_n("3\n");
    CHECK(parse_graph_text(just_n) == SimpleGraph(3));

    std::istringstream dangling("3\n1\n");
    CHECK_THROWS_AS(parse_graph_text(dangling), std::invalid_argument);
}

TEST_CASE("graph json format") {
    auto g = parse_graph_json(R"({"n": 3, "edges": [[1, 2], [2, 3]]})");
    CHECK(g == path_graph(3));
    CHECK(parse_graph_json(R"({"n": 2})") == SimpleGraph(2));
    CHECK_THROWS(parse_graph_json(R"({"edges": []})"));
    CHECK_THROWS(parse_graph_json(R"({"n": 2, "edges": [[1]]})"));

    // Round trip through the emitter.
    CHECK(parse_graph_json(graph_to_json(cycle_graph(5))) == cycle_graph(5));
}

TEST_CASE("matrix text format") {
    std::istringstream in("2\n1 inf\ninf 1\n");
    auto m = parse_matrix_text(in);
    CHECK(m.order(1, 2) == kInfiniteOrder);
    CHECK(m.is_right_angled());

    std::istringstream sigma("3\n1 3 2\n3 1 3\n2 3 1\n");
    auto s = parse_matrix_text(sigma);
    CHECK(s == CoxeterMatrix::symmetric_group(4));

    std::istringstream missing("2\n1 2 2\n");
    CHECK_THROWS_AS(parse_matrix_text(missing), std::invalid_argument);
    std::istringstream junk("2\n1 x\nx 1\n");
    CHECK_THROWS_AS(parse_matrix_text(junk), std::invalid_argument);
}

TEST_CASE("word syntax") {
    auto w = parse_word("1 2^-3 1");
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Syllable{1, 1});
    CHECK(w[1] == Syllable{2, -3});
    CHECK(w[2] == Syllable{1, 1});

    CHECK(parse_word("").empty());
    CHECK(parse_word("e").empty());
    CHECK_THROWS_AS(parse_word("1^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x"), std::invalid_argument);

    // Round trip with the display form.
    auto g = path_graph(3);
    auto nf = NormalForm::from_word(g, Coeff::Z, parse_word("1 3^2 2^-1"));
    auto back = NormalForm::from_word(g, Coeff::Z, parse_word(nf.str()));
    CHECK(nf == back);
    CHECK(NormalForm::from_word(g, Coeff::Z2, parse_word("e")).is_identity());
}

TEST_CASE("adjoint expression syntax") {
    auto factors = parse_adjoint_expression("e(1) e(2 1 2)^-1 e(3)^2");
    REQUIRE(factors.size() == 3);
    CHECK(factors[0].reflection_word == std::vector<Syllable>{{1, 1}});
    CHECK(factors[0].exp == 1);
    CHECK(factors[1].reflection_word ==
          std::vector<Syllable>{{2, 1}, {1, 1}, {2, 1}});
    CHECK(factors[1].exp == -1);
    CHECK(factors[2].exp == 2);

    CHECK(parse_adjoint_expression("e").empty());
    CHECK_THROWS_AS(parse_adjoint_expression("e()"), std::invalid_argument);
    CHECK_THROWS_AS(parse_adjoint_expression("e(1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_adjoint_expression("f(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_adjoint_expression("e(1)^0"), std::invalid_argument);
}
