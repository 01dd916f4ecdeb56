#include "raq/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace raq {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument(what);
}

long long to_int(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) parse_fail(std::string(what) + ": bad integer '" + token + "'");
        return v;
    } catch (const std::invalid_argument&) {
        parse_fail(std::string(what) + ": bad integer '" + token + "'");
    } catch (const std::out_of_range&) {
        parse_fail(std::string(what) + ": integer out of range '" + token + "'");
    }
}

}  // namespace

SimpleGraph parse_graph_text(std::istream& in) {
    int n = 0;
    if (!(in >> n)) parse_fail("graph: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) parse_fail("graph: dangling edge endpoint");
        edges.emplace_back(u, v);
    }
    return SimpleGraph(n, std::move(edges));
}

SimpleGraph parse_graph_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (!j.contains("n")) parse_fail("graph json: missing \"n\"");
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) parse_fail("graph json: edge must be [i, j]");
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
    return SimpleGraph(j.at("n").get<int>(), std::move(edges));
}

SimpleGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    std::istringstream stream(text);
    return parse_graph_text(stream);
}

CoxeterMatrix parse_matrix_text(std::istream& in) {
    int n = 0;
    if (!(in >> n)) parse_fail("matrix: missing generator count");
    if (n < 1) parse_fail("matrix: generator count must be positive");
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    std::string token;
    for (int i = 0; i < n * n; ++i) {
        if (!(in >> token)) parse_fail("matrix: expected " + std::to_string(n * n) + " entries");
        if (token == "inf" || token == "Inf" || token == "INF")
            entries.push_back(kInfiniteOrder);
        else
            entries.push_back(static_cast<int>(to_int(token, "matrix")));
    }
    return CoxeterMatrix(n, std::move(entries));
}

CoxeterMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open matrix file: " + path);
    return parse_matrix_text(in);
}

std::vector<Syllable> parse_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<Syllable> word;
    std::string token;
    while (in >> token) {
        if (token == "e") continue;
        Syllable syl{0, 1};
        auto caret = token.find('^');
        if (caret == std::string::npos) {
            syl.gen = static_cast<int>(to_int(token, "word"));
        } else {
            syl.gen = static_cast<int>(to_int(token.substr(0, caret), "word"));
            syl.exp = to_int(token.substr(caret + 1), "word");
            if (syl.exp == 0) parse_fail("word: zero exponent in '" + token + "'");
        }
        word.push_back(syl);
    }
    return word;
}

std::vector<AdFactor> parse_adjoint_expression(const std::string& text) {
    std::vector<AdFactor> factors;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (pos < text.size() && text.compare(pos, 1, "e") == 0 && pos + 1 == text.size()) return {};
    while (pos < text.size()) {
        if (text.compare(pos, 2, "e(") != 0)
            parse_fail("adjoint word: expected 'e(' at position " + std::to_string(pos));
        pos += 2;
        auto close = text.find(')', pos);
        if (close == std::string::npos) parse_fail("adjoint word: missing ')'");
        AdFactor factor;
        factor.reflection_word = parse_word(text.substr(pos, close - pos));
        if (factor.reflection_word.empty())
            parse_fail("adjoint word: empty reflection inside e(...)");
        pos = close + 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t end = pos;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
                ++end;
            factor.exp = to_int(text.substr(pos, end - pos), "adjoint word");
            if (factor.exp == 0) parse_fail("adjoint word: zero exponent");
            pos = end;
        }
        factors.push_back(std::move(factor));
        skip_space();
    }
    return factors;
}

std::string graph_to_json(const SimpleGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

}  // namespace raq
