#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "raq/coxeter.hpp"
#include "raq/graph.hpp"
#include "raq/words.hpp"

namespace raq {

/// Graph text format: first line `n`, then one `i j` per edge, 1-indexed.
/// JSON alternative: {"n": ..., "edges": [[i,j], ...]}. The reader sniffs
/// the format from the first non-space character.
SimpleGraph parse_graph_text(std::istream& in);
SimpleGraph parse_graph_json(const std::string& text);
SimpleGraph read_graph_file(const std::string& path);

/// Matrix text format: first line `|S|`, then |S|² row-major entries with
/// `inf` allowed.
CoxeterMatrix parse_matrix_text(std::istream& in);
CoxeterMatrix read_matrix_file(const std::string& path);

/// Word syntax: whitespace-separated tokens `g` or `g^k`, 1-indexed
/// generators; `e` (or nothing) is the identity.
std::vector<Syllable> parse_word(const std::string& text);

/// One factor of a word in the adjoint group: e(<coxeter word>)^k.
struct AdFactor {
    std::vector<Syllable> reflection_word;
    long long exp = 1;
};

/// Adjoint-word syntax: whitespace-separated factors `e(<word>)` with an
/// optional `^k`; e.g. "e(1) e(2 1 2)^-1".
std::vector<AdFactor> parse_adjoint_expression(const std::string& text);

std::string graph_to_json(const SimpleGraph& g);

}  // namespace raq
