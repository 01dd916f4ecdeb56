#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "raq/graph.hpp"

namespace raq {

/// Coefficient group of a graph product: Z/2 gives the right-angled Coxeter
/// group W, Z gives the right-angled Artin group A_W.
enum class Coeff { Z2, Z };

/// One syllable g^e of a word. exp is never 0; in Z/2 mode it is always 1.
struct Syllable {
    int gen = 0;         // 1-indexed generator
    long long exp = 0;

    bool operator==(const Syllable&) const = default;
};

/// Canonical form of an element of the graph product over a simple graph:
/// the unique shuffle representative in which no two syllables of the same
/// generator are separated only by commuting syllables, and each front-
/// movable syllable of least generator index comes first.
///
/// Two words represent the same group element iff their NormalForms are
/// identical; this is the equality contract.
class NormalForm {
public:
    /// The identity element.
    NormalForm(SimpleGraph graph, Coeff coeff);

    static NormalForm from_word(SimpleGraph graph, Coeff coeff,
                                std::span<const Syllable> word);
    static NormalForm from_word(SimpleGraph graph, Coeff coeff,
                                const std::vector<Syllable>& word) {
        return from_word(std::move(graph), coeff, std::span<const Syllable>(word));
    }
    /// Convenience for Z/2 words given as a flat generator sequence.
    static NormalForm from_letters(SimpleGraph graph, Coeff coeff,
                                   const std::vector<int>& letters);

    const SimpleGraph& graph() const { return graph_; }
    Coeff coeff() const { return coeff_; }
    const std::vector<Syllable>& syllables() const { return syllables_; }

    bool is_identity() const { return syllables_.empty(); }
    /// Group-theoretic word length Σ|exp|.
    long long length() const;

    /// Compact display form: "1 2^-3 1", or "e" for the identity.
    std::string str() const;

    bool operator==(const NormalForm& other) const {
        return coeff_ == other.coeff_ && graph_ == other.graph_ &&
               syllables_ == other.syllables_;
    }

private:
    SimpleGraph graph_;
    Coeff coeff_ = Coeff::Z2;
    std::vector<Syllable> syllables_;
};

NormalForm normalize(SimpleGraph graph, Coeff coeff, const std::vector<Syllable>& word);
NormalForm multiply(const NormalForm& a, const NormalForm& b);
NormalForm invert(const NormalForm& a);
bool equals(const NormalForm& a, const NormalForm& b);

/// Exponent sums per generator, indexed 0..m-1; reduced mod 2 in Z/2 mode.
std::vector<long long> abelianize(const NormalForm& a);

/// n×n integer matrix with overflow-checked arithmetic; the image of a group
/// element under the reflection representation of the right-angled system.
class TitsMatrix {
public:
    static TitsMatrix identity(int n);
    /// Matrix of generator s: v ↦ v − 2B(v, e_s)e_s for the bilinear form
    /// with B(e_s,e_s) = 1, B(e_s,e_t) = 0 on edges and −1 otherwise.
    static TitsMatrix generator(const SimpleGraph& g, int s);

    int size() const { return n_; }
    long long at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * n_ + c]; }

    /// Throws std::overflow_error if any entry overflows.
    TitsMatrix operator*(const TitsMatrix& other) const;
    bool operator==(const TitsMatrix&) const = default;

private:
    TitsMatrix(int n, std::vector<long long> entries) : n_(n), entries_(std::move(entries)) {}
    int n_ = 0;
    std::vector<long long> entries_;
};

/// Evaluate a Z/2-mode word in the reflection representation. Faithful:
/// equals(a,b) ⇔ tits_eval(a) == tits_eval(b).
TitsMatrix tits_eval(const NormalForm& a);

}  // namespace raq
