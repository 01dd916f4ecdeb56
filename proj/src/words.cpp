#include "raq/words.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace raq {

namespace {

void check_gen(const SimpleGraph& g, int gen) {
    if (gen < 1 || gen > g.vertex_count())
        throw std::out_of_range("word: generator " + std::to_string(gen) +
                                " out of range 1.." + std::to_string(g.vertex_count()));
}

// Append one syllable to a shuffle-reduced buffer, merging with the nearest
// syllable of the same generator that is separated only by commuting ones.
// A merge that cancels to zero may expose new merges across the gap; the
// displaced suffix is re-pushed through `pending`.
void push_syllable(const SimpleGraph& g, Coeff coeff, std::vector<Syllable>& buf,
                   std::deque<Syllable>& pending, Syllable syl) {
    for (std::size_t i = buf.size(); i-- > 0;) {
        if (buf[i].gen == syl.gen) {
            long long e = buf[i].exp + syl.exp;
            if (coeff == Coeff::Z2) e &= 1;
            if (e == 0) {
                for (std::size_t j = buf.size(); j-- > i + 1;)
                    pending.push_front(buf[j]);
                buf.resize(i);
            } else {
                buf[i].exp = e;
            }
            return;
        }
        if (!g.adjacent(buf[i].gen, syl.gen)) break;
    }
    buf.push_back(syl);
}

std::vector<Syllable> reduce_word(const SimpleGraph& g, Coeff coeff,
                                  std::span<const Syllable> word) {
    std::vector<Syllable> buf;
    std::deque<Syllable> pending(word.begin(), word.end());
    while (!pending.empty()) {
        Syllable syl = pending.front();
        pending.pop_front();
        check_gen(g, syl.gen);
        if (syl.exp == 0) throw std::invalid_argument("word: zero exponent syllable");
        if (coeff == Coeff::Z2) {
            syl.exp = ((syl.exp % 2) + 2) % 2;
            if (syl.exp == 0) continue;
        }
        push_syllable(g, coeff, buf, pending, syl);
    }
    return buf;
}

// Canonical linear order on a reduced word: repeatedly emit, among the
// syllables movable to the front (everything before them commutes), the one
// with the least generator index. Gives the lexicographically least shuffle.
std::vector<Syllable> canonical_order(const SimpleGraph& g, std::vector<Syllable> rest) {
    std::vector<Syllable> out;
    out.reserve(rest.size());
    while (!rest.empty()) {
        std::size_t best = rest.size();
        for (std::size_t i = 0; i < rest.size(); ++i) {
            bool movable = true;
            for (std::size_t j = 0; j < i && movable; ++j)
                movable = g.adjacent(rest[j].gen, rest[i].gen);
            if (movable && (best == rest.size() || rest[i].gen < rest[best].gen)) best = i;
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

}  // namespace

NormalForm::NormalForm(SimpleGraph graph, Coeff coeff)
    : graph_(std::move(graph)), coeff_(coeff) {}

NormalForm NormalForm::from_word(SimpleGraph graph, Coeff coeff,
                                 std::span<const Syllable> word) {
    NormalForm nf(std::move(graph), coeff);
    nf.syllables_ = canonical_order(nf.graph_, reduce_word(nf.graph_, coeff, word));
    return nf;
}

NormalForm NormalForm::from_letters(SimpleGraph graph, Coeff coeff,
                                    const std::vector<int>& letters) {
    std::vector<Syllable> word;
    word.reserve(letters.size());
    for (int gen : letters) word.push_back({gen, 1});
    return from_word(std::move(graph), coeff, word);
}

long long NormalForm::length() const {
    long long len = 0;
    for (const auto& s : syllables_) len += s.exp < 0 ? -s.exp : s.exp;
    return len;
}

std::string NormalForm::str() const {
    if (syllables_.empty()) return "e";
    std::string out;
    for (const auto& s : syllables_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(s.gen);
        if (s.exp != 1) out += "^" + std::to_string(s.exp);
    }
    return out;
}

NormalForm normalize(SimpleGraph graph, Coeff coeff, const std::vector<Syllable>& word) {
    return NormalForm::from_word(std::move(graph), coeff, word);
}

namespace {

void check_same_context(const NormalForm& a, const NormalForm& b, const char* op) {
    if (a.coeff() != b.coeff())
        throw std::invalid_argument(std::string(op) + ": mixed coefficient groups");
    if (!(a.graph() == b.graph()))
        throw std::invalid_argument(std::string(op) + ": operands over different graphs");
}

}  // namespace

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
    check_same_context(a, b, "multiply");
    std::vector<Syllable> word = a.syllables();
    word.insert(word.end(), b.syllables().begin(), b.syllables().end());
    return NormalForm::from_word(a.graph(), a.coeff(), word);
}

NormalForm invert(const NormalForm& a) {
    std::vector<Syllable> word(a.syllables().rbegin(), a.syllables().rend());
    if (a.coeff() == Coeff::Z)
        for (auto& s : word) s.exp = -s.exp;
    return NormalForm::from_word(a.graph(), a.coeff(), word);
}

bool equals(const NormalForm& a, const NormalForm& b) {
    check_same_context(a, b, "equals");
    return a.syllables() == b.syllables();
}

std::vector<long long> abelianize(const NormalForm& a) {
    std::vector<long long> sums(static_cast<std::size_t>(a.graph().vertex_count()), 0);
    for (const auto& s : a.syllables()) sums[static_cast<std::size_t>(s.gen - 1)] += s.exp;
    if (a.coeff() == Coeff::Z2)
        for (auto& v : sums) v = ((v % 2) + 2) % 2;
    return sums;
}

TitsMatrix TitsMatrix::identity(int n) {
    std::vector<long long> entries(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i) * n + i] = 1;
    return TitsMatrix(n, std::move(entries));
}

TitsMatrix TitsMatrix::generator(const SimpleGraph& g, int s) {
    check_gen(g, s);
    int n = g.vertex_count();
    auto m = identity(n);
    // Row s: (ρ_s)_{s,t} = δ_{s,t} − 2 B(e_t, e_s).
    for (int t = 1; t <= n; ++t) {
        long long b = (t == s) ? 1 : (g.adjacent(s, t) ? 0 : -1);
        m.entries_[static_cast<std::size_t>(s - 1) * n + (t - 1)] =
            (t == s ? 1 : 0) - 2 * b;
    }
    return m;
}

TitsMatrix TitsMatrix::operator*(const TitsMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("TitsMatrix: size mismatch");
    std::vector<long long> out(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            long long a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) {
                long long prod = 0, sum = 0;
                if (__builtin_mul_overflow(a, other.at(k, j), &prod) ||
                    __builtin_add_overflow(out[static_cast<std::size_t>(i) * n_ + j], prod,
                                           &sum))
                    throw std::overflow_error("TitsMatrix: entry overflow");
                out[static_cast<std::size_t>(i) * n_ + j] = sum;
            }
        }
    }
    return TitsMatrix(n_, std::move(out));
}

TitsMatrix tits_eval(const NormalForm& a) {
    if (a.coeff() != Coeff::Z2)
        throw std::logic_error("tits_eval: defined for Z/2-mode words only");
    auto m = TitsMatrix::identity(a.graph().vertex_count());
    for (const auto& s : a.syllables()) m = m * TitsMatrix::generator(a.graph(), s.gen);
    return m;
}

}  // namespace raq
