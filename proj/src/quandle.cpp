#include "raq/quandle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace raq {

namespace {

void require_right_angled(const CoxeterSystem& sys, const char* op) {
    if (!sys.right_angled)
        throw std::invalid_argument(std::string(op) + ": system must be right-angled");
}

void check_same_graph(const NormalForm& a, const NormalForm& b, const char* op) {
    if (!(a.graph() == b.graph()))
        throw std::invalid_argument(std::string(op) + ": operands from different systems");
}

}  // namespace

Reflection Reflection::generator(const CoxeterSystem& sys, int s) {
    require_right_angled(sys, "Reflection::generator");
    if (s < 1 || s > sys.size()) throw std::out_of_range("Reflection::generator: bad index");
    return Reflection(NormalForm::from_letters(sys.gamma, Coeff::Z2, {s}),
                      sys.class_of[static_cast<std::size_t>(s - 1)]);
}

Reflection Reflection::conjugate(const CoxeterSystem& sys, int s, const NormalForm& w) {
    require_right_angled(sys, "Reflection::conjugate");
    if (s < 1 || s > sys.size()) throw std::out_of_range("Reflection::conjugate: bad index");
    auto sword = NormalForm::from_letters(sys.gamma, Coeff::Z2, {s});
    check_same_graph(sword, w, "Reflection::conjugate");
    return Reflection(multiply(multiply(invert(w), sword), w),
                      sys.class_of[static_cast<std::size_t>(s - 1)]);
}

Reflection quandle_op(const Reflection& x, const Reflection& y) {
    check_same_graph(x.element(), y.element(), "quandle_op");
    return Reflection(multiply(multiply(invert(y.element()), x.element()), y.element()),
                      x.class_index());
}

Reflection quandle_op_inverse(const Reflection& x, const Reflection& y) {
    check_same_graph(x.element(), y.element(), "quandle_op_inverse");
    return Reflection(multiply(multiply(y.element(), x.element()), invert(y.element())),
                      x.class_index());
}

std::vector<Reflection> enumerate_reflections(const CoxeterSystem& sys,
                                              int max_conjugator_length) {
    require_right_angled(sys, "enumerate_reflections");
    if (max_conjugator_length < 0)
        throw std::invalid_argument("enumerate_reflections: negative conjugator length");

    // BFS over group elements by normal-form length.
    NormalForm id(sys.gamma, Coeff::Z2);
    std::map<std::string, NormalForm> seen{{id.str(), id}};
    std::vector<NormalForm> frontier{id};
    for (int len = 0; len < max_conjugator_length; ++len) {
        std::vector<NormalForm> next;
        for (const auto& w : frontier) {
            for (int s = 1; s <= sys.size(); ++s) {
                auto ws = multiply(w, NormalForm::from_letters(sys.gamma, Coeff::Z2, {s}));
                if (ws.length() != w.length() + 1) continue;
                if (seen.emplace(ws.str(), ws).second) next.push_back(ws);
            }
        }
        frontier = std::move(next);
    }

    std::map<std::string, Reflection> found;
    for (const auto& [key, w] : seen) {
        (void)key;
        for (int s = 1; s <= sys.size(); ++s) {
            auto r = Reflection::conjugate(sys, s, w);
            found.emplace(r.element().str(), r);
        }
    }
    std::vector<Reflection> out;
    out.reserve(found.size());
    for (auto& [key, r] : found) {
        (void)key;
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const Reflection& a, const Reflection& b) {
        auto la = a.element().length(), lb = b.element().length();
        return la != lb ? la < lb : a.element().str() < b.element().str();
    });
    return out;
}

std::optional<Reflection> as_reflection(const CoxeterSystem& sys, const NormalForm& w) {
    require_right_angled(sys, "as_reflection");
    if (w.coeff() != Coeff::Z2)
        throw std::invalid_argument("as_reflection: expected a Z/2-mode word");
    if (!(w.graph() == sys.gamma))
        throw std::invalid_argument("as_reflection: word over a different system");

    // Greedy descent: a reflection of length > 1 always gets strictly
    // shorter under conjugation by some generator.
    NormalForm cur = w;
    bool shrunk = true;
    while (cur.length() > 1 && shrunk) {
        shrunk = false;
        for (int t = 1; t <= sys.size(); ++t) {
            auto tw = NormalForm::from_letters(sys.gamma, Coeff::Z2, {t});
            auto conj = multiply(multiply(tw, cur), tw);
            if (conj.length() < cur.length()) {
                cur = std::move(conj);
                shrunk = true;
                break;
            }
        }
    }
    if (cur.length() != 1) return std::nullopt;
    int s = cur.syllables().front().gen;
    return Reflection(w, sys.class_of[static_cast<std::size_t>(s - 1)]);
}

AdElement::AdElement(const CoxeterSystem& sys, NormalForm w, std::vector<long long> v)
    : w_(std::move(w)), v_(std::move(v)) {
    require_right_angled(sys, "AdElement");
    if (!(w_.graph() == sys.gamma) || w_.coeff() != Coeff::Z2)
        throw std::invalid_argument("AdElement: w must be a Z/2-mode word over Γ_W");
    if (v_.size() != static_cast<std::size_t>(sys.class_count()))
        throw std::invalid_argument("AdElement: vector length must be c(W) = " +
                                    std::to_string(sys.class_count()));
    auto ab = abelianize(w_);
    std::vector<long long> class_ab(v_.size(), 0);
    for (int s = 1; s <= sys.size(); ++s)
        class_ab[static_cast<std::size_t>(sys.class_of[static_cast<std::size_t>(s - 1)])] +=
            ab[static_cast<std::size_t>(s - 1)];
    for (std::size_t k = 0; k < v_.size(); ++k)
        if (((class_ab[k] - v_[k]) % 2 + 2) % 2 != 0)
            throw std::invalid_argument("AdElement: pullback condition violated at class " +
                                        std::to_string(k + 1));
}

AdElement AdElement::identity(const CoxeterSystem& sys) {
    return AdElement(sys, NormalForm(sys.gamma, Coeff::Z2),
                     std::vector<long long>(static_cast<std::size_t>(sys.class_count()), 0));
}

AdElement ad_multiply(const AdElement& a, const AdElement& b) {
    check_same_graph(a.w(), b.w(), "ad_multiply");
    if (a.v().size() != b.v().size())
        throw std::invalid_argument("ad_multiply: operands from different systems");
    std::vector<long long> v = a.v();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.v()[i];
    return AdElement(multiply(a.w(), b.w()), std::move(v));
}

AdElement ad_invert(const AdElement& a) {
    std::vector<long long> v = a.v();
    for (auto& x : v) x = -x;
    return AdElement(invert(a.w()), std::move(v));
}

bool ad_equals(const AdElement& a, const AdElement& b) {
    check_same_graph(a.w(), b.w(), "ad_equals");
    return a == b;
}

AdElement adjoint_generator(const CoxeterSystem& sys, const Reflection& x) {
    std::vector<long long> v(static_cast<std::size_t>(sys.class_count()), 0);
    v[static_cast<std::size_t>(x.class_index())] = 1;
    return AdElement(sys, x.element(), std::move(v));
}

NormalForm adjoint_to_coxeter(const AdElement& a) { return a.w(); }

std::vector<long long> adjoint_abelianization(const AdElement& a) { return a.v(); }

AdElement artin_to_adjoint(const CoxeterSystem& sys, const NormalForm& artin_word) {
    require_right_angled(sys, "artin_to_adjoint");
    if (artin_word.coeff() != Coeff::Z)
        throw std::invalid_argument("artin_to_adjoint: expected a Z-mode word");
    if (!(artin_word.graph() == sys.gamma))
        throw std::invalid_argument("artin_to_adjoint: word over a different system");

    AdElement acc = AdElement::identity(sys);
    for (const auto& syl : artin_word.syllables()) {
        std::vector<long long> v(static_cast<std::size_t>(sys.class_count()), 0);
        v[static_cast<std::size_t>(sys.class_of[static_cast<std::size_t>(syl.gen - 1)])] =
            syl.exp;
        std::vector<Syllable> wsyl;
        if (syl.exp % 2 != 0) wsyl.push_back({syl.gen, 1});
        acc = ad_multiply(
            acc, AdElement(sys, NormalForm::from_word(sys.gamma, Coeff::Z2, wsyl),
                           std::move(v)));
    }
    return acc;
}

NormalForm artin_to_coxeter(const CoxeterSystem& sys, const NormalForm& artin_word) {
    require_right_angled(sys, "artin_to_coxeter");
    if (artin_word.coeff() != Coeff::Z)
        throw std::invalid_argument("artin_to_coxeter: expected a Z-mode word");
    std::vector<Syllable> word;
    for (const auto& syl : artin_word.syllables())
        if (syl.exp % 2 != 0) word.push_back({syl.gen, 1});
    return NormalForm::from_word(artin_word.graph(), Coeff::Z2, word);
}

bool in_commutator_subgroup(const NormalForm& w) {
    for (long long v : abelianize(w))
        if (v % 2 != 0) return false;
    return true;
}

}  // namespace raq
