#pragma once

#include <optional>
#include <vector>

#include "raq/coxeter.hpp"
#include "raq/words.hpp"

namespace raq {

/// A reflection w⁻¹sw of a right-angled Coxeter group, carrying the
/// conjugacy class of its underlying generator. Conjugation preserves that
/// class, so the index is well defined.
class Reflection {
public:
    static Reflection generator(const CoxeterSystem& sys, int s);
    /// The reflection w⁻¹ s w.
    static Reflection conjugate(const CoxeterSystem& sys, int s, const NormalForm& w);

    const NormalForm& element() const { return element_; }
    int class_index() const { return class_index_; }

    bool operator==(const Reflection& other) const {
        return class_index_ == other.class_index_ && element_ == other.element_;
    }

private:
    Reflection(NormalForm element, int class_index)
        : element_(std::move(element)), class_index_(class_index) {}

    NormalForm element_;
    int class_index_;

    friend std::optional<Reflection> as_reflection(const CoxeterSystem&, const NormalForm&);
    friend Reflection quandle_op(const Reflection&, const Reflection&);
    friend Reflection quandle_op_inverse(const Reflection&, const Reflection&);
};

/// The quandle operation x * y = y⁻¹xy.
Reflection quandle_op(const Reflection& x, const Reflection& y);

/// Inverse of right translation by y: x ↦ y x y⁻¹.
Reflection quandle_op_inverse(const Reflection& x, const Reflection& y);

/// All distinct reflections w⁻¹sw with |w| ≤ max_conjugator_length.
/// Deterministic order (by word length, then display form). Not closed
/// under the quandle operation in general.
std::vector<Reflection> enumerate_reflections(const CoxeterSystem& sys,
                                              int max_conjugator_length);

/// Decide whether a Z/2-mode word is a reflection, by greedy conjugation
/// descent; returns the reflection (with its class) if so.
std::optional<Reflection> as_reflection(const CoxeterSystem& sys, const NormalForm& w);

/// Element of Ad(X_W) in the pullback model: a pair (w, v) ∈ W × Z^{c(W)}
/// whose class-wise abelianizations agree mod 2.
class AdElement {
public:
    /// Validates the pullback condition; throws std::invalid_argument if
    /// (w, v) violates it or has the wrong vector length.
    AdElement(const CoxeterSystem& sys, NormalForm w, std::vector<long long> v);

    static AdElement identity(const CoxeterSystem& sys);

    const NormalForm& w() const { return w_; }
    const std::vector<long long>& v() const { return v_; }

    bool operator==(const AdElement& other) const { return v_ == other.v_ && w_ == other.w_; }

private:
    AdElement(NormalForm w, std::vector<long long> v) : w_(std::move(w)), v_(std::move(v)) {}

    NormalForm w_;
    std::vector<long long> v_;

    friend AdElement ad_multiply(const AdElement&, const AdElement&);
    friend AdElement ad_invert(const AdElement&);
    friend AdElement adjoint_generator(const CoxeterSystem&, const Reflection&);
};

/// Componentwise product (w₁w₂, v₁ + v₂); preserves the pullback invariant.
AdElement ad_multiply(const AdElement& a, const AdElement& b);
AdElement ad_invert(const AdElement& a);
bool ad_equals(const AdElement& a, const AdElement& b);

/// The generator e_x of Ad(X_W): the pair (x, u_{class(x)}).
AdElement adjoint_generator(const CoxeterSystem& sys, const Reflection& x);

/// The epimorphism Ad(X_W) → W: projection to the first coordinate.
NormalForm adjoint_to_coxeter(const AdElement& a);

/// The abelianization Ad(X_W) → Z^{c(W)}: projection to the second coordinate.
std::vector<long long> adjoint_abelianization(const AdElement& a);

/// The epimorphism A_W → Ad(X_W), a_s ↦ e_s, evaluated syllable by syllable.
AdElement artin_to_adjoint(const CoxeterSystem& sys, const NormalForm& artin_word);

/// The epimorphism A_W → W, a_s ↦ s.
NormalForm artin_to_coxeter(const CoxeterSystem& sys, const NormalForm& artin_word);

/// Membership in [W, W]: all exponent sums vanish mod 2.
bool in_commutator_subgroup(const NormalForm& w);

}  // namespace raq
