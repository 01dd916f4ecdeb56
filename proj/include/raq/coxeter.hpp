#pragma once

#include <string>
#include <vector>

#include "raq/graph.hpp"

namespace raq {

/// Sentinel for an infinite bond label m(s,t) = ∞. Serialized as "inf".
constexpr int kInfiniteOrder = -1;

/// Symmetric |S|×|S| table of bond orders with m(s,t) = 1 iff s = t.
/// Finite entries are >= 1; kInfiniteOrder stands for ∞.
class CoxeterMatrix {
public:
    /// Row-major entries, validated: symmetry, unit diagonal, entries in
    /// {2,3,...} ∪ {∞} off the diagonal. Throws std::invalid_argument with
    /// the offending indices otherwise.
    CoxeterMatrix(int s_count, std::vector<int> entries);

    int size() const { return s_; }
    /// 1-indexed; returns kInfiniteOrder for ∞.
    int order(int s, int t) const;

    /// Every entry in {1, 2, ∞}.
    bool is_right_angled() const;

    /// The (n-1)-generator matrix of the symmetric group Σ_n:
    /// consecutive generators have order 3, distant ones commute.
    static CoxeterMatrix symmetric_group(int n);

    /// Right-angled matrix from a graph: edge ⇒ 2, non-edge ⇒ ∞.
    static CoxeterMatrix right_angled(const SimpleGraph& gamma);

    bool operator==(const CoxeterMatrix&) const = default;

private:
    int s_ = 0;
    std::vector<int> entries_;
};

/// A Coxeter matrix together with the derived combinatorial data: the graph
/// Γ_W (edges where 2 <= m(s,t) < ∞), the partition of S into
/// reflection-conjugacy classes, and one representative per class.
///
/// Classes are the connected components of the graph on S whose edges are
/// the pairs with finite odd m(s,t).
struct CoxeterSystem {
    CoxeterMatrix matrix;
    SimpleGraph gamma;
    std::vector<std::vector<int>> classes;   // each sorted; ordered by least member
    std::vector<int> class_of;               // class_of[s-1] = class index of generator s
    std::vector<int> representatives;        // least generator of each class
    bool right_angled = false;

    int size() const { return matrix.size(); }
    int class_count() const { return static_cast<int>(classes.size()); }
};

CoxeterSystem build_system(const CoxeterMatrix& m);

/// Right-angled system straight from its graph Γ_W.
CoxeterSystem build_right_angled_system(const SimpleGraph& gamma);

/// Abelianization data: W_ab ≅ (Z/2)^c, (A_W)_ab ≅ Z^c and Ad(X_W)_ab ≅ Z^c
/// where c = c(W), plus the class-index map S → [c].
struct AbelianizationDescriptors {
    int c = 0;
    std::vector<int> class_of;

    std::string w_ab() const;   // "(Z/2)^c"
    std::string a_ab() const;   // "Z^c"
    std::string ad_ab() const;  // "Z^c"
};

AbelianizationDescriptors abelianization_descriptors(const CoxeterSystem& sys);

}  // namespace raq
