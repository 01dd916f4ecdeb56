// Test-only brute-force oracles, independent of the library implementation.
#pragma once

#include <set>
#include <vector>

namespace oracles {

// Dihedral group of order 2k: (rot, flip) with
// (i,a)(j,b) = (i + (-1)^a j mod k, a xor b).
struct Dihedral {
    int k;
    int rot;
    int flip;
    auto operator<=>(const Dihedral&) const = default;
};

inline Dihedral dmul(const Dihedral& x, const Dihedral& y) {
    int j = x.flip ? (x.k - y.rot) % x.k : y.rot;
    return {x.k, (x.rot + j) % x.k, x.flip ^ y.flip};
}

// Permutations of {0..n-1}: apply x, then y.
using Perm = std::vector<int>;
inline Perm pmul(const Perm& x, const Perm& y) {
    Perm out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[static_cast<std::size_t>(x[i])];
    return out;
}

// Signed permutations of {1..n}: image[i] in {±1..±n}.
using SPerm = std::vector<int>;
inline SPerm spmul(const SPerm& x, const SPerm& y) {
    SPerm out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        int xi = x[i];
        int mag = xi > 0 ? xi : -xi;
        int img = y[static_cast<std::size_t>(mag - 1)];
        out[i] = xi > 0 ? img : -img;
    }
    return out;
}

// Enumerate the group generated by gens and count the distinct conjugacy
// classes met by the generators.
template <typename Elem, typename Mul>
int brute_force_c(const std::vector<Elem>& gens, Mul mul) {
    std::set<Elem> elems(gens.begin(), gens.end());
    std::vector<Elem> frontier(gens.begin(), gens.end());
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = mul(x, g);
                if (elems.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    std::set<std::vector<Elem>> classes;
    for (const auto& s : gens) {
        std::set<Elem> cls;
        for (const auto& g : elems) {
            // Inverse by powering: powers cycle back to g at g^{ord+1}.
            std::vector<Elem> powers{g};
            while (true) {
                Elem nxt = mul(powers.back(), g);
                if (nxt == g) break;
                powers.push_back(nxt);
            }
            Elem gi = powers.size() >= 2 ? powers[powers.size() - 2] : powers.back();
            cls.insert(mul(mul(gi, s), g));
        }
        classes.insert(std::vector<Elem>(cls.begin(), cls.end()));
    }
    return static_cast<int>(classes.size());
}

}  // namespace oracles
