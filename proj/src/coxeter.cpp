#include "raq/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace raq {

namespace {

std::string ij(int s, int t) {
    return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(int s_count, std::vector<int> entries)
    : s_(s_count), entries_(std::move(entries)) {
    if (s_ < 1) throw std::invalid_argument("CoxeterMatrix: need at least one generator");
    if (entries_.size() != static_cast<std::size_t>(s_) * s_)
        throw std::invalid_argument("CoxeterMatrix: expected " + std::to_string(s_ * s_) +
                                    " entries, got " + std::to_string(entries_.size()));
    for (int s = 1; s <= s_; ++s) {
        for (int t = 1; t <= s_; ++t) {
            int v = entries_[(s - 1) * s_ + (t - 1)];
            if (v != kInfiniteOrder && v < 1)
                throw std::invalid_argument("CoxeterMatrix: entry " + ij(s, t) +
                                            " must be a positive integer or inf");
            if (s == t && v != 1)
                throw std::invalid_argument("CoxeterMatrix: diagonal entry " + ij(s, t) +
                                            " must be 1");
            if (s != t && v == 1)
                throw std::invalid_argument("CoxeterMatrix: off-diagonal entry " + ij(s, t) +
                                            " must not be 1");
            if (v != entries_[(t - 1) * s_ + (s - 1)])
                throw std::invalid_argument("CoxeterMatrix: asymmetric at " + ij(s, t));
        }
    }
}

int CoxeterMatrix::order(int s, int t) const {
    if (s < 1 || s > s_ || t < 1 || t > s_)
        throw std::out_of_range("CoxeterMatrix::order: index out of range");
    return entries_[(s - 1) * s_ + (t - 1)];
}

bool CoxeterMatrix::is_right_angled() const {
    for (int v : entries_)
        if (v != 1 && v != 2 && v != kInfiniteOrder) return false;
    return true;
}

CoxeterMatrix CoxeterMatrix::symmetric_group(int n) {
    if (n < 2) throw std::invalid_argument("symmetric_group: need n >= 2");
    int s = n - 1;
    std::vector<int> entries(static_cast<std::size_t>(s) * s, 2);
    for (int i = 0; i < s; ++i) {
        entries[i * s + i] = 1;
        if (i + 1 < s) {
            entries[i * s + (i + 1)] = 3;
            entries[(i + 1) * s + i] = 3;
        }
    }
    return CoxeterMatrix(s, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::right_angled(const SimpleGraph& gamma) {
    int s = gamma.vertex_count();
    std::vector<int> entries(static_cast<std::size_t>(s) * s, kInfiniteOrder);
    for (int i = 1; i <= s; ++i) entries[(i - 1) * s + (i - 1)] = 1;
    for (const auto& [u, v] : gamma.edges()) {
        entries[(u - 1) * s + (v - 1)] = 2;
        entries[(v - 1) * s + (u - 1)] = 2;
    }
    return CoxeterMatrix(s, std::move(entries));
}

CoxeterSystem build_system(const CoxeterMatrix& m) {
    int n = m.size();

    std::vector<std::pair<int, int>> gamma_edges;
    for (int s = 1; s <= n; ++s)
        for (int t = s + 1; t <= n; ++t) {
            int v = m.order(s, t);
            if (v != kInfiniteOrder && v >= 2) gamma_edges.emplace_back(s, t);
        }

    // Reflection-conjugacy classes: components under finite odd bonds.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int s = 1; s <= n; ++s)
        for (int t = s + 1; t <= n; ++t) {
            int v = m.order(s, t);
            if (v != kInfiniteOrder && v % 2 == 1) parent[find(s - 1)] = find(t - 1);
        }

    std::vector<int> class_of(n, -1);
    std::vector<std::vector<int>> classes;
    for (int s = 0; s < n; ++s) {
        int root = find(s);
        if (class_of[root] == -1) {
            class_of[root] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        class_of[s] = class_of[root];
        classes[class_of[s]].push_back(s + 1);
    }

    std::vector<int> representatives;
    representatives.reserve(classes.size());
    for (const auto& cls : classes) representatives.push_back(cls.front());

    return CoxeterSystem{m, SimpleGraph(n, std::move(gamma_edges)), std::move(classes),
                         std::move(class_of), std::move(representatives), m.is_right_angled()};
}

CoxeterSystem build_right_angled_system(const SimpleGraph& gamma) {
    return build_system(CoxeterMatrix::right_angled(gamma));
}

std::string AbelianizationDescriptors::w_ab() const { return "(Z/2)^" + std::to_string(c); }
std::string AbelianizationDescriptors::a_ab() const { return "Z^" + std::to_string(c); }
std::string AbelianizationDescriptors::ad_ab() const { return "Z^" + std::to_string(c); }

AbelianizationDescriptors abelianization_descriptors(const CoxeterSystem& sys) {
    return AbelianizationDescriptors{sys.class_count(), sys.class_of};
}

}  // namespace raq
