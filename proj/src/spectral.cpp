#include "raq/spectral.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace raq {

int E2Key::p() const {
    int sum = 0;
    for (int e : exps) sum += e;
    return sum;
}

namespace {

bool is_clique(const SimpleGraph& g, std::uint64_t mask) {
    std::uint64_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        if (rest & ~g.neighbor_mask(v)) return false;
    }
    return true;
}

std::uint64_t support_mask(const std::vector<int>& exps) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) mask |= std::uint64_t{1} << i;
    return mask;
}

void toggle(E2Element& e, E2Key key) {
    auto it = e.find(key);
    if (it == e.end())
        e.insert(std::move(key));
    else
        e.erase(it);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Degree-p monomials with clique support, in lexicographic order on the
// exponent vector.
void enumerate_monomials(const SimpleGraph& g, int p, std::vector<int>& exps, std::size_t from,
                         int remaining, std::uint64_t support,
                         std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(exps);
        return;
    }
    for (std::size_t i = from; i < exps.size(); ++i) {
        std::uint64_t bit = std::uint64_t{1} << i;
        if (support & ~g.neighbor_mask(static_cast<int>(i) + 1)) continue;
        for (int e = 1; e <= remaining; ++e) {
            exps[i] = e;
            enumerate_monomials(g, p, exps, i + 1, remaining - e, support | bit, out);
        }
        exps[i] = 0;
    }
}

}  // namespace

long long sr_dim(const SimpleGraph& g, int d) {
    if (d < 0) throw std::invalid_argument("sr_dim: negative degree");
    if (d == 0) return 1;
    auto counts = clique_count_by_size(g);
    long long total = 0;
    for (std::size_t k = 1; k < counts.size(); ++k)
        total += counts[k] * binomial(d - 1, static_cast<int>(k) - 1);
    return total;
}

E2Element d2(const SimpleGraph& g, const E2Element& e) {
    E2Element out;
    for (const auto& key : e) {
        std::uint32_t rest = key.jmask;
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            E2Key nk = key;
            nk.jmask &= ~(std::uint32_t{1} << j);
            nk.exps[static_cast<std::size_t>(j)] += 2;
            if (!is_clique(g, support_mask(nk.exps))) continue;
            toggle(out, std::move(nk));
        }
    }
    return out;
}

E2Element e2_multiply(const SimpleGraph& g, const E2Element& a, const E2Element& b) {
    E2Element out;
    for (const auto& ka : a) {
        for (const auto& kb : b) {
            if (ka.jmask & kb.jmask) continue;
            E2Key nk;
            nk.jmask = ka.jmask | kb.jmask;
            nk.exps = ka.exps;
            for (std::size_t i = 0; i < nk.exps.size(); ++i) nk.exps[i] += kb.exps[i];
            if (!is_clique(g, support_mask(nk.exps))) continue;
            toggle(out, std::move(nk));
        }
    }
    return out;
}

E3Page::E3Page(SimpleGraph g, int max_total_degree) : g_(std::move(g)), D_(max_total_degree) {
    if (D_ < 0) throw std::invalid_argument("E3Page: negative degree cap");
    if (D_ > 62) throw std::invalid_argument("E3Page: degree cap too large");
    int m = g_.vertex_count();
    if (m > 20) throw std::invalid_argument("E3Page: too many vertices");
    std::uint32_t all_j = m == 0 ? 0 : (std::uint32_t{1} << m) - 1;

    // Stratum bases for all bidegrees of total degree <= D+1 (targets of the
    // top-degree differentials included).
    for (int d = 0; d <= D_ + 1; ++d) {
        for (int q = 0; q <= std::min(m, d); ++q) {
            int p = d - q;
            Stratum s;
            std::vector<std::vector<int>> monos;
            std::vector<int> exps(static_cast<std::size_t>(m), 0);
            enumerate_monomials(g_, p, exps, 0, p, 0, monos);
            for (auto& mono : monos) {
                for (std::uint32_t J = 0;; ++J) {
                    if (std::popcount(J) == q) s.keys.push_back({mono, J});
                    if (J == all_j) break;
                }
            }
            std::sort(s.keys.begin(), s.keys.end());
            for (std::size_t i = 0; i < s.keys.size(); ++i) s.index.emplace(s.keys[i], i);
            s.image = F2RowSpace(s.keys.size());
            strata_[{p, q}] = std::move(s);
        }
    }

    // Differentials out of every stratum of total degree <= D feed the image
    // spaces of their targets; kernels against those images give E₃.
    std::map<std::pair<int, int>, F2Matrix> out_maps;
    for (auto& [pq, s] : strata_) {
        auto [p, q] = pq;
        if (p + q > D_ || q == 0) continue;
        auto& target = strata_.at({p + 2, q - 1});
        F2Matrix mat(s.keys.size(), target.keys.size());
        for (std::size_t r = 0; r < s.keys.size(); ++r) {
            E2Element image = d2(g_, {s.keys[r]});
            for (const auto& key : image) mat.flip(r, target.index.at(key));
        }
        if (p + q + 1 <= D_)
            for (std::size_t r = 0; r < mat.rows(); ++r) target.image.insert(mat.row(r));
        out_maps.emplace(pq, std::move(mat));
    }

    for (auto& [pq, s] : strata_) {
        auto [p, q] = pq;
        if (p + q > D_) continue;
        std::vector<F2Row> cycles;
        auto it = out_maps.find(pq);
        if (it == out_maps.end()) {
            // q = 0: everything is a cycle.
            cycles.reserve(s.keys.size());
            for (std::size_t r = 0; r < s.keys.size(); ++r) {
                F2Row row(f2_words(s.keys.size()), 0);
                f2_flip(row, r);
                cycles.push_back(std::move(row));
            }
        } else {
            cycles = left_kernel(it->second);
        }
        F2RowSpace quotient(s.keys.size());
        for (auto& c : cycles) {
            s.image.reduce(c);
            quotient.insert(std::move(c));
        }
        s.quotient = quotient.rows();
    }
}

const E3Page::Stratum& E3Page::stratum(int p, int q) const {
    auto it = strata_.find({p, q});
    if (it == strata_.end())
        throw std::out_of_range("E3Page: bidegree (" + std::to_string(p) + "," +
                                std::to_string(q) + ") outside the computed range");
    return it->second;
}

F2Row E3Page::to_row(const Stratum& s, const E2Element& e) const {
    F2Row row(f2_words(s.keys.size()), 0);
    for (const auto& key : e) {
        auto it = s.index.find(key);
        if (it == s.index.end())
            throw std::invalid_argument("E3Page: element does not lie in this bidegree");
        f2_flip(row, it->second);
    }
    return row;
}

long long E3Page::dim(int p, int q) const {
    if (p < 0 || q < 0 || p + q > D_ || q > g_.vertex_count()) return 0;
    return static_cast<long long>(stratum(p, q).quotient.size());
}

long long E3Page::dim(int d) const {
    if (d < 0 || d > D_) throw std::out_of_range("E3Page::dim: degree outside cap");
    long long total = 0;
    for (int q = 0; q <= std::min(d, g_.vertex_count()); ++q) total += dim(d - q, q);
    return total;
}

std::vector<long long> E3Page::hilbert() const {
    std::vector<long long> h;
    h.reserve(static_cast<std::size_t>(D_) + 1);
    for (int d = 0; d <= D_; ++d) h.push_back(dim(d));
    return h;
}

E3Class E3Page::reduce(int p, int q, const E2Element& cycle) const {
    const Stratum& s = stratum(p, q);
    F2Row row = to_row(s, cycle);
    s.image.reduce(row);
    return E3Class{p, q, std::move(row)};
}

E2Element E3Page::representative(const E3Class& cls) const {
    const Stratum& s = stratum(cls.p, cls.q);
    E2Element out;
    for (std::size_t i = 0; i < s.keys.size(); ++i)
        if (f2_get(cls.coords, i)) out.insert(s.keys[i]);
    return out;
}

std::vector<E3Class> E3Page::basis(int p, int q) const {
    const Stratum& s = stratum(p, q);
    std::vector<E3Class> out;
    out.reserve(s.quotient.size());
    for (const auto& row : s.quotient) out.push_back(E3Class{p, q, row});
    return out;
}

E3Class E3Page::z_class(int i, std::uint32_t I_mask) const {
    int m = g_.vertex_count();
    if (i < 1 || i > m) throw std::out_of_range("z_class: generator index out of range");
    std::uint64_t all = (std::uint64_t{1} << m) - 1;
    std::uint64_t Ni =
        all & ~g_.neighbor_mask(i) & ~(std::uint64_t{1} << (i - 1));  // non-neighbors, minus i
    if (I_mask & ~Ni)
        throw std::invalid_argument(
            "z_class: index set must consist of non-neighbors of the generator "
            "(otherwise x_i y_I is not a d₂-cycle)");

    E2Key key;
    key.exps.assign(static_cast<std::size_t>(m), 0);
    key.exps[static_cast<std::size_t>(i - 1)] = 1;
    key.jmask = I_mask;
    E2Element rep{key};
    if (!d2(g_, rep).empty()) throw std::logic_error("z_class: representative is not a cycle");
    return reduce(1, std::popcount(I_mask), rep);
}

E3Class E3Page::z_class(int i, const std::vector<int>& I) const {
    std::uint32_t mask = 0;
    for (int j : I) {
        if (j < 1 || j > g_.vertex_count()) throw std::out_of_range("z_class: bad index in I");
        mask |= std::uint32_t{1} << (j - 1);
    }
    return z_class(i, mask);
}

E3Class E3Page::product(const E3Class& a, const E3Class& b) const {
    int p = a.p + b.p, q = a.q + b.q;
    if (p + q > D_)
        throw std::out_of_range("E3Page::product: degree " + std::to_string(p + q) +
                                " exceeds the page cap " + std::to_string(D_));
    if (q > g_.vertex_count()) return E3Class{p, q, {}};  // more y's than vertices: zero
    return reduce(p, q, e2_multiply(g_, representative(a), representative(b)));
}

long long E3Page::e2_dim(int p, int q) const {
    if (p < 0 || q < 0 || p + q > D_ + 1 || q > g_.vertex_count()) return 0;
    return static_cast<long long>(stratum(p, q).keys.size());
}

std::vector<std::pair<int, std::uint32_t>> z_generator_indices(const SimpleGraph& g,
                                                               int max_degree) {
    std::vector<std::pair<int, std::uint32_t>> out;
    int m = g.vertex_count();
    for (int i = 1; i <= m; ++i) {
        std::uint32_t Ni = static_cast<std::uint32_t>(((std::uint64_t{1} << m) - 1) &
                                                      ~g.neighbor_mask(i)) &
                           ~(std::uint32_t{1} << (i - 1));
        // Subsets of N_i, smallest first.
        std::vector<std::uint32_t> subsets;
        for (std::uint32_t I = Ni;; I = (I - 1) & Ni) {
            subsets.push_back(I);
            if (I == 0) break;
        }
        std::sort(subsets.begin(), subsets.end(),
                  [](std::uint32_t a, std::uint32_t b) {
                      int ca = std::popcount(a), cb = std::popcount(b);
                      return ca != cb ? ca < cb : a < b;
                  });
        for (std::uint32_t I : subsets)
            if (1 + std::popcount(I) <= max_degree) out.emplace_back(i, I);
    }
    return out;
}

GenerationReport generation_check(const E3Page& page, int up_to) {
    if (up_to > page.degree_cap())
        throw std::out_of_range("generation_check: degree exceeds the page cap");
    const SimpleGraph& g = page.graph();
    int m = g.vertex_count();
    auto gens = z_generator_indices(g, up_to);

    // spans[(p,q)] = span of products of z classes with p factors and total
    // y-degree q, in canonical page coordinates.
    std::map<std::pair<int, int>, F2RowSpace> spans;
    for (int d = 0; d <= up_to; ++d)
        for (int q = 0; q <= std::min(d, m); ++q)
            spans.emplace(std::make_pair(d - q, q),
                          F2RowSpace(static_cast<std::size_t>(page.e2_dim(d - q, q))));

    {
        E2Key unit;
        unit.exps.assign(static_cast<std::size_t>(m), 0);
        auto cls = page.reduce(0, 0, {unit});
        spans.at({0, 0}).insert(cls.coords);
    }

    std::vector<std::pair<int, E3Class>> z_classes;  // (|I|, class)
    z_classes.reserve(gens.size());
    for (const auto& [i, I] : gens) z_classes.emplace_back(std::popcount(I), page.z_class(i, I));

    for (int d = 1; d <= up_to; ++d) {
        for (int q = 0; q <= std::min(d, m); ++q) {
            int p = d - q;
            if (p < 1) continue;
            auto& span = spans.at({p, q});
            for (const auto& [k, zc] : z_classes) {
                if (k > q) continue;
                auto prev = spans.find({p - 1, q - k});
                if (prev == spans.end()) continue;
                for (const auto& row : prev->second.rows()) {
                    E3Class b{p - 1, q - k, row};
                    span.insert(page.product(zc, b).coords);
                }
            }
        }
    }

    GenerationReport report;
    for (int d = 0; d <= up_to; ++d) {
        long long lhs = 0;
        for (int q = 0; q <= std::min(d, m); ++q) lhs += spans.at({d - q, q}).dim();
        report.rows.push_back({d, lhs, page.dim(d)});
        report.pass = report.pass && report.rows.back().ok();
    }
    return report;
}

CollapseReport collapse_crosscheck(const SimpleGraph& g, int up_to, MobiusModel model,
                                   std::size_t cell_cap) {
    E3Page page(g, up_to);
    auto h = page.hilbert();
    auto b = betti(
        polyhedral_product_complex(flag_complex(g), model_mobius_pair(model), up_to + 1, cell_cap),
        up_to);
    CollapseReport report;
    for (int d = 0; d <= up_to; ++d) {
        report.rows.push_back(
            {d, h[static_cast<std::size_t>(d)], b[static_cast<std::size_t>(d)]});
        report.pass = report.pass && report.rows.back().ok();
    }
    return report;
}

}  // namespace raq
