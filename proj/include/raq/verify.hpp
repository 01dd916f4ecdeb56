#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raq/cells.hpp"
#include "raq/coxeter.hpp"
#include "raq/polyhedral.hpp"

namespace raq::verify {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;   // tab-separated check rows

    void check(const std::string& label, bool ok);
    void note(const std::string& label, const std::string& value);
};

struct Options {
    int degree = 6;
    std::uint64_t seed = 0;
    MobiusModel model = MobiusModel::cw6;
    std::size_t cell_cap = kDefaultCellCap;
    int reflection_window = 3;     // conjugator length for quandle checks
    int word_samples = 1000;
};

/// Quandle axioms on the enumerated reflection set.
SuiteResult quandle_suite(const CoxeterSystem& sys, const Options& opt);
/// Defining relation of the adjoint group and the kernel of the projection
/// to W, in the pullback model.
SuiteResult pullback_suite(const CoxeterSystem& sys, const Options& opt);
/// The factorization of A_W → W through the adjoint group.
SuiteResult factorization_suite(const CoxeterSystem& sys, const Options& opt);
/// Stable-splitting Betti accounting for both pair models.
SuiteResult bbcg_suite(const SimpleGraph& g, const Options& opt);
/// Artin summand never exceeds the adjoint model.
SuiteResult splitting_suite(const SimpleGraph& g, const Options& opt);
/// Hilbert function of the algebraic page against the cellular model.
SuiteResult collapse_suite(const SimpleGraph& g, const Options& opt);
/// z classes generate, and the product/sum relations vanish.
SuiteResult generation_suite(const SimpleGraph& g, const Options& opt);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const CoxeterSystem& sys, const Options& opt);

}  // namespace raq::verify
