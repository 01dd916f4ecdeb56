// raq: invariants of right-angled Coxeter groups, their Artin groups, and
// the adjoint groups of their Coxeter quandles.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "raq/coxeter.hpp"
#include "raq/io.hpp"
#include "raq/polyhedral.hpp"
#include "raq/quandle.hpp"
#include "raq/spectral.hpp"
#include "raq/verify.hpp"
#include "raq/words.hpp"

using nlohmann::ordered_json;

namespace {

struct CommonOptions {
    std::string graph_path;
    std::string matrix_path;
    int degree = 6;
    std::string model = "cw6";
    std::string format = "tsv";
    std::uint64_t seed = 0;
    std::size_t cell_cap = raq::kDefaultCellCap;

    raq::MobiusModel mobius() const {
        return model == "cw6" ? raq::MobiusModel::cw6 : raq::MobiusModel::simplicial20;
    }
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_matrix) {
    auto* g = cmd->add_option("--graph", opt.graph_path, "graph file (text or JSON)");
    if (with_matrix) {
        auto* m = cmd->add_option("--matrix", opt.matrix_path, "Coxeter matrix file");
        g->excludes(m);
        m->excludes(g);
    }
    cmd->add_option("--degree", opt.degree, "degree cap D")->check(CLI::NonNegativeNumber);
    cmd->add_option("--model", opt.model, "Möbius band model")
        ->check(CLI::IsMember({"cw6", "simplicial20"}));
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--seed", opt.seed, "seed for randomized suites");
    cmd->add_option("--cell-cap", opt.cell_cap, "product-cell cap")
        ->check(CLI::PositiveNumber);
}

// Load a system for the right-angled commands: a graph, or a matrix that
// must be right-angled.
raq::CoxeterSystem load_right_angled(const CommonOptions& opt) {
    if (!opt.graph_path.empty())
        return raq::build_right_angled_system(raq::read_graph_file(opt.graph_path));
    if (!opt.matrix_path.empty()) {
        auto matrix = raq::read_matrix_file(opt.matrix_path);
        if (!matrix.is_right_angled())
            throw std::invalid_argument(
                "this command needs a right-angled system; the matrix has other bond orders "
                "(only `info` accepts general Coxeter matrices)");
        return raq::build_system(matrix);
    }
    throw std::invalid_argument("no input: pass --graph or --matrix");
}

int cmd_info(const CommonOptions& opt) {
    raq::CoxeterSystem sys = [&] {
        if (!opt.matrix_path.empty())
            return raq::build_system(raq::read_matrix_file(opt.matrix_path));
        if (!opt.graph_path.empty())
            return raq::build_right_angled_system(raq::read_graph_file(opt.graph_path));
        throw std::invalid_argument("no input: pass --graph or --matrix");
    }();
    auto ab = raq::abelianization_descriptors(sys);

    if (opt.format == "json") {
        ordered_json j;
        j["generators"] = sys.size();
        j["right_angled"] = sys.right_angled;
        j["c"] = sys.class_count();
        j["classes"] = sys.classes;
        j["representatives"] = sys.representatives;
        j["w_ab"] = ab.w_ab();
        j["a_ab"] = ab.a_ab();
        j["ad_ab"] = ab.ad_ab();
        auto edges = ordered_json::array();
        for (const auto& [u, v] : sys.gamma.edges()) edges.push_back({u, v});
        j["gamma_edges"] = std::move(edges);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "generators\t" << sys.size() << "\n";
    std::cout << "right_angled\t" << (sys.right_angled ? "yes" : "no") << "\n";
    std::cout << "c\t" << sys.class_count() << "\n";
    for (std::size_t k = 0; k < sys.classes.size(); ++k) {
        std::cout << "class " << k + 1 << "\t{";
        for (std::size_t i = 0; i < sys.classes[k].size(); ++i)
            std::cout << (i ? "," : "") << sys.classes[k][i];
        std::cout << "}\n";
    }
    std::cout << "w_ab\t" << ab.w_ab() << "\n";
    std::cout << "a_ab\t" << ab.a_ab() << "\n";
    std::cout << "ad_ab\t" << ab.ad_ab() << "\n";
    std::cout << "gamma_edges\t";
    for (std::size_t i = 0; i < sys.gamma.edges().size(); ++i) {
        const auto& [u, v] = sys.gamma.edges()[i];
        std::cout << (i ? " " : "") << "{" << u << "," << v << "}";
    }
    std::cout << "\n";
    return 0;
}

int cmd_word(const CommonOptions& opt, const std::string& mode,
             const std::string& expression) {
    auto sys = load_right_angled(opt);
    if (mode == "W" || mode == "A") {
        auto coeff = mode == "W" ? raq::Coeff::Z2 : raq::Coeff::Z;
        auto nf = raq::NormalForm::from_word(sys.gamma, coeff, raq::parse_word(expression));
        if (opt.format == "json") {
            ordered_json j;
            j["mode"] = mode;
            j["normal_form"] = nf.str();
            j["length"] = nf.length();
            j["abelianization"] = raq::abelianize(nf);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << nf.str() << "\n";
        }
        return 0;
    }
    // Adjoint mode: factors e(<coxeter word>)^k; each word must be a reflection.
    auto factors = raq::parse_adjoint_expression(expression);
    auto acc = raq::AdElement::identity(sys);
    for (const auto& factor : factors) {
        auto word = raq::NormalForm::from_word(sys.gamma, raq::Coeff::Z2,
                                               factor.reflection_word);
        auto refl = raq::as_reflection(sys, word);
        if (!refl)
            throw std::invalid_argument(
                "e(" + word.str() +
                "): not a reflection (no conjugate of a single generator equals it)");
        auto gen = raq::adjoint_generator(sys, *refl);
        auto power = raq::AdElement::identity(sys);
        long long reps = factor.exp < 0 ? -factor.exp : factor.exp;
        for (long long i = 0; i < reps; ++i) power = raq::ad_multiply(power, gen);
        if (factor.exp < 0) power = raq::ad_invert(power);
        acc = raq::ad_multiply(acc, power);
    }
    ordered_json j;
    j["w"] = acc.w().str();
    j["v"] = acc.v();
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
    return 0;
}

int cmd_betti(const CommonOptions& opt, const std::string& space) {
    auto sys = load_right_angled(opt);
    auto k = raq::flag_complex(sys.gamma);
    auto pair = space == "BW"    ? raq::model_rp_pair(opt.degree + 1)
                : space == "BA"  ? raq::model_circle_pair()
                                 : raq::model_mobius_pair(opt.mobius());
    auto complex = raq::polyhedral_product_complex(k, pair, opt.degree + 1, opt.cell_cap);
    auto b = raq::betti(complex, opt.degree);

    if (opt.format == "json") {
        ordered_json j;
        auto degrees = ordered_json::array();
        for (int d = 0; d <= opt.degree; ++d) degrees.push_back(d);
        j["degrees"] = std::move(degrees);
        j["betti"] = b;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "degree\tbetti\n";
        for (int d = 0; d <= opt.degree; ++d)
            std::cout << d << "\t" << b[static_cast<std::size_t>(d)] << "\n";
    }
    return 0;
}

int cmd_verify(const CommonOptions& opt, std::vector<std::string> suites) {
    auto sys = load_right_angled(opt);
    if (suites.empty()) suites = raq::verify::suite_names();
    raq::verify::Options vopt;
    vopt.degree = opt.degree;
    vopt.seed = opt.seed;
    vopt.model = opt.mobius();
    vopt.cell_cap = opt.cell_cap;

    bool all_passed = true;
    if (opt.format == "json") {
        ordered_json out;
        out["seed"] = opt.seed;
        out["degree"] = opt.degree;
        auto results = ordered_json::array();
        for (const auto& name : suites) {
            auto result = raq::verify::run_suite(name, sys, vopt);
            ordered_json j;
            j["suite"] = result.name;
            j["passed"] = result.passed;
            j["checks"] = result.lines;
            if (name == "collapse") {
                auto report = raq::collapse_crosscheck(sys.gamma, opt.degree, vopt.model,
                                                       vopt.cell_cap);
                auto e3 = ordered_json::array(), betti = ordered_json::array();
                for (const auto& row : report.rows) {
                    e3.push_back(row.lhs);
                    betti.push_back(row.rhs);
                }
                j["e3"] = std::move(e3);
                j["betti"] = std::move(betti);
            }
            results.push_back(std::move(j));
            all_passed = all_passed && result.passed;
        }
        out["results"] = std::move(results);
        out["passed"] = all_passed;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "# seed\t" << opt.seed << "\tdegree\t" << opt.degree << "\n";
        for (const auto& name : suites) {
            auto result = raq::verify::run_suite(name, sys, vopt);
            for (const auto& line : result.lines)
                std::cout << result.name << "\t" << line << "\n";
            std::cout << result.name << "\t" << (result.passed ? "PASS" : "FAIL") << "\n";
            all_passed = all_passed && result.passed;
        }
        std::cout << (all_passed ? "PASS" : "FAIL") << "\n";
    }
    return all_passed ? 0 : 1;
}

int cmd_splitting(const CommonOptions& opt) {
    auto sys = load_right_angled(opt);
    auto summands = raq::smash_summands(sys.gamma, opt.degree, opt.mobius(), opt.cell_cap);
    auto report = raq::splitting_report(sys.gamma, opt.degree, opt.mobius(), opt.cell_cap);

    auto subset_str = [](std::uint64_t mask) {
        std::string out = "{";
        bool first = true;
        for (int v : raq::mask_to_vertices(mask)) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    };

    std::vector<long long> total(static_cast<std::size_t>(opt.degree) + 1, 0);
    std::vector<long long> artin_part(total.size(), 0), complement_part(total.size(), 0);
    for (const auto& s : summands)
        for (std::size_t d = 0; d < total.size(); ++d) {
            total[d] += s.reduced[d];
            (s.is_clique ? artin_part : complement_part)[d] += s.reduced[d];
        }

    bool pass = report.pass && total == report.adjoint && artin_part == report.artin;

    if (opt.format == "json") {
        ordered_json j;
        auto rows = ordered_json::array();
        for (const auto& s : summands) {
            ordered_json r;
            r["I"] = subset_str(s.subset_mask);
            r["face"] = s.is_clique;
            r["reduced_betti"] = s.reduced;
            rows.push_back(std::move(r));
        }
        j["summands"] = std::move(rows);
        j["total"] = total;
        j["adjoint"] = report.adjoint;
        j["artin"] = report.artin;
        j["complement"] = complement_part;
        j["passed"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "I\tface\treduced Betti 0.." << opt.degree << "\n";
        for (const auto& s : summands) {
            std::cout << subset_str(s.subset_mask) << "\t" << (s.is_clique ? "yes" : "no");
            for (long long b : s.reduced) std::cout << "\t" << b;
            std::cout << "\n";
        }
        auto row = [&](const std::string& label, const std::vector<long long>& v) {
            std::cout << label;
            for (long long b : v) std::cout << "\t" << b;
            std::cout << "\n";
        };
        row("total\t", total);
        row("adjoint\t", report.adjoint);
        row("artin\t", artin_part);
        row("complement\t", complement_part);
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of right-angled Coxeter groups, their Artin groups, and the "
                 "adjoint groups of their Coxeter quandles"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string mode = "W", space = "BAd", expression;
    std::vector<std::string> suites;

    auto* info = app.add_subcommand("info", "Coxeter system summary: c(W), classes, Γ_W");
    add_common(info, opt, true);

    auto* word = app.add_subcommand("word", "normal forms in W, A_W, or Ad(X_W)");
    add_common(word, opt, true);
    word->add_option("--mode", mode, "W, A, or Ad")->check(CLI::IsMember({"W", "A", "Ad"}));
    word->add_option("expression", expression, "word to evaluate")->required();

    auto* betti = app.add_subcommand("betti", "mod-2 Betti numbers of a classifying space");
    add_common(betti, opt, true);
    betti->add_option("--space", space, "BW, BA, or BAd")
        ->check(CLI::IsMember({"BW", "BA", "BAd"}));

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, opt, true);
    verify->add_option("--suites", suites, "subset of suites")->delimiter(',');

    auto* splitting = app.add_subcommand("splitting", "stable summand table");
    add_common(splitting, opt, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_info(opt);
        if (word->parsed()) return cmd_word(opt, mode, expression);
        if (betti->parsed()) return cmd_betti(opt, space);
        if (verify->parsed()) return cmd_verify(opt, suites);
        if (splitting->parsed()) return cmd_splitting(opt);
    } catch (const raq::CellCapExceeded& e) {
        std::cerr << "raq: error [cell-cap]: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "raq: error [input]: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "raq: error [range]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "raq: error [internal]: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
