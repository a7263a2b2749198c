// Command-line front end: tower validation, spectra, functional calculus,
// Gelfand data, and the demo counterexamples.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loctower/character.hpp"
#include "loctower/funcalc.hpp"
#include "loctower/function_algebra.hpp"
#include "loctower/function_spec.hpp"
#include "loctower/io.hpp"
#include "loctower/spectrum.hpp"
#include "loctower/tower.hpp"

namespace {

using loctower::Complex;
using json = nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw loctower::TowerError(loctower::ErrorCode::BadInput, "cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

loctower::OperatorTower load_tower(const std::string& path, double coh_tol) {
    return loctower::io::tower_from_json(loctower::io::parse_text(read_file(path)), coh_tol);
}

loctower::FunctionSpec parse_fn_arg(const std::string& spec) {
    if (spec.rfind("named:", 0) == 0)
        return loctower::io::named_function_from_string(spec.substr(6));
    if (spec.rfind("@", 0) == 0)
        return loctower::io::function_spec_from_json(
            loctower::io::parse_text(read_file(spec.substr(1))));
    if (!spec.empty() && spec.front() == '{')
        return loctower::io::function_spec_from_json(loctower::io::parse_text(spec));
    // Fall back to a file path.
    return loctower::io::function_spec_from_json(loctower::io::parse_text(read_file(spec)));
}

void emit(const json& doc, const std::string& out_path, bool pretty) {
    const std::string text = pretty ? doc.dump(2) + "\n" : doc.dump() + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw loctower::TowerError(loctower::ErrorCode::BadInput,
                                       "cannot write \"" + out_path + "\"");
        out << text;
    }
}

/// The diagonal tower of the number-matrix example, truncated at N levels.
loctower::OperatorTower number_matrix_tower(int n_levels) {
    std::vector<int> dims;
    std::vector<Complex> entries;
    for (int k = 1; k <= n_levels; ++k) {
        dims.push_back(k);
        entries.push_back(k % 2 == 1 ? Complex(k, 0.0) : Complex(1.0 / k, 0.0));
    }
    return loctower::OperatorTower::diagonal(loctower::IndexChain(dims), entries);
}

json demo_number_matrix() {
    const auto tower = number_matrix_tower(6);
    const auto spectrum = loctower::local_spectrum(tower);
    json doc = loctower::io::spectrum_to_json(spectrum);
    doc["demo"] = "number-matrix";
    return doc;
}

json demo_exp_calculus() {
    std::vector<int> dims{1, 2, 3, 4};
    std::vector<Complex> entries{{-1.0, 0.0}, {0.0, 0.0}, {0.5, 0.0}, {2.0, 0.0}};
    const auto tower =
        loctower::OperatorTower::diagonal(loctower::IndexChain(dims), entries);
    const auto f = loctower::FunctionSpec::named(loctower::NamedFunction::Exp);
    const auto image = loctower::apply_function(tower, f);
    const auto report = loctower::check_spectral_mapping(tower, f);
    json doc;
    doc["demo"] = "exp-calculus";
    doc["tower"] = loctower::io::tower_to_json(tower);
    doc["image"] = loctower::io::tower_to_json(image);
    doc["hausdorff"] = report.hausdorff;
    doc["pass"] = report.pass;
    return doc;
}

json demo_noncontinuous_character(int max_ell) {
    loctower::IntervalChain chain(loctower::IntervalChain::Mode::Halfline, 10);
    const auto report = loctower::noncontinuity_witness(chain, max_ell);
    json rows = json::array();
    for (const auto& row : report.rows) {
        json seminorms = json::array();
        for (double p : row.seminorms) seminorms.push_back(p);
        rows.push_back(json{{"l", row.ell},
                            {"bound", row.bound},
                            {"phi_value", row.phi_value},
                            {"p_n", std::move(seminorms)},
                            {"status", row.pass ? "PASS" : "FAIL"}});
    }
    return json{{"demo", "noncontinuous-character"}, {"rows", std::move(rows)},
                {"pass", report.pass}};
}

json demo_quotient_counterexample() {
    loctower::IntervalChain chain(loctower::IntervalChain::Mode::Symmetric, 3);
    const auto f = loctower::make_identity(chain);
    const auto g = loctower::make_clamp1(chain);
    const double p1 = loctower::seminorm_p(f - g, 1);
    const auto phi = loctower::evaluation_character(chain, 2.0);
    const Complex fv = phi(f), gv = phi(g);
    return json{{"demo", "quotient-counterexample"},
                {"p1_of_difference", p1},
                {"quotient_equal_level1", loctower::quotient_equal(f, g, 1, 1e-9)},
                {"phi_min_level", phi.min_level},
                {"f_at_2", loctower::io::complex_to_json(fv)},
                {"g_at_2", loctower::io::complex_to_json(gv)},
                {"difference_at_2", std::abs(fv - gv)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherent matrix towers: local spectra, functional calculus, Gelfand data"};
    app.require_subcommand(1);

    std::string input, out_path, fn_arg, demo_name;
    std::size_t level = 0;
    double tol = loctower::tol::eigen;
    double coh_tol = loctower::tol::coherence;
    double eig_tol = loctower::tol::eigen;
    int max_ell = 5;
    bool pretty = false;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("input", input, "tower file")->required();
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
        sub->add_flag("--pretty", pretty, "indent the output");
        sub->add_option("--tol", tol, "general tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--coh-tol", coh_tol, "coherence tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--eig-tol", eig_tol, "eigenvalue matching tolerance")
            ->check(CLI::PositiveNumber);
    };

    auto* c_validate = app.add_subcommand("validate", "validate a tower file");
    add_common(c_validate, true);
    auto* c_spectrum = app.add_subcommand("spectrum", "local spectrum of a tower");
    add_common(c_spectrum, true);
    auto* c_apply = app.add_subcommand("apply", "functional calculus f(T)");
    add_common(c_apply, true);
    c_apply->add_option("--fn", fn_arg, "function spec (named:<name>, inline JSON, or file)")
        ->required();
    auto* c_classify = app.add_subcommand("classify", "self-adjoint/unitary/normal flags");
    add_common(c_classify, true);
    auto* c_characters = app.add_subcommand("characters", "enumerate the character space");
    add_common(c_characters, true);
    auto* c_gelfand = app.add_subcommand("gelfand", "Gelfand transform of f(T)");
    add_common(c_gelfand, true);
    c_gelfand->add_option("--fn", fn_arg, "function spec")->required();
    auto* c_isometry = app.add_subcommand("isometry", "local isometry report for f(T)");
    add_common(c_isometry, true);
    c_isometry->add_option("--fn", fn_arg, "function spec")->required();
    auto* c_specmap = app.add_subcommand("specmap", "spectral mapping check for f");
    add_common(c_specmap, true);
    c_specmap->add_option("--fn", fn_arg, "function spec")->required();
    auto* c_restrict = app.add_subcommand("restrict", "extract one level of a tower");
    add_common(c_restrict, true);
    c_restrict->add_option("--level", level, "level to extract")->required();
    auto* c_demo = app.add_subcommand("demo", "worked demonstrations");
    c_demo
        ->add_option("name", demo_name,
                     "noncontinuous-character | quotient-counterexample | number-matrix | "
                     "exp-calculus")
        ->required();
    c_demo->add_option("--max-l", max_ell, "largest witness index")->check(CLI::PositiveNumber);
    add_common(c_demo, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        json doc;
        if (c_validate->parsed()) {
            const auto tower = load_tower(input, coh_tol);
            doc = json{{"valid", true},
                       {"dims", tower.chain().dims()},
                       {"normal", tower.is_normal(eig_tol)}};
        } else if (c_spectrum->parsed()) {
            doc = loctower::io::spectrum_to_json(
                loctower::local_spectrum(load_tower(input, coh_tol), eig_tol));
        } else if (c_apply->parsed()) {
            const auto tower = load_tower(input, coh_tol);
            doc = loctower::io::tower_to_json(
                loctower::apply_function(tower, parse_fn_arg(fn_arg), tol));
        } else if (c_classify->parsed()) {
            const auto c = loctower::classify(load_tower(input, coh_tol), tol);
            doc = json{{"self_adjoint", c.self_adjoint}, {"unitary", c.unitary},
                       {"normal", c.normal}};
        } else if (c_characters->parsed()) {
            doc = loctower::io::characters_to_json(
                loctower::enumerate_characters(load_tower(input, coh_tol), eig_tol));
        } else if (c_gelfand->parsed()) {
            const auto tower = load_tower(input, coh_tol);
            const loctower::AlgebraElement a{parse_fn_arg(fn_arg)};
            const auto chars = loctower::enumerate_characters(tower, eig_tol);
            doc = loctower::io::gelfand_to_json(chars, loctower::gelfand(tower, a, chars));
        } else if (c_isometry->parsed()) {
            const auto tower = load_tower(input, coh_tol);
            const auto r =
                loctower::local_isometry_check(tower, loctower::AlgebraElement{parse_fn_arg(fn_arg)});
            doc = json{{"element_norms", r.element_norms},
                       {"gelfand_norms", r.gelfand_norms},
                       {"worst_relative", r.worst_relative},
                       {"pass", r.pass}};
        } else if (c_specmap->parsed()) {
            const auto r = loctower::check_spectral_mapping(load_tower(input, coh_tol),
                                                            parse_fn_arg(fn_arg), tol);
            json a = json::array(), b = json::array();
            for (Complex z : r.spectrum_of_image) a.push_back(loctower::io::complex_to_json(z));
            for (Complex z : r.image_of_spectrum) b.push_back(loctower::io::complex_to_json(z));
            doc = json{{"spectrum_of_image", std::move(a)},
                       {"image_of_spectrum", std::move(b)},
                       {"hausdorff", r.hausdorff},
                       {"pass", r.pass}};
        } else if (c_restrict->parsed()) {
            const auto tower = load_tower(input, coh_tol);
            const loctower::ComplexMatrix m = tower.restrict_to(level);
            json entries = json::array();
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                for (Eigen::Index j = 0; j < m.cols(); ++j)
                    entries.push_back(loctower::io::complex_to_json(m(i, j)));
            doc = json{{"level", level}, {"dim", m.rows()}, {"entries", std::move(entries)}};
        } else if (c_demo->parsed()) {
            if (demo_name == "number-matrix") doc = demo_number_matrix();
            else if (demo_name == "exp-calculus") doc = demo_exp_calculus();
            else if (demo_name == "noncontinuous-character")
                doc = demo_noncontinuous_character(max_ell);
            else if (demo_name == "quotient-counterexample") doc = demo_quotient_counterexample();
            else
                throw loctower::TowerError(loctower::ErrorCode::BadInput,
                                           "unknown demo \"" + demo_name + "\"");
        }
        emit(doc, out_path, pretty);
        return 0;
    } catch (const loctower::TowerError& e) {
        const json err{{"code", loctower::error_code_name(e.code())},
                       {"message", e.message()},
                       {"context", e.context()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        const json err{{"code", "INTERNAL"}, {"message", e.what()}, {"context", ""}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
