// plumbd: d-invariants, spin^c tables, and graded roots of negative-definite
// plumbed rational homology spheres, from a JSON plumbing graph.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "plumbd/plumbd.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string input;
    std::string format = "json";
    long t_max = 8;  // roots are built from square maximizers, whose minimum level is 0
    bool parallel = false;
    std::uint64_t seed = 0;
    long oracle_radius = -1;
    std::size_t corpus_count = 100;
    std::size_t corpus_max_vertices = 5;
};

plumbd::PlumbingMatrix accepted_matrix(const plumbd::PlumbingGraph& g) {
    plumbd::PlumbingMatrix m = plumbd::PlumbingMatrix::from_graph(g);
    if (!m.negative_definite())
        throw plumbd::NotNegativeDefiniteError(
            "plumbing matrix is not negative definite; manifold rejected");
    return m;
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (opt.format == a) return;
    throw plumbd::UnsupportedFormatError("format \"" + opt.format +
                                         "\" is not supported by this command");
}

int cmd_validate(const Options& opt) {
    require_format(opt, {"json"});
    plumbd::PlumbingGraph g;
    {
        std::ifstream in(opt.input);
        if (!in) throw plumbd::ParseError("cannot open " + opt.input);
        plumbd::json doc;
        try {
            doc = plumbd::json::parse(in);
        } catch (const plumbd::json::exception& e) {
            throw plumbd::ParseError(std::string("malformed JSON: ") + e.what());
        }
        g = plumbd::parse_graph(doc);
    }

    plumbd::json out = plumbd::validate_report_json(g);
    bool accepted = false;
    if (out["valid"].get<bool>()) {
        try {
            plumbd::PlumbingMatrix m = plumbd::PlumbingMatrix::from_graph(g);
            out["manifold"] = plumbd::manifold_json(m);
            out["matrix"] = plumbd::matrix_json(m.entries());
            plumbd::json pivots = plumbd::json::array();
            for (const auto& p : m.certificate().pivots) pivots.push_back(plumbd::rat_str(p));
            out["ldl_pivots"] = pivots;
            out["ldl_complete"] = m.certificate().complete;
            out["negative_definite"] = m.negative_definite();
            accepted = m.negative_definite();
        } catch (const plumbd::SingularMatrixError& e) {
            out["negative_definite"] = false;
            out["error"] = e.what();
        }
    }
    out["accepted"] = accepted;
    std::cout << out.dump(2) << "\n";
    return accepted ? kExitOk : kExitInputError;
}

int cmd_spinc(const Options& opt) {
    require_format(opt, {"json", "csv"});
    plumbd::PlumbingGraph g = plumbd::load_graph_file(opt.input);
    plumbd::PlumbingMatrix m = accepted_matrix(g);
    std::vector<plumbd::SpincClass> classes = plumbd::enumerate_spinc(m);
    if (opt.format == "csv")
        std::cout << plumbd::spinc_table_csv(classes);
    else
        std::cout << plumbd::spinc_table_json(m, classes).dump(2) << "\n";
    return kExitOk;
}

int cmd_dinv(const Options& opt) {
    require_format(opt, {"json", "csv"});
    plumbd::PlumbingGraph g = plumbd::load_graph_file(opt.input);
    plumbd::PlumbingMatrix m = accepted_matrix(g);
    std::vector<plumbd::SpincClass> classes = plumbd::enumerate_spinc(m);
    std::vector<plumbd::DInvariantReport> reports = plumbd::d_invariants_all(m, opt.parallel);
    if (opt.format == "csv")
        std::cout << plumbd::dinv_table_csv(classes, reports);
    else
        std::cout << plumbd::dinv_table_json(m, classes, reports).dump(2) << "\n";
    return kExitOk;
}

int cmd_root(const Options& opt) {
    require_format(opt, {"dot", "json"});
    plumbd::PlumbingGraph g = plumbd::load_graph_file(opt.input);
    plumbd::PlumbingMatrix m = accepted_matrix(g);
    std::vector<plumbd::SpincClass> classes = plumbd::enumerate_spinc(m);

    plumbd::json roots = plumbd::json::array();
    for (const auto& cls : classes) {
        plumbd::CharVector k = plumbd::canonical_rep(cls, m);
        plumbd::GradedRoot root = plumbd::graded_root(k, m, plumbd::Int(opt.t_max));
        if (opt.format == "dot") {
            std::cout << plumbd::root_to_dot(root, "class_" + std::to_string(cls.index));
        } else {
            plumbd::json j = plumbd::root_to_json(root);
            j["class_index"] = static_cast<long long>(cls.index);
            j["rep"] = plumbd::detail::intvec_json(k.coords);
            roots.push_back(j);
        }
    }
    if (opt.format == "json") {
        plumbd::json doc;
        doc["manifold"] = plumbd::manifold_json(m);
        doc["roots"] = roots;
        std::cout << doc.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    plumbd::VerifyOptions vopt;
    vopt.corpus.count = opt.corpus_count;
    vopt.corpus.max_vertices = opt.corpus_max_vertices;
    vopt.corpus.seed = opt.seed;
    vopt.oracle_radius = opt.oracle_radius;

    plumbd::VerifyOutcome out;
    if (!opt.input.empty()) {
        plumbd::PlumbingGraph g = plumbd::load_graph_file(opt.input);
        plumbd::PlumbingMatrix m = accepted_matrix(g);
        std::mt19937_64 rng(opt.seed);
        plumbd::verify_manifold(m, vopt, rng, out, opt.input);
        std::cout << "verified " << opt.input << ": " << out.classes << " classes, " << out.checks
                  << " checks, " << out.failures.size() << " failures\n";
        for (const auto& f : out.failures) std::cout << "MISMATCH " << f << "\n";
        plumbd::VerifyOutcome corpus_out = plumbd::run_verification(vopt, std::cout);
        return (out.ok() && corpus_out.ok()) ? kExitOk : kExitMismatch;
    }
    out = plumbd::run_verification(vopt, std::cout);
    return out.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-invariants of negative-definite plumbed rational homology spheres"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* sub, bool input_required) {
        auto* in = sub->add_option("input", opt.input, "plumbing graph JSON file");
        if (input_required) in->required();
        sub->add_option("--format", opt.format, "output format");
        sub->add_option("--seed", opt.seed, "corpus seed")->envname("PLUMBD_SEED");
        return sub;
    };

    CLI::App* validate = add_common(app.add_subcommand("validate", "check the graph and matrix"), true);
    CLI::App* spinc = add_common(app.add_subcommand("spinc", "enumerate spin^c classes"), true);
    CLI::App* dinv = add_common(app.add_subcommand("dinv", "compute d-invariants"), true);
    CLI::App* root = add_common(app.add_subcommand("root", "emit graded roots"), true);
    CLI::App* verify = add_common(app.add_subcommand("verify", "run oracle cross-checks"), false);

    dinv->add_flag("--parallel", opt.parallel, "compute classes in parallel");
    root->add_option("--t-max", opt.t_max, "top sublevel cut to keep (minimum level is 0)");
    verify->add_option("--oracle-radius", opt.oracle_radius, "override the brute-force box radius");
    verify->add_option("--count", opt.corpus_count, "number of random trees");
    verify->add_option("--max-vertices", opt.corpus_max_vertices, "largest random tree");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (spinc->parsed()) return cmd_spinc(opt);
        if (dinv->parsed()) return cmd_dinv(opt);
        if (root->parsed()) return cmd_root(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const plumbd::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const plumbd::ValidationError& e) {
        std::cerr << "invalid graph: " << e.what() << "\n";
        return kExitInputError;
    } catch (const plumbd::UnsupportedFormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const plumbd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
