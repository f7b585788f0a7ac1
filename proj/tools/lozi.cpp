#include "lozi/admissible.hpp"
#include "lozi/attractor.hpp"
#include "lozi/error.hpp"
#include "lozi/geometry.hpp"
#include "lozi/io.hpp"
#include "lozi/manifold.hpp"
#include "lozi/oracle.hpp"
#include "lozi/symbolic.hpp"
#include "lozi/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace lozi;

// Exit codes: 0 done (including inconclusive verdicts), 1 word rejected,
// 2 usage or input error, 3 internal inconsistency or numeric failure.
constexpr int k_exit_ok = 0;
constexpr int k_exit_rejected = 1;
constexpr int k_exit_usage = 2;
constexpr int k_exit_internal = 3;

Params make_params(const std::string& a, const std::string& b) {
    Params p = Params::parse(a, b);
    if (!p.in_s()) {
        std::cerr << "warning: (a, b) = (" << p.a() << ", " << p.b()
                  << ") lies outside the hyperbolicity set S; the window and its "
                     "symbolic data are still computed exactly, but the theory "
                     "behind them is not guaranteed to apply\n";
    }
    return p;
}

/// Renders through a buffer so partially written files never appear.
void emit(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    std::ostringstream buf;
    fn(buf);
    if (path.empty() || path == "-") {
        std::cout << buf.str();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open '" + path + "' for writing");
    out << buf.str();
    if (!out.flush()) throw DomainError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonArgs {
    std::string a;
    std::string b;
    int depth = 6;
    std::string out = "-";
};

void add_common(CLI::App* cmd, CommonArgs& c, int max_depth = ManifoldWindow::k_max_depth) {
    cmd->add_option("--a", c.a, "parameter a, an exact rational like 7/4 or 1.75")->required();
    cmd->add_option("--b", c.b, "parameter b, an exact rational like 1/2 or 0.5")->required();
    cmd->add_option("--depth", c.depth, "window depth N (iterations of the seed arc)")
        ->check(CLI::Range(1, max_depth))
        ->capture_default_str();
    cmd->add_option("-o,--output", c.out, "output file, '-' for stdout")->capture_default_str();
}

int run_check(const Params& p, int depth, int tail, const std::string& word_text) {
    const SymbolWord word = word_from_string(word_text);
    if (word.empty() || word[0] != Sym::minus) {
        throw DomainError("a right tail starts with '-': got '" + word_text + "'");
    }
    if (depth == 0) depth = static_cast<int>(word.size()) + 1;
    if (depth > ManifoldWindow::k_max_depth) depth = ManifoldWindow::k_max_depth;
    if (tail == 0) tail = static_cast<int>(word.size()) + 2;

    const ManifoldWindow w = ManifoldWindow::grow(p, depth);
    const KneadingSet ks = kneading_set(w, tail);
    const FoldingTree t = folding_tree(w);
    const Verdict kv = admissible_kneading(ks, word);
    const Verdict tv = admissible_tree(t, word, WalkMode::right_tail);

    FileHeader h = make_header("check", p, depth);
    h.fields["tail"] = std::to_string(tail);
    std::cout << h.render() << '\n';
    std::cout << "word " << to_string(word) << '\n';
    std::cout << "kneading " << kv.str() << '\n';
    std::cout << "tree " << tv.str() << '\n';

    if (!kv.inconclusive() && !tv.inconclusive() && kv.kind != tv.kind) {
        std::cout << "verdict disagreement\n";
        std::cerr << "error: the two admissibility criteria disagree; this is a bug\n";
        return k_exit_internal;
    }
    const Verdict& final_v = kv.inconclusive() ? tv : kv;
    std::cout << "verdict " << final_v.str() << '\n';
    return final_v.rejected() ? k_exit_rejected : k_exit_ok;
}

int run_convert(const std::string& in_path, const std::string& out_path, const std::string& to,
                int depth_opt, int tail_opt) {
    const std::string text = read_file(in_path);
    const std::string kind = sniff_kind(text);
    if (kind.empty()) {
        throw ParseError("input has no '# lozi ... kind=...' header line");
    }

    KneadingSet ks;
    FoldingPattern pat;
    FoldingTree tree;
    FileHeader hdr;
    std::istringstream is(text);
    if (kind == "kneading") {
        ks = read_kneading(is, &hdr);
    } else if (kind == "pattern") {
        pat = read_pattern(is, &hdr);
    } else if (kind == "tree") {
        tree = read_tree(is, &hdr);
    } else {
        throw ParseError("cannot convert from kind '" + kind + "'");
    }

    const int depth = depth_opt > 0 ? depth_opt : static_cast<int>(hdr.get_long("depth"));
    FileHeader out_h;
    out_h.kind = to;
    out_h.fields["a"] = hdr.get("a");
    out_h.fields["b"] = hdr.get("b");
    out_h.fields["depth"] = std::to_string(depth);

    // Build whatever the target needs from what the source gives.
    if (kind == "kneading" && to != "kneading") {
        pat = pattern_from_kneading(ks, depth);
        if (to == "tree") tree = tree_from_pattern(pat);
    } else if (kind == "pattern" && to != "pattern") {
        tree = tree_from_pattern(pat);
        if (to == "kneading") {
            const int tail = tail_opt > 0 ? tail_opt : depth + 1;
            ks = kneading_from_tree(tree, tail);
        }
    } else if (kind == "tree" && to != "tree") {
        if (to == "pattern") {
            throw DomainError(
                "a tree stores too little tail data to rebuild a pattern; "
                "recompute the kneading set from the map instead");
        }
        const int tail = tail_opt > 0 ? tail_opt : depth + 1;
        ks = kneading_from_tree(tree, tail);
    }

    emit(out_path, [&](std::ostream& os) {
        if (to == "kneading") {
            write_kneading(os, ks, out_h);
        } else if (to == "pattern") {
            write_pattern(os, pat, out_h);
        } else if (to == "tree") {
            write_tree(os, tree, out_h);
        } else {
            throw DomainError("unknown conversion target '" + to + "'");
        }
    });
    return k_exit_ok;
}

int run_verify(const Params& p, int depth, int tail, int pairs, int samples, int exhaustive,
               std::uint64_t seed, const std::string& suite) {
    if (tail == 0) tail = depth + 2;
    const ManifoldWindow w = ManifoldWindow::grow(p, depth);

    std::vector<VerificationReport> reports;
    const bool all = suite == "all";
    if (all || suite == "order") reports.push_back(verify_order_lemma(w, pairs, seed));
    if (all || suite == "admissibility") {
        const KneadingSet ks = kneading_set(w, tail);
        const FoldingTree t = folding_tree(w);
        reports.push_back(verify_admissibility_consistency(w, ks, t, exhaustive, samples, seed));
    }
    if (all || suite == "markov") reports.push_back(verify_markov(w));
    if (all || suite == "roundtrip") reports.push_back(verify_roundtrips(w, tail));
    if (all || suite == "arc-order") reports.push_back(verify_arc_code_order(w));
    if (reports.empty()) throw DomainError("unknown suite '" + suite + "'");

    FileHeader h = make_header("verify", p, depth);
    h.fields["tail"] = std::to_string(tail);
    h.fields["seed"] = std::to_string(seed);
    std::cout << h.render() << '\n';
    std::size_t failures = 0;
    for (const auto& r : reports) {
        write_report(std::cout, r);
        failures += r.failures.size();
    }
    std::cout << "verify: " << reports.size() << " suites, " << failures << " failures\n";
    return failures == 0 ? k_exit_ok : k_exit_internal;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact symbolic dynamics of Lozi maps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(k_version));

    CommonArgs pts_args;
    CLI::App* c_points = app.add_subcommand("points", "basic points of the manifold window");
    add_common(c_points, pts_args);

    CommonArgs man_args;
    std::string man_format = "tsv";
    int man_w = 800, man_h = 600;
    CLI::App* c_manifold =
        app.add_subcommand("manifold", "full window export: points and arcs, or an SVG plot");
    add_common(c_manifold, man_args);
    c_manifold->add_option("--format", man_format, "tsv or svg")
        ->check(CLI::IsMember({"tsv", "svg"}))
        ->capture_default_str();
    c_manifold->add_option("--width", man_w, "SVG width")->capture_default_str();
    c_manifold->add_option("--height", man_h, "SVG height")->capture_default_str();

    CommonArgs kn_args;
    int kn_tail = 0;
    CLI::App* c_kneading = app.add_subcommand("kneading", "kneading set of the window");
    add_common(c_kneading, kn_args);
    c_kneading->add_option("--tail", kn_tail, "tail length M (default depth + 2)")
        ->check(CLI::Range(1, 512));

    CommonArgs pat_args;
    CLI::App* c_pattern = app.add_subcommand("pattern", "folding pattern of the window");
    add_common(c_pattern, pat_args);

    CommonArgs tree_args;
    bool tree_no_markers = false;
    CLI::App* c_tree = app.add_subcommand("tree", "folding tree of the window");
    add_common(c_tree, tree_args);
    c_tree->add_flag("--no-markers", tree_no_markers, "omit the per-level marker rows");

    std::string chk_a, chk_b, chk_word;
    int chk_depth = 0, chk_tail = 0;
    CLI::App* c_check = app.add_subcommand("check", "test a word for admissibility");
    c_check->add_option("--a", chk_a, "parameter a")->required();
    c_check->add_option("--b", chk_b, "parameter b")->required();
    c_check->add_option("word", chk_word, "word over '-' and '+', starting with '-'")
        ->required();
    c_check->add_option("--depth", chk_depth, "window depth (default |word| + 1)")
        ->check(CLI::Range(1, ManifoldWindow::k_max_depth));
    c_check->add_option("--tail", chk_tail, "kneading tail length (default |word| + 2)")
        ->check(CLI::Range(1, 512));

    std::string cv_in, cv_out = "-", cv_to;
    int cv_depth = 0, cv_tail = 0;
    CLI::App* c_convert =
        app.add_subcommand("convert", "convert between kneading, pattern and tree files");
    c_convert->add_option("-i,--input", cv_in, "input file, '-' for stdin")->required();
    c_convert->add_option("-o,--output", cv_out, "output file, '-' for stdout")
        ->capture_default_str();
    c_convert->add_option("--to", cv_to, "target kind")
        ->check(CLI::IsMember({"kneading", "pattern", "tree"}))
        ->required();
    c_convert->add_option("--depth", cv_depth, "target depth (default from input header)")
        ->check(CLI::Range(1, ManifoldWindow::k_max_depth));
    c_convert->add_option("--tail", cv_tail, "tail length for kneading output")
        ->check(CLI::Range(1, 512));

    std::string vf_a, vf_b, vf_suite = "all";
    int vf_depth = 6, vf_tail = 0, vf_pairs = 100, vf_samples = 100, vf_exhaustive = 6;
    std::uint64_t vf_seed = 1;
    CLI::App* c_verify =
        app.add_subcommand("verify", "run the internal cross-check suites");
    c_verify->add_option("--a", vf_a, "parameter a")->required();
    c_verify->add_option("--b", vf_b, "parameter b")->required();
    c_verify->add_option("--depth", vf_depth, "window depth")
        ->check(CLI::Range(2, ManifoldWindow::k_max_depth))
        ->capture_default_str();
    c_verify->add_option("--tail", vf_tail, "kneading tail length (default depth + 2)")
        ->check(CLI::Range(1, 512));
    c_verify
        ->add_option("--suite", vf_suite,
                     "all, order, admissibility, markov, roundtrip or arc-order")
        ->check(CLI::IsMember({"all", "order", "admissibility", "markov", "roundtrip",
                               "arc-order"}))
        ->capture_default_str();
    c_verify->add_option("--pairs", vf_pairs, "sampled pairs for the order suite")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    c_verify->add_option("--samples", vf_samples, "sampled tails for the admissibility suite")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    c_verify
        ->add_option("--exhaustive", vf_exhaustive,
                     "exhaustive word length for the admissibility suite")
        ->check(CLI::Range(1, 20))
        ->capture_default_str();
    c_verify->add_option("--seed", vf_seed, "sampling seed")->capture_default_str();

    std::string at_a, at_b, at_out = "-", at_format = "pgm";
    long at_iter = 200000, at_transient = 1000;
    int at_w = 512, at_h = 512;
    CLI::App* c_attractor =
        app.add_subcommand("attractor", "float-mode raster of the attractor");
    c_attractor->add_option("--a", at_a, "parameter a")->required();
    c_attractor->add_option("--b", at_b, "parameter b")->required();
    c_attractor->add_option("-o,--output", at_out, "output file, '-' for stdout")
        ->capture_default_str();
    c_attractor->add_option("--format", at_format, "pgm or svg")
        ->check(CLI::IsMember({"pgm", "svg"}))
        ->capture_default_str();
    c_attractor->add_option("--iterations", at_iter, "total iterations")
        ->check(CLI::Range(static_cast<long>(100), static_cast<long>(100000000)))
        ->capture_default_str();
    c_attractor->add_option("--transient", at_transient, "iterations discarded up front")
        ->check(CLI::Range(static_cast<long>(0), static_cast<long>(100000000)))
        ->capture_default_str();
    c_attractor->add_option("--width", at_w, "raster width")
        ->check(CLI::Range(16, 8192))
        ->capture_default_str();
    c_attractor->add_option("--height", at_h, "raster height")
        ->check(CLI::Range(16, 8192))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return k_exit_usage;
    }

    if (c_points->parsed()) {
        const Params p = make_params(pts_args.a, pts_args.b);
        const ManifoldWindow w = ManifoldWindow::grow(p, pts_args.depth);
        emit(pts_args.out, [&](std::ostream& os) { write_points(os, w); });
        return k_exit_ok;
    }
    if (c_manifold->parsed()) {
        const Params p = make_params(man_args.a, man_args.b);
        const ManifoldWindow w = ManifoldWindow::grow(p, man_args.depth);
        emit(man_args.out, [&](std::ostream& os) {
            if (man_format == "svg") {
                write_window_svg(os, w, man_w, man_h);
            } else {
                write_points(os, w);
                write_arcs(os, w);
            }
        });
        return k_exit_ok;
    }
    if (c_kneading->parsed()) {
        const Params p = make_params(kn_args.a, kn_args.b);
        const ManifoldWindow w = ManifoldWindow::grow(p, kn_args.depth);
        const int tail = kn_tail > 0 ? kn_tail : kn_args.depth + 2;
        const KneadingSet ks = kneading_set(w, tail);
        emit(kn_args.out, [&](std::ostream& os) {
            write_kneading(os, ks, make_header("kneading", p, kn_args.depth));
        });
        return k_exit_ok;
    }
    if (c_pattern->parsed()) {
        const Params p = make_params(pat_args.a, pat_args.b);
        const ManifoldWindow w = ManifoldWindow::grow(p, pat_args.depth);
        const FoldingPattern pat = folding_pattern(w);
        emit(pat_args.out, [&](std::ostream& os) {
            write_pattern(os, pat, make_header("pattern", p, pat_args.depth));
        });
        return k_exit_ok;
    }
    if (c_tree->parsed()) {
        const Params p = make_params(tree_args.a, tree_args.b);
        const ManifoldWindow w = ManifoldWindow::grow(p, tree_args.depth);
        const FoldingTree t = folding_tree(w);
        emit(tree_args.out, [&](std::ostream& os) {
            write_tree(os, t, make_header("tree", p, tree_args.depth), !tree_no_markers);
        });
        return k_exit_ok;
    }
    if (c_check->parsed()) {
        return run_check(make_params(chk_a, chk_b), chk_depth, chk_tail, chk_word);
    }
    if (c_convert->parsed()) {
        return run_convert(cv_in, cv_out, cv_to, cv_depth, cv_tail);
    }
    if (c_verify->parsed()) {
        return run_verify(make_params(vf_a, vf_b), vf_depth, vf_tail, vf_pairs, vf_samples,
                          vf_exhaustive, vf_seed, vf_suite);
    }
    if (c_attractor->parsed()) {
        const Params p = make_params(at_a, at_b);
        RasterOptions opt;
        opt.iterations = at_iter;
        opt.transient = at_transient;
        opt.width = at_w;
        opt.height = at_h;
        const Raster raster = render_attractor(p, opt);
        FileHeader h = make_header("attractor", p, 0);
        h.fields.erase("depth");
        h.fields["iterations"] = std::to_string(at_iter);
        h.fields["transient"] = std::to_string(at_transient);
        // render() starts with "# "; the writers add their own comment markers.
        const std::string note = h.render().substr(2);
        emit(at_out, [&](std::ostream& os) {
            if (at_format == "pgm") {
                write_pgm(raster, os, note);
            } else {
                write_svg(raster, os, note);
            }
        });
        return k_exit_ok;
    }
    return k_exit_usage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return k_exit_usage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return k_exit_usage;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return k_exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return k_exit_internal;
    }
}
