// equichar -- exact equivariant characters of the genus-0 moduli spaces.
//
// Subcommands:
//   chars     graded character of a space, one degree or all
//   verify    run a named verification suite against the shipped tables
//   trees     list or count weighted rooted tree classes
//   quotient  Poincare polynomial of the unordered-points quotient
//   cuspidal  character of the K-theoretic cuspidal block
//   cache     inspect or clear the on-disk character cache
//
// Exit codes: 0 success, 1 verification/computation failure, 2 usage error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "equichar/golden.hpp"
#include "equichar/moduli.hpp"
#include "equichar/permrep.hpp"
#include "equichar/serialize.hpp"
#include "equichar/trees.hpp"
#include "equichar/verify.hpp"

namespace {

constexpr const char* k_version = "0.1.0";

using namespace equichar;

int cmd_chars(const std::string& space, int n, std::optional<int> m, std::optional<int> k,
              bool all_k, const std::string& format) {
    const auto kind = space_kind_from_name(space);
    if (!kind) {
        std::cerr << "equichar: unknown space '" << space << "'\n";
        return 2;
    }
    SpaceId id{*kind, n, m};
    if (space == "p1n") {
        if (m && *m != 2) {
            std::cerr << "equichar: p1n fixes m = 2\n";
            return 2;
        }
        id.m = 2;
    }
    try {
        id.validate();
    } catch (const std::exception& e) {
        std::cerr << "equichar: " << e.what() << "\n";
        return 2;
    }
    const CharPoly p = char_poly_for(id);
    if (!all_k && !k) {
        std::cerr << "equichar: pass --k or --all-k\n";
        return 2;
    }
    if (!all_k && (*k < 0 || *k > p.degree())) {
        std::cerr << "equichar: k out of range [0, " << p.degree() << "]\n";
        return 2;
    }

    if (format == "json") {
        if (all_k) {
            std::cout << render_document_json_all_k(id.space_name(), id.n, id.m, p, k_version)
                      << "\n";
        } else {
            const auto doc = make_document(id.space_name(), id.n, id.m, *k,
                                           to_schur(p.coeff(unsigned(*k))), k_version);
            std::cout << render_document_json(doc) << "\n";
        }
        return 0;
    }
    auto render = (format == "latex") ? render_latex : render_text;
    if (all_k) {
        for (int kk = 0; kk <= p.degree(); ++kk)
            std::cout << "k=" << kk << ": " << render(to_schur(p.coeff(unsigned(kk)))) << "\n";
    } else {
        std::cout << render(to_schur(p.coeff(unsigned(*k)))) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_n) {
    const SuiteReport report = run_suite(suite, max_n);
    if (!report.note.empty()) std::cout << "# " << report.note << "\n";
    for (const auto& check : report.checks) {
        std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.name;
        if (!check.detail.empty()) std::cout << "  [" << check.detail << "]";
        std::cout << "\n";
    }
    std::cout << report.suite << ": " << (report.checks.size() - report.failures()) << "/"
              << report.checks.size() << " checks passed\n";
    return report.passed() ? 0 : 1;
}

int cmd_trees(int n, int k, bool count_only) {
    if (n < 0 || k < 0) {
        std::cerr << "equichar: trees requires n, k >= 0\n";
        return 2;
    }
    const auto& classes = enumerate_trees(unsigned(n), unsigned(k));
    if (count_only) {
        std::cout << classes.size() << "\n";
    } else {
        for (const auto& t : classes) std::cout << tree_to_json(t) << "\n";
    }
    return 0;
}

int cmd_quotient(int n) {
    std::cout << tp_to_string(quotient_poincare(n)) << "\n";
    return 0;
}

int cmd_cuspidal(int n, const std::string& format) {
    const SchurExpansion block = cuspidal_char(n);
    if (format == "json") {
        const auto doc = make_document("cuspidal", n, std::nullopt, std::nullopt, block, k_version);
        std::cout << render_document_json(doc) << "\n";
    } else if (format == "latex") {
        std::cout << render_latex(block) << "\n";
    } else {
        std::cout << render_text(block) << "\n";
    }
    return 0;
}

int cmd_cache(bool clear, bool show_dir) {
    if (show_dir) std::cout << cache::dir() << "\n";
    if (clear) {
        const std::size_t removed = cache::clear();
        std::cout << "removed " << removed << " cache files\n";
    }
    if (!clear && !show_dir) {
        std::cerr << "equichar: pass --clear or --dir\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant characters of genus-0 moduli spaces"};
    app.set_version_flag("--version", k_version);
    app.require_subcommand(1);

    // chars
    std::string space = "m0n", format = "text";
    int n = 0;
    std::optional<int> m_opt, k_opt;
    bool all_k = false;
    auto* chars = app.add_subcommand("chars", "graded character of a space");
    chars->add_option("--space", space, "m0n | m0n1 | delta0 | maps | p1n")->required();
    chars->add_option("--n", n, "number of marked points")->required();
    chars->add_option("--m", m_opt, "sections (delta0, maps): target is P^{m-1}");
    auto* k_option = chars->add_option("--k", k_opt, "grading degree");
    chars->add_flag("--all-k", all_k, "print every degree")->excludes(k_option);
    chars->add_option("--format", format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // verify
    std::string suite;
    int max_n = 0;
    std::string suite_help = "one of:";
    for (const auto& name : suite_names()) suite_help += " " + name;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, suite_help)
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", max_n, "largest n to check (default per suite)");

    // trees
    int tn = 0, tk = 0;
    bool count_only = false;
    auto* trees = app.add_subcommand("trees", "list weighted rooted tree classes");
    trees->add_option("--n", tn, "inputs")->required();
    trees->add_option("--k", tk, "total weight")->required();
    trees->add_flag("--count", count_only, "print only the number of classes");

    // quotient
    int qn = 0;
    auto* quotient = app.add_subcommand("quotient", "Poincare polynomial of the quotient");
    quotient->add_option("--n", qn, "number of marked points")->required();

    // cuspidal
    int cn = 0;
    std::string cformat = "text";
    auto* cuspidal = app.add_subcommand("cuspidal", "K-theoretic cuspidal block character");
    cuspidal->add_option("--n", cn, "number of marked points")->required();
    cuspidal->add_option("--format", cformat, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    // cache
    bool cache_clear = false, cache_dir_flag = false;
    auto* cache_cmd = app.add_subcommand("cache", "on-disk character cache");
    cache_cmd->add_flag("--clear", cache_clear, "remove cached characters");
    cache_cmd->add_flag("--dir", cache_dir_flag, "print the cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (chars->parsed()) return cmd_chars(space, n, m_opt, k_opt, all_k, format);
        if (verify->parsed()) return cmd_verify(suite, max_n);
        if (trees->parsed()) return cmd_trees(tn, tk, count_only);
        if (quotient->parsed()) return cmd_quotient(qn);
        if (cuspidal->parsed()) return cmd_cuspidal(cn, cformat);
        if (cache_cmd->parsed()) return cmd_cache(cache_clear, cache_dir_flag);
    } catch (const std::invalid_argument& e) {
        std::cerr << "equichar: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "equichar: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
