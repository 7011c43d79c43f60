// Batch frontend: generate the canonical structures, run the finite checks,
// synthesize separation witnesses, and count endomorphisms. All I/O is the
// JSON formats of json_io; identical inputs and flags produce identical
// bytes.
//
// Exit codes: 0 pass, 1 I/O failure, 2 invalid input or precondition,
// 3 check returned false.

#include "endolab/cores.hpp"
#include "endolab/errors.hpp"
#include "endolab/json_io.hpp"
#include "endolab/search.hpp"
#include "endolab/separation.hpp"
#include "endolab/structure.hpp"
#include "endolab/wreath.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace endolab;

void emit(const json & j, const std::string & out_path)
{
    if (out_path.empty())
        std::cout << dump_stable(j);
    else
        write_json_file(out_path, j);
}

int run_gen(const std::string & kind, int n, int m, bool loops, const std::string & out_path)
{
    Structure s = [&] {
        if (kind == "kmm")
            return complete_bipartite(m);
        if (kind == "g")
            return bipartite_copies(n, m);
        if (kind == "core")
            return edge_copies(n);
        if (kind == "complete")
            return complete_graph(n, loops);
        throw InvalidParameter("gen: unknown kind '" + kind + "'");
    }();
    emit(structure_to_json(s), out_path);
    return 0;
}

json witness_map(const FiniteMap & f)
{
    return finite_map_to_json(f);
}

json witness_vertices(const std::vector<int> & vs)
{
    return json(vs);
}

int run_check(const std::string & check, const std::string & in_path, const std::string & out_path,
              int cap, std::optional<int> n, std::optional<int> m)
{
    Structure s = structure_from_json(read_json_file(in_path));

    bool result = false;
    std::optional<json> witness;

    if (check == "core") {
        result = true;
        for_each_morphism(s, s, MorphismKind::Hom, [&](const FiniteMap & f) {
            if (!check_morphism(s, s, f, MorphismKind::Aut)) {
                result = false;
                witness = witness_map(f);
                return false;
            }
            return true;
        });
    }
    else if (check == "mobile") {
        std::vector<int> uncovered = mobile_core_uncovered(s);
        result = uncovered.empty();
        if (!result)
            witness = witness_vertices(uncovered);
    }
    else if (check == "transitive") {
        result = is_transitive(s);
        if (!result)
            witness = witness_vertices(relative_orbit(s, 0, {}));
    }
    else if (check == "homogeneous") {
        auto bad = homogeneity_counterexample(s, cap);
        result = !bad.has_value();
        if (bad) {
            std::vector<int> flat;
            for (std::size_t i = 0; i < bad->first.size(); ++i) {
                flat.push_back(bad->first[i]);
                flat.push_back(bad->second[i]);
            }
            witness = witness_vertices(flat);
        }
    }
    else if (check == "image-bound") {
        ImageBound bound = check_image_bound(s);
        result = bound.holds;
        witness = witness_map(bound.witness);
    }
    else if (check == "wreath") {
        if (!n || !m)
            throw InvalidParameter("check wreath: --n and --m are required");
        if (!(s == bipartite_copies(*n, *m)))
            throw InvalidParameter("check wreath: input is not the layered structure for the given n, m");
        result = check_wreath_characterization(*n, *m);
    }
    else {
        throw InvalidParameter("check: unknown check '" + check + "'");
    }

    json report{{"check", check}, {"structure", s.name}, {"result", result}};
    if (witness)
        report["witness"] = *witness;
    emit(report, out_path);
    return result ? 0 : 3;
}

int run_separate(const std::string & in_path, const std::string & out_path, bool allow_enlarge)
{
    SeparateInput input = separate_input_from_json(read_json_file(in_path));
    SeparationReport report = separate(input.pairs, input.n, input.m, allow_enlarge);
    emit(separation_report_to_json(report), out_path);
    return report.verified ? 0 : 3;
}

int run_end_count(const std::string & in_path, const std::string & out_path, std::size_t limit)
{
    Structure s = structure_from_json(read_json_file(in_path));

    std::vector<FiniteMap> end = enumerate_morphisms(s, s, MorphismKind::Hom, limit + 1);
    if (end.size() > limit)
        throw CapExceeded("end-count: |End| exceeds the limit of " + std::to_string(limit));
    std::vector<FiniteMap> aut = enumerate_morphisms(s, s, MorphismKind::Aut, limit + 1);

    json report{{"structure", s.name}, {"end", end.size()}, {"aut", aut.size()}};
    emit(report, out_path);
    return 0;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"finite relational structures, their endomorphism monoids, and Zariski separation witnesses"};
    app.require_subcommand(1);
    app.fallthrough(); // --out / --seed may follow the subcommand arguments

    int seed = 0;
    app.add_option("--seed", seed, "seed for randomized drivers (the built-in subcommands are deterministic)");

    std::string out_path;
    app.add_option("--out", out_path, "output file (stdout when omitted)");

    auto * gen = app.add_subcommand("gen", "generate a structure as JSON");
    std::string gen_kind;
    gen->add_option("kind", gen_kind, "kmm | g | core | complete")->required();
    int gen_n = 1, gen_m = 1;
    bool gen_loops = false;
    gen->add_option("--n", gen_n, "copy / vertex count");
    gen->add_option("--m", gen_m, "part size");
    gen->add_flag("--loops", gen_loops, "include reflexive pairs (complete only)");

    auto * check = app.add_subcommand("check", "run a structure check and write a report");
    std::string check_kind, check_in;
    int check_cap = 2;
    std::optional<int> check_n, check_m;
    check->add_option("kind", check_kind, "core | mobile | transitive | homogeneous | image-bound | wreath")
        ->required();
    check->add_option("--in", check_in, "structure JSON")->required();
    check->add_option("--cap", check_cap, "partial isomorphism size cap (homogeneous)");
    check->add_option("--n", check_n, "copy count (wreath)");
    check->add_option("--m", check_m, "part size (wreath)");

    auto * separate_cmd = app.add_subcommand("separate", "synthesize a separation witness");
    std::string separate_in;
    bool allow_enlarge = true;
    separate_cmd->add_option("--in", separate_in, "basic-set data JSON: {n, m, pairs}")->required();
    separate_cmd->add_flag("--allow-enlarge,!--no-allow-enlarge", allow_enlarge,
                           "permit enlarging the window (default on)");

    auto * end_count = app.add_subcommand("end-count", "count endomorphisms and automorphisms");
    std::string end_in;
    std::size_t end_limit = 1000000;
    end_count->add_option("--in", end_in, "structure JSON")->required();
    end_count->add_option("--limit", end_limit, "abort when |End| exceeds this bound");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_kind, gen_n, gen_m, gen_loops, out_path);
        if (check->parsed())
            return run_check(check_kind, check_in, out_path, check_cap, check_n, check_m);
        if (separate_cmd->parsed())
            return run_separate(separate_in, out_path, allow_enlarge);
        if (end_count->parsed())
            return run_end_count(end_in, out_path, end_limit);
        return 2;
    }
    catch (const std::ios_base::failure & e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 1;
    }
    catch (const WindowTooSmall & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const CapExceeded & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument & e) {
        // InvalidParameter, IncompatibleSignatures, DimensionMismatch,
        // NotAnEndomorphism, PreconditionViolated
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
