#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polygraph/analyzer.hpp"
#include "polygraph/explorer.hpp"
#include "polygraph/moebius.hpp"
#include "polygraph/parse.hpp"
#include "polygraph/probe.hpp"
#include "polygraph/quadratic.hpp"
#include "polygraph/synthesis.hpp"

using namespace polygraph;

namespace {

constexpr int exit_domain = 2;
constexpr int exit_usage = 64;

struct Flags
{
    std::string poly;
    std::string seed = "0";
    std::string format = "json";
    std::string digraph_file;
    std::string file;
    std::string a, b = "0", c = "0";
    double tol = 1e-7;
    double dedup_eps = 1e-6;
    int max_vertices = 5000;
    int depth = 50;
    int nmax = 512;
    int n = 0;
    int seeds = 10;
    int workers = 1;
    std::uint64_t rng_seed = 0;
};

Budget budget(const Flags& f)
{
    return Budget{f.max_vertices, f.depth, f.dedup_eps};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_file(const std::string& path)
{
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw DomainError(path + ": " + e.what());
    }
}

void emit(const json& j)
{
    std::cout << j.dump(2) << '\n';
}

void emit_graph(const ExploredDigraph& g, const std::string& format)
{
    if (format == "dot") {
        std::cout << to_dot(g);
        return;
    }
    json j = to_json(g);
    j["label"] = classify(g).to_string();
    emit(j);
}

void require_json(const Flags& f, const char* command)
{
    if (f.format != "json")
        throw DomainError(std::string(command) + " only produces json");
}

void cmd_analyze(const Flags& f)
{
    require_json(f, "analyze");
    const Polynomial phi = parse_polynomial(f.poly);
    Diagnosis d = diagnose(phi, f.tol);
    json j = d.report;
    j["polynomial"] = to_json(phi);
    j["is_standard"] = d.is_standard;
    j["numerically_uncertain"] = d.numerically_uncertain;
    if (d.is_standard)
        j["singular"] = to_json(d.inventory);
    emit(j);
}

void cmd_explore(const Flags& f, bool strong)
{
    const Polynomial phi = parse_polynomial(f.poly);
    const Complex seed = parse_scalar(f.seed).to_complex();
    emit_graph(strong ? explore_strong_component(phi, seed, budget(f)) : explore_component(phi, seed, budget(f)),
               f.format);
}

void cmd_synth(const Flags& f)
{
    require_json(f, "synth");
    if (f.digraph_file.empty())
        throw DomainError("synth needs --digraph FILE");
    FiniteDigraph d = finite_digraph_from_json(parse_json_file(f.digraph_file));
    Factorization fac = one_factorization(d);
    json factors = json::array();
    for (const auto& perm : fac.factors)
        factors.push_back({{"permutation", perm}, {"L", to_json(interpolate_factor(perm, d.values))}});
    emit({{"digraph", to_json(d)}, {"factors", factors}, {"polynomial", to_json(Polynomial(digraph_to_poly(d)))}});
}

void cmd_classify_deg1(const Flags& f)
{
    require_json(f, "classify-deg1");
    const Polynomial phi = parse_polynomial(f.poly);
    Deg1Verdict v = classify_deg1(phi, f.nmax);
    json j = to_json(v);
    j["polynomial"] = to_json(phi);
    if (v.kind != Deg1Verdict::Kind::NotStandard)
        j["mobius"] = to_json(from_poly(phi));
    emit(j);
}

void cmd_classify_deg2(const Flags& f)
{
    require_json(f, "classify-deg2");
    if (f.a.empty())
        throw DomainError("classify-deg2 needs --a");
    QuadSym q = QuadSym::make(parse_scalar(f.a), parse_scalar(f.b), parse_scalar(f.c));
    json j = to_json(classify_deg2(q, f.nmax, Budget{400, std::min(f.depth, 50), f.dedup_eps}));
    j["polynomial"] = to_json(q.to_poly());
    emit(j);
}

void cmd_cycle_condition(const Flags& f)
{
    require_json(f, "cycle-condition");
    emit(cycle_condition(f.n).to_string());
}

void cmd_probe(const Flags& f)
{
    require_json(f, "probe");
    ProbeOptions o{f.seeds, budget(f), f.rng_seed, f.workers};
    emit(to_json(probe_conjecture(parse_polynomial(f.poly), o)));
}

void cmd_export(const Flags& f)
{
    emit_graph(explored_from_json(parse_json_file(f.file)), f.format);
}

void error_json(const std::string& kind, const std::string& message)
{
    std::cerr << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    Flags f;
    CLI::App app{"polygraph: digraphs from the zero sets of bivariate polynomials"};
    app.require_subcommand(1);

    auto budget_flags = [&](CLI::App* s) {
        s->add_option("--dedup-eps", f.dedup_eps, "vertex merge distance")->check(CLI::PositiveNumber);
        s->add_option("--max-vertices", f.max_vertices, "vertex budget")->check(CLI::PositiveNumber);
        s->add_option("--depth", f.depth, "BFS depth budget")->check(CLI::NonNegativeNumber);
    };
    auto common = [&](CLI::App* s) {
        s->add_option("--tol", f.tol, "tolerance for singular-vertex matching");
        s->add_option("--nmax", f.nmax, "largest cycle length searched")->check(CLI::PositiveNumber);
        s->add_option("--rng-seed", f.rng_seed, "random seed");
        s->add_option("--workers", f.workers, "worker threads")->check(CLI::PositiveNumber);
        s->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "dot"}));
    };

    auto* analyze = app.add_subcommand("analyze", "standardness report and singular vertices");
    analyze->add_option("polynomial", f.poly)->required();
    auto* explore = app.add_subcommand("explore", "weak component of a seed");
    auto* strong = app.add_subcommand("strong", "strong component of a seed");
    for (auto* s : {explore, strong}) {
        s->add_option("polynomial", f.poly)->required();
        s->add_option("--seed", f.seed, "seed vertex, e.g. 1/2+i");
        budget_flags(s);
    }
    auto* synth = app.add_subcommand("synth", "polynomial realizing a regular digraph");
    synth->add_option("--digraph", f.digraph_file, "digraph JSON file")->required();
    auto* deg1 = app.add_subcommand("classify-deg1", "partial degree one classification");
    deg1->add_option("polynomial", f.poly)->required();
    auto* deg2 = app.add_subcommand("classify-deg2", "x^2 + y^2 + a x y + b (x + y) + c");
    deg2->add_option("--a", f.a)->required();
    deg2->add_option("--b", f.b);
    deg2->add_option("--c", f.c);
    deg2->add_option("--dedup-eps", f.dedup_eps)->check(CLI::PositiveNumber);
    deg2->add_option("--depth", f.depth)->check(CLI::NonNegativeNumber);
    auto* cond = app.add_subcommand("cycle-condition", "directed n-cycle condition on (a b; c d)");
    cond->add_option("n", f.n)->required();
    auto* probe = app.add_subcommand("probe", "sample seeds and compare their components");
    probe->add_option("polynomial", f.poly)->required();
    probe->add_option("--seeds", f.seeds, "number of seeds")->check(CLI::PositiveNumber);
    budget_flags(probe);
    auto* exp = app.add_subcommand("export", "re-emit an explored digraph JSON file");
    exp->add_option("file", f.file)->required();
    for (auto* s : {analyze, explore, strong, synth, deg1, deg2, cond, probe, exp})
        common(s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*analyze)
            cmd_analyze(f);
        else if (*explore)
            cmd_explore(f, false);
        else if (*strong)
            cmd_explore(f, true);
        else if (*synth)
            cmd_synth(f);
        else if (*deg1)
            cmd_classify_deg1(f);
        else if (*deg2)
            cmd_classify_deg2(f);
        else if (*cond)
            cmd_cycle_condition(f);
        else if (*probe)
            cmd_probe(f);
        else if (*exp)
            cmd_export(f);
    } catch (const Error& e) {
        error_json(e.kind(), e.what());
        return exit_domain;
    } catch (const std::exception& e) {
        error_json("internal", e.what());
        return exit_domain;
    }
    return 0;
}
