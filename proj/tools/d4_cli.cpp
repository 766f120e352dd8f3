#include "d4/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace d4;

namespace {

std::vector<int> parse_primes(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int p = std::stoi(item, &used);
        if (used != item.size() || !is_supported_prime(p))
            throw std::invalid_argument("bad prime '" + item + "' (primes below 256)");
        out.push_back(p);
    }
    if (out.empty())
        throw std::invalid_argument("empty prime list");
    return out;
}

Term read_term(const std::string& path)
{
    std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

CanonForm form_from(const std::string& type, int r, int s, int t, int start)
{
    CanonForm c;
    c.type = type_from_name(type);
    c.e = {r, s, t};
    c.start = start;
    if (start < 1 || start > 4)
        throw std::invalid_argument("start must be in 1..4");
    if (!exps_valid(c.type, c.e))
        throw std::invalid_argument("exponents r=" + std::to_string(r) + " s=" + std::to_string(s) + " t=" +
                                    std::to_string(t) + " out of range for " + type);
    c.length = type_length(c.type, c.e);
    return c;
}

void print_summary(const SuiteReport& r, std::ostream& out)
{
    out << (r.ok() ? "PASS " : "FAIL ") << r.suite << ": " << r.count(Verdict::Pass) << " pass, "
        << r.count(Verdict::Fail) << " fail, " << r.count(Verdict::Info) << " info (" << r.wall_seconds << " s)\n";
    size_t shown = 0;
    for (const auto& rec : r.records) {
        if (rec.verdict != Verdict::Fail)
            continue;
        if (++shown > 10) {
            out << "    ...\n";
            break;
        }
        out << "    " << rec.id << " " << rec.params.dump() << (rec.note.empty() ? "" : "  " + rec.note) << "\n";
    }
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Workbench for the free modular lattice on four generators"};
    app.require_subcommand(1);

    std::string seq_text;
    auto* normalize = app.add_subcommand("normalize", "Canonical form of an admissible sequence");
    normalize->add_option("SEQ", seq_text, "sequence, e.g. 1321")->required();

    auto* closure = app.add_subcommand("closure", "Words in the class of a sequence");
    closure->add_option("SEQ", seq_text)->required();

    int n = 0;
    auto* slice = app.add_subcommand("slice", "Classes of length N starting at 1");
    slice->add_option("N", n)->required()->check(CLI::Range(1, 14));

    std::string what, type = "G11", seq_opt;
    int r = 0, s = 0, t = 0, start = 1, idx = 1;
    auto* build = app.add_subcommand("build", "Print a polynomial as an S-expression");
    build->add_option("WHAT", what)
        ->required()
        ->check(CLI::IsMember({"e", "f", "gp-e", "gp-f", "cumulative", "inv-cumulative", "unified"}));
    build->add_option("--type", type, "table row, e.g. F21");
    build->add_option("--r", r);
    build->add_option("--s", s);
    build->add_option("--t", t);
    build->add_option("--start", start, "start index of the sequence");
    build->add_option("--seq", seq_opt, "admissible sequence instead of --type");
    build->add_option("--i", idx, "generator index for cumulative/unified");
    build->add_option("--n", n, "slice length for cumulative elements");
    bool build_f = false;
    build->add_flag("--f0", build_f, "cumulative/unified: the f version");

    std::string spec, term_file, rep_file;
    auto* gamma_cmd = app.add_subcommand("gamma", "Apply a Herrmann endomorphism to a term");
    gamma_cmd->add_option("SPEC", spec, "index pair, e.g. 12")->required();
    gamma_cmd->add_option("TERMFILE", term_file)->required()->check(CLI::ExistingFile);

    std::string format = "text";
    auto* cube_cmd = app.add_subcommand("cube", "Perfect elements of the cube B+(N)");
    cube_cmd->add_option("N", n)->required()->check(CLI::Range(1, 6));
    cube_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term in a representation");
    eval_cmd->add_option("TERMFILE", term_file)->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("REPFILE", rep_file)->required()->check(CLI::ExistingFile);

    std::string suite, primes_text, json_out;
    const char* env_primes = std::getenv("D4_PRIMES");
    if (env_primes)
        primes_text = env_primes;
    unsigned seed = 1;
    auto* verify = app.add_subcommand("verify", "Run a verification suite, or all");
    verify->add_option("SUITE", suite)->required();
    verify->add_option("--primes", primes_text, "comma separated, default from D4_PRIMES or 2,3,5");
    verify->add_option("--seed", seed);
    verify->add_option("--json", json_out, "write the JSON report here ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*normalize) {
            Seq q = seq_from_string(seq_text);
            CanonForm c = canonicalize(q);
            std::cout << to_string(c) << " (class size " << class_closure(q).size() << ")\n";
        } else if (*closure) {
            for (const auto& w : class_closure(seq_from_string(seq_text)))
                std::cout << to_string(w) << "\n";
        } else if (*slice) {
            auto cs = slice_enumerate(n);
            for (const auto& c : cs)
                std::cout << to_string(spell(c)) << "  " << to_string(c) << "\n";
            std::cout << cs.size() << " classes\n";
        } else if (*build) {
            auto form = [&] {
                return seq_opt.empty() ? form_from(type, r, s, t, start) : canonicalize(seq_from_string(seq_opt));
            };
            Term out;
            if (what == "e")
                out = e_alpha(form());
            else if (what == "f")
                out = f_alpha0(form());
            else if (what == "gp-e")
                out = gp_e(spell(form()));
            else if (what == "gp-f")
                out = gp_f(spell(form()));
            else if (what == "cumulative")
                out = build_f ? cumulative_f0(n) : cumulative_e(idx, n);
            else if (what == "inv-cumulative")
                out = build_f ? inv_cumulative_f0(n) : inv_cumulative_e(idx, n);
            else
                out = build_f ? unified_f(idx, r, s, t) : unified_e(idx, r, s, t);
            std::cout << print(out) << "\n";
        } else if (*gamma_cmd) {
            std::cout << print(gamma(parse_endo(spec), read_term(term_file))) << "\n";
        } else if (*cube_cmd) {
            auto rows = cube(n);
            if (format == "json") {
                std::cout << cube_to_json(n, rows).dump(2) << "\n";
            } else {
                for (const auto& row : rows)
                    std::cout << row.label << "\n  gp         " << print(row.gp) << "\n  herrmann   "
                              << print(row.herrmann) << "\n  cumulative " << print(row.cumulative) << "\n";
            }
        } else if (*eval_cmd) {
            Term x = read_term(term_file);
            QuadRep rep = rep_from_json(nlohmann::json::parse(read_file(rep_file)));
            Subspace sub = eval(x, rep);
            ojson j{{"dim", sub.dim()}, {"ambient", sub.ambient()}, {"basis", subspace_to_json(sub)}};
            std::cout << j.dump() << "\n";
        } else if (*verify) {
            SuiteConfig cfg;
            if (!primes_text.empty())
                cfg.primes = parse_primes(primes_text);
            cfg.seed = seed;
            std::vector<std::string> names;
            if (suite == "all")
                for (const auto& si : suite_registry())
                    names.push_back(si.name);
            else
                names.push_back(find_suite(suite).name);
            SuiteContext ctx(cfg);
            bool ok = true;
            ojson reports = ojson::array();
            for (const auto& name : names) {
                SuiteReport rep = run_suite(name, ctx);
                print_summary(rep, json_out == "-" ? std::cerr : std::cout);
                ok = ok && rep.ok();
                reports.push_back(rep.to_json());
            }
            if (!json_out.empty()) {
                ojson doc = names.size() == 1 ? reports[0] : ojson{{"schema", "1"}, {"suites", reports}};
                if (json_out == "-") {
                    std::cout << doc.dump(2) << "\n";
                } else {
                    std::ofstream f(json_out);
                    if (!f)
                        throw std::runtime_error("cannot write " + json_out);
                    f << doc.dump(2) << "\n";
                }
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
