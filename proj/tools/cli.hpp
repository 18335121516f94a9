#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linrel/linrel.hpp"

namespace linrel::cli {

enum Exit : int { ok = 0, falsified = 1, config_error = 2 };

namespace detail {

struct Options {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t dim_min = 1;
    std::size_t dim_max = 6;
    std::int64_t entry_bound = 3;
    std::string strategy = "free";
    std::vector<std::string> suites;
    bool override_hypotheses = false;
    std::string output;
    std::vector<std::string> files;
};

inline GenConfig gen_config(const Options& o) {
    GenConfig c;
    c.seed = o.seed;
    c.trials = o.trials;
    c.dim_min = o.dim_min;
    c.dim_max = o.dim_max;
    c.entry_bound = o.entry_bound;
    auto s = parse_strategy(o.strategy);
    if (!s) throw precondition_error("unknown strategy: " + o.strategy);
    c.strategy = *s;
    c.validate();
    return c;
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw precondition_error("cannot write " + o.output);
    f << text;
}

inline DualPair read_pair(const Options& o) {
    return {io::read_relation_file(o.files.at(0)), io::read_relation_file(o.files.at(1))};
}

inline int dispatch(const std::string& verb, const Options& o, std::ostream& out) {
    using io::json;
    if (verb == "adjoint") {
        emit(o, io::serialize_relation(adjoint(io::read_relation_file(o.files.at(0)))), out);
        return ok;
    }
    if (verb == "decompose") {
        LinearRelation t = io::read_relation_file(o.files.at(0));
        ArensParts parts = arens_decompose(t);
        emit(o, io::dump({{"operator_part", io::relation_to_json(parts.op_part)},
                          {"multivalued_part", io::relation_to_json(parts.multi_part)}}), out);
        return ok;
    }
    if (verb == "product") {
        LinearRelation a = io::read_relation_file(o.files.at(0));
        LinearRelation t = io::read_relation_file(o.files.at(1));
        emit(o, io::serialize_relation(product(a, t)), out);
        return ok;
    }
    if (verb == "check") {
        LinearRelation a = io::read_relation_file(o.files.at(0));
        LinearRelation b = io::read_relation_file(o.files.at(1));
        try {
            DualPair p(a, b);
            emit(o, io::dump({{"dual_pair", true}}), out);
            return ok;
        } catch (const not_dual_pair_error& e) {
            auto pair_json = [](const std::pair<Vector, Vector>& v) {
                return json{{"x", io::vector_to_json(v.first)}, {"y", io::vector_to_json(v.second)}};
            };
            emit(o, io::dump({{"dual_pair", false},
                              {"witness", {{"a", pair_json(e.a_witness)}, {"b", pair_json(e.b_witness)}}}}), out);
            return falsified;
        }
    }
    if (verb == "analyze") {
        emit(o, io::dump(io::analyze_report(read_pair(o), o.override_hypotheses)), out);
        return ok;
    }
    if (verb == "extend") {
        DualPair p = read_pair(o);
        if (o.files.size() == 3) {
            ProperExtension e(p, io::read_relation_file(o.files[2]));
            emit(o, io::dump(io::extension_report_to_json(extension_report(e))), out);
            return ok;
        }
        CorrectnessProbe c = correctness_probe(p, o.trials, o.seed);
        emit(o, io::dump({{"found", c.found},
                          {"tried", c.tried},
                          {"parity_condition", io::nullable(c.parity_condition)},
                          {"witness", c.witness ? io::relation_to_json(c.witness->ext()) : json(nullptr)}}), out);
        return ok;
    }
    if (verb == "verify") {
        CampaignOptions opts;
        opts.override_hypotheses = o.override_hypotheses;
        VerificationReport rep = run_campaign(gen_config(o), o.suites, opts);
        emit(o, io::dump(io::verification_report_to_json(rep)), out);
        return rep.exit_code();
    }
    throw precondition_error("unknown verb: " + verb);
}

}  // namespace detail

// Entry point shared by the binary and the tests. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact linear relations over Q(i): adjoints, dual pairs, extensions and verification campaigns",
                 "linrel"};
    app.require_subcommand(1, 1);
    detail::Options o;

    auto files = [&](CLI::App* sub, const char* desc, std::size_t min, std::size_t max) {
        sub->add_option("files", o.files, desc)->required()->expected(static_cast<int>(min), static_cast<int>(max))->check(CLI::ExistingFile);
        sub->add_option("--output", o.output, "write the result to this path instead of standard output");
    };
    files(app.add_subcommand("adjoint", "print T* for a relation file"), "T.json", 1, 1);
    files(app.add_subcommand("decompose", "print the operator and multivalued parts of T"), "T.json", 1, 1);
    files(app.add_subcommand("product", "print the product AT"), "A.json T.json", 2, 2);
    files(app.add_subcommand("check", "test whether {A, B} is a dual pair"), "A.json B.json", 2, 2);
    auto* analyze = app.add_subcommand("analyze", "full dual-pair report");
    files(analyze, "A.json B.json", 2, 2);
    analyze->add_flag("--override-hypotheses", o.override_hypotheses, "evaluate gated checks outside their hypotheses");
    auto* extend = app.add_subcommand("extend", "report on an extension E of {A, B}, or search for a quasi-selfadjoint one");
    files(extend, "A.json B.json [E.json]", 2, 3);
    extend->add_option("--seed", o.seed, "seed for sampled extensions");
    extend->add_option("--trials", o.trials, "candidate budget for the search")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run a seeded verification campaign");
    verify->add_option("--seed", o.seed, "64-bit unsigned seed");
    verify->add_option("--trials", o.trials, "number of generated instances");
    verify->add_option("--dim-min", o.dim_min, "smallest space dimension");
    verify->add_option("--dim-max", o.dim_max, "largest space dimension (at most 8)");
    verify->add_option("--entry-bound", o.entry_bound, "bound on generated integer entries");
    verify->add_option("--strategy", o.strategy, "instance strategy");
    verify->add_option("--suite", o.suites, "suite to run; repeatable, default all");
    verify->add_flag("--override-hypotheses", o.override_hypotheses, "evaluate gated checks outside their hypotheses");
    verify->add_option("--output", o.output, "write the report to this path instead of standard output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; everything else is a configuration error.
        return app.exit(e, out, err) == 0 ? ok : config_error;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        return detail::dispatch(verb, o, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const dimension_error& e) {
        err << "dimension error: " << e.what() << "\n";
    } catch (const internal_error& e) {
        // Self-checks failing is a falsification of the implementation.
        err << "internal check failed: " << e.what() << "\n";
        return falsified;
    }
    return config_error;
}

}  // namespace linrel::cli
