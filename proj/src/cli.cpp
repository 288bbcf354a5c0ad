#include <electguard/cli.hpp>

#include <electguard/experiment.hpp>
#include <electguard/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace electguard {

namespace {
    std::vector<std::string> split(const std::string & text, char sep)
    {
        std::vector<std::string> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, sep))
            out.push_back(item);
        if (!text.empty() && text.back() == sep)
            out.emplace_back();
        return out;
    }

    std::int64_t to_int(const std::string & s, const std::string & what)
    {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return v;
        }
        catch (const std::logic_error &) {
            throw InvalidArgument(what + ": '" + s + "' is not an integer");
        }
    }

    std::vector<std::int64_t> int_list(const std::string & text, const std::string & what)
    {
        std::vector<std::int64_t> out;
        if (text.empty())
            return out;
        for (const auto & item : split(text, ','))
            out.push_back(to_int(item, what));
        return out;
    }

    /// "0,1;2;" -> {{0,1},{2},{}}
    std::vector<std::vector<int>> set_list(const std::string & text)
    {
        std::vector<std::vector<int>> sets;
        for (const auto & part : split(text, ';')) {
            std::vector<int> s;
            for (auto v : int_list(part, "--sets"))
                s.push_back(static_cast<int>(v));
            sets.push_back(std::move(s));
        }
        return sets;
    }

    /// Edge list "u v" per line, or "u-v" items separated by commas; '#' starts a comment.
    std::vector<std::pair<int, int>> parse_edges(const std::string & text)
    {
        std::vector<std::pair<int, int>> edges;
        std::string normalized = text;
        for (char & c : normalized)
            if (c == ',' || c == '-')
                c = ' ';
        std::istringstream lines(normalized);
        std::string line;
        int lineno = 0;
        while (std::getline(lines, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream ls(line);
            std::string a, b;
            while (ls >> a) {
                if (!(ls >> b))
                    throw InvalidArgument("edge list line " + std::to_string(lineno) + ": dangling endpoint '" + a + "'");
                edges.emplace_back(static_cast<int>(to_int(a, "edge endpoint")), static_cast<int>(to_int(b, "edge endpoint")));
            }
        }
        return edges;
    }

    GenConfig make_gen_config(int m, int n, int g, const std::string & model, std::uint64_t seed)
    {
        GenConfig gc;
        gc.m = m;
        gc.n = n;
        gc.g = g;
        gc.seed = seed;
        if (model == "uniform")
            gc.model = ProfileModel::uniform;
        else if (model.starts_with("two-top:")) {
            const auto names = split(model.substr(8), ',');
            if (names.size() != 2)
                throw InvalidArgument("--model two-top needs two candidate names, e.g. two-top:a,b");
            const auto all = default_candidate_names(m);
            auto find = [&](const std::string & name) {
                auto it = std::find(all.begin(), all.end(), name);
                if (it == all.end())
                    throw InvalidArgument("--model: unknown candidate '" + name + "'");
                return static_cast<CandidateIndex>(it - all.begin());
            };
            gc.model = ProfileModel::two_frontrunner;
            gc.a = find(names[0]);
            gc.b = find(names[1]);
        }
        else
            throw InvalidArgument("--model must be uniform or two-top:<a>,<b>, got '" + model + "'");
        gc.validate();
        return gc;
    }

    void print_stats(std::ostream & out, const SolveStats & s, bool timing)
    {
        out << "nodes: " << s.nodes << "\n";
        out << "oracle_calls: " << s.oracle_calls << "\n";
        if (s.creation_searches)
            out << "condorcet_creation_searches: " << s.creation_searches << "\n";
        if (timing)
            out << "wall_ms: " << s.wall_ms << "\n";
    }

    struct SolveArgs
    {
        std::string election;
        std::string rule;
        std::string params;
        int k_a = -1;
        int k_d = -1;
        std::string solver = "fpt";
        std::uint64_t cap = default_enumeration_cap;
        bool timing = false;
    };

    void add_solve_options(CLI::App * cmd, SolveArgs & a)
    {
        cmd->add_option("election", a.election, "Election JSON file")->required();
        cmd->add_option("--rule", a.rule, "plurality|veto|borda|condorcet|vector:a1,a2,...");
        cmd->add_option("--k-a", a.k_a, "Attacker budget");
        cmd->add_option("--k-d", a.k_d, "Defender budget");
        cmd->add_option("--params", a.params, "Gadget sidecar supplying rule and budgets");
        cmd->add_option("--cap", a.cap, "Enumeration cap");
        cmd->add_flag("--timing", a.timing, "Report wall time");
    }

    struct LoadedInstance
    {
        Election election;
        VotingRule rule;
        InstanceParams params;
    };

    LoadedInstance load_instance(const SolveArgs & a)
    {
        Election election = load_election(a.election);
        std::string rule = a.rule;
        InstanceParams params{a.k_a, a.k_d};
        if (!a.params.empty()) {
            const auto meta = load_gadget_meta(a.params);
            if (rule.empty())
                rule = meta.rule;
            if (params.k_a < 0)
                params.k_a = meta.params.k_a;
            if (params.k_d < 0)
                params.k_d = meta.params.k_d;
        }
        if (rule.empty())
            throw InvalidArgument("--rule is required (or --params with a rule)");
        if (params.k_a < 0 || params.k_d < 0)
            throw InvalidArgument("--k-a and --k-d are required (or --params with budgets)");
        auto parsed = parse_rule(rule, election.candidate_count());
        params.validate(election.group_count());
        return {std::move(election), std::move(parsed), params};
    }

    int cmd_defend(const SolveArgs & a, std::ostream & out)
    {
        const auto inst = load_instance(a);
        SolverOptions options;
        options.enumeration_cap = a.cap;
        options.oracle.search_cap = a.cap;
        SolveResult r;
        if (a.solver == "fpt")
            r = solve_defense_fpt(inst.election, inst.rule, inst.params, options);
        else if (a.solver == "brute")
            r = solve_defense_brute(inst.election, inst.rule, inst.params, options);
        else if (a.solver == "symmetric")
            r = solve_defense_symmetric(inst.election, inst.rule, inst.params, options);
        else
            throw InvalidArgument("--solver must be fpt|brute|symmetric");
        out << (r.yes ? "YES" : "NO") << "\n";
        if (r.yes)
            out << "protected: " << r.certificate->to_string() << "\n";
        print_stats(out, r.stats, a.timing);
        return r.yes ? exit_yes : exit_no;
    }

    int cmd_attack(const SolveArgs & a, std::ostream & out)
    {
        const auto inst = load_instance(a);
        SolverOptions options;
        options.enumeration_cap = a.cap;
        const auto r = solve_attack_exact(inst.election, inst.rule, inst.params, options);
        out << (r.yes ? "YES" : "NO") << "\n";
        if (r.yes)
            out << "attacked: " << r.certificate->to_string() << "\n";
        print_stats(out, r.stats, a.timing);
        return r.yes ? exit_yes : exit_no;
    }

    void write_gadget(const GadgetInstance & g, const std::string & prefix, std::ostream & out)
    {
        const std::string election_path = prefix + ".json";
        const std::string meta_path = prefix + ".meta.json";
        save_election(g.election, election_path);
        write_text_file(meta_path, serialize_gadget_meta(g));
        out << "election: " << election_path << "\n";
        out << "meta: " << meta_path << "\n";
        out << "problem: " << to_string(g.problem) << "\n";
        out << "rule: " << g.rule.name() << "\n";
        out << "k_a: " << g.params.k_a << "\n";
        out << "k_d: " << g.params.k_d << "\n";
        out << "expected: " << to_string(g.expected) << "\n";
    }
}

int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Defend and attack group-structured elections", "electguard"};
    app.require_subcommand(1);

    SolveArgs defend_args;
    auto * defend = app.add_subcommand("defend", "Decide Optimal Defense");
    add_solve_options(defend, defend_args);
    defend->add_option("--solver", defend_args.solver, "fpt|brute|symmetric");

    SolveArgs attack_args;
    auto * attack = app.add_subcommand("attack", "Decide Optimal Attack");
    add_solve_options(attack, attack_args);

    std::string winners_file, winners_rule;
    auto * winners_cmd = app.add_subcommand("winners", "Print the winner set");
    winners_cmd->add_option("election", winners_file)->required();
    winners_cmd->add_option("--rule", winners_rule)->required();

    int m = 5, n = 12000, g = 12, profiles = 1000, kd_min = 2, kd_max = 10, trials = 100;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    std::string model = "uniform", out_path, summary_path;
    std::vector<std::string> rules;
    bool timing = false;
    auto * experiment = app.add_subcommand("experiment", "Run the greedy defense experiment and write CSV");
    experiment->add_option("--candidates", m);
    experiment->add_option("--voters", n);
    experiment->add_option("--classes", g);
    experiment->add_option("--profiles", profiles);
    experiment->add_option("--kd-min", kd_min);
    experiment->add_option("--kd-max", kd_max);
    experiment->add_option("--trials", trials, "greedy 2 draws per category-3 instance");
    experiment->add_option("--threads", threads);
    experiment->add_option("--seed", seed);
    experiment->add_option("--model", model, "uniform|two-top:a,b");
    experiment->add_option("--rule", rules, "Rule; repeat or comma-separate")->delimiter(',');
    experiment->add_option("--out", out_path, "Row CSV path")->required();
    experiment->add_option("--summary", summary_path, "Summary CSV path (default <out>.summary.csv)");
    experiment->add_flag("--timing", timing, "Add wall-clock columns");

    auto * generate = app.add_subcommand("generate", "Generate a random profile as election JSON");
    generate->add_option("--candidates", m);
    generate->add_option("--voters", n);
    generate->add_option("--classes", g);
    generate->add_option("--seed", seed);
    generate->add_option("--model", model);
    auto * generate_out = generate->add_option("--out", out_path);

    auto * gadget = app.add_subcommand("gadget", "Generate a reduction instance plus sidecar");
    gadget->require_subcommand(1);
    std::string gadget_rule = "plurality", prefix = "gadget";
    std::string weights, sets, edges_text, graph_file;
    std::int64_t target = 0;
    int k = 0, universe = 0, vertices = -1;
    auto add_common = [&](CLI::App * sub) {
        sub->add_option("--k", k)->required();
        sub->add_option("--rule", gadget_rule);
        sub->add_option("--out", prefix, "Output prefix");
    };
    auto * ksum = gadget->add_subcommand("ksum", "k-SUM source");
    add_common(ksum);
    ksum->add_option("--weights", weights)->required();
    ksum->add_option("--target", target)->required();
    auto * hitting = gadget->add_subcommand("hittingset", "Hitting Set source");
    auto * cover = gadget->add_subcommand("setcover", "Set Cover source");
    for (auto * sub : {hitting, cover}) {
        add_common(sub);
        sub->add_option("--universe", universe, "Elements are 0..universe-1")->required();
        sub->add_option("--sets", sets, "Sets separated by ';', elements by ','")->required();
    }
    auto * clique = gadget->add_subcommand("clique", "Clique source");
    add_common(clique);
    clique->add_option("--graph", graph_file, "Edge-list file, one 'u v' per line");
    clique->add_option("--edges", edges_text, "Inline edges such as 0-1,1-2");
    clique->add_option("--vertices", vertices, "Vertex count (default: largest endpoint + 1)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_error;
    }

    try {
        if (defend->parsed())
            return cmd_defend(defend_args, out);
        if (attack->parsed())
            return cmd_attack(attack_args, out);
        if (winners_cmd->parsed()) {
            const auto election = load_election(winners_file);
            const auto result = winners(election, parse_rule(winners_rule, election.candidate_count()));
            for (std::size_t i = 0; i < result.size(); ++i)
                out << (i ? " " : "") << election.candidate_names()[static_cast<std::size_t>(result[i])];
            out << "\n";
            return exit_yes;
        }
        if (experiment->parsed()) {
            ExperimentConfig config;
            config.profile = make_gen_config(m, n, g, model, 0);
            if (!rules.empty())
                config.rules = rules;
            config.profiles = profiles;
            config.kd_min = kd_min;
            config.kd_max = kd_max;
            config.seed = seed;
            config.greedy2_trials = trials;
            config.threads = threads;
            config.timing = timing;
            const auto rows = run_experiment(config);
            std::ostringstream csv, summary;
            write_rows_csv(csv, rows, timing);
            write_summary_csv(summary, rows);
            write_text_file(out_path, csv.str());
            const std::string spath = summary_path.empty() ? out_path + ".summary.csv" : summary_path;
            write_text_file(spath, summary.str());
            out << "rows: " << rows.size() << "\n";
            out << "csv: " << out_path << "\n";
            out << "summary: " << spath << "\n";
            return exit_yes;
        }
        if (generate->parsed()) {
            const auto election = generate_profile(make_gen_config(m, n, g, model, seed));
            if (generate_out->count())
                save_election(election, out_path);
            else
                out << serialize_election(election);
            return exit_yes;
        }
        if (gadget->parsed()) {
            GadgetInstance inst = [&] {
                if (ksum->parsed())
                    return gadget_ksum(KsumSource{int_list(weights, "--weights"), k, target}, gadget_rule);
                if (hitting->parsed())
                    return gadget_hitting_set(SetSystemSource{universe, set_list(sets), k}, gadget_rule);
                if (cover->parsed())
                    return gadget_set_cover(SetSystemSource{universe, set_list(sets), k}, gadget_rule);
                std::vector<std::pair<int, int>> edges;
                if (!graph_file.empty())
                    edges = parse_edges(read_text_file(graph_file));
                if (!edges_text.empty()) {
                    auto more = parse_edges(edges_text);
                    edges.insert(edges.end(), more.begin(), more.end());
                }
                int nv = vertices;
                if (nv < 0) {
                    nv = 0;
                    for (auto [u, v] : edges)
                        nv = std::max({nv, u + 1, v + 1});
                }
                return gadget_clique(GraphSource{nv, std::move(edges), k}, gadget_rule);
            }();
            write_gadget(inst, prefix, out);
            return exit_yes;
        }
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

} // namespace electguard
