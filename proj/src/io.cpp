#include <electguard/io.hpp>

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace electguard {

using nlohmann::ordered_json;

namespace {
    [[noreturn]] void fail(const std::string & source, const std::string & where, const std::string & what)
    {
        throw ParseError(source + ": " + where + ": " + what);
    }

    std::size_t line_of(std::string_view text, std::size_t byte)
    {
        const auto end = std::min(byte, text.size());
        return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
    }

    ordered_json parse_document(std::string_view text, const std::string & source)
    {
        try {
            return ordered_json::parse(text.begin(), text.end());
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(source + ": line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON (" + e.what() + ")");
        }
    }

    ordered_json bundle_json(const Election & election, const VoteBundle & b)
    {
        ordered_json order = ordered_json::array();
        for (CandidateIndex c : b.order.ranking())
            order.push_back(election.candidate_names()[static_cast<std::size_t>(c)]);
        return ordered_json{{"order", std::move(order)}, {"count", b.count}};
    }

    VoterGroup parse_group(const ordered_json & node, const std::string & where, const std::map<std::string, CandidateIndex> & index,
        const std::string & source)
    {
        const ordered_json * bundles = &node;
        std::optional<std::string> label;
        std::string base = where;
        if (node.is_object()) {
            for (const auto & [key, _] : node.items())
                if (key != "label" && key != "bundles")
                    fail(source, where, "unknown key '" + key + "'");
            if (!node.contains("bundles"))
                fail(source, where, "group object needs 'bundles'");
            if (node.contains("label")) {
                if (!node["label"].is_string())
                    fail(source, where + ".label", "label must be a string");
                label = node["label"].get<std::string>();
            }
            bundles = &node["bundles"];
            base = where + ".bundles";
        }
        if (!bundles->is_array())
            fail(source, base, "group must be a list of bundles");

        const int m = static_cast<int>(index.size());
        VoterGroup group;
        std::set<std::vector<CandidateIndex>> seen;
        for (std::size_t i = 0; i < bundles->size(); ++i) {
            const auto & b = (*bundles)[i];
            const std::string at = base + "[" + std::to_string(i) + "]";
            if (!b.is_object() || !b.contains("order"))
                fail(source, at, "bundle must be an object with 'order' and optional 'count'");
            for (const auto & [key, _] : b.items())
                if (key != "order" && key != "count")
                    fail(source, at, "unknown key '" + key + "'");
            std::int64_t count = 1;
            if (b.contains("count")) {
                const auto & c = b["count"];
                if (!c.is_number_integer() || c.get<std::int64_t>() < 1)
                    fail(source, at + ".count", "count must be an integer >= 1");
                count = c.get<std::int64_t>();
            }
            const auto & order = b["order"];
            if (!order.is_array())
                fail(source, at + ".order", "order must be a list of candidate names");
            std::vector<CandidateIndex> ranking;
            std::vector<char> used(static_cast<std::size_t>(m), 0);
            for (std::size_t p = 0; p < order.size(); ++p) {
                const std::string pat = at + ".order[" + std::to_string(p) + "]";
                if (!order[p].is_string())
                    fail(source, pat, "candidate must be given by name");
                const auto name = order[p].get<std::string>();
                auto it = index.find(name);
                if (it == index.end())
                    fail(source, pat, "unknown candidate '" + name + "'");
                if (used[static_cast<std::size_t>(it->second)]++)
                    fail(source, pat, "candidate '" + name + "' repeated; order is not a permutation");
                ranking.push_back(it->second);
            }
            if (static_cast<int>(ranking.size()) != m)
                fail(source, at + ".order",
                    "order ranks " + std::to_string(ranking.size()) + " of " + std::to_string(m) + " candidates; order is not a permutation");
            if (!seen.insert(ranking).second)
                fail(source, at, "duplicate order within the group; merge it into one bundle");
            group.add(LinearOrder(std::move(ranking)), count);
        }
        group.set_label(std::move(label));
        return group;
    }
}

std::string serialize_election(const Election & election)
{
    ordered_json doc;
    doc["candidates"] = election.candidate_names();
    ordered_json groups = ordered_json::array();
    for (const auto & g : election.groups()) {
        ordered_json bundles = ordered_json::array();
        for (const auto & b : g.bundles())
            bundles.push_back(bundle_json(election, b));
        if (g.label())
            groups.push_back(ordered_json{{"label", *g.label()}, {"bundles", std::move(bundles)}});
        else
            groups.push_back(std::move(bundles));
    }
    doc["groups"] = std::move(groups);
    return doc.dump(1) + "\n";
}

Election parse_election(std::string_view text, const std::string & source)
{
    const auto doc = parse_document(text, source);
    if (!doc.is_object())
        fail(source, "$", "election document must be an object");
    for (const auto & [key, _] : doc.items())
        if (key != "candidates" && key != "groups")
            fail(source, "$", "unknown key '" + key + "'");
    if (!doc.contains("candidates") || !doc["candidates"].is_array())
        fail(source, "$.candidates", "expected a list of candidate names");
    if (!doc.contains("groups") || !doc["groups"].is_array())
        fail(source, "$.groups", "expected a list of voter groups");

    std::vector<std::string> names;
    std::map<std::string, CandidateIndex> index;
    const auto & cands = doc["candidates"];
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const std::string at = "$.candidates[" + std::to_string(i) + "]";
        if (!cands[i].is_string())
            fail(source, at, "candidate name must be a string");
        auto name = cands[i].get<std::string>();
        if (!index.emplace(name, static_cast<CandidateIndex>(i)).second)
            fail(source, at, "duplicate candidate '" + name + "'");
        names.push_back(std::move(name));
    }
    if (names.empty())
        fail(source, "$.candidates", "need at least one candidate");

    std::vector<VoterGroup> groups;
    const auto & gs = doc["groups"];
    if (gs.empty())
        fail(source, "$.groups", "need at least one voter group");
    for (std::size_t g = 0; g < gs.size(); ++g)
        groups.push_back(parse_group(gs[g], "$.groups[" + std::to_string(g) + "]", index, source));
    return Election(std::move(names), std::move(groups));
}

std::string read_text_file(const std::filesystem::path & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path.string() + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::filesystem::path & path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out)
        throw Error("failed writing '" + path.string() + "'");
}

Election load_election(const std::filesystem::path & path)
{
    return parse_election(read_text_file(path), path.string());
}

void save_election(const Election & election, const std::filesystem::path & path)
{
    write_text_file(path, serialize_election(election));
}

std::string serialize_gadget_meta(const GadgetInstance & gadget)
{
    ordered_json doc;
    doc["family"] = gadget.provenance.family;
    doc["problem"] = to_string(gadget.problem);
    doc["rule"] = gadget.rule.name();
    doc["k_a"] = gadget.params.k_a;
    doc["k_d"] = gadget.params.k_d;
    doc["expected"] = to_string(gadget.expected);

    ordered_json src;
    std::visit(
        [&](const auto & s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, KsumSource>) {
                src["weights"] = s.weights;
                src["k"] = s.k;
                src["target"] = s.target;
            }
            else if constexpr (std::is_same_v<T, SetSystemSource>) {
                src["universe"] = s.universe;
                src["sets"] = s.sets;
                src["k"] = s.k;
            }
            else {
                src["vertices"] = s.vertices;
                ordered_json edges = ordered_json::array();
                for (auto [u, v] : s.edges)
                    edges.push_back({u, v});
                src["edges"] = std::move(edges);
                src["k"] = s.k;
            }
        },
        gadget.provenance.source);
    doc["source"] = std::move(src);
    ordered_json derived = ordered_json::object();
    for (const auto & [key, value] : gadget.provenance.derived)
        derived[key] = value;
    doc["derived"] = std::move(derived);
    return doc.dump(1) + "\n";
}

GadgetMeta parse_gadget_meta(std::string_view text, const std::string & source)
{
    const auto doc = parse_document(text, source);
    if (!doc.is_object())
        fail(source, "$", "gadget sidecar must be an object");
    auto need = [&](const char * key) -> const ordered_json & {
        if (!doc.contains(key))
            fail(source, "$", std::string("missing '") + key + "'");
        return doc[key];
    };
    GadgetMeta meta;
    try {
        meta.family = need("family").get<std::string>();
        meta.rule = need("rule").get<std::string>();
        meta.params.k_a = need("k_a").get<int>();
        meta.params.k_d = need("k_d").get<int>();
        const auto problem = need("problem").get<std::string>();
        if (problem == "defense")
            meta.problem = ProblemKind::defense;
        else if (problem == "attack")
            meta.problem = ProblemKind::attack;
        else
            fail(source, "$.problem", "expected 'defense' or 'attack', got '" + problem + "'");
        const auto expected = need("expected").get<std::string>();
        if (expected == "yes")
            meta.expected = Expected::yes;
        else if (expected == "no")
            meta.expected = Expected::no;
        else if (expected == "unknown")
            meta.expected = Expected::unknown;
        else
            fail(source, "$.expected", "expected yes|no|unknown, got '" + expected + "'");
    }
    catch (const nlohmann::json::type_error & e) {
        fail(source, "$", std::string("wrong value type (") + e.what() + ")");
    }
    return meta;
}

GadgetMeta load_gadget_meta(const std::filesystem::path & path)
{
    return parse_gadget_meta(read_text_file(path), path.string());
}

} // namespace electguard
