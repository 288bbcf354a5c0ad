#pragma once

#include <electguard/gadgets.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace electguard {

/// Malformed election or sidecar document; the message carries the line or
/// the JSON path of the offending value.
class ParseError : public InvalidArgument
{
public:
    using InvalidArgument::InvalidArgument;
};

/// {"candidates": [names], "groups": [group...]} where a group is either a
/// list of {"order": [names], "count": n} bundles or an object
/// {"label": s, "bundles": [...]}. Output is stable: fixed key order, groups
/// and bundles in election order.
std::string serialize_election(const Election & election);
Election parse_election(std::string_view text, const std::string & source_name = "<input>");

Election load_election(const std::filesystem::path & path);
void save_election(const Election & election, const std::filesystem::path & path);

/// Sidecar with family, problem, rule, budgets, expected answer and the source
/// instance of a generated gadget.
std::string serialize_gadget_meta(const GadgetInstance & gadget);

struct GadgetMeta
{
    std::string family;
    ProblemKind problem = ProblemKind::defense;
    std::string rule;
    InstanceParams params;
    Expected expected = Expected::unknown;
};

GadgetMeta parse_gadget_meta(std::string_view text, const std::string & source_name = "<input>");
GadgetMeta load_gadget_meta(const std::filesystem::path & path);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_text_file(const std::filesystem::path & path);
void write_text_file(const std::filesystem::path & path, std::string_view text);

} // namespace electguard
