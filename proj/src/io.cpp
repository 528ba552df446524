#include "nearring/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace nearring {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> int_rows(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError(std::string(what) + " rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw InputError(std::string(what) + " entries must be integers");
            r.push_back(v.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::string rows_block(const Table& t, const std::string& indent) {
    std::ostringstream os;
    os << "[\n";
    for (int x = 0; x < t.size(); ++x) {
        os << indent << "  [";
        for (int y = 0; y < t.size(); ++y) os << (y ? ", " : "") << int(t(x, y));
        os << "]" << (x + 1 < t.size() ? "," : "") << "\n";
    }
    os << indent << "]";
    return os.str();
}

bool is_named_spec(const std::string& spec) {
    try {
        build_group(spec);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

}  // namespace

FiniteGroup parse_group(const json& j) {
    if (j.is_string()) return build_group(j.get<std::string>());
    if (j.is_object()) {
        if (!j.contains("order") || !j.contains("add")) throw InputError("group table object needs 'order' and 'add'");
        if (!j["order"].is_number_integer()) throw InputError("group 'order' must be an integer");
        const int n = j["order"].get<int>();
        const Table add = Table::from_rows(int_rows(j["add"], "group 'add'"));
        if (add.size() != n) throw InputError("group 'order' does not match the 'add' table");
        return FiniteGroup::from_table(add);
    }
    throw InputError("group must be a spec string or a table object");
}

json group_to_json(const FiniteGroup& g) {
    if (is_named_spec(g.spec()) && build_group(g.spec()) == g) return g.spec();
    return json{{"order", g.order()}, {"add", g.table().rows()}};
}

Nearring parse_nearring(std::string_view text, bool require_axioms) {
    const json j = parse_json(text);
    if (!j.is_object()) throw InputError("nearring file must be a JSON object");
    if (!j.contains("group")) throw InputError("nearring file is missing 'group'");
    if (!j.contains("mul")) throw InputError("nearring file is missing 'mul'");
    FiniteGroup g = parse_group(j["group"]);
    const Table mul = Table::from_rows(int_rows(j["mul"], "'mul'"));
    if (mul.size() != g.order()) {
        throw InputError("'mul' is " + std::to_string(mul.size()) + "x" + std::to_string(mul.size()) +
                         " but the group has order " + std::to_string(g.order()));
    }
    Nearring r = require_axioms ? validate({std::move(g), mul}) : Nearring::unchecked(std::move(g), mul);
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("'name' must be a string");
        r = r.with_name(j["name"].get<std::string>());
    }
    if (j.contains("meta")) {
        if (!j["meta"].is_object()) throw InputError("'meta' must be an object");
        for (const auto& [k, v] : j["meta"].items()) {
            if (!v.is_string()) throw InputError("'meta' values must be strings");
            r = r.with_meta(k, v.get<std::string>());
        }
    }
    return r;
}

std::string read_text(const std::filesystem::path& path) {
    std::ostringstream os;
    if (path == "-") {
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    os << in.rdbuf();
    return os.str();
}

Nearring parse_nearring_file(const std::filesystem::path& path, bool require_axioms) {
    return parse_nearring(read_text(path), require_axioms);
}

std::string serialize_nearring(const Nearring& r) {
    std::ostringstream os;
    os << "{\n";
    if (!r.name().empty()) os << "  \"name\": " << json(r.name()).dump() << ",\n";
    os << "  \"group\": " << group_to_json(r.group()).dump() << ",\n";
    if (!r.meta().empty()) os << "  \"meta\": " << json(r.meta()).dump() << ",\n";
    os << "  \"mul\": " << rows_block(r.mul_table(), "  ") << "\n";
    os << "}\n";
    return os.str();
}

json flags_to_json(const PropertyFlags& f) {
    return json{{"zero_symmetric", f.zero_symmetric},
                {"semidistributive", f.semidistributive},
                {"distributive", f.distributive},
                {"has_identity", f.has_identity},
                {"abelian_addition", f.abelian_addition}};
}

json counts_to_json(const CensusCounts& c) {
    return json{{"total", c.total},
                {"with_identity", c.with_identity},
                {"zero_symmetric", c.zero_symmetric},
                {"semidistributive", c.semidistributive},
                {"distributive", c.distributive}};
}

std::string catalog_text(const CensusResult& result) {
    std::string out;
    for (const auto& e : result.representatives) {
        json rec{{"group", result.group_spec}, {"mul", e.mul.rows()}, {"flags", flags_to_json(e.flags)}};
        out += rec.dump() + "\n";
    }
    json summary{{"summary", counts_to_json(result.counts)},
                 {"group", result.group_spec},
                 {"convention", "left"},
                 {"iso_reduction", result.iso_reduction},
                 {"filters", result.filters.names()},
                 {"tool_version", kToolVersion},
                 {"nodes_visited", result.meta.nodes_visited},
                 {"raw_tables", result.meta.raw_tables}};
    out += summary.dump() + "\n";
    return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write '" + tmp.string() + "'");
        out << contents;
        out.flush();
        if (!out) throw InputError("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

void write_catalog(const std::filesystem::path& path, const CensusResult& result) {
    write_atomically(path, catalog_text(result));
}

CensusResult read_catalog(const std::filesystem::path& path) {
    std::istringstream in(read_text(path));
    CensusResult r;
    std::optional<json> summary;
    std::optional<FiniteGroup> group;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json rec = parse_json(line);
        if (rec.contains("summary")) {
            summary = rec;
            continue;
        }
        if (!group) {
            group = parse_group(rec.at("group"));
            r.group_spec = group->spec();
        }
        const Table mul = Table::from_rows(int_rows(rec.at("mul"), "'mul'"));
        const Nearring nr = validate({*group, mul});
        r.representatives.push_back({mul, nr.flags()});
    }
    if (!summary) throw InputError("catalog '" + path.string() + "' has no summary record");
    if (!group) {
        group = parse_group((*summary)["group"]);
        r.group_spec = group->spec();
    }
    for (const auto& e : r.representatives) r.counts.add(e.flags);
    if (counts_to_json(r.counts) != (*summary)["summary"]) {
        throw InputError("catalog '" + path.string() + "' summary does not match its records");
    }
    r.iso_reduction = (*summary).value("iso_reduction", true);
    for (const auto& f : (*summary).value("filters", std::vector<std::string>{})) r.filters.enable(f);
    r.meta.nodes_visited = (*summary).value("nodes_visited", std::uint64_t{0});
    r.meta.raw_tables = (*summary).value("raw_tables", std::uint64_t{0});
    return r;
}

json verdict_to_json(const CheckVerdict& v) {
    json j{{"check_id", v.check_id}, {"applicable", v.applicable}, {"holds", v.holds}};
    if (v.witness) {
        json b = json::object();
        for (const auto& [k, val] : v.witness->bindings) b[k] = val;
        json w{{"law", v.witness->law}, {"bindings", b}, {"lhs", v.witness->lhs}, {"rhs", v.witness->rhs}};
        if (!v.witness->set.empty()) w["set"] = v.witness->set;
        j["witness"] = w;
    }
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

json report_to_json(const SuiteReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
    json j{{"instance", r.instance}, {"verdicts", verdicts}, {"overall", r.overall ? "pass" : "fail"},
           {"axioms", r.axioms_hold ? "valid" : r.axiom_note}};
    return j;
}

}  // namespace nearring
