#include "polyenum/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace polyenum {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception&) {
        throw validation_error(std::string("malformed JSON in ") + what);
    }
}

int require_positive_int(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 1)
        throw validation_error(std::string(what) + " must be a positive integer");
    return static_cast<int>(j.get<long long>());
}

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array())
        throw validation_error(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw validation_error(std::string(what) + " must be an array of integers");
        out.push_back(static_cast<int>(v.get<long long>()));
    }
    return out;
}

Rat rat_value(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw validation_error(std::string(what) + " must be an integer or a \"p/q\" string");
}

}  // namespace

PermGroup group_from_json_text(const std::string& text, std::uint64_t cap) {
    const json j = parse_json(text, "group description");
    if (!j.is_object())
        throw validation_error("group description must be a JSON object");
    if (j.contains("named")) {
        if (j.contains("generators") || j.contains("degree"))
            throw validation_error("group description mixes 'named' with explicit fields");
        if (!j["named"].is_string())
            throw validation_error("'named' must be a string like \"sym:3\"");
        return named_group(j["named"].get<std::string>(), cap);
    }
    if (!j.contains("degree") || !j.contains("generators"))
        throw validation_error("group description needs 'degree' and 'generators'");
    const int degree = require_positive_int(j["degree"], "group degree");
    if (!j["generators"].is_array())
        throw validation_error("'generators' must be an array");
    std::vector<Permutation> gens;
    for (const auto& g : j["generators"]) {
        if (g.is_string()) {
            gens.push_back(Permutation::parse_cycles(degree, g.get<std::string>()));
        } else {
            auto images = int_array(g, "generator");
            if (static_cast<int>(images.size()) != degree)
                throw dimension_error("generator image array has wrong length");
            gens.emplace_back(std::move(images));
        }
    }
    return generate_group(degree, gens, cap);
}

PermGroup load_group(const std::string& path, std::uint64_t cap) {
    return group_from_json_text(read_file(path), cap);
}

PermGroup resolve_group(const std::string& spec_or_path, std::uint64_t cap) {
    // Anything with a colon is a named spec; everything else is a path.
    if (spec_or_path.find(':') != std::string::npos)
        return named_group(spec_or_path, cap);
    return load_group(spec_or_path, cap);
}

DeltaWeight delta_from_json_text(const std::string& text) {
    const json j = parse_json(text, "delta description");
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw validation_error("delta description needs a string 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "uniform") return DeltaWeight::uniform();
    if (kind == "sign") return DeltaWeight::sign();
    if (kind != "table")
        throw validation_error("delta kind must be uniform, sign, or table");
    if (!j.contains("degree") || !j.contains("entries"))
        throw validation_error("delta table needs 'degree' and 'entries'");
    const int degree = require_positive_int(j["degree"], "delta degree");
    if (!j["entries"].is_array() || j["entries"].empty())
        throw validation_error("delta table 'entries' must be a nonempty array");
    std::map<std::vector<int>, Rat> values;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("perm") || !e.contains("value"))
            throw validation_error("delta entry needs 'perm' and 'value'");
        auto images = int_array(e["perm"], "delta entry perm");
        if (static_cast<int>(images.size()) != degree)
            throw dimension_error("delta entry perm has wrong length");
        const Rat v = rat_value(e["value"], "delta entry value");
        if (!values.emplace(std::move(images), v).second)
            throw validation_error("delta table lists a permutation twice");
    }
    return DeltaWeight::table(std::move(values));
}

DeltaWeight load_delta(const std::string& path) {
    return delta_from_json_text(read_file(path));
}

DeltaWeight resolve_delta(const std::string& arg) {
    if (arg == "uniform") return DeltaWeight::uniform();
    if (arg == "sign") return DeltaWeight::sign();
    if (!arg.empty() && arg.front() == '@') return load_delta(arg.substr(1));
    throw validation_error("delta must be 'uniform', 'sign', or '@file.json'");
}

RatMatrix matrix_from_json_text(const std::string& text) {
    const json j = parse_json(text, "matrix description");
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw validation_error("matrix description needs an 'entries' array");
    const auto& rows = j["entries"];
    if (rows.empty())
        throw validation_error("matrix must have at least one row");
    const int order = static_cast<int>(rows.size());
    RatMatrix m(order);
    for (int i = 0; i < order; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != order)
            throw dimension_error("matrix rows must all have the same length as the row count");
        for (int k = 0; k < order; ++k)
            m.at(i, k) = rat_value(row[static_cast<std::size_t>(k)], "matrix entry");
    }
    return m;
}

RatMatrix load_matrix(const std::string& path) {
    return matrix_from_json_text(read_file(path));
}

std::string poly_to_json_text(const MultiPoly& p, const std::string& var_prefix) {
    ordered_json out;
    auto vars = ordered_json::array();
    for (std::size_t i = 0; i < p.var_count(); ++i)
        vars.push_back(var_prefix + std::to_string(i + 1));
    out["vars"] = std::move(vars);
    auto terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        ordered_json term;
        term["exp"] = m;
        term["coef"] = rat_to_string(c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out.dump();
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string piece =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_rat(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw validation_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace polyenum
