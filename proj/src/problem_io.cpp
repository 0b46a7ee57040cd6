#include "grl/syntax.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace grl {

namespace {

using nlohmann::json;

[[noreturn]] void schema_err(const std::string& msg) {
    throw ProblemIoError(ProblemErrorCode::SchemaViolation, "problem schema: " + msg);
}

std::vector<std::string> string_list(const json& j, const std::string& key) {
    if (!j.is_array()) schema_err("'" + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& el : j) {
        if (!el.is_string()) schema_err("'" + key + "' must contain only strings");
        out.push_back(el.get<std::string>());
    }
    return out;
}

TermPtr parse_checked(const std::string& src, Sig sig, const std::string& where) {
    try {
        return parse_term(src, sig);
    } catch (const ParseException& ex) {
        throw ProblemIoError(ProblemErrorCode::ParseFailure,
                             where + ": " + ex.what() + " in \"" + src + "\"");
    }
}

void check_declared(const TermPtr& t, const VarContext& ctx, const std::string& where) {
    for (const auto& v : free_vars(t))
        if (!ctx.declares(v))
            throw ProblemIoError(ProblemErrorCode::UndeclaredVariable,
                                 where + ": undeclared variable '" + v + "'");
}

}  // namespace

Problem parse_problem_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& ex) {
        schema_err(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object()) schema_err("top level must be an object");
    if (!j.contains("signature") || !j["signature"].is_string())
        schema_err("missing string field 'signature'");
    auto sig = sig_from_name(j["signature"].get<std::string>());
    if (!sig) schema_err("unknown signature '" + j["signature"].get<std::string>() + "'");

    if (!j.contains("vars") || !j["vars"].is_object()) schema_err("missing object field 'vars'");
    const json& jv = j["vars"];
    std::vector<std::string> xs =
        jv.contains("xs") ? string_list(jv["xs"], "vars.xs") : std::vector<std::string>{};
    std::optional<std::string> y;
    if (jv.contains("y")) {
        if (!jv["y"].is_string()) schema_err("'vars.y' must be a string");
        y = jv["y"].get<std::string>();
    }
    std::vector<std::string> zs =
        jv.contains("zs") ? string_list(jv["zs"], "vars.zs") : std::vector<std::string>{};

    Problem p;
    p.sig = *sig;
    try {
        p.ctx = VarContext(xs, y, zs);
    } catch (const std::invalid_argument& ex) {
        schema_err(ex.what());
    }

    if (!j.contains("premises")) schema_err("missing field 'premises'");
    for (const auto& src : string_list(j["premises"], "premises")) {
        TermPtr t = parse_checked(src, p.sig, "premise");
        check_declared(t, p.ctx, "premise");
        p.premises.push_back(std::move(t));
    }

    if (!j.contains("conclusion") || !j["conclusion"].is_string())
        schema_err("missing string field 'conclusion'");
    std::string concl = j["conclusion"].get<std::string>();
    if (concl == "LAMBDA") {
        p.conclusion = Conclusion::lambda();
    } else {
        TermPtr t = parse_checked(concl, p.sig, "conclusion");
        check_declared(t, p.ctx, "conclusion");
        p.conclusion = Conclusion(std::move(t));
    }
    return p;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemIoError(ProblemErrorCode::SchemaViolation, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem_json(buf.str());
}

}  // namespace grl
