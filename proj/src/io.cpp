#include "ndp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ndp {

namespace {

struct RawGen {
    std::vector<std::pair<int, int>> factors; // (variable index, exponent)
    bool is_unit = false;
    int line = 0;
};

IdealDocument parse_text(const std::string& content) {
    IdealDocument doc;
    std::vector<RawGen> raw;
    int declared_nvars = -1;
    int max_index = 0;

    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;

        if (toks[0] == "nvars") {
            if (toks.size() != 2)
                throw ParseError("nvars directive expects one integer", lineno, 1);
            try {
                declared_nvars = std::stoi(toks[1]);
            } catch (...) {
                throw ParseError("bad nvars value '" + toks[1] + "'", lineno, 7);
            }
            if (declared_nvars < 0)
                throw ParseError("nvars must be non-negative", lineno, 7);
            continue;
        }

        RawGen g;
        g.line = lineno;
        int col = 1;
        for (const std::string& t : toks) {
            if (t == "1" && toks.size() == 1) {
                g.is_unit = true;
                break;
            }
            if (t[0] != 'x')
                throw ParseError("expected token like x<i>^<e>, got '" + t + "'",
                                 lineno, col);
            auto caret = t.find('^');
            std::string idx_s = t.substr(1, caret == std::string::npos
                                                ? std::string::npos
                                                : caret - 1);
            std::string exp_s = caret == std::string::npos ? "1" : t.substr(caret + 1);
            int idx = 0, exp = 0;
            try {
                idx = std::stoi(idx_s);
                exp = std::stoi(exp_s);
            } catch (...) {
                throw ParseError("bad token '" + t + "'", lineno, col);
            }
            if (idx < 1)
                throw ParseError("variable indices are 1-based", lineno, col);
            if (exp < 0) throw ParseError("negative exponent", lineno, col);
            g.factors.emplace_back(idx - 1, exp);
            max_index = std::max(max_index, idx);
            col += static_cast<int>(t.size()) + 1;
        }
        raw.push_back(std::move(g));
    }

    doc.nvars = declared_nvars >= 0 ? declared_nvars : max_index;
    if (max_index > doc.nvars)
        throw ParseError("variable x" + std::to_string(max_index) +
                             " exceeds declared nvars",
                         raw.empty() ? 1 : raw.back().line, 1);
    for (const RawGen& g : raw) {
        std::vector<int> e(static_cast<std::size_t>(doc.nvars), 0);
        for (auto [i, x] : g.factors) e[static_cast<std::size_t>(i)] += x;
        doc.gens.push_back(std::move(e));
    }
    return doc;
}

IdealDocument parse_json(const std::string& content) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    if (!j.is_object()) throw ParseError("top-level JSON value must be an object", 1, 1);

    static const char* known[] = {"schema", "nvars", "gens", "name", "field"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw ParseError("unknown key '" + it.key() + "'", 1, 1);
    }
    if (j.contains("schema") && (!j["schema"].is_number_integer() || j["schema"] != 1))
        throw ParseError("unsupported schema version", 1, 1);
    if (!j.contains("nvars") || !j["nvars"].is_number_integer())
        throw ParseError("missing integer 'nvars'", 1, 1);
    if (!j.contains("gens") || !j["gens"].is_array())
        throw ParseError("missing array 'gens'", 1, 1);

    IdealDocument doc;
    doc.nvars = j["nvars"].get<int>();
    if (doc.nvars < 0) throw ParseError("nvars must be non-negative", 1, 1);
    for (const auto& row : j["gens"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != doc.nvars)
            throw ParseError("each generator needs exactly nvars exponents", 1, 1);
        std::vector<int> e;
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw ParseError("exponents must be non-negative integers", 1, 1);
            e.push_back(v.get<int>());
        }
        doc.gens.push_back(std::move(e));
    }
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("'name' must be a string", 1, 1);
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("field")) {
        if (!j["field"].is_string()) throw ParseError("'field' must be a string", 1, 1);
        doc.field = j["field"].get<std::string>();
    }
    return doc;
}

} // namespace

IdealDocument parse_document(const std::string& content) {
    for (char c : content) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_json(content);
        break;
    }
    return parse_text(content);
}

IdealDocument parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string serialize_text(const IdealDocument& doc) {
    std::ostringstream out;
    if (!doc.name.empty()) out << "# " << doc.name << "\n";
    out << "nvars " << doc.nvars << "\n";
    for (const auto& row : doc.gens) out << to_string(Monomial(row)) << "\n";
    return out.str();
}

std::string serialize_json(const IdealDocument& doc) {
    nlohmann::json j;
    j["schema"] = 1;
    j["nvars"] = doc.nvars;
    j["gens"] = doc.gens;
    if (!doc.name.empty()) j["name"] = doc.name;
    if (!doc.field.empty()) j["field"] = doc.field;
    return j.dump(2) + "\n";
}

MonomialIdeal to_ideal(const IdealDocument& doc) {
    std::vector<Monomial> gens;
    gens.reserve(doc.gens.size());
    for (const auto& row : doc.gens) gens.emplace_back(row);
    return MonomialIdeal::from_generators(doc.nvars, std::move(gens));
}

IdealDocument from_ideal(const MonomialIdeal& I, const std::string& name) {
    IdealDocument doc;
    doc.nvars = I.nvars();
    doc.name = name;
    for (const Monomial& g : I.generators()) doc.gens.push_back(g.exponents());
    return doc;
}

} // namespace ndp
