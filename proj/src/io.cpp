#include "supercohom/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace supercohom {

namespace {

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where)
{
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items())
        if (!ok.count(key))
            throw InputError("unknown field '" + key + "' in " + where);
}

const Json& require(const Json& obj, const char* key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw InputError("missing field '" + std::string(key) + "' in " + where);
    return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw InputError(where + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

Scalar json_scalar(const Json& j)
{
    if (j.is_string())
        return parse_scalar(j.get<std::string>());
    if (j.is_number_integer())
        return parse_scalar(j.dump());
    throw InputError("scalars must be integers or \"p/q\" strings");
}

} // namespace

LieSuperalgebra parse_algebra_json(std::string_view text)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object())
        throw InputError("algebra JSON must be an object");
    reject_unknown(root, {"name", "even_basis", "odd_basis", "brackets"}, "algebra");
    const Json& name = require(root, "name", "algebra");
    if (!name.is_string())
        throw InputError("'name' must be a string");

    std::vector<BasisElement> basis;
    std::map<std::string, std::size_t> index;
    auto add_basis = [&](const char* key, Parity parity) {
        auto it = root.find(key);
        if (it == root.end())
            return;
        for (auto& n : string_list(*it, key)) {
            if (!index.emplace(n, basis.size()).second)
                throw InputError("duplicate basis name '" + n + "'");
            basis.push_back({std::move(n), parity});
        }
    };
    add_basis("even_basis", Parity::Even);
    add_basis("odd_basis", Parity::Odd);
    auto lookup = [&](const Json& j) {
        if (!j.is_string())
            throw InputError("bracket operands must be basis names");
        auto it = index.find(j.get<std::string>());
        if (it == index.end())
            throw InputError("unknown basis name '" + j.get<std::string>() + "'");
        return it->second;
    };

    std::vector<BracketEntry> entries;
    if (auto it = root.find("brackets"); it != root.end()) {
        if (!it->is_array())
            throw InputError("'brackets' must be an array");
        for (const auto& b : *it) {
            if (!b.is_object())
                throw InputError("bracket entries must be objects");
            reject_unknown(b, {"left", "right", "result"}, "bracket entry");
            BracketEntry e{lookup(require(b, "left", "bracket entry")), lookup(require(b, "right", "bracket entry")), {}};
            const Json& result = require(b, "result", "bracket entry");
            if (!result.is_object())
                throw InputError("bracket result must be an object");
            for (const auto& [n, v] : result.items())
                e.result.emplace(lookup(Json(n)), json_scalar(v));
            entries.push_back(std::move(e));
        }
    }
    return LieSuperalgebra::from_brackets(name.get<std::string>(), std::move(basis), entries);
}

LieSuperalgebra load_algebra_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_algebra_json(ss.str());
}

Json algebra_to_json(const LieSuperalgebra& alg)
{
    Json j;
    j["name"] = alg.name();
    j["even_basis"] = Json::array();
    j["odd_basis"] = Json::array();
    for (const auto& b : alg.basis())
        j[is_odd(b.parity) ? "odd_basis" : "even_basis"].push_back(b.name);
    j["brackets"] = Json::array();
    for (std::size_t k = 0; k < alg.dim(); ++k)
        for (std::size_t l = k; l < alg.dim(); ++l) {
            if (alg.bracket(k, l).empty())
                continue;
            Json result = Json::object();
            for (const auto& [i, c] : alg.bracket(k, l))
                result[alg.basis(i).name] = to_string(c);
            j["brackets"].push_back({{"left", alg.basis(k).name}, {"right", alg.basis(l).name}, {"result", result}});
        }
    return j;
}

Json cohomology_report_json(const CochainComplex& complex, const CohomologyReport& report)
{
    Json j;
    j["k"] = report.k;
    j["betti"] = report.betti;
    j["super_betti"] = {report.betti_even, report.betti_odd};
    j["dims"] = {{"cochain", report.cochain_dim}, {"rank_d_k", report.rank_dk}, {"rank_d_k_minus_1", report.rank_dk_minus_1}};
    j["representatives"] = Json::array();
    for (const auto& c : report.representatives)
        j["representatives"].push_back(format_cochain(complex.module().names(), complex.algebra().names(), c));
    return j;
}

Json cup_table_json(const CochainComplex& complex, const CupTable& table)
{
    const auto mnames = complex.module().names();
    const auto gnames = complex.algebra().names();
    Json j;
    j["p"] = table.p;
    j["q"] = table.q;
    j["rows"] = table.left.size();
    j["cols"] = table.right.size();
    j["all_zero"] = table.all_zero();
    j["cells"] = Json::array();
    for (const auto& row : table.cells) {
        Json r = Json::array();
        for (const auto& c : row)
            r.push_back(format_cochain(mnames, gnames, c));
        j["cells"].push_back(std::move(r));
    }
    return j;
}

} // namespace supercohom
