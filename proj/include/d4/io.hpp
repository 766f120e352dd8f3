#pragma once

#include "d4/herrmann.hpp"
#include "d4/repr.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace d4 {

using ojson = nlohmann::ordered_json;

/* {p, dim0, Y: [[row vectors] x 4]} with rref bases as rows. */
inline ojson rep_to_json(const QuadRep& r)
{
    ojson j;
    j["p"] = r.p;
    j["dim0"] = r.dim0;
    ojson ys = ojson::array();
    for (const auto& y : r.Y) {
        ojson rows = ojson::array();
        for (int i = 0; i < y.dim(); ++i) {
            ojson row = ojson::array();
            for (int c = 0; c < y.ambient(); ++c)
                row.push_back(y.basis().at(i, c));
            rows.push_back(row);
        }
        ys.push_back(rows);
    }
    j["Y"] = ys;
    if (!r.label.empty())
        j["label"] = r.label;
    return j;
}

inline QuadRep rep_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("p") || !j.contains("dim0") || !j.contains("Y"))
        throw std::invalid_argument("representation JSON needs keys p, dim0, Y");
    int p = j.at("p").get<int>();
    int dim0 = j.at("dim0").get<int>();
    if (!is_supported_prime(p))
        throw std::invalid_argument("representation JSON: p = " + std::to_string(p) + " is not a prime below 256");
    if (dim0 < 0)
        throw std::invalid_argument("representation JSON: negative dim0");
    const auto& Y = j.at("Y");
    if (!Y.is_array() || Y.size() != 4)
        throw std::invalid_argument("representation JSON: Y must list four subspaces");
    std::array<std::vector<std::vector<int>>, 4> rows;
    for (int i = 0; i < 4; ++i) {
        for (const auto& row : Y[i]) {
            auto v = row.get<std::vector<int>>();
            if (static_cast<int>(v.size()) != dim0)
                throw std::invalid_argument("representation JSON: row length differs from dim0 in Y[" +
                                            std::to_string(i) + "]");
            for (int& x : v)
                x = ((x % p) + p) % p;
            rows[i].push_back(v);
        }
    }
    return make_rep(p, dim0, rows, j.value("label", std::string{}));
}

inline ojson subspace_to_json(const Subspace& s)
{
    ojson rows = ojson::array();
    for (int i = 0; i < s.dim(); ++i) {
        ojson row = ojson::array();
        for (int c = 0; c < s.ambient(); ++c)
            row.push_back(s.basis().at(i, c));
        rows.push_back(row);
    }
    return rows;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ojson cube_to_json(int n, const std::vector<CubeRow>& rows)
{
    ojson j;
    j["n"] = n;
    ojson arr = ojson::array();
    for (const auto& r : rows) {
        ojson x;
        x["label"] = r.label;
        x["gp"] = print(r.gp);
        x["herrmann"] = print(r.herrmann);
        x["cumulative"] = print(r.cumulative);
        arr.push_back(x);
    }
    j["rows"] = arr;
    return j;
}

}
