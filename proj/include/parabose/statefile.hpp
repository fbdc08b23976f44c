#pragma once

#include "decompose.hpp"
#include "fock.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace parabose {

/**
 * Exact JSON state format, version "1". All coefficients are "num/den"
 * strings; floats never appear, so parse(serialize(v)) reproduces v
 * bit-identically.
 *
 * {
 *   "format_version": "1", "n": 1, "p": 2,
 *   "terms": [ { "orb": {"plus": [[..]], "minus": [[..]], "odd": [..]},
 *                "spin": [1, -1, ...],
 *                "coef": {"re": "1/1", "im": "0/1",
 *                         "re_s2": "0/1", "im_s2": "0/1"} } ]
 * }
 */
inline nlohmann::json state_to_json(const State &v)
{
    const ModelParams &par = v.params;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[ket, coef] : v.terms) {
        nlohmann::json plus = nlohmann::json::array();
        nlohmann::json minus = nlohmann::json::array();
        nlohmann::json odd = nlohmann::json::array();
        for (int alpha = 1; alpha <= par.n; ++alpha) {
            nlohmann::json prow = nlohmann::json::array();
            nlohmann::json mrow = nlohmann::json::array();
            for (int k = 1; k <= par.q(); ++k) {
                prow.push_back(exp_plus(par, ket, alpha, k));
                mrow.push_back(exp_minus(par, ket, alpha, k));
            }
            plus.push_back(std::move(prow));
            minus.push_back(std::move(mrow));
            odd.push_back(exp_odd(par, ket, alpha));
        }
        nlohmann::json spin = nlohmann::json::array();
        for (int k = 1; k <= par.q(); ++k)
            spin.push_back((ket.spin >> (k - 1)) & 1u ? 1 : -1);
        terms.push_back({{"orb", {{"plus", plus}, {"minus", minus}, {"odd", odd}}},
                         {"spin", spin},
                         {"coef",
                          {{"re", rational_str(coef.re())},
                           {"im", rational_str(coef.im())},
                           {"re_s2", rational_str(coef.re_s2())},
                           {"im_s2", rational_str(coef.im_s2())}}}});
    }
    return {{"format_version", "1"}, {"n", par.n}, {"p", par.p}, {"terms", terms}};
}

inline State state_from_json(const nlohmann::json &j)
{
    if (j.at("format_version").get<std::string>() != "1")
        throw std::invalid_argument("state file: unsupported format_version");
    ModelParams par(j.at("n").get<int>(), j.at("p").get<int>());
    State v(par);
    for (const auto &term : j.at("terms")) {
        BasisKet ket = BasisKet::vacuum(par, 0u);
        const auto &orb = term.at("orb");
        const auto &plus = orb.at("plus");
        const auto &minus = orb.at("minus");
        if (static_cast<int>(plus.size()) != par.n || static_cast<int>(minus.size()) != par.n)
            throw std::invalid_argument("state file: orb matrices must have n rows");
        for (int alpha = 1; alpha <= par.n; ++alpha) {
            const auto &prow = plus[alpha - 1];
            const auto &mrow = minus[alpha - 1];
            if (static_cast<int>(prow.size()) != par.q() ||
                static_cast<int>(mrow.size()) != par.q())
                throw std::invalid_argument("state file: orb rows must have q entries");
            for (int k = 1; k <= par.q(); ++k) {
                ket.exps[mode_index(par, alpha, k, Sign::plus)] = prow[k - 1].get<uint32_t>();
                ket.exps[mode_index(par, alpha, k, Sign::minus)] = mrow[k - 1].get<uint32_t>();
            }
        }
        const auto &odd = orb.at("odd");
        if (static_cast<int>(odd.size()) != par.n)
            throw std::invalid_argument("state file: odd vector must have n entries");
        for (int alpha = 1; alpha <= par.n; ++alpha) {
            uint32_t e = odd[alpha - 1].get<uint32_t>();
            if (par.eps())
                ket.exps[odd_mode_index(par, alpha)] = e;
            else if (e != 0)
                throw std::invalid_argument("state file: odd exponents must vanish for even p");
        }
        const auto &spin = term.at("spin");
        if (static_cast<int>(spin.size()) != par.q())
            throw std::invalid_argument("state file: spin must have q entries");
        for (int k = 1; k <= par.q(); ++k) {
            int s = spin[k - 1].get<int>();
            if (s != 1 && s != -1)
                throw std::invalid_argument("state file: spin entries must be +-1");
            if (s == 1)
                ket.spin |= 1u << (k - 1);
        }
        const auto &coef = term.at("coef");
        Scalar c(parse_rational(coef.at("re").get<std::string>()),
                 parse_rational(coef.at("im").get<std::string>()),
                 parse_rational(coef.at("re_s2").get<std::string>()),
                 parse_rational(coef.at("im_s2").get<std::string>()));
        v.add(ket, c);
    }
    return v;
}

/// Atomic write: temp file in the target directory, then rename.
inline void write_file_atomic(const std::string &path, const std::string &content)
{
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush())
            throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

inline void write_state_file(const std::string &path, const State &v)
{
    write_file_atomic(path, state_to_json(v).dump(2) + "\n");
}

inline State read_state_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return state_from_json(j);
}

// ---------------------------------------------------------------------------
// decomposition report serialization
// ---------------------------------------------------------------------------

inline std::string join_ll(const std::vector<long long> &v)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string join_weights(const WeightVector &w)
{
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ",";
        out += w[i].str();
    }
    return out;
}

inline nlohmann::json report_to_json(const DecompositionReport &report)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const ReportRow &row : report.rows) {
        nlohmann::json s = nlohmann::json::array();
        for (long long x : row.osp.s)
            s.push_back(x);
        nlohmann::json sigma = nlohmann::json::array();
        for (long long x : row.gauge.sigma)
            sigma.push_back(x);
        nlohmann::json mu = nlohmann::json::array();
        for (const HalfInt &x : row.mu)
            mu.push_back(x.str());
        rows.push_back({{"degree", row.degree},
                        {"energy", row.energy.str()},
                        {"d", row.osp.d.str()},
                        {"s", s},
                        {"sigma", sigma},
                        {"mu", mu},
                        {"gauge_dim", row.gauge_dim},
                        {"vector_id", row.vector_id}});
    }
    return {{"format_version", "1"},
            {"n", report.params.n},
            {"p", report.params.p},
            {"max_degree", report.max_degree},
            {"rows", rows}};
}

inline std::string report_to_tsv(const DecompositionReport &report)
{
    std::string out = "degree\tenergy\td\ts\tsigma\tmu\tgauge_dim\tvector_id\n";
    for (const ReportRow &row : report.rows) {
        out += std::to_string(row.degree) + "\t" + row.energy.str() + "\t" + row.osp.d.str() +
               "\t" + join_ll(row.osp.s) + "\t" + join_ll(row.gauge.sigma) + "\t" +
               join_weights(row.mu) + "\t" + std::to_string(row.gauge_dim) + "\t" +
               row.vector_id + "\n";
    }
    return out;
}

inline std::string report_to_pretty(const DecompositionReport &report)
{
    std::string out = "decomposition for n=" + std::to_string(report.params.n) +
                      ", p=" + std::to_string(report.params.p) +
                      ", degrees 0.." + std::to_string(report.max_degree) + "\n";
    for (const ReportRow &row : report.rows) {
        out += "  degree " + std::to_string(row.degree) + "  E=" + row.energy.str() +
               "  osp " + row.osp.str() + "  gauge " + row.gauge.str() + "  mu=(" +
               join_weights(row.mu) + ")  dim " + std::to_string(row.gauge_dim) + "  [" +
               row.vector_id + "]\n";
        out += "      " + row.vector.str() + "\n";
    }
    return out;
}

} // namespace parabose
