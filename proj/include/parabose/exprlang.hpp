#pragma once

#include "generators.hpp"
#include "linalg.hpp"

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace parabose {

/**
 * Operator mini-language for the apply command. An expression is a
 * whitespace-separated product of tokens, applied right to left:
 *
 *   b(alpha)   bd(alpha)   E   Q   G(a,b)   I(a)
 *   even(kind,alpha,beta)        kind in {cc, ca, aa}
 *   Groot(kind,k[,l])            kind in {pp, pm, mp, mm, sp, sm}
 *
 * "G(1,2) bd(1)" means G^{12} applied after bd_1.
 */
class OperatorExpr
{
public:
    static OperatorExpr parse(const std::string &text, const ModelParams &par)
    {
        OperatorExpr expr;
        std::istringstream in(text);
        std::string token;
        while (in >> token)
            expr.ops_.push_back(parse_token(token, par));
        if (expr.ops_.empty())
            throw std::invalid_argument("empty operator expression");
        return expr;
    }

    State apply(const State &v) const
    {
        State out = v;
        for (auto it = ops_.rbegin(); it != ops_.rend(); ++it)
            out = (*it)(out);
        return out;
    }

private:
    static std::vector<std::string> split_args(const std::string &inner)
    {
        std::vector<std::string> args;
        std::string cur;
        for (char c : inner) {
            if (c == ',') {
                args.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        if (!cur.empty())
            args.push_back(cur);
        return args;
    }

    static StateOp parse_token(const std::string &token, const ModelParams &par)
    {
        auto open = token.find('(');
        std::string head = open == std::string::npos ? token : token.substr(0, open);
        std::vector<std::string> args;
        if (open != std::string::npos) {
            if (token.back() != ')')
                throw std::invalid_argument("malformed token: " + token);
            args = split_args(token.substr(open + 1, token.size() - open - 2));
        }
        auto want = [&](size_t count) {
            if (args.size() != count)
                throw std::invalid_argument("token " + token + " expects " +
                                            std::to_string(count) + " arguments");
        };
        auto arg_int = [&](size_t i) { return std::stoi(args.at(i)); };

        if (head == "b") {
            want(1);
            int alpha = arg_int(0);
            if (alpha < 1 || alpha > par.n)
                throw std::invalid_argument("b: alpha out of range in " + token);
            return [alpha](const State &v) { return apply_annihilator(alpha, v); };
        }
        if (head == "bd") {
            want(1);
            int alpha = arg_int(0);
            if (alpha < 1 || alpha > par.n)
                throw std::invalid_argument("bd: alpha out of range in " + token);
            return [alpha](const State &v) { return apply_creator(alpha, v); };
        }
        if (head == "E") {
            want(0);
            return [](const State &v) { return apply_energy(v); };
        }
        if (head == "Q") {
            want(0);
            return [](const State &v) { return apply_Q(v); };
        }
        if (head == "G") {
            want(2);
            int a = arg_int(0), b = arg_int(1);
            if (a == b || a < 1 || b < 1 || a > par.p || b > par.p)
                throw std::invalid_argument("G: bad indices in " + token);
            return [a, b](const State &v) { return apply_gauge(a, b, v); };
        }
        if (head == "I") {
            want(1);
            int a = arg_int(0);
            if (par.eps())
                throw std::invalid_argument("I: inversions need even p");
            if (a < 1 || a > par.p)
                throw std::invalid_argument("I: index out of range in " + token);
            return [a](const State &v) { return apply_inversion(a, v); };
        }
        if (head == "even") {
            want(3);
            const std::string &kind = args[0];
            int alpha = std::stoi(args[1]), beta = std::stoi(args[2]);
            EvenOpLabel label = kind == "cc"   ? EvenOpLabel::create_create(alpha, beta)
                                : kind == "ca" ? EvenOpLabel::create_annih(alpha, beta)
                                : kind == "aa" ? EvenOpLabel::annih_annih(alpha, beta)
                                               : throw std::invalid_argument(
                                                     "even: kind must be cc/ca/aa in " + token);
            label.validate(par);
            return [label](const State &v) { return apply_even(label, v); };
        }
        if (head == "Groot") {
            if (args.empty())
                throw std::invalid_argument("Groot needs a kind argument");
            const std::string &kind = args[0];
            GaugeRootLabel label{};
            if (kind == "sp" || kind == "sm") {
                want(2);
                label = kind == "sp" ? GaugeRootLabel::short_plus(arg_int(1))
                                     : GaugeRootLabel::short_minus(arg_int(1));
            } else {
                want(3);
                int k = arg_int(1), l = arg_int(2);
                if (kind == "pp")
                    label = GaugeRootLabel::plus_plus(k, l);
                else if (kind == "pm")
                    label = GaugeRootLabel::plus_minus(k, l);
                else if (kind == "mp")
                    label = GaugeRootLabel::minus_plus(k, l);
                else if (kind == "mm")
                    label = GaugeRootLabel::minus_minus(k, l);
                else
                    throw std::invalid_argument("Groot: kind must be pp/pm/mp/mm/sp/sm in " +
                                                token);
            }
            label.validate(par);
            return [label](const State &v) { return apply_gauge_root(label, v); };
        }
        throw std::invalid_argument("unknown operator token: " + token);
    }

    std::vector<StateOp> ops_;
};

} // namespace parabose
