#include "wedgelab/symbolic.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "engine.hpp"
#include "series.hpp"
#include "wedgelab/hall.hpp"
#include "wedgelab/nilpotent.hpp"
#include "wedgelab/words.hpp"

namespace wedgelab {

using detail::Series;

namespace {

// One substituted variable: a block of fresh generators and the word the
// variable stands for (the generator itself, or a left-iterated basic
// commutator of the block at the chosen weight).
struct VarSub {
    std::string name;
    int first_gen = 0;
    int block = 1;           // fresh generators reserved
    long min_weight = 1;
    bool constrained = false;
};

GroupWord weight_word(const VarSub& v, long weight) {
    GroupWord a;
    a.letters.push_back({v.first_gen, 1});
    if (weight == 1) return a;
    GroupWord b;
    b.letters.push_back({v.first_gen + 1, 1});
    GroupWord c = commutator(b, a);  // weight 2
    for (long w = 3; w <= weight; ++w) c = commutator(c, a);
    return c;
}

Series eval_term(const Term& t, const std::map<std::string, Series>& env, const Int& n,
                 int klass) {
    switch (t.kind) {
        case Term::Kind::Var:
            return env.at(t.var);
        case Term::Kind::One:
            return Series::one(klass);
        case Term::Kind::Product: {
            Series s = Series::one(klass);
            for (const auto& a : t.args) s *= eval_term(*a, env, n, klass);
            return s;
        }
        case Term::Kind::Inverse:
            return eval_term(*t.args[0], env, n, klass).group_inverse();
        case Term::Kind::Power:
            return eval_term(*t.args[0], env, n, klass).group_power(eval_int(*t.exp, n));
        case Term::Kind::Comm: {
            std::vector<Series> parts;
            parts.reserve(t.args.size());
            for (const auto& a : t.args) parts.push_back(eval_term(*a, env, n, klass));
            return detail::commutator_series(parts);
        }
        case Term::Kind::Conj: {
            Series actor = eval_term(*t.args[0], env, n, klass);
            return actor * eval_term(*t.args[1], env, n, klass) * actor.group_inverse();
        }
        case Term::Kind::Tensor:
        case Term::Kind::Wedge:
            throw std::logic_error("tensor/wedge term reached the symbolic evaluator");
    }
    throw std::logic_error("unhandled term kind");
}

int letters_from(uint64_t mono, int deg, int gen) {
    int c = 0;
    for (int i = 0; i < deg; ++i)
        if (detail::mono_letter(mono, i) == gen) ++c;
    return c;
}

std::string mono_text(uint64_t mono, int deg, const std::vector<std::string>& gen_names) {
    std::string s;
    for (int i = 0; i < deg; ++i) {
        if (i) s += ".";
        s += gen_names.at(static_cast<size_t>(detail::mono_letter(mono, i)));
    }
    return s;
}

}  // namespace

VerificationReport verify_symbolic(const IdentityScript& id, int k, int c,
                                   std::vector<Int> n_range) {
    if (!id.pure_commutator())
        throw std::invalid_argument("verify_symbolic: script '" + id.name +
                                    "' has tensor or wedge terms; evaluate it in a group");
    if (c < 1 || c > detail::kMaxSeriesDegree)
        throw std::invalid_argument("verify_symbolic: class out of engine range");
    if (k < 1 || k > detail::kMaxSeriesRank)
        throw std::invalid_argument("verify_symbolic: rank out of engine range");

    // Reserve fresh generators per variable: one for a plain variable, two
    // for a weight-constrained one (its commutator needs a second letter).
    std::vector<VarSub> subs;
    int cursor = 0;
    for (const auto& v : id.variables) {
        VarSub s;
        s.name = v;
        s.min_weight = id.min_weight_of(v);
        s.constrained = s.min_weight > 1;
        for (const auto& wc : id.weights)
            if (wc.var == v) s.constrained = true;
        s.block = s.constrained ? 2 : 1;
        s.first_gen = cursor;
        cursor += s.block;
        subs.push_back(std::move(s));
    }
    if (cursor > k)
        throw std::invalid_argument(
            "verify_symbolic: rank " + std::to_string(k) + " is too small; " +
            std::to_string(id.variables.size()) + " variables need " + std::to_string(cursor) +
            " generators");

    for (const auto& mv : id.modsq_vars) {
        bool found = false;
        for (const auto& s : subs)
            if (s.name == mv) {
                if (s.constrained)
                    throw std::invalid_argument(
                        "verify_symbolic: modsq variable may not carry a weight constraint");
                found = true;
            }
        if (!found) throw std::invalid_argument("verify_symbolic: unknown modsq variable");
    }
    if (id.modsq_vars.size() > 1)
        throw std::invalid_argument("verify_symbolic: at most one modsq variable is supported");
    int modsq_gen = -1;
    if (!id.modsq_vars.empty())
        for (const auto& s : subs)
            if (s.name == id.modsq_vars[0]) modsq_gen = s.first_gen;

    bool wants_n = id.uses_n();
    if (n_range.empty()) {
        if (wants_n)
            for (int i = 1; i <= c + 2; ++i) n_range.push_back(i);
        else
            n_range.push_back(0);  // single pass, value unused
    }

    std::vector<std::string> gen_names(static_cast<size_t>(k));
    for (int g = 0; g < k; ++g) gen_names[static_cast<size_t>(g)] = "y" + std::to_string(g + 1);
    for (const auto& s : subs) {
        if (s.block == 1) {
            gen_names[static_cast<size_t>(s.first_gen)] = s.name;
        } else {
            gen_names[static_cast<size_t>(s.first_gen)] = s.name + "_1";
            gen_names[static_cast<size_t>(s.first_gen) + 1] = s.name + "_2";
        }
    }

    // Weight choices per variable: {t, t+1} for a constraint w(v) >= t (the
    // second sample catches weight-dependent errors), {1} otherwise.
    std::vector<std::vector<long>> choices;
    for (const auto& s : subs) {
        std::vector<long> opts{s.min_weight};
        if (s.constrained && s.min_weight + 1 <= c) opts.push_back(s.min_weight + 1);
        choices.push_back(std::move(opts));
    }

    // Extraction of differing coordinates is worthwhile only while the Hall
    // basis stays small; otherwise report raw monomial differences.
    Int basis_size = 0;
    for (int w = 1; w <= c; ++w) basis_size += witt_number(k, w);
    bool extractable = basis_size <= 20000;

    VerificationReport rep;
    rep.identity = id.name;
    rep.mode = "symbolic";

    std::vector<size_t> pick(subs.size(), 0);
    while (true) {
        std::map<std::string, Series> env;
        std::string weight_desc;
        for (size_t i = 0; i < subs.size(); ++i) {
            long w = choices[i][pick[i]];
            env.emplace(subs[i].name, detail::word_series(weight_word(subs[i], w), c));
            if (!weight_desc.empty()) weight_desc += " ";
            weight_desc += "w(" + subs[i].name + ")=" + std::to_string(w);
        }

        for (const Int& n : n_range) {
            InstanceResult inst;
            inst.description = weight_desc;
            if (wants_n) inst.description += " n=" + n.str();

            Series lhs = eval_term(*id.lhs, env, n, c);
            Series rhs = eval_term(*id.rhs, env, n, c);
            Series residual = rhs.group_inverse() * lhs;

            if (modsq_gen < 0) {
                inst.equal = residual.is_one();
            } else {
                inst.equal = true;
                for (int d = 1; d <= c && inst.equal; ++d)
                    for (const auto& [m, v] : residual.degree(d))
                        if (letters_from(m, d, modsq_gen) < 2) {
                            inst.equal = false;
                            break;
                        }
            }

            if (!inst.equal) {
                if (extractable) {
                    auto& eng = detail::engine_for(k, c);
                    NilpotentElement e = eng.from_series(residual);
                    const HallBasis& basis = eng.basis();
                    for (int b = 0; b < basis.size(); ++b) {
                        const Int& x = e.exps[static_cast<size_t>(b)];
                        if (x == 0) continue;
                        if (modsq_gen >= 0 &&
                            basis.entry(b).content[static_cast<size_t>(modsq_gen)] >= 2)
                            continue;  // inside the modulus, not a difference
                        inst.differing.push_back(basis.entry_name(b, gen_names) + "^" + x.str());
                    }
                } else {
                    for (int d = 1; d <= c && inst.differing.size() < 12; ++d)
                        for (const auto& [m, v] : residual.degree(d)) {
                            if (modsq_gen >= 0 && letters_from(m, d, modsq_gen) >= 2) continue;
                            inst.differing.push_back(mono_text(m, d, gen_names) + " coeff " +
                                                     v.str());
                            if (inst.differing.size() >= 12) break;
                        }
                }
            }
            rep.record(std::move(inst));
        }

        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
        if (pick.empty()) break;
    }
    return rep;
}

}  // namespace wedgelab
