#include "wedgelab/concrete.hpp"

#include <random>
#include <stdexcept>

namespace wedgelab {
namespace {

// A value mid-evaluation: an element of G, or of nu(G) once a tensor or
// wedge has been formed.  Group values lift into nu via the plain copy.
struct CV {
    bool in_nu = false;
    Elem v = 0;
};

class Evaluator {
  public:
    Evaluator(const TensorRealization& real, const std::vector<std::string>& vars)
        : real_(real), vars_(vars) {}

    void bind(const std::vector<Elem>& vals, Int n) {
        vals_ = &vals;
        n_ = std::move(n);
    }

    Elem lift(const CV& x) const {
        return x.in_nu ? x.v : real_.plain_of[static_cast<size_t>(x.v)];
    }

    CV eval(const Term& t) const {
        switch (t.kind) {
            case Term::Kind::Var:
                for (size_t i = 0; i < vars_.size(); ++i)
                    if (vars_[i] == t.var) return {false, (*vals_)[i]};
                throw std::logic_error("unbound variable " + t.var);
            case Term::Kind::One:
                return {false, 0};
            case Term::Kind::Product: {
                std::vector<CV> parts;
                parts.reserve(t.args.size());
                bool nu = false;
                for (const auto& a : t.args) {
                    parts.push_back(eval(*a));
                    nu = nu || parts.back().in_nu;
                }
                if (nu) {
                    Elem acc = real_.nu.id();
                    for (const CV& p : parts) acc = real_.nu.mul(acc, lift(p));
                    return {true, acc};
                }
                Elem acc = real_.base.id();
                for (const CV& p : parts) acc = real_.base.mul(acc, p.v);
                return {false, acc};
            }
            case Term::Kind::Inverse: {
                CV a = eval(*t.args[0]);
                return {a.in_nu, a.in_nu ? real_.nu.inv(a.v) : real_.base.inv(a.v)};
            }
            case Term::Kind::Power: {
                CV a = eval(*t.args[0]);
                Int e = eval_int(*t.exp, n_);
                return {a.in_nu, a.in_nu ? real_.nu.pow(a.v, e) : real_.base.pow(a.v, e)};
            }
            case Term::Kind::Comm: {
                std::vector<CV> parts;
                parts.reserve(t.args.size());
                bool nu = false;
                for (const auto& a : t.args) {
                    parts.push_back(eval(*a));
                    nu = nu || parts.back().in_nu;
                }
                std::vector<Elem> es;
                es.reserve(parts.size());
                for (const CV& p : parts) es.push_back(nu ? lift(p) : p.v);
                return {nu, nu ? real_.nu.comm(es) : real_.base.comm(es)};
            }
            case Term::Kind::Conj: {
                CV a = eval(*t.args[0]);
                CV x = eval(*t.args[1]);
                if (a.in_nu || x.in_nu)
                    return {true, real_.nu.conj(lift(a), lift(x))};
                return {false, real_.base.conj(a.v, x.v)};
            }
            case Term::Kind::Tensor:
            case Term::Kind::Wedge: {
                CV a = eval(*t.args[0]);
                CV b = eval(*t.args[1]);
                if (a.in_nu || b.in_nu)
                    throw std::invalid_argument(
                        "tensor/wedge arguments must be group terms");
                return {true, real_.tensor(a.v, b.v)};
            }
        }
        throw std::logic_error("eval: bad term kind");
    }

  private:
    const TensorRealization& real_;
    const std::vector<std::string>& vars_;
    const std::vector<Elem>* vals_ = nullptr;
    Int n_ = 0;
};

std::string elem_name(const RegularRep& r, const Presentation& p, Elem x) {
    if (x == 0) return "1";
    return format_word(r.word_of(x), p.generators);
}

}  // namespace

ConcreteOutcome run_concrete(const ScriptSpec& spec, const TensorRealization& real,
                             const ConcreteOptions& opt) {
    ConcreteOutcome out;
    const Presentation& basep = real.schema.base;
    out.report.identity = spec.id;
    out.report.mode = "concrete";

    IdentityScript id = spec.parse();
    if (!spec.group_filter.empty() && spec.group_filter != basep.name) {
        out.reason = "pinned to group " + spec.group_filter;
        return out;
    }
    if (id.prime != 0 && id.prime != basep.prime) {
        out.reason = "needs prime " + id.prime.str();
        return out;
    }
    if (!id.modsq_vars.empty()) {
        out.reason = "modular statement, symbolic engine only";
        return out;
    }

    // One domain per variable: a pinned subgroup when declared, else the
    // lower-central term matching the weight constraint, else all of G.
    std::vector<Subgroup> lcs = lower_central_series(real.base);
    auto gamma = [&](long m) -> const Subgroup& {
        size_t i = static_cast<size_t>(m) - 1;
        return i < lcs.size() ? lcs[i] : lcs.back();
    };
    Subgroup whole = whole_group(real.base);
    std::vector<Subgroup> pinned;
    pinned.reserve(id.variables.size());  // domains point into this vector
    std::vector<const std::vector<Elem>*> domains;
    for (const std::string& v : id.variables) {
        std::string dom;
        for (const auto& [var, d] : spec.var_domains)
            if (var == v) dom = d;
        if (!dom.empty()) {
            if (dom.rfind("gen:", 0) == 0) {
                int gi = basep.gen_index(dom.substr(4));
                pinned.push_back(subgroup_closure(real.base, {real.base.generator(gi)}));
            } else if (dom.rfind("gamma:", 0) == 0) {
                pinned.push_back(gamma(std::stol(dom.substr(6))));
            } else if (dom.rfind("agemo:", 0) == 0) {
                Int q = ipow(basep.prime, Int(std::stol(dom.substr(6))));
                pinned.push_back(power_subgroup(real.base, whole, q));
            } else if (dom == "derived") {
                pinned.push_back(derived_subgroup(real.base, whole));
            } else {
                throw std::invalid_argument("unknown variable domain '" + dom + "'");
            }
            domains.push_back(&pinned.back().elems);
        } else {
            long w = id.min_weight_of(v);
            domains.push_back(w > 1 ? &gamma(w).elems : &whole.elems);
        }
    }

    // Values for n, per the script's policy.
    std::vector<Int> ns = opt.n_values;
    if (ns.empty()) {
        if (!id.uses_n()) {
            ns.push_back(0);
        } else if (spec.n_policy == "exponent_log") {
            Int p = id.prime != 0 ? id.prime : basep.prime;
            Int q = 1;
            Int e = real.base.exponent();
            long m = 0;
            while (q < e) {
                q *= p;
                ++m;
            }
            if (q != e || m == 0) {
                out.reason = "exponent is not a proper power of " + p.str();
                return out;
            }
            ns.push_back(m);
        } else {
            int64_t e = real.base.exponent().convert_to<int64_t>();
            for (int64_t i = 1; i <= e; ++i) ns.push_back(i);
        }
    }

    int64_t total = 1;
    bool overflow = false;
    for (const auto* d : domains) {
        total *= static_cast<int64_t>(d->size());
        if (total > opt.exhaustive_tuple_limit) {
            overflow = true;
            break;
        }
    }
    out.exhaustive = !overflow && real.base.order() <= opt.exhaustive_order_limit;
    out.tuples_per_n = out.exhaustive ? total : opt.samples;
    out.applicable = true;

    Evaluator ev(real, id.variables);
    std::vector<Elem> vals(id.variables.size(), 0);
    bool wedge_eq = id.has_wedge();

    for (const Int& n : ns) {
        int64_t failures = 0;
        InstanceResult inst;
        std::mt19937_64 rng(opt.seed ^ basep.hash() ^ fnv1a(spec.id));

        for (int64_t t = 0; t < out.tuples_per_n; ++t) {
            if (out.exhaustive) {
                int64_t ix = t;
                for (size_t v = 0; v < domains.size(); ++v) {
                    int64_t sz = static_cast<int64_t>(domains[v]->size());
                    vals[v] = (*domains[v])[static_cast<size_t>(ix % sz)];
                    ix /= sz;
                }
            } else {
                for (size_t v = 0; v < domains.size(); ++v) {
                    size_t sz = domains[v]->size();
                    vals[v] = (*domains[v])[rng() % sz];
                }
            }
            ev.bind(vals, n);
            CV l = ev.eval(*id.lhs);
            CV r = ev.eval(*id.rhs);
            bool equal;
            if (l.in_nu || r.in_nu) {
                Elem d = real.nu.mul(ev.lift(l), real.nu.inv(ev.lift(r)));
                equal = wedge_eq ? real.nabla.contains(d) : d == real.nu.id();
            } else {
                equal = l.v == r.v;
            }
            if (!equal) {
                ++failures;
                if (inst.differing.size() < 3) {
                    std::string w;
                    for (size_t v = 0; v < vals.size(); ++v) {
                        if (v) w += " ";
                        w += id.variables[v] + "=" + elem_name(real.base, basep, vals[v]);
                    }
                    inst.differing.push_back(w);
                }
            }
        }

        inst.description = "group=" + basep.name;
        if (id.uses_n()) inst.description += " n=" + n.str();
        inst.description += " tuples=" + std::to_string(out.tuples_per_n) +
                            (out.exhaustive ? " exhaustive" : " sampled");
        if (failures > 0)
            inst.description += " failures=" + std::to_string(failures);
        inst.equal = failures == 0;
        out.report.record(std::move(inst));
    }
    return out;
}

}  // namespace wedgelab
