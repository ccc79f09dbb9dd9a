#include "wedgelab/sweep.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "wedgelab/bounds.hpp"
#include "wedgelab/nu.hpp"
#include "wedgelab/smith.hpp"
#include "wedgelab/structure.hpp"
#include "wedgelab/words.hpp"

namespace wedgelab {

namespace {

using nlohmann::ordered_json;

int64_t small(const Int& v) { return v.convert_to<int64_t>(); }

// a | b, with 0 never dividing anything.
bool divides(const Int& a, const Int& b) { return a != 0 && b % a == 0; }

Int int_pow(const Int& b, int64_t n) {
    Int r = 1;
    for (; n > 0; --n) r *= b;
    return r;
}

// Per-entry working state shared by every theorem that runs over the same
// group.  The base group and its flags are cheap and built up front; the
// nu-realization is attempted at most once, on first demand.
struct GroupCtx {
    const CorpusEntry* entry;
    RegularRep base;
    StructureReport rep;
    ConditionFlags flags;
    std::optional<AbelianSquares> ab;  // Smith oracle, set for abelian entries

    bool realize_tried = false;
    std::string realize_failure;  // resource name when the attempt hit a limit
    std::optional<TensorRealization> real;
    QuotientStats wstats{1, 1};
    QuotientStats mstats{1, 1};
    Int tensor_exp = 1;

    std::vector<Subgroup> normals;
    bool normals_built = false;

    GroupCtx(const CorpusEntry& e, const SweepOptions& opt)
        : entry(&e), base(enumerate_cached(e.pres, {}, opt.limits, opt.cache_dir)) {
        rep = analyze(base, e.prime, opt.max_members);
        flags = detect_conditions(base, e.prime, rep);
        if (rep.klass <= 1) ab = abelian_squares(abelianization(e.pres));
    }
};

void ensure_real(GroupCtx& ctx, const SweepOptions& opt) {
    if (ctx.realize_tried) return;
    ctx.realize_tried = true;
    if (!ctx.entry->realizable) {
        // The corpus gate is the coset budget: |nu(G)| = |G(x)G| * |G|^2
        // would overrun max_cosets, so the enumeration is never started.
        ctx.realize_failure = "cosets";
        return;
    }
    try {
        ctx.real = realize(ctx.entry->pres, opt.limits, opt.cache_dir, EnumStrategy::HLT,
                           opt.max_members);
        ctx.wstats = wedge(*ctx.real);
        ctx.mstats = multiplier(*ctx.real);
        ctx.tensor_exp = subgroup_exponent(ctx.real->nu, ctx.real->T);
    } catch (const LimitExceeded& ex) {
        ctx.real.reset();
        ctx.realize_failure = ex.resource();
    }
}

std::string budget_reason(const GroupCtx& ctx, const SweepOptions& opt) {
    if (ctx.realize_failure == "members")
        return "nu(G) out of budget: closure hit max_members=" + std::to_string(opt.max_members);
    if (ctx.realize_failure == "time")
        return "nu(G) out of budget: enumeration hit the max_seconds limit";
    return "nu(G) out of budget: enumeration needs more than max_cosets=" +
           std::to_string(opt.limits.max_cosets) + " cosets";
}

// e(G^G) from the realization, or from the Smith oracle for abelian entries.
bool wedge_exponent(GroupCtx& ctx, const SweepOptions& opt, Int& out, std::string& source) {
    ensure_real(ctx, opt);
    if (ctx.real) {
        out = ctx.wstats.exponent;
        source = "nu";
        return true;
    }
    if (ctx.ab) {
        out = ctx.ab->wedge.exponent();
        source = "smith";
        return true;
    }
    return false;
}

// e(M(G)); for abelian A the multiplier is Lambda^2 A, the same invariants
// the wedge oracle produces.
bool multiplier_exponent(GroupCtx& ctx, const SweepOptions& opt, Int& out, std::string& source) {
    ensure_real(ctx, opt);
    if (ctx.real) {
        out = ctx.mstats.exponent;
        source = "nu";
        return true;
    }
    if (ctx.ab) {
        out = ctx.ab->wedge.exponent();
        source = "smith";
        return true;
    }
    return false;
}

bool tensor_exponent_of(GroupCtx& ctx, const SweepOptions& opt, Int& out, std::string& source) {
    ensure_real(ctx, opt);
    if (ctx.real) {
        out = ctx.tensor_exp;
        source = "nu";
        return true;
    }
    if (ctx.ab) {
        out = ctx.ab->tensor.exponent();
        source = "smith";
        return true;
    }
    return false;
}

// Candidate normal subgroups: every distinct cyclic subgroup, then the joins
// of one seed generator per distinct cyclic subgroup.  That covers every
// normal subgroup that needs at most two generators, which is all the
// theorems sample at desk scale, without walking the full subgroup lattice.
const std::vector<Subgroup>& normal_candidates(GroupCtx& ctx, const SweepOptions& opt) {
    if (ctx.normals_built) return ctx.normals;
    ctx.normals_built = true;
    const RegularRep& r = ctx.base;
    std::vector<Subgroup> subs;
    std::vector<Elem> seeds;
    auto seen = [&subs](const Subgroup& s) {
        for (const auto& t : subs)
            if (t.elems == s.elems) return true;
        return false;
    };
    for (Elem x = 1; x < r.order(); ++x) {
        Subgroup s = subgroup_closure(r, {x}, opt.max_members);
        if (!seen(s)) {
            seeds.push_back(x);
            subs.push_back(std::move(s));
        }
    }
    size_t distinct_cyclic = seeds.size();
    for (size_t i = 0; i < distinct_cyclic; ++i)
        for (size_t j = i + 1; j < distinct_cyclic; ++j) {
            Subgroup s = subgroup_closure(r, {seeds[i], seeds[j]}, opt.max_members);
            if (!seen(s)) subs.push_back(std::move(s));
        }
    for (auto& s : subs)
        if (is_normal(r, s)) ctx.normals.push_back(std::move(s));
    std::stable_sort(ctx.normals.begin(), ctx.normals.end(),
                     [](const Subgroup& a, const Subgroup& b) {
                         if (a.order() != b.order()) return a.order() < b.order();
                         return a.elems < b.elems;
                     });
    return ctx.normals;
}

std::string subgroup_label(const GroupCtx& ctx, const Subgroup& s) {
    std::string out = "N = <";
    for (size_t i = 0; i < s.gens.size(); ++i) {
        if (i) out += ", ";
        out += format_word(ctx.base.word_of(s.gens[i]), ctx.entry->pres.generators);
    }
    out += ">, |N| = " + std::to_string(s.order());
    return out;
}

std::string elem_name(const RegularRep& r, const std::vector<std::string>& names, Elem x) {
    return format_word(r.word_of(x), names);
}

CheckResult new_row(const char* theorem, const GroupCtx& ctx) {
    CheckResult r;
    r.theorem = theorem;
    r.group = ctx.entry->name;
    r.hypotheses["p"] = small(ctx.rep.prime);
    r.hypotheses["class"] = ctx.rep.klass;
    r.hypotheses["e(G)"] = small(ctx.rep.exponent);
    return r;
}

void mark_inapplicable(CheckResult& r, const std::string& reason) {
    r.verdict = "inapplicable";
    r.reason = reason;
}

void mark_undetermined(CheckResult& r, const std::string& reason) {
    r.verdict = "undetermined";
    r.reason = reason;
}

void conclude_divides(CheckResult& r, const std::string& what, const Int& value,
                      const Int& bound) {
    if (divides(value, bound)) {
        r.verdict = "holds";
    } else {
        r.verdict = "fails";
        r.witness = what + " = " + value.str() + " does not divide " + bound.str();
    }
}

// e(M(G)) | e(G) for odd p up to class 5.
void sweep_schur_class5(GroupCtx& ctx, const SweepOptions& opt, std::vector<CheckResult>& out) {
    CheckResult r = new_row("schur_class5", ctx);
    if (ctx.rep.prime == 2) {
        mark_inapplicable(r, "needs odd p");
    } else if (ctx.rep.klass > 5) {
        mark_inapplicable(r, "needs class <= 5");
    } else {
        Int em;
        std::string src;
        if (!multiplier_exponent(ctx, opt, em, src)) {
            mark_undetermined(r, budget_reason(ctx, opt));
        } else {
            r.measured["e(M(G))"] = small(em);
            r.measured["source"] = src;
            conclude_divides(r, "e(M(G))", em, ctx.rep.exponent);
        }
    }
    out.push_back(std::move(r));
}

// e(N^G) | e(N) for powerful normal N inside an odd-p group, where N^G is
// the image of the relative exterior square in G^G.
void sweep_powerful_relative(GroupCtx& ctx, const SweepOptions& opt,
                             std::vector<CheckResult>& out) {
    if (ctx.rep.prime == 2) {
        CheckResult r = new_row("powerful_relative", ctx);
        mark_inapplicable(r, "needs odd p");
        out.push_back(std::move(r));
        return;
    }
    ensure_real(ctx, opt);
    if (!ctx.real) {
        CheckResult r = new_row("powerful_relative", ctx);
        r.subject = "all powerful normal subgroups";
        mark_undetermined(r, budget_reason(ctx, opt));
        out.push_back(std::move(r));
        return;
    }
    size_t before = out.size();
    for (const Subgroup& n : normal_candidates(ctx, opt)) {
        if (n.is_trivial()) continue;
        if (!subgroup_is_powerful(ctx.base, n, ctx.rep.prime, opt.max_members)) continue;
        CheckResult r = new_row("powerful_relative", ctx);
        r.subject = subgroup_label(ctx, n);
        Int en = subgroup_exponent(ctx.base, n);
        r.hypotheses["|N|"] = n.order();
        r.hypotheses["e(N)"] = small(en);
        r.hypotheses["N powerful"] = true;
        QuotientStats rw = relative_wedge(*ctx.real, n, opt.max_members);
        r.measured["|N^G|"] = small(rw.order);
        r.measured["e(N^G)"] = small(rw.exponent);
        conclude_divides(r, "e(N^G)", rw.exponent, en);
        out.push_back(std::move(r));
    }
    if (out.size() == before) {
        CheckResult r = new_row("powerful_relative", ctx);
        mark_inapplicable(r, "no powerful normal subgroups found");
        out.push_back(std::move(r));
    }
}

// e(G^G) | e(G) whenever the class stays below the odd prime.
void sweep_class_le_pm1(GroupCtx& ctx, const SweepOptions& opt, std::vector<CheckResult>& out) {
    CheckResult r = new_row("class_le_pm1", ctx);
    if (ctx.rep.prime == 2) {
        mark_inapplicable(r, "needs odd p");
    } else if (Int(ctx.rep.klass) > ctx.rep.prime - 1) {
        mark_inapplicable(r, "needs class <= p-1");
    } else {
        Int ew;
        std::string src;
        if (!wedge_exponent(ctx, opt, ew, src)) {
            mark_undetermined(r, budget_reason(ctx, opt));
        } else {
            r.measured["e(G^G)"] = small(ew);
            r.measured["source"] = src;
            conclude_divides(r, "e(G^G)", ew, ctx.rep.exponent);
        }
    }
    out.push_back(std::move(r));
}

// e(G^G) | e(G) for odd-p groups with gamma_m <= G^p for some m <= p-1, or
// with gamma_p <= G^{p^2}.
void sweep_conditions12(GroupCtx& ctx, const SweepOptions& opt, std::vector<CheckResult>& out) {
    CheckResult r = new_row("conditions12", ctx);
    if (ctx.rep.prime == 2) {
        mark_inapplicable(r, "needs odd p");
        out.push_back(std::move(r));
        return;
    }
    bool c1 = ctx.flags.condition1_any();
    bool c2 = ctx.flags.condition2;
    r.hypotheses["condition1"] = c1;
    r.hypotheses["condition2"] = c2;
    if (!c1 && !c2) {
        mark_inapplicable(r, "satisfies neither condition");
    } else {
        Int ew;
        std::string src;
        if (!wedge_exponent(ctx, opt, ew, src)) {
            mark_undetermined(r, budget_reason(ctx, opt));
        } else {
            r.measured["e(G^G)"] = small(ew);
            r.measured["source"] = src;
            conclude_divides(r, "e(G^G)", ew, ctx.rep.exponent);
        }
    }
    out.push_back(std::move(r));
}

// e(G^G) | e(G) on the regular members of the corpus; the general statement
// reduces regular p-groups to the exponent-p case, so any regular
// counterexample would have to show up here.
void sweep_regular_reduction(GroupCtx& ctx, const SweepOptions& opt,
                             std::vector<CheckResult>& out) {
    CheckResult r = new_row("regular_reduction", ctx);
    if (ctx.rep.prime == 2) {
        mark_inapplicable(r, "needs odd p");
        out.push_back(std::move(r));
        return;
    }
    r.hypotheses["regular"] = tri_name(ctx.flags.regular);
    if (ctx.flags.regular == Tri::undetermined) {
        mark_undetermined(r, "regularity pair test skipped past regular_pair_bound=243");
    } else if (ctx.flags.regular == Tri::no) {
        mark_inapplicable(r, "not regular");
    } else {
        Int ew;
        std::string src;
        if (!wedge_exponent(ctx, opt, ew, src)) {
            mark_undetermined(r, budget_reason(ctx, opt));
        } else {
            r.measured["e(G^G)"] = small(ew);
            r.measured["source"] = src;
            conclude_divides(r, "e(G^G)", ew, ctx.rep.exponent);
        }
    }
    out.push_back(std::move(r));
}

// For 3-groups of class <= 5 with e(G) = 3^n, the image of G^3 ^ G inside
// G^G has exponent dividing 3^{n-1}.
void sweep_image_exponent_3group(GroupCtx& ctx, const SweepOptions& opt,
                                 std::vector<CheckResult>& out) {
    CheckResult r = new_row("image_exponent_3group", ctx);
    if (ctx.rep.prime != 3) {
        mark_inapplicable(r, "needs p = 3");
        out.push_back(std::move(r));
        return;
    }
    if (ctx.rep.klass > 5) {
        mark_inapplicable(r, "needs class <= 5");
        out.push_back(std::move(r));
        return;
    }
    int64_t n = floor_log(3, small(ctx.rep.exponent));
    Int bound = int_pow(3, n - 1);
    r.hypotheses["n"] = n;
    const Subgroup& cube = ctx.rep.agemo_at(1);
    r.hypotheses["|G^3|"] = cube.order();
    if (cube.is_trivial()) {
        // Nothing to map: the image is trivial and the bound is automatic.
        r.measured["e(im(G^3 ^ G))"] = 1;
        r.verdict = "holds";
        out.push_back(std::move(r));
        return;
    }
    ensure_real(ctx, opt);
    if (!ctx.real) {
        mark_undetermined(r, budget_reason(ctx, opt));
    } else {
        QuotientStats rw = relative_wedge(*ctx.real, cube, opt.max_members);
        r.measured["|im(G^3 ^ G)|"] = small(rw.order);
        r.measured["e(im(G^3 ^ G))"] = small(rw.exponent);
        conclude_divides(r, "e(im(G^3 ^ G))", rw.exponent, bound);
    }
    out.push_back(std::move(r));
}

// e([N, G-hat]) | e(N) for abelian normal N, with an extra factor 2 when
// |G| is even: the derived-length-1 case of the relative solvable bound.
void sweep_abelian_tensor(GroupCtx& ctx, const SweepOptions& opt,
                          std::vector<CheckResult>& out) {
    ensure_real(ctx, opt);
    if (!ctx.real) {
        CheckResult r = new_row("abelian_tensor", ctx);
        r.subject = "all abelian normal subgroups";
        mark_undetermined(r, budget_reason(ctx, opt));
        out.push_back(std::move(r));
        return;
    }
    bool even = ctx.rep.prime == 2;
    size_t before = out.size();
    for (const Subgroup& n : normal_candidates(ctx, opt)) {
        if (n.is_trivial()) continue;
        if (!derived_subgroup(ctx.base, n, opt.max_members).is_trivial()) continue;
        CheckResult r = new_row("abelian_tensor", ctx);
        r.subject = subgroup_label(ctx, n);
        Int en = subgroup_exponent(ctx.base, n);
        r.hypotheses["|N|"] = n.order();
        r.hypotheses["e(N)"] = small(en);
        r.hypotheses["N abelian"] = true;
        r.hypotheses["|G| even"] = even;
        Subgroup rt = relative_tensor(*ctx.real, n, opt.max_members);
        Int ert = subgroup_exponent(ctx.real->nu, rt);
        r.measured["|[N, G-hat]|"] = rt.order();
        r.measured["e([N, G-hat])"] = small(ert);
        conclude_divides(r, "e([N, G-hat])", ert, even ? Int(2 * en) : en);
        out.push_back(std::move(r));
    }
    if (out.size() == before) {
        CheckResult r = new_row("abelian_tensor", ctx);
        mark_inapplicable(r, "no abelian normal subgroups found");
        out.push_back(std::move(r));
    }
}

// At m = ceil(c/2) the image of gamma_m (x) G inside G (x) G is abelian,
// and for odd order every x (x) g with x in gamma_m has order dividing
// e(gamma_m).
void sweep_gamma_image_abelian(GroupCtx& ctx, const SweepOptions& opt,
                               std::vector<CheckResult>& out) {
    CheckResult r = new_row("gamma_image_abelian", ctx);
    if (ctx.base.order() == 1) {
        mark_inapplicable(r, "trivial group");
        out.push_back(std::move(r));
        return;
    }
    int m = std::max(1, (ctx.rep.klass + 1) / 2);
    const Subgroup& gm = ctx.rep.gamma(m);
    Int egm = subgroup_exponent(ctx.base, gm);
    bool odd = ctx.rep.prime != 2;
    r.hypotheses["m"] = m;
    r.hypotheses["|gamma_m|"] = gm.order();
    r.hypotheses["e(gamma_m)"] = small(egm);
    r.hypotheses["odd order"] = odd;
    ensure_real(ctx, opt);
    if (!ctx.real) {
        if (ctx.ab) {
            // Abelian entry: m = 1, so the image is all of A (x) A, which
            // the Smith oracle describes directly.  A (x) A is abelian and
            // its exponent equals e(A), so the per-element bound follows.
            Int et = ctx.ab->tensor.exponent();
            r.measured["image abelian"] = true;
            r.measured["e(G (x) G)"] = small(et);
            r.measured["source"] = "smith";
            conclude_divides(r, "e(G (x) G)", et, egm);
        } else {
            mark_undetermined(r, budget_reason(ctx, opt));
        }
        out.push_back(std::move(r));
        return;
    }
    const RegularRep& nu = ctx.real->nu;
    Subgroup image = relative_tensor(*ctx.real, gm, opt.max_members);
    r.measured["|image|"] = image.order();
    bool abelian = true;
    for (size_t i = 0; i < image.elems.size() && abelian; ++i)
        for (size_t j = i + 1; j < image.elems.size(); ++j)
            if (nu.comm(image.elems[i], image.elems[j]) != nu.id()) {
                abelian = false;
                r.witness = "noncommuting pair in the image: " +
                            elem_name(nu, ctx.real->schema.pres.generators, image.elems[i]) +
                            " and " +
                            elem_name(nu, ctx.real->schema.pres.generators, image.elems[j]);
                break;
            }
    r.measured["image abelian"] = abelian;
    bool elementwise = true;
    if (odd) {
        int64_t worst = 1;
        for (Elem x : gm.elems) {
            for (Elem g = 0; g < ctx.base.order() && elementwise; ++g) {
                int64_t o = nu.order_of(ctx.real->tensor(x, g));
                worst = std::max(worst, o);
                if (!divides(Int(o), egm)) {
                    elementwise = false;
                    r.witness = "order of x (x) g is " + std::to_string(o) + " for x = " +
                                elem_name(ctx.base, ctx.entry->pres.generators, x) + ", g = " +
                                elem_name(ctx.base, ctx.entry->pres.generators, g);
                }
            }
            if (!elementwise) break;
        }
        r.measured["max order(x (x) g)"] = worst;
    }
    r.verdict = (abelian && elementwise) ? "holds" : "fails";
    out.push_back(std::move(r));
}

// e(G^G) | e(G) for p-central metabelian groups; no oddness needed.
void sweep_pcentral_metabelian(GroupCtx& ctx, const SweepOptions& opt,
                               std::vector<CheckResult>& out) {
    CheckResult r = new_row("pcentral_metabelian", ctx);
    r.hypotheses["p-central"] = ctx.flags.p_central;
    r.hypotheses["metabelian"] = ctx.flags.metabelian;
    if (!ctx.flags.p_central || !ctx.flags.metabelian) {
        mark_inapplicable(r, "needs a p-central metabelian group");
    } else {
        Int ew;
        std::string src;
        if (!wedge_exponent(ctx, opt, ew, src)) {
            mark_undetermined(r, budget_reason(ctx, opt));
        } else {
            r.measured["e(G^G)"] = small(ew);
            r.measured["source"] = src;
            conclude_divides(r, "e(G^G)", ew, ctx.rep.exponent);
        }
    }
    out.push_back(std::move(r));
}

// The class- and derived-length-driven exponent bounds, one sub-row each.
void sweep_bound_checks(GroupCtx& ctx, const SweepOptions& opt, std::vector<CheckResult>& out) {
    const Int& p = ctx.rep.prime;
    int c = ctx.rep.klass;
    const Int& eg = ctx.rep.exponent;

    {
        // Odd exponent, class above 2: e(G^G) | e(G)^n at n = ceil(log2((c+1)/3)).
        CheckResult r = new_row("bound_checks", ctx);
        r.subject = "class_log2";
        if (p == 2) {
            mark_inapplicable(r, "needs odd exponent");
        } else if (c <= 2) {
            mark_inapplicable(r, "needs class > 2");
        } else {
            int64_t n = log2_bound(c);
            r.hypotheses["n"] = n;
            Int ew;
            std::string src;
            if (!wedge_exponent(ctx, opt, ew, src)) {
                mark_undetermined(r, budget_reason(ctx, opt));
            } else {
                r.measured["e(G^G)"] = small(ew);
                r.measured["source"] = src;
                conclude_divides(r, "e(G^G)", ew, int_pow(eg, n));
            }
        }
        out.push_back(std::move(r));
    }
    {
        // Odd p, nonabelian: e(G^G) | e(G)^n at n = ceil(log_{p-1} c).
        CheckResult r = new_row("bound_checks", ctx);
        r.subject = "class_logp";
        if (p == 2) {
            mark_inapplicable(r, "needs odd p");
        } else if (c < 2) {
            mark_inapplicable(r, "needs class >= 2");
        } else {
            int64_t n = logp_bound(c, small(p));
            r.hypotheses["n"] = n;
            Int ew;
            std::string src;
            if (!wedge_exponent(ctx, opt, ew, src)) {
                mark_undetermined(r, budget_reason(ctx, opt));
            } else {
                r.measured["e(G^G)"] = small(ew);
                r.measured["source"] = src;
                conclude_divides(r, "e(G^G)", ew, int_pow(eg, n));
            }
        }
        out.push_back(std::move(r));
    }
    {
        // Derived length d: e(G (x) G) | e(G)^d, times 2^{d-1} for even order.
        CheckResult r = new_row("bound_checks", ctx);
        r.subject = "solvable_tensor";
        int d = ctx.rep.derived_length;
        bool even = p == 2;
        r.hypotheses["derived length"] = d;
        r.hypotheses["|G| even"] = even;
        Int et;
        std::string src;
        if (d < 1) {
            mark_inapplicable(r, "trivial group");
        } else if (!tensor_exponent_of(ctx, opt, et, src)) {
            mark_undetermined(r, budget_reason(ctx, opt));
        } else {
            r.measured["e(G (x) G)"] = small(et);
            r.measured["source"] = src;
            conclude_divides(r, "e(G (x) G)", et, solvable_tensor_bound(eg, d, even));
        }
        out.push_back(std::move(r));
    }
    {
        // Odd p with m = ceil(c/2) <= p: e(M(G)) | e(gamma_m) e(G/gamma_m).
        CheckResult r = new_row("bound_checks", ctx);
        r.subject = "half_class_multiplier";
        int m = std::max(1, (c + 1) / 2);
        if (p == 2) {
            mark_inapplicable(r, "needs odd p");
        } else if (Int(m) > p) {
            mark_inapplicable(r, "needs ceil(c/2) <= p");
        } else {
            const Subgroup& gm = ctx.rep.gamma(m);
            Int egm = subgroup_exponent(ctx.base, gm);
            Int eq = quotient_exponent(ctx.base, whole_group(ctx.base), gm);
            r.hypotheses["m"] = m;
            r.hypotheses["e(gamma_m)"] = small(egm);
            r.hypotheses["e(G/gamma_m)"] = small(eq);
            Int em;
            std::string src;
            if (!multiplier_exponent(ctx, opt, em, src)) {
                mark_undetermined(r, budget_reason(ctx, opt));
            } else {
                r.measured["e(M(G))"] = small(em);
                r.measured["source"] = src;
                conclude_divides(r, "e(M(G))", em, egm * eq);
            }
        }
        out.push_back(std::move(r));
    }
    {
        // N = G^p in the sequence N^G -> G^G -> G/N ^ G/N -> 1 bounds
        // e(G^G) by e(im(N^G)) e(G/N ^ G/N).
        CheckResult r = new_row("bound_checks", ctx);
        r.subject = "mod_p_exact_sequence";
        const Subgroup& n = ctx.rep.agemo_at(1);
        r.hypotheses["|G^p|"] = n.order();
        Int ew;
        std::string src;
        if (!wedge_exponent(ctx, opt, ew, src)) {
            mark_undetermined(r, budget_reason(ctx, opt));
        } else if (n.is_trivial()) {
            // G/G^p = G, so the sequence says nothing beyond e(G^G) itself.
            r.measured["e(G^G)"] = small(ew);
            r.measured["source"] = src;
            r.verdict = "holds";
        } else if (!ctx.real) {
            mark_undetermined(r, budget_reason(ctx, opt));
        } else {
            Int a = relative_wedge(*ctx.real, n, opt.max_members).exponent;
            Presentation q = present_quotient(ctx.base, ctx.entry->pres, n,
                                              ctx.entry->name + "_mod_" + p.str());
            try {
                TensorRealization qr =
                    realize(q, opt.limits, opt.cache_dir, EnumStrategy::HLT, opt.max_members);
                Int eq = wedge(qr).exponent;
                r.measured["e(G^G)"] = small(ew);
                r.measured["e(im(G^p ^ G))"] = small(a);
                r.measured["e(G/G^p ^ G/G^p)"] = small(eq);
                conclude_divides(r, "e(G^G)", ew, a * eq);
            } catch (const LimitExceeded& ex) {
                mark_undetermined(r, "nu(G/G^p) out of budget: enumeration hit the " +
                                         ex.resource() + " limit");
            }
        }
        out.push_back(std::move(r));
    }
}

using SweepFn = void (*)(GroupCtx&, const SweepOptions&, std::vector<CheckResult>&);

const std::vector<std::pair<std::string, SweepFn>>& sweep_table() {
    static const std::vector<std::pair<std::string, SweepFn>> table = {
        {"schur_class5", sweep_schur_class5},
        {"powerful_relative", sweep_powerful_relative},
        {"class_le_pm1", sweep_class_le_pm1},
        {"conditions12", sweep_conditions12},
        {"regular_reduction", sweep_regular_reduction},
        {"image_exponent_3group", sweep_image_exponent_3group},
        {"abelian_tensor", sweep_abelian_tensor},
        {"gamma_image_abelian", sweep_gamma_image_abelian},
        {"pcentral_metabelian", sweep_pcentral_metabelian},
        {"bound_checks", sweep_bound_checks},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& sweep_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : sweep_table()) v.push_back(name);
        return v;
    }();
    return ids;
}

std::vector<CheckResult> run_sweep(const std::string& theorem,
                                   const std::vector<CorpusEntry>& corpus,
                                   const SweepOptions& opt) {
    std::vector<const std::pair<std::string, SweepFn>*> selected;
    for (const auto& item : sweep_table())
        if (theorem == "all" || theorem == item.first) selected.push_back(&item);
    if (selected.empty()) throw std::invalid_argument("unknown sweep id: " + theorem);

    std::vector<GroupCtx> ctxs;
    ctxs.reserve(corpus.size());
    for (const CorpusEntry& e : corpus) ctxs.emplace_back(e, opt);

    std::vector<CheckResult> rows;
    for (const auto* item : selected)
        for (GroupCtx& ctx : ctxs) item->second(ctx, opt, rows);
    return rows;
}

nlohmann::ordered_json checks_to_json(const std::vector<CheckResult>& rows,
                                      const SweepOptions& opt) {
    ordered_json doc;
    doc["schema"] = "wedgelab.sweep/1";
    doc["seed"] = opt.seed;
    doc["max_cosets"] = opt.limits.max_cosets;
    int64_t holds = 0, fails = 0, inapplicable = 0, undetermined = 0;
    ordered_json arr = ordered_json::array();
    for (const CheckResult& row : rows) {
        ordered_json o;
        o["theorem"] = row.theorem;
        o["group"] = row.group;
        if (!row.subject.empty()) o["subject"] = row.subject;
        o["hypotheses"] = row.hypotheses;
        if (!row.measured.is_null()) o["measured"] = row.measured;
        o["verdict"] = row.verdict;
        if (!row.witness.empty()) o["witness"] = row.witness;
        if (!row.reason.empty()) o["reason"] = row.reason;
        if (row.verdict == "holds") ++holds;
        else if (row.verdict == "fails") ++fails;
        else if (row.verdict == "inapplicable") ++inapplicable;
        else ++undetermined;
        arr.push_back(std::move(o));
    }
    doc["checks"] = std::move(arr);
    doc["summary"] = {{"holds", holds},
                      {"fails", fails},
                      {"inapplicable", inapplicable},
                      {"undetermined", undetermined}};
    return doc;
}

}  // namespace wedgelab
