#include "wedgelab/nu.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wedgelab {

namespace {

GroupWord shift_gens(const GroupWord& w, int by) {
    GroupWord out = w;
    for (Syllable& s : out.letters) s.gen += by;
    return out;
}

}  // namespace

NuPresentation build_nu(const Presentation& p) {
    NuPresentation out;
    out.base = p;
    out.base_gens = static_cast<int>(p.generators.size());
    const int k = out.base_gens;

    Presentation& nu = out.pres;
    nu.name = "nu_" + p.name;
    nu.prime = p.prime;
    nu.generators = p.generators;
    for (const std::string& g : p.generators) nu.generators.push_back(g + "'");

    for (const GroupWord& r : p.relators) {
        nu.relators.push_back(r);
        nu.relators.push_back(shift_gens(r, k));
    }
    for (int z = 0; z < k; ++z) {
        for (int x = 0; x < k; ++x) {
            for (int y = 0; y < k; ++y) {
                GroupWord xy = commutator(GroupWord::gen(x), GroupWord::gen(y + k));
                GroupWord rhs = commutator(conjugate(GroupWord::gen(z), GroupWord::gen(x)),
                                           conjugate(GroupWord::gen(z + k), GroupWord::gen(y + k)));
                GroupWord plain = conjugate(GroupWord::gen(z), xy) * rhs.inverse();
                GroupWord hatted = conjugate(GroupWord::gen(z + k), xy) * rhs.inverse();
                nu.relators.push_back(free_reduce(plain));
                nu.relators.push_back(free_reduce(hatted));
            }
        }
    }
    return out;
}

Elem TensorRealization::pi(Elem t) const {
    Elem acc = 0;
    for (int col : nu.path_cols(t)) {
        int g = col >> 1;
        if (g >= k) g -= k;
        acc = base.apply_gen(acc, g, (col & 1) != 0);
    }
    return acc;
}

Elem TensorRealization::tensor(Elem g, Elem h) const {
    return nu.comm(plain_of[static_cast<size_t>(g)], hat_of[static_cast<size_t>(h)]);
}

namespace {

// Evaluates a nu-word in the base group by stripping hats.
Elem eval_stripped(const RegularRep& base, int k, const GroupWord& w) {
    Elem acc = 0;
    for (const Syllable& s : w.letters) {
        int g = s.gen >= k ? s.gen - k : s.gen;
        acc = base.mul(acc, base.pow(base.generator(g), s.exp));
    }
    return acc;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("nu realization audit failed: " + what);
}

Subgroup from_elements(const RegularRep& r, std::vector<Elem> elems) {
    std::vector<char> member(static_cast<size_t>(r.order()), 0);
    for (Elem x : elems) member[static_cast<size_t>(x)] = 1;
    std::sort(elems.begin(), elems.end());
    std::vector<Elem> gens(elems.begin(), elems.end());
    std::erase(gens, 0);
    return Subgroup{std::move(elems), std::move(gens), std::move(member)};
}

}  // namespace

TensorRealization realize(const Presentation& p, const EnumLimits& limits,
                          const std::string& cache_dir, EnumStrategy strategy,
                          int64_t max_members) {
    NuPresentation schema = build_nu(p);
    const int k = schema.base_gens;

    CosetTable base_table = enumerate_cached(p, {}, limits, cache_dir, strategy);
    base_table.audit(p);
    CosetTable nu_table = enumerate_cached(schema.pres, {}, limits, cache_dir, strategy);
    nu_table.audit(schema.pres);

    RegularRep base(std::move(base_table));
    RegularRep nu(std::move(nu_table));

    // pi must kill every nu relator once hats are stripped.
    for (const GroupWord& r : schema.pres.relators) {
        require(eval_stripped(base, k, r) == 0, "pi does not vanish on a relator");
    }

    std::vector<Elem> plain_of(static_cast<size_t>(base.order()));
    std::vector<Elem> hat_of(static_cast<size_t>(base.order()));
    for (Elem g = 0; g < base.order(); ++g) {
        Elem pe = 0;
        Elem he = 0;
        for (int col : base.path_cols(g)) {
            pe = nu.apply_gen(pe, col >> 1, (col & 1) != 0);
            he = nu.apply_gen(he, (col >> 1) + k, (col & 1) != 0);
        }
        plain_of[static_cast<size_t>(g)] = pe;
        hat_of[static_cast<size_t>(g)] = he;
    }

    std::vector<Elem> tensor_seeds;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            tensor_seeds.push_back(nu.comm(nu.generator(i), nu.generator(j + k)));
        }
    }
    Subgroup T = normal_closure(nu, std::move(tensor_seeds), nu.order());

    std::vector<Elem> diag;
    for (Elem g = 0; g < base.order(); ++g) {
        diag.push_back(nu.comm(plain_of[static_cast<size_t>(g)], hat_of[static_cast<size_t>(g)]));
    }
    Subgroup nabla = subgroup_closure(nu, std::move(diag), max_members);

    TensorRealization real{std::move(schema),  std::move(base), std::move(nu), k,
                           std::move(plain_of), std::move(hat_of), std::move(T),
                           std::move(nabla),   Subgroup{},      Subgroup{}};

    std::vector<Elem> kernel;
    for (Elem t : real.T.elems) {
        if (real.pi(t) == 0) kernel.push_back(t);
    }
    real.kappa_kernel_in_T = from_elements(real.nu, std::move(kernel));
    real.derived_base = derived_subgroup(real.base, whole_group(real.base));

    // Construction audits.
    require(real.nu.order() == real.T.order() * real.base.order() * real.base.order(),
            "|nu| != |T| * |G|^2");
    require(is_subset(real.nabla, real.T), "nabla escapes T");
    require(is_normal(real.nu, real.nabla), "nabla is not normal in nu");
    require(is_subset(real.nabla, real.kappa_kernel_in_T), "nabla escapes the kappa kernel");
    {
        // pi maps T onto G' with the kappa kernel as fiber.
        std::vector<char> hit(static_cast<size_t>(real.base.order()), 0);
        int64_t image = 0;
        for (Elem t : real.T.elems) {
            Elem g = real.pi(t);
            require(real.derived_base.contains(g), "pi(T) leaves the derived subgroup");
            if (!hit[static_cast<size_t>(g)]) {
                hit[static_cast<size_t>(g)] = 1;
                ++image;
            }
        }
        require(image == real.derived_base.order(), "pi(T) is a proper subset of G'");
        require(real.T.order() == real.kappa_kernel_in_T.order() * real.derived_base.order(),
                "|T| != |ker| * |G'|");
    }
    {
        // Spot-check normality of T by random conjugation.
        std::mt19937_64 rng(0x77656467656cULL);
        for (int i = 0; i < 256; ++i) {
            Elem t = real.T.elems[static_cast<size_t>(rng() % real.T.elems.size())];
            Elem g = static_cast<Elem>(rng() % static_cast<uint64_t>(real.nu.order()));
            require(real.T.contains(real.nu.conj(g, t)), "T is not normal in nu");
        }
    }
    return real;
}

QuotientStats wedge(const TensorRealization& real) {
    return QuotientStats{real.T.order() / real.nabla.order(),
                         quotient_exponent(real.nu, real.T, real.nabla)};
}

QuotientStats multiplier(const TensorRealization& real) {
    return QuotientStats{real.kappa_kernel_in_T.order() / real.nabla.order(),
                         quotient_exponent(real.nu, real.kappa_kernel_in_T, real.nabla)};
}

Subgroup relative_tensor(const TensorRealization& real, const std::vector<GroupWord>& n_words,
                         int64_t max_members) {
    std::vector<Elem> gens;
    for (const GroupWord& w : n_words) gens.push_back(real.base.eval_word(w));
    Subgroup n_base = subgroup_closure(real.base, std::move(gens), max_members);
    return relative_tensor(real, n_base, max_members);
}

Subgroup relative_tensor(const TensorRealization& real, const Subgroup& n_base,
                         int64_t max_members) {
    if (!is_normal(real.base, n_base)) {
        throw std::invalid_argument("relative tensor needs a normal subgroup");
    }
    std::vector<Elem> seeds;
    for (Elem n : n_base.elems) {
        for (int j = 0; j < real.k; ++j) {
            seeds.push_back(real.nu.comm(real.plain_of[static_cast<size_t>(n)],
                                         real.nu.generator(j + real.k)));
        }
    }
    return normal_closure(real.nu, std::move(seeds), max_members);
}

QuotientStats relative_wedge(const TensorRealization& real, const Subgroup& n_base,
                             int64_t max_members) {
    Subgroup rel = relative_tensor(real, n_base, max_members);
    Subgroup inter = intersection(real.nu, rel, real.nabla);
    return QuotientStats{rel.order() / inter.order(), quotient_exponent(real.nu, rel, inter)};
}

namespace {

std::string describe(const TensorRealization& real, std::initializer_list<Elem> xs) {
    std::ostringstream os;
    bool first = true;
    for (Elem x : xs) {
        if (!first) os << ", ";
        first = false;
        GroupWord w = real.base.word_of(x);
        os << (w.trivial() ? std::string("1") : format_word(w, real.schema.base.generators));
    }
    return os.str();
}

}  // namespace

VerificationReport crossed_module_audit(const TensorRealization& real, int sample_size,
                                        uint64_t seed) {
    VerificationReport report;
    report.identity = "crossed-module relations";
    report.mode = "concrete";
    report.all_equal = true;

    const RegularRep& nu = real.nu;
    const int64_t n = real.base.order();
    const bool exhaustive = n <= 27;

    // Tensor table for all pairs keeps the tuple sweeps cheap.
    std::vector<Elem> tt(static_cast<size_t>(n * n));
    for (Elem g = 0; g < n; ++g) {
        for (Elem h = 0; h < n; ++h) {
            tt[static_cast<size_t>(g * n + h)] = real.tensor(g, h);
        }
    }
    auto ten = [&](Elem g, Elem h) { return tt[static_cast<size_t>(g * n + h)]; };

    std::mt19937_64 rng(seed ^ 0x63726f7373ULL);
    auto rnd = [&] { return static_cast<Elem>(rng() % static_cast<uint64_t>(n)); };

    struct Check {
        std::string name;
        int arity;
        // Returns true when the relation holds on the tuple.
        std::function<bool(Elem, Elem, Elem, Elem)> run;
    };

    const RegularRep& b = real.base;
    std::vector<Check> checks;
    checks.push_back({"inversion rule, acting copy", 2, [&](Elem g, Elem h, Elem, Elem) {
                          Elem lhs = nu.conj(real.plain_of[static_cast<size_t>(g)],
                                             ten(b.inv(g), h));
                          return lhs == nu.inv(ten(g, h));
                      }});
    checks.push_back({"inversion rule, hatted copy", 2, [&](Elem g, Elem h, Elem, Elem) {
                          Elem lhs = nu.conj(real.plain_of[static_cast<size_t>(h)],
                                             ten(g, b.inv(h)));
                          return lhs == nu.inv(ten(g, h));
                      }});
    checks.push_back({"conjugation moves both slots", 4, [&](Elem g, Elem h, Elem g1, Elem h1) {
                          Elem lhs = nu.conj(ten(g, h), ten(g1, h1));
                          Elem c = b.comm(g, h);
                          return lhs == ten(b.conj(c, g1), b.conj(c, h1));
                      }});
    checks.push_back({"commutator into first slot", 3, [&](Elem g, Elem h, Elem h1, Elem) {
                          Elem t = ten(g, h);
                          Elem rhs = nu.mul(t, nu.conj(real.plain_of[static_cast<size_t>(h1)],
                                                       nu.inv(t)));
                          return ten(b.comm(g, h), h1) == rhs;
                      }});
    checks.push_back({"commutator into second slot", 3, [&](Elem g, Elem h, Elem g1, Elem) {
                          Elem t = ten(g, h);
                          Elem rhs = nu.mul(nu.conj(real.plain_of[static_cast<size_t>(g1)], t),
                                            nu.inv(t));
                          return ten(g1, b.comm(g, h)) == rhs;
                      }});
    checks.push_back({"tensor commutator collapse", 4, [&](Elem g, Elem h, Elem g1, Elem h1) {
                          return nu.comm(ten(g, h), ten(g1, h1)) ==
                                 ten(b.comm(g, h), b.comm(g1, h1));
                      }});
    checks.push_back({"product reordering", 4, [&](Elem g1, Elem h1, Elem g2, Elem h2) {
                          Elem lhs = nu.mul(ten(g1, h1), ten(g2, h2));
                          Elem rhs = nu.mul(nu.mul(ten(b.comm(g1, h1), b.comm(g2, h2)),
                                                   ten(g2, h2)),
                                            ten(g1, h1));
                          return lhs == rhs;
                      }});

    for (const Check& ck : checks) {
        InstanceResult inst;
        int64_t checked = 0;
        bool ok = true;
        auto visit = [&](Elem a, Elem c, Elem d, Elem e) {
            if (!ok) return;
            ++checked;
            if (!ck.run(a, c, d, e)) {
                ok = false;
                inst.differing = {"tuple (" + describe(real, {a, c, d, e}) + ")"};
            }
        };
        if (exhaustive) {
            if (ck.arity == 2) {
                for (Elem x = 0; x < n; ++x)
                    for (Elem y = 0; y < n; ++y) visit(x, y, 0, 0);
            } else if (ck.arity == 3) {
                for (Elem x = 0; x < n; ++x)
                    for (Elem y = 0; y < n; ++y)
                        for (Elem z = 0; z < n; ++z) visit(x, y, z, 0);
            } else {
                for (Elem x = 0; x < n; ++x)
                    for (Elem y = 0; y < n; ++y)
                        for (Elem z = 0; z < n; ++z)
                            for (Elem w = 0; w < n; ++w) visit(x, y, z, w);
            }
        } else {
            for (int i = 0; i < sample_size; ++i) visit(rnd(), rnd(), rnd(), rnd());
        }
        inst.description = ck.name + " (" + std::to_string(checked) + " tuples)";
        inst.equal = ok;
        report.record(inst);
    }

    {
        // Peiffer identity: t t1 t^-1 = ^{pi(t)} t1 over tensor pairs.
        InstanceResult inst;
        bool ok = true;
        int64_t checked = 0;
        auto visit = [&](Elem t, Elem t1) {
            if (!ok) return;
            ++checked;
            Elem lhs = nu.conj(t, t1);
            Elem rhs = nu.conj(real.plain_of[static_cast<size_t>(real.pi(t))], t1);
            if (lhs != rhs) {
                ok = false;
                inst.differing = {"T pair (" + std::to_string(t) + ", " + std::to_string(t1) + ")"};
            }
        };
        if (static_cast<int64_t>(real.T.order()) * real.T.order() <= 600000) {
            for (Elem t : real.T.elems)
                for (Elem t1 : real.T.elems) visit(t, t1);
        } else {
            std::mt19937_64 prng(seed ^ 0x70656966666572ULL);
            for (int i = 0; i < sample_size; ++i) {
                visit(real.T.elems[prng() % real.T.elems.size()],
                      real.T.elems[prng() % real.T.elems.size()]);
            }
        }
        inst.description = "Peiffer rule (" + std::to_string(checked) + " pairs)";
        inst.equal = ok;
        report.record(inst);
    }
    {
        // G acts trivially on the multiplier kernel.
        InstanceResult inst;
        bool ok = true;
        int64_t checked = 0;
        for (Elem t : real.kappa_kernel_in_T.elems) {
            for (Elem g = 0; g < n && ok; ++g) {
                ++checked;
                if (nu.conj(real.plain_of[static_cast<size_t>(g)], t) != t) {
                    ok = false;
                    inst.differing = {"kernel element " + std::to_string(t)};
                }
            }
            if (!ok) break;
        }
        inst.description = "action on the multiplier kernel (" + std::to_string(checked) + " pairs)";
        inst.equal = ok;
        report.record(inst);
    }
    return report;
}

Presentation present_quotient(const RegularRep& base, const Presentation& p, const Subgroup& n,
                              const std::string& label) {
    if (!is_normal(base, n)) throw std::invalid_argument("quotient needs a normal subgroup");
    Presentation q = p;
    q.name = p.name + "_mod_" + label;
    for (Elem x : n.elems) {
        if (x != 0) q.relators.push_back(base.word_of(x));
    }
    return q;
}

nlohmann::ordered_json realization_record(const TensorRealization& real) {
    QuotientStats w = wedge(real);
    QuotientStats m = multiplier(real);
    nlohmann::ordered_json rec;
    rec["group"] = real.schema.base.name;
    rec["|G|"] = static_cast<int64_t>(real.base.order());
    rec["e(G)"] = real.base.exponent().convert_to<int64_t>();
    rec["|GxG|"] = static_cast<int64_t>(real.T.order());
    rec["|G^G|"] = w.order.convert_to<int64_t>();
    rec["|M|"] = m.order.convert_to<int64_t>();
    rec["e(M)"] = m.exponent.convert_to<int64_t>();
    rec["flags"] = nlohmann::ordered_json::object();
    rec["flags"]["e(GxG)"] = subgroup_exponent(real.nu, real.T).convert_to<int64_t>();
    rec["flags"]["e(G^G)"] = w.exponent.convert_to<int64_t>();
    rec["flags"]["|nabla|"] = static_cast<int64_t>(real.nabla.order());
    return rec;
}

}  // namespace wedgelab
