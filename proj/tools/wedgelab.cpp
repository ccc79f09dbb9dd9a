// wedgelab: realize nonabelian tensor squares, exterior squares and Schur
// multipliers of small p-groups by coset enumeration, verify commutator and
// wedge identities symbolically, against a matrix oracle, and inside
// realized groups, and sweep the exponent-divisibility theorems over a
// corpus.  Human-readable tables go to stdout; --json switches every
// subcommand to machine records.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wedgelab/bounds.hpp"
#include "wedgelab/concrete.hpp"
#include "wedgelab/corpus.hpp"
#include "wedgelab/nu.hpp"
#include "wedgelab/oracle_ut.hpp"
#include "wedgelab/scripts.hpp"
#include "wedgelab/structure.hpp"
#include "wedgelab/sweep.hpp"
#include "wedgelab/symbolic.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace wedgelab;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "A..B" gives A..B inclusive; a bare "B" gives 1..B.
std::vector<Int> parse_n_range(const std::string& text) {
    if (text.empty()) return {};
    auto dots = text.find("..");
    int64_t lo = 1, hi;
    if (dots == std::string::npos) {
        hi = std::stoll(text);
    } else {
        lo = std::stoll(text.substr(0, dots));
        hi = std::stoll(text.substr(dots + 2));
    }
    if (lo < 0 || hi < lo) throw std::runtime_error("bad n range: " + text);
    std::vector<Int> out;
    for (int64_t n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

ordered_json report_to_json(const VerificationReport& rep) {
    ordered_json o;
    o["identity"] = rep.identity;
    o["mode"] = rep.mode;
    o["all_equal"] = rep.all_equal;
    o["instances"] = rep.instances.size();
    o["failures"] = rep.failure_count();
    ordered_json fails = ordered_json::array();
    for (const auto& inst : rep.instances) {
        if (inst.equal) continue;
        ordered_json f;
        f["instance"] = inst.description;
        f["differing"] = inst.differing;
        fails.push_back(std::move(f));
    }
    if (!fails.empty()) o["failing"] = std::move(fails);
    return o;
}

void print_report(const VerificationReport& rep) {
    std::cout << rep.identity << " [" << rep.mode << "]: " << rep.instances.size()
              << " instances, ";
    if (rep.all_equal) {
        std::cout << "all equal\n";
        return;
    }
    std::cout << rep.failure_count() << " failures\n";
    size_t shown = 0;
    for (const auto& inst : rep.instances) {
        if (inst.equal) continue;
        std::cout << "  FAIL " << inst.description << "\n";
        for (const auto& d : inst.differing) std::cout << "    " << d << "\n";
        if (++shown == 5) {
            std::cout << "  ...\n";
            break;
        }
    }
}

// Budget knobs shared by every subcommand that enumerates.
struct Budget {
    int64_t max_cosets = EnumLimits{}.max_cosets;
    int64_t max_subgroup = kDefaultMemberBound;
    std::string cache_dir;
    uint64_t seed = 0;

    EnumLimits limits() const {
        EnumLimits l;
        l.max_cosets = max_cosets;
        return l;
    }
    SweepOptions sweep_options() const {
        SweepOptions opt;
        opt.limits = limits();
        opt.max_members = max_subgroup;
        opt.cache_dir = cache_dir;
        opt.seed = seed;
        return opt;
    }
};

int cmd_tensor(const std::string& path, bool want_wedge, bool want_mult, bool json,
               const Budget& b) {
    Presentation p = parse_presentation(read_file(path));
    TensorRealization real = realize(p, b.limits(), b.cache_dir, EnumStrategy::HLT,
                                     b.max_subgroup);
    if (json) {
        std::cout << realization_record(real).dump(2) << "\n";
        return 0;
    }
    QuotientStats w = wedge(real);
    QuotientStats m = multiplier(real);
    std::cout << "group " << p.name << ": |G| = " << real.base.order()
              << ", |nu(G)| = " << real.nu.order() << "\n";
    std::cout << "G (x) G: order " << real.T.order() << ", exponent "
              << subgroup_exponent(real.nu, real.T) << "\n";
    if (want_wedge)
        std::cout << "G ^ G: order " << w.order << ", exponent " << w.exponent << "\n";
    if (want_mult)
        std::cout << "M(G): order " << m.order << ", exponent " << m.exponent << "\n";
    return 0;
}

int cmd_analyze(const std::string& path, bool json, const Budget& b) {
    Presentation p = parse_presentation(read_file(path));
    RegularRep rep(enumerate_cached(p, {}, b.limits(), b.cache_dir));
    StructureReport sr = analyze(rep, p.prime, b.max_subgroup);
    ConditionFlags flags = detect_conditions(rep, p.prime, sr);
    if (json) {
        std::cout << structure_record(p.name, sr, flags).dump(2) << "\n";
        return 0;
    }
    std::cout << "group " << p.name << ": |G| = " << sr.order << ", p = " << sr.prime
              << ", e(G) = " << sr.exponent << "\n";
    std::cout << "class " << sr.klass << ", derived length " << sr.derived_length
              << ", |Z(G)| = " << sr.center_order << "\n";
    auto orders = [](const std::vector<int64_t>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    std::cout << "lower central orders: " << orders(sr.lcs_orders) << "\n";
    std::cout << "agemo orders: " << orders(sr.agemo_orders) << "\n";
    std::cout << "powerful " << (flags.powerful ? "yes" : "no") << ", potent "
              << (flags.potent ? "yes" : "no") << ", regular " << tri_name(flags.regular)
              << ", p-central " << (flags.p_central ? "yes" : "no") << ", metabelian "
              << (flags.metabelian ? "yes" : "no") << "\n";
    return 0;
}

// The verify target is a .idl file when it names one on disk, otherwise a
// built-in script id.
int cmd_verify(const std::string& target, const std::string& mode, int klass, int rank,
               const std::string& n_text, const std::string& group, int tuples, bool json,
               const Budget& b) {
    const ScriptSpec* builtin = nullptr;
    std::string dsl;
    if (fs::exists(target)) {
        dsl = read_file(target);
    } else {
        builtin = script_find(target);
        if (!builtin) throw std::runtime_error("no such file or built-in script: " + target);
        dsl = builtin->dsl;
    }
    std::vector<Int> n_range = parse_n_range(n_text);
    std::vector<VerificationReport> reports;

    if (mode == "symbolic") {
        IdentityScript id = parse_identity(dsl);
        int c = klass > 0 ? klass : id.klass;
        int k = rank > 0 ? rank : symbolic_rank(id);
        reports.push_back(verify_symbolic(id, k, c, n_range));
    } else if (mode == "oracle") {
        if (builtin && !builtin->oracle_dsl.empty()) dsl = builtin->oracle_dsl;
        IdentityScript id = parse_identity(dsl);
        reports.push_back(verify_oracle(id, tuples, b.seed, n_range));
    } else if (mode == "concrete") {
        ScriptSpec spec;
        if (builtin) {
            spec = *builtin;
        } else {
            IdentityScript id = parse_identity(dsl);
            spec.id = id.name;
            spec.dsl = dsl;
            spec.concrete = true;
        }
        ConcreteOptions opt;
        opt.seed = b.seed;
        opt.n_values = n_range;
        bool ran = false;
        for (const CorpusEntry& e : builtin_corpus()) {
            if (!group.empty() && e.name != group) continue;
            if (!e.realizable) {
                if (!group.empty())
                    throw std::runtime_error("group " + e.name + " is not realizable");
                continue;
            }
            TensorRealization real = realize(e.pres, b.limits(), b.cache_dir,
                                             EnumStrategy::HLT, b.max_subgroup);
            ConcreteOutcome oc = run_concrete(spec, real, opt);
            ran = true;
            if (!oc.applicable) {
                std::cout << spec.id << " on " << e.name << ": skipped (" << oc.reason
                          << ")\n";
                continue;
            }
            VerificationReport rep = oc.report;
            rep.identity = spec.id + " on " + e.name;
            reports.push_back(std::move(rep));
        }
        if (!ran && !group.empty())
            throw std::runtime_error("no corpus group named " + group);
    } else {
        throw std::runtime_error("unknown mode: " + mode);
    }

    bool ok = true;
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reports) {
            arr.push_back(report_to_json(rep));
            ok = ok && rep.all_equal;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& rep : reports) {
            print_report(rep);
            ok = ok && rep.all_equal;
        }
    }
    return ok ? 0 : 1;
}

std::vector<CorpusEntry> load_corpus(const std::string& spec) {
    if (spec == "builtin") return builtin_corpus();
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(spec))
        if (entry.path().extension() == ".grp") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("no .grp files in " + spec);
    std::vector<CorpusEntry> out;
    for (const auto& f : files) {
        CorpusEntry e;
        e.pres = parse_presentation(read_file(f.string()));
        e.name = e.pres.name;
        e.prime = e.pres.prime;
        // Realizability is unknown for user corpora; let the sweep try and
        // fold enumeration limits into "undetermined" verdicts.
        e.realizable = true;
        out.push_back(std::move(e));
    }
    return out;
}

int cmd_sweep(const std::string& theorem, const std::string& corpus_spec, bool json,
              const Budget& b) {
    std::vector<CorpusEntry> corpus = load_corpus(corpus_spec);
    SweepOptions opt = b.sweep_options();
    std::vector<CheckResult> rows = run_sweep(theorem, corpus, opt);
    if (json) {
        std::cout << checks_to_json(rows, opt).dump(2) << "\n";
    } else {
        int64_t holds = 0, fails = 0, inap = 0, undet = 0;
        for (const auto& r : rows) {
            std::string head = r.theorem + " / " + r.group;
            if (!r.subject.empty()) head += " / " + r.subject;
            std::cout << r.verdict;
            for (size_t i = r.verdict.size(); i < 14; ++i) std::cout << ' ';
            std::cout << head << "\n";
            if (!r.witness.empty()) std::cout << "              witness: " << r.witness << "\n";
            if (!r.reason.empty()) std::cout << "              reason: " << r.reason << "\n";
            if (r.verdict == "holds") ++holds;
            else if (r.verdict == "fails") ++fails;
            else if (r.verdict == "inapplicable") ++inap;
            else ++undet;
        }
        std::cout << "summary: " << holds << " holds, " << fails << " fails, " << inap
                  << " inapplicable, " << undet << " undetermined\n";
    }
    for (const auto& r : rows)
        if (r.verdict == "fails") return 1;
    return 0;
}

int cmd_bounds(int64_t c, int64_t p, bool json) {
    if (c < 1) throw std::runtime_error("class must be at least 1");
    ordered_json o;
    o["c"] = c;
    o["ceil(c/2)"] = ellis_bound(c);
    o["2*floor(log2 c)"] = moravec_bound(c);
    if (c > 2) o["ceil(log2((c+1)/3))"] = log2_bound(c);
    if (p > 0) {
        if (p < 3 || p % 2 == 0) throw std::runtime_error("p must be an odd prime");
        o["p"] = p;
        o["floor(log_{p-1} c)+1"] = sambonet_bound(c, p);
        if (c != 1) o["ceil(log_{p-1} c)"] = logp_bound(c, p);
    }
    if (json) {
        std::cout << o.dump(2) << "\n";
        return 0;
    }
    std::cout << "exponent bound exponents for class c = " << c << "\n";
    for (auto it = o.begin(); it != o.end(); ++it) {
        if (it.key() == "c" || it.key() == "p") continue;
        std::cout << "  " << it.key() << " = " << it.value() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tensor squares, exterior squares and multiplier workbench"};
    app.require_subcommand(1);
    // Let --json and the budget flags appear after the subcommand name too.
    app.fallthrough();

    Budget budget;
    if (const char* env = std::getenv("WEDGELAB_CACHE_DIR")) budget.cache_dir = env;
    app.add_option("--max-cosets", budget.max_cosets, "coset enumeration ceiling");
    app.add_option("--max-subgroup", budget.max_subgroup, "subgroup closure ceiling");
    app.add_option("--cache-dir", budget.cache_dir,
                   "coset table cache (or env WEDGELAB_CACHE_DIR)");
    app.add_option("--seed", budget.seed, "seed for sampled verification");

    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    auto* tensor = app.add_subcommand("tensor", "realize G (x) G for a presented group");
    std::string tensor_path;
    bool want_wedge = false, want_mult = false;
    tensor->add_option("file", tensor_path, "presentation file (.grp)")->required();
    tensor->add_flag("--wedge", want_wedge, "also print G ^ G");
    tensor->add_flag("--multiplier", want_mult, "also print M(G)");

    auto* verify = app.add_subcommand("verify", "check an identity script");
    std::string verify_target, verify_mode, verify_n, verify_group;
    int verify_class = 0, verify_rank = 0, verify_tuples = 100;
    verify->add_option("script", verify_target, "identity file (.idl) or built-in id")
        ->required();
    verify->add_option("--mode", verify_mode, "symbolic | concrete | oracle")->required();
    verify->add_option("--class", verify_class, "nilpotency class override (symbolic)");
    verify->add_option("--rank", verify_rank, "free generator count override (symbolic)");
    verify->add_option("--n", verify_n, "n values, as A..B or a single upper bound");
    verify->add_option("--group", verify_group, "corpus group for concrete mode");
    verify->add_option("--tuples", verify_tuples, "sample count for oracle mode");

    auto* sweep = app.add_subcommand("sweep", "run theorem checks over a corpus");
    std::string sweep_theorem = "all", sweep_corpus = "builtin";
    {
        std::string ids = "all";
        for (const auto& id : sweep_ids()) ids += " | " + id;
        sweep->add_option("--theorem", sweep_theorem, ids);
    }
    sweep->add_option("--corpus", sweep_corpus, "builtin or a directory of .grp files");

    auto* bounds = app.add_subcommand("bounds", "exponent bounds for a nilpotency class");
    int64_t bounds_c = 0, bounds_p = 0;
    bounds->add_option("--c", bounds_c, "nilpotency class")->required();
    bounds->add_option("--p", bounds_p, "odd prime for the log_{p-1} bounds");

    auto* table1 = app.add_subcommand("table1", "class-driven bound comparison table");
    auto* table2 = app.add_subcommand("table2", "prime-driven bound comparison table");

    auto* analyze_cmd = app.add_subcommand("analyze", "structure report for a presented group");
    std::string analyze_path;
    analyze_cmd->add_option("file", analyze_path, "presentation file (.grp)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tensor) return cmd_tensor(tensor_path, want_wedge, want_mult, json, budget);
        if (*verify)
            return cmd_verify(verify_target, verify_mode, verify_class, verify_rank, verify_n,
                              verify_group, verify_tuples, json, budget);
        if (*sweep) return cmd_sweep(sweep_theorem, sweep_corpus, json, budget);
        if (*bounds) return cmd_bounds(bounds_c, bounds_p, json);
        if (*table1) {
            std::cout << emit_table1();
            return 0;
        }
        if (*table2) {
            std::cout << emit_table2();
            return 0;
        }
        if (*analyze_cmd) return cmd_analyze(analyze_path, json, budget);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
