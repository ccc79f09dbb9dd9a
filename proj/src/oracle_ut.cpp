#include "wedgelab/oracle_ut.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace wedgelab {

namespace {
constexpr int kMod = 9;
}

UTMatrix::UTMatrix() {
    a_.fill(0);
    for (int i = 0; i < 6; ++i) a_[static_cast<size_t>(7 * i)] = 1;
}

UTMatrix UTMatrix::random(std::mt19937_64& rng) {
    UTMatrix m;
    for (int r = 0; r < 6; ++r)
        for (int c = r + 1; c < 6; ++c)
            m.a_[static_cast<size_t>(6 * r + c)] = static_cast<int>(rng() % kMod);
    return m;
}

UTMatrix UTMatrix::operator*(const UTMatrix& o) const {
    UTMatrix r;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            int s = 0;
            for (int t = i; t <= j; ++t)
                s += a_[static_cast<size_t>(6 * i + t)] * o.a_[static_cast<size_t>(6 * t + j)];
            r.a_[static_cast<size_t>(6 * i + j)] = s % kMod;
        }
    return r;
}

UTMatrix UTMatrix::inverse() const {
    // A = I + N with N strictly upper, so N^6 = 0 and
    // A^{-1} = I - N + N^2 - N^3 + N^4 - N^5.
    UTMatrix n = *this;
    for (int i = 0; i < 6; ++i) n.a_[static_cast<size_t>(7 * i)] = 0;
    UTMatrix acc;  // identity
    UTMatrix npow;
    int sign = 1;
    for (int k = 1; k <= 5; ++k) {
        npow = npow * n;
        sign = -sign;
        for (int i = 0; i < 36; ++i) {
            int v = acc.a_[static_cast<size_t>(i)] + sign * npow.a_[static_cast<size_t>(i)];
            acc.a_[static_cast<size_t>(i)] = ((v % kMod) + kMod) % kMod;
        }
    }
    return acc;
}

UTMatrix UTMatrix::pow(const Int& e) const {
    UTMatrix base = *this;
    Int n = e;
    if (n < 0) {
        base = base.inverse();
        n = -n;
    }
    UTMatrix r;
    while (n > 0) {
        if ((n & 1) != 0) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

UTMatrix ut_commutator(const UTMatrix& a, const UTMatrix& b) {
    return a * b * a.inverse() * b.inverse();
}

namespace {

UTMatrix eval_term_ut(const Term& t, const std::map<std::string, UTMatrix>& env, const Int& n) {
    switch (t.kind) {
        case Term::Kind::Var:
            return env.at(t.var);
        case Term::Kind::One:
            return UTMatrix();
        case Term::Kind::Product: {
            UTMatrix m;
            for (const auto& a : t.args) m = m * eval_term_ut(*a, env, n);
            return m;
        }
        case Term::Kind::Inverse:
            return eval_term_ut(*t.args[0], env, n).inverse();
        case Term::Kind::Power:
            return eval_term_ut(*t.args[0], env, n).pow(eval_int(*t.exp, n));
        case Term::Kind::Comm: {
            UTMatrix acc = eval_term_ut(*t.args.back(), env, n);
            for (size_t i = t.args.size() - 1; i-- > 0;)
                acc = ut_commutator(eval_term_ut(*t.args[i], env, n), acc);
            return acc;
        }
        case Term::Kind::Conj: {
            UTMatrix a = eval_term_ut(*t.args[0], env, n);
            return a * eval_term_ut(*t.args[1], env, n) * a.inverse();
        }
        case Term::Kind::Tensor:
        case Term::Kind::Wedge:
            throw std::logic_error("tensor/wedge term reached the matrix oracle");
    }
    throw std::logic_error("unhandled term kind");
}

}  // namespace

VerificationReport verify_oracle(const IdentityScript& id, int tuples, uint64_t seed,
                                 std::vector<Int> n_range) {
    if (!id.pure_commutator())
        throw std::invalid_argument("verify_oracle: script '" + id.name +
                                    "' has tensor or wedge terms");
    if (!id.modsq_vars.empty())
        throw std::invalid_argument("verify_oracle: script '" + id.name +
                                    "' asserts equality modulo a subgroup; "
                                    "use a specialized form without the modulus");

    bool wants_n = id.uses_n();
    if (n_range.empty()) {
        if (wants_n)
            for (int i = 1; i <= 7; ++i) n_range.push_back(i);  // class 5, so 1..c+2
        else
            n_range.push_back(0);
    }

    std::mt19937_64 rng(seed);
    VerificationReport rep;
    rep.identity = id.name;
    rep.mode = "oracle";

    for (int t = 0; t < tuples; ++t) {
        std::map<std::string, UTMatrix> env;
        for (const auto& v : id.variables) {
            long w = id.min_weight_of(v);
            // A right-normed commutator of w random elements lies in the
            // w-th lower-central term, matching the weight constraint.
            UTMatrix m = UTMatrix::random(rng);
            for (long i = 1; i < w; ++i) m = ut_commutator(UTMatrix::random(rng), m);
            env.emplace(v, m);
        }
        for (const Int& n : n_range) {
            InstanceResult inst;
            inst.description = "tuple " + std::to_string(t + 1);
            if (wants_n) inst.description += " n=" + n.str();
            UTMatrix lhs = eval_term_ut(*id.lhs, env, n);
            UTMatrix rhs = eval_term_ut(*id.rhs, env, n);
            inst.equal = lhs == rhs;
            if (!inst.equal) inst.differing.push_back("matrix entries differ");
            rep.record(std::move(inst));
        }
    }
    return rep;
}

}  // namespace wedgelab
