#include "wedgelab/scripts.hpp"

#include <stdexcept>

namespace wedgelab {
namespace {

struct Builder {
    std::vector<ScriptSpec> out;

    ScriptSpec& add(std::string family, std::string id, std::string dsl) {
        ScriptSpec s;
        s.id = std::move(id);
        s.family = std::move(family);
        s.dsl = "identity " + s.id + ";\n" + std::move(dsl);
        out.push_back(std::move(s));
        return out.back();
    }
};

std::vector<ScriptSpec> build() {
    Builder b;

    // Crossed-module laws of the tensor pairing.  These only make sense in
    // nu(G) itself, so they run concretely and exhaustively on small groups.
    b.add("crossed", "crossed.inv_acting",
          "vars g, h; class 5;\n"
          "assert conj(g, tensor(inv(g), h)) == inv(tensor(g, h));")
        .concrete = true;
    b.add("crossed", "crossed.inv_hatted",
          "vars g, h; class 5;\n"
          "assert conj(h, tensor(g, inv(h))) == inv(tensor(g, h));")
        .concrete = true;
    b.add("crossed", "crossed.conjugation",
          "vars g, h, g1, h1; class 5;\n"
          "assert tensor(g, h) * tensor(g1, h1) * inv(tensor(g, h))\n"
          "    == tensor(conj([g, h], g1), conj([g, h], h1));")
        .concrete = true;
    b.add("crossed", "crossed.comm_first",
          "vars g, h, h1; class 5;\n"
          "assert tensor([g, h], h1)\n"
          "    == tensor(g, h) * conj(h1, inv(tensor(g, h)));")
        .concrete = true;
    b.add("crossed", "crossed.comm_second",
          "vars g, h, g1; class 5;\n"
          "assert tensor(g1, [g, h])\n"
          "    == conj(g1, tensor(g, h)) * inv(tensor(g, h));")
        .concrete = true;
    b.add("crossed", "crossed.collapse",
          "vars g, h, g1, h1; class 5;\n"
          "assert [tensor(g, h), tensor(g1, h1)] == tensor([g, h], [g1, h1]);")
        .concrete = true;
    b.add("crossed", "crossed.reorder",
          "vars g1, h1, g2, h2; class 5;\n"
          "assert tensor(g1, h1) * tensor(g2, h2)\n"
          "    == tensor([g1, h1], [g2, h2]) * tensor(g2, h2) * tensor(g1, h1);")
        .concrete = true;

    // The two defining biderivation relations, replayed on group elements.
    b.add("defining", "defining.left",
          "vars g, g1, h; class 5;\n"
          "assert tensor(g * g1, h)\n"
          "    == tensor(conj(g, g1), conj(g, h)) * tensor(g, h);")
        .concrete = true;
    b.add("defining", "defining.right",
          "vars g, h, h1; class 5;\n"
          "assert tensor(g, h * h1)\n"
          "    == tensor(g, h) * tensor(conj(h, g), conj(h, h1));")
        .concrete = true;

    // Collection formula for (gh)^n up to class 5, stated modulo squares of
    // the marked variable.  The oracle form pins both variables deep enough
    // that the modular correction vanishes and equality becomes exact.
    {
        ScriptSpec& s = b.add(
            "collection", "collection.binomial",
            "vars g, h; class 5;\n"
            "where modsq(g);\n"
            "assert pow(g * h, n)\n"
            "    == pow([h, h, h, h, g], binom(n, 5)) * pow([h, h, h, g], binom(n, 4))\n"
            "     * pow([h, h, g], binom(n, 3)) * pow([h, g], binom(n, 2))\n"
            "     * pow(g, n) * pow(h, n);");
        s.symbolic = true;
        s.oracle = true;
        s.oracle_dsl =
            "identity collection.binomial;\n"
            "vars g, h; class 5;\n"
            "where w(g) >= 2, w(h) >= 2;\n"
            "assert pow(g * h, n) == pow([h, g], binom(n, 2)) * pow(g, n) * pow(h, n);";
    }

    // Weight bookkeeping: pairings die or centralize once the entry weights
    // sum past the class.  Wedge forms run in nu(G), their kappa images in
    // the free engine and the matrix oracle.
    b.add("weight", "weight.tensor_vanishes_25",
          "vars g, h; class 5;\n"
          "where w(g) >= 2, w(h) >= 5;\n"
          "assert tensor(g, h) == 1;")
        .concrete = true;
    b.add("weight", "weight.tensor_vanishes_34",
          "vars g, h; class 5;\n"
          "where w(g) >= 3, w(h) >= 4;\n"
          "assert tensor(g, h) == 1;")
        .concrete = true;
    b.add("weight", "weight.tensor_commute",
          "vars g1, h1, g2, h2; class 5;\n"
          "where w(g1) >= 2, w(h1) >= 2, w(g2) >= 2;\n"
          "assert [tensor(g1, h1), tensor(g2, h2)] == 1;")
        .concrete = true;
    b.add("weight", "weight.gamma3_fixes_wedge",
          "vars z, g, h; class 5;\n"
          "where w(z) >= 3, w(g) >= 2, w(h) >= 2;\n"
          "assert conj(z, wedge(g, h)) == wedge(g, h);")
        .concrete = true;
    {
        ScriptSpec& s = b.add("weight", "weight.gamma3_fixes_comm",
                              "vars z, g, h; class 5;\n"
                              "where w(z) >= 3, w(g) >= 2, w(h) >= 2;\n"
                              "assert conj(z, [g, h]) == [g, h];");
        s.symbolic = true;
        s.oracle = true;
    }
    b.add("weight", "weight.gamma2_fixes_wedge",
          "vars z, g, h; class 5;\n"
          "where w(z) >= 2, w(g) >= 2, w(h) >= 3;\n"
          "assert conj(z, wedge(g, h)) == wedge(g, h);")
        .concrete = true;
    {
        ScriptSpec& s = b.add("weight", "weight.gamma2_fixes_comm",
                              "vars z, g, h; class 5;\n"
                              "where w(z) >= 2, w(g) >= 2, w(h) >= 3;\n"
                              "assert conj(z, [g, h]) == [g, h];");
        s.symbolic = true;
        s.oracle = true;
    }
    b.add("weight", "weight.wedge_square_expand",
          "vars g, h; class 5;\n"
          "assert pow(wedge(g, [g, h]) * wedge(g, h), n)\n"
          "    == pow(wedge([g, h], [g, g, h]), binom(n, 2))\n"
          "     * pow(wedge(g, [g, h]), n) * pow(wedge(g, h), n);")
        .concrete = true;
    {
        ScriptSpec& s = b.add(
            "weight", "weight.comm_square_expand",
            "vars g, h; class 5;\n"
            "assert pow([g, g, h] * [g, h], n)\n"
            "    == pow([[g, h], [g, g, h]], binom(n, 2))\n"
            "     * pow([g, g, h], n) * pow([g, h], n);");
        s.symbolic = true;
        s.oracle = true;
    }

    // How g^n acts on a wedge, with the binomial tail in the second slot.
    b.add("action", "action.power_wedge",
          "vars g, h; class 5;\n"
          "assert conj(pow(g, n), wedge(g, h))\n"
          "    == pow(wedge(g, [g, g, g, g, h]), binom(n, 4))\n"
          "     * pow(wedge(g, [g, g, g, h]), binom(n, 3))\n"
          "     * pow(wedge(g, [g, g, h]), binom(n, 2))\n"
          "     * pow(wedge(g, [g, h]), n) * wedge(g, h);")
        .concrete = true;
    {
        ScriptSpec& s = b.add(
            "action", "action.power_comm",
            "vars g, h; class 5;\n"
            "assert conj(pow(g, n), [g, h])\n"
            "    == pow([g, g, g, g, g, h], binom(n, 4))\n"
            "     * pow([g, g, g, g, h], binom(n, 3))\n"
            "     * pow([g, g, g, h], binom(n, 2))\n"
            "     * pow([g, g, h], n) * [g, h];");
        s.symbolic = true;
        s.oracle = true;
    }

    // Expansion of g^n wedge h into basic wedges with binomial exponents.
    b.add("expansion", "expansion.power_wedge",
          "vars g, h; class 5;\n"
          "assert wedge(pow(g, n), h)\n"
          "    == pow(wedge([g, h], [g, g, g, h]), binom(n, 4))\n"
          "     * pow(wedge([g, h], [g, g, h]), binom(n, 3))\n"
          "     * pow(wedge(g, [g, g, g, g, h]), binom(n, 5))\n"
          "     * pow(wedge(g, [g, g, g, h]), binom(n, 4))\n"
          "     * pow(wedge(g, [g, g, h]), binom(n, 3))\n"
          "     * pow(wedge(g, [g, h]), binom(n, 2))\n"
          "     * pow(wedge(g, h), n);")
        .concrete = true;
    {
        ScriptSpec& s = b.add(
            "expansion", "expansion.power_comm",
            "vars g, h; class 5;\n"
            "assert [pow(g, n), h]\n"
            "    == pow([[g, h], [g, g, g, h]], binom(n, 4))\n"
            "     * pow([[g, h], [g, g, h]], binom(n, 3))\n"
            "     * pow([g, g, g, g, g, h], binom(n, 5))\n"
            "     * pow([g, g, g, g, h], binom(n, 4))\n"
            "     * pow([g, g, g, h], binom(n, 3))\n"
            "     * pow([g, g, h], binom(n, 2))\n"
            "     * pow([g, h], n);");
        s.symbolic = true;
        s.oracle = true;
    }

    // Pulling powers through one slot of a wedge.
    b.add("pull", "pull.wedge_right",
          "vars g, h; class 5;\n"
          "where w(h) >= 3;\n"
          "assert pow(wedge(g, h), n) == wedge(g, pow(h, n));")
        .concrete = true;
    b.add("pull", "pull.wedge_left",
          "vars g, h; class 5;\n"
          "where w(h) >= 3;\n"
          "assert pow(wedge(h, g), n) == wedge(pow(h, n), g);")
        .concrete = true;
    b.add("pull", "pull.comm_wedge_right",
          "vars a, b, g; class 5;\n"
          "assert wedge(pow([a, b], n), g)\n"
          "    == pow(wedge([a, b], [[a, b], g]), binom(n, 2))\n"
          "     * pow(wedge([a, b], g), n);")
        .concrete = true;
    b.add("pull", "pull.comm_wedge_left",
          "vars a, b, g; class 5;\n"
          "assert wedge(g, pow([a, b], n))\n"
          "    == pow(wedge([a, b], [g, [a, b]]), binom(n, 2))\n"
          "     * pow(wedge(g, [a, b]), n);")
        .concrete = true;
    b.add("pull", "pull.wedge_pass_first",
          "vars g, h, a, b; class 5;\n"
          "assert wedge(g, h) * pow(wedge([g, h], [a, b]), n)\n"
          "    == pow(wedge([g, h], [[g, h], [a, b]]), n)\n"
          "     * pow(wedge([g, h], [a, b]), n) * wedge(g, h);")
        .concrete = true;
    b.add("pull", "pull.wedge_pass_second",
          "vars g, h, a, b; class 5;\n"
          "assert wedge(a, b) * pow(wedge([g, h], [a, b]), n)\n"
          "    == pow(wedge([a, b], [[g, h], [a, b]]), n)\n"
          "     * pow(wedge([g, h], [a, b]), n) * wedge(a, b);")
        .concrete = true;

    // Commutator expansion over products, plus the wedge counterparts of the
    // fourfold splittings.
    {
        ScriptSpec& s = b.add("commexp", "commexp.left_product",
                              "vars g, g1, h; class 5;\n"
                              "assert [g * g1, h] == conj(g, [g1, h]) * [g, h];");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add("commexp", "commexp.right_product",
                              "vars g, h, h1; class 5;\n"
                              "assert [g, h * h1] == [g, h] * conj(h, [g, h1]);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add("commexp", "commexp.swap",
                              "vars g, h; class 5;\n"
                              "assert g * h == [g, h] * h * g;");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add("commexp", "commexp.conj_form",
                              "vars g, h; class 5;\n"
                              "assert conj(g, h) == [g, h] * h;");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add(
            "commexp", "commexp.right_fourfold",
            "vars g, a, b, c, d; class 5;\n"
            "assert [g, a * b * c * d]\n"
            "    == [g, a] * conj(a, [g, b]) * conj(a * b, [g, c])\n"
            "     * conj(a * b * c, [g, d]);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add(
            "commexp", "commexp.left_fourfold",
            "vars g, a, b, c, d; class 5;\n"
            "assert [a * b * c * d, g]\n"
            "    == conj(a * b * c, [d, g]) * conj(a * b, [c, g])\n"
            "     * conj(a, [b, g]) * [a, g];");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    b.add("commexp", "commexp.right_fourfold_wedge",
          "vars g, a, b, c, d; class 5;\n"
          "assert wedge(g, a * b * c * d)\n"
          "    == wedge(g, a) * conj(a, wedge(g, b)) * conj(a * b, wedge(g, c))\n"
          "     * conj(a * b * c, wedge(g, d));")
        .concrete = true;
    b.add("commexp", "commexp.left_fourfold_wedge",
          "vars g, a, b, c, d; class 5;\n"
          "assert wedge(a * b * c * d, g)\n"
          "    == conj(a * b * c, wedge(d, g)) * conj(a * b, wedge(c, g))\n"
          "     * conj(a, wedge(b, g)) * wedge(a, g);")
        .concrete = true;

    // Powers sliding out of a commutator slot under weight hypotheses.
    {
        ScriptSpec& s = b.add("power", "power.conj_trivial_24",
                              "vars g, h; class 5;\n"
                              "where w(g) >= 2, w(h) >= 4;\n"
                              "assert conj(g, h) == h;");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add("power", "power.conj_trivial_33",
                              "vars g, h; class 5;\n"
                              "where w(g) >= 3, w(h) >= 3;\n"
                              "assert conj(g, h) == h;");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add("power", "power.into_second",
                              "vars g, h; class 5;\n"
                              "where w(h) >= 3;\n"
                              "assert [g, pow(h, n)] == pow([g, h], n);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add("power", "power.into_first",
                              "vars g, h; class 5;\n"
                              "where w(h) >= 4;\n"
                              "assert [pow(g, n), h] == pow([g, h], n);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add(
            "power", "power.nested",
            "vars g1, g, h; class 5;\n"
            "assert [g1, pow([g, h], n)]\n"
            "    == pow([g1, g, h], n)\n"
            "     * pow([[g, h], [g1, g, h]], binom(n, 2));");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }

    // Moving a power of one wedge past another wedge.
    b.add("prodcomm", "prodcomm.wedge",
          "vars g1, h1, g2, h2; class 5;\n"
          "assert wedge(g2, h2) * pow(wedge(g1, h1), n)\n"
          "    == pow(wedge([g1, h1], [[g2, h2], [g1, h1]]), binom(n, 2))\n"
          "     * pow(wedge([g2, h2], [g1, h1]), n)\n"
          "     * pow(wedge(g1, h1), n) * wedge(g2, h2);")
        .concrete = true;
    {
        ScriptSpec& s = b.add(
            "prodcomm", "prodcomm.comm",
            "vars u, v; class 5;\n"
            "where w(u) >= 2, w(v) >= 2;\n"
            "assert v * pow(u, n)\n"
            "    == pow([u, [v, u]], binom(n, 2)) * pow([v, u], n) * pow(u, n) * v;");
        s.symbolic = true;
        s.oracle = true;
    }

    // Power of a product of two wedges.
    b.add("prodpow", "prodpow.wedge",
          "vars g1, h1, g2, h2; class 5;\n"
          "assert pow(wedge(g1, h1) * wedge(g2, h2), n)\n"
          "    == pow(wedge([g2, h2], [[g2, h2], [g1, h1]]), binom(n, 3))\n"
          "     * pow(wedge([g1, h1], [[g2, h2], [g1, h1]]),\n"
          "           2 * binom(n, 3) + binom(n, 2))\n"
          "     * pow(wedge([g2, h2], [g1, h1]), binom(n, 2))\n"
          "     * pow(wedge(g1, h1), n) * pow(wedge(g2, h2), n);")
        .concrete = true;
    {
        ScriptSpec& s = b.add(
            "prodpow", "prodpow.comm",
            "vars u, v; class 5;\n"
            "where w(u) >= 2, w(v) >= 2;\n"
            "assert pow(u * v, n)\n"
            "    == pow([v, [v, u]], binom(n, 3))\n"
            "     * pow([u, [v, u]], 2 * binom(n, 3) + binom(n, 2))\n"
            "     * pow([v, u], binom(n, 2)) * pow(u, n) * pow(v, n);");
        s.symbolic = true;
        s.oracle = true;
    }

    // Cube identities: exact expansions of third powers in class 5.
    {
        ScriptSpec& s = b.add(
            "cube", "cube.comm_h",
            "vars g, h; class 5;\n"
            "assert [pow(g, 3), h]\n"
            "    == [[g, h], [g, g, h]] * [g, g, g, h] * pow([g, g, h], 3)\n"
            "     * pow([g, h], 3);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add("cube", "cube.weights_second",
                              "vars g, h; class 5;\n"
                              "where w(g) >= 2, w(h) >= 2;\n"
                              "assert [g, pow(h, 3)] == pow([g, h], 3);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add("cube", "cube.weights_first",
                              "vars g, h; class 5;\n"
                              "where w(g) >= 2, w(h) >= 2;\n"
                              "assert [pow(g, 3), h] == pow([g, h], 3);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    b.add("cube", "cube.wedge",
          "vars g, h; class 5;\n"
          "assert wedge(pow(g, 3), [pow(g, 3), h])\n"
          "    == pow(wedge(g, [[g, h], [g, g, h]]), 3)\n"
          "     * pow(wedge([g, g, h], [pow(g, 3), pow([g, h], 3)]), 3)\n"
          "     * pow(wedge([g, h], [pow(g, 3), [g, h]]), 3)\n"
          "     * pow(wedge(g, [g, g, g, g, h]), 3)\n"
          "     * pow(wedge(g, [g, g, g, h]), 3)\n"
          "     * pow(wedge(pow(g, 3), [g, g, h]), 3)\n"
          "     * pow(wedge(pow(g, 3), [g, h]), 3);")
        .concrete = true;
    {
        ScriptSpec& s = b.add(
            "cube", "cube.wedge_comm",
            "vars g, h; class 5;\n"
            "assert [pow(g, 3), [pow(g, 3), h]]\n"
            "    == pow([g, [[g, h], [g, g, h]]], 3)\n"
            "     * pow([[g, g, h], [pow(g, 3), pow([g, h], 3)]], 3)\n"
            "     * pow([[g, h], [pow(g, 3), [g, h]]], 3)\n"
            "     * pow([g, g, g, g, g, h], 3)\n"
            "     * pow([g, g, g, g, h], 3)\n"
            "     * pow([pow(g, 3), [g, g, h]], 3)\n"
            "     * pow([pow(g, 3), [g, h]], 3);");
        s.symbolic = true;
        s.oracle = true;
    }
    {
        ScriptSpec& s = b.add(
            "cube", "cube.cube_comm_cube",
            "vars g, h; class 5;\n"
            "assert [pow(g, 3), pow([g, h], 3)]\n"
            "    == pow([pow(g, 3), g, h], 3)\n"
            "     * pow([[g, h], [pow(g, 3), g, h]], 3);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add(
            "cube", "cube.double_cube",
            "vars g, h; class 5;\n"
            "assert [pow(g, 3), pow(g, 3), h]\n"
            "    == pow([[g, h], [pow(g, 3), g, h]], 3)\n"
            "     * pow([g, g, g, g, h], 3)\n"
            "     * pow([pow(g, 3), g, g, h], 3)\n"
            "     * pow([pow(g, 3), g, h], 3);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add(
            "cube", "cube.triple_cube",
            "vars g, h; class 5;\n"
            "assert [pow(g, 3), pow(g, 3), pow(g, 3), h]\n"
            "    == pow([pow(g, 3), pow(g, 3), g, g, h], 3)\n"
            "     * pow([pow(g, 3), pow(g, 3), g, h], 3);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add(
            "cube", "cube.pair_comm",
            "vars g1, h1, g2, h2; class 5;\n"
            "assert [[pow(g2, 3), h2], [pow(g1, 3), h1]]\n"
            "    == pow([[g2, h2], [g1, g1, h1]], 9)\n"
            "     * pow([[g2, g2, h2], [g1, h1]], 9)\n"
            "     * pow([[g2, h2], [g1, h1]], 9);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add(
            "cube", "cube.cube_ggh",
            "vars g, h; class 5;\n"
            "assert [pow(g, 3), g, g, h]\n"
            "    == pow([g, g, g, g, h], 3) * pow([g, g, g, h], 3);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }
    {
        ScriptSpec& s = b.add(
            "cube", "cube.cube_gh",
            "vars g, h; class 5;\n"
            "assert [pow(g, 3), g, h]\n"
            "    == [g, g, g, g, h] * pow([g, g, g, h], 3) * pow([g, g, h], 3);");
        s.symbolic = true;
        s.oracle = true;
        s.concrete = true;
    }

    // Vanishing of binomial-power wedges in 3-groups: with e(G) = 3^n each
    // statement kills one basic wedge.  n is bound to that logarithm.
    auto vanish = [&b](const char* id, const char* body) {
        ScriptSpec& s = b.add("vanish3", id, body);
        s.concrete = true;
        s.n_policy = "exponent_log";
    };
    vanish("vanish3.single_comm",
           "vars g, h; class 5;\n"
           "where prime = 3;\n"
           "assert pow(wedge(pow(g, 3), [pow(g, 3), h]),\n"
           "           binom(ipow(3, n - 1), 2)) == 1;");
    vanish("vanish3.double_comm",
           "vars g, h; class 5;\n"
           "where prime = 3;\n"
           "assert pow(wedge(pow(g, 3), [pow(g, 3), pow(g, 3), h]),\n"
           "           binom(ipow(3, n - 1), 3)) == 1;");
    vanish("vanish3.triple_comm",
           "vars g, h; class 5;\n"
           "where prime = 3;\n"
           "assert pow(wedge(pow(g, 3), [pow(g, 3), pow(g, 3), pow(g, 3), h]),\n"
           "           binom(ipow(3, n - 1), 4)) == 1;");
    vanish("vanish3.quad_comm",
           "vars g, h; class 5;\n"
           "where prime = 3;\n"
           "assert pow(wedge(pow(g, 3),\n"
           "                 [pow(g, 3), pow(g, 3), pow(g, 3), pow(g, 3), h]),\n"
           "           binom(ipow(3, n - 1), 5)) == 1;");
    vanish("vanish3.comm_double",
           "vars g, h; class 5;\n"
           "where prime = 3;\n"
           "assert pow(wedge([pow(g, 3), h], [pow(g, 3), pow(g, 3), h]),\n"
           "           binom(ipow(3, n - 1), 3)) == 1;");
    vanish("vanish3.comm_triple",
           "vars g, h; class 5;\n"
           "where prime = 3;\n"
           "assert pow(wedge([pow(g, 3), h],\n"
           "                 [pow(g, 3), pow(g, 3), pow(g, 3), h]),\n"
           "           binom(ipow(3, n - 1), 4)) == 1;");
    vanish("vanish3.pair",
           "vars g1, h1, g2, h2; class 5;\n"
           "where prime = 3;\n"
           "assert pow(wedge([pow(g2, 3), h2], [pow(g1, 3), h1]),\n"
           "           binom(ipow(3, n - 1), 2)) == 1;");
    vanish("vanish3.pair_nested_first",
           "vars g1, h1, g2, h2; class 5;\n"
           "where prime = 3;\n"
           "assert pow(wedge([pow(g1, 3), h1],\n"
           "                 [[pow(g2, 3), h2], [pow(g1, 3), h1]]),\n"
           "           2 * binom(ipow(3, n - 1), 3)\n"
           "               + binom(ipow(3, n - 1), 2)) == 1;");
    vanish("vanish3.pair_nested_second",
           "vars g1, h1, g2, h2; class 5;\n"
           "where prime = 3;\n"
           "assert pow(wedge([pow(g2, 3), h2],\n"
           "                 [[pow(g2, 3), h2], [pow(g1, 3), h1]]),\n"
           "           binom(ipow(3, n - 1), 3)) == 1;");

    // Weight-sum splittings: commutators behave multilinearly once the total
    // entry weight exceeds the class.
    {
        ScriptSpec& s = b.add("wsum", "wsum.conj_fix",
                              "vars a, b, c; class 5;\n"
                              "where w(a) >= 2, w(b) >= 2, w(c) >= 2;\n"
                              "assert conj(a, [b, c]) == [b, c];");
        s.symbolic = true;
        s.oracle = true;
    }
    {
        ScriptSpec& s = b.add("wsum", "wsum.comm_commute",
                              "vars a, b, c, d; class 5;\n"
                              "where w(a) >= 2, w(b) >= 2;\n"
                              "assert [a, b] * [c, d] == [c, d] * [a, b];");
        s.symbolic = true;
        s.oracle = true;
    }
    {
        ScriptSpec& s = b.add("wsum", "wsum.left_split",
                              "vars a, b, c; class 5;\n"
                              "where w(a) >= 2, w(b) >= 2, w(c) >= 2;\n"
                              "assert [a * b, c] == [a, c] * [b, c];");
        s.symbolic = true;
        s.oracle = true;
    }
    {
        ScriptSpec& s = b.add("wsum", "wsum.mid_split",
                              "vars a, b, c, d; class 5;\n"
                              "where w(b) >= 2, w(c) >= 2;\n"
                              "assert [a, b * c, d] == [a, b, d] * [a, c, d];");
        s.symbolic = true;
        s.oracle = true;
    }
    {
        ScriptSpec& s = b.add(
            "wsum", "wsum.deep_split",
            "vars a, b, c, d, e; class 5;\n"
            "where w(c) >= 2;\n"
            "assert [a, b, c * d, e] == [a, b, c, e] * [a, b, d, e];");
        s.symbolic = true;
        s.oracle = true;
    }

    // Substituting gh for g inside a weight-5 commutator splits it into the
    // commutators of all entry patterns.  The variant with a repeated factor
    // reproduces a transcription slip and must fail.
    auto ghsub = [&b](const char* id, const char* body,
                      bool expect = true) -> ScriptSpec& {
        ScriptSpec& s = b.add("ghsub", id, body);
        s.symbolic = true;
        s.oracle = true;
        s.expect_equal = expect;
        return s;
    };
    ghsub("ghsub.full",
          "vars g, h; class 5;\n"
          "assert [g * h, g * h, g * h, g * h, h]\n"
          "    == [h, h, h, g, h] * [h, h, g, g, h] * [h, g, h, g, h]\n"
          "     * [g, h, h, g, h] * [h, g, g, g, h] * [g, h, g, g, h]\n"
          "     * [g, g, h, g, h] * [g, g, g, g, h];");
    ghsub("ghsub.hh",
          "vars g, h; class 5;\n"
          "assert [h, h, g * h, g * h, h] == [h, h, h, g, h] * [h, h, g, g, h];");
    ghsub("ghsub.hgh",
          "vars g, h; class 5;\n"
          "assert [h, g * h, h, g * h, h] == [h, h, h, g, h] * [h, g, h, g, h];");
    ghsub("ghsub.ghh",
          "vars g, h; class 5;\n"
          "assert [g * h, h, h, g * h, h] == [h, h, h, g, h] * [g, h, h, g, h];");
    ghsub("ghsub.h_rest",
          "vars g, h; class 5;\n"
          "assert [h, g * h, g * h, g * h, h]\n"
          "    == [h, h, h, g, h] * [h, h, g, g, h] * [h, g, h, g, h]\n"
          "     * [h, g, g, g, h];");
    ghsub("ghsub.gh_h_rest",
          "vars g, h; class 5;\n"
          "assert [g * h, h, g * h, g * h, h]\n"
          "    == [h, h, h, g, h] * [h, h, g, g, h] * [g, h, h, g, h]\n"
          "     * [g, h, g, g, h];");
    ghsub("ghsub.ghgh_h",
          "vars g, h; class 5;\n"
          "assert [g * h, g * h, h, g * h, h]\n"
          "    == [h, h, h, g, h] * [g, h, h, g, h] * [h, g, h, g, h]\n"
          "     * [g, g, h, g, h];");
    ghsub("ghsub.full_printed_variant",
          "vars g, h; class 5;\n"
          "assert [g * h, g * h, g * h, g * h, h]\n"
          "    == [h, h, h, g, h] * [h, h, g, g, h] * [h, g, h, g, h]\n"
          "     * [g, h, h, g, h] * [h, g, h, g, h] * [g, h, g, g, h]\n"
          "     * [g, g, h, g, h] * [g, g, g, g, h];",
          false);

    // Tensor laws for an abelian normal subgroup paired against a normal
    // subgroup.  Pinned to the modular group of order 27 with N = <a>.
    auto abelians = [&b](const char* id, const char* body) -> ScriptSpec& {
        ScriptSpec& s = b.add("abelians", id, body);
        s.concrete = true;
        s.group_filter = "Mod27";
        return s;
    };
    abelians("abelians.power_left",
             "vars x, m; class 5;\n"
             "assert tensor(pow(x, n), m)\n"
             "    == pow(tensor(x, [x, m]), binom(n, 2)) * pow(tensor(x, m), n);")
        .var_domains = {{"x", "gen:a"}};
    abelians("abelians.power_comm",
             "vars x, x1, m; class 5;\n"
             "assert tensor(pow(x, n), [x1, m]) == pow(tensor(x, [x1, m]), n);")
        .var_domains = {{"x", "gen:a"}, {"x1", "gen:a"}};
    abelians("abelians.product_power",
             "vars x, m, x1, m1; class 5;\n"
             "assert pow(tensor(x, m) * tensor(x1, m1), n)\n"
             "    == pow(tensor([x1, m1], [x, m]), binom(n, 2))\n"
             "     * pow(tensor(x, m), n) * pow(tensor(x1, m1), n);")
        .var_domains = {{"x", "gen:a"}, {"x1", "gen:a"}};

    return b.out;
}

}  // namespace

const std::vector<ScriptSpec>& builtin_scripts() {
    static const std::vector<ScriptSpec> all = build();
    return all;
}

const ScriptSpec* script_find(const std::string& id) {
    for (const ScriptSpec& s : builtin_scripts())
        if (s.id == id) return &s;
    return nullptr;
}

int symbolic_rank(const IdentityScript& id) {
    int rank = 0;
    for (const std::string& v : id.variables)
        rank += id.min_weight_of(v) > 1 ? 2 : 1;
    return rank;
}

const std::vector<std::pair<std::string, int>>& required_families() {
    static const std::vector<std::pair<std::string, int>> req = {
        {"crossed", 7},  {"defining", 2}, {"collection", 1}, {"weight", 9},
        {"action", 2},   {"expansion", 2}, {"pull", 6},      {"commexp", 8},
        {"power", 5},    {"prodcomm", 2}, {"prodpow", 2},    {"cube", 11},
        {"vanish3", 9},  {"wsum", 5},     {"ghsub", 8},      {"abelians", 3},
    };
    return req;
}

}  // namespace wedgelab
