#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "folrig/liealg.hpp"

using namespace folrig;

namespace {

bool bracket_equals(const LieAlgebraData& g, int i, int j, const std::vector<FieldElem>& coords) {
    FMatrix lhs = vf_bracket(g.basis[i], g.basis[j]);
    FMatrix rhs(g.n + 1, g.n + 1);
    for (int k = 0; k < g.dim(); ++k)
        if (!coords[k].is_zero()) rhs = rhs + g.basis[k].scale(coords[k]);
    return lhs == rhs;
}

void check_jacobi(const LieAlgebraData& g) {
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j)
            for (int k = j + 1; k < g.dim(); ++k) {
                FMatrix s = vf_bracket(g.basis[i], vf_bracket(g.basis[j], g.basis[k])) +
                            vf_bracket(g.basis[j], vf_bracket(g.basis[k], g.basis[i])) +
                            vf_bracket(g.basis[k], vf_bracket(g.basis[i], g.basis[j]));
                CHECK(s.is_zero());
            }
}

void check_constants(const LieAlgebraData& g) {
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) {
            CHECK(bracket_equals(g, i, j, g.constants[i][j]));
            for (int k = 0; k < g.dim(); ++k) CHECK(g.constants[i][j][k] == -g.constants[j][i][k]);
        }
}

}  // namespace

TEST_CASE("two-dimensional non-abelian algebra") {
    // h = diag(1,-1), e = E_{01}: vector-field bracket gives [h, e] = 2e...
    FMatrix h(2, 2), e(2, 2);
    h.at(0, 0) = FieldElem(1);
    h.at(1, 1) = FieldElem(-1);
    e.at(0, 1) = FieldElem(1);
    auto g = structure_constants({h, e});
    // [b0, b1] = c^0 b0 + c^1 b1
    CHECK(g.constants[0][1][0] == FieldElem(0));
    CHECK(g.constants[0][1][1] == FieldElem(-2));  // vector-field convention
    check_jacobi(g);
    check_constants(g);
}

TEST_CASE("chain algebra structure constants") {
    auto g = chain_algebra(4, 2);  // X, Y_1, Y_2
    CHECK(g.dim() == 3);
    // [X, Y_k] = -2k Y_k
    for (int k = 1; k <= 2; ++k) {
        for (int l = 0; l < g.dim(); ++l) {
            FieldElem expect = (l == k) ? FieldElem(-2 * k) : FieldElem(0);
            CHECK(g.constants[0][k][l] == expect);
        }
    }
    // [Y_i, Y_j] = 0
    for (int l = 0; l < g.dim(); ++l) CHECK(g.constants[1][2][l] == FieldElem(0));
    check_jacobi(g);
    check_constants(g);
}

TEST_CASE("extension algebra on P^7: shifted-basis relations") {
    auto g = g_extension_algebra(7);
    CHECK(g.dim() == 6);  // X, Y_1..Y_5
    // [Y_1, Y_j] = -Y_{j+1} for j = 2..4
    for (int j = 2; j <= 4; ++j)
        for (int l = 0; l < g.dim(); ++l) {
            FieldElem expect = (l == j + 1) ? FieldElem(-1) : FieldElem(0);
            CHECK(g.constants[1][j][l] == expect);
        }
    // [Y_2, Y_3] = (5/2) Y_5
    for (int l = 0; l < g.dim(); ++l) {
        FieldElem expect = (l == 5) ? FieldElem(mpq_class(5, 2)) : FieldElem(0);
        CHECK(g.constants[2][3][l] == expect);
    }
    check_jacobi(g);

    // rescaling Y_k -> (-1)^{k-1} Y_k produces the alternative sign
    // convention: [W_1, W_j] = +W_{j+1} and [W_2, W_3] = -(5/2) W_5
    std::vector<FMatrix> rescaled{g.basis[0]};
    for (int k = 1; k <= 5; ++k)
        rescaled.push_back((k % 2) ? g.basis[k] : g.basis[k].scale(FieldElem(-1)));
    auto w = structure_constants(rescaled);
    for (int j = 2; j <= 4; ++j)
        CHECK(w.constants[1][j][j + 1] == FieldElem(1));
    CHECK(w.constants[2][3][5] == FieldElem(mpq_class(-5, 2)));
}

TEST_CASE("extension algebra on P^6") {
    auto g = g_extension_algebra(6);
    CHECK(g.dim() == 5);  // X, Y_1..Y_4
    // [Y_2, Y_3] = 0
    for (int l = 0; l < g.dim(); ++l) CHECK(g.constants[2][3][l] == FieldElem(0));
    check_jacobi(g);
    CHECK_THROWS_AS((void)g_extension_algebra(5), std::invalid_argument);
}

TEST_CASE("sl2 on binary forms") {
    for (int r : {4, 5, 6}) {
        auto g = sl2_sym_algebra(r);
        CHECK(g.dim() == 3);
        check_jacobi(g);
        check_constants(g);
        // h-eigenvalues on the coordinates are r, r-2, ..., -r
        for (int i = 0; i <= r; ++i) CHECK(g.basis[0].at(i, i) == FieldElem(r - 2 * i));
        // [h, e] = -2e, [h, f] = +2f, [e, f] = -h in the vector-field convention
        CHECK(g.constants[0][1][1] == FieldElem(-2));
        CHECK(g.constants[0][2][2] == FieldElem(2));
        CHECK(g.constants[1][2][0] == FieldElem(-1));
    }
}

TEST_CASE("aff_sym is the two-dimensional chain") {
    auto g = chain_algebra(4, 3);
    CHECK(g.dim() == 2);
    // [X, Y] = -2Y: the affine relation after rescaling X
    CHECK(g.constants[0][1][1] == FieldElem(-2));
    check_jacobi(g);
}

TEST_CASE("diagonal algebras are abelian and traceless") {
    auto g = diagonal_algebra(default_diagonal_weights(4, 2));
    CHECK(g.dim() == 2);
    for (const auto& m : g.basis) {
        CHECK(m.trace().is_zero());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (i != j) CHECK(m.at(i, j).is_zero());
    }
    for (int l = 0; l < g.dim(); ++l) CHECK(g.constants[0][1][l] == FieldElem(0));
}

TEST_CASE("structure_constants rejects bad bases") {
    FMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = FieldElem(1);
    CHECK_THROWS_AS((void)structure_constants({id}), std::invalid_argument);  // trace

    FMatrix h(3, 3);
    h.at(0, 0) = FieldElem(1);
    h.at(1, 1) = FieldElem(-1);
    CHECK_THROWS_AS((void)structure_constants({h, h.scale(FieldElem(2))}), std::invalid_argument);

    // e alone brackets into f-direction: {h, e+f} is not closed
    FMatrix e(3, 3), f(3, 3);
    e.at(0, 1) = FieldElem(1);
    f.at(1, 0) = FieldElem(1);
    CHECK_THROWS_AS((void)structure_constants({h, e + f}), NotClosedError);
    try {
        (void)structure_constants({h, e + f});
    } catch (const NotClosedError& err) {
        CHECK(err.i == 0);
        CHECK(err.j == 1);
    }
}

TEST_CASE("algebra JSON round trip and builtin dispatch") {
    auto g = g_extension_algebra(7);
    auto j = algebra_to_json(g);
    CHECK(j["radicand"] == 3);
    auto g2 = algebra_from_json(j);
    CHECK(g2.dim() == g.dim());
    for (int i = 0; i < g.dim(); ++i) CHECK(g2.basis[i] == g.basis[i]);

    nlohmann::json params{{"n", 5}};
    auto inf = builtin_algebra("infinito", params);
    CHECK(inf.dim() == 4);
    CHECK(builtin_algebra("sl2_sym", {{"r", 5}}).dim() == 3);
    CHECK(builtin_algebra("aff_sym", {{"r", 4}}).dim() == 2);
    CHECK_THROWS_AS((void)builtin_algebra("nope", params), std::invalid_argument);
    CHECK_THROWS_AS((void)builtin_algebra("infinito", nlohmann::json::object()), std::invalid_argument);
}

TEST_CASE("parse_algebra_spec: files, builtins, and informative failures") {
    // hand-written diagonal spec matches the builtin construction
    {
        auto weights = default_diagonal_weights(3, 1);
        auto g = diagonal_algebra(weights);
        std::ofstream out("/tmp/diag3.json");
        out << algebra_to_json(g).dump(2);
        out.close();
        auto loaded = parse_algebra_spec("/tmp/diag3.json");
        for (int i = 0; i < g.dim(); ++i) CHECK(loaded.basis[i] == g.basis[i]);
    }
    {
        std::ofstream out("/tmp/builtin.json");
        out << R"({"builtin": "infinito", "n": 5})";
        out.close();
        CHECK(parse_algebra_spec("/tmp/builtin.json").dim() == 4);
    }
    {
        // perturb one entry of a valid spec: the error names the bracket
        auto g = chain_algebra(4, 2);
        auto j = algebra_to_json(g);
        j["generators"][1][0 * 5 + 2] = "1/3";  // corrupt Y_1 off the shift line
        std::ofstream out("/tmp/broken.json");
        out << j.dump();
        out.close();
        bool threw = false;
        try {
            (void)parse_algebra_spec("/tmp/broken.json");
        } catch (const std::exception& e) {
            threw = true;
            CHECK(std::string(e.what()).find("bracket") != std::string::npos);
        }
        CHECK(threw);
    }
    CHECK_THROWS_AS((void)parse_algebra_spec("/tmp/does-not-exist.json"), std::runtime_error);
    {
        std::ofstream out("/tmp/garbage.json");
        out << "{ not json";
        out.close();
        CHECK_THROWS_AS((void)parse_algebra_spec("/tmp/garbage.json"), std::runtime_error);
    }
}
