#include "doctest.h"

#include "steenrod/errors.hpp"
#include "steenrod/group.hpp"
#include "steenrod/lattice.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace steenrod;

namespace {

// Laplace expansion; independent of the Bareiss code under test.
Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t j = 0; j < n; ++j)
            if (j != c) cols.push_back(j);
        Integer minor = cofactor_det(m.select_rows(rows).select_cols(cols));
        if (c % 2) out -= m(0, c) * minor;
        else out += m(0, c) * minor;
    }
    return out;
}

void subsets(std::size_t n, std::size_t k, std::function<void(const std::vector<std::size_t>&)> fn) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

// Invariant factors from determinantal divisors: d_k = g_k / g_{k-1} with
// g_k the gcd of all k x k minors.
std::vector<Integer> invariant_factors(const IntMatrix& m) {
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Integer g = 0;
        subsets(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
            subsets(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
                Integer d = cofactor_det(m.select_rows(rs).select_cols(cs));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            });
        });
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

IntMatrix diag(std::initializer_list<long> d) {
    std::vector<Integer> v(d.begin(), d.end());
    return IntMatrix::diagonal(v);
}

}  // namespace

TEST_CASE("smith normal form examples") {
    auto s = smith_normal_form(diag({2, 3}));
    CHECK(s.D == diag({1, 6}));
    CHECK(s.U * diag({2, 3}) * s.V == s.D);

    auto z = smith_normal_form(IntMatrix(2, 2));
    CHECK(z.D.is_zero());
    CHECK(z.U == IntMatrix::identity(2));
    CHECK(z.V == IntMatrix::identity(2));

    CHECK(smith_normal_form(IntMatrix::identity(4)).D == IntMatrix::identity(4));
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        auto m = random_matrix(rng, r, c, 6);
        auto s = smith_normal_form(m, kSmithAll);
        CHECK(s.U * m * s.V == s.D);
        CHECK(abs(cofactor_det(s.U)) == 1);
        CHECK(abs(cofactor_det(s.V)) == 1);
        CHECK(s.U * s.U_inv == IntMatrix::identity(r));
        CHECK(s.V * s.V_inv == IntMatrix::identity(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        auto d = s.diagonal();
        std::vector<Integer> nonzero;
        for (const auto& x : d) {
            CHECK(x >= 0);
            if (x != 0) nonzero.push_back(x);
        }
        for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(divides(d[i], d[i + 1]));
        CHECK(nonzero == invariant_factors(m));
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rng() % 5;
        auto m = random_matrix(rng, n, n, 9);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("cokernel examples") {
    auto g = cokernel(IntMatrix{{2}});
    CHECK(g.torsion() == std::vector<Integer>{2});
    CHECK(g.free_rank() == 0);
    CHECK(g.to_string() == "Z/2");

    auto z = cokernel(IntMatrix(1, 0));
    CHECK(z.free_rank() == 1);
    CHECK(z.torsion().empty());

    auto four = cokernel(diag({1, 4}));
    CHECK(four.to_string() == "Z/4");
    CHECK(four.order() == 4);
}

TEST_CASE("cokernel invariants are basis independent") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(rng, 3, 3, 5);
        auto a = IntMatrix{{1, 2, 0}, {0, 1, -3}, {0, 0, 1}};
        auto b = IntMatrix{{1, 0, 0}, {4, 1, 0}, {-1, 2, 1}};
        CHECK(cokernel(m).isomorphic(cokernel(a * m * b)));
    }
}

TEST_CASE("kernel basis examples") {
    auto k = kernel_basis(IntMatrix{{1, 1}});
    REQUIRE(k.cols() == 1);
    CHECK(((k(0, 0) == 1 && k(1, 0) == -1) || (k(0, 0) == -1 && k(1, 0) == 1)));
    CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
    auto full = kernel_basis(IntMatrix(1, 2));
    CHECK(full.cols() == 2);
    CHECK(lattices_equal(full, IntMatrix::identity(2)));
}

TEST_CASE("rank-nullity and saturation of kernel bases") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = rng() % 4, c = rng() % 5;
        auto m = random_matrix(rng, r, c, 4);
        auto k = kernel_basis(m);
        CHECK((m * k).is_zero());
        CHECK(k.cols() + rank(m) == c);
        // saturated: the cokernel of the inclusion is torsion free
        CHECK(cokernel(k).torsion().empty());
    }
}

TEST_CASE("subquotient examples") {
    auto g = subquotient(IntMatrix::identity(2), diag({2, 2}));
    CHECK(g.torsion() == std::vector<Integer>{2, 2});
    CHECK(g.to_string() == "Z/2 + Z/2");

    auto k = IntMatrix{{1, 3}, {2, -1}};
    CHECK(subquotient(k, k).is_trivial());

    auto z = subquotient(IntMatrix::identity(1), IntMatrix(1, 0));
    CHECK(z.free_rank() == 1);

    CHECK_THROWS_AS(subquotient(diag({2, 2}), IntMatrix::identity(2)), ContainmentViolation);
}

TEST_CASE("subquotient with no relations is free of the lattice rank") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        auto k = random_matrix(rng, 4, 1 + rng() % 4, 3);
        auto g = subquotient(k, IntMatrix(4, 0));
        CHECK(g.torsion().empty());
        CHECK(g.free_rank() == rank(k));
    }
}

TEST_CASE("induced_hom examples") {
    auto id = induced_hom(IntMatrix::identity(2), IntMatrix::identity(2), diag({2, 0}), IntMatrix::identity(2),
                          diag({2, 0}));
    CHECK(equal_maps(id, Homomorphism::identity(id.source())));

    auto two = induced_hom(IntMatrix{{2}}, IntMatrix{{1}}, IntMatrix(1, 0), IntMatrix{{1}}, IntMatrix(1, 0));
    CHECK(two.canonical_matrix() == IntMatrix{{2}});

    auto three = induced_hom(IntMatrix{{3}}, IntMatrix{{1}}, IntMatrix(1, 0), IntMatrix{{1}}, IntMatrix{{3}});
    CHECK(three.target().to_string() == "Z/3");
    CHECK(three.is_zero());

    CHECK_THROWS_AS(induced_hom(IntMatrix{{1}}, IntMatrix{{1}}, IntMatrix{{2}}, IntMatrix{{1}}, IntMatrix{{4}}),
                    NotWellDefined);
}

TEST_CASE("induced_hom respects composition") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        // scalar maps a, b on Z with quotients chosen so both are well defined
        const long a = 1 + static_cast<long>(rng() % 5), b = 1 + static_cast<long>(rng() % 5);
        const long n0 = 1 + static_cast<long>(rng() % 4);
        IntMatrix one{{1}};
        IntMatrix i0{{n0}}, i1{{n0 * a}}, i2{{n0 * a * b}};
        auto f = induced_hom(IntMatrix{{a}}, one, i0, one, i1);
        auto g = induced_hom(IntMatrix{{b}}, one, i1, one, i2);
        auto gf = induced_hom(IntMatrix{{a * b}}, one, i0, one, i2);
        CHECK(equal_maps(compose(g, f), gf));
    }
}

TEST_CASE("lattices_equal examples") {
    CHECK_FALSE(lattices_equal(IntMatrix{{2, 0}, {0, 2}}, IntMatrix{{2, 2}, {2, -2}}));
    auto a = IntMatrix{{4, 1}, {-3, 7}};
    CHECK(lattices_equal(a, a));
    CHECK(lattices_equal(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 0}, {1, 1}}));
}

TEST_CASE("lattices_equal agrees with mutual containment under unimodular changes") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_matrix(rng, 3, 3, 4);
        auto u = IntMatrix{{1, 0, 0}, {static_cast<long>(rng() % 5), 1, 0}, {-2, 3, 1}};
        CHECK(lattices_equal(a, a * u));
        auto b = random_matrix(rng, 3, 2, 4);
        CHECK(lattices_equal(a, b) == (lattice_contains(a, b) && lattice_contains(b, a)));
    }
}

TEST_CASE("homomorphism kernel, image, cokernel and exactness") {
    auto z4 = FgAbGroup::from_invariants({4}, 0);
    auto z2 = FgAbGroup::from_invariants({2}, 0);
    Homomorphism inc(z2, z4, IntMatrix{{2}});
    Homomorphism red(z4, z2, IntMatrix{{1}});
    CHECK(inc.is_injective());
    CHECK_FALSE(inc.is_surjective());
    CHECK(red.is_surjective());
    CHECK(red.kernel().to_string() == "Z/2");
    CHECK(inc.cokernel().to_string() == "Z/2");
    CHECK(inc.image().to_string() == "Z/2");
    CHECK(is_exact_at(inc, red));
    CHECK_FALSE(is_exact_at(Homomorphism::zero(z2, z4), red));
    CHECK_THROWS_AS(Homomorphism(z2, FgAbGroup::free(1), IntMatrix{{1}}), NotWellDefined);
}

TEST_CASE("canonical coordinates reduce modulo the orders") {
    auto g = cokernel(IntMatrix{{2, 0}, {0, 3}});  // Z/6
    CHECK(g.to_string() == "Z/6");
    for (long x = -7; x <= 7; ++x) {
        auto c = g.canonical_coordinates({Integer(x), Integer(0)});
        REQUIRE(c.size() == 1);
        CHECK(c[0] >= 0);
        CHECK(c[0] < 6);
        CHECK(g.is_zero({Integer(x), Integer(0)}) == (x % 2 == 0));
    }
}
