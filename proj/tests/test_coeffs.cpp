#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "pdm/coeffs.hpp"
#include "pdm/special.hpp"

using namespace pdm;
using namespace pdm::coeffs;

namespace {

// Brute-force oracle: walk every one of the 2^nu step sequences of +-1 moves
// starting at level l, reject any that touch -1, and tally by the number of
// down-steps.  Exponential, but cheap at nu <= 10.
std::vector<double> enumerate_paths(int l, int nu) {
    std::vector<double> count(static_cast<size_t>(nu) + 1, 0.0);
    for (unsigned mask = 0; mask < (1u << nu); ++mask) {
        int level = l, downs = 0;
        bool ok = true;
        for (int s = 0; s < nu && ok; ++s) {
            if (mask & (1u << s)) {
                --level;
                ++downs;
            } else {
                ++level;
            }
            ok = level >= 0;
        }
        if (ok) count[static_cast<size_t>(downs)] += 1.0;
    }
    return count;
}

double sq(double v) { return v * v; }

}  // namespace

TEST_CASE("admissible path counts match exhaustive enumeration up to ten steps") {
    for (int l = 0; l <= 10; ++l)
        for (int nu = 0; nu <= 10; ++nu) {
            const auto ref = enumerate_paths(l, nu);
            for (int mu = 0; mu <= nu; ++mu)
                CHECK(x_factor(l, nu, mu) == ref[static_cast<size_t>(mu)]);
        }
}

TEST_CASE("path counts reduce to binomials when the floor is out of reach") {
    for (int nu = 0; nu <= 10; ++nu)
        for (int l = nu; l <= nu + 3; ++l)
            for (int mu = 0; mu <= nu; ++mu)
                CHECK(x_factor(l, nu, mu) == x_factor_unrestricted(nu, mu));
}

TEST_CASE("path counts from level zero are the ballot numbers") {
    for (int nu = 0; nu <= 10; ++nu)
        for (int mu = 0; mu <= nu; ++mu)
            CHECK(x_factor(0, nu, mu) == x_factor_floor(nu, mu));
}

TEST_CASE("single-step path counts carry the level-zero gate") {
    CHECK(x_factor(0, 1, 0) == 1.0);
    CHECK(x_factor(0, 1, 1) == 0.0);
    for (int l = 1; l <= 5; ++l) {
        CHECK(x_factor(l, 1, 0) == 1.0);
        CHECK(x_factor(l, 1, 1) == 1.0);
    }
}

TEST_CASE("zero-mode mixing coefficients reproduce hand-computed low levels") {
    const auto a0 = a_coeffs(1.0, 0);
    REQUIRE(a0.size() == 1);
    CHECK(a0[0] == doctest::Approx(1.0).epsilon(1e-14));

    // N0 = 2: a_1 = -3/(2k+5) * ... reduced by hand to -1.5/(k+2.5)
    for (double k : {0.7, 1.0, 2.5}) {
        const auto a2 = a_coeffs(k, 2);
        REQUIRE(a2.size() == 2);
        CHECK(a2[0] == doctest::Approx(-1.5 / (k + 2.5)).epsilon(1e-13));
        CHECK(a2[1] == doctest::Approx(1.0).epsilon(1e-14));
    }

    // N0 = 4 at k = 1: {5/33, -10/11, 1}
    const auto a4 = a_coeffs(1.0, 4);
    REQUIRE(a4.size() == 3);
    CHECK(a4[0] == doctest::Approx(5.0 / 33.0).epsilon(1e-13));
    CHECK(a4[1] == doctest::Approx(-10.0 / 11.0).epsilon(1e-13));
    CHECK(a4[2] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("mixing coefficients alternate in sign from the top entry down") {
    for (double k : {0.7, 1.8})
        for (int N0 = 0; N0 <= 12; N0 += 2) {
            const auto a = a_coeffs(k, N0);
            for (size_t i = 0; i < a.size(); ++i) {
                const int expected = ((a.size() - 1 - i) % 2 == 0) ? 1 : -1;
                CHECK(a[i] * expected > 0.0);
            }
        }
}

TEST_CASE("lowest-state expansion coefficients are positive and normalized") {
    for (double k : {0.7, 1.0, 2.5})
        for (int N0 = 0; N0 <= 12; N0 += 2) {
            double norm = 0.0;
            for (int n = 0; n <= N0 / 2; ++n) {
                const double x = X_coeff(k, N0, n);
                CHECK(x > 0.0);
                norm += sq(x);
            }
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("normalization sum agrees with its closed form far past the test range") {
    for (double k : {0.7, 1.0, 2.5})
        for (int N0 = 0; N0 <= 20; N0 += 2) {
            const double direct = S_sum(k, N0);
            const double closed = S_sum_closed(k, N0);
            CHECK(direct == doctest::Approx(closed).epsilon(1e-12));
        }
}

TEST_CASE("single-step chain coefficients equal the raising pair") {
    for (double k : {0.7, 1.3})
        for (int n = 0; n <= 3; ++n)
            for (int l = 0; l <= 3; ++l) {
                const auto pair = ladder_coeffs(2.0, k, n, l, Ladder::raise);
                // mu = 1 lowers l, mu = 0 raises it
                CHECK(Y_coeff(2.0, k, n, l, 1, 1) == doctest::Approx(pair.first).epsilon(1e-13));
                CHECK(Y_coeff(2.0, k, n, l, 1, 0) == doctest::Approx(pair.second).epsilon(1e-13));
            }
}

TEST_CASE("two-step chain coefficients compose from two single raising steps") {
    // The closed nu-step formula must agree with explicitly chaining single
    // steps, minding that the first step acts at deformation k+1.
    const double q = 1.0;
    for (double k : {0.8, 1.0, 2.2})
        for (int n = 0; n <= 2; ++n)
            for (int l = 0; l <= 3; ++l) {
                // target accumulator indexed by mu = 0, 1, 2
                double acc[3] = {0.0, 0.0, 0.0};
                const auto first = ladder_coeffs(q, k + 1, n, l, Ladder::raise);
                // branch (n+1, l-1)
                if (l >= 1) {
                    const auto second = ladder_coeffs(q, k, n + 1, l - 1, Ladder::raise);
                    acc[2] += first.first * second.first;   // up in n twice
                    acc[1] += first.first * second.second;  // back up in l
                }
                // branch (n, l+1)
                {
                    const auto second = ladder_coeffs(q, k, n, l + 1, Ladder::raise);
                    acc[1] += first.second * second.first;
                    acc[0] += first.second * second.second;
                }
                for (int mu = 0; mu <= 2; ++mu)
                    CHECK(Y_coeff(q, k, n, l, 2, mu) ==
                          doctest::Approx(acc[mu]).epsilon(1e-12).scale(1.0));
            }
}

TEST_CASE("chain coefficients scale as the nu-th power of the length scale") {
    for (int nu = 0; nu <= 4; ++nu) {
        const double base = Y_coeff(1.0, 1.2, 1, 2, nu, std::min(1, nu));
        const double scaled = Y_coeff(3.0, 1.2, 1, 2, nu, std::min(1, nu));
        CHECK(scaled == doctest::Approx(std::pow(3.0, nu) * base).epsilon(1e-13));
    }
}

TEST_CASE("chain normalization is trivial at zero steps and scales as 1/q^nu") {
    CHECK(Nbar(2.0, 1.5, 4, 4) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(Nbar(1.0, 1.5, 3, 0) * std::pow(2.0, -3) ==
          doctest::Approx(Nbar(2.0, 1.5, 3, 0)).epsilon(1e-13));
    // one step: the squared norm of the raised state is the invariant gap
    for (double k : {0.7, 1.0, 2.5})
        CHECK(Nbar(1.0, k, 1, 0) == doctest::Approx(1.0 / std::sqrt(2.0 * k + 1.0)).epsilon(1e-13));
}

TEST_CASE("transform rows reproduce the closed-form low-level states") {
    for (double k : {0.7, 1.0, 2.5}) {
        // trivial levels
        {
            const auto z = Z_row(k, 0, 0);
            REQUIRE(z.size() == 1);
            CHECK(z[0] == doctest::Approx(1.0).epsilon(1e-12));
        }
        {
            const auto z = Z_row(k, 1, 0);
            REQUIRE(z.size() == 1);
            CHECK(z[0] == doctest::Approx(1.0).epsilon(1e-12));
        }
        // top rows of the chain family
        {
            const auto z = Z_row(k, 2, 2);
            REQUIRE(z.size() == 2);
            const double c = 1.0 / (2.0 * std::sqrt(k + 1.0));
            CHECK(z[0] == doctest::Approx(c * std::sqrt(k + 2.5)).epsilon(1e-12));
            CHECK(z[1] == doctest::Approx(c * std::sqrt(3.0 * (k + 0.5))).epsilon(1e-12));
        }
        {
            const auto z = Z_row(k, 4, 4);
            REQUIRE(z.size() == 3);
            const double c = 1.0 / (4.0 * std::sqrt((k + 1.0) * (k + 2.0)));
            CHECK(z[0] == doctest::Approx(c * std::sqrt((k + 3.5) * (k + 4.5))).epsilon(1e-12));
            CHECK(z[1] ==
                  doctest::Approx(c * std::sqrt(5.0 * (k + 0.5) * (k + 3.5))).epsilon(1e-12));
            CHECK(z[2] ==
                  doctest::Approx(c * std::sqrt(10.0 * (k + 0.5) * (k + 1.5))).epsilon(1e-12));
        }
        // ground-family rows
        {
            const auto z = Z_row(k, 2, 0);
            REQUIRE(z.size() == 2);
            const double c = 1.0 / (2.0 * std::sqrt(k + 1.0));
            CHECK(z[0] == doctest::Approx(-c * std::sqrt(3.0 * (k + 0.5))).epsilon(1e-12));
            CHECK(z[1] == doctest::Approx(c * std::sqrt(k + 2.5)).epsilon(1e-12));
        }
        {
            const auto z = Z_row(k, 3, 0);
            REQUIRE(z.size() == 2);
            const double c = 1.0 / std::sqrt(2.0 * (k + 2.0));
            CHECK(z[0] == doctest::Approx(-c * std::sqrt(k + 0.5)).epsilon(1e-12));
            CHECK(z[1] == doctest::Approx(c * std::sqrt(k + 3.5)).epsilon(1e-12));
        }
        {
            const auto z = Z_row(k, 4, 0);
            REQUIRE(z.size() == 3);
            const double c = 1.0 / (4.0 * std::sqrt((k + 2.0) * (k + 3.0)));
            CHECK(z[0] ==
                  doctest::Approx(c * std::sqrt(5.0 * (k + 0.5) * (k + 1.5))).epsilon(1e-12));
            CHECK(z[1] ==
                  doctest::Approx(-3.0 * c * std::sqrt((k + 1.5) * (k + 4.5))).epsilon(1e-12));
            CHECK(z[2] ==
                  doctest::Approx(c * std::sqrt(2.0 * (k + 3.5) * (k + 4.5))).epsilon(1e-12));
        }
    }
}

TEST_CASE("general transform route equals the closed ground-family form") {
    for (double k : {0.7, 1.0, 2.5})
        for (int N = 0; N <= 8; ++N) {
            const auto a = Z_row(k, N, 0);
            const auto b = Z_row_ground(k, N);
            REQUIRE(a.size() == b.size());
            for (size_t i = 0; i < a.size(); ++i)
                CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12).scale(1.0));
        }
}

TEST_CASE("transform matrices are orthogonal at every level up to eight") {
    for (double k : {0.7, 1.0, 2.5})
        for (int N = 0; N <= 8; ++N) {
            const auto T = TransformMatrix::build(k, N);
            REQUIRE(static_cast<int>(T.rows.size()) == N / 2 + 1);
            CHECK(T.orthogonality_residual() < 1e-10);
        }
}

TEST_CASE("top transform row at a level is the lowest-state expansion itself") {
    // nu = 0: no chain steps, so the row must collapse onto the X coefficients
    for (double k : {0.9, 2.1})
        for (int N0 = 0; N0 <= 8; N0 += 2) {
            const auto z = Z_row(k, N0, N0);
            for (int n = 0; n <= N0 / 2; ++n)
                CHECK(z[static_cast<size_t>(n)] ==
                      doctest::Approx(X_coeff(k, N0, n)).epsilon(1e-13));
        }
}

TEST_CASE("chain normalization cancels the length-scale powers of the chain") {
    for (double k : {0.9, 1.7})
        for (int N = 1; N <= 5; ++N)
            for (int N0 = 0; N0 <= N; N0 += 2) {
                const int nu = N - N0;
                const double at_q1 = Nbar(1.0, k, N, N0) * Y_coeff(1.0, k, 0, N0, nu, 0);
                const double at_q3 = Nbar(3.0, k, N, N0) * Y_coeff(3.0, k, 0, N0, nu, 0);
                CHECK(at_q1 == doctest::Approx(at_q3).epsilon(1e-13));
            }
}

TEST_CASE("ladder coefficient gates: ground state and edge of the wedge") {
    const auto ground = ladder_coeffs(1.0, 1.0, 0, 0, Ladder::lower);
    CHECK(ground.first == 0.0);
    CHECK(ground.second == 0.0);
    // l = 0 blocks the l-lowering branch in both directions
    CHECK(ladder_coeffs(1.0, 1.5, 2, 0, Ladder::lower).second == 0.0);
    CHECK(ladder_coeffs(1.0, 1.5, 2, 0, Ladder::raise).first == 0.0);
    // n = 0 blocks the n-lowering branch
    CHECK(ladder_coeffs(1.0, 1.5, 0, 3, Ladder::lower).first == 0.0);
}

TEST_CASE("chain phase is a strict parity of an integer exponent") {
    for (int n = 0; n <= 2; ++n)
        for (int l = 0; l <= 3; ++l)
            for (int nu = 0; nu <= 4; ++nu)
                for (int mu = 0; mu <= nu; ++mu) {
                    const double y = Y_coeff(1.0, 1.0, n, l, nu, mu);
                    if (y == 0.0) continue;
                    const long long N = 2LL * n + l;
                    const long long e = nu * N + static_cast<long long>(nu) * (nu + 1) / 2 + mu;
                    const double expected_sign = (e % 2 == 0) ? 1.0 : -1.0;
                    CHECK(y * expected_sign > 0.0);
                }
}

TEST_CASE("invalid coefficient arguments are rejected") {
    CHECK_THROWS_AS(a_coeffs(1.0, 3), std::domain_error);
    CHECK_THROWS_AS(a_coeffs(-1.0, 2), std::domain_error);
    CHECK_THROWS_AS(Z_row(1.0, 2, 4), std::domain_error);
    CHECK_THROWS_AS(Z_row(1.0, 4, 3), std::domain_error);
    CHECK_THROWS_AS(X_coeff(1.0, 4, 3), std::domain_error);
    CHECK_THROWS_AS(x_factor(-1, 2, 0), std::domain_error);
}
