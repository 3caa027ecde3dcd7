#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ndde/errors.hpp"
#include "ndde/field.hpp"
#include "ndde/morse.hpp"
#include "ndde/solver.hpp"
#include "oracles.hpp"

using namespace ndde;

namespace {

Matrix from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix M(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) M(i, j) = rows[i][j];
    return M;
}

double two_norm_diff(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("normal form: value splits into negative and positive squares") {
    CHECK(normal_form_eval(0.0, 0, 1, {0.3}) == doctest::Approx(0.09).epsilon(1e-15));
    CHECK(normal_form_eval(2.5, 0, 2, {0.0, 0.0}) == 2.5);
    CHECK(normal_form_eval(1.0, 1, 2, {0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(normal_form_eval(0.0, 2, 2, {0.5, 0.5}) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK_THROWS_AS(normal_form_eval(0.0, 3, 2, {0.5, 0.5}), DomainError);
    CHECK_THROWS_AS(normal_form_eval(0.0, -1, 2, {0.5, 0.5}), DomainError);
    CHECK_THROWS_AS(normal_form_eval(0.0, 1, 2, {0.5}), DimensionError);
}

TEST_CASE("normal form: extrema of definite indices sit on the sphere") {
    oracle::TestRng rng(61);
    const double r0 = 0.8;
    const std::size_t n = 3;
    for (int i = 0; i < 1000; ++i) {
        Vec u(n);
        double norm2 = 0.0;
        for (auto& x : u) {
            x = rng.uniform_in(-1.0, 1.0);
            norm2 += x * x;
        }
        const double scale = rng.uniform_in(0.0, r0) / std::sqrt(std::max(norm2, 1e-300));
        for (auto& x : u) x *= scale;

        // index 0: minimum at the centre, maximum value r0^2 on the sphere
        const double v_min = normal_form_eval(1.0, 0, n, u);
        CHECK(v_min >= 1.0);
        CHECK(v_min <= 1.0 + r0 * r0 + 1e-12);
        // index n: maximum at the centre
        const double v_max = normal_form_eval(1.0, static_cast<int>(n), n, u);
        CHECK(v_max <= 1.0);
        CHECK(v_max >= 1.0 - r0 * r0 - 1e-12);
    }
    Vec boundary(n, 0.0);
    boundary[0] = r0;
    CHECK(normal_form_eval(1.0, 0, n, boundary) == doctest::Approx(1.0 + r0 * r0).epsilon(1e-14));
    CHECK(normal_form_eval(1.0, static_cast<int>(n), n, boundary) ==
          doctest::Approx(1.0 - r0 * r0).epsilon(1e-14));
}

TEST_CASE("critical point classifier recovers the index of definite quadratics") {
    const ScalarFn bowl = [](const Vec& x) { return x[0] * x[0] + 2.0 * x[1] * x[1]; };
    const CriticalPointReport rep = classify_critical_point(bowl, {0.0, 0.0}, 1e-4);
    CHECK(rep.critical);
    CHECK(rep.nondegenerate);
    CHECK(rep.index == 0);
    REQUIRE(rep.eigenvalues.size() == 2);
    CHECK(rep.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(rep.eigenvalues[1] == doctest::Approx(4.0).epsilon(1e-5));
    CHECK(rep.hessian_eigen_signs == std::vector<int>{1, 1});

    const ScalarFn dome = [](const Vec& x) { return -(x[0] * x[0] + x[1] * x[1]); };
    CHECK(classify_critical_point(dome, {0.0, 0.0}, 1e-4).index == 2);

    const ScalarFn saddle = [](const Vec& x) { return x[0] * x[0] - x[1] * x[1]; };
    const CriticalPointReport srep = classify_critical_point(saddle, {0.0, 0.0}, 1e-4);
    CHECK(srep.index == 1);
    CHECK(srep.hessian_eigen_signs == std::vector<int>{-1, 1});
}

TEST_CASE("classifier is honest about non-critical and degenerate points") {
    const ScalarFn slope = [](const Vec& x) { return x[0]; };
    const CriticalPointReport rep = classify_critical_point(slope, {0.0}, 1e-4);
    CHECK_FALSE(rep.critical);
    CHECK(rep.gradient_norm == doctest::Approx(1.0).epsilon(1e-8));

    const ScalarFn quartic = [](const Vec& x) { return x[0] * x[0] * x[0] * x[0]; };
    const CriticalPointReport qrep = classify_critical_point(quartic, {0.0}, 1e-4);
    CHECK(qrep.critical);
    CHECK_FALSE(qrep.nondegenerate);
    CHECK(qrep.hessian_eigen_signs == std::vector<int>{0});

    CHECK_THROWS_AS(classify_critical_point(slope, {0.0}, 0.0), ConfigError);
}

TEST_CASE("classifier handles offset minima of shifted quadratics") {
    const Vec p{0.2, -0.3};
    const ScalarFn qm = [p](const Vec& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) s += (x[i] - p[i]) * (x[i] - p[i]);
        return s;
    };
    const CriticalPointReport rep = classify_critical_point(qm, p, 1e-4, 1.0);
    CHECK(rep.critical);
    CHECK(rep.index == 0);
    CHECK(rep.r0 == 1.0);
    const CriticalPointReport off = classify_critical_point(qm, {0.5, 0.5}, 1e-4);
    CHECK_FALSE(off.critical);
}

TEST_CASE("separation ledger matches the hand-derived values at the canonical inputs") {
    const oracle::FrozenSeparation frozen;
    const SeparationConstants c =
        separation_constants(1.0, 0.0, 1.0, 1.0, 1.0, 0.25, 0.1, 1.0, 1.0, 0.5);
    CHECK(c.C1 == doctest::Approx(frozen.C1).epsilon(1e-12));
    CHECK(c.delta_star == doctest::Approx(frozen.dstar).epsilon(1e-12));
    CHECK(c.tau3 == doctest::Approx(frozen.tau3).epsilon(1e-12));
    CHECK(c.kappa == doctest::Approx(frozen.kappa).epsilon(1e-12));
    CHECK(c.beta == doctest::Approx(frozen.beta).epsilon(1e-12));
    CHECK(c.tau1 == doctest::Approx(frozen.tau1).epsilon(1e-12));
    CHECK(c.tau0 == doctest::Approx(frozen.tau1).epsilon(1e-12));  // tau1 binds here
    CHECK(c.delta1 == doctest::Approx(c.C1 * c.beta * c.tau0).epsilon(1e-12));
    CHECK(c.delta2 == doctest::Approx(c.C2 * std::exp(-c.beta)).epsilon(1e-12));
    CHECK(c.delta3 == doctest::Approx(c.C2 * std::exp(-c.T / c.tau3)).epsilon(1e-12));
    CHECK(c.kappa <= c.r1);
    CHECK(c.K * c.tau0 * std::exp(1.0) < 1.0);
    CHECK(c.tau0 <= 1.0 / (c.K * std::exp(1.0)));
}

TEST_CASE("separation ledger serializes with an input echo") {
    const SeparationConstants c =
        separation_constants(1.0, 0.0, 1.0, 1.0, 1.0, 0.25, 0.1, 1.0, 1.0, 0.5);
    const nlohmann::json j = c.to_json();
    CHECK(j.contains("tau0"));
    CHECK(j.contains("delta1"));
    CHECK(j.contains("inputs"));
    CHECK(j["inputs"]["K"] == 1.0);
    CHECK(j["inputs"]["C2"] == 0.5);
    CHECK(j["tau0"].get<double>() == c.tau0);
}

TEST_CASE("memory smallness survives across a parameter grid") {
    for (int i = 0; i < 20; ++i) {
        for (int k = 0; k < 20; ++k) {
            const double K = 0.1 + 4.9 * i / 19.0;
            const double eps = 0.4 * k / 19.0;
            const SeparationConstants c =
                separation_constants(K, 0.0, 1.0, 1.0, 1.0, 0.25, eps, 1.0, 1.0, 0.5);
            CHECK(c.K * c.tau0 * std::exp(1.0) < 1.0);
            CHECK(c.tau0 > 0.0);
            CHECK(c.beta > 0.0);
        }
    }
}

TEST_CASE("stronger feedback shortens the admissible delay") {
    const SeparationConstants a =
        separation_constants(1.0, 0.0, 1.0, 1.0, 1.0, 0.25, 0.1, 1.0, 1.0, 0.5);
    const SeparationConstants b =
        separation_constants(2.0, 0.0, 1.0, 1.0, 1.0, 0.25, 0.1, 1.0, 1.0, 0.5);
    CHECK(b.tau0 < a.tau0);
}

TEST_CASE("the admissible window closes as the level gap degenerates") {
    double prev_tau3 = 1e9, prev_dstar = 1e9;
    for (double eps : {0.49, 0.499, 0.4999}) {
        const SeparationConstants c =
            separation_constants(1.0, 0.0, 1.0, 1.0, 1.0, 0.25, eps, 1.0, 1.0, 0.5);
        CHECK(c.delta_star > 0.0);
        CHECK(c.tau3 > 0.0);
        CHECK(c.delta_star < prev_dstar);
        CHECK(c.tau3 < prev_tau3);
        prev_dstar = c.delta_star;
        prev_tau3 = c.tau3;
    }
}

TEST_CASE("separation preconditions are enforced") {
    CHECK_THROWS_AS(separation_constants(1.0, 0.0, 1.0, 1.0, 1.0, 0.25, 0.5, 1.0, 1.0, 0.5),
                    ConfigError);  // 2 eps = r0^2
    CHECK_THROWS_AS(separation_constants(1.0, 0.0, 1.0, 1.0, 1.0, 0.25, 0.1, 1.0, 1.0, 0.1),
                    ConfigError);  // C2 < r1/2
    CHECK_THROWS_AS(separation_constants(0.0, 0.0, 1.0, 1.0, 1.0, 0.25, 0.1, 1.0, 1.0, 0.5),
                    ConfigError);
    CHECK_THROWS_AS(separation_constants(1.0, 0.0, 0.0, 1.0, 1.0, 0.25, 0.1, 1.0, 1.0, 0.5),
                    ConfigError);
    CHECK_THROWS_AS(separation_constants(1.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.1, 1.0, 1.0, 0.5),
                    ConfigError);
}

TEST_CASE("euler displacement over the admissible window stays within the bound") {
    // For the canonical ledger the time-t* map with t* = beta*tau0 moves any
    // state of magnitude <= M by at most delta1 = C1*beta*tau0. Check it on
    // the linear feedback field with K0 = -K.
    const SeparationConstants c =
        separation_constants(1.0, 0.0, 1.0, 1.0, 1.0, 0.25, 0.1, 1.0, 1.0, 0.5);
    const double t_star = c.beta * c.tau0;
    const int R = 10;
    const double delta = c.tau0 / R;
    const int L = static_cast<int>(std::ceil(t_star / delta));
    const TimeGrid g{0.0, delta, L, R};
    const auto field = linear_delay_field(-c.K, c.tau0);
    oracle::TestRng rng(67);
    for (int i = 0; i < 20; ++i) {
        const double y0 = rng.uniform_in(-c.M, c.M);
        const Trajectory tr = euler_solve(field, Vec{y0}, g);
        CHECK(std::abs(tr.final_state()[0] - y0) <= c.delta1 + 1e-9);
    }
}

TEST_CASE("rank-deficient read-ins admit indistinguishable inputs at distance r0") {
    const Matrix W = from_rows({{1.0, 1.0}, {1.0, 1.0}});
    const Vec p{0.3, -0.2};
    const auto s = rank_deficient_witness(W, p, 1.0);
    REQUIRE(s.has_value());
    CHECK(two_norm_diff(*s, p) == doctest::Approx(1.0).epsilon(1e-12));
    const Vec Ws = W.apply(*s);
    const Vec Wp = W.apply(p);
    CHECK(inf_norm_diff(Ws, Wp) <= 1e-10);

    CHECK_FALSE(rank_deficient_witness(Matrix::scaled_identity(2, 2, 1.0), p, 1.0).has_value());
    CHECK_THROWS_AS(rank_deficient_witness(W, p, 0.0), ConfigError);
    CHECK_THROWS_AS(rank_deficient_witness(W, Vec{1.0}, 1.0), DimensionError);
    CHECK_THROWS_AS(rank_deficient_witness(from_rows({{1.0, 2.0}}), Vec{0.0, 0.0}, 1.0),
                    DimensionError);  // not square
}

TEST_CASE("witnesses exist for random rank-one read-ins of any size") {
    oracle::TestRng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 5));
        Vec a(n), b(n), p(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = rng.uniform_in(-1.0, 1.0);
            b[i] = rng.uniform_in(-1.0, 1.0);
            p[i] = rng.uniform_in(-1.0, 1.0);
        }
        a[0] += a[0] >= 0 ? 0.5 : -0.5;  // keep the dyad nonzero
        b[0] += b[0] >= 0 ? 0.5 : -0.5;
        Matrix W(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) W(i, j) = a[i] * b[j];
        const double r0 = rng.uniform_in(0.1, 2.0);
        const auto s = rank_deficient_witness(W, p, r0);
        REQUIRE(s.has_value());
        CHECK(two_norm_diff(*s, p) == doctest::Approx(r0).epsilon(1e-10));
        CHECK(inf_norm_diff(W.apply(*s), W.apply(p)) <= 1e-10);
    }
}
