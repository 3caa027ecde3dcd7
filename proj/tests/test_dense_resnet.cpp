#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "ndde/dense_resnet.hpp"
#include "ndde/errors.hpp"
#include "ndde/field.hpp"
#include "ndde/neural_dde.hpp"
#include "ndde/solver.hpp"
#include "oracles.hpp"

using namespace ndde;

namespace {

NeuralDDESpec scalar_arch(VectorFieldSpec field, double tau, double T) {
    NeuralDDESpec spec;
    spec.lambda_in = AffineMap::identity(1);
    spec.lambda_out = AffineMap::identity(1);
    spec.field = std::move(field);
    spec.tau = tau;
    spec.T = T;
    return spec;
}

DelayFunctionSpec named_delay(DelayKind kind, int j, double delta, double tau, double T) {
    DelayFunctionSpec s;
    s.kind = kind;
    s.j = j;
    s.delta = delta;
    s.tau = tau;
    s.T = T;
    return s;
}

// Scalar field reading three grid-aligned delays, weighted so each delayed
// argument is distinguishable in hand checks:
//   F(t, y_t) = theta(t) * (y(t) + 2 y_A + 3 y_B + 4 y_C),  theta = cos.
VectorFieldSpec three_delay_field(double delta, double tau, double T) {
    const auto a1 = named_delay(DelayKind::A, 1, delta, tau, T);
    const auto b2 = named_delay(DelayKind::B, 2, delta, tau, T);
    const auto c1 = named_delay(DelayKind::C, 1, delta, tau, T);
    VectorFieldSpec f;
    f.m = 1;
    f.tau = tau;
    f.K = 10.0;
    f.A = 0.0;
    f.delays = {a1, b2, c1};
    f.eval = [a1, b2, c1](double t, const HistoryView& y) {
        const double cur = y.at_offset(0.0)[0];
        const double ya = y.at_offset(-delay_eval(a1, t))[0];
        const double yb = y.at_offset(-delay_eval(b2, t))[0];
        const double yc = y.at_offset(-delay_eval(c1, t))[0];
        return Vec{std::cos(t) * (cur + 2.0 * ya + 3.0 * yb + 4.0 * yc)};
    };
    return f;
}

}  // namespace

TEST_CASE("discretize exposes layer count, step, and width") {
    const auto spec = scalar_arch(linear_delay_field(-2.0, 1.0), 1.0, 1.0);
    const DenseResNetSpec net = discretize(spec, 10);
    CHECK(net.layers() == 10);
    CHECK(net.delta() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(net.width() == 1);
    REQUIRE(net.table.labels.size() == 1);
    CHECK(net.table.labels[0] == "const");
    CHECK(net.delayed_index(0, 0) == -10);
    CHECK(net.delayed_index(10, 0) == 0);
}

TEST_CASE("forward pass equals the solver bit for bit on the sign-flip example") {
    const auto spec = scalar_arch(linear_delay_field(-2.0, 1.0), 1.0, 1.0);
    const DenseResNetSpec net = discretize(spec, 10);
    const Vec dense = dense_forward(net, Vec{1.0});
    const Trajectory tr = euler_solve(spec.field, Vec{1.0}, net.grid);
    CHECK(dense[0] == tr.final_state()[0]);
    CHECK(std::abs(dense[0] + 1.0) <= 1e-12);
}

TEST_CASE("forward pass equals the solver bit for bit on random architectures") {
    oracle::TestRng rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t m = static_cast<std::size_t>(rng.uniform_int(1, 3));
        const int L = rng.uniform_int(8, 64);
        const int R = rng.uniform_int(0, L / 4);
        const double T = rng.uniform_in(0.5, 2.0);
        const double tau = R * (T / L);
        VectorFieldSpec field = (trial % 2 == 0)
                                    ? linear_delay_field(rng.uniform_in(-2.0, 2.0), tau, m)
                                    : tanh_delay_field(rng.uniform_in(-2.0, 2.0),
                                                       rng.uniform_in(-1.0, 1.0), tau, m);
        NeuralDDESpec spec;
        spec.lambda_in = AffineMap::identity(m);
        spec.lambda_out = AffineMap::identity(m);
        spec.field = field;
        spec.tau = tau;
        spec.T = T;

        Vec h0(m);
        for (auto& x : h0) x = rng.uniform_in(-1.0, 1.0);

        const DenseResNetSpec net = discretize(spec, L);
        const Vec dense = dense_forward(net, h0);
        const Trajectory tr = euler_solve(field, h0, net.grid);
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(dense[i] == tr.final_state()[i]);  // exact equality, not approx
        }
    }
}

TEST_CASE("three-delay network wires each layer to the tabulated arguments") {
    const double T = 1.0, tau = 0.375;
    const int L = 8;
    const double delta = T / L;
    const auto spec = scalar_arch(three_delay_field(delta, tau, T), tau, T);
    const DenseResNetSpec net = discretize(spec, L);

    // Index rows match the hand-computed table.
    const std::vector<int> a1 = {-1, 0, 1, 2, 3, 4, 5, 6, 7};
    const std::vector<int> b2 = {0, 1, 0, 1, 2, 3, 4, 5, 6};
    const std::vector<int> c1 = {0, 1, 1, 1, 1, 2, 3, 4, 5};
    for (int l = 0; l <= L; ++l) {
        CHECK(net.delayed_index(l, 0) == a1[static_cast<std::size_t>(l)]);
        CHECK(net.delayed_index(l, 1) == b2[static_cast<std::size_t>(l)]);
        CHECK(net.delayed_index(l, 2) == c1[static_cast<std::size_t>(l)]);
    }

    // Layer 2 reads (h_2, h_1, h_0, h_1); verify the update against a direct
    // evaluation with those stack entries.
    std::vector<Vec> h = {{0.7}, {-0.3}, {1.1}};
    const Vec upd = net.layer_update(2, h);
    const double t2 = 2 * delta;
    const double expect = delta * std::cos(t2) * (1.1 + 2.0 * (-0.3) + 3.0 * 0.7 + 4.0 * (-0.3));
    CHECK(upd[0] == doctest::Approx(expect).epsilon(1e-15));

    // Layer 5 reads (h_5, h_4, h_3, h_2).
    std::vector<Vec> h6 = {{0.1}, {0.2}, {0.3}, {0.4}, {0.5}, {0.6}};
    const Vec upd5 = net.layer_update(5, h6);
    const double t5 = 5 * delta;
    const double expect5 = delta * std::cos(t5) * (0.6 + 2.0 * 0.5 + 3.0 * 0.4 + 4.0 * 0.3);
    CHECK(upd5[0] == doctest::Approx(expect5).epsilon(1e-15));
}

TEST_CASE("layer updates never read entries above their own layer") {
    const double T = 1.0, tau = 0.375;
    const int L = 8;
    const auto spec = scalar_arch(three_delay_field(T / L, tau, T), tau, T);
    const DenseResNetSpec net = discretize(spec, L);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<Vec> h = {{0.7}, {-0.3}, {1.1}, {nan}, {nan}, {nan}, {nan}, {nan}, {nan}};
    const Vec upd = net.layer_update(2, h);
    CHECK(std::isfinite(upd[0]));
}

TEST_CASE("a field peeking at the future is stopped") {
    VectorFieldSpec f = zero_field(1);
    f.eval = [](double, const HistoryView& y) { return Vec{y.at_offset(0.125)[0]}; };
    NeuralDDESpec spec;
    spec.lambda_in = AffineMap::identity(1);
    spec.lambda_out = AffineMap::identity(1);
    spec.field = f;
    spec.tau = 0.0;
    spec.T = 1.0;
    const DenseResNetSpec net = discretize(spec, 8);
    std::vector<Vec> h = {{1.0}, {2.0}, {3.0}};
    CHECK_THROWS_AS(net.layer_update(2, h), DomainError);
}

TEST_CASE("report renders the index rows as layer references") {
    const double T = 1.0, tau = 0.375;
    const int L = 8;
    const auto spec = scalar_arch(three_delay_field(T / L, tau, T), tau, T);
    const DenseResNetSpec net = discretize(spec, L);
    const std::string rep = net.report();
    CHECK(rep.find("layers L = 8") != std::string::npos);
    CHECK(rep.find("width m = 1") != std::string::npos);
    CHECK(rep.find("A1: y-1 y0 y1 y2 y3 y4 y5 y6 y7") != std::string::npos);
    CHECK(rep.find("B2: y0 y1 y0 y1 y2 y3 y4 y5 y6") != std::string::npos);
    CHECK(rep.find("C1: y0 y1 y1 y1 y1 y2 y3 y4 y5") != std::string::npos);
}

TEST_CASE("forward pass equals the solver on the three-delay network too") {
    const double T = 1.0, tau = 0.375;
    const int L = 8;
    const auto spec = scalar_arch(three_delay_field(T / L, tau, T), tau, T);
    const DenseResNetSpec net = discretize(spec, L);
    const Vec dense = dense_forward(net, Vec{0.9});
    const Trajectory tr = euler_solve(spec.field, Vec{0.9}, net.grid);
    CHECK(dense[0] == tr.final_state()[0]);
}

TEST_CASE("discretize refuses delays that do not land on the grid") {
    const auto spec = scalar_arch(linear_delay_field(-1.0, 0.3), 0.3, 1.0);
    CHECK_THROWS_AS(discretize(spec, 8), AlignmentError);  // 0.3 not a multiple of 1/8
    CHECK(discretize(spec, 10).layers() == 10);
}

TEST_CASE("layer update validates its inputs") {
    const auto spec = scalar_arch(linear_delay_field(-1.0, 0.5), 0.5, 1.0);
    const DenseResNetSpec net = discretize(spec, 8);
    std::vector<Vec> h = {{1.0}};
    CHECK_THROWS_AS(net.layer_update(-1, h), DomainError);
    CHECK_THROWS_AS(net.layer_update(8, h), DomainError);
    CHECK_THROWS_AS(net.layer_update(3, h), DimensionError);  // stack too short
    std::vector<Vec> wide = {{1.0, 2.0}};
    CHECK_THROWS_AS(net.layer_update(0, wide), DimensionError);
}
