#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wbpose/signal.hpp"

using namespace wbpose;

namespace {

std::vector<Vec3> sine_track(double freq_hz, double amplitude, double fs, size_t n) {
    std::vector<Vec3> track(n);
    for (size_t i = 0; i < n; ++i)
        track[i] = {amplitude * std::sin(2.0 * std::numbers::pi * freq_hz * i / fs), 0.0, 0.0};
    return track;
}

double trimmed_amplitude(const std::vector<Vec3>& track, size_t trim) {
    double peak = 0.0;
    for (size_t i = trim; i + trim < track.size(); ++i) peak = std::max(peak, std::abs(track[i].x));
    return peak;
}

}  // namespace

TEST_CASE("constant trajectories pass through unchanged") {
    const std::vector<Vec3> track(64, Vec3{0.3, -1.7, 2.5});
    const auto out = lowpass(track, 100.0, {});
    for (const Vec3& p : out) {
        CHECK(std::abs(p.x - 0.3) <= 1e-9 * 0.3);
        CHECK(std::abs(p.y + 1.7) <= 1e-9 * 1.7);
        CHECK(std::abs(p.z - 2.5) <= 1e-9 * 2.5);
    }
}

TEST_CASE("passband and cutoff amplitudes match the analytic response") {
    // Forward-backward squares the magnitude: |H|^2 = 1/(1 + (f/fc)^4).
    const auto slow = lowpass(sine_track(0.2, 1.0, 100.0, 3000), 100.0, {});
    CHECK(trimmed_amplitude(slow, 500) >= 0.99);

    const auto at_cutoff = lowpass(sine_track(1.5, 1.0, 100.0, 2000), 100.0, {});
    CHECK(trimmed_amplitude(at_cutoff, 400) == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("the filter is zero-phase") {
    const auto input = sine_track(0.5, 1.0, 100.0, 1000);
    const auto output = lowpass(input, 100.0, {});
    // Cross-correlation peak over lags -20..20 must sit at lag 0.
    int best_lag = -99;
    double best = -1e300;
    for (int lag = -20; lag <= 20; ++lag) {
        double sum = 0.0;
        for (size_t i = 100; i + 100 < input.size(); ++i)
            sum += input[i].x * output[i + lag].x;
        if (sum > best) {
            best = sum;
            best_lag = lag;
        }
    }
    CHECK(best_lag == 0);
}

TEST_CASE("the filter is linear") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec3> x(256), y(256), mix(256);
    const double a = 2.5, b = -1.25;
    for (size_t i = 0; i < x.size(); ++i) {
        x[i] = {u(rng), u(rng), u(rng)};
        y[i] = {u(rng), u(rng), u(rng)};
        mix[i] = x[i] * a + y[i] * b;
    }
    const auto fx = lowpass(x, 100.0, {});
    const auto fy = lowpass(y, 100.0, {});
    const auto fmix = lowpass(mix, 100.0, {});
    for (size_t i = 0; i < x.size(); ++i) {
        const Vec3 expected = fx[i] * a + fy[i] * b;
        CHECK((fmix[i] - expected).norm() <= 1e-9 * (1.0 + expected.norm()));
    }
}

TEST_CASE("differentiation is exact on linear data") {
    std::vector<Vec3> ramp(64);
    for (size_t i = 0; i < ramp.size(); ++i) ramp[i] = {0.01 * i, 0.0, 0.0};  // 1 m/s at 100 Hz
    const auto v = differentiate(ramp, 100.0);
    for (size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i].x == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(v[i].y == 0.0);
    }

    const std::vector<Vec3> still(16, Vec3{1, 2, 3});
    for (const Vec3& vi : differentiate(still, 100.0)) CHECK(vi.norm() == 0.0);
}

TEST_CASE("differentiated sine peak speed matches the analytic derivative") {
    const auto v = differentiate(sine_track(0.5, 0.1, 100.0, 1000), 100.0);
    double peak = 0.0;
    for (const Vec3& vi : v) peak = std::max(peak, vi.norm());
    const double expected = 2.0 * std::numbers::pi * 0.5 * 0.1;  // 0.31416 m/s
    CHECK(std::abs(peak - expected) <= 0.01 * expected);
}

TEST_CASE("filter then differentiate ignores constant offsets") {
    const auto base = sine_track(0.7, 0.2, 100.0, 400);
    std::vector<Vec3> shifted = base;
    for (Vec3& p : shifted) p += Vec3{3.0, -2.0, 11.0};
    const auto v1 = differentiate(lowpass(base, 100.0, {}), 100.0);
    const auto v2 = differentiate(lowpass(shifted, 100.0, {}), 100.0);
    for (size_t i = 0; i < v1.size(); ++i) CHECK((v1[i] - v2[i]).norm() <= 1e-9);
}

TEST_CASE("speed is the Euclidean norm and is rotation invariant") {
    CHECK(speed(std::vector<Vec3>{{3, 4, 0}})[0] == doctest::Approx(5.0));
    CHECK(speed(std::vector<Vec3>{{0, 0, 0}})[0] == 0.0);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const Mat3 rot = rotation_rpy(0.31, -1.2, 2.4);
    for (int i = 0; i < 100; ++i) {
        const Vec3 v{u(rng), u(rng), u(rng)};
        CHECK(std::abs(rot.apply(v).norm() - v.norm()) <= 1e-12);
    }
}

TEST_CASE("signal error paths") {
    const std::vector<Vec3> tiny(4, Vec3{});
    CHECK_THROWS_AS((void)lowpass(tiny, 100.0, {}), TooShort);
    const std::vector<Vec3> two(2, Vec3{});
    CHECK_THROWS_AS((void)differentiate(two, 100.0), TooShort);
    const std::vector<Vec3> ok(64, Vec3{});
    CHECK_THROWS_AS((void)lowpass(ok, 100.0, FilterSpec{60.0}), InvalidCutoff);
    CHECK_THROWS_AS((void)lowpass(ok, 100.0, FilterSpec{0.0}), InvalidCutoff);
}
