#pragma once

// Trajectory conditioning for the segmentation pipeline: zero-phase
// second-order Butterworth low-pass filtering and central-difference
// velocity estimation.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "wbpose/errors.hpp"
#include "wbpose/geom.hpp"

namespace wbpose {

/// Filter parameters. Order and the zero-phase (forward-backward) scheme are
/// fixed; only the cutoff varies.
struct FilterSpec {
    double cutoff_hz = 1.5;

    static constexpr int order = 2;
    static constexpr bool zero_phase = true;
};

namespace detail {

struct Biquad {
    double b0, b1, b2, a1, a2;
};

// Bilinear-transform design with cutoff prewarping.
inline Biquad butterworth2(double cutoff_hz, double frame_rate) {
    const double k = std::tan(std::numbers::pi * cutoff_hz / frame_rate);
    const double k2 = k * k;
    const double root2 = std::numbers::sqrt2;
    const double norm = 1.0 / (1.0 + root2 * k + k2);
    return {k2 * norm, 2.0 * k2 * norm, k2 * norm, 2.0 * (k2 - 1.0) * norm,
            (1.0 - root2 * k + k2) * norm};
}

// Direct form II transposed, state initialized to the steady response for a
// constant input x[0] so each pass starts transient-free.
inline void filter_in_place(const Biquad& q, std::vector<double>& xs) {
    const double gain = (q.b0 + q.b1 + q.b2) / (1.0 + q.a1 + q.a2);
    const double x0 = xs.front();
    double z1 = (q.b1 - q.a1 * gain + q.b2 - q.a2 * gain) * x0;
    double z2 = (q.b2 - q.a2 * gain) * x0;
    for (double& x : xs) {
        const double y = q.b0 * x + z1;
        z1 = q.b1 * x - q.a1 * y + z2;
        z2 = q.b2 * x - q.a2 * y;
        x = y;
    }
}

// Forward-backward pass over one coordinate with odd reflection padding of
// three filter settling constants (fs / (2*pi*fc) samples each) per end; the
// pad is discarded. The pad absorbs the start-up transient so edge samples
// stay usable even at low cutoff ratios.
inline std::vector<double> filtfilt(const Biquad& q, const std::vector<double>& x, size_t pad_len) {
    const size_t n = x.size();
    const size_t pad = std::min<size_t>(pad_len, n - 1);
    std::vector<double> ext;
    ext.reserve(n + 2 * pad);
    for (size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x.back() - x[n - 1 - i]);

    filter_in_place(q, ext);
    std::reverse(ext.begin(), ext.end());
    filter_in_place(q, ext);
    std::reverse(ext.begin(), ext.end());

    return {ext.begin() + static_cast<long>(pad), ext.begin() + static_cast<long>(pad + n)};
}

}  // namespace detail

/// Zero-phase low-pass of a 3D trajectory, coordinate by coordinate.
/// Output length equals input length. Requires at least 8 samples and a
/// cutoff strictly between 0 and the Nyquist frequency.
inline std::vector<Vec3> lowpass(std::span<const Vec3> positions, double frame_rate,
                                 const FilterSpec& spec) {
    if (positions.size() < 8)
        throw TooShort("lowpass needs >= 8 samples, got " + std::to_string(positions.size()));
    if (!(spec.cutoff_hz > 0.0) || !(spec.cutoff_hz < frame_rate / 2.0))
        throw InvalidCutoff("cutoff must lie in (0, " + std::to_string(frame_rate / 2.0) +
                            ") Hz, got " + std::to_string(spec.cutoff_hz));

    const detail::Biquad q = detail::butterworth2(spec.cutoff_hz, frame_rate);
    const size_t settling = static_cast<size_t>(
        std::ceil(frame_rate / (2.0 * std::numbers::pi * spec.cutoff_hz)));
    const size_t n = positions.size();
    std::vector<double> coord(n);
    std::vector<Vec3> out(n);
    for (int axis = 0; axis < 3; ++axis) {
        for (size_t i = 0; i < n; ++i)
            coord[i] = axis == 0 ? positions[i].x : axis == 1 ? positions[i].y : positions[i].z;
        const std::vector<double> filtered = detail::filtfilt(q, coord, 3 * settling);
        for (size_t i = 0; i < n; ++i) {
            if (axis == 0) out[i].x = filtered[i];
            if (axis == 1) out[i].y = filtered[i];
            if (axis == 2) out[i].z = filtered[i];
        }
    }
    return out;
}

/// Velocity by central differences at interior frames and one-sided
/// differences at the endpoints. Length is preserved.
inline std::vector<Vec3> differentiate(std::span<const Vec3> positions, double frame_rate) {
    if (positions.size() < 3)
        throw TooShort("differentiate needs >= 3 samples, got " +
                       std::to_string(positions.size()));
    const size_t n = positions.size();
    std::vector<Vec3> v(n);
    v.front() = (positions[1] - positions[0]) * frame_rate;
    for (size_t i = 1; i + 1 < n; ++i)
        v[i] = (positions[i + 1] - positions[i - 1]) * (frame_rate / 2.0);
    v.back() = (positions[n - 1] - positions[n - 2]) * frame_rate;
    return v;
}

/// Per-frame speed: the Euclidean norm of each velocity sample.
inline std::vector<double> speed(std::span<const Vec3> velocities) {
    std::vector<double> out(velocities.size());
    for (size_t i = 0; i < velocities.size(); ++i) out[i] = velocities[i].norm();
    return out;
}

}  // namespace wbpose
