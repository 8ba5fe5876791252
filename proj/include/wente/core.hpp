#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wente {

using complex_t = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct domain_error_t : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Runs fn(i) for i in [0,n), split across hardware threads.
/// Each index owns its output slot, so results are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Chunked variant: fn(begin,end) on contiguous ranges.
void parallel_for_ranges(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace wente
