#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

namespace topols {

// Integer space-time lattice. Axis 2 (z) is the time direction.
enum class Axis : uint8_t { X = 0, Y = 1, Z = 2 };

enum class PatchColor : uint8_t { Blue = 0, Red = 1 };

inline PatchColor other_color(PatchColor c) {
    return c == PatchColor::Blue ? PatchColor::Red : PatchColor::Blue;
}

inline Axis third_axis(Axis a, Axis b) {
    return static_cast<Axis>(3 - static_cast<int>(a) - static_cast<int>(b));
}

inline std::string axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        default: return "z";
    }
}

inline std::string color_name(PatchColor c) {
    return c == PatchColor::Blue ? "blue" : "red";
}

struct Vec3 {
    int x = 0;
    int y = 0;
    int z = 0;

    friend bool operator==(const Vec3&, const Vec3&) = default;
    friend auto operator<=>(const Vec3&, const Vec3&) = default;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }

    int operator[](Axis a) const {
        switch (a) {
            case Axis::X: return x;
            case Axis::Y: return y;
            default: return z;
        }
    }
    int& operator[](Axis a) {
        switch (a) {
            case Axis::X: return x;
            case Axis::Y: return y;
            default: return z;
        }
    }
};

inline Vec3 unit(Axis a, int sign = 1) {
    Vec3 v;
    v[a] = sign;
    return v;
}

inline int manhattan(const Vec3& a, const Vec3& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
}

// True when the two positions differ by exactly one unit along one axis.
inline bool adjacent(const Vec3& a, const Vec3& b) {
    return manhattan(a, b) == 1;
}

// Axis along which two adjacent positions differ.
inline Axis adjacency_axis(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return Axis::X;
    if (a.y != b.y) return Axis::Y;
    return Axis::Z;
}

// Cross-section coloring of a pipe: the pipe runs along `dir`; the two
// perpendicular axes carry one blue and one red boundary pair. Stored as
// the axis whose faces are blue; red is the remaining perpendicular axis.
struct PipeFrame {
    Axis dir;
    Axis blue;

    Axis red() const { return third_axis(dir, blue); }

    PatchColor color_along(Axis a) const {
        return a == blue ? PatchColor::Blue : PatchColor::Red;
    }

    friend bool operator==(const PipeFrame&, const PipeFrame&) = default;
};

// Transport a frame through a corner cube from travel axis `frame.dir`
// onto travel axis `next`. The corner cube is oriented along the third
// axis and its color pins the frame's color on that axis, so the color
// along the shared perpendicular axis is preserved.
inline PipeFrame turn_frame(const PipeFrame& frame, Axis next) {
    Axis shared = third_axis(frame.dir, next);
    PipeFrame out;
    out.dir = next;
    out.blue = (frame.blue == shared) ? shared : frame.dir;
    return out;
}

// Frame on the far side of a Hadamard cube: colors swap on every axis
// perpendicular to both pipes.
inline PipeFrame hadamard_frame(const PipeFrame& frame, Axis next) {
    PipeFrame out;
    out.dir = next;
    if (next == frame.dir) {
        // straight through: both perpendicular axes shared, full swap
        out.blue = frame.red();
    } else {
        // corner: only the third axis is shared; colors differ along it
        Axis shared = third_axis(frame.dir, next);
        out.blue = (frame.blue == shared) ? frame.dir : shared;
    }
    return out;
}

inline int64_t pack_cell(const Vec3& p) {
    return (static_cast<int64_t>(p.x) & 0x1fffff) |
           ((static_cast<int64_t>(p.y) & 0x1fffff) << 21) |
           ((static_cast<int64_t>(p.z) & 0x1fffff) << 42);
}

}  // namespace topols
