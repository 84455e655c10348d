#pragma once

#include <array>
#include <cstddef>

namespace polariton {

// 2x2 block of a covariance matrix in (x, p) ordering.
struct Mat2 {
    double xx = 0.0;
    double xp = 0.0;
    double px = 0.0;
    double pp = 0.0;

    double det() const { return xx * pp - xp * px; }
};

// Dense 4x4, row-major. Quadrature ordering throughout: (x1, p1, x2, p2).
struct Mat4 {
    std::array<double, 16> m{};

    double& operator()(std::size_t r, std::size_t c) { return m[4 * r + c]; }
    const double& operator()(std::size_t r, std::size_t c) const { return m[4 * r + c]; }

    static Mat4 identity() {
        Mat4 out;
        for (std::size_t i = 0; i < 4; ++i) out(i, i) = 1.0;
        return out;
    }
};

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t k = 0; k < 4; ++k) {
            const double arx = a(r, k);
            for (std::size_t c = 0; c < 4; ++c) out(r, c) += arx * b(k, c);
        }
    return out;
}

inline Mat4 transpose(const Mat4& a) {
    Mat4 out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out(r, c) = a(c, r);
    return out;
}

// Symplectic form J for (x1, p1, x2, p2): J = diag(j, j), j = [[0,1],[-1,0]].
inline Mat4 symplectic_form() {
    Mat4 j;
    j(0, 1) = 1.0;
    j(1, 0) = -1.0;
    j(2, 3) = 1.0;
    j(3, 2) = -1.0;
    return j;
}

} // namespace polariton
