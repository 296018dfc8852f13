#pragma once

// Why the Lax form does not extend past three variables: a dimension count,
// and an explicit witness that w1^2 - w2^2 - ... - wn^2 (n > 3) is not
// det(sum_j w_j G_j) for any 2x2 symmetric G_j.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hyperlax/lax.hpp"
#include "hyperlax/polynomial.hpp"

namespace hyperlax {

/// C(n, k), exact; throws on 64-bit overflow.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i since r = C(n-k+i-1, i-1).
        const std::uint64_t g = std::gcd(r, i);
        const std::uint64_t factor = (n - k + i) / (i / g);
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(r / g, factor, &next)) throw PreconditionViolated("binomial overflows 64 bits");
        r = next;
    }
    return r;
}

struct DimReport {
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::uint64_t det_image_dim = 0;   ///< n * C(d+1, 2), an upper bound
    std::uint64_t poly_space_dim = 0;  ///< C(n+d-1, d)
    bool det_smaller = false;

    friend bool operator==(const DimReport&, const DimReport&) = default;
};

inline DimReport dimension_report(std::uint64_t n, std::uint64_t d) {
    if (n < 1 || d < 1) throw PreconditionViolated("dimension_report needs n >= 1 and d >= 1");
    DimReport r;
    r.n = n;
    r.d = d;
    std::uint64_t image = 0;
    if (__builtin_mul_overflow(n, binomial(d + 1, 2), &image)) throw PreconditionViolated("dimension overflows 64 bits");
    r.det_image_dim = image;
    r.poly_space_dim = binomial(n + d - 1, d);
    r.det_smaller = r.det_image_dim < r.poly_space_dim;
    return r;
}

/// w1^2 - w2^2 - ... - wn^2
inline Polynomial lorentz_polynomial(std::size_t n) {
    if (n < 2) throw PreconditionViolated("Lorentz polynomial needs n >= 2");
    Polynomial p(n);
    for (std::size_t j = 0; j < n; ++j) {
        Exponents e(n, 0);
        e[j] = 2;
        p.add_term(std::move(e), j == 0 ? Rational(1) : Rational(-1));
    }
    return p;
}

/// Nonzero w with w1 = 0 and first row of sum_j w_j G_j equal to zero, for a
/// pencil of n > 3 matrices of size 2x2. The row-reduced 2 x (n-1) system over
/// the first rows of G_2..G_n has a free variable; the first one is set to 1
/// and the others to 0.
inline Vector refute_2x2_pencil(const Pencil& pencil) {
    const std::size_t n = pencil.n();
    if (pencil.d() != 2) throw PreconditionViolated("refute_2x2_pencil needs 2x2 matrices");
    if (n <= 3) throw PreconditionViolated("no witness guaranteed for n <= 3");

    const std::size_t cols = n - 1;
    RatMatrix sys(2, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        sys(0, j) = pencil[j + 1](0, 0);
        sys(1, j) = pencil[j + 1](0, 1);
    }

    // Reduced row echelon form.
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < 2; ++col) {
        std::size_t r = row;
        while (r < 2 && sys(r, col) == 0) ++r;
        if (r == 2) continue;
        if (r != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(sys(r, j), sys(row, j));
        const Rational inv = Rational(1) / sys(row, col);
        for (std::size_t j = 0; j < cols; ++j) sys(row, j) *= inv;
        for (std::size_t other = 0; other < 2; ++other) {
            if (other == row || sys(other, col) == 0) continue;
            const Rational f = sys(other, col);
            for (std::size_t j = 0; j < cols; ++j) sys(other, j) -= f * sys(row, j);
        }
        pivots.push_back(col);
        ++row;
    }

    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;

    Vector w(n);
    w[free_col + 1] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) w[pivots[r] + 1] = -sys(r, free_col);
    return w;
}

struct LorentzRefutation {
    Vector witness;
    Rational det_value;      ///< det(sum_j w_j G_j), always 0
    Rational lorentz_value;  ///< -(w2^2 + ... + wn^2), always < 0
};

inline LorentzRefutation refute_lorentz_representation(const Pencil& pencil) {
    LorentzRefutation r;
    r.witness = refute_2x2_pencil(pencil);
    r.det_value = determinant(pencil.combine(r.witness).matrix());
    r.lorentz_value = eval(lorentz_polynomial(pencil.n()), r.witness);
    return r;
}

}  // namespace hyperlax
