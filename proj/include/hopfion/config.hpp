#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hopfion {

/// Length scale of the toroidal coordinate system. Strictly positive.
struct Scale {
    double a = 1.0;

    explicit Scale(double a_ = 1.0) : a(a_) {
        if (!(a > 0.0) || !std::isfinite(a))
            throw std::invalid_argument("Scale: a must be positive and finite");
    }
};

/// Charged solutions carry net Hopf charge (odd number of nested solitons,
/// label l >= 0); neutral ones are sphaleron-like with an even number of
/// solitons and zero total charge (label k >= 0, k = 0 is the vacuum).
enum class Family { Charged, Neutral };

/**
 * Discrete label of one exact solution: the two winding integers (m for the
 * poloidal angle, n for the azimuthal one), the family, and the nesting index.
 *
 * Every closed form divides by |m| - |n| or by m, so m = 0, n = 0 and
 * |m| = |n| are rejected at construction.
 */
struct SolitonConfig {
    int m;
    int n;
    Family family;
    int index;    // l (charged) or k (neutral)
    Scale scale;

    SolitonConfig(int m_, int n_, Family family_, int index_, Scale scale_ = Scale{})
        : m(m_), n(n_), family(family_), index(index_), scale(scale_) {
        if (m == 0 || n == 0)
            throw std::invalid_argument("SolitonConfig: m and n must be nonzero");
        if (std::abs(m) == std::abs(n))
            throw std::invalid_argument("SolitonConfig: |m| = |n| is outside the solution family");
        if (index < 0)
            throw std::invalid_argument("SolitonConfig: family index must be >= 0");
    }

    static SolitonConfig charged(int m, int n, int l, Scale scale = Scale{}) {
        return SolitonConfig(m, n, Family::Charged, l, scale);
    }
    static SolitonConfig neutral(int m, int n, int k, Scale scale = Scale{}) {
        return SolitonConfig(m, n, Family::Neutral, k, scale);
    }

    double abs_m() const { return std::abs(static_cast<double>(m)); }
    double abs_n() const { return std::abs(static_cast<double>(n)); }

    /// Number of half-turns of the winding phase: 2l+1 (charged) or 2k (neutral).
    int half_turns() const {
        return family == Family::Charged ? 2 * index + 1 : 2 * index;
    }

    /// Neutral k = 0: the profile is identically zero.
    bool is_vacuum() const { return half_turns() == 0; }

    std::string family_name() const {
        return family == Family::Charged ? "charged" : "neutral";
    }
};

/// Cap applied when inverting coordinates near the focal ring; cosh/sinh stay
/// comfortably inside double range and all profiles are asymptotic well before it.
inline constexpr double kDefaultEtaMax = 12.0;

}  // namespace hopfion
