#pragma once

#include "netmx/error.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace netmx {

/// A nonnegative trajectory or hop count, or INF for "no path".
///
/// INF orders above every finite value. Arithmetic on finite values is
/// checked and throws CountOverflow instead of wrapping.
class ExtendedCount
{
public:
    using value_type = std::uint64_t;

    static constexpr value_type max_finite = std::numeric_limits<value_type>::max() - 1;

    constexpr ExtendedCount() noexcept = default;
    constexpr ExtendedCount(value_type v) : v_(v)
    {
        if (v > max_finite)
            throw CountOverflow();
    }

    static constexpr ExtendedCount inf() noexcept
    {
        ExtendedCount c;
        c.v_ = inf_bits;
        return c;
    }

    constexpr bool is_inf() const noexcept { return v_ == inf_bits; }
    constexpr bool is_finite() const noexcept { return v_ != inf_bits; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    /// Finite value; meaningless for INF.
    constexpr value_type value() const noexcept { return v_; }

    friend constexpr bool operator==(ExtendedCount, ExtendedCount) noexcept = default;
    friend constexpr auto operator<=>(ExtendedCount a, ExtendedCount b) noexcept
    {
        return a.v_ <=> b.v_;
    }

    std::string to_string() const;

private:
    static constexpr value_type inf_bits = std::numeric_limits<value_type>::max();

    value_type v_ = 0;
};

inline constexpr ExtendedCount INF = ExtendedCount::inf();

/// Checked sum of two finite counts.
ExtendedCount checked_add(ExtendedCount a, ExtendedCount b);

/// Product with INF*k = INF for k > 0. INF*0 is rejected by the caller,
/// so this only checks finite overflow.
ExtendedCount checked_mul(ExtendedCount a, ExtendedCount b);

std::ostream& operator<<(std::ostream& os, ExtendedCount c);

} // namespace netmx
