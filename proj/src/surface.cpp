#include "plurichern/surface.hpp"

#include <string>

#include "plurichern/error.hpp"

namespace plurichern {

SurfaceInvariants SurfaceInvariants::checked(std::int64_t c1_sq, std::int64_t c2,
                                             std::optional<std::int64_t> pg,
                                             std::optional<std::int64_t> q) {
    SurfaceInvariants s{c1_sq, c2, pg, q};
    s.validate();
    return s;
}

bool SurfaceInvariants::noether_integral() const {
    // Sum in 128 bits: c1_sq and c2 are caller-supplied.
    const __int128 sum = static_cast<__int128>(c1_sq) + c2;
    return sum % 12 == 0;
}

bool SurfaceInvariants::noether_exact() const {
    if (!pg || !q) {
        return true;
    }
    const __int128 lhs = static_cast<__int128>(c1_sq) + c2;
    const __int128 rhs = 12 * (static_cast<__int128>(1) - *q + *pg);
    return lhs == rhs;
}

void SurfaceInvariants::validate() const {
    if ((pg && *pg < 0) || (q && *q < 0)) {
        throw Error(ErrorKind::InvalidArgument, "p_g and q must be nonnegative");
    }
    if (!noether_integral()) {
        throw Error(ErrorKind::NoetherViolation,
                    "c1^2 + c2 = " + std::to_string(c1_sq + c2) + " is not divisible by 12");
    }
    if (!noether_exact()) {
        throw Error(ErrorKind::NoetherViolation,
                    "c1^2 + c2 = " + std::to_string(c1_sq + c2) + " but 12(1 - q + p_g) = " +
                        std::to_string(12 * (1 - *q + *pg)));
    }
}

Rational SurfaceInvariants::chi_O() const {
    return Rational(make_integer(c1_sq) + make_integer(c2), Integer(12));
}

}  // namespace plurichern
