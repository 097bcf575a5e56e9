// Copyright 2026 the algint authors. Apache-2.0 (see LICENSE).
//
// Shared scale constants used by the special-square census and the
// two-root constructor.

#pragma once

#include <algorithm>

#include "algint/error.hpp"
#include "algint/integers.hpp"

namespace algint {

// Square of the height scale attached to a pair of target abscissas.
// h^2 = 3/2 (|x1|+|x2|) max(1, 3|x1|, 3|x2|)^(m^2), m the auxiliary degree.
inline Rat two_point_height_scale_sq(int m, const Rat& x1, const Rat& x2) {
    if (m < 1) throw error(errc::invalid_input, "height scale needs degree >= 1");
    if (x1 == 0 && x2 == 0) throw error(errc::invalid_input, "height scale needs a nonzero target");
    Rat a1 = abs(x1), a2 = abs(x2);
    Rat base = std::max(Rat(1), Rat(3) * std::max(a1, a2));
    return Rat(Rat(3, 2) * (a1 + a2)) * rat_pow(base, (long)m * m);
}

}  // namespace algint
