#pragma once

#include <stdexcept>
#include <string>

#include "ccauto/finite_group.hpp"
#include "ccauto/presentation.hpp"

namespace ccauto {

struct EnumerationLimits {
    int max_cosets = 65536;
};

struct EnumerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// HLT-style Todd-Coxeter coset enumeration over the trivial subgroup, with
// immediate coincidence processing via union-find. On success the live
// cosets form the regular representation; they are compacted and renumbered
// by BFS discovery order from the identity coset, so the resulting table is
// byte-identical across runs. Throws EnumerationError when the coset limit
// is exceeded or the enumerated order differs from p.expected_order.
FiniteGroup enumerate_group(const Presentation& p, const EnumerationLimits& limits = {});

} // namespace ccauto
