#pragma once

#include "kronq/torus.hpp"

namespace kronq {

/// m-th cluster variable, from the exchange recurrence
/// X_{m-1} X_{m+1} = q X_m^2 + 1 with X_1 = X^(1,0), X_2 = X^(0,1).
/// Memoized; safe to call from multiple threads.
TorusElem xvar(long m);

/// Closed-form Laurent expansion of X_m (bracket-binomial sums); agrees with
/// xvar for every m. For m in {1, 2} returns the generators.
TorusElem xvar_closed(long m);

/// The three-term element X^(-1,1) + X^(1,-1) + X^(-1,-1).
const TorusElem& xdelta();

/// Dimension vector of the module attached to the m-th cluster variable,
/// m outside {1, 2}: (-m, -m+1) for m <= 0 and (m-2, m-3) for m >= 3.
std::pair<long, long> module_dim(long m);

/// Exponent of the unique componentwise-minimal term of X_m.
ExpVec min_exp_xvar(long m);

}  // namespace kronq
