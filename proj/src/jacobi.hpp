#pragma once

namespace wsbound {

/// P_n^{(a,b)}(x) by the forward three-term recurrence, standard
/// normalization (P_0 = 1, P_1 = (a-b)/2 + (a+b+2)x/2). Stable on
/// x in [-1,1] for a, b > -1 at the small degrees this model permits.
/// Throws std::invalid_argument outside that domain.
double jacobi(int n, double a, double b, double x);

} // namespace wsbound
