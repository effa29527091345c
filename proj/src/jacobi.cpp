#include "jacobi.hpp"

#include <stdexcept>

namespace wsbound {

double jacobi(int n, double a, double b, double x)
{
    if (n < 0) {
        throw std::invalid_argument("jacobi: n must be >= 0");
    }
    if (!(a > -1.0) || !(b > -1.0)) {
        throw std::invalid_argument("jacobi: requires a > -1 and b > -1");
    }
    if (x < -1.0 || x > 1.0) {
        throw std::invalid_argument("jacobi: x must lie in [-1, 1]");
    }
    if (n == 0) {
        return 1.0;
    }
    double pm = 1.0;
    double pc = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int m = 2; m <= n; m++) {
        double ab = a + b;
        double c1 = 2.0 * m * (m + ab) * (2.0 * m + ab - 2.0);
        double c2 = (2.0 * m + ab - 1.0) * (a * a - b * b);
        double c3 = (2.0 * m + ab - 1.0) * (2.0 * m + ab) * (2.0 * m + ab - 2.0);
        double c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * (2.0 * m + ab);
        double pn = ((c2 + c3 * x) * pc - c4 * pm) / c1;
        pm = pc;
        pc = pn;
    }
    return pc;
}

} // namespace wsbound
