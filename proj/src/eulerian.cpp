#include "schmidt/eulerian.hpp"

#include <algorithm>
#include <numeric>

namespace schmidt {

TruncatedSeries eulerian_bar(int n, const std::vector<TruncatedSeries>& xs,
                             const std::vector<TruncatedSeries>& ys, SeriesCaps caps) {
    if (n < 1) throw ParameterError("eulerian_bar: n must be >= 1");
    if (n > 10) throw ResourceError("eulerian_bar: n > 10 (factorial enumeration bound)");
    if (static_cast<int>(xs.size()) != n || static_cast<int>(ys.size()) != n)
        throw ParameterError("eulerian_bar: need n arguments of each kind");

    // Per position i < n, the factor is (y_i + x_i) at a descent and
    // (1 + x_i) otherwise.
    std::vector<TruncatedSeries> with_descent, without_descent;
    for (int i = 0; i + 1 < n; ++i) {
        with_descent.push_back(ys[static_cast<size_t>(i)] + xs[static_cast<size_t>(i)]);
        without_descent.push_back(TruncatedSeries::one(caps) + xs[static_cast<size_t>(i)]);
    }

    TruncatedSeries sum = TruncatedSeries::zero(caps);
    std::vector<int> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        TruncatedSeries prod = TruncatedSeries::one(caps);
        for (int i = 0; i + 1 < n; ++i)
            prod *= (sigma[static_cast<size_t>(i)] > sigma[static_cast<size_t>(i + 1)])
                        ? with_descent[static_cast<size_t>(i)]
                        : without_descent[static_cast<size_t>(i)];
        sum += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    return (ys[static_cast<size_t>(n - 1)] + xs[static_cast<size_t>(n - 1)]) * sum;
}

TruncatedSeries eulerian(int n, const std::vector<TruncatedSeries>& ys, SeriesCaps caps) {
    if (n < 1) throw ParameterError("eulerian: n must be >= 1");
    if (static_cast<int>(ys.size()) != n - 1)
        throw ParameterError("eulerian: need n-1 arguments");
    std::vector<TruncatedSeries> xs(static_cast<size_t>(n), TruncatedSeries::zero(caps));
    std::vector<TruncatedSeries> ybar = ys;
    ybar.push_back(TruncatedSeries::one(caps));
    return eulerian_bar(n, xs, ybar, caps);
}

}  // namespace schmidt
