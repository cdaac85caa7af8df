#ifndef SCHMIDT_EULERIAN_HPP
#define SCHMIDT_EULERIAN_HPP

#include <vector>

#include "schmidt/series.hpp"

namespace schmidt {

/* The two-parameter-per-position Eulerian polynomial over S_n:
 *   (y_n + x_n) * sum_{sigma in S_n} prod_{i=1}^{n-1} (y_i^{chi(sigma(i)>sigma(i+1))} + x_i).
 * Arguments may be arbitrary truncated series (monomial times q-power in
 * every identity of interest).  Computed by explicit permutation
 * enumeration; n is capped at 10. */
TruncatedSeries eulerian_bar(int n, const std::vector<TruncatedSeries>& xs,
                             const std::vector<TruncatedSeries>& ys, SeriesCaps caps);

/* The descent-statistic polynomial sum_{sigma in S_n} prod y_i^{chi(descent at i)}
 * = eulerian_bar with all x = 0 and final y = 1.  ys has n-1 entries. */
TruncatedSeries eulerian(int n, const std::vector<TruncatedSeries>& ys, SeriesCaps caps);

}  // namespace schmidt

#endif
