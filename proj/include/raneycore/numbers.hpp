#pragma once

#include "raneycore/natural.hpp"

namespace raneycore {

// Parameters of the Raney number R_{p,r}(k); p must be at least 1.
struct RaneyParams {
    int p = 1;
    int r = 0;
    int k = 0;
};

// C(n, k); zero when k > n.
Natural binomial(long long n, long long k);

// R_{p,r}(k) = r/(kp+r) * C(kp+r, k), evaluated by exact cancellation.
// Conventions: R_{p,r}(0) = 1 (including r = 0) and R_{p,0}(k) = 0 for k > 0.
Natural raney(int p, int r, int k);
Natural raney(const RaneyParams& params);

// C_k = C(2k, k)/(k+1); equals raney(2, 1, k).
Natural catalan(int k);

// C_p(k) = C(kp, k)/((p-1)k + 1); equals raney(p, 1, k).
Natural fuss_catalan(int p, int k);

// R_{p,r}(k) evaluated from the two recurrences
//   R_{p,1}(k) = sum_{i=0}^{k-1} R_{p,1}(i) R_{p,p-1}(k-1-i)
//   R_{p,r}(k) = sum_{i=0}^{k}   R_{p,1}(i) R_{p,r-1}(k-i)    (r > 1)
// and the initial values R_{p,r}(0) = 1, R_{p,0}(k+1) = 0, with memoization
// local to each top-level call.
Natural raney_by_recurrence(int p, int r, int k);
Natural raney_by_recurrence(const RaneyParams& params);

// Sum over weak compositions (i_1,...,i_r) of k of prod_j fuss_catalan(p, i_j).
// Requires r >= 1 except for the single empty composition at r = 0, k = 0.
Natural raney_by_convolution(int p, int r, int k);
Natural raney_by_convolution(const RaneyParams& params);

}  // namespace raneycore
