#include "raneycore/numbers.hpp"

#include <map>
#include <utility>
#include <vector>

namespace raneycore {

namespace {

Natural binomial_unchecked(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Natural result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        // product of i+1 consecutive integers is divisible by (i+1)!
        detail::require(result % (i + 1) == 0, "binomial: inexact partial quotient");
        result /= i + 1;
    }
    return result;
}

Natural exact_div(Natural num, const Natural& den, const char* what) {
    detail::require(den != 0 && num % den == 0, what);
    return num / den;
}

// Memoized evaluation of R_{p,r}(k) from the recurrences alone; one instance
// per top-level call, so callers never share mutable state.
class RaneyRecurrence {
public:
    explicit RaneyRecurrence(int p) : p_(p) {}

    Natural eval(int r, int k) {
        if (k == 0) return 1;
        if (r == 0) return 0;
        const auto key = std::pair{r, k};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Natural sum = 0;
        if (r == 1) {
            for (int i = 0; i < k; ++i) sum += eval(1, i) * eval(p_ - 1, k - 1 - i);
        } else {
            for (int i = 0; i <= k; ++i) sum += eval(1, i) * eval(r - 1, k - i);
        }
        return memo_.emplace(key, std::move(sum)).first->second;
    }

private:
    int p_;
    std::map<std::pair<int, int>, Natural> memo_;
};

// Sum over weak compositions of `total` into `slots` parts, first part
// ascending (lexicographic), of products of cached Fuss-Catalan values.
Natural composition_sum(int slots, int total, const std::vector<Natural>& fuss) {
    if (slots == 1) return fuss[total];
    Natural sum = 0;
    for (int first = 0; first <= total; ++first)
        sum += fuss[first] * composition_sum(slots - 1, total - first, fuss);
    return sum;
}

}  // namespace

Natural binomial(long long n, long long k) {
    detail::check_arg(n >= 0 && k >= 0, "binomial: n and k must be nonnegative");
    return binomial_unchecked(n, k);
}

Natural raney(int p, int r, int k) {
    detail::check_arg(p >= 1, "raney: p must be positive");
    detail::check_arg(r >= 0 && k >= 0, "raney: r and k must be nonnegative");
    if (r == 0) return k == 0 ? 1 : 0;
    const long long n = static_cast<long long>(k) * p + r;
    Natural num = r * binomial_unchecked(n, k);
    return exact_div(std::move(num), n, "raney: kp+r must divide r*C(kp+r,k)");
}

Natural raney(const RaneyParams& params) { return raney(params.p, params.r, params.k); }

Natural catalan(int k) {
    detail::check_arg(k >= 0, "catalan: k must be nonnegative");
    return exact_div(binomial_unchecked(2LL * k, k), k + 1, "catalan: k+1 must divide C(2k,k)");
}

Natural fuss_catalan(int p, int k) {
    detail::check_arg(p >= 1, "fuss_catalan: p must be positive");
    detail::check_arg(k >= 0, "fuss_catalan: k must be nonnegative");
    const long long denom = static_cast<long long>(p - 1) * k + 1;
    return exact_div(binomial_unchecked(static_cast<long long>(k) * p, k), denom,
                     "fuss_catalan: (p-1)k+1 must divide C(kp,k)");
}

Natural raney_by_recurrence(int p, int r, int k) {
    detail::check_arg(p >= 1, "raney_by_recurrence: p must be positive");
    detail::check_arg(r >= 0 && k >= 0, "raney_by_recurrence: r and k must be nonnegative");
    return RaneyRecurrence(p).eval(r, k);
}

Natural raney_by_recurrence(const RaneyParams& params) {
    return raney_by_recurrence(params.p, params.r, params.k);
}

Natural raney_by_convolution(int p, int r, int k) {
    detail::check_arg(p >= 1, "raney_by_convolution: p must be positive");
    detail::check_arg(r >= 0 && k >= 0, "raney_by_convolution: r and k must be nonnegative");
    if (r == 0) {
        // the empty convolution exists only for k = 0
        detail::check_arg(k == 0, "raney_by_convolution: r = 0 requires k = 0");
        return 1;
    }
    std::vector<Natural> fuss(k + 1);
    for (int i = 0; i <= k; ++i) fuss[i] = fuss_catalan(p, i);
    return composition_sum(r, k, fuss);
}

Natural raney_by_convolution(const RaneyParams& params) {
    return raney_by_convolution(params.p, params.r, params.k);
}

}  // namespace raneycore
