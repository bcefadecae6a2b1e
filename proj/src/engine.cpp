#include "icl/engine.hpp"
#include "icl/fourier.hpp"

namespace icl {

using namespace oracle;

Series<Rat> series_bruteforce(const IntegrandSpec& spec, int N) {
    if (spec.family == "y2single") {
        auto f = y2_series(1, {1}, N);
        auto r = constant_mode(f, 1);
        r.provenance = "oracle y^2";
        return r;
    }
    if (spec.family == "Y") {
        int n = spec.n;
        if (n < 2) throw std::invalid_argument("oracle Y: n < 2");
        int dim = n - 1;
        TrigSeries prod('w', N);
        prod.c[0] = FourierPoly::constant(dim, Rat(1));
        for (int i = 0; i < dim; i++) {
            std::vector<int> freq(dim, 0);
            freq[i] = 1;
            prod = mul_trunc(prod, y2_series(dim, freq, N), N);
        }
        prod = mul_trunc(prod, y2_series(dim, std::vector<int>(dim, 1), N), N);
        auto r = constant_mode(prod, dim);
        r.provenance = "oracle Y(" + std::to_string(n) + ")";
        return r;
    }
    if (spec.family == "ytilde3") {
        TrigSeries prod = y_series(2, {1, 0}, N);
        prod = mul_trunc(prod, y_series(2, {0, 1}, N), N);
        prod = mul_trunc(prod, y_series(2, {1, 1}, N), N);
        auto r = constant_mode(prod, 2);
        r.provenance = "oracle Ytilde(3)";
        return r;
    }
    if (spec.family == "phiD" || spec.family == "ID") {
        int n = spec.n;
        if (n < 2) throw std::invalid_argument("oracle: n < 2");
        auto x1 = x_series(1, {1}, N);
        auto x2 = x_series(1, {n - 1}, N);
        TrigSeries u = x2;
        for (int i = 0; i < n - 1; i++) u = mul_trunc(u, x1, N);
        auto geo = geometric(u, 1, N); // 1/(1-u)
        Rat fact(1);
        for (int i = 2; i <= n; i++) fact *= i;
        if (spec.family == "phiD") {
            auto r = constant_mode(geo, 1);
            for (int i = 0; i <= N; i++) r.c[i] = Rat(2) / fact * r.c[i];
            r.c[0] -= Rat(1) / fact;
            r.provenance = "oracle PhiD(" + std::to_string(n) + ")";
            return r;
        }
        // ID: (1/n!) * const mode of y^(n-1)(phi) y((n-1)phi) (2/(1-u) - 1)
        TrigSeries ratio('w', N);
        for (int i = 0; i <= N; i++) ratio.c[i] = Rat(2) * geo.c[i];
        ratio.c[0] -= FourierPoly::constant(1, Rat(1));
        auto y1 = y_series(1, {1}, N);
        auto y2 = y_series(1, {n - 1}, N);
        TrigSeries f = y2;
        for (int i = 0; i < n - 1; i++) f = mul_trunc(f, y1, N);
        f = mul_trunc(f, ratio, N);
        auto r = constant_mode(f, 1);
        for (int i = 0; i <= N; i++) r.c[i] = r.c[i] / fact;
        r.provenance = "oracle ID(" + std::to_string(n) + ")";
        return r;
    }
    throw std::invalid_argument("series_bruteforce: unsupported integrand " + spec.family);
}

} // namespace icl
