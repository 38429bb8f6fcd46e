// Print the Aztec diamond flip polynomials, their tiling counts at q=1,
// and the agreement with the general pure product.

#include <oblique/closed_forms.hpp>
#include <oblique/vertex.hpp>

#include <cstdio>

int main() {
    using namespace oblique;
    for (int ell = 1; ell <= 6; ++ell) {
        UniSeries poly = aztec_poly(ell);
        SignWord w = SignWord::repeat("+-", ell);
        bool agree = poly == pure_q(w, poly.trunc());
        std::printf("order %d: %llu tilings, degree %d, matches the pure product: %s\n", ell,
                    static_cast<unsigned long long>(poly.value_at_one().get_ui()), poly.trunc(),
                    agree ? "yes" : "NO");
        if (ell <= 3) std::printf("  T(q) = %s\n", poly.to_string().c_str());
    }
    return 0;
}
