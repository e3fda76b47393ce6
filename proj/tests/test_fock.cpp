#include <doctest.h>

#include <cmath>
#include <numbers>

#include "catwig/errors.hpp"
#include "catwig/fock.hpp"
#include "catwig/state.hpp"
#include "catwig/wigner.hpp"
#include "test_util.hpp"

using namespace catwig;
using doctest::Approx;

namespace {
constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

SuperpositionState single(Complex gamma) {
    SuperpositionState s;
    s.terms = {{Complex{1.0, 0.0}, gamma}};
    return s;
}
}  // namespace

TEST_CASE("coherent_to_fock: vacuum") {
    const FockVector f = coherent_to_fock(Complex{0.0, 0.0}, 8);
    REQUIRE(f.dim() == 8);
    CHECK(f.coeffs[0] == Complex{1.0, 0.0});
    for (int n = 1; n < 8; ++n) {
        CHECK(f.coeffs[n] == Complex{0.0, 0.0});
    }
}

TEST_CASE("coherent_to_fock: amplitude 2 at dim 64") {
    const FockVector f = coherent_to_fock(Complex{2.0, 0.0}, 64);
    CHECK(f.coeffs[0].real() == Approx(0.1353352832366127).epsilon(1e-14));
    CHECK(f.norm_squared() == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coherent_to_fock: inadequate dim is rejected") {
    CHECK_THROWS_AS(coherent_to_fock(Complex{6.0, 0.0}, 16), TruncationTooSmall);
    CHECK_THROWS_AS(coherent_to_fock(Complex{40.0, 0.0}, 4096), TruncationTooSmall);
}

TEST_CASE("coherent_tail_mass matches the built vector") {
    const Complex g{2.5, -1.0};
    const int dim = 64;
    const FockVector f = coherent_to_fock(g, dim);
    double tail = 0.0;
    for (int n = dim - 4; n < dim; ++n) {
        tail += std::norm(f.coeffs[n]);
    }
    CHECK(coherent_tail_mass(g, dim) == Approx(tail).epsilon(1e-12));
}

TEST_CASE("state_to_fock: cat(2,-1) norm matches the label algebra") {
    const SuperpositionState c = build_cat({Complex{2.0, 0.0}, Complex{-1.0, 0.0}});
    const FockVector f = state_to_fock(c, 64);
    CHECK(f.norm_squared() == Approx(norm_squared(c)).epsilon(1e-10));
    CHECK(f.norm_squared() == Approx(0.6321205588285577).epsilon(1e-10));
}

TEST_CASE("state_to_fock: zero vector and single-term passthrough") {
    const FockVector z = state_to_fock(build_cat({Complex{2.0, 0.0}, Complex{0.0, 0.0}}), 64);
    for (const Complex& c : z.coeffs) {
        CHECK(c == Complex{0.0, 0.0});
    }

    const Complex g{1.3, 0.4};
    const FockVector a = state_to_fock(single(g), 32);
    const FockVector b = coherent_to_fock(g, 32);
    REQUIRE(a.dim() == b.dim());
    for (int n = 0; n < a.dim(); ++n) {
        CHECK(a.coeffs[n] == b.coeffs[n]);
    }
}

TEST_CASE("fock inner products agree with the label algebra") {
    for (int i = 0; i < 30; ++i) {
        const SuperpositionState a = testutil::random_state(2);
        const SuperpositionState b = testutil::random_state(2);
        const FockVector fa = state_to_fock(a, 96);
        const FockVector fb = state_to_fock(b, 96);
        Complex fock_ip{0.0, 0.0};
        for (int n = 0; n < 96; ++n) {
            fock_ip += std::conj(fa.coeffs[n]) * fb.coeffs[n];
        }
        const Complex ip = inner_product(a, b);
        const double scale = std::abs(ip) + 1.0;
        CHECK(std::abs(fock_ip - ip) < 1e-10 * scale);
    }
}

TEST_CASE("parity_expectation: vacuum and |1>") {
    FockVector vac;
    vac.coeffs.assign(16, Complex{0.0, 0.0});
    vac.coeffs[0] = Complex{1.0, 0.0};
    CHECK(parity_expectation(vac) == 1.0);

    FockVector one;
    one.coeffs.assign(16, Complex{0.0, 0.0});
    one.coeffs[1] = Complex{1.0, 0.0};
    CHECK(parity_expectation(one) == -1.0);
}

TEST_CASE("oracle_wigner_point: vacuum at the origin") {
    const SuperpositionState s = single(Complex{0.0, 0.0});
    const FockVector f = state_to_fock(s, 32);
    CHECK(oracle_wigner_point(f, PhasePoint{0.0, 0.0}, s) ==
          Approx(kTwoOverPi).epsilon(1e-14));
}

TEST_CASE("oracle_wigner_point: pure |1> at the origin exercises the parity sum") {
    FockVector one;
    one.coeffs.assign(32, Complex{0.0, 0.0});
    one.coeffs[1] = Complex{1.0, 0.0};
    // companion state only supplies the normalization
    const SuperpositionState unit = single(Complex{0.0, 0.0});
    CHECK(oracle_wigner_point(one, PhasePoint{0.0, 0.0}, unit) ==
          Approx(-kTwoOverPi).epsilon(1e-14));
}

TEST_CASE("oracle_wigner_point: fig3(b) matches the closed form at random points") {
    const SuperpositionState cat1 = build_cat({Complex{2.0, 0.0}, Complex{-1.0, 0.0}});
    const SuperpositionState cat2 = build_cat({Complex{2.3, 0.0}, Complex{-1.3, 0.0}});
    const SuperpositionState s = combine(cat1, cat2, CombineMode::difference);
    const GridSpec box{-5.0, 5.0, -5.0, 5.0, 2, 2};
    const FockVector f = state_to_fock(s, truncation_dim(s, box));
    for (int i = 0; i < 20; ++i) {
        const PhasePoint at{testutil::uniform(-5, 5), testutil::uniform(-5, 5)};
        CHECK(oracle_wigner_point(f, at, s) ==
              Approx(wigner_point(s, at)).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("oracle_wigner_point: values respect the parity bound") {
    const SuperpositionState cat1 = build_cat({Complex{4.0, 0.0}, Complex{-1.0, 0.0}});
    const SuperpositionState cat2 = build_cat({Complex{2.0, 0.0}, Complex{-1.5, 0.0}});
    const SuperpositionState s = combine(cat1, cat2, CombineMode::sum);
    const GridSpec box{-6.0, 6.0, -6.0, 6.0, 2, 2};
    const FockVector f = state_to_fock(s, truncation_dim(s, box));
    for (int i = 0; i < 40; ++i) {
        const double w =
            oracle_wigner_point(f, PhasePoint{testutil::uniform(-6, 6), testutil::uniform(-6, 6)}, s);
        CHECK(w >= -kTwoOverPi - 1e-9);
        CHECK(w <= kTwoOverPi + 1e-9);
    }
}

TEST_CASE("oracle_wigner_point: zero-norm inputs are rejected") {
    const SuperpositionState z = build_cat({Complex{2.0, 0.0}, Complex{0.0, 0.0}});
    const FockVector f = state_to_fock(z, 64);
    CHECK(f.norm_squared() == 0.0);
    CHECK_THROWS_AS(oracle_wigner_point(f, PhasePoint{0.0, 0.0}, z), ZeroNormState);
}

TEST_CASE("truncation_dim: floor applies for the vacuum on a small grid") {
    CHECK(truncation_dim(single(Complex{0.0, 0.0}), GridSpec{-1, 1, -1, 1, 11, 11}) == 32);
}

TEST_CASE("truncation_dim: fig4-scale states pass every displaced tail") {
    const SuperpositionState cat1 = build_cat({Complex{4.0, 0.0}, Complex{-2.5, 0.0}});
    const SuperpositionState cat2 = build_cat({Complex{2.0, 0.0}, Complex{-1.5, 0.0}});
    const SuperpositionState s = combine(cat1, cat2, CombineMode::sum);
    const GridSpec spec{-7.0, 7.0, -7.0, 7.0, 281, 281};
    const int dim = truncation_dim(s, spec);
    for (const CoherentTerm& t : s.terms) {
        for (const Complex corner : {Complex{-7.0, -7.0}, Complex{-7.0, 7.0},
                                     Complex{7.0, -7.0}, Complex{7.0, 7.0}}) {
            CHECK(coherent_tail_mass(t.amp - corner, dim) < 1e-10);
        }
    }
}

TEST_CASE("truncation_dim: labels beyond double-precision reach are rejected") {
    SuperpositionState s;
    s.terms = {{Complex{1.0, 0.0}, Complex{30.0, 30.0}}};
    CHECK_THROWS_AS(truncation_dim(s, GridSpec{-1, 1, -1, 1, 11, 11}), TruncationTooSmall);
}

TEST_CASE("truncation_dim: monotone in the grid half-width") {
    const SuperpositionState s = single(Complex{1.0, 0.5});
    int last = 0;
    for (double half : {1.0, 2.0, 4.0, 6.0, 8.0}) {
        const int dim = truncation_dim(s, GridSpec{-half, half, -half, half, 11, 11});
        CHECK(dim >= last);
        last = dim;
    }
}

TEST_CASE("truncation robustness: doubling dim changes nothing measurable") {
    const SuperpositionState cat1 = build_cat({Complex{2.0, 0.0}, Complex{-1.0, 0.0}});
    const SuperpositionState cat2 = build_cat({Complex{2.3, 0.0}, Complex{-1.4, 0.0}});
    const SuperpositionState s = combine(cat1, cat2, CombineMode::difference);
    const GridSpec box{-4.0, 4.0, -4.0, 4.0, 2, 2};
    const int dim = truncation_dim(s, box);
    const FockVector f1 = state_to_fock(s, dim);
    const FockVector f2 = state_to_fock(s, 2 * dim);
    for (int i = 0; i < 15; ++i) {
        const PhasePoint at{testutil::uniform(-4, 4), testutil::uniform(-4, 4)};
        CHECK(std::abs(oracle_wigner_point(f1, at, s) - oracle_wigner_point(f2, at, s)) <
              1e-9);
    }
}
