#include <doctest.h>

#include "oracles.hpp"
#include "vacuakit/nucleation.hpp"
#include "vacuakit/errors.hpp"

#include <cmath>

using namespace vacuakit;
using oracles::pi;

TEST_CASE("surface term reproduces frozen values and stays linear") {
    CHECK(cdl_surface_term(0.9286) == doctest::Approx(-0.348225).epsilon(1e-12));
    CHECK(cdl_surface_term(0.0) == 0.0);
    CHECK(cdl_surface_term(2.0) == -0.75);
    CHECK(cdl_surface_term(3.0) == 3.0 * cdl_surface_term(1.0));
    CHECK_THROWS_AS(cdl_surface_term(-0.1), NegativeEnergy);
}

TEST_CASE("density lower bound scales with both masses squared") {
    CHECK(rho_t_lower_bound(1.0, 1.0) == doctest::Approx(4.7746482927568601).epsilon(1e-12));
    CHECK(rho_t_lower_bound(0.441, 1.0) ==
          doctest::Approx(0.9285783746236469).epsilon(1e-12));
    CHECK(rho_t_lower_bound(2.0, 3.0) ==
          doctest::Approx(36.0 * rho_t_lower_bound(1.0, 1.0)).epsilon(1e-12));
}

TEST_CASE("decay rate combines bounce and surface exponents") {
    const auto r = cdl_rate({1.0, 1.0, 0.9286});
    CHECK_FALSE(r.saturated);
    CHECK(r.value == doctest::Approx(0.25970082073469577).epsilon(1e-12));
    CHECK(cdl_rate({1.0, 0.0, 0.0}).value == 1.0);
    CHECK(cdl_rate({2.5, 0.0, 0.0}).value == 2.5);

    const auto more_bounce = cdl_rate({1.0, 2.0, 0.9286});
    CHECK(more_bounce.value < r.value);
}

TEST_CASE("decay rate saturates instead of overflowing") {
    const auto r = cdl_rate({1.0, -800.0, 0.0});
    CHECK(r.saturated);
    CHECK(std::isinf(r.value));
    const auto edge = cdl_rate({1.0, -700.0, 0.0});
    CHECK_FALSE(edge.saturated);
    CHECK(std::isfinite(edge.value));
    CHECK_THROWS_AS(cdl_rate({-1.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(cdl_rate({1.0, 0.0, -1.0}), NegativeEnergy);
}

TEST_CASE("pair density reproduces frozen values") {
    CHECK(garriga_density({}) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-14));
    CHECK(garriga_density({1.0, 0.0, 2.0}) ==
          doctest::Approx(0.02153927930184863).epsilon(1e-12));
    CHECK(garriga_density({3.0, 0.0, 0.0}) ==
          doctest::Approx(3.0 / (2.0 * pi)).epsilon(1e-14));
    CHECK(garriga_density({1.0, 5.0, 0.0}) ==
          doctest::Approx(std::sqrt(6.0) / (2.0 * pi)).epsilon(1e-14));
    CHECK_THROWS_AS(garriga_density({-1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("normalization constant agrees with the error-function closed form") {
    oracles::Rng rng(55105);
    for (int i = 0; i < 100; ++i) {
        const double brace = rng.uniform(1e-3, 5.0);
        const double length = rng.uniform(0.5, 30.0);
        const double got = normalization_constant(brace, length);
        const double expect = oracles::norm_c_closed(brace, length);
        CHECK(std::abs(got - expect) / expect < 1e-9);
    }
    CHECK_THROWS_AS(normalization_constant(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(normalization_constant(1.0, 0.0), DomainError);
}

TEST_CASE("normalization constant approaches the flat-weight limit") {
    // For a vanishing width the integrand tends to L^2 / (2 pi) over [0, L].
    const double c = normalization_constant(1e-12, 1.0);
    CHECK(c == doctest::Approx(std::sqrt(2.0 * pi)).epsilon(1e-6));
}

TEST_CASE("published-route normalization and amplitude reproduce frozen values") {
    const double l = 24.39;
    const double c = normalization_constant(1.0 / l, l);
    CHECK(c == doctest::Approx(0.058419819710318398).epsilon(1e-9));
    const double mstar = 8.676e-20;
    const double t = tunneling_amplitude(make_tunnel_inputs(c, c, mstar, 0.663, l));
    CHECK(t == doctest::Approx(11667186862.656571).epsilon(1e-9));
    CHECK(t / garriga_density({}) == doctest::Approx(73307097071.562461).epsilon(1e-9));
}

TEST_CASE("tunneling amplitude reproduces a unit-scale frozen value") {
    const TunnelInputs in{1.0, 1.0, 1.0, 0.5, 1.0, 1.0};
    CHECK(tunneling_amplitude(in) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-12));
}

TEST_CASE("amplitude at the midpoint argument collapses to the exponential identity") {
    const double c = 0.058419819710318398;
    const double mstar = 8.676e-20;
    const double l = 24.39;
    const TunnelInputs in = make_tunnel_inputs(c, c, mstar, 0.5 * l, l);
    CHECK(in.alpha == 1.0 / l);
    const double expect = c * c / mstar * std::exp(-in.alpha * l);
    CHECK(tunneling_amplitude(in) == expect);
}

TEST_CASE("amplitude stays finite where the cosh-times-exp form breaks down") {
    // Here the cosh argument is near -2000 and the exponential near e^-1300,
    // so the factored form evaluates inf * 0. The summed exponents are
    // moderate: -a + b is about 700.
    const TunnelInputs in{1.0, 1.0, 1.0, 1.25e-7, 1.0, 3.25e-4};
    const double t = tunneling_amplitude(in);
    CHECK(std::isfinite(t));
    CHECK(t > 1e300);
}

TEST_CASE("tunneling amplitude rejects non-positive inputs") {
    CHECK_THROWS_AS(tunneling_amplitude({1.0, 1.0, 1.0, 0.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(tunneling_amplitude({1.0, 1.0, 1.0, 1.0, -1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(tunneling_amplitude({1.0, 1.0, 0.0, 1.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(tunneling_amplitude({-1.0, 1.0, 1.0, 1.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(make_tunnel_inputs(1.0, 1.0, 1.0, 1.0, 0.0), DomainError);
}
