#include <doctest.h>

#include <cmath>

#include "njc/states.hpp"

using namespace njc;

TEST_CASE("coherent vacuum and normalization") {
    const FockVector vac = coherent(0.0, 8);
    CHECK(vac.amplitudes[0] == cplx(1.0, 0.0));
    for (int n = 1; n <= 8; ++n) CHECK(vac.amplitudes[n] == cplx(0.0, 0.0));
    CHECK(mean_photon_number(vac) == 0.0);

    const FockVector one = coherent(1.0, 32);
    CHECK(one.truncated_tail < 1e-12);
    CHECK(one.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("coherent amplitudes satisfy the ratio recurrence") {
    const cplx alpha(0.9, -1.3);
    const FockVector f = coherent(alpha, 40);
    for (int n = 0; n < 40; ++n) {
        const cplx lhs = f.amplitudes[n + 1] * std::sqrt(n + 1.0);
        const cplx rhs = f.amplitudes[n] * alpha;
        CHECK(std::abs(lhs - rhs) < 1e-15);
    }
}

TEST_CASE("coherent mean photon number") {
    const FockVector f = coherent(std::sqrt(30.0), 150);
    CHECK(mean_photon_number(f) == doctest::Approx(30.0).epsilon(1e-10));
}

TEST_CASE("coherent truncation error is detected") {
    CHECK_THROWS(coherent(std::sqrt(30.0), 40, 1e-12));
}

TEST_CASE("squeezed vacuum structure") {
    const FockVector vac = squeezed_vacuum(0.0, 0.0, 8);
    CHECK(vac.amplitudes[0] == cplx(1.0, 0.0));
    CHECK(mean_photon_number(vac) == 0.0);

    const FockVector sv = squeezed_vacuum(1.1, 0.4, 200);
    for (int n = 1; n <= 200; n += 2) CHECK(sv.amplitudes[n] == cplx(0.0, 0.0));
    CHECK(sv.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("squeezed vacuum mean photon number needs the honest heavy tail") {
    const StateFamily fam[] = {StateFamily::SqueezedVacuum};
    const int n_max = auto_truncation(30.0, 1e-12, fam);
    CHECK(n_max > 1000);  // far beyond a Poissonian at the same mean
    CHECK(family_tail(StateFamily::SqueezedVacuum, 30.0, n_max) < 1e-12);
    const FockVector sv = squeezed_vacuum(2.402, 0.0, n_max);
    CHECK(mean_photon_number(sv) == doctest::Approx(30.0).epsilon(0.1 / 30.0));
}

TEST_CASE("pair coherent state") {
    const PairedFockVector vac = pair_coherent(0.0, 6);
    CHECK(vac.amplitudes[0] == cplx(1.0, 0.0));

    const PairedFockVector pc = pair_coherent(1.778, 40);
    CHECK(pc.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(mean_photon_number(pc) == doctest::Approx(3.0).epsilon(0.05 / 3.0));
    for (int n = 0; n <= 40; ++n) {
        CHECK(pc.amplitudes[n].imag() == 0.0);
        CHECK(pc.amplitudes[n].real() > 0.0);
    }
}

TEST_CASE("two-mode squeezed vacuum") {
    const PairedFockVector vac = two_mode_squeezed_vacuum(0.0, 6);
    CHECK(vac.amplitudes[0] == cplx(1.0, 0.0));

    const PairedFockVector tsv = two_mode_squeezed_vacuum(1.032, 56);
    CHECK(mean_photon_number(tsv) == doctest::Approx(3.0).epsilon(0.05 / 3.0));
    const double mu = std::tanh(1.032);
    CHECK(tsv.truncated_tail == doctest::Approx(std::pow(mu * mu, 57.0)).epsilon(1e-12));

    CHECK_THROWS(two_mode_squeezed_vacuum(1.032, 40, 1e-12));  // tail ~8e-10
}

TEST_CASE("auto truncation") {
    CHECK(auto_truncation(0.0, 1e-12) == 16);

    const StateFamily paired[] = {StateFamily::PairCoherent, StateFamily::TwoModeSqueezedVacuum};
    const int n_paired = auto_truncation(3.0, 1e-12, paired);
    CHECK(n_paired >= 30);
    CHECK(n_paired <= 64);

    const StateFamily cs_only[] = {StateFamily::Coherent};
    const int n_cs = auto_truncation(30.0, 1e-12, cs_only);
    CHECK(n_cs >= 60);
    CHECK(n_cs <= 110);

    // returned truncation honors the tail contract for every family asked
    for (StateFamily f : kAllFamilies) {
        const StateFamily one[] = {f};
        for (double mean : {0.0, 1.0, 3.0, 30.0}) {
            const int n = auto_truncation(mean, 1e-12, one);
            CHECK(n >= 16);
            CHECK(family_tail(f, mean, n) < 1e-12);
        }
    }
}

TEST_CASE("amplitude_for_mean inverts the mean") {
    const double zeta = amplitude_for_mean(StateFamily::PairCoherent, 3.0);
    const PairedFockVector pc = pair_coherent(zeta, 64);
    CHECK(mean_photon_number(pc) == doctest::Approx(3.0).epsilon(1e-9));

    const double r = amplitude_for_mean(StateFamily::TwoModeSqueezedVacuum, 3.0);
    const PairedFockVector tsv = two_mode_squeezed_vacuum(r, 64);
    CHECK(mean_photon_number(tsv) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("state constructor argument validation") {
    CHECK_THROWS(squeezed_vacuum(-0.1, 0.0, 16));
    CHECK_THROWS(squeezed_vacuum(0.5, 0.0, 1));
    CHECK_THROWS(two_mode_squeezed_vacuum(-1.0, 16));
    CHECK_THROWS(coherent(1.0, 16, 0.0));   // tail_tol out of range
    CHECK_THROWS(coherent(1.0, 16, 1.5));
    CHECK_THROWS(auto_truncation(-1.0, 1e-12));
}
