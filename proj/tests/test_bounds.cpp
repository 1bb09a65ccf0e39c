#include <cmath>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "lapspec/bounds.hpp"
#include "lapspec/report.hpp"

TEST_SUITE_BEGIN("bounds");

using namespace lapspec;

static MomentSequence graph_moments(const Graph& g) {
    return moments_structural(full_census(g));
}

static std::vector<double> scaled_doubles(const Graph& g) {
    std::vector<double> out;
    for (const auto& r : graph_moments(g).scaled()) out.push_back(r.to_double());
    return out;
}

TEST_CASE("hankel pair layout") {
    // K2 scaled moments are powers of 2: rank-1 Hankel structure
    auto hp = hankel_pair(scaled_doubles(generate_complete(2)), 2);
    const double even[] = {1, 2, 4, 2, 4, 8, 4, 8, 16};
    const double odd[] = {2, 4, 8, 4, 8, 16, 8, 16, 32};
    for (int i = 0; i < 9; ++i) {
        CHECK(hp.r_even.a[i] == doctest::Approx(even[i]));
        CHECK(hp.r_odd.a[i] == doctest::Approx(odd[i]));
    }

    auto hp1 = hankel_pair(scaled_doubles(generate_ring(12)), 1);
    CHECK(hp1.r_even.n == 2);
    CHECK(hp1.r_even.at(0, 0) == doctest::Approx(1.0));
    CHECK(hp1.r_even.at(1, 1) == doctest::Approx(72.0 / 11.0));
    CHECK(hp1.r_odd.at(1, 1) == doctest::Approx(240.0 / 11.0));

    CHECK_THROWS_AS((void)hankel_pair(std::vector<double>{1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)hankel_pair(scaled_doubles(generate_ring(12)), 0),
                    std::invalid_argument);
}

TEST_CASE("localizing matrix is affine in x") {
    auto hp = hankel_pair(scaled_doubles(generate_ring(12)), 2);
    auto h0 = localizing_matrix(0.0, hp);
    for (std::size_t i = 0; i < h0.a.size(); ++i) CHECK(h0.a[i] == hp.r_odd.a[i]);

    auto h1 = localizing_matrix(1.5, hp);
    auto h2 = localizing_matrix(4.0, hp);
    for (std::size_t i = 0; i < h1.a.size(); ++i)
        CHECK(h1.a[i] - h2.a[i] == doctest::Approx(2.5 * hp.r_even.a[i]).epsilon(1e-12));

    // K2: the pencil vanishes identically at x = 2 (single atom at 2)
    auto k2 = hankel_pair(scaled_doubles(generate_complete(2)), 2);
    auto hz = localizing_matrix(2.0, k2);
    for (double v : hz.a) CHECK(v == doctest::Approx(0.0).epsilon(1e-9).scale(1));
}

TEST_CASE("bounds on the 12-ring") {
    auto sc = scaled_doubles(generate_ring(12));
    auto a = alpha_bound(sc, 2, kDefaultTol, 5.0);
    auto b = beta_bound(sc, 2, kDefaultTol, 5.0);
    CHECK(a.value == doctest::Approx(0.434863299).epsilon(1e-6));
    CHECK(b.value == doctest::Approx(3.746317234).epsilon(1e-6));
    CHECK(a.hi - a.lo <= kDefaultTol);
    CHECK(b.hi - b.lo <= kDefaultTol);

    SUBCASE("feasibility flips across the bound") {
        auto hp = hankel_pair(sc, 2);
        CHECK(ldlt_psd(localizing_matrix(a.value - 1e-6, hp), kPsdEps).psd);
        CHECK_FALSE(ldlt_psd(localizing_matrix(a.value + 1e-6, hp), kPsdEps).psd);
        auto neg_psd = [&](double x) {
            auto h = localizing_matrix(x, hp);
            for (double& v : h.a) v = -v;
            return ldlt_psd(h, kPsdEps).psd;
        };
        CHECK(neg_psd(b.value + 1e-6));
        CHECK_FALSE(neg_psd(b.value - 1e-6));
    }

    SUBCASE("bracket cap growth recovers from a low cap") {
        auto tight = alpha_bound(sc, 2, kDefaultTol, 0.25);
        CHECK(tight.value == doctest::Approx(a.value).epsilon(1e-8));
        auto high = beta_bound(sc, 2, kDefaultTol, 0.5);
        CHECK(high.value == doctest::Approx(b.value).epsilon(1e-8));
    }
}

TEST_CASE("atomic spectra are recovered exactly") {
    // K_n spectrum {0, n^(n-1)}: one atom, alpha = beta = n
    for (int n : {2, 3, 5}) {
        auto br = bound_report(generate_complete(n), 2);
        CHECK(br.alpha == doctest::Approx(double(n)).epsilon(1e-8));
        CHECK(br.beta == doctest::Approx(double(n)).epsilon(1e-8));
    }
    // star K_{1,m}: atoms {1, m+1}
    for (int m : {3, 5}) {
        auto br = bound_report(generate_star(m + 1), 2);
        CHECK(br.alpha == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(br.beta == doctest::Approx(double(m + 1)).epsilon(1e-8));
    }
    // path P3: nontrivial spectrum {1, 3}
    auto br = bound_report(generate_path(3), 2);
    CHECK(br.alpha == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(br.beta == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("bound report carries diagnostics") {
    BoundOptions opt;
    opt.exact_spectrum = true;
    auto br = bound_report(generate_ring(12), 2, opt);
    CHECK(br.s == 2);
    REQUIRE(br.lambda2.has_value());
    REQUIRE(br.lambdaN.has_value());
    CHECK(*br.lambda2 == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-9));
    CHECK(*br.lambdaN == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(*br.lambda2 <= br.alpha + 1e-9);
    CHECK(br.beta <= *br.lambdaN + 1e-9);
    CHECK(br.warnings.empty());

    // well-conditioned pencil: the eigenvalue route agrees
    REQUIRE(br.alpha_eig.has_value());
    CHECK(br.crosscheck_ok);
    CHECK(*br.alpha_eig == doctest::Approx(br.alpha).epsilon(1e-7));
    CHECK(*br.beta_eig == doctest::Approx(br.beta).epsilon(1e-7));

    // atomic spectrum: R_even singular, eigenvalue route skipped, no warning
    auto atomic = bound_report(generate_complete(3), 2);
    CHECK_FALSE(atomic.alpha_eig.has_value());
    CHECK(atomic.crosscheck_ok);
}

TEST_CASE("disconnected input is flagged but still solved") {
    std::ifstream in(std::string(LAPSPEC_FIXTURES) + "/two_c6.edges");
    REQUIRE(in.good());
    auto g = parse_edge_list(in).graph;
    auto br = bound_report(g, 2);
    REQUIRE(!br.warnings.empty());
    CHECK(br.warnings.front() == "disconnected");

    // same moments as the single 12-ring, so identical bounds
    auto ring = bound_report(generate_ring(12), 2);
    CHECK(br.alpha == doctest::Approx(ring.alpha).epsilon(1e-12));
    CHECK(br.beta == doctest::Approx(ring.beta).epsilon(1e-12));
}

TEST_CASE("edgeless graphs collapse to zero") {
    auto br = bound_report(Graph::from_edges(4, {}), 2);
    CHECK(br.alpha <= kDefaultTol);
    CHECK(br.beta == 0.0);
}

TEST_CASE("order three needs the trace oracle") {
    CHECK_THROWS_AS((void)bound_report(generate_ring(12), 3), std::invalid_argument);
    BoundOptions opt;
    opt.use_trace_oracle = true;
    auto br = bound_report(generate_ring(12), 3, opt);
    // tighter than s = 2 within conditioning slack
    CHECK(br.alpha == doctest::Approx(0.315585922).epsilon(1e-4));
    CHECK(br.beta == doctest::Approx(3.856834212).epsilon(1e-4));
}

TEST_CASE("order monotonicity under the trace oracle") {
    for (int idx = 0; idx < 12; ++idx) {
        auto g = testutil::random_connected_graph(idx, 16);
        BoundOptions opt;
        opt.use_trace_oracle = true;
        auto s2 = bound_report(g, 2, opt);
        auto s3 = bound_report(g, 3, opt);
        CHECK(s3.alpha <= s2.alpha + 1e-6);
        CHECK(s3.beta >= s2.beta - 1e-6);
    }
}

TEST_CASE("bounds enclose the true spectrum edge") {
    for (int idx = 0; idx < 30; ++idx) {
        auto g = testutil::random_connected_graph(idx, 20);
        BoundOptions opt;
        opt.exact_spectrum = true;
        auto br = bound_report(g, 2, opt);
        CHECK(*br.lambda2 <= br.alpha + 1e-6);
        CHECK(br.beta <= *br.lambdaN + 1e-6);
        CHECK(br.alpha <= br.beta + 1e-9);
    }
}

TEST_CASE("census replay bounds") {
    std::ifstream in(std::string(LAPSPEC_FIXTURES) + "/es_grid_census.json");
    REQUIRE(in.good());
    auto census = census_from_json(nlohmann::json::parse(in));
    auto ms = moments_structural(census);
    auto br = bound_report_from_moments(ms, 2);
    CHECK(br.alpha == doctest::Approx(0.898907242).epsilon(1e-5));
    CHECK(br.beta == doctest::Approx(9.194612111).epsilon(1e-5));
}

TEST_CASE("externally measured moment sequences") {
    // the same 98-node census rounded to four significant digits
    MomentSequence coarse;
    coarse.n = 98;
    coarse.m = {Rational(3571, 1000), Rational(2083, 100), Rational(14733, 100),
                Rational(11555, 10), Rational(96866, 10)};
    auto br = bound_report_from_moments(coarse, 2);
    CHECK(br.alpha == doctest::Approx(0.918760148).epsilon(1e-5));
    CHECK(br.beta == doctest::Approx(9.210294331).epsilon(1e-5));

    // a finer rounding stays near the exact-census bounds: the solver is
    // stable under small moment perturbations
    MomentSequence fine;
    fine.n = 98;
    fine.m = {Rational(35714, 10000), Rational(208367, 10000), Rational(1473265, 10000),
              Rational(115548, 100), Rational(96866, 10)};
    auto fr = bound_report_from_moments(fine, 2);
    CHECK(fr.alpha == doctest::Approx(0.898907242).epsilon(2e-3));
    CHECK(fr.beta == doctest::Approx(9.194612111).epsilon(2e-3));
}

TEST_CASE("invalid moment sequences are rejected") {
    std::vector<double> junk = {-1.0, 1.0, -1.0, 1.0, -1.0};
    CHECK_THROWS_AS((void)alpha_bound(junk, 2, kDefaultTol, 4.0), std::runtime_error);
    CHECK_THROWS_AS((void)alpha_bound(scaled_doubles(generate_ring(12)), 2, 0.0, 4.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)alpha_bound(scaled_doubles(generate_ring(12)), 2, kDefaultTol, -1.0),
                    std::invalid_argument);
    MomentSequence empty;
    empty.n = 5;
    CHECK_THROWS_AS((void)bound_report_from_moments(empty, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)bound_report(Graph::from_edges(1, {}), 2), std::invalid_argument);
}

TEST_CASE("bracket caps") {
    CHECK(bracket_cap(generate_ring(12)) == doctest::Approx(5.0));
    CHECK(bracket_cap(generate_star(6)) == doctest::Approx(11.0));
    // min(n, n * mbar_1) + 1
    CHECK(bracket_cap_from_moments(10, 0.5) == doctest::Approx(6.0));
    CHECK(bracket_cap_from_moments(10, 3.0) == doctest::Approx(11.0));
    CHECK_THROWS_AS((void)bracket_cap_from_moments(1, 1.0), std::invalid_argument);
}

TEST_SUITE_END();
