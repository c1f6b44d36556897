/*
   Copyright 2026 The gapdeg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cmath>
#include <vector>

#include "gapdeg/asymptotic/buchstab.hpp"
#include "gapdeg/asymptotic/constants.hpp"
#include "gapdeg/asymptotic/dfunc.hpp"
#include "gapdeg/asymptotic/predict.hpp"

using namespace gapdeg::asymptotic;

namespace {

constexpr double kGamma = 0.57721566490153286061;

// Second-order reference for w on [1, 41]: u w(u) = 1 + int_2^u w(t-1) dt by
// the trapezoid rule at step 1/4096, linear interpolation in between.
struct RefOmega {
    static constexpr int kPerUnit = 4096;
    std::vector<double> w;

    RefOmega() {
        const double k = 1.0 / kPerUnit;
        const int n = 40 * kPerUnit;
        w.resize(n + 1);
        for (int i = 0; i <= kPerUnit; ++i) w[i] = 1.0 / (1.0 + i * k);
        double F = 1.0;  // u w(u) at u = 2
        for (int i = kPerUnit; i < n; ++i) {
            F += 0.5 * k * (w[i - kPerUnit] + w[i + 1 - kPerUnit]);
            w[i + 1] = F / (1.0 + (i + 1) * k);
        }
    }
    double operator()(double u) const {
        if (u < 1.0) return 0.0;
        const double x = (u - 1.0) * kPerUnit;
        const auto i = static_cast<std::size_t>(x);
        if (i + 1 >= w.size()) return std::exp(-kGamma);
        return w[i] + (x - i) * (w[i + 1] - w[i]);
    }
};

const RefOmega& ref_omega() {
    static const RefOmega r;
    return r;
}

// Reference d on [0, u_max] by trapezoid marching at step k; the last panel
// of each integral is cut at (u-1)/2.
std::vector<double> ref_d(double u_max, int per_unit) {
    const double k = 1.0 / per_unit;
    const int n = static_cast<int>(u_max * per_unit);
    std::vector<double> d(n + 1, 1.0);
    const auto& w = ref_omega();
    for (int i = per_unit + 1; i <= n; ++i) {
        const double u = i * k, top = (u - 1.0) / 2.0;
        const auto integrand = [&](double v, double dv) { return dv / (v + 1.0) * w((u - v) / (v + 1.0)); };
        double s = 0.0;
        int j = 0;
        for (; (j + 1) * k <= top; ++j) s += 0.5 * k * (integrand(j * k, d[j]) + integrand((j + 1) * k, d[j + 1]));
        const double rest = top - j * k;
        if (rest > 0.0) {
            const double d_top = d[j] + rest / k * (d[j + 1] - d[j]);
            s += 0.5 * rest * (integrand(j * k, d[j]) + integrand(top, d_top));
        }
        d[i] = 1.0 - s;
    }
    return d;
}

double simpson(const auto& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

const GridFunction& omega() {
    static const GridFunction g = solve_buchstab();
    return g;
}

const GridFunction& dfun() {
    static const GridFunction g = solve_d_default();
    return g;
}

}  // namespace

TEST_CASE("Buchstab closed forms and limit") {
    CHECK(omega()(1.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(omega()(2.5) == doctest::Approx((1.0 + std::log(1.5)) / 2.5).epsilon(1e-11));
    CHECK(omega()(0.7) == 0.0);
    CHECK(buchstab_closed_form(2.5) == doctest::Approx(0.5621860432432657));
    CHECK(omega()(30.0) == doctest::Approx(std::exp(-kGamma)).epsilon(1e-15));
    for (double u : {3.5, 4.25, 6.0, 9.0, 11.75}) {
        CAPTURE(u);
        CHECK(std::abs(omega()(u) - ref_omega()(u)) < 1e-6);
    }
    for (std::size_t i = 0; i < omega().size(); ++i) {
        const double u = omega().grid_point(i);
        if (u >= 10.0) CHECK(std::abs(omega().values[i] - std::exp(-kGamma)) < 1.0 / std::tgamma(u + 1.0));
    }
    CHECK_THROWS_AS(solve_buchstab(1.5), std::invalid_argument);
    CHECK_THROWS_AS(solve_buchstab(12.0, 1.0 / 100.0), std::invalid_argument);
}

TEST_CASE("d on its first units") {
    CHECK(dfun()(0.5) == 1.0);
    CHECK(dfun()(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dfun()(2.0) == doctest::Approx(1.0 - std::log(4.0 / 3.0)).epsilon(1e-10));

    // On [2, 3] the integration range stays inside [0, 1] where d = 1; split
    // where w's argument crosses 2, i.e. v = 1/3.
    const auto integrand = [](double v) { return buchstab_closed_form((3.0 - v) / (v + 1.0)) / (v + 1.0); };
    const double d3 = 1.0 - simpson(integrand, 0.0, 1.0 / 3.0, 2000) - simpson(integrand, 1.0 / 3.0, 1.0, 4000);
    CHECK(std::abs(dfun()(3.0) - d3) < 1e-6);
}

TEST_CASE("d matches an independent trapezoid solve") {
    const auto d = ref_d(8.0, 512);
    for (double u : {2.5, 4.0, 5.5, 8.0}) {
        CAPTURE(u);
        CHECK(std::abs(dfun()(u) - d[static_cast<std::size_t>(u * 512)]) < 2e-5);
    }
}

TEST_CASE("d approaches C/(u+1)") {
    const double C = 1.0 / (1.0 - std::exp(-kGamma));
    const auto dev = [&](double u) { return std::abs(dfun()(u) * (u + 1.0) / C - 1.0); };
    CHECK(dev(20.0) <= 0.05);
    CHECK(dev(20.0) < dev(5.0));
    CHECK(dfun()(40.0) == doctest::Approx(C / 41.0).epsilon(1e-15));
    CHECK_THROWS_AS(solve_d(0.5, kDefaultStep, omega()), std::invalid_argument);
}

TEST_CASE("constants") {
    const auto c = constants(256, omega());
    const double C = 1.0 / (1.0 - std::exp(-kGamma));
    CHECK(c.C.to_double() == doctest::Approx(C).epsilon(1e-15));
    CHECK(c.C.fixed(6) == "2.280291");
    CHECK(c.kappa.fixed(6) == "0.433489");
    CHECK(c.tau.fixed(6) == "0.205466");
    CHECK(std::abs(c.kappa.to_double() - 0.433489) < 1e-6);
    CHECK(std::abs(c.tau.to_double() - 0.205466) < 1e-6);
    CHECK(c.tau.to_double() == doctest::Approx(1.0 / (4.0 + 2.0 * c.kappa.to_double())).epsilon(1e-15));
    REQUIRE(c.kappa.error_bound);
    CHECK(*c.kappa.error_bound < kKappaTolerance);
    CHECK(gap_constant(64).fixed(6) == "2.280291");

    // The defining integral with the reference w and the exact tail.
    const double kappa = c.kappa.to_double();
    const auto& w = ref_omega();
    double K = 0.0;
    for (int a = 1; a < 40; ++a)
        K += simpson([&](double y) { return w(y) * std::pow(y + 1.0, -1.0 - kappa); }, a, a + 1, 4096);
    K += std::exp(-kGamma) * std::pow(41.0, -kappa) / kappa;
    CHECK(std::abs(K - 1.0) < 1e-6);
    CHECK(std::abs(kappa_equation(kappa, omega())) < 1e-9);
    CHECK(kappa_equation(0.3, omega()) > 0.0);
}

TEST_CASE("grid interpolation reproduces cubics") {
    GridFunction g;
    g.origin = 0.0;
    g.step = 1.0 / 8.0;
    for (int i = 0; i <= 16; ++i) {
        const double x = i / 8.0;
        g.values.push_back(x * x * x - 2.0 * x + 1.0);
    }
    g.tail_start = 2.0;
    for (double x : {0.05, 0.3, 0.999, 1.4, 1.97}) CHECK(g(x) == doctest::Approx(x * x * x - 2.0 * x + 1.0).epsilon(1e-13));
}

TEST_CASE("predictors") {
    const Predictor& p = [] () -> const Predictor& {
        static const Predictor pr(omega(), dfun());
        return pr;
    }();
    const double C = 1.0 / (1.0 - std::exp(-kGamma));
    CHECK(p(PredictorKind::g_density, std::nullopt, 7, 7) == doctest::Approx(1.0));
    CHECK(p(PredictorKind::p_buchstab, std::nullopt, 3, 1) ==
          doctest::Approx(std::exp(kGamma - 1.0) * (1.0 + std::log(2.0)) / 3.0).epsilon(1e-10));
    CHECK(p(PredictorKind::d_asymptote, std::nullopt, 5, 5) == doctest::Approx(C / 2.0));
    CHECK(p(PredictorKind::g_reciprocal, std::nullopt, 9, 3) == doctest::Approx(C * 3.0 / 12.0));
    CHECK(p(PredictorKind::p_simple, std::nullopt, 5, 2) == doctest::Approx(omega()(2.5) / 2.0));
    // lambda_2(1) = 1/4.
    CHECK(p(PredictorKind::r_buchstab, gapdeg::exact::FieldSize(2), 3, 1) ==
          doctest::Approx(0.25 * std::exp(kGamma) * omega()(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(p(PredictorKind::r_buchstab, std::nullopt, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(p(PredictorKind::f_density, std::nullopt, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(p(PredictorKind::p_simple, std::nullopt, 2, 2), std::invalid_argument);
    for (auto k : {PredictorKind::r_buchstab, PredictorKind::p_buchstab, PredictorKind::p_simple, PredictorKind::f_density,
                   PredictorKind::g_density, PredictorKind::g_reciprocal, PredictorKind::d_asymptote})
        CHECK(parse_predictor_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_predictor_kind("nope"), std::invalid_argument);
}
