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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gapdeg/asymptotic/buchstab.hpp"
#include "gapdeg/asymptotic/constants.hpp"
#include "gapdeg/asymptotic/dfunc.hpp"
#include "gapdeg/exact/estimate.hpp"
#include "gapdeg/exact/numeric.hpp"
#include "gapdeg/exact/real.hpp"
#include "gapdeg/verify/checks.hpp"

using namespace gapdeg;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < budget_s;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d: %s | %s | %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), secs, budget_s);
    std::fflush(stdout);
}

Outcome from_report(const verify::CheckReport& r) {
    std::string d = "worst " + verify::format_double(r.worst_deviation) + " vs " + verify::format_double(r.threshold);
    if (!r.notes.empty()) d += "; " + r.notes.front();
    return {r.pass, d};
}

}  // namespace

int main() {
    criterion(1, "C, kappa, tau to six decimals", 30, [] {
        const auto c = asymptotic::constants(kDefaultPrecisionBits, asymptotic::solve_buchstab());
        const std::string C = c.C.fixed(6), k = c.kappa.fixed(6), t = c.tau.fixed(6);
        return Outcome{C == "2.280291" && k == "0.433489" && t == "0.205466",
                       "C=" + C + " kappa=" + k + " tau=" + t};
    });

    criterion(2, "exact tables equal brute-force censuses", 300, [] {
        return from_report(verify::check_oracle_equivalence({2, 3, 4, 5}, 10'000'000, 40, 100'000));
    });

    verify::Campaign campaign;
    criterion(3, "product expansion equals recurrence", 60, [&] { return from_report(campaign.run("dual")); });

    criterion(4, "n g(n,1) near C at n=2000 and closer than at n=500", 120, [] {
        const double C = asymptotic::gap_constant(64).to_double();
        const auto g = exact::numeric_g_table(1, 2000).values;
        const double far = std::abs(2000 * g[2000] - C), near = std::abs(500 * g[500] - C);
        return Outcome{far / C <= 0.02 && far < near,
                       fmt("n g(n,1) = %.9f, |.-C| = %.3g at n=2000, %.3g at n=500", 2000 * g[2000], far, near)};
    });

    criterion(5, "c_2 estimate settles between n=1000 and n=2000", 120, [] {
        const auto e = exact::cq_estimate(exact::FieldSize(2), 2000, asymptotic::solve_d_default());
        const double drift = std::abs(e.value.to_double() / e.at_half - 1.0);
        return Outcome{drift <= 0.005 && e.label == "estimate",
                       e.label + fmt(": c_2 ~ %.8f (n=2000), %.8f (n=1000), relative drift %.3g", e.value.to_double(),
                                     e.at_half, drift)};
    });

    criterion(6, "Buchstab closed forms and tail bound", 10, [] {
        const auto w = asymptotic::solve_buchstab();
        double worst = 0.0;
        bool tail_ok = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const double u = w.grid_point(i);
            if (u <= 3.0) worst = std::max(worst, std::abs(w.values[i] - asymptotic::buchstab_closed_form(u)));
            if (u >= 10.0)
                tail_ok = tail_ok && std::abs(w.values[i] - std::exp(-exact::euler_gamma(64).to_double())) <
                                         1.0 / std::tgamma(u + 1.0);
        }
        const double h4 = std::pow(w.step, 4);
        return Outcome{worst <= 10 * h4 && tail_ok,
                       fmt("closed-form error %.3g (limit %.3g); tail bound holds: ", worst, 10 * h4) +
                           (tail_ok ? "yes" : "no")};
    });

    criterion(7, "d(u)(u+1)/C tends to 1; grid halving within 16x error bound", 120, [] {
        const double C = asymptotic::gap_constant(64).to_double();
        const auto d = asymptotic::solve_d_default();
        const double h = asymptotic::kDefaultStep;
        const auto fine = asymptotic::solve_d(asymptotic::kDefaultDMax, h / 2, asymptotic::solve_buchstab(12.0, h / 2));
        const auto dev = [&](double u) { return std::abs(d(u) * (u + 1) / C - 1); };
        double worst_ratio = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const double change = std::abs(d.values[i] - fine.values[2 * i]);
            worst_ratio = std::max(worst_ratio, change / d.error_bounds[i]);
        }
        return Outcome{dev(20) <= 0.05 && dev(20) < dev(5) && worst_ratio <= 16.0,
                       fmt("dev(20) = %.4g, dev(5) = %.4g, worst halving change / bound = %.3g", dev(20), dev(5),
                           worst_ratio)};
    });

    criterion(8, "lambda_2(m) e^{H_m} tends to 1 at the expected rate", 30, [] {
        PrecisionGuard guard(kDefaultPrecisionBits);
        const auto dev = [](unsigned m) {
            const BigFloat v = exact::lambda_q(exact::FieldSize(2), m).value * exp(exact::harmonic(m).value);
            return abs(v - 1).convert_to<double>();
        };
        const double d10 = dev(10), d12 = dev(12), d30 = dev(30);
        return Outcome{d12 <= d10 / 2 && d30 <= 1e-4, fmt("dev(10) = %.4g, dev(12) = %.4g, dev(30) = %.4g", d10, d12, d30)};
    });

    criterion(9, "|r - p| bound shape with fitted constant", 120,
              [&] { return from_report(campaign.run("rough_vs_perm")); });

    criterion(10, "partial-sum identities and column inequality", 120,
              [&] { return from_report(campaign.run("identities")); });

    std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
