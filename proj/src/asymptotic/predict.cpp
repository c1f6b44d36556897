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

#include "gapdeg/asymptotic/predict.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "gapdeg/asymptotic/buchstab.hpp"
#include "gapdeg/asymptotic/constants.hpp"
#include "gapdeg/asymptotic/dfunc.hpp"
#include "gapdeg/exact/real.hpp"

namespace gapdeg::asymptotic {

namespace {

constexpr std::array<std::pair<PredictorKind, const char*>, 7> kNames{{
    {PredictorKind::r_buchstab, "r_buchstab"},
    {PredictorKind::p_buchstab, "p_buchstab"},
    {PredictorKind::p_simple, "p_simple"},
    {PredictorKind::f_density, "f_density"},
    {PredictorKind::g_density, "g_density"},
    {PredictorKind::g_reciprocal, "g_reciprocal"},
    {PredictorKind::d_asymptote, "d_asymptote"},
}};

}  // namespace

PredictorKind parse_predictor_kind(const std::string& name) {
    for (const auto& [kind, text] : kNames)
        if (name == text) return kind;
    throw std::invalid_argument("unknown predictor kind '" + name + "'");
}

std::string to_string(PredictorKind kind) {
    for (const auto& [k, text] : kNames)
        if (k == kind) return text;
    throw std::logic_error("unnamed predictor kind");
}

Predictor::Predictor(GridFunction omega, GridFunction d)
    : omega_(std::move(omega)),
      d_(std::move(d)),
      gamma_(exact::euler_gamma(64).to_double()),
      c_(gap_constant(64).to_double()) {}

Predictor Predictor::standard() {
    auto omega = solve_buchstab();
    auto d = solve_d(kDefaultDMax, kDefaultStep, omega);
    return Predictor(std::move(omega), std::move(d));
}

double Predictor::operator()(PredictorKind kind, std::optional<exact::FieldSize> q, unsigned long n,
                             unsigned m) const {
    if (m == 0) throw std::invalid_argument("predict: m must be >= 1");
    const double u = static_cast<double>(n) / m;
    const bool rough = kind == PredictorKind::r_buchstab || kind == PredictorKind::p_buchstab || kind == PredictorKind::p_simple;
    if (rough && n <= m) throw std::invalid_argument("predict: rough-count predictors need n > m");

    switch (kind) {
        case PredictorKind::r_buchstab: {
            if (!q) throw std::invalid_argument("predict: r_buchstab needs q");
            return exact::lambda_q(*q, m, 64).to_double() * std::exp(gamma_) * omega_(u);
        }
        case PredictorKind::p_buchstab:
            return std::exp(gamma_ - exact::harmonic(m, 64).to_double()) * omega_(u);
        case PredictorKind::p_simple:
            return omega_(u) / m;
        case PredictorKind::f_density:
        case PredictorKind::g_density:
            return d_(u);
        case PredictorKind::g_reciprocal:
            return c_ * m / (static_cast<double>(n) + m);
        case PredictorKind::d_asymptote:
            return c_ / (u + 1.0);
    }
    throw std::logic_error("unhandled predictor kind");
}

}  // namespace gapdeg::asymptotic
