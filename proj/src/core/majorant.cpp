#include "bloch/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace bloch {

namespace {

double evaluate(const MajorantSpec& spec, double t)
{
    switch (spec.kind) {
    case MajorantSpec::Kind::identity:
        return t;
    case MajorantSpec::Kind::power:
        return t <= 0.0 ? 0.0 : std::pow(t, spec.exponent);
    case MajorantSpec::Kind::custom: {
        const auto& tab = spec.table;
        if (t <= tab.front().first) {
            return tab.front().second;
        }
        if (t >= tab.back().first) {
            // constant ratio past the table keeps omega(t)/t non-increasing
            return tab.back().second * (t / tab.back().first);
        }
        const auto hi = std::upper_bound(tab.begin(), tab.end(), t,
                                         [](double v, const auto& e) { return v < e.first; });
        const auto lo = hi - 1;
        const double w = (t - lo->first) / (hi->first - lo->first);
        return lo->second + w * (hi->second - lo->second);
    }
    }
    return 0.0;
}

std::string format_point(double t)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", t);
    return buf;
}

} // namespace

std::string to_string(MajorantRejected::Reason reason)
{
    switch (reason) {
    case MajorantRejected::Reason::nonzero_at_origin:
        return "nonzero-at-origin";
    case MajorantRejected::Reason::not_increasing:
        return "not-increasing";
    case MajorantRejected::Reason::ratio_increasing:
        return "ratio-increasing";
    case MajorantRejected::Reason::malformed:
        return "malformed";
    }
    return "unknown";
}

std::vector<double> Majorant::validation_grid()
{
    // log-spaced from 4e-6 to 4
    std::vector<double> grid(kGridPoints);
    for (int k = 0; k < kGridPoints; ++k) {
        const double e = -6.0 * (kGridPoints - 1 - k) / (kGridPoints - 1);
        grid[k] = kGridMax * std::pow(10.0, e);
    }
    grid.back() = kGridMax;
    return grid;
}

Majorant::Majorant(MajorantSpec spec) : spec_(std::move(spec))
{
    using Reason = MajorantRejected::Reason;
    if (spec_.kind == MajorantSpec::Kind::power &&
        !(spec_.exponent > 0.0 && std::isfinite(spec_.exponent))) {
        throw MajorantRejected(Reason::malformed, 0.0, "power majorant requires s > 0");
    }
    if (spec_.kind == MajorantSpec::Kind::custom) {
        auto& tab = spec_.table;
        if (tab.size() < 2) {
            throw MajorantRejected(Reason::malformed, 0.0, "tabulated majorant needs >= 2 points");
        }
        for (std::size_t i = 1; i < tab.size(); ++i) {
            if (!(tab[i].first > tab[i - 1].first)) {
                throw MajorantRejected(Reason::malformed, tab[i].first,
                                       "tabulated abscissae must be strictly ascending");
            }
        }
        if (tab.front().first != 0.0) {
            throw MajorantRejected(Reason::malformed, tab.front().first,
                                   "tabulated majorant must start at t = 0");
        }
    }

    const double at_origin = evaluate(spec_, 0.0);
    if (at_origin != 0.0) {
        throw MajorantRejected(Reason::nonzero_at_origin, 0.0, "majorant rejected: omega(0) != 0");
    }

    const auto grid = validation_grid();
    double prev_value = at_origin;
    double prev_ratio = INFINITY;
    for (const double t : grid) {
        const double value = evaluate(spec_, t);
        if (!(value > prev_value)) {
            throw MajorantRejected(Reason::not_increasing, t,
                                   "majorant rejected: not increasing at t = " + format_point(t));
        }
        const double ratio = value / t;
        if (ratio > prev_ratio * (1.0 + 1e-12)) {
            throw MajorantRejected(Reason::ratio_increasing, t,
                                   "majorant rejected: omega(t)/t increasing at t = " +
                                       format_point(t));
        }
        prev_value = value;
        prev_ratio = ratio;
    }
}

double Majorant::operator()(double t) const { return evaluate(spec_, t); }

double Majorant::log_eval(double log_t) const
{
    switch (spec_.kind) {
    case MajorantSpec::Kind::identity:
        return log_t;
    case MajorantSpec::Kind::power:
        return spec_.exponent * log_t;
    case MajorantSpec::Kind::custom: {
        const auto& first = spec_.table[1];
        if (log_t >= std::log(first.first)) {
            return std::log(evaluate(spec_, std::exp(log_t)));
        }
        return std::log(first.second / first.first) + log_t;
    }
    }
    return log_t;
}

std::string Majorant::descriptor() const
{
    switch (spec_.kind) {
    case MajorantSpec::Kind::identity:
        return "id";
    case MajorantSpec::Kind::power: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "pow:%.15g", spec_.exponent);
        return buf;
    }
    case MajorantSpec::Kind::custom:
        return "custom";
    }
    return "custom";
}

bool Majorant::has_finite_slope_at_zero() const
{
    std::vector<double> ratios;
    for (int j = 10; j <= 40; ++j) {
        const double t = std::ldexp(1.0, -j);
        const double r = evaluate(spec_, t) / t;
        if (!std::isfinite(r)) {
            return false;
        }
        ratios.push_back(r);
    }
    for (std::size_t i = ratios.size() - 5; i < ratios.size(); ++i) {
        if (std::abs(ratios[i] - ratios[i - 1]) > 1e-8 * std::abs(ratios[i])) {
            return false;
        }
    }
    return true;
}

Majorant validate_majorant(const MajorantSpec& candidate) { return Majorant(candidate); }

Majorant parse_majorant(const std::string& text)
{
    if (text == "id" || text == "identity") {
        return Majorant::identity();
    }
    if (text.rfind("pow:", 0) == 0) {
        std::size_t used = 0;
        const std::string rest = text.substr(4);
        double s = 0.0;
        try {
            s = std::stod(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != rest.size() || rest.empty()) {
            throw std::invalid_argument("malformed majorant exponent: " + text);
        }
        return Majorant::power(s);
    }
    throw std::invalid_argument("unknown majorant '" + text + "' (expected id or pow:S)");
}

} // namespace bloch
