#include "bloch/cli/catalog.hpp"

#include <cmath>
#include <sstream>

namespace bloch::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

double number(const std::string& text, const std::string& name)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size()) {
        throw UnknownCatalogEntry("malformed parameter in catalog name '" + name + "'");
    }
    return v;
}

/// "RE" or "RE,IM"
Complex complex_param(const std::string& text, const std::string& name)
{
    const auto parts = split(text, ',');
    if (parts.size() == 1) {
        return {number(parts[0], name), 0.0};
    }
    if (parts.size() == 2) {
        return {number(parts[0], name), number(parts[1], name)};
    }
    throw UnknownCatalogEntry("malformed complex parameter in catalog name '" + name + "'");
}

[[noreturn]] void unknown(const std::string& name)
{
    std::string msg = "unknown catalog entry '" + name + "'; available:";
    for (const auto& e : catalog_entries()) {
        msg += " " + e.pattern;
    }
    throw UnknownCatalogEntry(msg);
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries()
{
    static const std::vector<CatalogEntry> entries = {
        {"eta", "quadratic extremal -(3 sqrt 3 / 4) z^2 of unit Bloch seminorm"},
        {"f-beta:B", "extremal antiderivative family, beta in (0, 1]"},
        {"identity", "polynomial z"},
        {"half-identity", "polynomial z / 2"},
        {"mobius:A", "disk automorphism (a - z) / (1 - conj(a) z), A = RE or RE,IM"},
        {"kernel:B:P", "power kernel ((1 - |b|^2) / (1 - conj(b) z)^2)^(1/p) of unit Hardy p-norm"},
        {"monomial:N", "polynomial z^N"},
    };
    return entries;
}

Json catalog(const std::string& name)
{
    const auto parts = split(name, ':');
    if (parts.empty()) {
        unknown(name);
    }
    const std::string& head = parts[0];
    if (head == "eta" && parts.size() == 1) {
        return to_json(AnalyticMap::quadratic_extremal());
    }
    if (head == "identity" && parts.size() == 1) {
        return to_json(AnalyticMap::identity());
    }
    if (head == "half-identity" && parts.size() == 1) {
        return to_json(AnalyticMap::polynomial({0.0, 0.5}));
    }
    if (head == "f-beta" && parts.size() == 2) {
        const double beta = number(parts[1], name);
        if (!(beta > 0.0 && beta <= 1.0)) {
            throw UnknownCatalogEntry("f-beta requires beta in (0, 1]");
        }
        return to_json(AnalyticMap::antiderivative_extremal(beta));
    }
    if (head == "mobius" && parts.size() == 2) {
        const Complex a = complex_param(parts[1], name);
        if (!DiskPoint::contains(a)) {
            throw UnknownCatalogEntry("mobius parameter must lie in the open disk");
        }
        return to_json(AnalyticMap::mobius(DiskPoint(a)));
    }
    if (head == "kernel" && parts.size() == 3) {
        const Complex b = complex_param(parts[1], name);
        const double p = number(parts[2], name);
        if (!DiskPoint::contains(b) || !(p > 0.0)) {
            throw UnknownCatalogEntry("kernel requires |b| < 1 and p > 0");
        }
        return to_json(AnalyticMap::power_kernel(DiskPoint(b), p));
    }
    if (head == "monomial" && parts.size() == 2) {
        const double n = number(parts[1], name);
        if (!(n >= 0.0) || n != std::floor(n) || n > 4096) {
            throw UnknownCatalogEntry("monomial degree must be an integer in [0, 4096]");
        }
        return to_json(AnalyticMap::monomial(static_cast<int>(n)));
    }
    unknown(name);
}

} // namespace bloch::cli
