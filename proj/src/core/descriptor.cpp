#include "bloch/descriptor.hpp"

#include <set>

namespace bloch {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_keys(const Json& doc, const std::set<std::string>& allowed)
{
    if (!doc.is_object()) {
        throw DescriptorError("descriptor must be an object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (allowed.count(key) == 0) {
            throw DescriptorError("unknown descriptor field '" + key + "'");
        }
    }
}

const Json& field(const Json& doc, const char* key)
{
    const auto it = doc.find(key);
    if (it == doc.end()) {
        throw DescriptorError(std::string("descriptor is missing field '") + key + "'");
    }
    return *it;
}

double number(const Json& j, const char* what)
{
    if (!j.is_number()) {
        throw DescriptorError(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

std::vector<Complex> complex_list(const Json& j, const char* what)
{
    if (!j.is_array()) {
        throw DescriptorError(std::string(what) + " must be a list of [re, im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        out.push_back(complex_from_json(e));
    }
    return out;
}

DiskPoint disk_point(const Json& j, const char* what)
{
    const Complex z = complex_from_json(j);
    if (!DiskPoint::contains(z)) {
        throw DescriptorError(std::string(what) + " must lie inside the unit disk");
    }
    return DiskPoint(z);
}

} // namespace

Complex complex_from_json(const Json& j)
{
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw DescriptorError("complex value must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

AnalyticMap parse_analytic(const Json& doc)
{
    if (!doc.is_object()) {
        throw DescriptorError("descriptor must be an object");
    }
    const Json& kind_field = field(doc, "kind");
    if (!kind_field.is_string()) {
        throw DescriptorError("'kind' must be a string");
    }
    const std::string kind = kind_field.get<std::string>();
    try {
        if (kind == "polynomial") {
            require_keys(doc, {"kind", "coefficients"});
            return AnalyticMap::polynomial(complex_list(field(doc, "coefficients"), "coefficients"));
        }
        if (kind == "mobius") {
            require_keys(doc, {"kind", "a"});
            return AnalyticMap::mobius(disk_point(field(doc, "a"), "a"));
        }
        if (kind == "blaschke") {
            require_keys(doc, {"kind", "factors", "rotation"});
            std::vector<DiskPoint> factors;
            for (const auto& z : complex_list(field(doc, "factors"), "factors")) {
                if (!DiskPoint::contains(z)) {
                    throw DescriptorError("Blaschke factors must lie inside the unit disk");
                }
                factors.emplace_back(z);
            }
            const Complex rotation =
                doc.contains("rotation") ? complex_from_json(doc["rotation"]) : Complex(1.0);
            return AnalyticMap::blaschke(std::move(factors), rotation);
        }
        if (kind == "scaled-identity") {
            require_keys(doc, {"kind", "c"});
            return AnalyticMap::scaled_identity(complex_from_json(field(doc, "c")));
        }
        if (kind == "power-kernel") {
            require_keys(doc, {"kind", "b", "p"});
            return AnalyticMap::power_kernel(disk_point(field(doc, "b"), "b"),
                                             number(field(doc, "p"), "p"));
        }
        if (kind == "antiderivative-extremal") {
            require_keys(doc, {"kind", "beta"});
            return AnalyticMap::antiderivative_extremal(number(field(doc, "beta"), "beta"));
        }
        if (kind == "quadratic-extremal") {
            require_keys(doc, {"kind"});
            return AnalyticMap::quadratic_extremal();
        }
        if (kind == "composite") {
            require_keys(doc, {"kind", "outer", "inner", "offset"});
            const Complex offset =
                doc.contains("offset") ? complex_from_json(doc["offset"]) : Complex(0.0);
            return AnalyticMap::composite(parse_analytic(field(doc, "outer")),
                                          parse_analytic(field(doc, "inner")), offset);
        }
    } catch (const DescriptorError&) {
        throw;
    } catch (const std::exception& e) {
        throw DescriptorError(kind + ": " + e.what());
    }
    throw DescriptorError("unknown function kind '" + kind + "'");
}

HarmonicMap parse_harmonic(const Json& doc)
{
    require_keys(doc, {"h", "g"});
    AnalyticMap h = parse_analytic(field(doc, "h"));
    AnalyticMap g = parse_analytic(field(doc, "g"));
    if (std::abs(g.eval(DiskPoint(0.0))) > 1e-12) {
        throw DescriptorError("co-analytic part must satisfy g(0) = 0");
    }
    return HarmonicMap(std::move(h), std::move(g));
}

HarmonicMap parse_function(const Json& doc)
{
    if (doc.is_object() && doc.contains("h")) {
        return parse_harmonic(doc);
    }
    return HarmonicMap::analytic(parse_analytic(doc));
}

Json to_json(const AnalyticMap& f)
{
    Json out;
    out["kind"] = std::string(f.kind_name());
    std::visit(overloaded{
                   [&](const kind::Polynomial& k) {
                       Json list = Json::array();
                       for (const auto& c : k.coefficients) {
                           list.push_back(complex_to_json(c));
                       }
                       out["coefficients"] = std::move(list);
                   },
                   [&](const kind::Mobius& k) { out["a"] = complex_to_json(k.a); },
                   [&](const kind::Blaschke& k) {
                       Json list = Json::array();
                       for (const auto& c : k.factors) {
                           list.push_back(complex_to_json(c));
                       }
                       out["factors"] = std::move(list);
                       out["rotation"] = complex_to_json(k.rotation);
                   },
                   [&](const kind::ScaledIdentity& k) { out["c"] = complex_to_json(k.c); },
                   [&](const kind::PowerKernel& k) {
                       out["b"] = complex_to_json(k.b);
                       out["p"] = k.p;
                   },
                   [&](const kind::AntiderivativeExtremal& k) { out["beta"] = k.beta; },
                   [&](const kind::QuadraticExtremal&) {},
                   [&](const kind::Composite& k) {
                       out["outer"] = to_json(*k.outer);
                       out["inner"] = to_json(*k.inner);
                       out["offset"] = complex_to_json(k.offset);
                   },
               },
               f.kind());
    return out;
}

Json to_json(const HarmonicMap& f)
{
    Json out;
    out["h"] = to_json(f.h());
    out["g"] = to_json(f.g());
    return out;
}

} // namespace bloch
