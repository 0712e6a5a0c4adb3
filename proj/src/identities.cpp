#include "russell/identities.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <stdexcept>
#include <string>

#include "russell/errors.hpp"

namespace russell {

double tolerance_value(ToleranceClass cls) {
    switch (cls) {
        case ToleranceClass::Smooth: return 1e-9;
        case ToleranceClass::NearSingular: return 1e-7;
        case ToleranceClass::Elliptic: return 1e-9;
        case ToleranceClass::Transform: return 1e-8;
    }
    return 1e-9;
}

std::string_view to_string(ToleranceClass cls) {
    switch (cls) {
        case ToleranceClass::Smooth: return "smooth";
        case ToleranceClass::NearSingular: return "near-singular";
        case ToleranceClass::Elliptic: return "elliptic";
        case ToleranceClass::Transform: return "transform";
    }
    return "smooth";
}

Parameter Parameter::continuous(std::string name, double lo, double hi, std::vector<double> mandatory) {
    if (!(lo < hi)) throw DomainError("parameter " + name + ": empty range");
    Parameter p;
    p.name = std::move(name);
    p.kind = ParameterKind::Continuous;
    p.lo = lo;
    p.hi = hi;
    p.mandatory = std::move(mandatory);
    return p;
}

Parameter Parameter::integers(std::string name, int first, int last) {
    std::vector<double> values;
    for (int i = first; i <= last; ++i) values.push_back(i);
    return set(std::move(name), std::move(values), true);
}

Parameter Parameter::set(std::string name, std::vector<double> values, bool integer) {
    if (values.empty()) throw DomainError("parameter " + name + ": empty value set");
    Parameter p;
    p.name = std::move(name);
    p.kind = ParameterKind::Discrete;
    p.values = std::move(values);
    p.lo = *std::min_element(p.values.begin(), p.values.end());
    p.hi = *std::max_element(p.values.begin(), p.values.end());
    p.integer = integer;
    return p;
}

bool Parameter::contains(double v) const {
    if (kind == ParameterKind::Discrete) {
        return std::find(values.begin(), values.end(), v) != values.end();
    }
    return v >= lo && v <= hi;
}

double ParameterPoint::operator[](std::string_view name) const {
    for (const auto& [key, value] : values_) {
        if (key == name) return value;
    }
    throw std::out_of_range("parameter point has no '" + std::string(name) + "'");
}

bool ParameterDomain::contains(const ParameterPoint& point) const {
    if (point.values().size() != parameters.size()) return false;
    for (const auto& param : parameters) {
        double v = 0.0;
        try {
            v = point[param.name];
        } catch (const std::out_of_range&) {
            return false;
        }
        if (!param.contains(v)) return false;
    }
    return true;
}

namespace {

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

// Uniform on the open interval (0, 1); mt19937_64 output is fixed by the
// standard, so the samples are reproducible across platforms.
double open_unit(std::mt19937_64& rng) {
    for (;;) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u > 0.0) return u;
    }
}

std::vector<double> axis_values(const Parameter& param, unsigned samples, std::mt19937_64& rng) {
    if (param.kind == ParameterKind::Discrete) return param.values;
    std::vector<double> out;
    out.reserve(samples + param.mandatory.size());
    const double width = param.hi - param.lo;
    for (unsigned i = 0; i < samples; ++i) {
        out.push_back(param.lo + width * (static_cast<double>(i) + open_unit(rng)) / samples);
    }
    out.insert(out.end(), param.mandatory.begin(), param.mandatory.end());
    return out;
}

}  // namespace

std::vector<ParameterPoint> ParameterDomain::sample(unsigned samples, std::uint64_t seed) const {
    if (samples == 0) throw DomainError("sample: need at least one sample per parameter");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> axes;
    axes.reserve(parameters.size());
    for (const auto& param : parameters) axes.push_back(axis_values(param, samples, rng));

    std::vector<ParameterPoint> points;
    std::vector<std::size_t> index(axes.size(), 0);
    for (;;) {
        std::vector<std::pair<std::string, double>> values;
        values.reserve(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) {
            values.emplace_back(parameters[i].name, axes[i][index[i]]);
        }
        points.emplace_back(std::move(values));
        // Odometer increment, last parameter fastest.
        std::size_t d = axes.size();
        while (d > 0) {
            --d;
            if (++index[d] < axes[d].size()) break;
            index[d] = 0;
            if (d == 0) return points;
        }
        if (axes.empty()) return points;
    }
}

namespace {

struct SideValue {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

SideValue evaluate_side(const SideForm& form, double quad_tol) {
    if (const double* closed = std::get_if<double>(&form)) return {*closed, 0.0, true};
    const auto& integral = std::get<ScaledIntegral>(form);
    QuadratureResult q;
    if (std::isinf(integral.upper)) {
        q = integrate_semi_infinite(integral.integrand, std::max(quad_tol, kMinSemiInfiniteTolerance),
                                    integral.lower);
    } else {
        q = integrate_finite(integral.integrand, integral.lower, integral.upper,
                             std::max(quad_tol, kMinFiniteTolerance));
    }
    const double scale = std::abs(integral.scale);
    return {integral.scale * q.value, scale * q.error_estimate, q.converged};
}

std::string format_point(const ParameterPoint& point) {
    std::string out;
    for (const auto& [name, value] : point.values()) {
        if (!out.empty()) out += ", ";
        out += name + "=" + std::to_string(value);
    }
    return out;
}

}  // namespace

VerificationRecord verify(const IdentitySpec& spec, const ParameterPoint& point,
                          std::optional<double> tol_override) {
    if (!spec.domain.contains(point)) {
        throw DomainError("verify: point (" + format_point(point) + ") is outside the domain of " +
                          spec.id);
    }
    VerificationRecord rec;
    rec.id = spec.id;
    rec.point = point;
    rec.tol = tol_override.value_or(tolerance_value(spec.tolerance_at(point)));
    rec.note = spec.note;

    auto append_note = [&rec](const std::string& text) {
        rec.note = rec.note.empty() ? text : rec.note + "; " + text;
    };

    // Quadratures are asked for two more digits than the identity tolerance.
    const double quad_tol = rec.tol * 1e-2;
    SideValue lhs;
    SideValue rhs;
    try {
        lhs = evaluate_side(spec.lhs(point), quad_tol);
        rhs = evaluate_side(spec.rhs(point), quad_tol);
    } catch (const std::exception& e) {
        rec.pass = false;
        append_note(std::string("evaluation failed: ") + e.what());
        return rec;
    }

    rec.lhs = lhs.value;
    rec.lhs_error = lhs.error;
    rec.rhs = rhs.value;
    rec.rhs_error = rhs.error;
    rec.abs_diff = std::abs(lhs.value - rhs.value);
    rec.rel_diff = rhs.value != 0.0 ? rec.abs_diff / std::abs(rhs.value) : rec.abs_diff;

    const double budget = rec.tol * std::max(1.0, std::abs(rhs.value));
    const bool finite = std::isfinite(lhs.value) && std::isfinite(rhs.value);
    rec.pass = finite && lhs.converged && rhs.converged && rec.abs_diff <= budget &&
               lhs.error + rhs.error <= budget;
    if (!lhs.converged || !rhs.converged) append_note("quadrature did not converge");
    if (!finite) append_note("non-finite value");
    return rec;
}

std::vector<VerificationRecord> sweep(const IdentitySpec& spec, unsigned samples, std::uint64_t seed,
                                      std::optional<double> tol_override) {
    std::vector<VerificationRecord> records;
    for (const auto& point : spec.domain.sample(samples, seed ^ fnv1a(spec.id))) {
        records.push_back(verify(spec, point, tol_override));
    }
    return records;
}

ParameterPoint make_point(std::initializer_list<std::pair<const char*, double>> values) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& [name, value] : values) out.emplace_back(name, value);
    return ParameterPoint(std::move(out));
}

const IdentitySpec* find_identity(std::string_view id) {
    for (const auto& spec : registry()) {
        if (spec.id == id) return &spec;
    }
    return nullptr;
}

}  // namespace russell
