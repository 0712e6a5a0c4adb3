#pragma once

// Registry of definite-integral identities and the machinery that checks one
// identity at one parameter point (verify) or over a sampled domain (sweep).

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "russell/quadrature.hpp"

namespace russell {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class ToleranceClass {
    Smooth,        // 1e-9
    NearSingular,  // 1e-7
    Elliptic,      // 1e-9
    Transform,     // 1e-8; both sides are semi-infinite quadratures
};

double tolerance_value(ToleranceClass cls);
std::string_view to_string(ToleranceClass cls);

enum class ParameterKind {
    Continuous,  // sampled from [lo, hi]
    Discrete,    // every listed value is used
};

struct Parameter {
    std::string name;
    ParameterKind kind = ParameterKind::Continuous;
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> values;     // Discrete: the full set
    std::vector<double> mandatory;  // Continuous: extra points always sampled
    bool integer = false;

    static Parameter continuous(std::string name, double lo, double hi,
                                std::vector<double> mandatory = {});
    static Parameter integers(std::string name, int first, int last);
    static Parameter set(std::string name, std::vector<double> values, bool integer = false);

    bool contains(double v) const;
};

class ParameterPoint {
public:
    ParameterPoint() = default;
    explicit ParameterPoint(std::vector<std::pair<std::string, double>> values)
        : values_(std::move(values)) {}

    /// Throws std::out_of_range for an unknown name.
    double operator[](std::string_view name) const;

    const std::vector<std::pair<std::string, double>>& values() const { return values_; }
    bool empty() const { return values_.empty(); }

private:
    std::vector<std::pair<std::string, double>> values_;
};

struct ParameterDomain {
    std::vector<Parameter> parameters;

    bool contains(const ParameterPoint& point) const;

    /// Cartesian product: continuous parameters contribute `samples` stratified
    /// points (seeded jitter inside each of `samples` equal cells) followed by
    /// their mandatory values; discrete parameters contribute every value.
    /// An empty domain yields a single empty point.
    std::vector<ParameterPoint> sample(unsigned samples, std::uint64_t seed) const;
};

/// int_lower^upper integrand(x) dx, multiplied by scale. upper may be +inf.
struct ScaledIntegral {
    Integrand integrand;
    double lower = 0.0;
    double upper = kInfinity;
    double scale = 1.0;
};

/// One side of an identity: a closed-form number or a quadrature.
using SideForm = std::variant<double, ScaledIntegral>;

struct IdentitySpec {
    std::string id;
    std::string description;
    std::string formula;  // the right-hand side in plain text
    ParameterDomain domain;
    std::function<SideForm(const ParameterPoint&)> lhs;
    std::function<SideForm(const ParameterPoint&)> rhs;
    ToleranceClass tolerance_class = ToleranceClass::Smooth;
    /// Optional per-point override of the tolerance class.
    std::function<ToleranceClass(const ParameterPoint&)> tolerance_rule;
    std::string note;

    ToleranceClass tolerance_at(const ParameterPoint& point) const {
        return tolerance_rule ? tolerance_rule(point) : tolerance_class;
    }
};

struct VerificationRecord {
    std::string id;
    ParameterPoint point;
    double lhs = 0.0;
    double lhs_error = 0.0;
    double rhs = 0.0;
    double rhs_error = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string note;
};

/// The full registry in a fixed order. Built once; immutable.
const std::vector<IdentitySpec>& registry();

/// Looks an identity up by exact id; nullptr when absent.
const IdentitySpec* find_identity(std::string_view id);

/// Evaluates both sides at `point` and applies the pass rule
///   |lhs - rhs| <= tol * max(1, |rhs|)  and  lhs_err + rhs_err <= tol * max(1, |rhs|).
/// Quadrature non-convergence and evaluation exceptions yield a failed record
/// whose note carries the reason. Throws DomainError if point is not in the domain.
VerificationRecord verify(const IdentitySpec& spec, const ParameterPoint& point,
                          std::optional<double> tol_override = std::nullopt);

inline constexpr std::uint64_t kDefaultSeed = 42;

/// verify() at every point of spec.domain.sample(samples, seed ^ hash(id)).
/// Throws DomainError for samples == 0.
std::vector<VerificationRecord> sweep(const IdentitySpec& spec, unsigned samples,
                                      std::uint64_t seed = kDefaultSeed,
                                      std::optional<double> tol_override = std::nullopt);

/// Builds a point from name/value pairs; convenience for tests and bindings.
ParameterPoint make_point(std::initializer_list<std::pair<const char*, double>> values);

}  // namespace russell
