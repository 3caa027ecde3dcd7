#include "ndde/delays.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ndde/bump.hpp"
#include "ndde/errors.hpp"
#include "ndde/io.hpp"

namespace ndde {

namespace {

// Rounds x to the nearest integer if it is within tol of one; throws otherwise.
int snap_to_int(double x, double tol, const std::string& what) {
    const double r = std::round(x);
    if (std::abs(x - r) > tol)
        throw ConfigError(what + " = " + format_g17(x) + " is not an integer multiple");
    return static_cast<int>(r);
}

struct KindParams {
    int R;
    int L;
};

KindParams validate(const DelayFunctionSpec& spec) {
    if (spec.kind == DelayKind::Custom) {
        if (!spec.custom) throw ConfigError("delay_eval: custom kind without evaluator");
        return {0, 0};
    }
    if (!(spec.delta > 0.0)) throw ConfigError("delay_eval: step must be positive");
    if (!(spec.tau >= 0.0) || !(spec.T > 0.0))
        throw ConfigError("delay_eval: need tau >= 0 and T > 0");
    const int R = snap_to_int(spec.tau / spec.delta, 1e-9, "delay_eval: tau/delta");
    const int L = snap_to_int(spec.T / spec.delta, 1e-9, "delay_eval: T/delta");
    switch (spec.kind) {
    case DelayKind::A:
    case DelayKind::B:
        if (spec.j < 1 || spec.j > R)
            throw DomainError("delay_eval: kind A/B needs 1 <= j <= " + std::to_string(R) +
                              ", got j = " + std::to_string(spec.j));
        break;
    case DelayKind::C:
        if (R < 3) throw ConfigError("delay_eval: kind C needs tau >= 3*delta");
        if (spec.j < 0 || spec.j > L - 1)
            throw DomainError("delay_eval: kind C needs 0 <= j <= " + std::to_string(L - 1) +
                              ", got j = " + std::to_string(spec.j));
        break;
    default:
        break;
    }
    return {R, L};
}

} // namespace

std::string DelayFunctionSpec::label() const {
    if (!name.empty()) return name;
    switch (kind) {
    case DelayKind::A: return "A" + std::to_string(j);
    case DelayKind::B: return "B" + std::to_string(j);
    case DelayKind::C: return "C" + std::to_string(j);
    default: return "custom" + std::to_string(j);
    }
}

DelayFunctionSpec DelayFunctionSpec::constant(double value) {
    DelayFunctionSpec spec;
    spec.kind = DelayKind::Custom;
    spec.custom = [value](double) { return value; };
    spec.name = "const";
    return spec;
}

double delay_eval(const DelayFunctionSpec& spec, double t) {
    validate(spec);
    if (spec.kind == DelayKind::Custom) return spec.custom(t);
    if (t < -1e-9 * std::max(1.0, spec.T) || t > spec.T * (1.0 + 1e-9))
        throw DomainError("delay_eval: t = " + format_g17(t) + " outside [0, " + format_g17(spec.T) + "]");

    const double jd = spec.j * spec.delta;
    double v = 0.0;
    switch (spec.kind) {
    case DelayKind::A:
        v = jd;
        break;
    case DelayKind::B:
        v = bump_eval({jd - spec.delta, jd}, t) * jd;
        break;
    case DelayKind::C: {
        // Two smooth pieces that both equal t - j*delta on the overlap
        // [(j+1)*delta, (j-1)*delta + tau]; R >= 3 makes the overlap nonempty,
        // so switching at its midpoint keeps the whole function smooth.
        const double lo_end = jd + spec.delta;
        const double hi_start = jd - spec.delta + spec.tau;
        if (t <= 0.5 * (lo_end + hi_start)) {
            v = bump_eval({jd, lo_end}, t) * (t - jd);
        } else {
            const double g = bump_eval({hi_start, jd + spec.tau}, t);
            v = (1.0 - g) * (t - jd) + g * spec.tau;
        }
        break;
    }
    default:
        break;
    }
    return std::clamp(v, 0.0, spec.tau);
}

std::string AlignmentTable::csv() const {
    std::ostringstream out;
    out << "l";
    for (const auto& name : labels) out << ',' << name;
    out << '\n';
    for (int l = 0; l <= L; ++l) {
        out << l;
        for (std::size_t k = 0; k < labels.size(); ++k)
            out << ',' << alpha[static_cast<std::size_t>(l)][k];
        out << '\n';
    }
    return out.str();
}

AlignmentTable grid_alignment_table(const std::vector<DelayFunctionSpec>& specs, const TimeGrid& grid) {
    for (const auto& spec : specs) {
        if (spec.kind == DelayKind::Custom) continue;
        if (std::abs(spec.delta - grid.delta) > 1e-12 * grid.delta ||
            std::abs(spec.T - grid.horizon()) > 1e-12 * grid.horizon() ||
            std::abs(spec.tau - grid.tau()) > 1e-12 * std::max(1.0, grid.tau()))
            throw ConfigError("grid_alignment_table: delay spec " + spec.label() +
                              " does not live on the supplied grid");
    }

    AlignmentTable table;
    table.L = grid.L;
    table.R = grid.R;
    for (const auto& spec : specs) table.labels.push_back(spec.label());
    table.alpha.assign(static_cast<std::size_t>(grid.L) + 1, std::vector<int>(specs.size(), 0));

    std::ostringstream violations;
    bool bad = false;
    for (int l = 0; l <= grid.L; ++l) {
        for (std::size_t k = 0; k < specs.size(); ++k) {
            const double tau_l = delay_eval(specs[k], l * grid.delta);
            const double ratio = l - tau_l / grid.delta;
            const double rounded = std::round(ratio);
            if (std::abs(ratio - rounded) > 1e-9 || rounded < -grid.R || rounded > l) {
                violations << (bad ? "; " : "") << "(" << specs[k].label() << ", l=" << l
                           << ", ratio=" << format_g17(ratio) << ")";
                bad = true;
                continue;
            }
            table.alpha[static_cast<std::size_t>(l)][k] = static_cast<int>(rounded);
        }
    }
    if (bad) throw AlignmentError("grid_alignment_table: non-integer delayed indices: " + violations.str());
    return table;
}

} // namespace ndde
