#include "zeff/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace zeff {

namespace {

std::string format_component(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0; // drop the sign of negative zero
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

} // namespace

std::string format_complex(Complex z) {
    std::string re = format_component(z.real());
    std::string im = format_component(z.imag());
    if (!im.empty() && im.front() == '-') return re + im + "i";
    return re + "+" + im + "i";
}

std::string format_ext_complex(const ExtComplex& v) { return v.infinite ? "inf" : format_complex(v.value); }

std::string format_coeff_list(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ",";
        out += format_rational(p.coeffs()[i]);
    }
    return out;
}

std::string format_ratfunc_record(const RationalFunction& f) {
    return "num=" + format_coeff_list(f.num()) + " den=" + format_coeff_list(f.den());
}

std::string_view class_name(SolutionClass cls) {
    switch (cls) {
        case SolutionClass::Unique: return "Unique";
        case SolutionClass::Multiple: return "Multiple";
        case SolutionClass::None: return "None";
    }
    return "?";
}

std::string_view status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

std::string_view note_name(CompareNote note) {
    switch (note) {
        case CompareNote::Generic: return "generic";
        case CompareNote::SingularMultiple: return "singular-multiple";
        case CompareNote::SingularNone: return "singular-none";
        case CompareNote::Pole: return "pole";
    }
    return "?";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "omega,re_Z,im_Z,class\n";
    for (const SweepRow& row : rows) {
        out += format_component(row.omega);
        out += ",";
        if (row.status == SweepRowStatus::Pole) {
            out += "nan,nan,Pole";
        } else if (row.result.Z.infinite) {
            out += "inf,inf,";
            out += class_name(row.result.cls);
        } else {
            out += format_component(row.result.Z.value.real());
            out += ",";
            out += format_component(row.result.Z.value.imag());
            out += ",";
            out += class_name(row.result.cls);
        }
        out += "\n";
    }
    return out;
}

std::string format_impedance_result(const ComplexImpedanceResult& result) {
    std::string out;
    out += "lambda=" + format_complex(result.lambda) + "\n";
    out += "Z=" + format_ext_complex(result.Z) + "\n";
    out += "P=" + format_ext_complex(result.P) + "\n";
    out += "class=";
    out += class_name(result.cls);
    out += "\n";
    return out;
}

std::string format_check_report(const CheckReport& report) {
    std::string out = "check=" + report.name;
    if (!report.instance.empty()) out += " instance=\"" + report.instance + "\"";
    out += " status=";
    out += status_name(report.status);
    out += " seed=" + std::to_string(report.seed);
    if (!report.witness.empty()) out += " witness=\"" + report.witness + "\"";
    return out;
}

} // namespace zeff
