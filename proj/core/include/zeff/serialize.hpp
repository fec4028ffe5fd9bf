#pragma once

#include "zeff/impedance.hpp"
#include "zeff/verify.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zeff {

// Deterministic text output: complex numbers with 12 significant digits,
// rational coefficients exact, CSV with '.' decimals and '\n' endings.
// Identical inputs always produce identical bytes.

/// "a+bi" / "a-bi"; signed zeros are flushed to "0".
std::string format_complex(Complex z);

/// format_complex, or "inf" for the infinity marker.
std::string format_ext_complex(const ExtComplex& v);

/// Ascending exact coefficients: "1,0,1". The zero polynomial is "0".
std::string format_coeff_list(const Polynomial& p);

/// "num=<coeffs> den=<coeffs>".
std::string format_ratfunc_record(const RationalFunction& f);

std::string_view class_name(SolutionClass cls);
std::string_view status_name(CheckStatus status);
std::string_view note_name(CompareNote note);

/// CSV table with the header "omega,re_Z,im_Z,class". Pole rows print nan
/// components, infinite impedances print inf.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// One key=value record per line: lambda, Z, P, class.
std::string format_impedance_result(const ComplexImpedanceResult& result);

/// "check=<name> instance=<...> status=<...> seed=<...> [witness=<...>]".
std::string format_check_report(const CheckReport& report);

} // namespace zeff
