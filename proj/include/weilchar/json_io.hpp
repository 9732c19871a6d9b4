#pragma once

// JSON parsing for module contexts and homs, plus the text renderers
// shared by the CLI and the identity reports.

#include <string>

#include "weilchar/weil.hpp"

namespace weilchar {

/// {"m": int, "divisors": [d_1..d_k, d_1..d_k], "omega": [[..]]?}
/// Without an explicit gram the divisor list must consist of matched
/// halves; generator i is then paired hyperbolically with generator k+i.
SymplecticSpace parse_module_json(const std::string& text);

/// Row-major integer matrix, e.g. [[1,1],[0,1]].
IntMat parse_matrix_json(const std::string& text);

/// "a+bi" with 12 significant digits; pure real/imaginary parts trimmed.
std::string format_complex(cplx z);

std::string format_matrix(const IntMat& a);

std::string check_to_json(const CheckResult& c);

}  // namespace weilchar
