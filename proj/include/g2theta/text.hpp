#pragma once

#include <string>
#include <string_view>

#include "g2theta/theta.hpp"

namespace g2theta {

// Complex literals look like "0.5-1.25i": optional sign, real part, a
// mandatory sign, the imaginary magnitude and a trailing 'i'. Exponents are
// accepted in both parts. No whitespace anywhere.
cplx parse_complex(std::string_view text);

// 17 significant digits per part, so parse_complex(format_complex(z)) == z.
std::string format_complex(cplx z);

}  // namespace g2theta
