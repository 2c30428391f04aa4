#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "prefdom/domain.hpp"

namespace prefdom {

/// Named table fixtures table1..table6, loaded from the embedded domain-file
/// texts. Unknown names raise an error listing the available fixtures.
Domain fixture(std::string_view name);

/// The raw embedded domain-file text; emit_domain(fixture(name)) reproduces
/// it byte-exactly.
std::string_view fixture_text(std::string_view name);

std::vector<std::string> fixture_names();

/// All m! orders over labels a1..am, lexicographic by index sequence.
Domain unrestricted(int m);

/// All orders single-peaked with respect to the spectrum (every top-k set is
/// a spectrum interval). The alternative set takes the spectrum order.
Domain single_peaked(const std::vector<std::string>& spectrum);

/// All orders single-dipped with respect to the spectrum (every bottom-k set
/// is a spectrum interval).
Domain single_dipped(const std::vector<std::string>& spectrum);

}  // namespace prefdom
