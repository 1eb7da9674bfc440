#pragma once

#include <string_view>

namespace g2theta::detail {

extern const std::string_view kThetaCatalog;
extern const std::string_view kPrintedCatalog;
extern const std::string_view kFCatalog;

}  // namespace g2theta::detail
