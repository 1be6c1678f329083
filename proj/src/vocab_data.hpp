#pragma once

#include <string_view>

namespace aias::detail {

// Embedded Turtle sources of the built-in schemas, written against the
// default namespace IRIs.
extern const std::string_view kVdi3682Ttl;
extern const std::string_view kIso7489Ttl;
extern const std::string_view kIso22989Ttl;
extern const std::string_view kAiasTtl;

}  // namespace aias::detail
