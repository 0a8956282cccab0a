#pragma once

#include <stdexcept>
#include <string>

namespace rsym {

// Exit-code mapping used by the CLI lives in tools/rsym_cli.cpp.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Breakdown of a block factorization step (singular diagonal block etc.).
struct breakdown_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// An internal invariant the theory guarantees failed; signals a bug.
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rsym
