#pragma once

#include <stdexcept>
#include <string>

namespace trihedral {

/// Rejected input: malformed spec text, a generator outside SL(3,C),
/// mismatched exponents, or an out-of-range request.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A mathematically guaranteed invariant failed at run time.  Either the
/// implementation is wrong or the input escaped validation; callers should
/// treat this as fatal rather than recoverable.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace trihedral
