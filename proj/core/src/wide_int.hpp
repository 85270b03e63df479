#pragma once

namespace hodge::detail {

// Products of two int64 values, for exact floor division and slope
// comparison without going through GMP.
__extension__ typedef __int128 Int128;

}  // namespace hodge::detail
