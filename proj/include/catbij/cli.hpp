#pragma once

// Command-line front end. run() takes argv without touching the process
// streams so tests can drive it in-process.
//
//   count  --family {T|S|A|B|P|terms} --n N
//   enum   --family F --n N [--limit K]
//   map    --via {alpha|beta} --from F --to G --input LIT
//   term   --family F --input LIT
//   render --family F --input LIT --mode {ascii|svg} [--out PATH]
//   verify [--max-n N] [--jobs J]
//
// Exit status: 0 on success, 2 on usage errors, 1 on bad literals, invalid
// shapes, arithmetic overflow, or a failed verify check.

#include <iosfwd>

namespace catbij {

inline constexpr int kMaxEnumSize = 14;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catbij
