#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns what a process would print, so the whole surface is testable
// in-process.
//
// Input files are JSON:
//   {"generators": [[1,0],[0,1],[1,1]], "mode": "standard",
//    "box_table": {"[1,2]": "3"}, "dimension": 2}
// "mode" ("standard" or "typeB"), "box_table" and "dimension" are optional;
// "dimension" is only needed when "generators" is empty. Index sets in files
// and in all output are 1-based.

#include <string>
#include <vector>

namespace zono::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitDisagreement = 3;

struct Outcome {
    int exit_code = kExitOk;
    std::string out;  // JSON document (or help text)
    std::string err;  // JSON error document
};

Outcome run(const std::vector<std::string>& args);

}  // namespace zono::cli
