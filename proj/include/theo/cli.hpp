#pragma once

// Command-line front end. Subcommands:
//   classify <n> [--method theodorus|oracle|naive|anthyphairesis]
//   lesson [--start 3] [--limit 99] [--format text|csv]
//          [--until-inconclusive|--exhaust]
//   coverage --max <N> [--format text|csv]
//   anthyphairesis <a> <b> | anthyphairesis --surd <n> [--max-states 10000]
//   criteria [--budget 1000]
// Exit codes: 0 success (criteria: all passed), 1 a criterion failed or a
// subtraction run exceeded its state budget, 2 invalid input.

#include <ostream>
#include <string>
#include <vector>

namespace theo {

// args excludes the program name, natural order. Streams are injected so
// tests can capture output.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace theo
