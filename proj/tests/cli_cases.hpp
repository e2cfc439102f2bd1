// One small configuration per CLI subcommand, shared by the CLI tests and
// the acceptance runner.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace qgr::testing {

inline const std::vector<std::vector<std::string>>& cli_cases() {
  static const std::vector<std::vector<std::string>> cases = {
      {"relations", "--n", "3", "--kind", "gl"},
      {"hopf-axioms", "--n", "2", "--random", "20", "--seed", "5"},
      {"pairing-table", "--n", "3", "--max-height", "3"},
      {"dual-basis", "--n", "2", "--zeta", "1"},
      {"verify-double", "--n", "2", "--kind", "sl", "--random", "4", "--seed", "3"},
      {"verma", "--n", "3", "--lambda", "1,0,0", "--depth", "3"},
      {"rmatrix", "--n", "2", "--lambda", "1,0", "--mu", "2,0", "--depth", "4", "--budget", "2"},
      {"qybe", "--n", "2", "--lambda", "1,0", "--mu", "1,0", "--nu", "1,0", "--depth", "3"},
      {"hexagon", "--n", "2", "--lambda", "1,0", "--mu", "2,0", "--nu", "1,0", "--depth", "3"},
      {"casimir", "--n", "2", "--lambda", "1,0", "--depth", "4"},
      {"iso-check", "--which", "sl2", "--random", "5", "--seed", "9"},
      {"iso-check", "--which", "chm", "--n", "2"},
      {"prop35", "--n", "3", "--bound", "2"},
      {"qybe", "--n", "2", "--lambda", "1,0", "--mu", "1,0", "--nu", "1,0", "--depth", "3", "--u0", "2/3", "--v0", "5"},
  };
  return cases;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "qgr");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace qgr::testing
