#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testing {

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the command line tool with args through the shell; stderr is
/// captured only when merge is set.
inline Run run_cli(const std::string& args, bool merge = false) {
  std::string cmd = std::string(EULNAR_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testing
