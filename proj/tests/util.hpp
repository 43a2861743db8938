#pragma once
// Shared helpers for the test binaries: repo-relative paths, file IO and
// driving the installed CLI binary through a shell.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testutil {

inline std::string repo_path(const std::string& rel) {
  return std::string(SYMBOLEO_REPO_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct CliResult {
  int status = -1;
  std::string output;  // stdout and stderr, merged
};

// Runs the CLI with the given argument string from the repository root, so
// relative fixture/asset paths in the arguments resolve.
inline CliResult run_cli(const std::string& args) {
  std::string cmd = "cd " + std::string(SYMBOLEO_REPO_DIR) + " && " +
                    std::string(SYMBOLEO_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CliResult result;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

}  // namespace testutil
