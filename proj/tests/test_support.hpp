#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "sproutlab/sproutlab.hpp"

#ifndef SPROUTLAB_CLI_PATH
#define SPROUTLAB_CLI_PATH ""
#endif
#ifndef SPROUTLAB_DATA_DIR
#define SPROUTLAB_DATA_DIR "data"
#endif

namespace testsupport {

struct CliResult {
    std::string output;  // stdout and stderr, interleaved at the pipe
    int exit_code = -1;
};

// Runs the built CLI through the shell; `args` may include redirects or an env prefix.
inline CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string command = env_prefix + std::string(SPROUTLAB_CLI_PATH) + " " + args + " 2>&1";
    CliResult r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        r.exit_code = WEXITSTATUS(status);
    else if (WIFSIGNALED(status))
        r.exit_code = 128 + WTERMSIG(status);
    return r;
}

// A scratch file under /tmp, removed when the holder leaves scope.
class TempFile {
  public:
    explicit TempFile(const std::string& content, const std::string& suffix = ".txt") {
        static int counter = 0;
        path_ = "/tmp/sproutlab_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++) + suffix;
        std::ofstream f(path_, std::ios::binary);
        f << content;
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::string out((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return out;
}

}  // namespace testsupport
