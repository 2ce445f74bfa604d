#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

// Shell out to the CLI binary and capture exit code, stdout, stderr.

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::filesystem::path make_temp_dir(const std::string& tag) {
    static std::atomic<int> counter{0};
    const auto dir = std::filesystem::temp_directory_path() /
                     ("cmsep_" + tag + "_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir;
}

inline CommandResult run_command(const std::string& cmd) {
    namespace fs = std::filesystem;
    const fs::path dir = make_temp_dir("io");
    const fs::path outp = dir / "out.txt";
    const fs::path errp = dir / "err.txt";
    const std::string full =
        cmd + " >'" + outp.string() + "' 2>'" + errp.string() + "'";
    const int status = std::system(full.c_str());
    CommandResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(outp);
    r.err = slurp(errp);
    std::error_code ec;
    fs::remove_all(dir, ec);
    return r;
}

} // namespace testsupport
