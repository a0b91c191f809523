#ifndef PAMUSIM_TESTS_PROCUTIL_HPP
#define PAMUSIM_TESTS_PROCUTIL_HPP

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace testutil {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

inline RunResult run_cmd(const std::string& command) {
    RunResult result;
    std::string wrapped = command + " 2>&1";
    FILE* pipe = popen(wrapped.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

// One scratch directory per process.
inline const std::string& temp_dir() {
    static std::string dir = [] {
        std::string tmpl = "/tmp/pamusim-test-XXXXXX";
        if (mkdtemp(tmpl.data()) == nullptr) {
            throw std::runtime_error("mkdtemp failed");
        }
        return tmpl;
    }();
    return dir;
}

inline std::string temp_path(const std::string& name) { return temp_dir() + "/" + name; }

inline std::string write_temp_file(const std::string& name, const std::string& content) {
    std::string path = temp_path(name);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    return path;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testutil

#endif  // PAMUSIM_TESTS_PROCUTIL_HPP
