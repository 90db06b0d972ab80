// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <padic/selftest.hpp>

namespace
{

void print(int id, const std::string &name, bool passed, double seconds, double limit, const std::string &detail)
{
    std::ostringstream line;
    line << (passed ? "PASS" : "FAIL") << "  [" << id << "] " << name << "  (" << std::fixed << std::setprecision(2)
         << seconds << " s, limit " << std::setprecision(0) << limit << " s)  " << detail;
    std::cout << line.str() << std::endl;
}

} // namespace

int main()
{
    bool all = true;
    for (const auto &r : padic::selftest::run_all({})) {
        print(r.id, r.name, r.passed, r.seconds, r.limit_seconds, r.detail);
        all = all && r.passed;
    }

    // 9: the command-line self-test end to end.
    const auto start = std::chrono::steady_clock::now();
    const std::string command = std::string(PADIC_EIS_BINARY) + " selftest > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    const bool cli_ok = code == 0 && seconds < 180.0;
    print(9, "CLI self-test", cli_ok, seconds, 180.0, "exit code " + std::to_string(code));
    all = all && cli_ok;

    std::cout << (all ? "all acceptance criteria passed" : "some acceptance criteria FAILED") << std::endl;
    return all ? 0 : 1;
}
