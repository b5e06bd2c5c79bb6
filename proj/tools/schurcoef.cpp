#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "schurcoef/cli.hpp"

namespace {

bool reads_stdin(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& a = args[i];
        const bool json_flag = a == "--omega" || a == "--gamma" || a == "--b" || a == "--p";
        if (json_flag && (i + 1 == args.size() || args[i + 1] == "-")) return true;
    }
    if (args.empty()) return false;
    const auto& cmd = args.front();
    const char* flag = cmd == "extract"       ? "--omega"
                       : cmd == "reconstruct" ? "--gamma"
                       : cmd == "tmap"        ? "--gamma"
                       : cmd == "invert"      ? "--b"
                       : cmd == "member"      ? "--p"
                                              : nullptr;
    if (!flag) return false;
    for (const auto& a : args)
        if (a == flag || a.rfind(std::string(flag) + "=", 0) == 0) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string input;
    if (reads_stdin(args)) input.assign(std::istreambuf_iterator<char>(std::cin), {});
    const auto result = schurcoef::cli::run(args, input);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
