#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace hilbcli {

struct CommandResult {
    bool ok = true;
    int exit_code = 0;  // 0 ok, 1 domain error, 2 usage error
    nlohmann::json payload;
    std::string human_text;
};

/// Dispatches one subcommand; deterministic output for fixed input.
CommandResult run(const std::vector<std::string>& args);

/// Parses argv, runs, prints (JSON with --json, text otherwise), returns the
/// exit code.
int main_entry(int argc, char** argv);

}  // namespace hilbcli
