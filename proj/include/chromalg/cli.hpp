#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromalg {

// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromalg
