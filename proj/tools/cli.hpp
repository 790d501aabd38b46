#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace labgraph::cli {

// Exit codes: 0 holds / succeeded, 1 fails with a witness, 2 usage or input error.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace labgraph::cli
