// Copyright 2026 Minimax Solvers Contributors
// Licensed under the Apache License, Version 2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minimax::bench {

// Named invariant suites; prints one PASS/FAIL line per property.
// Returns 0 when every property passes, 1 on any failure, 2 for an unknown
// suite name.
int run_verify_suite(const std::string& name, std::ostream& out);

std::vector<std::string> verify_suite_names();

}  // namespace minimax::bench
