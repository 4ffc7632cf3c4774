// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvk::cli {

// Exit codes: 0 success, 1 domain-level failure (falsified tautology, failed
// law or isomorphism), 2 usage or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvk::cli
