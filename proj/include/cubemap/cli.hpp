// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace cubemap {

enum ExitStatus : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2 };

/// Runs the cubemap command line. Reports go to `out`, diagnostics to `err`.
int cli_dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace cubemap
