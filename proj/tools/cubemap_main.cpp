// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "cubemap/cli.hpp"

int main(int argc, char **argv) { return cubemap::cli_dispatch(argc, argv, std::cout, std::cerr); }
