// SPDX-License-Identifier: Apache-2.0

#include "smaxdg/cli.hpp"

int main(int argc, char **argv)
{
  return smaxdg::cli::Run(argc, argv);
}
