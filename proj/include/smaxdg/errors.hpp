// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_ERRORS_HPP
#define SMAXDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smaxdg
{

// Raised when a computation is well posed in principle but fails numerically, e.g. a singular
// projection system or a non-finite state.
class NumericalError : public std::runtime_error
{
public:
  explicit NumericalError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace smaxdg

#endif  // SMAXDG_ERRORS_HPP
