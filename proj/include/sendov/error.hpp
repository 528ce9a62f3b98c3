/* Copyright (C) 2026 the padic-sendov developers.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef SENDOV_ERROR_HPP
#define SENDOV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sendov {

// Every failure in this library throws a subclass of Error.  `kind` is a
// stable machine-readable tag (the CLI copies it into its error JSON).
struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(k)) {}
};

struct InvalidContext : Error {
    explicit InvalidContext(const std::string& m) : Error("InvalidContext", m) {}
};
struct ContextMismatch : Error {
    explicit ContextMismatch(const std::string& m) : Error("ContextMismatch", m) {}
};
struct NegativeValuation : Error {
    explicit NegativeValuation(const std::string& m) : Error("NegativeValuation", m) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& m) : Error("DivisionByZero", m) {}
};
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& m) : Error("ZeroPolynomial", m) {}
};
struct DegreeTooLow : Error {
    explicit DegreeTooLow(const std::string& m) : Error("DegreeTooLow", m) {}
};
struct NotMonic : Error {
    explicit NotMonic(const std::string& m) : Error("NotMonic", m) {}
};
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& m) : Error("HypothesisViolated", m) {}
};
struct WrongRegime : Error {
    explicit WrongRegime(const std::string& m) : Error("WrongRegime", m) {}
};
struct ProfileInconsistent : Error {
    explicit ProfileInconsistent(const std::string& m) : Error("ProfileInconsistent", m) {}
};
struct PrimeDoesNotDivideDegree : Error {
    explicit PrimeDoesNotDivideDegree(const std::string& m) : Error("PrimeDoesNotDivideDegree", m) {}
};
struct BothZero : Error {
    explicit BothZero(const std::string& m) : Error("BothZero", m) {}
};
struct InvalidFactorization : Error {
    explicit InvalidFactorization(const std::string& m) : Error("InvalidFactorization", m) {}
};
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& m) : Error("InvalidArgument", m) {}
};
struct RamExponentOutOfRange : Error {
    explicit RamExponentOutOfRange(const std::string& m) : Error("RamExponentOutOfRange", m) {}
};
// A state the mathematics rules out; reaching it is a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& m) : Error("InternalError", m) {}
};

// Parse failure; `offset` is the byte position in the original input.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t at)
        : Error("ParseError", msg + " (at byte " + std::to_string(at) + ")"),
          offset(at) {}
};

} // namespace sendov

#endif
