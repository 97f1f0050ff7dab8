#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ncode/code.hpp"
#include "ncode/geometry.hpp"

namespace ncode {

/// Parse failure carrying the 1-based line number (0 when the problem is the file as a whole).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Code files:
///
///     # comment
///     neurons: 3
///     1 2 3
///     1
///     -
///
/// One codeword per line as increasing neuron indices; "-" is the empty word.
NeuralCode parse_code(std::string_view text);
std::string serialize_code(const NeuralCode& code);

/// Arrangement files:
///
///     dimension: 2
///     topology: closed
///     set 1
///     -1 0 <= 0
///     1 0 <= 1
///     set 2
///     0 1 = 1/2
///
/// Each row is `a_1 ... a_d <rel> b` with rel one of "<=" and "="; numbers are integers or p/q.
/// Sets are numbered 1, 2, ... in order. Row order is preserved.
Arrangement parse_arrangement(std::string_view text);
std::string serialize_arrangement(const Arrangement& arr);

}  // namespace ncode
