/*
 * Copyright 2026 The qdpm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QDPM_PGSOLVER_HPP
#define QDPM_PGSOLVER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qdpm/game.hpp"

namespace qdpm {

/// Malformed PGSolver input. line/column are 1-based; 0 when not tied to a location.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/**
 * Parses the PGSolver text format:
 *
 *     parity <maxid>;                               (optional)
 *     <id> <priority> <owner> <succ>(,<succ>)* ["name"];
 *
 * Owner 0 is Even, 1 is Odd. Lines starting with `--` are comments.
 * Positions come back sorted by id. Sparse ids are re-indexed densely and
 * unnamed positions then keep their original id as name.
 */
ParityGame parse_pgsolver(std::string_view text);

/// Reads and parses a file; "-" reads standard input.
ParityGame read_pgsolver_file(const std::string& path);

/// Serialises with a header and ascending ids. Inverse of parse_pgsolver on dense games.
std::string write_pgsolver(const ParityGame& game);

}  // namespace qdpm

#endif
