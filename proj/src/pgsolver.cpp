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

#include "qdpm/pgsolver.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>

namespace qdpm {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column)
{
}

namespace {

struct RawPosition {
    std::uint64_t id;
    Priority priority;
    Player owner;
    std::vector<std::uint64_t> successors;
    std::string name;
    std::size_t line;
    std::size_t column;
};

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

    void advance()
    {
        if (at_end()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
            line_start_ = true;
        } else if (text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != '\r') {
            line_start_ = false;
        }
        ++pos_;
    }

    // Skips whitespace and whole-line `--` comments.
    void skip_space()
    {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (line_start_ && c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

    void expect(char c)
    {
        skip_space();
        if (peek() != c) {
            fail(std::string("expected '") + c + "'" + (at_end() ? " before end of input" : std::string(", found '") + peek() + "'"));
        }
        advance();
    }

    std::uint64_t number(const char* what)
    {
        skip_space();
        std::size_t start = pos_;
        auto l = line_, c = col_;
        while (!at_end() && peek() >= '0' && peek() <= '9') advance();
        if (start == pos_) {
            throw ParseError(std::string("expected ") + what, l, c);
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{}) throw ParseError(std::string(what) + " out of range", l, c);
        return value;
    }

    bool word(std::string_view w)
    {
        skip_space();
        if (text_.substr(pos_, w.size()) != w) return false;
        auto after = pos_ + w.size();
        if (after < text_.size()) {
            char c = text_[after];
            if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') return false;
        }
        for (std::size_t i = 0; i < w.size(); ++i) advance();
        return true;
    }

    std::string quoted()
    {
        // opening quote already peeked
        advance();
        std::string out;
        while (true) {
            if (at_end()) fail("unterminated name");
            char c = peek();
            if (c == '"') {
                advance();
                return out;
            }
            if (c == '\\') {
                advance();
                if (at_end()) fail("unterminated name");
                c = peek();
            }
            if (c == '\n') fail("newline inside name");
            out.push_back(c);
            advance();
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    bool line_start_ = true;
};

}  // namespace

ParityGame parse_pgsolver(std::string_view text)
{
    Cursor cur(text);
    cur.skip_space();
    if (cur.word("parity")) {
        cur.number("maximal position id");
        cur.expect(';');
    }

    std::vector<RawPosition> raw;
    while (true) {
        cur.skip_space();
        if (cur.at_end()) break;
        if (cur.word("start")) {
            // optional PGSolver start declaration, carries no game structure
            cur.number("start position");
            cur.expect(';');
            continue;
        }
        RawPosition p{};
        p.line = cur.line();
        p.column = cur.column();
        p.id = cur.number("position id");
        auto prio = cur.number("priority");
        if (prio > std::numeric_limits<Priority>::max()) cur.fail("priority out of range");
        p.priority = static_cast<Priority>(prio);
        cur.skip_space();
        auto ol = cur.line(), oc = cur.column();
        auto owner = cur.number("owner");
        if (owner > 1) throw ParseError("owner must be 0 or 1", ol, oc);
        p.owner = owner == 0 ? Player::Even : Player::Odd;
        cur.skip_space();
        if (cur.peek() == ';') cur.fail("position " + std::to_string(p.id) + " has no successors");
        p.successors.push_back(cur.number("successor id"));
        while (true) {
            cur.skip_space();
            if (cur.peek() != ',') break;
            cur.advance();
            p.successors.push_back(cur.number("successor id"));
        }
        cur.skip_space();
        if (cur.peek() == '"') p.name = cur.quoted();
        cur.expect(';');
        raw.push_back(std::move(p));
    }
    if (raw.empty()) throw ParseError("no positions declared", cur.line(), cur.column());

    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (raw[i].id == raw[i - 1].id) {
            throw ParseError("duplicate position id " + std::to_string(raw[i].id), raw[i].line, raw[i].column);
        }
    }
    const bool dense = raw.back().id + 1 == raw.size();
    std::map<std::uint64_t, PositionId> index;
    for (std::size_t i = 0; i < raw.size(); ++i) index.emplace(raw[i].id, static_cast<PositionId>(i));

    std::vector<Position> positions;
    positions.reserve(raw.size());
    for (auto& r : raw) {
        Position p;
        p.priority = r.priority;
        p.owner = r.owner;
        p.name = std::move(r.name);
        if (!dense && p.name.empty()) p.name = std::to_string(r.id);
        for (auto w : r.successors) {
            auto it = index.find(w);
            if (it == index.end()) {
                throw ParseError("dangling successor " + std::to_string(w) + " of position " + std::to_string(r.id),
                                 r.line, r.column);
            }
            p.successors.push_back(it->second);
        }
        positions.push_back(std::move(p));
    }
    return ParityGame(std::move(positions));
}

ParityGame read_pgsolver_file(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open " + path, 0, 0);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_pgsolver(text);
}

std::string write_pgsolver(const ParityGame& game)
{
    std::ostringstream out;
    out << "parity " << (game.empty() ? 0 : game.size() - 1) << ";\n";
    for (PositionId v = 0; v < game.size(); ++v) {
        const auto& p = game.position(v);
        out << v << ' ' << p.priority << ' ' << (p.owner == Player::Even ? 0 : 1) << ' ';
        for (std::size_t i = 0; i < p.successors.size(); ++i) {
            if (i) out << ',';
            out << p.successors[i];
        }
        if (!p.name.empty()) {
            out << " \"";
            for (char c : p.name) {
                if (c == '"' || c == '\\') out << '\\';
                out << c;
            }
            out << '"';
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace qdpm
