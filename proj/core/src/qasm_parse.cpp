// Copyright 2026 The qsynapse developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsynapse/errors.hpp"
#include "qsynapse/qasm.hpp"

namespace qsynapse::qasm {

namespace {

struct Token {
  enum class Kind { Identifier, Integer, Real, String, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Tokens plus the trailing comments, which carry register roles.
struct LexOutput {
  std::vector<Token> tokens;
  std::map<std::size_t, std::string> comment_by_line;
};

LexOutput lex(const std::string& text) {
  LexOutput out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      std::size_t end = i;
      while (end < text.size() && text[end] != '\n') ++end;
      std::string comment = text.substr(i + 2, end - i - 2);
      const std::size_t start = comment.find_first_not_of(" \t");
      const std::size_t stop = comment.find_last_not_of(" \t\r");
      if (start != std::string::npos) {
        out.comment_by_line.emplace(line,
                                    comment.substr(start, stop - start + 1));
      }
      advance(end - i);
      continue;
    }
    const std::size_t tok_line = line;
    const std::size_t tok_col = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = i;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) ||
              text[end] == '_')) {
        ++end;
      }
      out.tokens.push_back({Token::Kind::Identifier,
                            text.substr(i, end - i), tok_line, tok_col});
      advance(end - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = i;
      bool real = false;
      while (end < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[end])) ||
              text[end] == '.')) {
        if (text[end] == '.') real = true;
        ++end;
      }
      out.tokens.push_back({real ? Token::Kind::Real : Token::Kind::Integer,
                            text.substr(i, end - i), tok_line, tok_col});
      advance(end - i);
      continue;
    }
    if (c == '"') {
      std::size_t end = i + 1;
      while (end < text.size() && text[end] != '"' && text[end] != '\n') {
        ++end;
      }
      if (end >= text.size() || text[end] != '"') {
        throw ParseError("unterminated string", tok_line, tok_col);
      }
      out.tokens.push_back({Token::Kind::String,
                            text.substr(i + 1, end - i - 1), tok_line,
                            tok_col});
      advance(end - i + 1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.tokens.push_back({Token::Kind::Symbol, "->", tok_line, tok_col});
      advance(2);
      continue;
    }
    if (c == ';' || c == ',' || c == '[' || c == ']') {
      out.tokens.push_back(
          {Token::Kind::Symbol, std::string(1, c), tok_line, tok_col});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'",
                     tok_line, tok_col);
  }
  out.tokens.push_back({Token::Kind::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lexed_(lex(text)) {}

  Circuit parse() {
    expect_keyword("OPENQASM", "expected OPENQASM version header");
    const Token version = expect(Token::Kind::Real, "expected version number");
    if (version.text != "2.0") {
      throw ParseError("unsupported OPENQASM version " + version.text,
                       version.line, version.column);
    }
    expect_symbol(";");
    expect_keyword("include", "expected include directive");
    const Token inc = expect(Token::Kind::String, "expected include file");
    if (inc.text != "qelib1.inc") {
      throw ParseError("unsupported include \"" + inc.text + "\"", inc.line,
                       inc.column);
    }
    expect_symbol(";");

    while (peek().kind != Token::Kind::End) {
      statement();
    }
    return std::move(circuit_);
  }

 private:
  const Token& peek() const { return lexed_.tokens[pos_]; }
  Token next() { return lexed_.tokens[pos_++]; }

  Token expect(Token::Kind kind, const std::string& message) {
    const Token token = next();
    if (token.kind != kind) {
      throw ParseError(message + ", got '" + describe(token) + "'",
                       token.line, token.column);
    }
    return token;
  }
  void expect_symbol(const std::string& symbol) {
    const Token token = next();
    if (token.kind != Token::Kind::Symbol || token.text != symbol) {
      throw ParseError("expected '" + symbol + "', got '" + describe(token) +
                           "'",
                       token.line, token.column);
    }
  }
  void expect_keyword(const std::string& keyword,
                      const std::string& message) {
    const Token token = next();
    if (token.kind != Token::Kind::Identifier || token.text != keyword) {
      throw ParseError(message + ", got '" + describe(token) + "'",
                       token.line, token.column);
    }
  }
  static std::string describe(const Token& token) {
    return token.kind == Token::Kind::End ? "end of file" : token.text;
  }

  std::uint32_t integer(const Token& token) {
    return static_cast<std::uint32_t>(std::stoul(token.text));
  }

  // name '[' index ']' resolved to a global qubit index.
  QubitIndex operand() {
    const Token name = expect(Token::Kind::Identifier, "expected register");
    const RegisterDescriptor* reg = circuit_.find_register(name.text);
    if (reg == nullptr) {
      throw ParseError("undeclared register '" + name.text + "'", name.line,
                       name.column);
    }
    expect_symbol("[");
    const Token index = expect(Token::Kind::Integer, "expected qubit index");
    expect_symbol("]");
    const std::uint32_t local = integer(index);
    if (local >= reg->width) {
      throw ParseError("index " + index.text + " out of range for register '" +
                           name.text + "' of width " +
                           std::to_string(reg->width),
                       index.line, index.column);
    }
    return reg->qubit(local);
  }

  void statement() {
    const Token head = next();
    if (head.kind != Token::Kind::Identifier) {
      throw ParseError("expected statement, got '" + describe(head) + "'",
                       head.line, head.column);
    }
    try {
      if (head.text == "qreg") {
        declare_qreg(head);
      } else if (head.text == "creg") {
        declare_creg();
      } else if (head.text == "measure") {
        measure();
      } else if (head.text == "barrier") {
        barrier();
      } else if (head.text == "h" || head.text == "x" || head.text == "z") {
        const QubitIndex t = operand();
        expect_symbol(";");
        if (head.text == "h") {
          circuit_.h(t);
        } else if (head.text == "x") {
          circuit_.x(t);
        } else {
          circuit_.z(t);
        }
      } else if (head.text == "cx" || head.text == "cz") {
        const QubitIndex c = operand();
        expect_symbol(",");
        const QubitIndex t = operand();
        expect_symbol(";");
        if (head.text == "cx") {
          circuit_.cx(c, t);
        } else {
          circuit_.cz(c, t);
        }
      } else if (head.text == "ccx") {
        const QubitIndex c1 = operand();
        expect_symbol(",");
        const QubitIndex c2 = operand();
        expect_symbol(",");
        const QubitIndex t = operand();
        expect_symbol(";");
        circuit_.ccx(c1, c2, t);
      } else {
        throw ParseError("unknown gate '" + head.text + "'", head.line,
                         head.column);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& error) {
      // Structural violations (duplicate operands, duplicate names)
      // surface with the statement's location attached.
      throw ParseError(error.what(), head.line, head.column);
    }
  }

  void declare_qreg(const Token& head) {
    const Token name = expect(Token::Kind::Identifier, "expected name");
    expect_symbol("[");
    const Token width = expect(Token::Kind::Integer, "expected width");
    expect_symbol("]");
    expect_symbol(";");
    RegisterRole role = RegisterRole::Ancilla;
    const auto it = lexed_.comment_by_line.find(head.line);
    if (it != lexed_.comment_by_line.end()) {
      if (const auto parsed = register_role_from_name(it->second)) {
        role = *parsed;
      }
    }
    circuit_.allocate_register(name.text, integer(width), role);
  }

  void declare_creg() {
    const Token name = expect(Token::Kind::Identifier, "expected name");
    expect_symbol("[");
    const Token width = expect(Token::Kind::Integer, "expected width");
    expect_symbol("]");
    expect_symbol(";");
    if (!cregs_.emplace(name.text, integer(width)).second) {
      throw ParseError("duplicate classical register '" + name.text + "'",
                       name.line, name.column);
    }
  }

  void measure() {
    const QubitIndex q = operand();
    expect_symbol("->");
    const Token name = expect(Token::Kind::Identifier,
                              "expected classical register");
    const auto it = cregs_.find(name.text);
    if (it == cregs_.end()) {
      throw ParseError("undeclared classical register '" + name.text + "'",
                       name.line, name.column);
    }
    expect_symbol("[");
    const Token index = expect(Token::Kind::Integer, "expected bit index");
    expect_symbol("]");
    expect_symbol(";");
    if (integer(index) >= it->second) {
      throw ParseError("bit " + index.text + " out of range for '" +
                           name.text + "' of width " +
                           std::to_string(it->second),
                       index.line, index.column);
    }
    circuit_.measure(q);
  }

  void barrier() {
    std::vector<QubitIndex> qubits;
    qubits.push_back(operand());
    while (peek().kind == Token::Kind::Symbol && peek().text == ",") {
      next();
      qubits.push_back(operand());
    }
    expect_symbol(";");
    circuit_.barrier(qubits);
  }

  LexOutput lexed_;
  std::size_t pos_ = 0;
  Circuit circuit_;
  std::unordered_map<std::string, std::uint32_t> cregs_;
};

}  // namespace

Circuit parse_qasm(const std::string& text) { return Parser(text).parse(); }

}  // namespace qsynapse::qasm
