#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace autofold {

// Lexical scanner for brace-delimited source (Java-flavored). It only needs to
// be precise about the things region detection cares about: braces outside of
// literals and comments, comment extents, import statements, and identifiers.
enum class LexKind : uint8_t {
  Identifier,
  Keyword,
  BlockComment,
  LineComment,
  StringLiteral,
  CharLiteral,
  OpenBrace,
  CloseBrace,
  ImportStatement,
  Punctuation,
  NumberLiteral,
};

struct LexToken {
  LexKind kind;
  std::string text;    // raw substring of the input
  int start_line = 1;  // 1-based physical lines
  int end_line = 1;
};

struct LexDiagnostic {
  int line = 0;
  std::string message;
};

struct LexResult {
  std::vector<LexToken> tokens;
  std::vector<LexDiagnostic> diagnostics;  // recoverable problems only
  int total_lines = 0;
};

// Number of physical lines; a trailing newline does not open a new line.
int count_lines(std::string_view text);

bool is_java_keyword(std::string_view word);

// Never fails: unterminated comments/literals are closed at end of file (or
// end of line for single-line literals) and reported as diagnostics.
LexResult lex(std::string_view text);

}  // namespace autofold
