#include "autofold/lexer.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace autofold {

namespace {

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_char(unsigned char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_horizontal_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

int newline_count(std::string_view s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

const std::unordered_set<std::string_view>& keyword_set() {
  static const std::unordered_set<std::string_view> kw = {
      "abstract", "assert",    "boolean",  "break",     "byte",    "case",
      "catch",    "char",      "class",    "const",     "continue", "default",
      "do",       "double",    "else",     "enum",      "extends", "final",
      "finally",  "float",     "for",      "goto",      "if",      "implements",
      "import",   "instanceof", "int",     "interface", "long",    "native",
      "new",      "package",   "private",  "protected", "public",  "return",
      "short",    "static",    "strictfp", "super",     "switch",  "synchronized",
      "this",     "throw",     "throws",   "transient", "try",     "void",
      "volatile", "while",     "true",     "false",     "null",
  };
  return kw;
}

}  // namespace

int count_lines(std::string_view text) {
  if (text.empty()) return 0;
  int lines = newline_count(text);
  if (text.back() != '\n') ++lines;
  return lines;
}

bool is_java_keyword(std::string_view word) { return keyword_set().count(word) > 0; }

LexResult lex(std::string_view text) {
  LexResult out;
  out.total_lines = count_lines(text);

  std::size_t i = 0;
  const std::size_t n = text.size();
  int line = 1;

  // A UTF-8 BOM is treated as leading whitespace.
  if (n >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;

  auto push = [&](LexKind kind, std::size_t start, std::size_t end, int start_line) {
    std::string_view body = text.substr(start, end - start);
    LexToken tok;
    tok.kind = kind;
    tok.text = std::string(body);
    tok.start_line = start_line;
    tok.end_line = start_line + newline_count(body);
    line = tok.end_line;
    out.tokens.push_back(std::move(tok));
  };

  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (is_horizontal_space(c)) {
      ++i;
      continue;
    }

    const std::size_t start = i;
    const int start_line = line;

    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      std::size_t close = text.find("*/", i + 2);
      std::size_t end;
      if (close == std::string_view::npos) {
        out.diagnostics.push_back({start_line, "unterminated block comment"});
        end = n;
      } else {
        end = close + 2;
      }
      push(LexKind::BlockComment, start, end, start_line);
      i = end;
      continue;
    }

    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      std::size_t end = text.find('\n', i + 2);
      if (end == std::string_view::npos) end = n;
      while (end > start && text[end - 1] == '\r') --end;
      push(LexKind::LineComment, start, end, start_line);
      i = end;
      continue;
    }

    if (c == '"') {
      std::size_t end;
      if (i + 2 < n && text[i + 1] == '"' && text[i + 2] == '"') {
        // Text block: spans lines until the closing triple quote.
        std::size_t j = i + 3;
        std::size_t close_pos = std::string_view::npos;
        while (j < n) {
          std::size_t close = text.find("\"\"\"", j);
          if (close == std::string_view::npos) break;
          if (text[close - 1] == '\\') {
            j = close + 1;
            continue;
          }
          close_pos = close;
          break;
        }
        if (close_pos == std::string_view::npos) {
          out.diagnostics.push_back({start_line, "unterminated text block"});
          end = n;
        } else {
          end = close_pos + 3;
        }
      } else {
        std::size_t j = i + 1;
        bool closed = false;
        while (j < n) {
          const char d = text[j];
          if (d == '\\' && j + 1 < n) {
            j += 2;
          } else if (d == '"') {
            ++j;
            closed = true;
            break;
          } else if (d == '\n') {
            break;
          } else {
            ++j;
          }
        }
        if (!closed) out.diagnostics.push_back({start_line, "unterminated string literal"});
        end = j;
        while (end > start + 1 && text[end - 1] == '\r') --end;
      }
      push(LexKind::StringLiteral, start, end, start_line);
      i = end;
      continue;
    }

    if (c == '\'') {
      std::size_t j = i + 1;
      bool closed = false;
      while (j < n) {
        const char d = text[j];
        if (d == '\\' && j + 1 < n) {
          j += 2;
        } else if (d == '\'') {
          ++j;
          closed = true;
          break;
        } else if (d == '\n') {
          break;
        } else {
          ++j;
        }
      }
      if (!closed) out.diagnostics.push_back({start_line, "unterminated character literal"});
      std::size_t end = j;
      while (end > start + 1 && text[end - 1] == '\r') --end;
      push(LexKind::CharLiteral, start, end, start_line);
      i = end;
      continue;
    }

    if (c == '{') {
      push(LexKind::OpenBrace, start, start + 1, start_line);
      ++i;
      continue;
    }
    if (c == '}') {
      push(LexKind::CloseBrace, start, start + 1, start_line);
      ++i;
      continue;
    }

    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < n && is_ident_char(static_cast<unsigned char>(text[j]))) ++j;
      std::string_view word = text.substr(start, j - start);
      if (word == "import") {
        // One token from the keyword through the terminating semicolon; a
        // newline before the semicolon ends the statement early.
        std::size_t end = j;
        while (end < n && text[end] != ';' && text[end] != '\n') ++end;
        if (end < n && text[end] == ';') ++end;
        while (end > start && text[end - 1] == '\r') --end;
        push(LexKind::ImportStatement, start, end, start_line);
        i = end;
      } else {
        push(is_java_keyword(word) ? LexKind::Keyword : LexKind::Identifier, start, j, start_line);
        i = j;
      }
      continue;
    }

    if (is_digit(c)) {
      std::size_t j = i + 1;
      while (j < n) {
        const unsigned char d = static_cast<unsigned char>(text[j]);
        if (is_ident_char(d) || d == '.') {
          ++j;
        } else if ((d == '+' || d == '-') && j > start) {
          const char prev = text[j - 1];
          if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
            ++j;
          } else {
            break;
          }
        } else {
          break;
        }
      }
      push(LexKind::NumberLiteral, start, j, start_line);
      i = j;
      continue;
    }

    push(LexKind::Punctuation, start, start + 1, start_line);
    ++i;
  }

  return out;
}

}  // namespace autofold
