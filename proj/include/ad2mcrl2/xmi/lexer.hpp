#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ad2mcrl2/source_span.hpp"

namespace ad2mcrl2::xmi {

enum class TokenKind {
  kTag,        // element name directly after '<' or '</'
  kProperty,   // attribute name inside a tag
  kString,     // quoted attribute value, entities decoded
  kNumber,     // quoted attribute value consisting of digits (and one '.')
  kOpen,       // <
  kOpenClose,  // </
  kSelfClose,  // />
  kClose,      // >
  kEquals,     // =
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

class LexError : public std::runtime_error {
 public:
  LexError(const std::string& message, SourceSpan span)
      : std::runtime_error(message), span_(std::move(span)) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Whitespace, the <?xml?> prolog and comments are dropped. Character data
// between tags is not part of the accepted subset and is a lexical error.
std::vector<Token> tokenize(std::string_view text);

const char* to_string(TokenKind kind);

}  // namespace ad2mcrl2::xmi
