#include "ad2mcrl2/xmi/lexer.hpp"

#include <cctype>

namespace ad2mcrl2::xmi {
namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '.' ||
         c == '-';
}

bool is_number(std::string_view s) {
  if (s.empty()) return false;
  bool dot = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (dot || i == 0 || i + 1 == s.size()) return false;
      dot = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

// Decodes &amp; &lt; &gt; &quot;. Anything else is kept verbatim.
std::string decode(std::string_view raw) {
  static constexpr std::pair<std::string_view, char> kEntities[] = {
      {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}};
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    bool matched = false;
    if (raw[i] == '&') {
      for (const auto& [name, ch] : kEntities) {
        if (raw.substr(i, name.size()) == name) {
          out += ch;
          i += name.size();
          matched = true;
          break;
        }
      }
    }
    if (!matched) out += raw[i++];
  }
  return out;
}

}  // namespace

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kTag: return "XML-TAG";
    case TokenKind::kProperty: return "XML-PROPERTY";
    case TokenKind::kString: return "XML-STRING";
    case TokenKind::kNumber: return "XML-NUM";
    case TokenKind::kOpen: return "'<'";
    case TokenKind::kOpenClose: return "'</'";
    case TokenKind::kSelfClose: return "'/>'";
    case TokenKind::kClose: return "'>'";
    case TokenKind::kEquals: return "'='";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
  auto skip_until = [&](std::string_view terminator, const char* what) {
    const std::size_t start = i;
    const std::size_t stop = text.find(terminator, i);
    if (stop == std::string_view::npos) {
      throw LexError(std::string("unterminated ") + what, {start, text.size(), std::nullopt});
    }
    i = stop + terminator.size();
  };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (starts("<?")) {
      skip_until("?>", "processing instruction");
    } else if (starts("<!--")) {
      skip_until("-->", "comment");
    } else if (starts("</")) {
      out.push_back({TokenKind::kOpenClose, "</", i, i + 2});
      i += 2;
    } else if (c == '<') {
      out.push_back({TokenKind::kOpen, "<", i, i + 1});
      ++i;
    } else if (starts("/>")) {
      out.push_back({TokenKind::kSelfClose, "/>", i, i + 2});
      i += 2;
    } else if (c == '>') {
      out.push_back({TokenKind::kClose, ">", i, i + 1});
      ++i;
    } else if (c == '=') {
      out.push_back({TokenKind::kEquals, "=", i, i + 1});
      ++i;
    } else if (c == '"') {
      const std::size_t start = i;
      const std::size_t stop = text.find('"', i + 1);
      if (stop == std::string_view::npos) {
        throw LexError("unterminated string literal", {start, text.size(), std::nullopt});
      }
      std::string value = decode(text.substr(start + 1, stop - start - 1));
      const TokenKind kind = is_number(value) ? TokenKind::kNumber : TokenKind::kString;
      out.push_back({kind, std::move(value), start, stop + 1});
      i = stop + 1;
    } else if (is_name_start(c)) {
      const std::size_t start = i;
      while (i < text.size() && is_name_char(text[i])) ++i;
      const bool after_open = !out.empty() && (out.back().kind == TokenKind::kOpen ||
                                               out.back().kind == TokenKind::kOpenClose);
      out.push_back({after_open ? TokenKind::kTag : TokenKind::kProperty,
                     std::string(text.substr(start, i - start)), start, i});
    } else {
      throw LexError(std::string("illegal character '") + c + "'", {i, i + 1, std::nullopt});
    }
  }
  return out;
}

}  // namespace ad2mcrl2::xmi
