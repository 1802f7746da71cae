#include <map>
#include <set>

#include "ad2mcrl2/scope_graph.hpp"

namespace ad2mcrl2 {
namespace {

// Thompson construction over the label alphabet.
struct Nfa {
  struct State {
    std::vector<int> eps;
    std::vector<std::pair<Label, int>> moves;
  };
  std::vector<State> states;

  int add() {
    states.emplace_back();
    return static_cast<int>(states.size()) - 1;
  }
};

struct Fragment {
  int start;
  int accept;
};

class RegexParser {
 public:
  RegexParser(std::string_view text, Nfa& nfa) : text_(text), nfa_(nfa) {}

  Fragment parse() {
    Fragment f = alternation();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("path query \"" + std::string(text_) + "\": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_epsilon() const {
    return text_.substr(pos_, 2) == "\xCE\xB5" || (pos_ < text_.size() && text_[pos_] == 'e');
  }

  Fragment epsilon() {
    const int s = nfa_.add();
    const int a = nfa_.add();
    nfa_.states[static_cast<std::size_t>(s)].eps.push_back(a);
    return {s, a};
  }

  Fragment alternation() {
    Fragment left = concatenation();
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      Fragment right = concatenation();
      const int s = nfa_.add();
      const int a = nfa_.add();
      nfa_.states[static_cast<std::size_t>(s)].eps = {left.start, right.start};
      nfa_.states[static_cast<std::size_t>(left.accept)].eps.push_back(a);
      nfa_.states[static_cast<std::size_t>(right.accept)].eps.push_back(a);
      left = {s, a};
      skip_ws();
    }
    return left;
  }

  Fragment concatenation() {
    Fragment acc = epsilon();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == '|' || text_[pos_] == ')') return acc;
      Fragment next = postfix();
      nfa_.states[static_cast<std::size_t>(acc.accept)].eps.push_back(next.start);
      acc.accept = next.accept;
    }
  }

  Fragment postfix() {
    Fragment f = atom();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) return f;
      const char c = text_[pos_];
      if (c != '*' && c != '+' && c != '?') return f;
      ++pos_;
      const int s = nfa_.add();
      const int a = nfa_.add();
      auto& start = nfa_.states[static_cast<std::size_t>(s)].eps;
      auto& inner_accept = nfa_.states[static_cast<std::size_t>(f.accept)].eps;
      start.push_back(f.start);
      inner_accept.push_back(a);
      if (c == '*' || c == '?') nfa_.states[static_cast<std::size_t>(s)].eps.push_back(a);
      if (c == '*' || c == '+') nfa_.states[static_cast<std::size_t>(f.accept)].eps.push_back(f.start);
      f = {s, a};
    }
  }

  Fragment atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Fragment f = alternation();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return f;
    }
    if (at_epsilon()) {
      pos_ += text_[pos_] == 'e' ? 1 : 2;
      return epsilon();
    }
    Label l;
    switch (c) {
      case 'P': l = Label::P; break;
      case 'T': l = Label::T; break;
      case 'L': l = Label::L; break;
      case 'E': l = Label::E; break;
      default: fail("unknown label '" + std::string(1, c) + "'");
    }
    ++pos_;
    const int s = nfa_.add();
    const int a = nfa_.add();
    nfa_.states[static_cast<std::size_t>(s)].moves.push_back({l, a});
    return {s, a};
  }

  std::string_view text_;
  Nfa& nfa_;
  std::size_t pos_ = 0;
};

std::set<int> closure(const Nfa& nfa, std::set<int> states) {
  std::vector<int> work(states.begin(), states.end());
  while (!work.empty()) {
    const int s = work.back();
    work.pop_back();
    for (int t : nfa.states[static_cast<std::size_t>(s)].eps) {
      if (states.insert(t).second) work.push_back(t);
    }
  }
  return states;
}

}  // namespace

PathQuery::PathQuery(std::string_view pattern) : pattern_(pattern) {
  Nfa nfa;
  const Fragment f = RegexParser(pattern, nfa).parse();

  std::map<std::set<int>, int> index;
  std::vector<std::set<int>> subsets;
  auto intern = [&](std::set<int> set) {
    auto [it, fresh] = index.emplace(set, static_cast<int>(subsets.size()));
    if (fresh) {
      subsets.push_back(std::move(set));
      delta_.push_back({-1, -1, -1, -1});
      accepting_.push_back(subsets.back().count(f.accept) > 0);
    }
    return it->second;
  };

  intern(closure(nfa, {f.start}));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Label l : {Label::P, Label::T, Label::L, Label::E}) {
      std::set<int> next;
      for (int s : subsets[i]) {
        for (const auto& [ml, t] : nfa.states[static_cast<std::size_t>(s)].moves) {
          if (ml == l) next.insert(t);
        }
      }
      if (next.empty()) continue;
      const int target = intern(closure(nfa, std::move(next)));
      delta_[i][static_cast<std::size_t>(l)] = target;
    }
  }
}

bool PathQuery::matches(const std::vector<Label>& word) const {
  int q = start();
  for (Label l : word) {
    q = step(q, l);
    if (q < 0) return false;
  }
  return accepting(q);
}

}  // namespace ad2mcrl2
