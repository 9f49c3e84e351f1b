#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "lcif/error.hpp"
#include "lcif/setcore.hpp"

// Line-based text format, one directive per line:
//
//   # comment
//   n 10
//   k 3
//   G 1 3        generator (1..k elements)
//   S 1 2 3      k-set
//
// `n` and `k` precede all set lines. A document holds G lines or S lines,
// never both. A stream may hold several documents; each starts at its `n`.

namespace lcif {

struct InputDocument {
  GroundContext context;
  std::variant<GeneratorCollection, SetFamily> payload;

  bool is_generators() const {
    return std::holds_alternative<GeneratorCollection>(payload);
  }
  bool empty() const {
    return std::visit([](const auto& c) { return c.empty(); }, payload);
  }

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view tok, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "'" + std::string(tok) + "' is not an integer");
  }
  return v;
}

class DocumentBuilder {
 public:
  bool has_n() const { return n_.has_value(); }

  void directive(const std::vector<std::string_view>& toks, int line) {
    const auto& d = toks[0];
    if (d == "n" || d == "k") {
      if (toks.size() != 2) {
        throw ParseError(line, "'" + std::string(d) + "' takes one integer");
      }
      auto& slot = d == "n" ? n_ : k_;
      if (slot) throw ParseError(line, "repeated '" + std::string(d) + "'");
      slot = parse_int(toks[1], line);
      return;
    }
    if (d != "G" && d != "S") {
      throw ParseError(line, "unknown directive '" + std::string(d) + "'");
    }
    const GroundContext& ctx = context(line);
    if (kind_ && *kind_ != d[0]) {
      throw ParseError(line, "document mixes G and S lines");
    }
    kind_ = d[0];
    if (toks.size() < 2) throw ParseError(line, "set line has no elements");
    std::vector<Element> elems;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      int x = parse_int(toks[t], line);
      if (x < 1 || x > ctx.n()) {
        throw ParseError(line, "element " + std::to_string(x) +
                                   " outside [1, " + std::to_string(ctx.n()) +
                                   "]");
      }
      if (!elems.empty() && x <= elems.back()) {
        throw ParseError(line, "elements are not strictly increasing");
      }
      elems.push_back(x);
    }
    const int size = static_cast<int>(elems.size());
    if (d == "S" && size != ctx.k()) {
      throw ParseError(line, "S line needs exactly k=" +
                                 std::to_string(ctx.k()) + " elements");
    }
    if (d == "G" && size > ctx.k()) {
      throw ParseError(line, "G line has more than k=" +
                                 std::to_string(ctx.k()) + " elements");
    }
    SortedSet s(std::move(elems));
    if (!seen_.insert(s.mask()).second) {
      throw ParseError(line, "duplicate set " + to_string(s));
    }
    sets_.push_back(std::move(s));
  }

  InputDocument finish(int line) {
    const GroundContext& ctx = context(line);
    if (kind_.value_or('S') == 'G') {
      std::vector<GeneratorSet> g;
      for (auto& s : sets_) g.emplace_back(ctx, s.to_vector());
      return InputDocument{ctx, GeneratorCollection(ctx, std::move(g))};
    }
    std::vector<KSet> f;
    for (auto& s : sets_) f.emplace_back(ctx, s.to_vector());
    return InputDocument{ctx, SetFamily(ctx, std::move(f))};
  }

 private:
  const GroundContext& context(int line) {
    if (ctx_) return *ctx_;
    if (!n_) throw ParseError(line, "missing 'n' directive");
    if (!k_) throw ParseError(line, "missing 'k' directive");
    if (*k_ < 2) throw ParseError(line, "requires 4 <= 2k (k >= 2)");
    if (2 * *k_ > *n_) throw ParseError(line, "requires 2k <= n");
    if (*n_ > GroundContext::kMaxN) {
      throw ParseError(line, "requires n <= " +
                                 std::to_string(GroundContext::kMaxN));
    }
    ctx_.emplace(*n_, *k_);
    return *ctx_;
  }

  std::optional<int> n_;
  std::optional<int> k_;
  std::optional<GroundContext> ctx_;
  std::optional<char> kind_;
  std::vector<SortedSet> sets_;
  std::unordered_set<std::uint64_t> seen_;
};

}  // namespace detail

/// Parses a stream of one or more documents.
inline std::vector<InputDocument> parse_documents(std::string_view text) {
  std::vector<InputDocument> docs;
  std::optional<detail::DocumentBuilder> cur;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] == "n" && cur && cur->has_n()) {
      docs.push_back(cur->finish(line_no - 1));
      cur.reset();
    }
    if (!cur) cur.emplace();
    cur->directive(toks, line_no);
  }
  if (cur) docs.push_back(cur->finish(line_no));
  if (docs.empty()) throw ParseError(line_no, "no document found");
  return docs;
}

/// Parses exactly one document.
inline InputDocument parse_document(std::string_view text) {
  auto docs = parse_documents(text);
  if (docs.size() != 1) {
    throw ParseError(0, "expected one document, found " +
                            std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

inline std::string format_document(
    const InputDocument& doc, const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "n " << doc.context.n() << '\n' << "k " << doc.context.k() << '\n';
  const char tag = doc.is_generators() ? 'G' : 'S';
  std::visit(
      [&](const auto& coll) {
        for (const auto& s : coll) {
          os << tag;
          for (Element x : s) os << ' ' << x;
          os << '\n';
        }
      },
      doc.payload);
  return os.str();
}

inline std::string format_document(const SetFamily& f,
                                   const std::vector<std::string>& comments = {}) {
  return format_document(InputDocument{f.context(), f}, comments);
}

inline std::string format_document(const GeneratorCollection& g,
                                   const std::vector<std::string>& comments = {}) {
  return format_document(InputDocument{g.context(), g}, comments);
}

}  // namespace lcif
