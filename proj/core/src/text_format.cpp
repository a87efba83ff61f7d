#include <posetq/error.hpp>
#include <posetq/text_format.hpp>

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <vector>

namespace posetq {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string &what) {
  raise(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string word;
  while (in >> word) {
    out.push_back(word);
  }
  return out;
}

std::size_t parse_count(const std::string &word, std::size_t line) {
  std::size_t value = 0;
  const char *end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    fail(line, "expected a non-negative integer, got '" + word + "'");
  }
  return value;
}

struct ChainLine {
  std::size_t line;
  std::string name;
  std::vector<EventId> elements;
  std::vector<Rational> values;
};

} // namespace

Model parse_model(std::string_view text) {
  std::optional<std::size_t> count;
  std::vector<Relation> relations;
  std::vector<std::pair<std::size_t, std::string>> labels;
  std::vector<ChainLine> chains;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto words = split_words(line);
    if (words.empty()) {
      continue;
    }
    const std::string &kw = words[0];
    if (kw != "events" && !count) {
      fail(line_no, "'events N' must precede '" + kw + "'");
    }
    const auto event = [&](const std::string &word) {
      const std::size_t id = parse_count(word, line_no);
      if (id >= *count) {
        fail(line_no, "event " + word + " out of range");
      }
      return EventId(id);
    };
    if (kw == "events") {
      if (count) {
        fail(line_no, "duplicate 'events'");
      }
      if (words.size() != 2) {
        fail(line_no, "expected 'events N'");
      }
      count = parse_count(words[1], line_no);
    } else if (kw == "rel") {
      if (words.size() != 3) {
        fail(line_no, "expected 'rel a b'");
      }
      relations.push_back({event(words[1]), event(words[2])});
    } else if (kw == "label") {
      if (words.size() != 3) {
        fail(line_no, "expected 'label ID NAME'");
      }
      labels.emplace_back(event(words[1]).index, words[2]);
    } else if (kw == "chain") {
      ChainLine c{line_no, words.size() > 1 ? words[1] : "", {}, {}};
      std::size_t i = 2;
      for (; i < words.size() && words[i] != ":"; ++i) {
        c.elements.push_back(event(words[i]));
      }
      if (words.size() < 2 || i == words.size()) {
        fail(line_no, "expected 'chain NAME e1 ... : v1 ...'");
      }
      for (++i; i < words.size(); ++i) {
        try {
          c.values.push_back(parse_rational(words[i]));
        } catch (const Error &e) {
          fail(line_no, e.what());
        }
      }
      if (c.values.size() != c.elements.size()) {
        fail(line_no, "chain '" + c.name + "' lists " + std::to_string(c.elements.size()) +
                          " events but " + std::to_string(c.values.size()) + " values");
      }
      chains.push_back(std::move(c));
    } else {
      fail(line_no, "unknown keyword '" + kw + "'");
    }
  }
  if (!count) {
    raise(ErrorKind::ParseError, "missing 'events N'");
  }

  Model model;
  model.poset = share(Poset::build(*count, relations));
  for (std::size_t i = 0; i < *count; ++i) {
    model.labels.push_back(std::to_string(i));
  }
  for (auto &[id, name] : labels) {
    model.labels[id] = name;
  }
  for (auto &c : chains) {
    model.chains.push_back(
        make_valued_chain(model.poset, std::move(c.elements), std::move(c.values), c.name));
  }
  return model;
}

Model read_model(std::istream &in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_model(text);
}

std::string write_model(const Model &model) {
  std::ostringstream out;
  out << "events " << model.poset->size() << '\n';
  for (std::size_t i = 0; i < model.labels.size(); ++i) {
    if (model.labels[i] != std::to_string(i)) {
      out << "label " << i << ' ' << model.labels[i] << '\n';
    }
  }
  for (const auto &r : model.poset->cover_edges()) {
    out << "rel " << r.lower << ' ' << r.upper << '\n';
  }
  for (const auto &c : model.chains) {
    out << "chain " << c.name();
    for (EventId e : c.chain().elements()) {
      out << ' ' << e;
    }
    out << " :";
    for (const auto &v : c.values()) {
      out << ' ' << to_string(v);
    }
    out << '\n';
  }
  return out.str();
}

} // namespace posetq
