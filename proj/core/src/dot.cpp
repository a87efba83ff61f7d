#include <posetq/dot.hpp>
#include <posetq/projection.hpp>
#include <posetq/structure.hpp>

#include <algorithm>
#include <sstream>

namespace posetq {

namespace {

std::string quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

std::string hasse(const Model &model) {
  const Poset &poset = *model.poset;
  std::vector<int> owner(poset.size(), -1);
  for (std::size_t c = 0; c < model.chains.size(); ++c) {
    for (EventId e : model.chains[c].chain().elements()) {
      if (owner[e.index] < 0) {
        owner[e.index] = static_cast<int>(c);
      }
    }
  }

  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t c = 0; c < model.chains.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n    label=" << quote(model.chains[c].name())
        << ";\n";
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (owner[i] == static_cast<int>(c)) {
        out << "    " << i << " [label=" << quote(model.labels[i]) << "];\n";
      }
    }
    out << "  }\n";
  }
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (owner[i] < 0) {
      out << "  " << i << " [label=" << quote(model.labels[i]) << "];\n";
    }
  }
  for (const auto &r : poset.cover_edges()) {
    out << "  " << r.lower << " -> " << r.upper << ";\n";
  }
  for (const auto &from : model.chains) {
    for (const auto &onto : model.chains) {
      if (&from == &onto) {
        continue;
      }
      for (EventId e : from.chain().elements()) {
        auto f = forward_project(e, onto.chain());
        if (f && *f != e) {
          out << "  " << e << " -> " << *f << " [style=dashed, constraint=false];\n";
        }
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string geometric(const Model &model) {
  const auto order = geometric_order(model);
  std::ostringstream out;
  out << "graph geometric {\n  node [shape=circle, style=filled, fillcolor=black, "
         "fontcolor=white];\n";
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    out << "  " << quote(model.chains[order[rank]].name()) << " [pos=\"" << rank
        << ",0!\"];\n";
  }
  for (std::size_t rank = 1; rank < order.size(); ++rank) {
    out << "  " << quote(model.chains[order[rank - 1]].name()) << " -- "
        << quote(model.chains[order[rank]].name()) << ";\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace

std::vector<std::size_t> geometric_order(const Model &model) {
  const std::size_t n = model.chains.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
  }
  if (n < 3) {
    return order;
  }
  const auto between = [&](std::size_t b, std::size_t a, std::size_t c) {
    return chain_between(model.chains[b].chain(), model.chains[a].chain(),
                         model.chains[c].chain());
  };
  std::optional<std::size_t> end;
  for (std::size_t b = 0; b < n && !end; ++b) {
    bool inner = false;
    for (std::size_t a = 0; a < n && !inner; ++a) {
      for (std::size_t c = 0; c < n && !inner; ++c) {
        inner = a != b && c != b && a != c && between(b, a, c);
      }
    }
    if (!inner) {
      end = b;
    }
  }
  if (!end) {
    return order;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != *end) {
      rest.push_back(i);
    }
  }
  // Insertion keeps the listed order where betweenness is silent.
  std::vector<std::size_t> placed;
  for (std::size_t x : rest) {
    auto pos = placed.end();
    for (auto it = placed.begin(); it != placed.end(); ++it) {
      if (between(x, *end, *it)) {
        pos = it;
        break;
      }
    }
    placed.insert(pos, x);
  }
  order.assign(1, *end);
  order.insert(order.end(), placed.begin(), placed.end());
  return order;
}

std::string export_dot(const Model &model, DotMode mode) {
  return mode == DotMode::Hasse ? hasse(model) : geometric(model);
}

} // namespace posetq
