// posetq: command-line front end for building posets, projecting onto
// chains, quantifying intervals and checking invariants.

#include <posetq/dot.hpp>
#include <posetq/error.hpp>
#include <posetq/generators.hpp>
#include <posetq/interval.hpp>
#include <posetq/projection.hpp>
#include <posetq/spacetime.hpp>
#include <posetq/structure.hpp>
#include <posetq/text_format.hpp>
#include <posetq/verify.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace posetq;

namespace {

struct Source {
  std::string input;
  std::string gen;
  std::string out;
};

void add_source(CLI::App *cmd, Source &src) {
  auto *input = cmd->add_option("--input", src.input, "Poset text file");
  auto *gen = cmd->add_option("--gen", src.gen,
                              "Generator: lattice:U,V | simplex:N | random:SEED,N,D | plane");
  input->excludes(gen);
  cmd->add_option("--out", src.out, "Write output here instead of stdout");
}

Model load(const Source &src) {
  if (!src.input.empty()) {
    std::ifstream in(src.input);
    if (!in) {
      throw CLI::ValidationError("--input", "cannot open '" + src.input + "'");
    }
    return read_model(in);
  }
  if (!src.gen.empty()) {
    return generate_named(src.gen);
  }
  throw CLI::RequiredError("--input or --gen");
}

void emit(const Source &src, const std::string &text) {
  if (src.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(src.out);
  if (!out) {
    throw CLI::ValidationError("--out", "cannot write '" + src.out + "'");
  }
  out << text;
}

std::string label(const Model &m, EventId e) { return m.labels.at(e.index); }

std::string cmd_build(const Model &m) {
  std::ostringstream out;
  out << "events " << m.poset->size() << "\n";
  out << "cover-edges " << m.poset->cover_edges().size() << "\n";
  for (const auto &c : m.chains) {
    out << "chain " << c.name() << " length " << c.size() << "\n";
  }
  return out.str();
}

std::string cmd_project(const Model &m, const std::string &chain) {
  const ValuedChain &P = m.chain(chain);
  std::ostringstream out;
  for (std::size_t i = 0; i < m.poset->size(); ++i) {
    const EventId e(i);
    out << label(m, e) << ' ' << format_projection_pair(e, P) << ' '
        << to_string(classify_projection(e, P.chain()).kind) << "\n";
  }
  return out.str();
}

std::string cmd_classify(const Model &m, const std::vector<std::string> &names) {
  const Chain &P = m.chain(names.at(0)).chain();
  const Chain &Q = m.chain(names.at(1)).chain();
  std::ostringstream out;
  for (std::size_t i = 0; i < m.poset->size(); ++i) {
    const EventId e(i);
    out << label(m, e) << ' ';
    if (!forward_index(P, e) || !backward_index(P, e) || !forward_index(Q, e) ||
        !backward_index(Q, e)) {
      out << "- -\n";
      continue;
    }
    const CollinearityCase c = collinearity_case(e, P, Q);
    out << to_string(c) << ' ' << to_string(betweenness_of(c)) << "\n";
  }
  return out.str();
}

std::string cmd_relate(const Model &m, const std::vector<std::string> &names) {
  const ValuedChain &S = m.chain(names.at(0));
  const ValuedChain &P = m.chain(names.at(1));
  std::ostringstream out;
  const auto range = quantifiable_range(S.chain(), P.chain());
  if (!range) {
    return "not related: no element of '" + S.name() + "' projects both ways onto '" + P.name() +
           "'\n";
  }
  if (range->lo == range->hi) {
    std::ostringstream oss;
    oss << "not related: only element " << S[range->lo] << " of '" << S.name()
        << "' projects both ways onto '" << P.name() << "'\n";
    return oss.str();
  }
  try {
    const LinearRelation rel = detect_linear_relation(S.slice(range->lo, range->hi), P);
    out << "m " << to_string(rel.m) << "\nn " << to_string(rel.n) << "\nstep "
        << to_string(rel.step) << "\n";
    if (rel.step != 0) {
      const LinearRelation unit = rel.normalized();
      out << "unit " << to_string(unit.m) << ' ' << to_string(unit.n) << "\n";
    }
  } catch (const Error &e) {
    out << "not related: " << e.what() << "\n";
  }
  try {
    const bool yes = check_coordinated(S, P, full_window(S.chain(), P.chain()));
    out << "coordinated " << (yes ? "yes" : "no") << "\n";
  } catch (const Error &e) {
    out << "coordinated no (" << e.what() << ")\n";
  }
  return out.str();
}

std::string describe_pair(const IntervalPair &pair) {
  std::ostringstream out;
  const auto [sym, anti] = decompose(pair);
  const IntervalClass cls = classify_interval(pair);
  out << "basis " << to_string(pair.basis) << " " << pair.label << "\n";
  out << "pair " << to_string(pair) << "\n";
  out << "symmetric " << to_string(sym) << "\nantisymmetric " << to_string(anti) << "\n";
  out << "class " << to_string(cls.kind) << (cls.pure ? " pure" : "") << "\n";
  out << "length " << to_string(length_of_pair(pair)) << "\n";
  out << "distance " << to_string(distance_of_pair(pair)) << "\n";
  return out.str();
}

std::string cmd_quantify(const Model &m, const std::vector<std::string> &ends,
                         const std::vector<std::string> &names) {
  const GeneralizedInterval ab{m.event(ends.at(0)), m.event(ends.at(1))};
  const ValuedChain &P = m.chain(names.at(0));
  const ValuedChain &Q = m.chain(names.at(1));
  try {
    return describe_pair(interval_pair_two_chains(ab, P, Q));
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::NotCoordinated && e.kind() != ErrorKind::NotBetween) {
      throw;
    }
  }
  return describe_pair(interval_pair_one_chain(ab, P, betweenness(ab.a, P.chain(), Q.chain()),
                                               betweenness(ab.b, P.chain(), Q.chain())));
}

std::string cmd_transform(const std::string &m, const std::string &n,
                          const std::vector<std::string> &pair) {
  const PairTransform t(parse_rational(m), parse_rational(n));
  const IntervalPair in{parse_rational(pair.at(0)), parse_rational(pair.at(1))};
  const RealPair outp = apply_pair_transform(in, t);
  const Matrix2 l = lorentz_matrix(t);
  std::ostringstream out;
  out << "pair (" << outp.first << ", " << outp.second << ")\n";
  out << "beta " << to_string(beta(t)) << "\n";
  out << "gamma " << gamma(t) << "\n";
  out << "matrix [[" << l[0][0] << ", " << l[0][1] << "], [" << l[1][0] << ", " << l[1][1]
      << "]]\n";
  return out.str();
}

std::string cmd_scalar(const std::vector<std::string> &pair) {
  const IntervalPair in{parse_rational(pair.at(0)), parse_rational(pair.at(1))};
  const ScalarResult s = interval_scalar(in);
  const ScalarLength len = scalar_length(in);
  const MinkowskiForm f = minkowski_form(in);
  std::ostringstream out;
  out << "scalar " << to_string(s.value) << " " << to_string(s.character) << "\n";
  out << "sigma " << len.magnitude << (len.imaginary ? " i" : "") << "\n";
  out << "minkowski " << to_string(f.s2) << " = " << to_string(f.t2) << " - " << to_string(f.x2)
      << "\n";
  return out.str();
}

std::string cmd_dot(const Model &m, const std::vector<std::string> &ends,
                    const std::vector<std::string> &names) {
  const SubspaceProjection pi = subspace_projection(m.event(ends.at(0)), m.event(ends.at(1)),
                                                    m.chain(names.at(0)), m.chain(names.at(1)));
  return "projection " + to_string(pi.value) + (pi.extrapolated ? " extrapolated" : "") + "\n";
}

bool verify_model(const std::string &name, const Model &m, std::ostream &out) {
  bool ok = true;
  for (const auto &r : run_verification(m)) {
    if (r.passed) {
      out << "ok   " << name << ' ' << r.name << "\n";
    } else {
      ok = false;
      out << "FAIL " << name << ' ' << r.name << ": " << r.detail << "\n";
    }
  }
  return ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantify partially ordered sets through chain projections"};
  app.require_subcommand(1);

  Source src;
  std::string chain;
  std::vector<std::string> chains;
  std::vector<std::string> interval;
  std::vector<std::string> pair;
  std::string m_text;
  std::string n_text;
  std::string mode = "hasse";

  auto *build = app.add_subcommand("build", "Load or generate a poset and summarise it");
  add_source(build, src);

  auto *project = app.add_subcommand("project", "Projection pair of every event onto a chain");
  add_source(project, src);
  project->add_option("--chain", chain, "Chain name")->required();

  auto *classify = app.add_subcommand("classify", "Collinearity case of every event");
  add_source(classify, src);
  classify->add_option("--chains", chains, "P Q")->required()->expected(2);

  auto *relate = app.add_subcommand("relate", "Linear relation of chain S against chain P");
  add_source(relate, src);
  relate->add_option("--chains", chains, "S P")->required()->expected(2);

  auto *quantify = app.add_subcommand("quantify", "Interval pair of [a,b]");
  add_source(quantify, src);
  quantify->add_option("--interval", interval, "a b (ids or labels)")->required()->expected(2);
  quantify->add_option("--chains", chains, "P Q")->required()->expected(2);

  auto *transform = app.add_subcommand("transform", "Apply a pair transform");
  transform->add_option("--m", m_text, "Forward step length")->required();
  transform->add_option("--n", n_text, "Backward step length")->required();
  transform->add_option("--pair", pair, "A B")->required()->expected(2);

  auto *scalar = app.add_subcommand("scalar", "Interval scalar of a pair");
  scalar->add_option("--pair", pair, "A B")->required()->expected(2);

  auto *dot = app.add_subcommand("dot", "Subspace projection of [x,y] onto chains P, Q");
  add_source(dot, src);
  dot->add_option("--events", interval, "x y (ids or labels)")->required()->expected(2);
  dot->add_option("--chains", chains, "P Q")->required()->expected(2);

  auto *verify = app.add_subcommand(
      "verify", "Check invariants; without a source, every built-in generator");
  add_source(verify, src);

  auto *exportc = app.add_subcommand("export", "Write DOT or the text format");
  add_source(exportc, src);
  exportc->add_option("--mode", mode, "hasse | geometric | text")
      ->check(CLI::IsMember({"hasse", "geometric", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*build) {
      emit(src, cmd_build(load(src)));
    } else if (*project) {
      emit(src, cmd_project(load(src), chain));
    } else if (*classify) {
      emit(src, cmd_classify(load(src), chains));
    } else if (*relate) {
      emit(src, cmd_relate(load(src), chains));
    } else if (*quantify) {
      emit(src, cmd_quantify(load(src), interval, chains));
    } else if (*transform) {
      std::cout << cmd_transform(m_text, n_text, pair);
    } else if (*scalar) {
      std::cout << cmd_scalar(pair);
    } else if (*dot) {
      emit(src, cmd_dot(load(src), interval, chains));
    } else if (*exportc) {
      const Model m = load(src);
      emit(src, mode == "text"        ? write_model(m)
                : mode == "geometric" ? export_dot(m, DotMode::Geometric)
                                      : export_dot(m, DotMode::Hasse));
    } else if (*verify) {
      std::ostringstream out;
      bool ok = true;
      const auto start = std::chrono::steady_clock::now();
      if (src.input.empty() && src.gen.empty()) {
        for (const auto &spec : builtin_generator_specs()) {
          ok = verify_model(spec, generate_named(spec), out) && ok;
        }
      } else {
        ok = verify_model(src.input.empty() ? src.gen : src.input, load(src), out);
      }
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      out << (ok ? "verified" : "violations found") << " in " << took.count() << " s\n";
      emit(src, out.str());
      return ok ? 0 : 1;
    }
  } catch (const CLI::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::ParseError ? 2 : 1;
  }
  return 0;
}
