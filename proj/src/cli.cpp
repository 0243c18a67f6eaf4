#include "schubert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "schubert/classify.hpp"
#include "schubert/face_graph.hpp"
#include "schubert/json_io.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polytope.hpp"
#include "schubert/poset.hpp"
#include "schubert/sweep.hpp"
#include "schubert/tower.hpp"

namespace schubert::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<Permutation, Permutation> parse_pair(const std::string& a, const std::string& b) {
  if (a == "e" && b == "e") throw UsageError("both permutations are 'e'; give one explicitly");
  if (a == "e") {
    const Permutation w = parse_permutation(b);
    return {parse_permutation(a, w.size()), w};
  }
  const Permutation v = parse_permutation(a);
  return {v, parse_permutation(b, v.size())};
}

std::string tuple(const std::vector<long long>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + ")";
}

std::string set_text(const std::vector<int>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}

std::string sequence_text(const IntervalSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.sets.size(); ++i) out += (i ? "," : "") + set_text(seq.sets[i]);
  return out + ")";
}

std::string witness_text(const FactorWitness& f) {
  return f.word.to_string() + " (" + to_string(f.kind) + " at position " + std::to_string(f.position) +
         ", i=" + std::to_string(f.base) + ")";
}

void write_classification(std::ostream& out, const ClassificationReport& r) {
  out << "w: " << r.w.to_string() << '\n'
      << "length: " << r.length << '\n'
      << "complexity: " << r.complexity << '\n'
      << "smooth: " << (r.smooth ? "yes" : "no (singular)") << '\n'
      << "profile: 321=" << r.profile.count_321 << " 3412=" << r.profile.count_3412
      << " combined=" << r.profile.combined << '\n'
      << "distinct-letter word: " << (r.distinct_letters ? "yes" : "no") << '\n'
      << "witness: " << (r.witness ? witness_text(*r.witness) : "none") << '\n'
      << "poset: " << to_string(r.poset) << '\n'
      << "polytope: " << (r.polytope ? to_string(*r.polytope) : "skipped") << '\n';
  if (r.tower)
    out << "tower: I = " << sequence_text(*r.tower) << ", q = " << r.tower->block
        << ", product poset matches: " << (r.tower->product_matches ? "yes" : "no") << '\n';
  out << "consistent: " << (r.consistent ? "yes" : "no") << '\n';
  for (const auto& d : r.disagreements) out << "  disagreement: " << d << '\n';
}

void write_tower(std::ostream& out, const IntervalSequence& seq, const FlagTowerData& data) {
  out << "w: " << seq.w.to_string() << '\n'
      << "kind: " << (seq.smooth() ? "smooth" : "singular") << '\n'
      << "word: " << seq.witness.word.to_string() << '\n'
      << "I: " << sequence_text(seq) << '\n'
      << "q: " << seq.block << '\n'
      << "block word: " << seq.block_word.to_string() << '\n'
      << "fiber sizes:";
  for (int s : data.fiber_sizes) out << ' ' << s;
  out << '\n';
  for (const auto& v : data.vectors) {
    out << "a_{" << v.j << ',' << v.k << "}^(" << v.m << ") = (";
    for (std::size_t p = 0; p < v.values.size(); ++p) out << (p ? "," : "") << v.values[p];
    out << ")\n";
  }
}

void write_polynomials(std::ostream& out, const std::string& title, const std::vector<Polynomial>& ps,
                       const std::vector<std::string>& names) {
  out << title << ":\n";
  for (std::size_t i = 0; i < ps.size(); ++i) out << "  " << i + 1 << ": " << ps[i].to_string(names) << '\n';
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return out;
}

bool matches_filter(const Permutation& w, const std::string& key, const std::string& value) {
  const int wanted = [&] {
    if (value == "yes" || value == "true") return 1;
    if (value == "no" || value == "false") return 0;
    try {
      return std::stoi(value);
    } catch (const std::exception&) {
      throw UsageError("bad filter value '" + value + "'");
    }
  }();
  if (key == "complexity") return complexity(w) == wanted;
  if (key == "length") return length(w) == wanted;
  if (key == "combined") return pattern_profile(w).combined == wanted;
  if (key == "smooth") return is_smooth(w) == (wanted != 0);
  throw UsageError("unknown filter key '" + key + "' (complexity, length, combined, smooth)");
}

// Writes to --output when given, otherwise to `out`.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert variety complexity, Bruhat interval polytopes and classification checks", "schubert"};
  app.set_config("--config", "", "TOML/INI file with option defaults; flags override");
  app.require_subcommand(1);
  app.fallthrough();

  std::string w_text, v_text, word_text, format = "text", output, suite, partition_text;
  bool json = false, f_vector_only = false, no_polytope = false, polytopes = false, no_polytopes = false;
  int n = 0, jobs = 0, samples = 0;
  std::uint64_t seed = SweepOptions{}.seed;
  std::vector<std::string> filters;
  std::vector<std::string> graph;

  auto* classify_cmd = app.add_subcommand("classify", "Classify w against the three equivalence theorems");
  classify_cmd->add_option("w", w_text, "Permutation, e.g. 3412 or [3,4,1,2]")->required();
  classify_cmd->add_flag("--json", json, "JSON output");
  classify_cmd->add_flag("--no-polytope", no_polytope, "Skip the polytope comparison");

  auto* report_cmd = app.add_subcommand("report", "Classification plus tower and cohomology data when defined");
  report_cmd->add_option("w", w_text, "Permutation")->required();
  report_cmd->add_flag("--json", json, "JSON output");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List permutations of S_n passing filters");
  enumerate_cmd->add_option("--n", n, "Size")->required()->check(CLI::Range(1, 9));
  enumerate_cmd->add_option("--filter", filters, "key=value with key in complexity, length, combined, smooth");

  auto* polytope_cmd = app.add_subcommand("polytope", "Bruhat interval polytope Q_{v,w}");
  polytope_cmd->add_option("v", v_text, "Lower permutation ('e' allowed)")->required();
  polytope_cmd->add_option("w", w_text, "Upper permutation")->required();
  polytope_cmd->add_flag("--f-vector", f_vector_only, "Print only the f-vector");
  polytope_cmd->add_option("--format", format, "text, json or off")
      ->check(CLI::IsMember({"text", "json", "off"}));
  polytope_cmd->add_option("--output", output, "Write to this file instead of stdout");

  auto* faces_cmd = app.add_subcommand("faces", "Faces of Q_{v,w} from the face-graph criterion");
  faces_cmd->add_option("v", v_text, "Lower permutation")->required();
  faces_cmd->add_option("w", w_text, "Upper permutation")->required();
  faces_cmd->add_option("--graph", graph, "x y: print the face graph of [x,y] as DOT")->expected(2);
  faces_cmd->add_flag("--json", json, "JSON output");

  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of [v,w] as DOT");
  hasse_cmd->add_option("v", v_text, "Lower permutation")->required();
  hasse_cmd->add_option("w", w_text, "Upper permutation")->required();
  hasse_cmd->add_option("--output", output, "Write to this file instead of stdout");

  auto* bott_cmd = app.add_subcommand("bott", "Bott matrix of a reduced word");
  bott_cmd->add_option("word", word_text, "e.g. \"s1 s2 s1\" or 1,2,1")->required();
  bott_cmd->add_flag("--json", json, "JSON output");

  auto* tower_cmd = app.add_subcommand("tower", "Interval sequence and flag Bott tower vectors");
  tower_cmd->add_option("w", w_text, "Permutation of complexity one")->required();
  tower_cmd->add_flag("--json", json, "JSON output");

  auto* cohomology_cmd = app.add_subcommand("cohomology", "Cohomology ideal generators");
  cohomology_cmd->add_option("w", w_text, "Smooth permutation of complexity one");
  cohomology_cmd->add_option("--partition", partition_text, "Weakly increasing sequence, e.g. 2,3,5,5,5");
  cohomology_cmd->add_flag("--json", json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite over S_n");
  std::string suites_help = "Suite name or 'all':";
  for (const auto& name : suite_names()) suites_help += ' ' + name;
  verify_cmd->add_option("--suite", suite, suites_help)->required();
  verify_cmd->add_option("--n", n, "Size")->required();
  verify_cmd->add_option("--jobs", jobs, "Worker threads (default: SCHUBERT_JOBS or all cores)");
  verify_cmd->add_option("--samples", samples, "Sample count for sampled suites");
  verify_cmd->add_option("--seed", seed, "Sampling seed");
  verify_cmd->add_flag("--polytopes", polytopes, "Include polytope conditions regardless of n");
  verify_cmd->add_flag("--no-polytopes", no_polytopes, "Skip polytope conditions");
  verify_cmd->add_flag("--json", json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (classify_cmd->parsed()) {
      const auto report = classify(parse_permutation(w_text), ClassifyOptions{!no_polytope});
      if (json)
        out << Json(report).dump(2) << '\n';
      else
        write_classification(out, report);
    } else if (report_cmd->parsed()) {
      const Permutation w = parse_permutation(w_text);
      const auto report = classify(w);
      std::optional<CohomologyPresentation> coh;
      if (complexity(w) == 1 && is_smooth(w)) coh = cohomology_presentation(w);
      if (json) {
        Json j{{"classification", report}};
        if (report.tower) j["tower"] = flag_tower_vectors(*report.tower);
        j["cohomology"] = coh ? Json(*coh) : Json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        write_classification(out, report);
        if (report.tower) {
          out << '\n';
          write_tower(out, *report.tower, flag_tower_vectors(*report.tower));
        }
        if (coh) {
          out << '\n';
          write_polynomials(out, "normalized generators", coh->normalized, coh->normalized_variables);
        }
      }
    } else if (enumerate_cmd->parsed()) {
      std::vector<std::pair<std::string, std::string>> parsed;
      for (const auto& f : filters) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw UsageError("filter '" + f + "' is not key=value");
        parsed.emplace_back(f.substr(0, eq), f.substr(eq + 1));
      }
      for (const auto& w : all_permutations(n)) {
        bool keep = true;
        for (const auto& [key, value] : parsed) keep = keep && matches_filter(w, key, value);
        if (keep) out << w.to_string() << '\n';
      }
    } else if (polytope_cmd->parsed()) {
      const auto [v, w] = parse_pair(v_text, w_text);
      const LatticePolytope q = bruhat_interval_polytope(v, w);
      std::ostringstream text;
      if (f_vector_only && format != "json") {
        text << tuple(f_vector(q)) << '\n';
      } else if (format == "json") {
        text << Json(q).dump(2) << '\n';
      } else if (format == "off") {
        text << to_off(q);
      } else {
        text << "Q_{" << v.to_string() << ',' << w.to_string() << "}\n"
             << "dim: " << q.dim << '\n'
             << "vertices: " << q.vertices.size() << '\n'
             << "facets: " << q.facets.size() << '\n'
             << "f-vector: " << tuple(f_vector(q)) << '\n';
      }
      emit(out, output, text.str());
    } else if (faces_cmd->parsed()) {
      const auto [v, w] = parse_pair(v_text, w_text);
      if (!graph.empty()) {
        const Permutation x = parse_permutation(graph[0], w.size());
        const Permutation y = parse_permutation(graph[1], w.size());
        out << face_graph_dot(face_graph(x, y, v, w));
      } else {
        const auto faces = enumerate_faces(v, w);
        if (json) {
          Json list = Json::array();
          for (const auto& f : faces)
            list.push_back(Json{{"x", f.x}, {"y", f.y}, {"dim", f.dim}, {"members", f.members}});
          out << list.dump(2) << '\n';
        } else {
          for (const auto& f : faces)
            out << "dim " << f.dim << ": [" << f.x.to_string() << ',' << f.y.to_string() << "] ("
                << f.members.size() << " vertices)\n";
        }
      }
    } else if (hasse_cmd->parsed()) {
      const auto [v, w] = parse_pair(v_text, w_text);
      emit(out, output, hasse_dot(interval(v, w)));
    } else if (bott_cmd->parsed()) {
      const BottMatrix m = bott_matrix(parse_word(word_text));
      if (json) {
        out << Json(m).dump(2) << '\n';
      } else {
        out << "word: " << m.word.to_string() << '\n';
        for (const auto& row : m.entries) {
          for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << std::setw(2) << row[k];
          out << '\n';
        }
      }
    } else if (tower_cmd->parsed()) {
      const IntervalSequence seq = interval_sequence(parse_permutation(w_text));
      const FlagTowerData data = flag_tower_vectors(seq);
      if (json)
        out << Json{{"sequence", seq}, {"tower", data}}.dump(2) << '\n';
      else
        write_tower(out, seq, data);
    } else if (cohomology_cmd->parsed()) {
      if (w_text.empty() == partition_text.empty()) throw UsageError("give either w or --partition");
      if (!partition_text.empty()) {
        const PartitionPresentation p = partition_presentation(parse_int_list(partition_text));
        if (json) {
          out << Json{{"lambda", p.lambda},
                      {"w", p.w},
                      {"variables", p.variables},
                      {"generators", p.generators},
                      {"generators_text", [&] {
                         std::vector<std::string> t;
                         for (const auto& g : p.generators) t.push_back(g.to_string(p.variables));
                         return t;
                       }()}}
                     .dump(2)
              << '\n';
        } else {
          out << "w: " << p.w.to_string() << '\n';
          write_polynomials(out, "generators h_{l_i-i+1}(x_1..x_i)", p.generators, p.variables);
        }
      } else {
        const CohomologyPresentation c = cohomology_presentation(parse_permutation(w_text));
        if (json) {
          out << Json(c).dump(2) << '\n';
        } else {
          out << "I: " << sequence_text(c.sequence) << ", q = " << c.sequence.block << '\n';
          write_polynomials(out, "raw generators", c.raw, c.variables);
          write_polynomials(out, "relations", c.relations, c.variables);
          write_polynomials(out, "normalized generators", c.normalized, c.normalized_variables);
        }
      }
    } else if (verify_cmd->parsed()) {
      if (polytopes && no_polytopes) throw UsageError("--polytopes and --no-polytopes conflict");
      SweepOptions options;
      options.jobs = jobs;
      if (samples > 0) options.samples = samples;
      options.seed = seed;
      if (polytopes) options.include_polytopes = true;
      if (no_polytopes) options.include_polytopes = false;
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        names.push_back(suite);
      }
      bool all_ok = true;
      Json reports = Json::array();
      for (const auto& name : names) {
        if (name == "counting-bijection" && n > 6 && suite == "all") continue;
        const SuiteReport r = sweep(n, name, options);
        all_ok = all_ok && r.ok();
        if (json) {
          reports.push_back(r);
          continue;
        }
        out << (r.ok() ? "PASS " : "FAIL ") << r.suite << " n=" << r.n << " checked=" << r.checked
            << " failed=" << r.failed << '\n';
        for (const auto& [key, value] : r.summary) out << "  " << key << ": " << value << '\n';
        for (const auto& c : r.counterexamples) out << "  counterexample " << c.subject << ": " << c.detail << '\n';
      }
      if (json) out << (names.size() == 1 ? reports.front() : reports).dump(2) << '\n';
      return all_ok ? kSuccess : kVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace schubert::cli
