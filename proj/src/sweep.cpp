#include "schubert/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "schubert/classify.hpp"
#include "schubert/face_graph.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polytope.hpp"
#include "schubert/poset.hpp"
#include "schubert/tower.hpp"

namespace schubert {

namespace {

struct Outcome {
  bool applicable = true;
  bool ok = true;
  std::string subject;
  std::string detail;
};

// Runs fn(0..count-1) on `jobs` threads; outcomes come back in index order.
std::vector<Outcome> parallel_map(std::size_t count, int jobs, const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
        return;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

SuiteReport merge(const std::string& suite, int n, const std::vector<Outcome>& outcomes, std::size_t keep) {
  SuiteReport r;
  r.suite = suite;
  r.n = n;
  for (const auto& o : outcomes) {
    if (!o.applicable) continue;
    ++r.checked;
    if (o.ok) {
      ++r.passed;
    } else {
      ++r.failed;
      if (r.counterexamples.size() < keep) r.counterexamples.push_back({o.subject, o.detail});
    }
  }
  return r;
}

std::string join(const std::vector<Permutation>& ws) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += ' ';
    out += w.to_string();
  }
  return out;
}

std::string interval_name(const Permutation& v, const Permutation& w) {
  return "[" + v.to_string() + "," + w.to_string() + "]";
}

std::string bits(std::initializer_list<bool> values) {
  std::string out;
  for (bool b : values) out += b ? '1' : '0';
  return out;
}

const Permutation& pattern(const char* digits) {
  static std::mutex mutex;
  static std::map<std::string, Permutation> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(digits);
  if (it == cache.end()) it = cache.emplace(digits, parse_permutation(digits)).first;
  return it->second;
}

bool in_support(const Permutation& w, int r) {
  const auto s = support(w);
  return std::binary_search(s.begin(), s.end(), r);
}

struct Context {
  int n;
  const SweepOptions& options;
  int jobs;
  bool polytopes;
  std::mt19937_64 rng;
};

using PairList = std::vector<std::pair<Permutation, Permutation>>;

PairList comparable_pairs(int n) {
  PairList out;
  const auto& all = all_permutations(n);
  for (const auto& v : all)
    for (const auto& w : all)
      if (bruhat_leq(v, w)) out.emplace_back(v, w);
  return out;
}

// Exhaustive below `exhaustive_max`, otherwise a seeded sample.
template <typename T>
std::vector<T> exhaustive_or_sample(Context& ctx, std::vector<T> all, int exhaustive_max, int default_samples) {
  if (!ctx.options.samples && ctx.n <= exhaustive_max) return all;
  const std::size_t want = static_cast<std::size_t>(ctx.options.samples.value_or(default_samples));
  if (all.empty()) return all;
  std::vector<T> out;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (std::size_t i = 0; i < want; ++i) out.push_back(all[pick(ctx.rng)]);
  return out;
}

SuiteReport per_permutation(Context& ctx, const std::string& suite,
                            const std::function<Outcome(const Permutation&)>& fn) {
  const auto& all = all_permutations(ctx.n);
  const auto outcomes = parallel_map(all.size(), ctx.jobs, [&](std::size_t i) {
    Outcome o = fn(all[i]);
    if (o.subject.empty()) o.subject = all[i].to_string();
    return o;
  });
  return merge(suite, ctx.n, outcomes, ctx.options.max_counterexamples);
}

SuiteReport complexity_one_list(Context& ctx) {
  SuiteReport r = per_permutation(ctx, "complexity-one-list", [](const Permutation& w) {
    Outcome o;
    o.applicable = complexity(w) == 1;
    o.ok = pattern_profile(w).combined == 1;
    o.detail = "pattern count " + std::to_string(pattern_profile(w).combined);
    return o;
  });
  std::vector<Permutation> members, smooth, singular;
  for (const auto& w : all_permutations(ctx.n)) {
    if (complexity(w) != 1) continue;
    members.push_back(w);
    (is_smooth(w) ? smooth : singular).push_back(w);
  }
  r.summary["members"] = join(members);
  r.summary["smooth"] = join(smooth);
  r.summary["singular"] = join(singular);
  r.summary["count"] = std::to_string(members.size());
  return r;
}

SuiteReport theorem_suite(Context& ctx, const std::string& suite, Theorem theorem) {
  std::atomic<long long> all_true{0};
  SuiteReport r = per_permutation(ctx, suite, [&](const Permutation& w) {
    const TheoremConditions c = theorem_conditions(w, theorem, ctx.polytopes);
    if (c.agree() && c.items.front().second) ++all_true;
    return Outcome{true, c.agree(), "", c.describe()};
  });
  r.summary["all-true"] = std::to_string(all_true.load());
  r.summary["polytopes"] = ctx.polytopes ? "yes" : "no";
  return r;
}

SuiteReport toric_smooth(Context& ctx) {
  return per_permutation(ctx, "toric-smooth", [](const Permutation& w) {
    return Outcome{complexity(w) == 0, is_smooth(w), "", "complexity 0 but singular"};
  });
}

SuiteReport inverse_symmetry(Context& ctx) {
  SuiteReport r = per_permutation(ctx, "inverse-symmetry", [&](const Permutation& w) {
    const Permutation wi = w.inverse();
    const bool one = pattern_profile(w).combined == 1;
    const bool one_inv = pattern_profile(wi).combined == 1;
    const bool sm = is_smooth(w) && complexity(w) == 1;
    const bool sm_inv = is_smooth(wi) && complexity(wi) == 1;
    bool poly = true;
    if (ctx.polytopes && one) {
      const Permutation e = Permutation::identity(w.size());
      poly = combinatorially_equivalent(bruhat_interval_polytope(e, w), bruhat_interval_polytope(e, wi));
    }
    return Outcome{true, one == one_inv && sm == sm_inv && poly, "",
                   "pattern/smooth/polytope " + bits({one == one_inv, sm == sm_inv, poly})};
  });
  r.summary["polytopes"] = ctx.polytopes ? "yes" : "no";
  return r;
}

SuiteReport tenner(Context& ctx) {
  static const char* const ten[] = {"4321",  "34512", "45123", "35412", "43512",
                                    "45132", "45213", "53412", "45312", "45231"};
  return per_permutation(ctx, "tenner", [](const Permutation& w) {
    const int c = complexity(w);
    const PatternCount p = pattern_profile(w);
    bool avoids_ten = true;
    for (const char* t : ten) {
      const Permutation& pat = pattern(t);
      if (pat.size() <= w.size() && contains_pattern(w, pat)) avoids_ten = false;
    }
    const bool inequality = c <= p.combined;
    const bool equality = (c == p.combined) == avoids_ten;
    const bool smooth_case = !is_smooth(w) || ((c == p.count_321) == !contains_pattern(w, pattern("4321")));
    const bool low = ((p.combined == 0) == (c == 0)) && ((p.combined == 1) == (c == 1));
    return Outcome{true, inequality && equality && smooth_case && low, "",
                   "c=" + std::to_string(c) + " combined=" + std::to_string(p.combined) + " checks " +
                       bits({inequality, equality, smooth_case, low})};
  });
}

SuiteReport daly(Context& ctx) {
  return per_permutation(ctx, "daly", [](const Permutation& w) {
    const PatternCount p = pattern_profile(w);
    const bool f321 = find_single_repetition_factor(w, FactorKind::Braid321).has_value();
    const bool f3412 = find_single_repetition_factor(w, FactorKind::Braid3412).has_value();
    const bool ok = f321 == (p == PatternCount{1, 0, 1}) && f3412 == (p == PatternCount{0, 1, 1});
    return Outcome{true, ok, "", "factors " + bits({f321, f3412})};
  });
}

long long count_profile(int n, const PatternCount& target) {
  long long count = 0;
  for (const auto& w : all_permutations(n))
    if (pattern_profile(w) == target) ++count;
  return count;
}

SuiteReport counting_bijection(Context& ctx) {
  const long long smooth_n = count_profile(ctx.n, {1, 0, 1});
  const long long singular_next = count_profile(ctx.n + 1, {0, 1, 1});
  Outcome o{true, smooth_n == singular_next, "n=" + std::to_string(ctx.n),
            std::to_string(smooth_n) + " vs " + std::to_string(singular_next)};
  SuiteReport r = merge("counting-bijection", ctx.n, {o}, ctx.options.max_counterexamples);
  r.summary["profile-101-in-n"] = std::to_string(smooth_n);
  r.summary["profile-011-in-n+1"] = std::to_string(singular_next);
  return r;
}

std::vector<long long> power_times(std::vector<long long> base, int k) {
  for (int i = 0; i < k; ++i) base = convolve(base, {1, 1});
  return base;
}

SuiteReport rank_polynomial_suite(Context& ctx) {
  return per_permutation(ctx, "rank-polynomial", [](const Permutation& w) {
    Outcome o;
    o.applicable = complexity(w) == 1;
    if (!o.applicable) return o;
    const int l = length(w);
    const auto actual = rank_polynomial(interval(Permutation::identity(w.size()), w));
    const auto expected =
        is_smooth(w) ? power_times({1, 2, 2, 1}, l - 3) : power_times({1, 3, 5, 4, 1}, l - 4);
    o.ok = actual == expected;
    o.detail = is_smooth(w) ? "smooth" : "singular";
    return o;
  });
}

std::set<std::vector<Point>> geometric_faces(const LatticePolytope& p) {
  std::set<std::vector<Point>> out;
  for (const auto& face : face_lattice(p).faces) {
    std::vector<Point> pts;
    for (int i : face) pts.push_back(p.vertices[static_cast<std::size_t>(i)]);
    std::sort(pts.begin(), pts.end());
    out.insert(std::move(pts));
  }
  return out;
}

SuiteReport face_oracle(Context& ctx) {
  const auto pairs = exhaustive_or_sample(ctx, comparable_pairs(ctx.n), 4, 200);
  std::atomic<long long> collisions{0};
  const auto outcomes = parallel_map(pairs.size(), ctx.jobs, [&](std::size_t i) {
    const auto& [v, w] = pairs[i];
    std::set<std::vector<Point>> combinatorial;
    for (const auto& face : enumerate_faces(v, w)) {
      std::vector<Point> pts;
      for (const auto& u : face.members) pts.emplace_back(u.one_line().begin(), u.one_line().end());
      std::sort(pts.begin(), pts.end());
      if (!combinatorial.insert(std::move(pts)).second) ++collisions;
    }
    const auto geometric = geometric_faces(bruhat_interval_polytope(v, w));
    return Outcome{true, combinatorial == geometric, interval_name(v, w),
                   std::to_string(combinatorial.size()) + " combinatorial vs " + std::to_string(geometric.size()) +
                       " geometric faces"};
  });
  SuiteReport r = merge("face-oracle", ctx.n, outcomes, ctx.options.max_counterexamples);
  r.summary["vertex-set-collisions"] = std::to_string(collisions.load());
  return r;
}

struct LemmaTuple {
  Permutation u, v, w;
  int r;
};

std::vector<LemmaTuple> lemma_tuples(Context& ctx) {
  const auto& all = all_permutations(ctx.n);
  std::vector<Permutation> tops;
  for (const auto& w : all)
    if (static_cast<int>(support(w).size()) < ctx.n - 1) tops.push_back(w);
  auto missing = [&](const Permutation& w) {
    std::vector<int> out;
    for (int r = 1; r < ctx.n; ++r)
      if (!in_support(w, r)) out.push_back(r);
    return out;
  };
  std::vector<LemmaTuple> out;
  if (!ctx.options.samples && ctx.n <= 4) {
    for (const auto& w : tops) {
      const auto rs = missing(w);
      const BruhatInterval below(Permutation::identity(ctx.n), w);
      for (const auto& v : below.elements())
        for (const auto& u : below.elements())
          if (bruhat_leq(v, u))
            for (int r : rs) out.push_back({u, v, w, r});
    }
    return out;
  }
  // w uniform among tops, then v uniform in [e,w], u uniform in [v,w].
  const int want = ctx.options.samples.value_or(10000);
  std::map<Permutation, std::vector<Permutation>> below;
  for (int s = 0; s < want; ++s) {
    const auto& w = tops[std::uniform_int_distribution<std::size_t>(0, tops.size() - 1)(ctx.rng)];
    auto& lower = below[w];
    if (lower.empty())
      for (const auto& x : all)
        if (bruhat_leq(x, w)) lower.push_back(x);
    const auto& v = lower[std::uniform_int_distribution<std::size_t>(0, lower.size() - 1)(ctx.rng)];
    std::vector<Permutation> between;
    for (const auto& x : lower)
      if (bruhat_leq(v, x)) between.push_back(x);
    const auto& u = between[std::uniform_int_distribution<std::size_t>(0, between.size() - 1)(ctx.rng)];
    const auto rs = missing(w);
    const int r = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(ctx.rng)];
    out.push_back({u, v, w, r});
  }
  return out;
}

SuiteReport lemma(Context& ctx) {
  const auto tuples = lemma_tuples(ctx);
  const auto outcomes = parallel_map(tuples.size(), ctx.jobs, [&](std::size_t i) {
    const auto& t = tuples[i];
    const LemmaReport rep = check_lemma_identities(t.u, t.v, t.w, t.r);
    std::string flags;
    for (bool b : rep.holds) flags += b ? '1' : '0';
    return Outcome{true, rep.all(), "u=" + t.u.to_string() + " " + interval_name(t.v, t.w) + " r=" + std::to_string(t.r),
                   "parts " + flags};
  });
  return merge("lemma", ctx.n, outcomes, ctx.options.max_counterexamples);
}

SuiteReport product_prop(Context& ctx) {
  std::vector<LemmaTuple> all;  // u unused
  for (const auto& [v, w] : comparable_pairs(ctx.n))
    for (int r = 1; r < ctx.n; ++r)
      if (!in_support(w, r)) all.push_back({v, v, w, r});
  const auto cases = exhaustive_or_sample(ctx, std::move(all), 4, 200);
  const LatticePolytope unit = segment();
  const auto outcomes = parallel_map(cases.size(), ctx.jobs, [&](std::size_t i) {
    const auto& c = cases[i];
    const Permutation sr = Permutation::simple(ctx.n, c.r);
    const LatticePolytope target = product_polytope(bruhat_interval_polytope(c.v, c.w), unit);
    const bool right = combinatorially_equivalent(bruhat_interval_polytope(c.v, compose(c.w, sr)), target);
    const bool left = combinatorially_equivalent(bruhat_interval_polytope(c.v, compose(sr, c.w)), target);
    return Outcome{true, right && left, interval_name(c.v, c.w) + " r=" + std::to_string(c.r),
                   "w*s_r/s_r*w " + bits({right, left})};
  });
  return merge("product-prop", ctx.n, outcomes, ctx.options.max_counterexamples);
}

bool euler_holds(const std::vector<long long>& f) {
  long long sum = 0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += (k % 2 == 0 ? 1 : -1) * f[k];
  return sum == 1;
}

SuiteReport dimension(Context& ctx) {
  return per_permutation(ctx, "dimension", [](const Permutation& w) {
    const int n = w.size();
    const Permutation e = Permutation::identity(n);
    const LatticePolytope q = bruhat_interval_polytope(e, w);
    const LatticePolytope q_inv = bruhat_interval_polytope(e, w.inverse());
    const bool dim_ok = q.dim == static_cast<int>(support(w).size());
    const bool complexity_ok = complexity(w) == length(w) - q_inv.dim;
    const bool vertices_ok =
        q.non_vertices.empty() && static_cast<int>(q.vertices.size()) == interval(e, w).size();
    const Integer total = static_cast<Integer>(n) * (n + 1) / 2;
    bool plane_ok = true;
    for (const auto& p : q.vertices) {
      Integer s = 0;
      for (Integer x : p) s += x;
      plane_ok = plane_ok && s == total;
    }
    const bool euler_ok = euler_holds(f_vector(q));
    return Outcome{true, dim_ok && complexity_ok && vertices_ok && plane_ok && euler_ok, "",
                   "dim/complexity/vertices/plane/euler " +
                       bits({dim_ok, complexity_ok, vertices_ok, plane_ok, euler_ok})};
  });
}

SuiteReport bip_vertices_suite(Context& ctx) {
  const auto pairs = exhaustive_or_sample(ctx, comparable_pairs(ctx.n), 4, 200);
  const auto outcomes = parallel_map(pairs.size(), ctx.jobs, [&](std::size_t i) {
    const auto& [v, w] = pairs[i];
    const LatticePolytope q = bruhat_interval_polytope(v, w);
    return Outcome{true, q.non_vertices.empty(), interval_name(v, w),
                   std::to_string(q.non_vertices.size()) + " interval points are not vertices"};
  });
  return merge("bip-vertices", ctx.n, outcomes, ctx.options.max_counterexamples);
}

SuiteReport bruhat_suite(Context& ctx) {
  const auto& all = all_permutations(ctx.n);
  return per_permutation(ctx, "bruhat", [&](const Permutation& a) {
    const BruhatInterval lower(Permutation::identity(ctx.n), a);
    long long atoms = 0;
    for (int r : lower.rank()) atoms += r == 1 ? 1 : 0;
    const bool atoms_ok = atoms == static_cast<long long>(support(a).size());
    bool equiv_ok = true;
    std::string where;
    for (int r = 1; r < ctx.n && equiv_ok; ++r) {
      if (in_support(a, r)) continue;
      const Permutation sr = Permutation::simple(ctx.n, r);
      for (const auto& b : all) {
        if (in_support(b, r)) continue;
        const bool base = bruhat_leq(a, b);
        if (base != bruhat_leq(compose(sr, a), compose(sr, b)) || base != bruhat_leq(compose(a, sr), compose(b, sr))) {
          equiv_ok = false;
          where = " b=" + b.to_string() + " r=" + std::to_string(r);
          break;
        }
      }
    }
    return Outcome{true, atoms_ok && equiv_ok, "", "atoms/equiv " + bits({atoms_ok, equiv_ok}) + where};
  });
}

SuiteReport bott_suite(Context& ctx) {
  return per_permutation(ctx, "bott", [](const Permutation& w) {
    bool ok = true;
    for (const auto& word : reduced_words(w)) {
      const BottMatrix m = bott_matrix(word);
      std::set<int> letters(word.letters.begin(), word.letters.end());
      const bool distinct = letters.size() == word.size();
      for (int j = 1; j <= m.size(); ++j)
        for (int k = j + 1; k <= m.size(); ++k) {
          const int a = m.at(j, k);
          ok = ok && (a == 2 || a == -1 || a == 0) && (!distinct || a != 2);
        }
    }
    return Outcome{true, ok, "", "entry outside the allowed range"};
  });
}

SuiteReport tower_suite(Context& ctx) {
  return per_permutation(ctx, "tower", [](const Permutation& w) {
    Outcome o;
    o.applicable = complexity(w) == 1;
    if (!o.applicable) return o;
    const IntervalSequence seq = interval_sequence(w);
    std::set<int> seen;
    bool disjoint = true;
    for (const auto& s : seq.sets)
      for (int i : s) disjoint = disjoint && seen.insert(i).second;
    Permutation product = Permutation::identity(w.size());
    int total = 0;
    for (const auto& f : seq.factors) {
      product = compose(product, f);
      total += length(f);
    }
    const bool reconstructs = product == w && total == length(w);
    const bool shape = seq.smooth() == is_smooth(w) &&
                       static_cast<int>(seq.sets.size()) == length(w) - (seq.smooth() ? 2 : 3);
    bool vectors_ok = true;
    for (const auto& vec : flag_tower_vectors(seq).vectors)
      for (int x : vec.values) vectors_ok = vectors_ok && x >= -1 && x <= 2;
    o.ok = disjoint && reconstructs && shape && seq.product_matches && vectors_ok;
    o.detail = "disjoint/product/shape/poset/vectors " +
               bits({disjoint, reconstructs, shape, seq.product_matches, vectors_ok});
    return o;
  });
}

using SuiteFn = std::function<SuiteReport(Context&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"complexity-one-list", complexity_one_list},
      {"theorem-1", [](Context& c) { return theorem_suite(c, "theorem-1", Theorem::ComplexityZero); }},
      {"theorem-smooth", [](Context& c) { return theorem_suite(c, "theorem-smooth", Theorem::SmoothOne); }},
      {"theorem-singular", [](Context& c) { return theorem_suite(c, "theorem-singular", Theorem::SingularOne); }},
      {"toric-smooth", toric_smooth},
      {"inverse-symmetry", inverse_symmetry},
      {"tenner", tenner},
      {"daly", daly},
      {"counting-bijection", counting_bijection},
      {"rank-polynomial", rank_polynomial_suite},
      {"face-oracle", face_oracle},
      {"lemma", lemma},
      {"product-prop", product_prop},
      {"dimension", dimension},
      {"bip-vertices", bip_vertices_suite},
      {"bruhat", bruhat_suite},
      {"bott", bott_suite},
      {"tower", tower_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

int resolve_jobs(const SweepOptions& options) {
  if (options.jobs > 0) return options.jobs;
  if (const char* env = std::getenv("SCHUBERT_JOBS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

SuiteReport sweep(int n, const std::string& suite, const SweepOptions& options) {
  if (n < 2 || n > 7) throw std::invalid_argument("sweep: n must lie in 2..7");
  const auto& table = suites();
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& entry) { return entry.first == suite; });
  if (it == table.end()) throw std::invalid_argument("sweep: unknown suite '" + suite + "'");
  if (suite == "counting-bijection" && n > 6) throw std::invalid_argument("sweep: counting-bijection needs n <= 6");
  Context ctx{n, options, resolve_jobs(options), options.include_polytopes.value_or(n <= 5),
              std::mt19937_64(options.seed)};
  // Warm the shared permutation list before any worker touches it.
  all_permutations(n);
  SuiteReport r = it->second(ctx);
  return r;
}

}  // namespace schubert
